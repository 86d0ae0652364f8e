#include "crossmin/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <ostream>

namespace crossmin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDualTol = 1e-9;   // reduced-cost feasibility
constexpr double kPivotTol = 1e-9;  // smallest usable pivot element
constexpr double kZeroTol = 1e-11;

bool finite_all(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

BoundedSimplex::BoundedSimplex(int num_vars, std::vector<double> costs, const Config& cfg)
    : n_(num_vars), cost_(std::move(costs)), cfg_(&cfg) {
    assert(static_cast<int>(cost_.size()) == n_);
    lb_.assign(static_cast<std::size_t>(n_), 0.0);
    ub_.assign(static_cast<std::size_t>(n_), 1.0);
    cols_.resize(static_cast<std::size_t>(n_));
}

double BoundedSimplex::var_ub(int v) const {
    return v < n_ ? ub_[static_cast<std::size_t>(v)] : kInf;
}

void BoundedSimplex::set_bounds(int var, double lb, double ub) {
    assert(var >= 0 && var < n_);
    assert(lb <= ub + 1e-12);
    lb_[static_cast<std::size_t>(var)] = lb;
    ub_[static_cast<std::size_t>(var)] = ub;
}

void BoundedSimplex::rebuild_columns() {
    for (auto& col : cols_) col.clear();
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
        for (const auto& [v, coef] : rows_[static_cast<std::size_t>(r)].coefs) {
            cols_[static_cast<std::size_t>(v)].emplace_back(r, coef);
        }
    }
}

void BoundedSimplex::add_rows(std::vector<LpRow> rows) {
    if (rows.empty()) return;
    const int m_old = static_cast<int>(rows_.size());
    const int k = static_cast<int>(rows.size());
    for (auto& row : rows) {
        for (auto& [v, coef] : row.coefs) {
            assert(v >= 0 && v < n_);
            cols_[static_cast<std::size_t>(v)].emplace_back(static_cast<int>(rows_.size()), coef);
        }
        rows_.push_back(std::move(row));
    }
    if (!initialized_ || needs_restart_) return;

    // Extend the basis with the new slacks. With B' = [[B, 0], [C, I]] the
    // inverse is [[Binv, 0], [-C Binv, I]]; C holds the new rows' coefficients
    // on the old basic columns (zero for old slacks).
    Eigen::MatrixXd c_block = Eigen::MatrixXd::Zero(k, m_old);
    std::vector<int> pos_of(static_cast<std::size_t>(total_vars()), -1);
    for (int p = 0; p < m_old; ++p) pos_of[static_cast<std::size_t>(basic_[static_cast<std::size_t>(p)])] = p;
    for (int t = 0; t < k; ++t) {
        const auto& row = rows_[static_cast<std::size_t>(m_old + t)];
        for (const auto& [v, coef] : row.coefs) {
            const int p = pos_of[static_cast<std::size_t>(v)];
            if (p >= 0) c_block(t, p) = coef;
        }
    }
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(m_old + k, m_old + k);
    next.topLeftCorner(m_old, m_old) = binv_;
    next.bottomLeftCorner(k, m_old) = -c_block * binv_;
    next.bottomRightCorner(k, k).setIdentity();
    binv_ = std::move(next);
    for (int t = 0; t < k; ++t) {
        basic_.push_back(n_ + m_old + t);
        state_.push_back(VarState::Basic);
    }
    x_.resize(static_cast<std::size_t>(total_vars()), 0.0);
}

int BoundedSimplex::delete_rows(const std::function<bool(const LpRow&)>& pred) {
    const int m_old = static_cast<int>(rows_.size());
    std::vector<char> drop(static_cast<std::size_t>(m_old), 0);
    int count = 0;
    for (int r = 0; r < m_old; ++r) {
        if (pred(rows_[static_cast<std::size_t>(r)])) {
            drop[static_cast<std::size_t>(r)] = 1;
            ++count;
        }
    }
    if (count == 0) return 0;

    bool clean = initialized_ && !needs_restart_;
    if (clean) {
        for (int r = 0; r < m_old; ++r) {
            if (drop[static_cast<std::size_t>(r)] &&
                state_[static_cast<std::size_t>(n_ + r)] != VarState::Basic) {
                clean = false;
                break;
            }
        }
    }

    std::vector<int> remap(static_cast<std::size_t>(m_old), -1);
    {
        std::vector<LpRow> kept;
        kept.reserve(static_cast<std::size_t>(m_old - count));
        for (int r = 0; r < m_old; ++r) {
            if (!drop[static_cast<std::size_t>(r)]) {
                remap[static_cast<std::size_t>(r)] = static_cast<int>(kept.size());
                kept.push_back(std::move(rows_[static_cast<std::size_t>(r)]));
            }
        }
        rows_ = std::move(kept);
    }
    rebuild_columns();

    if (!initialized_) return count;
    if (!clean) {
        needs_restart_ = true;
        return count;
    }

    // Dropping a row together with its basic slack keeps the remaining basis
    // nonsingular, so shrink the bookkeeping and refactor.
    std::vector<int> new_basic;
    new_basic.reserve(rows_.size());
    for (int v : basic_) {
        if (v < n_) {
            new_basic.push_back(v);
        } else if (remap[static_cast<std::size_t>(v - n_)] >= 0) {
            new_basic.push_back(n_ + remap[static_cast<std::size_t>(v - n_)]);
        }
    }
    basic_ = std::move(new_basic);
    assert(basic_.size() == rows_.size());
    std::vector<VarState> new_state(static_cast<std::size_t>(total_vars()), VarState::AtLower);
    for (int v = 0; v < n_; ++v) new_state[static_cast<std::size_t>(v)] = state_[static_cast<std::size_t>(v)];
    for (int r = 0; r < m_old; ++r) {
        const int nr = remap[static_cast<std::size_t>(r)];
        if (nr >= 0) new_state[static_cast<std::size_t>(n_ + nr)] = state_[static_cast<std::size_t>(n_ + r)];
    }
    state_ = std::move(new_state);
    for (int v : basic_) state_[static_cast<std::size_t>(v)] = VarState::Basic;
    x_.assign(static_cast<std::size_t>(total_vars()), 0.0);
    try {
        refactor();
    } catch (const NumericalError&) {
        needs_restart_ = true;
    }
    return count;
}

void BoundedSimplex::init_slack_basis() {
    const int m = static_cast<int>(rows_.size());
    basic_.resize(static_cast<std::size_t>(m));
    state_.assign(static_cast<std::size_t>(total_vars()), VarState::AtLower);
    for (int v = 0; v < n_; ++v) {
        // Dual-feasible start: y = 0, so the reduced cost of v is cost_[v].
        if (cost_[static_cast<std::size_t>(v)] < 0.0 &&
            ub_[static_cast<std::size_t>(v)] > lb_[static_cast<std::size_t>(v)]) {
            state_[static_cast<std::size_t>(v)] = VarState::AtUpper;
        }
    }
    for (int r = 0; r < m; ++r) {
        basic_[static_cast<std::size_t>(r)] = n_ + r;
        state_[static_cast<std::size_t>(n_ + r)] = VarState::Basic;
    }
    binv_ = Eigen::MatrixXd::Identity(m, m);
    initialized_ = true;
    needs_restart_ = false;
    pivots_since_ = 0;
    compute_x();
}

void BoundedSimplex::compute_x() {
    const int m = static_cast<int>(rows_.size());
    x_.assign(static_cast<std::size_t>(total_vars()), 0.0);
    for (int v = 0; v < total_vars(); ++v) {
        if (state_[static_cast<std::size_t>(v)] == VarState::Basic) continue;
        assert(v < n_ || state_[static_cast<std::size_t>(v)] == VarState::AtLower);
        x_[static_cast<std::size_t>(v)] =
            state_[static_cast<std::size_t>(v)] == VarState::AtLower ? var_lb(v) : var_ub(v);
    }
    Eigen::VectorXd rhs(m);
    for (int r = 0; r < m; ++r) rhs[r] = rows_[static_cast<std::size_t>(r)].rhs;
    for (int v = 0; v < n_; ++v) {
        if (state_[static_cast<std::size_t>(v)] == VarState::Basic) continue;
        const double xv = x_[static_cast<std::size_t>(v)];
        if (xv == 0.0) continue;
        for (const auto& [r, coef] : cols_[static_cast<std::size_t>(v)]) rhs[r] -= coef * xv;
    }
    Eigen::VectorXd xb = binv_ * rhs;
    if (!finite_all(xb)) throw NumericalError("basic solution not finite");
    for (int p = 0; p < m; ++p) x_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(p)])] = xb[p];
    obj_ = 0.0;
    for (int v = 0; v < n_; ++v) obj_ += cost_[static_cast<std::size_t>(v)] * x_[static_cast<std::size_t>(v)];
}

void BoundedSimplex::compute_duals(Eigen::VectorXd& y) const {
    const int m = static_cast<int>(rows_.size());
    Eigen::VectorXd cb(m);
    for (int p = 0; p < m; ++p) cb[p] = var_cost(basic_[static_cast<std::size_t>(p)]);
    y = binv_.transpose() * cb;
}

double BoundedSimplex::reduced_cost(int v, const Eigen::VectorXd& y) const {
    if (v >= n_) return -y[v - n_];
    double d = cost_[static_cast<std::size_t>(v)];
    for (const auto& [r, coef] : cols_[static_cast<std::size_t>(v)]) d -= y[r] * coef;
    return d;
}

Eigen::VectorXd BoundedSimplex::ftran(int v) const {
    const int m = static_cast<int>(rows_.size());
    Eigen::VectorXd a = Eigen::VectorXd::Zero(m);
    if (v >= n_) {
        a[v - n_] = 1.0;
    } else {
        for (const auto& [r, coef] : cols_[static_cast<std::size_t>(v)]) a[r] = coef;
    }
    return binv_ * a;
}

void BoundedSimplex::apply_eta(int r, const Eigen::VectorXd& w) {
    const double piv = w[r];
    if (std::abs(piv) < kZeroTol) throw NumericalError("pivot element vanished");
    binv_.row(r) /= piv;
    for (int i = 0; i < binv_.rows(); ++i) {
        if (i == r) continue;
        const double wi = w[i];
        if (wi != 0.0) binv_.row(i) -= wi * binv_.row(r);
    }
}

void BoundedSimplex::check_refactor() {
    if (pivots_since_ >= cfg_->refactor_interval) refactor();
}

void BoundedSimplex::refactor() {
    const int m = static_cast<int>(rows_.size());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    for (int p = 0; p < m; ++p) {
        const int v = basic_[static_cast<std::size_t>(p)];
        if (v >= n_) {
            b(v - n_, p) = 1.0;
        } else {
            for (const auto& [r, coef] : cols_[static_cast<std::size_t>(v)]) b(r, p) = coef;
        }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
    binv_ = lu.inverse();
    if (m > 0) {
        if (!binv_.allFinite()) throw NumericalError("singular basis");
        // Spot-check a few columns of B * Binv against the identity.
        const int samples = std::min(m, 4);
        for (int s = 0; s < samples; ++s) {
            const int c = (s * (m - 1)) / std::max(1, samples - 1);
            Eigen::VectorXd res = b * binv_.col(c);
            res[c] -= 1.0;
            if (res.cwiseAbs().maxCoeff() > 1e-6) throw NumericalError("basis inverse drifted");
        }
    }
    pivots_since_ = 0;
    ++refactors_;
    compute_x();
}

void BoundedSimplex::snap_nonbasic() {
    // Fixed vars always report AtLower so bound flips skip them.
    for (int v = 0; v < n_; ++v) {
        if (state_[static_cast<std::size_t>(v)] == VarState::Basic) continue;
        if (ub_[static_cast<std::size_t>(v)] - lb_[static_cast<std::size_t>(v)] < kZeroTol) {
            state_[static_cast<std::size_t>(v)] = VarState::AtLower;
        }
    }
}

void BoundedSimplex::make_dual_feasible() {
    Eigen::VectorXd y;
    compute_duals(y);
    bool repairable = true;
    for (int v = 0; v < total_vars(); ++v) {
        const VarState st = state_[static_cast<std::size_t>(v)];
        if (st == VarState::Basic) continue;
        const double d = reduced_cost(v, y);
        if (v >= n_) {
            // A nonbasic slack with negative reduced cost has no upper bound
            // to flip to; only a fresh slack basis fixes that.
            if (d < -kDualTol) repairable = false;
            continue;
        }
        if (ub_[static_cast<std::size_t>(v)] - lb_[static_cast<std::size_t>(v)] < kZeroTol) continue;
        if (st == VarState::AtLower && d < -kDualTol) {
            state_[static_cast<std::size_t>(v)] = VarState::AtUpper;
        } else if (st == VarState::AtUpper && d > kDualTol) {
            state_[static_cast<std::size_t>(v)] = VarState::AtLower;
        }
    }
    if (!repairable) {
        init_slack_basis();
        return;
    }
    compute_x();
}

bool BoundedSimplex::primal_feasible() const {
    for (int v = 0; v < total_vars(); ++v) {
        const double xv = x_[static_cast<std::size_t>(v)];
        if (xv < var_lb(v) - cfg_->eps_feas || xv > var_ub(v) + cfg_->eps_feas) return false;
    }
    return true;
}

LpStatus BoundedSimplex::solve() { return solve_from(/*prefer_primal=*/true); }

LpStatus BoundedSimplex::solve_from(bool prefer_primal) {
    for (int attempt = 0;; ++attempt) {
        try {
            if (!initialized_ || needs_restart_) {
                init_slack_basis();
            } else {
                snap_nonbasic();
                compute_x();
            }
            if (prefer_primal && primal_feasible()) return primal_loop();
            make_dual_feasible();
            return dual_loop();
        } catch (const NumericalError&) {
            if (attempt >= 1) throw;
            initialized_ = false;  // retry once from a clean slack basis
        }
    }
}

LpStatus BoundedSimplex::primal_loop() {
    const int m = static_cast<int>(rows_.size());
    const std::int64_t max_iters = 50000 + 200LL * total_vars();
    std::int64_t iters = 0;
    std::int64_t stalled = 0;
    bool bland = false;
    double last_obj = obj_;
    Eigen::VectorXd y;

    for (;;) {
        if (++iters > max_iters) throw NumericalError("primal iteration limit");
        compute_duals(y);

        int enter = -1;
        double best_score = kDualTol;
        for (int v = 0; v < total_vars(); ++v) {
            const VarState st = state_[static_cast<std::size_t>(v)];
            if (st == VarState::Basic) continue;
            if (v < n_ && ub_[static_cast<std::size_t>(v)] - lb_[static_cast<std::size_t>(v)] < kZeroTol)
                continue;
            const double d = reduced_cost(v, y);
            const double score = st == VarState::AtLower ? -d : d;
            if (score > best_score) {
                best_score = score;
                enter = v;
                if (bland) break;  // first eligible index wins
            }
        }
        if (enter < 0) return LpStatus::Optimal;

        const int dir = state_[static_cast<std::size_t>(enter)] == VarState::AtLower ? 1 : -1;
        Eigen::VectorXd w = ftran(enter);

        // Ratio test: how far can the entering var move before a basic var
        // hits a bound, or it reaches its own opposite bound?
        double t_limit = enter < n_ ? ub_[static_cast<std::size_t>(enter)] -
                                          lb_[static_cast<std::size_t>(enter)]
                                    : kInf;
        int leave_pos = -1;
        double leave_piv = 0.0;
        bool leave_to_upper = false;
        for (int p = 0; p < m; ++p) {
            const double rate = -dir * w[p];  // d x_B[p] / dt
            if (std::abs(rate) <= kPivotTol) continue;
            const int bv = basic_[static_cast<std::size_t>(p)];
            double t_here;
            bool to_upper;
            if (rate < 0.0) {
                t_here = (x_[static_cast<std::size_t>(bv)] - var_lb(bv)) / -rate;
                to_upper = false;
            } else {
                const double ub = var_ub(bv);
                if (ub == kInf) continue;
                t_here = (ub - x_[static_cast<std::size_t>(bv)]) / rate;
                to_upper = true;
            }
            t_here = std::max(t_here, 0.0);
            if (t_here < t_limit - 1e-12) {
                t_limit = t_here;
                leave_pos = p;
                leave_piv = w[p];
                leave_to_upper = to_upper;
            } else if (leave_pos >= 0 && t_here <= t_limit + 1e-12) {
                // Tie: prefer the numerically larger pivot, or the smallest
                // basic var id under Bland's rule.
                const bool take = bland
                                      ? bv < basic_[static_cast<std::size_t>(leave_pos)]
                                      : std::abs(w[p]) > std::abs(leave_piv);
                if (take) {
                    leave_pos = p;
                    leave_piv = w[p];
                    leave_to_upper = to_upper;
                }
            }
        }
        if (t_limit == kInf) throw NumericalError("primal unbounded direction");

        if (leave_pos < 0) {
            // Bound flip: the entering var runs to its other bound.
            state_[static_cast<std::size_t>(enter)] =
                dir > 0 ? VarState::AtUpper : VarState::AtLower;
            for (int p = 0; p < m; ++p) {
                const int bv = basic_[static_cast<std::size_t>(p)];
                x_[static_cast<std::size_t>(bv)] -= dir * t_limit * w[p];
            }
            x_[static_cast<std::size_t>(enter)] =
                dir > 0 ? ub_[static_cast<std::size_t>(enter)] : lb_[static_cast<std::size_t>(enter)];
        } else {
            const int leave = basic_[static_cast<std::size_t>(leave_pos)];
            x_[static_cast<std::size_t>(enter)] += dir * t_limit;
            for (int p = 0; p < m; ++p) {
                const int bv = basic_[static_cast<std::size_t>(p)];
                x_[static_cast<std::size_t>(bv)] -= dir * t_limit * w[p];
            }
            x_[static_cast<std::size_t>(leave)] = leave_to_upper ? var_ub(leave) : var_lb(leave);
            state_[static_cast<std::size_t>(leave)] =
                leave_to_upper ? VarState::AtUpper : VarState::AtLower;
            state_[static_cast<std::size_t>(enter)] = VarState::Basic;
            basic_[static_cast<std::size_t>(leave_pos)] = enter;
            apply_eta(leave_pos, w);
            ++pivots_total_;
            ++pivots_since_;
            check_refactor();
        }

        obj_ = 0.0;
        for (int v = 0; v < n_; ++v)
            obj_ += cost_[static_cast<std::size_t>(v)] * x_[static_cast<std::size_t>(v)];
        if (obj_ < last_obj - 1e-10 * (1.0 + std::abs(last_obj))) {
            stalled = 0;
        } else if (++stalled > cfg_->bland_threshold) {
            bland = true;
        }
        last_obj = obj_;
    }
}

LpStatus BoundedSimplex::dual_loop() {
    const int m = static_cast<int>(rows_.size());
    const std::int64_t max_iters = 50000 + 200LL * total_vars();
    std::int64_t iters = 0;
    std::int64_t stalled = 0;
    bool bland = false;
    double last_obj = obj_;
    Eigen::VectorXd y;

    for (;;) {
        if (++iters > max_iters) throw NumericalError("dual iteration limit");

        // Leaving variable: the basic var most outside its box.
        int leave_pos = -1;
        double worst = cfg_->eps_feas;
        bool below = false;
        for (int p = 0; p < m; ++p) {
            const int bv = basic_[static_cast<std::size_t>(p)];
            const double xv = x_[static_cast<std::size_t>(bv)];
            const double lo = var_lb(bv), hi = var_ub(bv);
            double viol = 0.0;
            bool is_below = false;
            if (xv < lo - cfg_->eps_feas) {
                viol = lo - xv;
                is_below = true;
            } else if (xv > hi + cfg_->eps_feas) {
                viol = xv - hi;
            } else {
                continue;
            }
            if (bland) {
                if (leave_pos < 0 || bv < basic_[static_cast<std::size_t>(leave_pos)]) {
                    leave_pos = p;
                    below = is_below;
                }
            } else if (viol > worst) {
                worst = viol;
                leave_pos = p;
                below = is_below;
            }
        }
        if (leave_pos < 0) return LpStatus::Optimal;

        const int leave = basic_[static_cast<std::size_t>(leave_pos)];
        const double delta =
            below ? var_lb(leave) - x_[static_cast<std::size_t>(leave)]
                  : var_ub(leave) - x_[static_cast<std::size_t>(leave)];
        const Eigen::VectorXd rho = binv_.row(leave_pos);
        compute_duals(y);

        // Entering variable: dual ratio test over admissible nonbasic vars.
        int enter = -1;
        double best_ratio = kInf;
        double alpha_enter = 0.0;
        for (int v = 0; v < total_vars(); ++v) {
            const VarState st = state_[static_cast<std::size_t>(v)];
            if (st == VarState::Basic) continue;
            if (v < n_ && ub_[static_cast<std::size_t>(v)] - lb_[static_cast<std::size_t>(v)] < kZeroTol)
                continue;
            double alpha;
            if (v >= n_) {
                alpha = rho[v - n_];
            } else {
                alpha = 0.0;
                for (const auto& [r, coef] : cols_[static_cast<std::size_t>(v)])
                    alpha += rho[r] * coef;
            }
            if (std::abs(alpha) <= kPivotTol) continue;
            const bool admissible = below ? (st == VarState::AtLower ? alpha < 0.0 : alpha > 0.0)
                                          : (st == VarState::AtLower ? alpha > 0.0 : alpha < 0.0);
            if (!admissible) continue;
            const double d = reduced_cost(v, y);
            const double dmag = st == VarState::AtLower ? std::max(d, 0.0) : std::max(-d, 0.0);
            const double ratio = dmag / std::abs(alpha);
            const bool take =
                bland ? (enter < 0 || (ratio < best_ratio - 1e-12) ||
                         (ratio <= best_ratio + 1e-12 && v < enter))
                      : (ratio < best_ratio - 1e-12 ||
                         (enter >= 0 && ratio <= best_ratio + 1e-12 &&
                          std::abs(alpha) > std::abs(alpha_enter)));
            if (enter < 0 || take) {
                best_ratio = ratio;
                enter = v;
                alpha_enter = alpha;
            }
        }
        if (enter < 0) return LpStatus::Infeasible;

        const int dir = state_[static_cast<std::size_t>(enter)] == VarState::AtLower ? 1 : -1;
        Eigen::VectorXd w = ftran(enter);
        const double t = delta / (-dir * w[leave_pos]);
        if (!std::isfinite(t) || t < -1e-9) throw NumericalError("dual step broke down");

        x_[static_cast<std::size_t>(enter)] += dir * t;
        for (int p = 0; p < m; ++p) {
            const int bv = basic_[static_cast<std::size_t>(p)];
            x_[static_cast<std::size_t>(bv)] -= dir * t * w[p];
        }
        x_[static_cast<std::size_t>(leave)] = below ? var_lb(leave) : var_ub(leave);
        state_[static_cast<std::size_t>(leave)] = below ? VarState::AtLower : VarState::AtUpper;
        state_[static_cast<std::size_t>(enter)] = VarState::Basic;
        basic_[static_cast<std::size_t>(leave_pos)] = enter;
        apply_eta(leave_pos, w);
        ++pivots_total_;
        ++pivots_since_;
        check_refactor();

        obj_ = 0.0;
        for (int v = 0; v < n_; ++v)
            obj_ += cost_[static_cast<std::size_t>(v)] * x_[static_cast<std::size_t>(v)];
        if (obj_ > last_obj + 1e-10 * (1.0 + std::abs(last_obj))) {
            stalled = 0;  // dual objective climbs toward the optimum
        } else if (++stalled > cfg_->bland_threshold) {
            bland = true;
        }
        last_obj = obj_;
    }
}

Eigen::VectorXd BoundedSimplex::solution() const {
    Eigen::VectorXd out(n_);
    for (int v = 0; v < n_; ++v) out[v] = x_[static_cast<std::size_t>(v)];
    return out;
}

double BoundedSimplex::row_slack(int r) const {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    double lhs = 0.0;
    for (const auto& [v, coef] : row.coefs) lhs += coef * x_[static_cast<std::size_t>(v)];
    return row.rhs - lhs;
}

void BoundedSimplex::age_rows() {
    for (int r = 0; r < num_rows(); ++r) {
        auto& row = rows_[static_cast<std::size_t>(r)];
        if (row_slack(r) > cfg_->eps_feas) {
            ++row.age;
        } else {
            row.age = 0;
        }
    }
}

void BoundedSimplex::dump(std::ostream& os, const std::string& name) const {
    os << "\\ " << name << "\n";
    os << "Minimize\n obj:";
    bool any = false;
    for (int v = 0; v < n_; ++v) {
        const double c = cost_[static_cast<std::size_t>(v)];
        if (c == 0.0) continue;
        os << (c < 0 ? " - " : (any ? " + " : " ")) << std::abs(c) << " x" << v;
        any = true;
    }
    if (!any) os << " 0 x0";
    os << "\nSubject To\n";
    for (int r = 0; r < num_rows(); ++r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        os << " c" << r << ":";
        bool first = true;
        for (const auto& [v, coef] : row.coefs) {
            os << (coef < 0 ? " - " : (first ? " " : " + ")) << std::abs(coef) << " x" << v;
            first = false;
        }
        os << " <= " << row.rhs << "\n";
    }
    os << "Bounds\n";
    for (int v = 0; v < n_; ++v) {
        const double lo = lb_[static_cast<std::size_t>(v)], hi = ub_[static_cast<std::size_t>(v)];
        if (lo == hi) {
            os << " x" << v << " = " << lo << "\n";
        } else {
            os << " " << lo << " <= x" << v << " <= " << hi << "\n";
        }
    }
    os << "End\n";
}

}  // namespace crossmin
