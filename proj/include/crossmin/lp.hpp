#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "crossmin/config.hpp"

namespace crossmin {

/// Thrown when the simplex loses numerical footing beyond repair.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One <= constraint over structural variables. Coefficients are sparse
/// (var, coef) pairs; vars appear at most once.
struct LpRow {
    std::vector<std::pair<int, double>> coefs;
    double rhs = 0.0;
    int age = 0;            ///< consecutive solves with positive slack
    std::uint64_t tag = 0;  ///< caller-side identity (dedup / observers)
};

enum class LpStatus { Optimal, Infeasible };

/// Bounded-variable revised simplex over an explicit dense basis inverse.
/// Structural variables carry box bounds; every row gets a slack in [0, inf).
/// Designed for the cut loop: rows come and go, bounds flip during branching,
/// and resolves start from the previous basis via the dual simplex.
class BoundedSimplex {
  public:
    BoundedSimplex(int num_vars, std::vector<double> costs, const Config& cfg);

    /// Resets the variable's box. Takes effect at the next solve; the basis is
    /// kept and repaired dually.
    void set_bounds(int var, double lb, double ub);
    double lower_bound(int var) const { return lb_[static_cast<std::size_t>(var)]; }
    double upper_bound(int var) const { return ub_[static_cast<std::size_t>(var)]; }

    /// Appends rows. Their slacks enter the basis directly, so no refactor is
    /// needed and dual feasibility is preserved.
    void add_rows(std::vector<LpRow> rows);

    /// Drops every row matching `pred`. If all dropped rows have basic slacks
    /// (true for nonbinding rows) the basis shrinks in place; otherwise the
    /// next solve restarts from the slack basis.
    int delete_rows(const std::function<bool(const LpRow&)>& pred);

    /// Full solve: primal simplex if the current point is primal feasible,
    /// dual otherwise. First call starts from the dual-feasible slack basis.
    LpStatus solve();

    /// Dual-simplex resolve after bound changes or row edits.
    LpStatus resolve_dual() { return solve_from(/*prefer_primal=*/false); }

    double objective() const { return obj_; }
    double value(int var) const { return x_[static_cast<std::size_t>(var)]; }
    Eigen::VectorXd solution() const;

    int num_vars() const { return n_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    const LpRow& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    /// Slack of row r at the current point (rhs - a.x).
    double row_slack(int r) const;
    /// Bumps ages: +1 for rows with slack > eps_feas, reset to 0 otherwise.
    void age_rows();
    void set_row_age(int r, int age) { rows_[static_cast<std::size_t>(r)].age = age; }

    std::int64_t pivot_count() const { return pivots_total_; }
    std::int64_t refactor_count() const { return refactors_; }

    /// Writes the current program in LP text format.
    void dump(std::ostream& os, const std::string& name) const;

  private:
    enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };

    // --- problem data ---
    int n_ = 0;  ///< structural variables; slack k has id n_ + k
    std::vector<double> cost_;
    std::vector<double> lb_, ub_;  ///< structural bounds
    std::vector<LpRow> rows_;
    /// Column view of the row coefficients: per structural var, (row, coef).
    std::vector<std::vector<std::pair<int, double>>> cols_;

    // --- basis state ---
    bool initialized_ = false;
    bool needs_restart_ = false;  ///< messy deletion happened
    std::vector<int> basic_;      ///< var of each basis position (size m)
    std::vector<VarState> state_;  ///< per var (size n_ + m)
    Eigen::MatrixXd binv_;
    std::vector<double> x_;  ///< per var (size n_ + m)
    double obj_ = 0.0;

    // --- diagnostics ---
    std::int64_t pivots_total_ = 0;
    std::int64_t pivots_since_ = 0;
    std::int64_t refactors_ = 0;

    const Config* cfg_;

    int total_vars() const { return n_ + static_cast<int>(rows_.size()); }
    double var_lb(int v) const { return v < n_ ? lb_[static_cast<std::size_t>(v)] : 0.0; }
    double var_ub(int v) const;
    double var_cost(int v) const { return v < n_ ? cost_[static_cast<std::size_t>(v)] : 0.0; }

    LpStatus solve_from(bool prefer_primal);
    void init_slack_basis();
    void rebuild_columns();
    void refactor();
    void compute_x();
    void compute_duals(Eigen::VectorXd& y) const;
    double reduced_cost(int v, const Eigen::VectorXd& y) const;
    Eigen::VectorXd ftran(int v) const;
    void apply_eta(int r, const Eigen::VectorXd& w);
    void snap_nonbasic();
    void make_dual_feasible();
    bool primal_feasible() const;
    LpStatus primal_loop();
    LpStatus dual_loop();
    void check_refactor();
};

}  // namespace crossmin
