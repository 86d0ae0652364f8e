#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>

namespace crossmin {

/// Runtime knobs for the whole pipeline. Defaults are the tuned values; every
/// field can be overridden from the command line via `--set key=value`.
struct Config {
    // Tolerances.
    double eps_feas = 1e-7;  ///< primal/dual feasibility tolerance
    double eps_int = 1e-6;   ///< integrality test tolerance
    double eps_viol = 1e-6;  ///< cut violation threshold

    // Cutting-plane loop.
    int cut_limit = 500;  ///< max cuts accepted per separation round
    int age_limit = 3;    ///< delete a row after this many consecutive nonbinding solves
    int tail_window = 5;
    double tail_eps = 1e-4;

    // Simplex engine.
    int refactor_interval = 100;  ///< pivots between basis refactorizations
    int bland_threshold = 1000;   ///< non-improving pivots before Bland's rule kicks in

    // Heuristics.
    int kl2_threshold = 5000;  ///< max component size for the local-search warm start

    // Reductions (disabled only for diagnostics; both are value-preserving).
    bool decompose = true;
    bool fixing = true;

    // Largest component solvable by the LP engine; beyond this the dense
    // pairwise tables would not fit and the solver refuses (or, in
    // best-effort mode, falls back to the heuristic ordering).
    int dense_limit = 20000;

    // Driver.
    double time_limit = 0.0;  ///< seconds; 0 = none
    bool best_effort = false;
    int threads = 1;
    bool stats = false;
    std::string lp_dump;   ///< path prefix for the debug LP dump; empty = off
    std::uint64_t seed = 0;  ///< reserved; all algorithms are deterministic
};

/// Cooperative cancellation shared between the driver, a deadline, and the
/// SIGTERM handler. The solver polls it at loop heads.
class StopToken {
  public:
    StopToken() = default;

    void request_stop() { stop_.store(true, std::memory_order_relaxed); }

    void set_deadline(std::chrono::steady_clock::time_point tp) {
        deadline_ = tp;
        has_deadline_ = true;
    }

    bool stop_requested() const {
        if (stop_.load(std::memory_order_relaxed)) return true;
        if (has_deadline_ && std::chrono::steady_clock::now() >= deadline_) {
            stop_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

  private:
    mutable std::atomic<bool> stop_{false};
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
};

}  // namespace crossmin
