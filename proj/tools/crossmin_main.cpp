#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crossmin/config.hpp"
#include "crossmin/instance.hpp"
#include "crossmin/lp.hpp"
#include "crossmin/solver.hpp"

namespace {

crossmin::StopToken g_stop;

void handle_signal(int) { g_stop.request_stop(); }

/// Applies one `key=value` pair from --set; false if the key is unknown or
/// the value does not parse.
bool apply_override(crossmin::Config& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "eps_feas") cfg.eps_feas = std::stod(value);
        else if (key == "eps_int") cfg.eps_int = std::stod(value);
        else if (key == "eps_viol") cfg.eps_viol = std::stod(value);
        else if (key == "cut_limit") cfg.cut_limit = std::stoi(value);
        else if (key == "age_limit") cfg.age_limit = std::stoi(value);
        else if (key == "tail_window") cfg.tail_window = std::stoi(value);
        else if (key == "tail_eps") cfg.tail_eps = std::stod(value);
        else if (key == "refactor_interval") cfg.refactor_interval = std::stoi(value);
        else if (key == "bland_threshold") cfg.bland_threshold = std::stoi(value);
        else if (key == "kl2_threshold") cfg.kl2_threshold = std::stoi(value);
        else if (key == "decompose") cfg.decompose = std::stoi(value) != 0;
        else if (key == "fixing") cfg.fixing = std::stoi(value) != 0;
        else if (key == "dense_limit") cfg.dense_limit = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else return false;
    } catch (const std::exception&) {
        return false;
    }
    // Degenerate values break solver invariants (the cut loop needs at least
    // one cut per round, nonpositive tolerances break the LP); reject them
    // the same way as unparseable input.
    if (cfg.eps_feas <= 0 || cfg.eps_int <= 0 || cfg.eps_viol <= 0 || cfg.tail_eps < 0)
        return false;
    if (cfg.cut_limit < 1 || cfg.age_limit < 1 || cfg.tail_window < 1 ||
        cfg.refactor_interval < 1)
        return false;
    return true;
}

void print_stats(const crossmin::SolveResult& res, std::ostream& os) {
    const auto& st = res.stats;
    os << "c components " << st.components << " isolated " << st.isolated
       << " largest " << st.largest_component << "\n";
    os << "c nodes " << st.nodes << " lp_solves " << st.lp_solves << " pivots " << st.pivots
       << "\n";
    os << "c cuts_cycle " << st.cuts_cycle << " cuts_mobius " << st.cuts_mobius
       << " rows_deleted " << st.rows_deleted << "\n";
    os << "c crossings " << res.solution.crossings << " lower_bound " << res.lower_bound
       << " optimal " << (res.solution.optimal ? 1 : 0) << "\n";
    os << "c wall_seconds " << st.wall_seconds << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact one-sided crossing minimization for two-layer drawings"};
    std::string input_path;
    std::vector<std::string> overrides;
    crossmin::Config cfg;

    app.add_option("input", input_path, "instance file in 'p ocr' format (default: stdin)");
    app.add_option("--time-limit", cfg.time_limit, "wall-clock budget in seconds (0 = none)");
    app.add_flag("--best-effort", cfg.best_effort,
                 "print the best ordering found when the budget runs out");
    app.add_option("--threads", cfg.threads, "worker threads for independent components")
        ->check(CLI::PositiveNumber);
    app.add_flag("--stats", cfg.stats, "print solver statistics to stderr (prefixed 'c ')");
    app.add_option("--lp-dump", cfg.lp_dump, "append root LP relaxations to this file");
    app.add_option("--set", overrides, "tolerance/knob override as key=value (repeatable)");
    CLI11_PARSE(app, argc, argv);

    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos ||
            !apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1))) {
            std::cerr << "bad --set override: " << kv << "\n";
            return 1;
        }
    }
    if (!cfg.lp_dump.empty()) cfg.threads = 1;  // keep the dump file coherent

    std::signal(SIGTERM, handle_signal);
    std::signal(SIGINT, handle_signal);
    if (cfg.time_limit > 0.0) {
        g_stop.set_deadline(std::chrono::steady_clock::now() +
                            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                std::chrono::duration<double>(cfg.time_limit)));
    }

    crossmin::Instance instance;
    try {
        if (input_path.empty()) {
            instance = crossmin::parse_instance(std::cin);
        } else {
            std::ifstream in(input_path);
            if (!in) {
                std::cerr << "cannot open " << input_path << "\n";
                return 1;
            }
            instance = crossmin::parse_instance(in);
        }
    } catch (const crossmin::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        const crossmin::SolveResult res = crossmin::solve_instance(instance, cfg, &g_stop);
        if (cfg.stats) print_stats(res, std::cerr);
        if (res.solution.optimal) {
            crossmin::write_solution(instance, res.solution, std::cout);
            return 0;
        }
        if (cfg.best_effort) {
            crossmin::write_solution(instance, res.solution, std::cout);
            std::cerr << "warning: budget exhausted; best-effort ordering with "
                      << res.solution.crossings << " crossings (lower bound "
                      << res.lower_bound << ")\n";
            return 0;
        }
        std::cerr << "time limit reached before optimality was certified\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
}
