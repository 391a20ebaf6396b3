#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eog/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"edge-ordered graph toolkit: height tables, monotone path search, experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    // config keys live in a [subcommand] section, e.g. [paths] seeds=20
    app.set_config("--config", "", "key=value config file; flags override it");

    eog::RunConfig cfg;
    std::string mode = "best-effort";

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--n", cfg.ns, "instance sizes (repeatable)");
        sub->add_option("--seeds", cfg.seeds, "random orderings per size");
        sub->add_option("--strategy", cfg.strategies, "strategies: greedy, find, lower-bound");
        sub->add_flag("--oracle", cfg.oracle, "compute exact optima where the guard allows");
        sub->add_option("--out", cfg.out_dir, "output directory (default $EOG_OUT_DIR or ./out)");
        sub->add_option("--c-constant", cfg.c_constant, "C constant of the recursive search");
        sub->add_option("--mode", mode, "strict | best-effort")
            ->check(CLI::IsMember({"strict", "best-effort"}));
        sub->add_option("--epsilon", cfg.epsilon, "sparsity parameter for the greedy builder");
        sub->add_option("--input", cfg.input_file, "read one instance from a graph file");
    };

    auto* verify = app.add_subcommand("verify", "run the invariant suites over the instance matrix");
    auto* paths = app.add_subcommand("paths", "run path strategies and emit a CSV");
    auto* alti = app.add_subcommand("altitude", "exact altitudes of tiny shapes");
    auto* gen = app.add_subcommand("gen", "emit instance files for the matrix");
    auto* table = app.add_subcommand("table", "dump a height table");
    alti->add_option("--guard", cfg.altitude_guard, "max |E| for exhaustive ordering search");
    for (auto* sub : {verify, paths, alti, gen, table}) add_common(sub);

    CLI11_PARSE(app, argc, argv);
    cfg.mode = mode == "strict" ? eog::SearchMode::kStrict : eog::SearchMode::kBestEffort;

    try {
        if (verify->parsed()) return eog::run_verify(cfg, std::cout);
        if (paths->parsed()) return eog::run_paths(cfg, std::cout);
        if (alti->parsed()) return eog::run_altitude(cfg, std::cout);
        if (gen->parsed()) return eog::run_gen(cfg, std::cout);
        if (table->parsed()) return eog::run_table(cfg, std::cout);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
