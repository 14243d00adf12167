// logpath - workbench driver: generate bounded instances, answer shortest-path
// queries with the metered engines, dump block decompositions, cross-verify
// the engines against the references, and run scaling benchmarks.
#include <CLI11.hpp>
#include <cstdint>
#include <iostream>

#include "logpath/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"space-metered shortest-path workbench"};
    app.require_subcommand(1);

    logpath::GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a bounded block-tree instance");
    cmd_gen->add_option("--n", gen.n, "vertex count")->required();
    cmd_gen->add_option("--delta", gen.delta, "maximum degree");
    cmd_gen->add_option("--k", gen.k, "maximum block size");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--out", gen.out_file, "output file (default stdout)");

    logpath::PathOptions path;
    CLI::App* cmd_path = app.add_subcommand("path", "shortest path query on a graph file");
    cmd_path->add_option("file", path.file, "graph file")->required();
    cmd_path->add_option("--s", path.s, "source label")->required();
    cmd_path->add_option("--t", path.t, "target label")->required();
    cmd_path->add_option("--algo", path.algo, "general | bounded | reference");
    cmd_path->add_option("--delta", path.delta, "declared maximum degree (bounded)");
    cmd_path->add_option("--k", path.k, "declared maximum block size (bounded)");
    cmd_path->add_option("--oracle", path.oracle, "connectivity oracle: dfs | walk");
    cmd_path->add_option("--walk-budget", path.walk_budget,
                         "random-walk budget multiplier (steps = c * n^3)");
    cmd_path->add_option("--seed", path.seed, "random-walk seed");
    cmd_path->add_option("--csv", path.csv, "write the meter row to this file");

    std::string blocks_file;
    CLI::App* cmd_blocks = app.add_subcommand("blocks", "print the block decomposition");
    cmd_blocks->add_option("file", blocks_file, "graph file")->required();

    logpath::VerifyOptions verify;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "cross-verify the engines against the references");
    cmd_verify->add_option("--max-n", verify.max_n, "exhaustive corpus: all graphs up to this order");
    cmd_verify->add_option("--instances", verify.instances, "randomized corpus size");
    cmd_verify->add_option("--pairs", verify.pairs, "queries per random instance");
    cmd_verify->add_option("--seed", verify.seed, "randomized corpus seed");
    cmd_verify->add_option("--threads", verify.threads, "worker threads (0 = auto)");
    cmd_verify->add_flag("--inject-fault", verify.inject_fault,
                         "self-test: flip one comparison to prove mismatches are caught");

    logpath::BenchOptions bench;
    CLI::App* cmd_bench = app.add_subcommand("bench", "scaling benchmark, one CSV row per run");
    cmd_bench->add_option("--algo", bench.algo,
                          "comma-separated list of bounded, general, reference");
    cmd_bench->add_option("--delta", bench.delta, "maximum degree of the family");
    cmd_bench->add_option("--k", bench.k, "maximum block size of the family");
    cmd_bench->add_option("--n-min", bench.n_min, "smallest n (doubles up to n-max)");
    cmd_bench->add_option("--n-max", bench.n_max, "largest n");
    cmd_bench->add_option("--seeds", bench.seeds, "seeds per n");
    cmd_bench->add_option("--csv", bench.csv, "CSV destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return logpath::exit_code::usage;
    }

    try {
        if (cmd_gen->parsed()) return logpath::cmd_gen(gen, std::cout, std::cerr);
        if (cmd_path->parsed()) return logpath::cmd_path(path, std::cout, std::cerr);
        if (cmd_blocks->parsed()) return logpath::cmd_blocks(blocks_file, std::cout, std::cerr);
        if (cmd_verify->parsed()) return logpath::cmd_verify(verify, std::cout, std::cerr);
        if (cmd_bench->parsed()) return logpath::cmd_bench(bench, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return logpath::exit_code::usage;
    }
    return logpath::exit_code::usage;
}
