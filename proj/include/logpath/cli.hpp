// cli.hpp - subcommand implementations for the workbench driver. Kept apart
// from argument parsing so tests can call the commands directly and assert
// exit codes and output bytes.
//
// Exit codes: 0 success, 1 usage or parse errors, 2 "path does not exist",
// 3 negative cycle, 4 verification mismatch.
#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "logpath/connectivity.hpp"
#include "logpath/generator.hpp"
#include "logpath/graph_io.hpp"
#include "logpath/local_blocks.hpp"
#include "logpath/metering.hpp"
#include "logpath/path_bounded.hpp"
#include "logpath/path_general.hpp"
#include "logpath/reference.hpp"
#include "logpath/workbench.hpp"

namespace logpath {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int no_path = 2;
inline constexpr int negative_cycle = 3;
inline constexpr int mismatch = 4;
}  // namespace exit_code

inline const char* kBenchCsvHeader = "n,seed,algo,highWater,steps,oracleCalls,pathWeight,wallMillis";
inline const char* kMeterCsvHeader = "n,highWater,steps,oracleCalls";

struct GenOptions {
    Vertex n = 0;
    int delta = 3;
    int k = 4;
    std::uint64_t seed = 1;
    std::string out_file;  // empty = stdout
};

struct PathOptions {
    std::string file;
    Vertex s = 0;
    Vertex t = 0;
    std::string algo = "general";  // general | bounded | reference
    int delta = 0;
    int k = 0;
    std::string oracle = "dfs";  // dfs | walk
    double walk_budget = 8.0;
    std::uint64_t seed = 1;
    std::string csv;  // meter row destination, empty = none
};

struct VerifyOptions {
    Vertex max_n = 6;
    int instances = 1000;
    int pairs = 5;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
    bool inject_fault = false;
};

struct BenchOptions {
    std::string algo = "bounded,reference";  // comma-separated list
    int delta = 3;
    int k = 4;
    Vertex n_min = 64;
    Vertex n_max = 8192;
    int seeds = 3;
    std::string csv;  // empty = stdout
};

namespace detail {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

inline bool load_graph(const std::string& file, Graph& g, std::ostream& err) {
    std::ifstream in(file);
    if (!in) {
        err << "error: cannot open '" << file << "'\n";
        return false;
    }
    try {
        g = parse_graph_file(in);
    } catch (const ParseError& e) {
        err << "error: " << file << ": " << e.what() << '\n';
        return false;
    }
    return true;
}

inline void write_meter_csv(const std::string& path, const MeterReport& report,
                            std::ostream& err) {
    std::ofstream csv(path);
    if (!csv) {
        err << "warning: cannot write meter row to '" << path << "'\n";
        return;
    }
    csv << kMeterCsvHeader << '\n' << report.csv_row() << '\n';
}

}  // namespace detail

inline int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        Graph g = generate_bounded(opt.n, {opt.delta, opt.k}, opt.seed);
        validate_bounded(g, {opt.delta, opt.k});
        if (opt.out_file.empty()) {
            write_graph_file(g, out);
        } else {
            std::ofstream f(opt.out_file);
            if (!f) {
                err << "error: cannot write '" << opt.out_file << "'\n";
                return exit_code::usage;
            }
            write_graph_file(g, f);
        }
        return exit_code::ok;
    } catch (const BoundsError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

inline int cmd_blocks(const std::string& file, std::ostream& out, std::ostream& err) {
    Graph g;
    if (!detail::load_graph(file, g, err)) return exit_code::usage;
    BlockDecomposition dec = biconnected_components(g);
    out << "blocks " << dec.blocks.size() << '\n';
    for (const auto& b : dec.blocks) {
        out << "block (" << b.back() << ',' << b.front() << "):";
        for (Vertex v : b) out << ' ' << v;
        out << '\n';
    }
    out << "articulation points:";
    for (Vertex v : dec.articulation_points) out << ' ' << v;
    out << '\n';
    return exit_code::ok;
}

inline int cmd_path(const PathOptions& opt, std::ostream& out, std::ostream& err) {
    Graph g;
    if (!detail::load_graph(opt.file, g, err)) return exit_code::usage;
    if (opt.s < 1 || opt.s > g.order() || opt.t < 1 || opt.t > g.order()) {
        err << "error: query labels outside [1," << g.order() << "]\n";
        return exit_code::usage;
    }

    auto print_found = [&](const std::vector<Vertex>& path, Weight weight) {
        for (std::size_t i = 0; i < path.size(); ++i)
            out << (i ? " " : "") << path[i];
        out << "\nweight " << weight << '\n';
    };

    try {
        if (opt.algo == "reference") {
            ReferencePath ref = reference_shortest_path(g, opt.s, opt.t);
            if (ref.status == PathStatus::negative_cycle) {
                err << "error: negative-weight cycle between " << opt.s << " and " << opt.t
                    << '\n';
                return exit_code::negative_cycle;
            }
            if (ref.status == PathStatus::unreachable) {
                out << "path does not exist\n";
                return exit_code::no_path;
            }
            print_found(ref.path, ref.distance);
            if (!opt.csv.empty()) {
                MeterReport empty;
                empty.n = g.order();
                detail::write_meter_csv(opt.csv, empty, err);
            }
            return exit_code::ok;
        }

        Meter meter;
        PathReport report;
        if (opt.algo == "general") {
            DfsConnectivity dfs;
            RandomWalkConnectivity walk(opt.walk_budget, opt.seed);
            ConnectivityOracle* conn = nullptr;
            if (opt.oracle == "dfs") {
                conn = &dfs;
            } else if (opt.oracle == "walk") {
                conn = &walk;
            } else {
                err << "error: unknown oracle '" << opt.oracle << "'\n";
                return exit_code::usage;
            }
            report = shortest_path_general(g, opt.s, opt.t, *conn, &meter);
        } else if (opt.algo == "bounded") {
            if (opt.delta < 1 || opt.k < 1) {
                err << "error: --algo bounded requires --delta and --k\n";
                return exit_code::usage;
            }
            BoundedParams params{opt.delta, opt.k};
            try {
                validate_bounded(g, params);
            } catch (const BoundsError& e) {
                err << "error: " << e.what() << '\n';
                return exit_code::usage;
            }
            report = shortest_path_bounded(g, opt.s, opt.t, params, &meter);
        } else {
            err << "error: unknown algorithm '" << opt.algo << "'\n";
            return exit_code::usage;
        }

        if (!opt.csv.empty()) detail::write_meter_csv(opt.csv, meter.report(), err);
        if (!report.found) {
            out << "path does not exist\n";
            return exit_code::no_path;
        }
        print_found(report.vertices, report.weight);
        return exit_code::ok;
    } catch (const NegativeCycleError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::negative_cycle;
    }
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.max_n <= 0 && opt.instances <= 0) {
        err << "error: empty corpus, nothing to verify\n";
        return exit_code::usage;
    }
    const int threads = detail::resolve_threads(opt.threads);
    VerifyStats total;
    if (opt.max_n > 0) {
        total.merge(check_blocks_exhaustive(opt.max_n, threads, opt.inject_fault));
        total.merge(check_paths_exhaustive(opt.max_n, threads, opt.inject_fault));
    }
    if (opt.instances > 0)
        total.merge(
            check_paths_random(opt.instances, opt.pairs, opt.seed, threads, opt.inject_fault));

    if (total.mismatches == 0) {
        out << "ok: 0 mismatches (" << total.graphs << " graphs, " << total.tuples << " tuples, "
            << total.queries << " queries)\n";
        return exit_code::ok;
    }
    out << "mismatch: " << total.detail << '\n';
    out << "reproducer:\n" << total.reproducer;
    err << "error: " << total.mismatches << " mismatches\n";
    return exit_code::mismatch;
}

inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n_min < 2 || opt.n_max < opt.n_min || opt.seeds < 1) {
        err << "error: bench needs 2 <= n-min <= n-max and seeds >= 1\n";
        return exit_code::usage;
    }
    std::vector<std::string> algos;
    {
        std::istringstream list(opt.algo);
        std::string item;
        while (std::getline(list, item, ',')) {
            if (item.empty()) continue;
            if (item != "bounded" && item != "general" && item != "reference") {
                err << "error: unknown algorithm '" << item << "'\n";
                return exit_code::usage;
            }
            algos.push_back(item);
        }
    }
    if (algos.empty()) {
        err << "error: no algorithm selected\n";
        return exit_code::usage;
    }
    std::ofstream file;
    if (!opt.csv.empty()) {
        file.open(opt.csv);
        if (!file) {
            err << "error: cannot write '" << opt.csv << "'\n";
            return exit_code::usage;
        }
    }
    std::ostream& csv = opt.csv.empty() ? out : file;
    csv << kBenchCsvHeader << '\n';

    BoundedParams params{opt.delta, opt.k};
    try {
        for (Vertex n = opt.n_min; n <= opt.n_max; n *= 2) {
            for (int seed = 1; seed <= opt.seeds; ++seed) {
                Graph g = generate_bounded(n, params, static_cast<std::uint64_t>(seed));
                validate_bounded(g, params);
                const Vertex s = 1, t = n;
                for (const std::string& algo : algos) {
                    auto t0 = std::chrono::steady_clock::now();
                    Meter meter;
                    Weight weight = 0;
                    if (algo == "bounded") {
                        weight = shortest_path_bounded(g, s, t, params, &meter).weight;
                    } else if (algo == "general") {
                        DfsConnectivity conn;
                        weight = shortest_path_general(g, s, t, conn, &meter).weight;
                    } else {
                        meter.set_input_size(n);
                        weight = reference_shortest_path(g, s, t).distance;
                    }
                    auto t1 = std::chrono::steady_clock::now();
                    MeterReport rep = meter.report();
                    auto ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                    csv << n << ',' << seed << ',' << algo << ',' << rep.high_water << ','
                        << rep.steps << ',' << rep.oracle_calls_field() << ',' << weight << ','
                        << ms << '\n';
                }
            }
        }
    } catch (const BoundsError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::ok;
}

}  // namespace logpath
