// burntool: command-line surface of the graph-burning toolkit.
//
// Subcommands: burn, exact, verify, bound, gen, bench.
// Exit codes: 0 success, 1 parse/input error, 2 disconnected input,
// 3 internal invariant failure, 4 exact search exceeded max-k,
// 5 invalid schedule.

#include "burn/burn.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDisconnected = 2;
constexpr int kExitInternal = 3;
constexpr int kExitExceeded = 4;
constexpr int kExitInvalidSchedule = 5;

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const long long lo = std::stoll(item.substr(0, dots));
            const long long hi = std::stoll(item.substr(dots + 2));
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(std::stoll(item));
        }
    }
    return out;
}

std::vector<int> parse_leg_list(const std::string& text) {
    std::vector<int> out;
    for (long long v : parse_int_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

/// Deterministic instance for a (family, n, seed) triple. Seed only matters
/// for the random families.
burn::Graph family_instance(const std::string& family, int n, std::uint64_t seed) {
    if (family == "path") return burn::gen_path(n);
    if (family == "star") return burn::gen_star(n);
    if (family == "complete") return burn::gen_complete(n);
    if (family == "spider") return burn::spider_of_order(n);
    if (family == "caterpillar") return burn::caterpillar_of_order(n);
    if (family == "random-tree") return burn::gen_random_tree(n, seed);
    throw std::invalid_argument("unknown family: " + family);
}

struct BurnOpts {
    std::string file;
    int root = 0;
    bool trace = false;
    std::string schedule_out;
};

int cmd_burn(const BurnOpts& o) {
    const burn::Graph g = burn::load_edge_list_file(o.file);
    if (o.root < 0 || o.root >= g.n) {
        std::cerr << "burn: root out of range\n";
        return kExitParse;
    }
    const burn::BurnResult r = burn::burn_graph(g, o.root);
    const burn::VerifyReport rep = burn::verify_schedule(g, r.k, r.schedule);
    if (o.trace)
        for (const auto& e : r.decomposition.extractions)
            std::cout << burn::format_extraction(e) << '\n';
    std::cout << "n: " << g.n << '\n'
              << "k: " << r.k << '\n'
              << "completion: " << rep.completion_round << '\n'
              << "valid: " << (rep.valid ? "true" : "false") << '\n';
    if (!o.schedule_out.empty()) {
        std::ofstream out(o.schedule_out);
        if (!out) {
            std::cerr << "burn: cannot write " << o.schedule_out << '\n';
            return kExitParse;
        }
        burn::write_schedule(r.schedule, out);
    }
    if (!rep.valid) {
        std::cerr << "burn: schedule failed verification\n";
        return kExitInternal;
    }
    return kExitOk;
}

struct ExactOpts {
    std::string file;
    int max_k = 0;
    int limit = 20;
};

int cmd_exact(const ExactOpts& o) {
    const burn::Graph g = burn::load_edge_list_file(o.file);
    if (g.n > o.limit) {
        std::cerr << "exact: order " << g.n << " exceeds limit " << o.limit
                  << " (raise with --limit)\n";
        return kExitParse;
    }
    const int max_k = o.max_k > 0 ? o.max_k : g.n;
    const auto res = burn::exact_burning_number(g, max_k);
    if (!res) {
        std::cerr << "exact: no schedule of length at most " << max_k << '\n';
        return kExitExceeded;
    }
    std::cout << "n: " << g.n << '\n' << "b: " << res->number << '\n' << "schedule:\n";
    burn::write_schedule(res->witness, std::cout);
    return kExitOk;
}

struct VerifyOpts {
    std::string graph_file;
    std::string schedule_file;
    int k = 0;
    bool strict = false;
};

int cmd_verify(const VerifyOpts& o) {
    const burn::Graph g = burn::load_edge_list_file(o.graph_file);
    const burn::BurnSchedule s = burn::read_schedule_file(o.schedule_file);
    burn::validate_schedule_against(s, g);
    burn::SimResult sim =
        burn::simulate(g, s, o.strict ? burn::FillPolicy::Strict : burn::FillPolicy::Greedy);
    const bool valid = sim.complete && sim.completion_round <= o.k;
    if (sim.complete)
        std::cout << "completion: " << sim.completion_round << '\n';
    else
        std::cout << "completion: never\n";
    std::cout << "substitutions: " << sim.substitutions.size() << '\n';
    for (const auto& sub : sim.substitutions) {
        std::cout << "substitution: round=" << sub.round << " planned=";
        if (sub.planned < 0)
            std::cout << "none";
        else
            std::cout << sub.planned;
        std::cout << " actual=";
        if (sub.actual < 0)
            std::cout << "none";
        else
            std::cout << sub.actual;
        std::cout << '\n';
    }
    std::cout << "valid: " << (valid ? "true" : "false") << '\n';
    return valid ? kExitOk : kExitInvalidSchedule;
}

int cmd_bound(long long n) {
    std::cout << "n: " << n << '\n'
              << "burning_bound: " << burn::burning_bound(n) << '\n'
              << "land_lu: " << burn::land_lu_bound(n) << '\n'
              << "ceil_sqrt: " << burn::ceil_sqrt(n) << '\n';
    return kExitOk;
}

struct GenOpts {
    std::string family;
    int n = 0;
    long long m = -1;
    std::uint64_t seed = 0;
    std::string legs;
    int spine = 0;
    std::string out;
};

int cmd_gen(const GenOpts& o) {
    burn::Graph g;
    if (o.family == "spider" && !o.legs.empty()) {
        g = burn::gen_spider(parse_leg_list(o.legs));
    } else if (o.family == "caterpillar" && o.spine > 0) {
        g = burn::gen_caterpillar(o.spine, parse_leg_list(o.legs));
    } else if (o.family == "random-connected") {
        g = burn::gen_random_connected(o.n, o.m >= 0 ? o.m : o.n - 1, o.seed);
    } else {
        g = family_instance(o.family, o.n, o.seed);
    }
    if (o.out.empty()) {
        burn::write_edge_list(g, std::cout);
    } else {
        std::ofstream out(o.out);
        if (!out) {
            std::cerr << "gen: cannot write " << o.out << '\n';
            return kExitParse;
        }
        burn::write_edge_list(g, out);
    }
    return kExitOk;
}

struct BenchOpts {
    std::string family = "random-tree";
    std::string sizes;
    std::string seeds = "0";
    std::string csv;
    int root = 0;
};

int cmd_bench(const BenchOpts& o) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.csv.empty()) {
        file.open(o.csv);
        if (!file) {
            std::cerr << "bench: cannot write " << o.csv << '\n';
            return kExitParse;
        }
        out = &file;
    }
    *out << "n,seed,family,k_bound_new,completion_round,bound_landlu,ceil_sqrt_n,valid\n";
    for (long long n : parse_int_list(o.sizes)) {
        for (long long seed : parse_int_list(o.seeds)) {
            const burn::Graph g =
                family_instance(o.family, static_cast<int>(n), static_cast<std::uint64_t>(seed));
            const burn::BurnResult r = burn::burn_graph(g, o.root);
            const burn::VerifyReport rep = burn::verify_schedule(g, r.k, r.schedule);
            *out << n << ',' << seed << ',' << o.family << ',' << r.k << ','
                 << rep.completion_round << ',' << burn::land_lu_bound(n) << ','
                 << burn::ceil_sqrt(n) << ',' << (rep.valid ? "true" : "false") << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph burning toolkit: bounded-length burning schedules for connected graphs"};
    app.require_subcommand(1);

    BurnOpts burn_opts;
    auto* sc_burn = app.add_subcommand("burn", "decompose a graph and emit a burning schedule");
    sc_burn->add_option("file", burn_opts.file, "edge-list file")->required();
    sc_burn->add_option("--root", burn_opts.root, "spanning-tree root (default 0)");
    sc_burn->add_flag("--trace", burn_opts.trace, "print the extraction trace");
    sc_burn->add_option("--schedule-out", burn_opts.schedule_out, "write the schedule to a file");

    ExactOpts exact_opts;
    auto* sc_exact = app.add_subcommand("exact", "exact burning number by exhaustive search");
    sc_exact->add_option("file", exact_opts.file, "edge-list file")->required();
    sc_exact->add_option("--max-k", exact_opts.max_k, "largest schedule length to try (default n)");
    sc_exact->add_option("--limit", exact_opts.limit, "largest order accepted (default 20)");

    VerifyOpts verify_opts;
    auto* sc_verify = app.add_subcommand("verify", "check a schedule against a graph");
    sc_verify->add_option("graph", verify_opts.graph_file, "edge-list file")->required();
    sc_verify->add_option("schedule", verify_opts.schedule_file, "schedule file")->required();
    sc_verify->add_option("--k", verify_opts.k, "round budget")->required();
    sc_verify->add_flag("--strict", verify_opts.strict, "no greedy substitution or filling");

    long long bound_n = 0;
    auto* sc_bound = app.add_subcommand("bound", "print the bound formulas for an order n");
    sc_bound->add_option("n", bound_n, "graph order")->required();

    GenOpts gen_opts;
    auto* sc_gen = app.add_subcommand("gen", "emit a generated instance as an edge list");
    sc_gen->add_option("--family", gen_opts.family,
                       "path|star|complete|spider|caterpillar|random-tree|random-connected")
        ->required();
    sc_gen->add_option("--n", gen_opts.n, "order");
    sc_gen->add_option("--m", gen_opts.m, "edge count (random-connected)");
    sc_gen->add_option("--seed", gen_opts.seed, "PRNG seed");
    sc_gen->add_option("--legs", gen_opts.legs, "comma list: spider leg lengths / caterpillar leg counts");
    sc_gen->add_option("--spine", gen_opts.spine, "caterpillar spine length");
    sc_gen->add_option("--out", gen_opts.out, "output file (default stdout)");

    BenchOpts bench_opts;
    auto* sc_bench = app.add_subcommand("bench", "CSV benchmark over sizes and seeds");
    sc_bench->add_option("--family", bench_opts.family, "instance family (default random-tree)");
    sc_bench->add_option("--sizes", bench_opts.sizes, "comma list / a..b ranges of orders");
    sc_bench->add_option("--seeds", bench_opts.seeds, "comma list / a..b ranges of seeds (default 0)");
    sc_bench->add_option("--csv", bench_opts.csv, "output file (default stdout)");
    sc_bench->add_option("--root", bench_opts.root, "spanning-tree root (default 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(sc_burn)) return cmd_burn(burn_opts);
        if (app.got_subcommand(sc_exact)) return cmd_exact(exact_opts);
        if (app.got_subcommand(sc_verify)) return cmd_verify(verify_opts);
        if (app.got_subcommand(sc_bound)) return cmd_bound(bound_n);
        if (app.got_subcommand(sc_gen)) return cmd_gen(gen_opts);
        if (app.got_subcommand(sc_bench)) return cmd_bench(bench_opts);
    } catch (const burn::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const burn::NotConnectedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDisconnected;
    } catch (const burn::ScheduleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidSchedule;
    } catch (const burn::InternalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
