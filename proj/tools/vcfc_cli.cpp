// Command-line surface for the conflict-free vertex-connection toolkit.
//
// Subcommands: solve, verify, construct, bounds, generate, regress,
// conjecture. Graphs come from graph6 streams, edge-list files, or generator
// specs; reports go out as a human table, JSON, or CSV.
//
// Exit codes: 0 success / all hold, 1 violation or failed verification,
// 2 input error, 3 budget exhausted.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vcfc/regression.hpp"
#include "vcfc/vcfc.hpp"

using nlohmann::json;
using namespace vcfc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct InputOptions {
    std::string input = "-";     // file path or "-" for stdin
    std::string format = "g6";   // g6 | edgelist
    std::string gen;             // generator spec, e.g. "path 7"
    std::uint64_t seed = regression::kDefaultSeed;
};

struct ReportOptions {
    bool as_json = false;
    bool as_csv = false;
    bool strict_bounds = false;
};

struct LoadedGraph {
    int id = 0;
    Graph g;
};

std::vector<Graph> make_family(const std::string& spec, std::uint64_t seed) {
    std::istringstream in(spec);
    std::string name;
    if (!(in >> name)) throw std::invalid_argument("empty generator spec");
    auto need_int = [&in, &name](const char* what) {
        long long x;
        if (!(in >> x)) throw std::invalid_argument(std::string("generator ") + name +
                                                    ": missing " + what);
        return static_cast<int>(x);
    };
    std::vector<Graph> out;
    if (name == "path") {
        out.push_back(path_graph(need_int("length")));
    } else if (name == "cycle") {
        out.push_back(cycle_graph(need_int("length")));
    } else if (name == "complete") {
        out.push_back(complete_graph(need_int("order")));
    } else if (name == "star") {
        out.push_back(star_graph(need_int("order")));
    } else if (name == "corona") {
        const int n = need_int("cycle length");
        const int t = need_int("pendant count");
        out.push_back(corona(cycle_graph(n), t));
    } else if (name == "random_tree") {
        const int n = need_int("order");
        long long s;
        if (in >> s) seed = static_cast<std::uint64_t>(s);
        long long count = 1;
        in >> count;
        std::mt19937_64 rng(seed);
        for (long long i = 0; i < count; ++i) out.push_back(random_tree(n, rng));
    } else if (name == "all_connected") {
        out = all_connected_graphs(need_int("order"));
    } else if (name == "all_trees") {
        for_each_free_tree(need_int("order"), [&out](const Graph& t) { out.push_back(t); });
    } else {
        throw std::invalid_argument("unknown family: " + name);
    }
    return out;
}

std::vector<LoadedGraph> load_graphs(const InputOptions& in) {
    std::vector<LoadedGraph> out;
    if (!in.gen.empty()) {
        int id = 0;
        for (Graph& g : make_family(in.gen, in.seed)) out.push_back({++id, std::move(g)});
        return out;
    }
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (in.input != "-") {
        file.open(in.input);
        if (!file) throw std::invalid_argument("cannot open input file: " + in.input);
        stream = &file;
    }
    if (in.format == "g6") {
        std::vector<int> lines;
        auto graphs = read_graph6_lines(*stream, &lines);
        for (size_t i = 0; i < graphs.size(); ++i)
            out.push_back({lines[i], std::move(graphs[i])});
    } else if (in.format == "edgelist") {
        out.push_back({1, read_edge_list(*stream)});
    } else {
        throw std::invalid_argument("unknown format: " + in.format);
    }
    return out;
}

LoadedGraph load_single_graph(const InputOptions& in) {
    auto graphs = load_graphs(in);
    if (graphs.size() != 1)
        throw std::invalid_argument("expected exactly one input graph, got " +
                                    std::to_string(graphs.size()));
    return std::move(graphs.front());
}

// One row of a solve/bounds report.
struct Record {
    int id = 0;
    int n = 0;
    std::size_t m = 0;
    int cuts = 0;
    int maxdeg = 0;
    int radius = 0;
    int diameter = 0;
    int lower = 0;
    std::string lower_rule;
    int upper = 0;
    std::string upper_rule;
    int value = 0;  // vcfc, meaningful when status == "ok" and solved
    bool solved = false;
    double elapsed = 0.0;
    std::string status = "ok";  // ok | budget-exhausted | skipped
};

Record analyze_graph(int id, const Graph& g, bool solve, const SolveOptions& solve_opts,
                     bool strict_bounds) {
    Record rec;
    rec.id = id;
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    if (!is_connected(g)) {
        rec.status = "skipped";
        return rec;
    }
    rec.cuts = static_cast<int>(cut_vertices(g).size());
    rec.maxdeg = g.max_degree();
    const auto metrics = compute_metrics(g);
    rec.radius = metrics.radius;
    rec.diameter = metrics.diameter;
    if (rec.n >= 2) {
        const auto b = bounds_report(g, strict_bounds);
        rec.lower = b.lower.value;
        rec.lower_rule = to_string(b.lower.rule);
        rec.upper = b.upper.value;
        rec.upper_rule = to_string(b.upper.rule);
    } else {
        rec.lower = rec.upper = 1;
        rec.lower_rule = rec.upper_rule = "single-vertex";
    }
    if (solve) {
        const SolveResult res = vcfc_exact(g, solve_opts);
        rec.elapsed = res.stats.elapsed_seconds;
        if (res.complete) {
            rec.value = res.vcfc;
            rec.solved = true;
        } else {
            // either the node budget ran out or max-k capped the search
            rec.status = "budget-exhausted";
        }
    }
    return rec;
}

void run_pool(int threads, int jobs, const std::function<void(int)>& body) {
    threads = std::max(1, threads);
    if (threads == 1 || jobs <= 1) {
        for (int i = 0; i < jobs; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, jobs);
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= jobs) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

std::string cell(int value, const Record& rec, bool meaningful) {
    if (rec.status == "skipped" || !meaningful) return "-";
    return std::to_string(value);
}

void print_records(const std::vector<Record>& records, bool with_value,
                   const ReportOptions& report) {
    if (report.as_json) {
        json arr = json::array();
        for (const auto& r : records) {
            json row{{"id", r.id}, {"n", r.n}, {"m", r.m}, {"status", r.status}};
            if (r.status != "skipped") {
                row["cut_vertices"] = r.cuts;
                row["max_degree"] = r.maxdeg;
                row["radius"] = r.radius;
                row["diameter"] = r.diameter;
                row["lower"] = r.lower;
                row["lower_rule"] = r.lower_rule;
                row["upper"] = r.upper;
                row["upper_rule"] = r.upper_rule;
                if (with_value) {
                    if (r.solved) row["vcfc"] = r.value;
                    row["elapsed_seconds"] = r.elapsed;
                }
            }
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (report.as_csv) {
        std::cout << "id,n,m,cut_vertices,max_degree,radius,diameter,lower,upper";
        if (with_value) std::cout << ",vcfc,elapsed_seconds";
        std::cout << ",status\n";
        for (const auto& r : records) {
            const bool live = r.status != "skipped";
            std::cout << r.id << ',' << r.n << ',' << r.m << ',';
            if (live)
                std::cout << r.cuts << ',' << r.maxdeg << ',' << r.radius << ',' << r.diameter
                          << ',' << r.lower << ',' << r.upper;
            else
                std::cout << ",,,,,";
            if (with_value) {
                std::cout << ',';
                if (r.solved) std::cout << r.value;
                std::cout << ',';
                if (live) std::cout << r.elapsed;
            }
            std::cout << ',' << r.status << '\n';
        }
        return;
    }
    std::printf("%-5s %-4s %-5s %-5s %-7s %-4s %-5s %-6s %-6s", "id", "n", "m", "cuts",
                "maxdeg", "rad", "diam", "lower", "upper");
    if (with_value) std::printf(" %-5s %-9s", "vcfc", "elapsed");
    std::printf(" %s\n", "status");
    for (const auto& r : records) {
        std::printf("%-5d %-4d %-5zu %-5s %-7s %-4s %-5s %-6s %-6s", r.id, r.n, r.m,
                    cell(r.cuts, r, true).c_str(), cell(r.maxdeg, r, true).c_str(),
                    cell(r.radius, r, true).c_str(), cell(r.diameter, r, true).c_str(),
                    cell(r.lower, r, true).c_str(), cell(r.upper, r, true).c_str());
        if (with_value) {
            std::printf(" %-5s", cell(r.value, r, r.solved).c_str());
            if (r.status == "skipped")
                std::printf(" %-9s", "-");
            else
                std::printf(" %-9.3f", r.elapsed);
        }
        std::printf(" %s\n", r.status.c_str());
    }
}

int cmd_solve(const InputOptions& in, const ReportOptions& report, const SolveOptions& opts,
              int threads) {
    const auto graphs = load_graphs(in);
    std::vector<Record> records(graphs.size());
    run_pool(threads, static_cast<int>(graphs.size()), [&](int i) {
        const auto& item = graphs[static_cast<size_t>(i)];
        records[static_cast<size_t>(i)] =
            analyze_graph(item.id, item.g, true, opts, report.strict_bounds);
    });
    print_records(records, true, report);
    for (const auto& r : records)
        if (r.status == "budget-exhausted") return kExitBudget;
    return kExitOk;
}

int cmd_bounds(const InputOptions& in, const ReportOptions& report) {
    const auto graphs = load_graphs(in);
    std::vector<Record> records;
    records.reserve(graphs.size());
    for (const auto& item : graphs)
        records.push_back(analyze_graph(item.id, item.g, false, {}, report.strict_bounds));
    print_records(records, false, report);
    return kExitOk;
}

int cmd_verify(const InputOptions& in, const std::string& coloring_file,
               const ReportOptions& report) {
    const auto loaded = load_single_graph(in);
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (coloring_file != "-") {
        file.open(coloring_file);
        if (!file) throw std::invalid_argument("cannot open coloring file: " + coloring_file);
        stream = &file;
    }
    const VertexColoring coloring = read_coloring(*stream, loaded.g.vertex_count());
    const CfvcCertificate cert = is_cfvc(loaded.g, coloring);
    if (report.as_json) {
        json row{{"ok", cert.ok}, {"n", loaded.g.vertex_count()}, {"k", coloring.k}};
        if (cert.ok) {
            json witnesses = json::array();
            for (const auto& w : cert.witnesses)
                witnesses.push_back(
                    {{"u", w.u}, {"v", w.v}, {"path", w.path}, {"color", w.color}});
            row["witnesses"] = std::move(witnesses);
        } else if (cert.failing_pair) {
            row["failing_pair"] = {cert.failing_pair->first, cert.failing_pair->second};
        }
        std::cout << row.dump(2) << "\n";
    } else if (cert.ok) {
        std::cout << "conflict-free vertex-connected: true (" << cert.witnesses.size()
                  << " pair witnesses)\n";
    } else {
        std::cout << "conflict-free vertex-connected: false\n";
        if (cert.failing_pair)
            std::cout << "failing pair: (" << cert.failing_pair->first << ", "
                      << cert.failing_pair->second << ")\n";
    }
    return cert.ok ? kExitOk : kExitViolation;
}

int cmd_construct(const std::string& name, const InputOptions& in, int ruler_n, int marked,
                  const ReportOptions& report) {
    Graph g = path_graph(1);
    VertexColoring coloring{1, {1}};
    if (name == "ruler") {
        if (ruler_n > 0) {
            g = path_graph(ruler_n);
            coloring = ruler_coloring(ruler_n);
        } else {
            g = load_single_graph(in).g;
            if (!is_path_graph(g))
                throw std::invalid_argument("ruler construction needs a path graph (or --n)");
            const auto res = vcfc_exact(g);  // path fast path maps the ruler onto g's ids
            coloring = res.coloring;
        }
    } else {
        g = load_single_graph(in).g;
        if (name == "two-connected")
            coloring = two_coloring_2connected(g, marked);
        else if (name == "one-cut")
            coloring = two_coloring_one_cut(g);
        else if (name == "star-cutedges")
            coloring = star_cutedges_3coloring(g);
        else if (name == "corona")
            coloring = corona_3coloring(g);
        else if (name == "tree-level")
            coloring = tree_level_coloring(g);
        else if (name == "tree-ranking")
            coloring = ranking_as_coloring(g, centroid_ranking(g));
        else
            throw std::invalid_argument("unknown construction: " + name);
    }
    const CfvcCertificate cert = is_cfvc(g, coloring);
    if (report.as_json) {
        json row{{"construction", name},
                 {"n", g.vertex_count()},
                 {"k", coloring.k},
                 {"colors", coloring.colors},
                 {"ok", cert.ok}};
        std::cout << row.dump(2) << "\n";
    } else {
        write_coloring(std::cout, coloring);
        std::cerr << "verified: " << (cert.ok ? "true" : "false") << "\n";
    }
    return cert.ok ? kExitOk : kExitViolation;
}

int cmd_generate(const std::string& gen, std::uint64_t seed) {
    if (gen.empty()) throw std::invalid_argument("generate requires --gen SPEC");
    for (const Graph& g : make_family(gen, seed)) std::cout << to_graph6(g) << "\n";
    return kExitOk;
}

int cmd_conjecture(const InputOptions& in, const ReportOptions& report,
                   const SolveOptions& opts, int threads) {
    const auto graphs = load_graphs(in);
    struct Verdict {
        int id = 0;
        int n = 0;
        int value = 0;
        int bound = 0;
        std::string status = "ok";  // ok | budget-exhausted | skipped
        bool holds = true;
    };
    std::vector<Verdict> verdicts(graphs.size());
    run_pool(threads, static_cast<int>(graphs.size()), [&](int i) {
        const auto& item = graphs[static_cast<size_t>(i)];
        Verdict& v = verdicts[static_cast<size_t>(i)];
        v.id = item.id;
        v.n = item.g.vertex_count();
        v.bound = path_vcfc(v.n);
        if (!is_connected(item.g)) {
            v.status = "skipped";
            return;
        }
        const SolveResult res = vcfc_exact(item.g, opts);
        if (!res.complete) {
            v.status = "budget-exhausted";  // unknown, never a violation
            return;
        }
        v.value = res.vcfc;
        v.holds = v.value <= v.bound;
    });
    bool violation = false, unknown = false;
    if (report.as_json) {
        json arr = json::array();
        for (const auto& v : verdicts) {
            json row{{"id", v.id}, {"n", v.n}, {"path_bound", v.bound}, {"status", v.status}};
            if (v.status == "ok") {
                row["vcfc"] = v.value;
                row["holds"] = v.holds;
            }
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (report.as_csv) {
        std::cout << "id,n,vcfc,path_bound,holds,status\n";
        for (const auto& v : verdicts) {
            std::cout << v.id << ',' << v.n << ',';
            if (v.status == "ok") std::cout << v.value;
            std::cout << ',' << v.bound << ',';
            if (v.status == "ok") std::cout << (v.holds ? "true" : "false");
            std::cout << ',' << v.status << '\n';
        }
    } else {
        std::printf("%-5s %-4s %-5s %-6s %-7s %s\n", "id", "n", "vcfc", "bound", "holds",
                    "status");
        for (const auto& v : verdicts) {
            std::printf("%-5d %-4d %-5s %-6d %-7s %s\n", v.id, v.n,
                        v.status == "ok" ? std::to_string(v.value).c_str() : "-", v.bound,
                        v.status != "ok" ? "-" : (v.holds ? "yes" : "NO"), v.status.c_str());
        }
    }
    for (const auto& v : verdicts) {
        if (v.status == "ok" && !v.holds) {
            violation = true;
            std::cerr << "VIOLATION: graph " << v.id << " (n=" << v.n << ") has value "
                      << v.value << " > path bound " << v.bound << "\n";
        }
        if (v.status == "budget-exhausted") unknown = true;
    }
    if (violation) return kExitViolation;
    if (unknown) return kExitBudget;
    return kExitOk;
}

int cmd_regress(int max_n, std::uint64_t seed, const ReportOptions& report) {
    if (max_n < 1 || max_n > 7)
        throw std::invalid_argument("regress supports --max-n between 1 and 7");
    using namespace vcfc::regression;
    std::vector<SuiteResult> suites;

    const SmallSweep sweep = run_small_sweep(std::min(max_n, 6));
    const std::string scope = " (all connected graphs n<=" +
                              std::to_string(std::min(max_n, 6)) + ", " +
                              std::to_string(sweep.graphs) + " graphs)";
    auto sweep_suite = [&](const char* name, bool ok) {
        suites.push_back({name, ok, ok ? "zero exceptions" + scope : sweep.first_failure});
    };
    sweep_suite("enumeration-counts", sweep.counts_ok);
    sweep_suite("solver-oracle", sweep.oracle_ok);
    sweep_suite("two-color-characterization", sweep.characterization_ok);
    sweep_suite("degree-window-three", sweep.degree_condition_ok);
    sweep_suite("bounds-sandwich", sweep.bounds_ok);
    sweep_suite("conjecture-path-bound", sweep.conjecture_ok);
    if (max_n == 7) {
        const SevenSweep seven = run_seven_sweep();
        const bool ok = seven.counts_ok && seven.degree_condition_ok && seven.bounds_ok &&
                        seven.conjecture_ok;
        suites.push_back({"seven-vertex-sweep", ok,
                          ok ? "degree window, bounds, conjecture: zero exceptions on 1866256 graphs"
                             : seven.first_failure});
    }
    suites.push_back(check_path_formula());
    suites.push_back(check_complete_graphs());
    suites.push_back(check_star_cutedge_family());
    suites.push_back(check_corona_family());
    suites.push_back(check_triangle_tail_needs_four());
    suites.push_back(check_tree_bounds(200, 3, 12, seed));
    suites.push_back(check_verifier_oracle(1000, 9, seed, 5));
    suites.push_back(check_solver_random(500, seed));
    suites.push_back(check_spanning_tree_bound(100, seed));

    bool all_ok = true;
    if (report.as_json) {
        json arr = json::array();
        for (const auto& s : suites) {
            arr.push_back({{"suite", s.name}, {"pass", s.pass}, {"details", s.details}});
            all_ok = all_ok && s.pass;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& s : suites) {
            std::printf("%-28s %s  %s\n", s.name.c_str(), s.pass ? "PASS" : "FAIL",
                        s.details.c_str());
            all_ok = all_ok && s.pass;
        }
        std::printf("%s\n", all_ok ? "all suites pass" : "SUITE FAILURES PRESENT");
    }
    return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conflict-free vertex-connection toolkit"};
    app.require_subcommand(1);

    InputOptions in;
    ReportOptions report;
    SolveOptions solve_opts;
    long long max_k = 0, node_budget = 0;
    int threads = 1;
    int regress_max_n = 6;
    int ruler_n = 0;
    int marked_vertex = 0;
    std::string coloring_file;
    std::string construction_name;
    std::string generate_spec;

    auto add_input_flags = [&](CLI::App* cmd) {
        cmd->add_option("--input", in.input, "graph file, or - for stdin")
            ->capture_default_str();
        cmd->add_option("--format", in.format, "input format: g6 or edgelist")
            ->check(CLI::IsMember({"g6", "edgelist"}))
            ->capture_default_str();
        cmd->add_option("--gen", in.gen,
                        "generator spec instead of a file, e.g. \"path 7\", \"corona 4 2\", "
                        "\"random_tree 10 42 5\", \"all_connected 5\", \"all_trees 9\"");
        cmd->add_option("--seed", in.seed, "seed for random generator specs")
            ->capture_default_str();
    };
    auto add_report_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--json", report.as_json, "machine-readable JSON report");
        cmd->add_flag("--csv", report.as_csv, "CSV report");
    };
    auto add_solve_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-k", max_k, "cap the color search at this k");
        cmd->add_option("--node-budget", node_budget, "abort search after this many nodes");
        cmd->add_option("--threads", threads, "worker threads across input graphs")
            ->check(CLI::Range(1, 256))
            ->capture_default_str();
    };

    CLI::App* solve = app.add_subcommand("solve", "compute exact values for input graphs");
    add_input_flags(solve);
    add_report_flags(solve);
    add_solve_flags(solve);
    solve->add_flag("--strict-bounds", report.strict_bounds,
                    "report the diametral-path tree lower bound");

    CLI::App* verify = app.add_subcommand("verify", "check a coloring against a graph");
    add_input_flags(verify);
    add_report_flags(verify);
    verify->add_option("--coloring", coloring_file, "coloring file, or - for stdin")
        ->required();

    CLI::App* construct =
        app.add_subcommand("construct", "emit a named construction's coloring");
    construct->add_option("name", construction_name,
                          "ruler | two-connected | one-cut | star-cutedges | corona | "
                          "tree-level | tree-ranking")
        ->required();
    add_input_flags(construct);
    add_report_flags(construct);
    construct->add_option("--n", ruler_n, "path length for the ruler construction");
    construct->add_option("--w", marked_vertex,
                          "marked vertex for the two-connected construction");

    CLI::App* bounds = app.add_subcommand("bounds", "report lower/upper bounds per graph");
    add_input_flags(bounds);
    add_report_flags(bounds);
    bounds->add_flag("--strict-bounds", report.strict_bounds,
                     "use the diametral-path tree lower bound");

    CLI::App* generate = app.add_subcommand("generate", "emit graphs as graph6 lines");
    generate->add_option("--gen", generate_spec, "family spec, e.g. \"all_connected 5\"")
        ->required();
    generate->add_option("--seed", in.seed, "seed for random specs")->capture_default_str();

    CLI::App* regress = app.add_subcommand("regress", "run the invariant suites");
    regress->add_option("--max-n", regress_max_n, "exhaustive sweep ceiling (at most 7)")
        ->capture_default_str();
    regress->add_option("--seed", in.seed, "seed for the randomized suites")
        ->capture_default_str();
    add_report_flags(regress);

    CLI::App* conjecture =
        app.add_subcommand("conjecture", "test value <= path bound over a graph stream");
    add_input_flags(conjecture);
    add_report_flags(conjecture);
    add_solve_flags(conjecture);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitInputError;
    }

    solve_opts.max_k = static_cast<int>(max_k);
    solve_opts.node_budget = static_cast<std::uint64_t>(node_budget);

    try {
        if (*solve) return cmd_solve(in, report, solve_opts, threads);
        if (*verify) return cmd_verify(in, coloring_file, report);
        if (*construct)
            return cmd_construct(construction_name, in, ruler_n, marked_vertex, report);
        if (*bounds) return cmd_bounds(in, report);
        if (*generate) return cmd_generate(generate_spec, in.seed);
        if (*regress) return cmd_regress(regress_max_n, in.seed, report);
        if (*conjecture) return cmd_conjecture(in, report, solve_opts, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
