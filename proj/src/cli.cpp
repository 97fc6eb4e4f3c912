#include "tricent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "tricent/algebraic.hpp"
#include "tricent/compare.hpp"
#include "tricent/fixtures.hpp"
#include "tricent/mapreduce.hpp"
#include "tricent/parallel.hpp"
#include "tricent/triangle.hpp"

namespace tricent {

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAlgorithms{"main", "basic", "algebraic", "parallel", "mapreduce"};

Graph load(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return read_graph(in);
        std::ifstream file(path);
        if (!file) throw IoFailure(fmt::format("cannot read {}", path));
        return read_graph(file);
    } catch (const InputError& e) {
        throw IoFailure(fmt::format("{}: {}", path, e.what()));
    }
}

void write_scores_tsv(const Graph& g, const CentralityVector& c, std::ostream& out) {
    const auto r = rank_vertices(c);
    for (VertexId v : r.order) out << g.label(v) << '\t' << format_score(c.scores[v]) << '\n';
}

void write_scores_json(const Graph& g, const CentralityVector& c, std::ostream& out) {
    const auto r = rank_vertices(c);
    nlohmann::json j;
    j["method"] = std::string(method_name(c.method));
    j["triangles"] = c.total_triangles;
    j["triangle_free"] = c.status == Status::triangle_free;
    j["scores"] = nlohmann::json::array();
    for (VertexId v : r.order)
        j["scores"].push_back({{"vertex", g.label(v)}, {"score", c.scores[v]}, {"rank", r.rank[v]}});
    out << j.dump(2) << '\n';
}

unsigned threads_from_env() {
    const char* env = std::getenv("TC_THREADS");
    if (!env || !*env) return default_workers();
    unsigned value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0)
        throw CLI::ValidationError("TC_THREADS", "must be a positive integer");
    return value;
}

void print_round_table(const std::array<mr::RoundStats, 4>& rounds, std::ostream& err) {
    err << "round\tmap_in\tmap_out\treduce_out\tbroadcast\tbits\n";
    for (const auto& r : rounds)
        err << r.round << '\t' << r.map_in << '\t' << r.map_out << '\t' << r.reduce_out << '\t' << r.broadcast << '\t'
            << r.bits << '\n';
}

int cmd_compute(const Graph& g, const std::string& algo, unsigned threads, bool stats, const std::string& format,
                const std::string& dump_neighbors, const std::string& dump_matrix, std::ostream& out,
                std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CentralityVector c;
    std::string detail;
    if (algo == "main" && stats) {
        const auto adj = build_abbreviated_adjacency(g);
        const auto r = triangle_neighbor(adj);
        c = tc_from_triangles(adj, r.stats, r.marks);
        WorkCounters w;
        w.intersections = r.work.intersections;
        w.pair_tests = r.work.pair_tests;
        w.merge_comparisons = r.work.merge_comparisons;
        w.triangles = r.work.detections;
        detail = format_work_report(w, g);
    } else if (algo == "parallel") {
        ParallelConfig cfg;
        cfg.workers = threads;
        auto r = parallel_triangle_centrality(g, cfg);
        c = std::move(r.centrality);
        detail = fmt::format("workers\t{}\n", threads) + format_work_report(r.counters, g);
    } else if (algo == "mapreduce") {
        auto r = mr::run_mapreduce_tc(g);
        c = std::move(r.centrality);
        std::ostringstream table;
        print_round_table(r.rounds, table);
        detail = table.str();
    } else {
        c = compute_by_name(g, algo, threads);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (format == "json")
        write_scores_json(g, c, out);
    else
        write_scores_tsv(g, c, out);

    if (!dump_neighbors.empty()) {
        std::ofstream f(dump_neighbors);
        if (!f) throw IoFailure(fmt::format("cannot write {}", dump_neighbors));
        const auto adj = build_abbreviated_adjacency(g);
        const auto r = triangle_neighbor(adj);
        dump_triangle_neighborhood(g, materialize_triangle_neighbors(adj, r.marks), f);
    }
    if (!dump_matrix.empty()) {
        std::ofstream f(dump_matrix);
        if (!f) throw IoFailure(fmt::format("cannot write {}", dump_matrix));
        dump_coo(build_triangle_matrix(g), f);
    }

    if (stats) {
        err << fmt::format("algorithm\t{}\nvertices\t{}\nedges\t{}\ntriangles\t{}\n", algo, g.num_vertices(),
                           g.num_edges(), c.total_triangles);
        if (c.status == Status::triangle_free) err << "status\ttriangle-free\n";
        err << fmt::format("seconds\t{:.6f}\n", secs);
        err << detail;
    }
    return kExitOk;
}

int cmd_compare(const Graph& g, std::size_t k, std::ostream& out, std::ostream& err) {
    if (g.num_vertices() == 0) {
        err << "graph is empty; nothing to compare\n";
        return kExitOk;
    }
    if (g.num_vertices() < k) {
        err << fmt::format("note: k reduced from {} to {} (vertex count)\n", k, g.num_vertices());
        k = g.num_vertices();
    }
    std::vector<Ranking> rankings;
    for (Measure m : kMeasures) {
        const auto c = compute_measure(g, m);
        if (c.status == Status::not_converged) err << fmt::format("warning: {} did not converge\n", measure_name(m));
        rankings.push_back(rank_vertices(c));
    }

    out << fmt::format("measure\ttop\ttop-{}\n", k);
    for (std::size_t i = 0; i < kMeasures.size(); ++i) {
        out << measure_name(kMeasures[i]) << '\t' << g.label(rankings[i].order.front()) << '\t';
        const auto top = top_k(rankings[i], k);
        for (std::size_t j = 0; j < top.size(); ++j) out << (j ? " " : "") << g.label(top[j]);
        out << '\n';
    }

    out << fmt::format("\njaccard@{}", k);
    for (Measure m : kMeasures) out << '\t' << measure_name(m);
    out << '\n';
    for (std::size_t i = 0; i < kMeasures.size(); ++i) {
        out << measure_name(kMeasures[i]);
        for (std::size_t j = 0; j < kMeasures.size(); ++j) {
            const auto jac = top_k_jaccard(rankings[i], rankings[j], k);
            out << '\t' << jac.numerator() << '/' << jac.denominator();
        }
        out << '\n';
    }

    out << "\nmeasure\tbest_match\tjaccard\n";
    for (std::size_t i = 0; i < kMeasures.size(); ++i) {
        const auto best = best_jaccard_competitor(rankings, i, k);
        out << measure_name(kMeasures[i]) << '\t' << measure_name(kMeasures[best.measure]) << '\t'
            << best.jaccard.numerator() << '/' << best.jaccard.denominator() << '\n';
    }
    return kExitOk;
}

int cmd_bench(const std::vector<std::string>& paths, const std::vector<std::string>& algos, unsigned threads,
              std::ostream& out, std::ostream& err) {
    out << "graph\tvertices\tedges\ttriangles\talgorithm\tseconds\tmax_diff\n";
    for (const auto& path : paths) {
        Graph g;
        try {
            std::istringstream none;
            g = load(path, none);
        } catch (const IoFailure& e) {
            err << "warning: skipping " << e.what() << '\n';
            continue;
        }
        std::vector<double> reference;
        for (const auto& algo : algos) {
            const auto start = std::chrono::steady_clock::now();
            const auto c = compute_by_name(g, algo, threads);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (reference.empty()) reference = c.scores;
            double diff = 0;
            for (std::size_t v = 0; v < c.scores.size(); ++v)
                diff = std::max(diff, std::abs(c.scores[v] - reference[v]));
            out << fmt::format("{}\t{}\t{}\t{}\t{}\t{:.6f}\t{:.3g}\n", path, g.num_vertices(), g.num_edges(),
                               c.total_triangles, algo, secs, diff);
        }
    }
    return kExitOk;
}

}  // namespace

std::string format_score(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, ptr);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

CentralityVector compute_by_name(const Graph& g, const std::string& algo, unsigned threads) {
    if (algo == "main") return triangle_centrality(g);
    if (algo == "basic") return triangle_centrality_basic(g);
    if (algo == "algebraic") return triangle_centrality_algebraic(g);
    if (algo == "parallel") {
        ParallelConfig cfg;
        cfg.workers = threads;
        return parallel_triangle_centrality(g, cfg).centrality;
    }
    if (algo == "mapreduce") return mr::run_mapreduce_tc(g).centrality;
    throw InputError(fmt::format("unknown algorithm {}", algo));
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Triangle centrality and related graph measures", "tc"};
    app.require_subcommand(1);

    std::string input;
    std::string algo = "main";
    std::string format = "tsv";
    std::string dump_neighbors, dump_matrix;
    unsigned threads = 0;
    bool stats = false;
    std::size_t k = 10;
    std::string family;
    GenParams gp;
    std::vector<std::string> bench_paths;
    std::vector<std::string> bench_algos = kAlgorithms;

    auto* compute = app.add_subcommand("compute", "Triangle centrality of every vertex");
    compute->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember(kAlgorithms));
    compute->add_option("--threads", threads, "Worker threads for --algo parallel")->check(CLI::PositiveNumber);
    compute->add_flag("--stats", stats, "Print counts, timings and work counters to stderr");
    compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    compute->add_option("--dump-neighbors", dump_neighbors, "Write triangle neighbor lists to this file");
    compute->add_option("--dump-matrix", dump_matrix, "Write the triangle matrix in coordinate form to this file");
    compute->add_option("input", input, "Edge list file, or - for stdin")->required();

    auto* compare = app.add_subcommand("compare", "Compare rankings of six centrality measures");
    compare->add_option("--k", k, "Size of the top-k sets")->check(CLI::PositiveNumber);
    compare->add_option("input", input, "Edge list file, or - for stdin")->required();

    auto* mapreduce = app.add_subcommand("mapreduce", "Run the four-round MapReduce simulation");
    mapreduce->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    mapreduce->add_option("input", input, "Edge list file, or - for stdin")->required();

    auto* gen = app.add_subcommand("gen", "Write a generated or bundled graph as an edge list");
    gen->add_option("family", family, "Graph family")->required()->check(CLI::IsMember(generator_families()));
    gen->add_option("--n", gp.n, "Clique size for 'clique'");
    gen->add_option("--p", gp.p, "Number of clique copies");
    gen->add_option("--k", gp.k, "Size of each clique copy");
    gen->add_option("--q", gp.q, "Pendants per triangle vertex for 'single-triangle'");

    auto* bench = app.add_subcommand("bench", "Time each algorithm on edge list files");
    bench->add_option("--algo", bench_algos, "Algorithms to run (repeat or comma-separate)")
        ->allow_extra_args(false)
        ->delimiter(',')
        ->check(CLI::IsMember(kAlgorithms));
    bench->add_option("--threads", threads, "Worker threads for the parallel algorithm")->check(CLI::PositiveNumber);
    bench->add_option("files", bench_paths, "Edge list files");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (threads == 0) threads = threads_from_env();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "tc: " << e.what() << "\n" << "Run 'tc --help' for usage.\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(load(input, in), algo, threads, stats, format, dump_neighbors, dump_matrix, out, err);
        if (compare->parsed()) return cmd_compare(load(input, in), k, out, err);
        if (mapreduce->parsed()) {
            const auto g = load(input, in);
            const auto r = mr::run_mapreduce_tc(g);
            if (format == "json")
                write_scores_json(g, r.centrality, out);
            else
                write_scores_tsv(g, r.centrality, out);
            print_round_table(r.rounds, err);
            return kExitOk;
        }
        if (gen->parsed()) {
            write_edge_list(generate_fixture(family, gp).graph, out);
            return kExitOk;
        }
        if (bench->parsed()) return cmd_bench(bench_paths, bench_algos, threads, out, err);
    } catch (const IoFailure& e) {
        err << "tc: " << e.what() << '\n';
        return kExitIo;
    } catch (const InputError& e) {
        err << "tc: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "tc: internal consistency check failed: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace tricent
