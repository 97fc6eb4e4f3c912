#include "tricent/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include <fmt/format.h>

namespace tricent {

unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

struct WorkerState {
    std::vector<std::uint64_t> delta;
    std::vector<std::uint64_t> marked;  // positions in the flat ordered array
    std::vector<std::uint64_t> core;
    TriangleWork work;
};

// Calls fn(worker, first, last) for every chunk, each worker owning the
// chunks congruent to its index. Assignment does not depend on timing.
template <typename Fn>
void for_chunks(unsigned workers, std::size_t chunk, VertexId n, Fn fn) {
    const std::size_t units = (static_cast<std::size_t>(n) + chunk - 1) / chunk;
    auto body = [&](unsigned w) {
        for (std::size_t c = w; c < units; c += workers) {
            const auto first = static_cast<VertexId>(c * chunk);
            const auto last = static_cast<VertexId>(std::min<std::size_t>(n, (c + 1) * chunk));
            fn(w, first, last);
        }
    };
    if (workers == 1) {
        body(0);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
}

}  // namespace

ParallelResult parallel_triangle_centrality(const Graph& g, const ParallelConfig& cfg) {
    if (cfg.workers == 0) throw InputError("worker count must be at least 1");
    if (cfg.chunk == 0) throw InputError("chunk size must be at least 1");
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };

    ParallelResult out;
    auto& counters = out.counters;
    const VertexId n = g.num_vertices();
    const unsigned workers = cfg.workers;

    auto t0 = clock::now();
    const auto adj = build_abbreviated_adjacency(g);
    auto t1 = clock::now();
    counters.phase_seconds.emplace_back("order", seconds(t0, t1));

    std::vector<WorkerState> state(workers);
    for (auto& s : state) s.delta.assign(n, 0);

    for_chunks(workers, cfg.chunk, n, [&](unsigned w, VertexId first, VertexId last) {
        auto& s = state[w];
        for (VertexId v = first; v < last; ++v) {
            auto pv = adj.higher(v);
            const auto base_v = adj.offset(v);
            for (std::size_t i = 0; i < pv.size(); ++i) {
                const VertexId u = pv[i];
                auto pu = adj.higher(u);
                const auto base_u = adj.offset(u);
                ++s.work.intersections;
                s.work.pair_tests += pv.size() + pu.size();
                bool found = false;
                std::size_t l = 0, q = 0;
                while (l < pv.size() && q < pu.size()) {
                    ++s.work.merge_comparisons;
                    if (pv[l] < pu[q]) {
                        ++l;
                    } else if (pu[q] < pv[l]) {
                        ++q;
                    } else {
                        ++s.delta[v];
                        ++s.delta[u];
                        ++s.delta[pv[l]];
                        ++s.work.detections;
                        s.marked.push_back(base_v + l);
                        s.marked.push_back(base_u + q);
                        found = true;
                        ++l;
                        ++q;
                    }
                }
                if (found) s.marked.push_back(base_v + i);
            }
        }
    });
    auto t2 = clock::now();
    counters.phase_seconds.emplace_back("detect", seconds(t1, t2));

    // Merge in worker order.
    std::vector<std::uint64_t> delta(n, 0);
    std::vector<std::uint8_t> marks(adj.flat().size(), 0);
    std::uint64_t total = 0;
    for (auto& s : state) {
        for (VertexId v = 0; v < n; ++v) delta[v] += s.delta[v];
        for (auto pos : s.marked) marks[pos] = 1;
        total += s.work.detections;
        counters.intersections += s.work.intersections;
        counters.pair_tests += s.work.pair_tests;
        counters.merge_comparisons += s.work.merge_comparisons;
        counters.triangles += s.work.detections;
        s.delta = {};
        s.marked = {};
    }
    auto t3 = clock::now();
    counters.phase_seconds.emplace_back("merge", seconds(t2, t3));

    for (auto& s : state) s.core.assign(n, 0);
    for_chunks(workers, cfg.chunk, n, [&](unsigned w, VertexId first, VertexId last) {
        auto& core = state[w].core;
        for (VertexId v = first; v < last; ++v) {
            auto pv = adj.higher(v);
            for (std::size_t i = 0; i < pv.size(); ++i) {
                if (!marks[adj.offset(v) + i]) continue;
                core[v] += delta[pv[i]];
                core[pv[i]] += delta[v];
            }
        }
    });
    std::vector<std::uint64_t> core(delta);
    for (auto& s : state)
        for (VertexId v = 0; v < n; ++v) core[v] += s.core[v];
    out.stats.per_vertex = delta;
    out.stats.total = total;
    out.marks = marks;
    auto t4 = clock::now();
    counters.phase_seconds.emplace_back("core-sum", seconds(t3, t4));

    auto& c = out.centrality;
    c.method = Method::triangle_parallel;
    c.total_triangles = total;
    c.status = total == 0 ? Status::triangle_free : Status::ok;
    c.scores.assign(n, 0.0);
    for_chunks(workers, cfg.chunk, n, [&](unsigned, VertexId first, VertexId last) {
        for (VertexId v = first; v < last; ++v) {
            std::uint64_t all = 0;
            for (VertexId u : adj.all(v)) all += delta[u];
            c.scores[v] = tc_score(delta[v], core[v], all, total);
        }
    });
    auto t5 = clock::now();
    counters.phase_seconds.emplace_back("finalize", seconds(t4, t5));
    return out;
}

WorkReport work_report(const WorkCounters& counters, const Graph& g) {
    WorkReport r;
    const double m = static_cast<double>(g.num_edges());
    r.bound = m * std::sqrt(2.0 * m);
    if (r.bound > 0) {
        r.pair_test_ratio = static_cast<double>(counters.pair_tests) / r.bound;
        r.merge_ratio = static_cast<double>(counters.merge_comparisons) / r.bound;
    }
    return r;
}

std::string format_work_report(const WorkCounters& counters, const Graph& g) {
    const auto r = work_report(counters, g);
    std::string s;
    s += fmt::format("intersections\t{}\n", counters.intersections);
    s += fmt::format("pair_tests\t{}\n", counters.pair_tests);
    s += fmt::format("merge_comparisons\t{}\n", counters.merge_comparisons);
    s += fmt::format("triangles_detected\t{}\n", counters.triangles);
    s += fmt::format("pair_tests/(m*sqrt(2m))\t{:.6f}\n", r.pair_test_ratio);
    s += fmt::format("merge_comparisons/(m*sqrt(2m))\t{:.6f}\n", r.merge_ratio);
    for (const auto& [phase, secs] : counters.phase_seconds) s += fmt::format("time_{}\t{:.6f}\n", phase, secs);
    return s;
}

}  // namespace tricent
