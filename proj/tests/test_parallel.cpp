#include <doctest.h>

#include <cmath>
#include <cstring>

#include "test_support.hpp"
#include "tricent/centrality.hpp"
#include "tricent/parallel.hpp"
#include "tricent/triangle.hpp"

using namespace tricent;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

}  // namespace

TEST_CASE("any worker count reproduces the sequential result bit for bit") {
    auto graphs = testing::random_suite(120, 64, 77);
    for (const auto& f : testing::static_fixtures()) graphs.push_back(f.graph);
    for (const auto& g : graphs) {
        const auto seq = triangle_centrality(g);
        const auto ref = triangle_neighbor(build_abbreviated_adjacency(g));
        for (unsigned w : {1u, 2u, 3u, 4u, 7u, 8u}) {
            for (std::size_t chunk : {std::size_t{1}, std::size_t{5}, std::size_t{64}}) {
                auto r = parallel_triangle_centrality(g, {w, chunk});
                CHECK(bitwise_equal(r.centrality.scores, seq.scores));
                CHECK(r.centrality.status == seq.status);
                CHECK(r.stats.per_vertex == ref.stats.per_vertex);
                CHECK(r.stats.total == ref.stats.total);
                CHECK(r.marks == ref.marks.bits());
                CHECK(r.counters.triangles == ref.stats.total);
                CHECK(r.counters.merge_comparisons == ref.work.merge_comparisons);
                CHECK(r.counters.pair_tests == ref.work.pair_tests);
                CHECK(r.counters.intersections == ref.work.intersections);
            }
        }
    }
}

TEST_CASE("K6 on four workers") {
    auto r = parallel_triangle_centrality(testing::complete(6), {4, 2});
    for (double s : r.centrality.scores) CHECK(s == 1.0);
    CHECK(r.centrality.method == Method::triangle_parallel);
}

TEST_CASE("empty and triangle-free inputs") {
    auto e = parallel_triangle_centrality(Graph{}, {3, 4});
    CHECK(e.centrality.scores.empty());
    CHECK(e.counters.merge_comparisons == 0);
    CHECK(e.counters.triangles == 0);
    auto p = parallel_triangle_centrality(testing::path(10), {2, 3});
    CHECK(p.centrality.status == Status::triangle_free);
}

TEST_CASE("invalid configuration") {
    CHECK_THROWS_AS(parallel_triangle_centrality(testing::path(3), {0, 4}), InputError);
    CHECK_THROWS_AS(parallel_triangle_centrality(testing::path(3), {2, 0}), InputError);
    CHECK(default_workers() >= 1);
}

TEST_CASE("work stays under the m·sqrt(2m) bound") {
    auto graphs = testing::random_suite(100, 64, 5150);
    for (const auto& f : testing::static_fixtures()) graphs.push_back(f.graph);
    for (const auto& g : graphs) {
        if (g.num_edges() == 0) continue;
        auto r = parallel_triangle_centrality(g, {4, 8});
        auto rep = work_report(r.counters, g);
        CHECK(rep.merge_ratio <= 4.0);
        CHECK(rep.merge_ratio <= rep.pair_test_ratio);
    }
    auto karate = bundled("karate").graph;
    auto rep = work_report(parallel_triangle_centrality(karate, {2, 8}).counters, karate);
    CHECK(rep.bound == doctest::Approx(78.0 * std::sqrt(156.0)));
    CHECK(rep.pair_test_ratio < 1.0);
}

TEST_CASE("work report text") {
    auto g = testing::complete(4);
    auto r = parallel_triangle_centrality(g, {1, 64});
    auto text = format_work_report(r.counters, g);
    CHECK(text.find("triangles_detected\t4\n") != std::string::npos);
    CHECK(text.find("merge_comparisons\t") != std::string::npos);
    CHECK(text.find("time_") != std::string::npos);
}
