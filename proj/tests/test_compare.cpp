#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "test_support.hpp"
#include "tricent/compare.hpp"
#include "tricent/fixtures.hpp"

using namespace tricent;

namespace {

Ranking from_scores(std::vector<double> s) {
    CentralityVector c;
    c.scores = std::move(s);
    return rank_vertices(c);
}

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// All-pairs distances and shortest-path counts by repeated relaxation.
struct PathTable {
    std::vector<std::vector<std::int64_t>> dist;
    std::vector<std::vector<double>> count;
};

PathTable path_table(const Graph& g) {
    const VertexId n = g.num_vertices();
    PathTable t{std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, kInf)),
                std::vector<std::vector<double>>(n, std::vector<double>(n, 0))};
    for (VertexId s = 0; s < n; ++s) {
        t.dist[s][s] = 0;
        t.count[s][s] = 1;
        for (std::int64_t d = 1; d < n; ++d)
            for (VertexId v = 0; v < n; ++v) {
                if (t.dist[s][v] != kInf) continue;
                double paths = 0;
                for (VertexId u : g.neighbors(v))
                    if (t.dist[s][u] == d - 1) paths += t.count[s][u];
                if (paths > 0) {
                    t.dist[s][v] = d;
                    t.count[s][v] = paths;
                }
            }
    }
    return t;
}

std::vector<double> betweenness_oracle(const Graph& g) {
    const VertexId n = g.num_vertices();
    auto t = path_table(g);
    std::vector<double> bc(n, 0);
    for (VertexId s = 0; s < n; ++s)
        for (VertexId e = s + 1; e < n; ++e) {
            if (t.dist[s][e] == kInf) continue;
            for (VertexId v = 0; v < n; ++v) {
                if (v == s || v == e || t.dist[s][v] == kInf || t.dist[v][e] == kInf) continue;
                if (t.dist[s][v] + t.dist[v][e] == t.dist[s][e]) bc[v] += t.count[s][v] * t.count[v][e] / t.count[s][e];
            }
        }
    return bc;
}

std::vector<double> closeness_oracle(const Graph& g) {
    const VertexId n = g.num_vertices();
    auto t = path_table(g);
    std::vector<double> cc(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        double sum = 0, reach = 0;
        for (VertexId u = 0; u < n; ++u)
            if (u != v && t.dist[v][u] != kInf) {
                sum += static_cast<double>(t.dist[v][u]);
                reach += 1;
            }
        cc[v] = sum > 0 ? reach / sum : 0.0;
    }
    return cc;
}

std::vector<std::vector<Ranking>> table2_rankings() {
    std::vector<std::vector<Ranking>> out;
    for (const auto& f : {figure_1a(), figure_1b(), figure_1c(), figure_1d()}) {
        std::vector<Ranking> row;
        for (Measure m : kMeasures) row.push_back(rank_vertices(compute_measure(f.graph, m)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

TEST_CASE("degree centrality") {
    auto s = degree_centrality(testing::star(4));
    CHECK(s.scores == std::vector<double>{4, 1, 1, 1, 1});
    CHECK(rank_vertices(s).rank[0] == 1);
    auto k = rank_vertices(degree_centrality(testing::complete(5)));
    for (auto r : k.rank) CHECK(r == 1);
}

TEST_CASE("closeness centrality") {
    auto k3 = closeness_centrality(testing::complete(3));
    for (double x : k3.scores) CHECK(x == doctest::Approx(1.0));
    auto p3 = closeness_centrality(testing::path(3));
    CHECK(p3.scores[1] == doctest::Approx(1.0));
    CHECK(p3.scores[0] == doctest::Approx(2.0 / 3.0));
    auto iso = closeness_centrality(Graph::from_edges(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}}));
    CHECK(iso.scores[2] == 0.0);
    CHECK(iso.scores[0] == doctest::Approx(1.0));

    for (const auto& g : testing::random_suite(60, 30, 81)) {
        auto want = closeness_oracle(g);
        auto got = closeness_centrality(g);
        for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(got.scores[v] == doctest::Approx(want[v]).epsilon(1e-12));
    }
}

TEST_CASE("betweenness centrality") {
    auto s = betweenness_centrality(testing::star(4));
    CHECK(s.scores[0] == doctest::Approx(6.0));
    for (VertexId v = 1; v <= 4; ++v) CHECK(s.scores[v] == 0.0);
    auto p = betweenness_centrality(testing::path(3));
    CHECK(p.scores == std::vector<double>{0, 1, 0});

    for (const auto& g : testing::random_suite(60, 30, 82)) {
        auto want = betweenness_oracle(g);
        auto got = betweenness_centrality(g);
        for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(got.scores[v] == doctest::Approx(want[v]).epsilon(1e-9));
    }
}

TEST_CASE("eigenvector centrality") {
    auto k = eigenvector_centrality(testing::complete(5));
    for (double x : k.scores) CHECK(x == doctest::Approx(1.0 / std::sqrt(5.0)));

    auto graphs = testing::random_suite(40, 40, 83);
    graphs.push_back(testing::star(6));  // bipartite, exercises the shifted iteration
    for (const auto& f : testing::static_fixtures()) graphs.push_back(f.graph);
    for (const auto& g : graphs) {
        if (g.num_edges() == 0) continue;
        auto ev = eigenvector_centrality(g);
        CHECK(ev.status == Status::ok);
        double norm = 0;
        for (double x : ev.scores) {
            CHECK(x >= 0.0);
            norm += x * x;
        }
        CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-9);
    }

    // A·x = λ·x on a connected graph.
    auto g = bundled("karate").graph;
    auto x = eigenvector_centrality(g).scores;
    std::vector<double> ax(x.size(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId u : g.neighbors(v)) ax[v] += x[u];
    const double lambda = std::inner_product(ax.begin(), ax.end(), x.begin(), 0.0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(std::abs(ax[v] - lambda * x[v]) <= 1e-7);
}

TEST_CASE("pagerank") {
    auto k = pagerank(testing::complete(4));
    for (double x : k.scores) CHECK(x == doctest::Approx(0.25));
    auto two = pagerank(disjoint_cliques(2, 3).graph);
    for (double x : two.scores) CHECK(x == doctest::Approx(1.0 / 6.0));

    auto graphs = testing::random_suite(40, 40, 84);
    for (const auto& f : testing::static_fixtures()) graphs.push_back(f.graph);
    for (const auto& g : graphs) {
        auto pr = pagerank(g);
        CHECK(pr.status == Status::ok);
        const double sum = std::accumulate(pr.scores.begin(), pr.scores.end(), 0.0);
        CHECK(std::abs(sum - 1.0) <= 1e-9);

        // Fixed point of the damped walk, with dangling mass spread evenly.
        const double n = g.num_vertices();
        double dangling = 0;
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) == 0) dangling += pr.scores[v];
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            double in = 0;
            for (VertexId u : g.neighbors(v)) in += pr.scores[u] / static_cast<double>(g.degree(u));
            CHECK(std::abs(pr.scores[v] - ((1 - 0.85) / n + 0.85 * (in + dangling / n))) <= 1e-9);
        }
    }
}

TEST_CASE("competition ranking with label-ordered ties") {
    auto r = from_scores({0.5, 0.5, 0.1});
    CHECK(r.rank == std::vector<std::uint32_t>{1, 1, 3});
    CHECK(r.order == std::vector<VertexId>{0, 1, 2});
    auto same = from_scores({2, 2, 2, 2});
    for (auto x : same.rank) CHECK(x == 1);
    auto near = from_scores({0.1, 1.0, 1.0 + 1e-12, 0.3});
    CHECK(near.order == std::vector<VertexId>{1, 2, 3, 0});
    CHECK(near.rank[1] == 1);
    CHECK(near.rank[2] == 1);
    CHECK(near.groups.size() == 3);
}

TEST_CASE("ranking order is unchanged by positive scaling") {
    for (const auto& g : testing::random_suite(50, 40, 90)) {
        auto c = triangle_centrality(g);
        auto base = rank_vertices(c);
        for (double factor : {0.001, 3.0, 1e6}) {
            auto scaled = c;
            for (double& x : scaled.scores) x *= factor;
            auto r = rank_vertices(scaled);
            CHECK(r.order == base.order);
            CHECK(r.groups == base.groups);
        }
    }
}

TEST_CASE("karate ranks 14 first under TC") {
    auto f = bundled("karate");
    CHECK(rank_vertices(triangle_centrality(f.graph)).rank[f.vertex("14")] == 1);
}

TEST_CASE("top-k Jaccard") {
    std::vector<double> a(20), b(20), c(20);
    for (int i = 0; i < 20; ++i) {
        a[i] = 20 - i;                     // top 10 is 0..9
        b[i] = i;                          // top 10 is 10..19
        c[i] = (i >= 5 && i < 15) ? 1 : 0; // top 10 is 5..14
    }
    auto ra = from_scores(a), rb = from_scores(b), rc = from_scores(c);
    CHECK(top_k_jaccard(ra, ra) == Rational(1));
    CHECK(top_k_jaccard(ra, rb) == Rational(0));
    CHECK(top_k_jaccard(ra, rc) == Rational(1, 3));
    CHECK(top_k_jaccard(rc, ra) == top_k_jaccard(ra, rc));
    CHECK_THROWS_AS(top_k_jaccard(from_scores({1, 2}), from_scores({2, 1})), InputError);

    // Ten-element sets only admit c/(20-c).
    for (const auto& g : testing::random_suite(40, 40, 91)) {
        if (g.num_vertices() < 10) continue;
        auto x = rank_vertices(triangle_centrality(g));
        auto y = rank_vertices(degree_centrality(g));
        auto j = top_k_jaccard(x, y);
        CHECK(j >= Rational(0));
        CHECK(j <= Rational(1));
        bool admissible = false;
        for (int cnt = 0; cnt <= 10; ++cnt) admissible = admissible || j == Rational(cnt, 20 - cnt);
        CHECK(admissible);
        CHECK(top_k_jaccard(y, x) == j);
    }
}

TEST_CASE("rank of the center vertex under each measure") {
    // Rows follow figures 1a to 1d; columns follow kMeasures (TC BC CC DC EV PR).
    const std::uint32_t expected[4][6] = {
        {1, 1, 1, 1, 1, 7},
        {1, 1, 1, 25, 25, 25},
        {1, 2, 1, 2, 2, 2},
        {1, 2, 2, 2, 1, 2},
    };
    const std::vector<Fixture> figs{figure_1a(), figure_1b(), figure_1c(), figure_1d()};
    auto table = table2_rankings();
    for (std::size_t f = 0; f < 4; ++f)
        for (std::size_t m = 0; m < kMeasures.size(); ++m)
            CHECK_MESSAGE(table[f][m].rank[figs[f].vertex("a")] == expected[f][m],
                          figs[f].name << " " << measure_name(kMeasures[m]));
}

TEST_CASE("best Jaccard competitor walks down the list on ties") {
    auto self = from_scores({4, 3, 2, 1});
    SUBCASE("earlier position wins") {
        auto a = from_scores({3, 0, 4, 1});  // top 2: 2, 0
        auto b = from_scores({4, 0, 1, 3});  // top 2: 0, 3
        auto m = best_jaccard_competitor({self, a, b}, 0, 2);
        CHECK(m.measure == 2);
        CHECK(m.jaccard == Rational(1, 3));
    }
    SUBCASE("a miss moves on to the next node") {
        auto a = from_scores({0, 3, 4, 1});  // top 2: 2, 1
        auto b = from_scores({0, 4, 1, 3});  // top 2: 1, 3
        auto m = best_jaccard_competitor({self, a, b}, 0, 2);
        CHECK(m.measure == 2);
    }
    SUBCASE("a strictly higher Jaccard wins outright") {
        auto a = from_scores({4, 3, 0, 0});
        auto b = from_scores({4, 0, 0, 3});
        CHECK(best_jaccard_competitor({self, b, a}, 0, 2).measure == 2);
    }
    CHECK_THROWS_AS(best_jaccard_competitor({self}, 0, 2), InputError);
}

TEST_CASE("agreement dot matrix") {
    // Graph 0: all three measures pick vertex 0. Graph 1: measure 0 alone picks vertex 2.
    std::vector<std::vector<Ranking>> r{
        {from_scores({3, 1, 0}), from_scores({5, 1, 1}), from_scores({1, 0, 0})},
        {from_scores({0, 1, 3}), from_scores({0, 4, 1}), from_scores({2, 3, 1})},
    };
    auto rep = agreement_dot_matrix(r);
    REQUIRE(rep.matrices.size() == 3);
    const auto& m0 = rep.matrices[0];
    CHECK(m0.columns == std::vector<std::size_t>{1, 2});
    CHECK(m0.dots[0] == std::vector<bool>{true, true});
    CHECK(m0.dots[1] == std::vector<bool>{false, false});
    CHECK(m0.full_rows == 1);
    CHECK(m0.empty_rows == 1);
    CHECK(m0.column_sums == std::vector<std::size_t>{1, 1});
    CHECK(m0.percent_agreement == doctest::Approx(50.0));
    CHECK(rep.matrices[1].dots[1] == std::vector<bool>{false, true});
    CHECK(rep.similarity[1][2] == 2);
    CHECK(rep.similarity[0][1] == rep.similarity[1][0]);

    std::vector<std::vector<Ranking>> ragged{{from_scores({1})}, {}};
    CHECK_THROWS_AS(agreement_dot_matrix(ragged), InputError);
}
