#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "tricent/centrality.hpp"
#include "tricent/fixtures.hpp"
#include "tricent/triangle.hpp"

using namespace tricent;

namespace {

struct Triple {
    VertexId n;
    std::uint64_t m;
    std::uint64_t triangles;
};

Triple triple_of(const Graph& g) { return {g.num_vertices(), g.num_edges(), brute_force_triangles(g).stats.total}; }

void check_triple(std::string_view name, Triple want) {
    auto got = triple_of(bundled(name).graph);
    CHECK_MESSAGE(got.n == want.n, name);
    CHECK_MESSAGE(got.m == want.m, name);
    CHECK_MESSAGE(got.triangles == want.triangles, name);
}

}  // namespace

TEST_CASE("disjoint cliques 2x4") {
    auto t = triple_of(disjoint_cliques(2, 4).graph);
    CHECK(t.n == 8);
    CHECK(t.m == 12);
    CHECK(t.triangles == 8);
}

TEST_CASE("bundled graph sizes and triangle counts") {
    check_triple("borgatti", {19, 32, 13});
    check_triple("karate", {34, 78, 45});
    check_triple("dolphins", {62, 159, 95});
}

// The hijacker network as drawn has 152 edges and 130 triangles; the published
// counts are 153 and 133. No single missing edge accounts for both, so this
// stays red until a verified edge list is available.
TEST_CASE("hijacker network matches its published size and triangle count") {
    check_triple("hijackers", {62, 153, 133});
}

TEST_CASE("bundled names and text") {
    CHECK(bundled_names() == std::vector<std::string>{"borgatti", "karate", "dolphins", "hijackers"});
    CHECK(bundled_text("karate").substr(0, 1) == "#");
    CHECK_THROWS_AS(bundled("nope"), InputError);
}

TEST_CASE("generator shapes") {
    auto b = bridge_cliques(4, 6);
    CHECK(b.graph.num_vertices() == 25);
    CHECK(b.graph.num_edges() == 4 * 15 + 4);
    CHECK(b.graph.degree(b.vertex("a")) == 4);

    auto ch = clique_chain(4, 5);
    CHECK(ch.graph.num_vertices() == 4 * 5 - 3);
    CHECK(ch.roles.at("inner_joiner").size() == 1);
    CHECK(ch.roles.at("end_joiner").size() == 2);
    CHECK(ch.roles.at("end_member").size() == 2 * 4);
    CHECK(ch.roles.at("inner_member").size() == 2 * 3);

    auto ring = clique_ring(5, 4);
    CHECK(ring.graph.num_vertices() == 5 * 4 - 5);
    CHECK(ring.graph.num_edges() == 5 * 6);
    CHECK(ring.roles.at("joiner").size() == 5);

    auto st = single_triangle(3);
    CHECK(st.graph.num_vertices() == 12);
    CHECK(st.graph.num_edges() == 12);

    CHECK(clique(1).graph.num_vertices() == 1);
    CHECK(clique(6).graph.num_edges() == 15);
}

TEST_CASE("small drawn examples") {
    auto a = figure_1a();
    CHECK(a.graph.num_vertices() == 31);
    CHECK(a.graph.degree(a.vertex("a")) == 6);
    auto c = figure_1c();
    CHECK(c.graph.num_vertices() == 18);
    auto d = figure_1d();
    CHECK(d.graph.num_vertices() == 18);
    auto f3 = figure_3();
    CHECK(f3.graph.num_vertices() == 7);
    CHECK(f3.graph.num_edges() == 9);
    CHECK(f3.roles.at("center") == std::vector<VertexId>{f3.vertex("v")});
}

TEST_CASE("invalid generator parameters") {
    CHECK_THROWS_AS(clique(0), InputError);
    CHECK_THROWS_AS(disjoint_cliques(0, 3), InputError);
    CHECK_THROWS_AS(bridge_cliques(2, 1), InputError);
    CHECK_THROWS_AS(clique_chain(1, 4), InputError);
    CHECK_THROWS_AS(clique_chain(3, 2), InputError);
    CHECK_THROWS_AS(clique_ring(2, 4), InputError);
    CHECK_THROWS_AS(single_triangle(-1), InputError);
    CHECK_THROWS_AS(generate_fixture("hexagon", {}), InputError);
    CHECK_THROWS_AS(figure_3().vertex("zz"), InputError);
}

TEST_CASE("every family is reachable by name and round-trips through text") {
    for (const auto& name : generator_families()) {
        auto f = generate_fixture(name, {});
        CHECK_MESSAGE(f.graph.num_vertices() > 0, name);
        std::ostringstream out;
        write_edge_list(f.graph, out);
        std::istringstream in(out.str());
        CHECK_MESSAGE(read_graph(in) == f.graph, name);
    }
}

TEST_CASE("generated families meet their closed forms") {
    using F = ObservationFamily;
    using R = ObservationRole;
    GenParams gp;
    gp.p = 4;
    gp.k = 5;
    auto ring = generate_fixture("ring", gp);
    auto c = triangle_centrality(ring.graph);
    const double joiner = boost::rational_cast<double>(closed_form_tc(F::ring, {4, 5, R::joiner}));
    for (VertexId v : ring.roles.at("joiner")) CHECK(std::abs(c.scores[v] - joiner) <= 1e-12);

    auto single = generate_fixture("single-triangle", gp);
    for (double s : triangle_centrality(single.graph).scores) CHECK(s == 1.0);
}
