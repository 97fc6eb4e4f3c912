#include "tricent/centrality.hpp"

#include <unordered_set>

namespace tricent {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::triangle: return "main";
        case Method::triangle_basic: return "basic";
        case Method::triangle_algebraic: return "algebraic";
        case Method::triangle_parallel: return "parallel";
        case Method::triangle_mapreduce: return "mapreduce";
        case Method::degree: return "degree";
        case Method::closeness: return "closeness";
        case Method::betweenness: return "betweenness";
        case Method::eigenvector: return "eigenvector";
        case Method::pagerank: return "pagerank";
    }
    return "unknown";
}

double tc_score(std::uint64_t delta_v, std::uint64_t core, std::uint64_t all, std::uint64_t total) {
    if (total == 0) return 0.0;
    const std::uint64_t y = all - (core - delta_v);
    return static_cast<double>(core + 3 * y) / static_cast<double>(3 * total);
}

CentralityVector tc_finalize(const std::vector<std::uint64_t>& delta, const std::vector<std::uint64_t>& core,
                             const std::vector<std::uint64_t>& all, std::uint64_t total, Method method) {
    CentralityVector c;
    c.method = method;
    c.total_triangles = total;
    c.status = total == 0 ? Status::triangle_free : Status::ok;
    c.scores.resize(delta.size());
    for (std::size_t v = 0; v < delta.size(); ++v) c.scores[v] = tc_score(delta[v], core[v], all[v], total);
    return c;
}

namespace {

std::vector<std::uint64_t> neighbor_sums(const Graph& g, const std::vector<std::uint64_t>& delta) {
    std::vector<std::uint64_t> s(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId u : g.neighbors(v)) s[v] += delta[u];
    return s;
}

}  // namespace

CentralityVector tc_from_triangles(const Graph& g, const TriangleStats& stats, const TriangleNeighborhood& nbh) {
    const auto& delta = stats.per_vertex;
    std::vector<std::uint64_t> core(delta);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId u : nbh.neighbors(v)) core[v] += delta[u];
    return tc_finalize(delta, core, neighbor_sums(g, delta), stats.total, Method::triangle);
}

CentralityVector tc_from_triangles(const OrderedAdjacency& adj, const TriangleStats& stats, const TriangleMarks& marks) {
    const auto& delta = stats.per_vertex;
    const VertexId n = adj.num_vertices();
    std::vector<std::uint64_t> core(delta);
    for (VertexId v = 0; v < n; ++v) {
        auto pv = adj.higher(v);
        for (std::size_t i = 0; i < pv.size(); ++i) {
            if (!marks.marked(v, i)) continue;
            core[v] += delta[pv[i]];
            core[pv[i]] += delta[v];
        }
    }
    std::vector<std::uint64_t> all(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : adj.all(v)) all[v] += delta[u];
    return tc_finalize(delta, core, all, stats.total, Method::triangle);
}

CentralityVector triangle_centrality(const Graph& g) {
    const auto adj = build_abbreviated_adjacency(g);
    const auto r = triangle_neighbor(adj);
    return tc_from_triangles(adj, r.stats, r.marks);
}

CentralityVector triangle_centrality_basic(const Graph& g) {
    const VertexId n = g.num_vertices();
    const auto adj = build_abbreviated_adjacency(g);
    const auto& rank = adj.order().rank;

    std::unordered_set<std::uint64_t> edges;
    edges.reserve(g.num_edges() * 2);
    auto key = [](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | b;
    };
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) edges.insert(key(u, v));

    std::vector<std::uint64_t> delta(n, 0);
    std::uint64_t total = 0;
    std::vector<std::vector<VertexId>> tri(n);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : adj.higher(v)) {
            bool t = false;
            for (VertexId w : g.neighbors(v)) {
                if (w == u || !edges.count(key(u, w))) continue;
                if (rank[u] < rank[w]) {
                    ++delta[v];
                    ++delta[u];
                    ++delta[w];
                    ++total;
                }
                // The pair is recorded on the first witness of any order; the
                // triangle on {v, u} may have its third vertex below u.
                if (!t) {
                    t = true;
                    tri[v].push_back(u);
                    tri[u].push_back(v);
                }
            }
        }
    }

    std::vector<std::uint64_t> core(n);
    for (VertexId v = 0; v < n; ++v) {
        core[v] = delta[v];
        for (VertexId u : tri[v]) core[v] += delta[u];
    }
    return tc_finalize(delta, core, neighbor_sums(g, delta), total, Method::triangle_basic);
}

Rational closed_form_tc(ObservationFamily family, const ObservationParams& params) {
    const std::int64_t p = params.p;
    const std::int64_t k = params.k;
    auto bad = [] { return InputError("parameters outside the family's range"); };
    using R = ObservationRole;

    switch (family) {
        case ObservationFamily::clique:
            if (k < 3) throw bad();
            return Rational(1);
        case ObservationFamily::bridge:
            if (k < 3 || p < 1) throw bad();
            if (params.role == R::bridge) return Rational(3, k);
            if (params.role == R::member) return Rational(1, p);
            throw bad();
        case ObservationFamily::disjoint:
            if (k < 3 || p < 1) throw bad();
            return Rational(1, p);
        case ObservationFamily::chain:
            if (k < 3 || p < 3) throw bad();
            switch (params.role) {
                case R::inner_joiner:
                    if (p < 4) throw bad();
                    return Rational(2 * k + 2, p * k);
                case R::end_joiner: return Rational(2 * k + 1, p * k);
                case R::inner_member: return Rational(k + 2, p * k);
                case R::end_member: return Rational(k + 1, p * k);
                default: throw bad();
            }
        case ObservationFamily::ring:
            // With three copies the joiners close an extra triangle of their own.
            if (k < 3 || p < 4) throw bad();
            if (params.role == R::joiner) return Rational(2 * k + 2, p * k);
            if (params.role == R::member) return Rational(k + 2, p * k);
            throw bad();
        case ObservationFamily::single_triangle:
            if (params.role == R::triangle_vertex || params.role == R::neighbor || params.role == R::any)
                return Rational(1);
            throw bad();
    }
    throw bad();
}

}  // namespace tricent
