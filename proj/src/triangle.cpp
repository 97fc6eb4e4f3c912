#include "tricent/triangle.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

namespace tricent {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::unordered_set<std::uint64_t> edge_set(const Graph& g) {
    std::unordered_set<std::uint64_t> edges;
    edges.reserve(g.num_edges() * 2);
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) edges.insert(edge_key(u, v));
    return edges;
}

}  // namespace

TriangleNeighborhood::TriangleNeighborhood(VertexId n, std::vector<std::pair<VertexId, VertexId>> pairs) {
    const std::size_t one_way = pairs.size();
    pairs.reserve(one_way * 2);
    for (std::size_t i = 0; i < one_way; ++i) pairs.emplace_back(pairs[i].second, pairs[i].first);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    offsets_.assign(n + 1, 0);
    for (auto [v, u] : pairs) ++offsets_[v + 1];
    for (VertexId v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    list_.reserve(pairs.size());
    for (auto [v, u] : pairs) list_.push_back(u);
}

void dump_triangle_neighborhood(const Graph& g, const TriangleNeighborhood& nbh, std::ostream& out) {
    for (VertexId v = 0; v < nbh.num_vertices(); ++v) {
        out << g.label(v) << ':';
        for (VertexId u : nbh.neighbors(v)) out << ' ' << g.label(u);
        out << '\n';
    }
}

TriangleNeighborResult triangle_neighbor(const OrderedAdjacency& adj) {
    const VertexId n = adj.num_vertices();
    TriangleNeighborResult r;
    r.stats.per_vertex.assign(n, 0);
    r.stats.per_edge.assign(adj.flat().size(), 0);
    r.marks = TriangleMarks(adj);
    auto& delta = r.stats.per_vertex;
    auto& t = r.stats.per_edge;

    for (VertexId v = 0; v < n; ++v) {
        auto pv = adj.higher(v);
        const auto base_v = adj.offset(v);
        for (std::size_t i = 0; i < pv.size(); ++i) {
            const VertexId u = pv[i];
            auto pu = adj.higher(u);
            const auto base_u = adj.offset(u);
            ++r.work.intersections;
            r.work.pair_tests += pv.size() + pu.size();

            bool found = false;
            std::size_t l = 0, q = 0;
            while (l < pv.size() && q < pu.size()) {
                ++r.work.merge_comparisons;
                if (pv[l] < pu[q]) {
                    ++l;
                } else if (pu[q] < pv[l]) {
                    ++q;
                } else {
                    const VertexId w = pv[l];
                    r.marks.mark(v, l);
                    r.marks.mark(u, q);
                    ++delta[v];
                    ++delta[u];
                    ++delta[w];
                    ++r.stats.total;
                    ++r.work.detections;
                    ++t[base_v + i];
                    ++t[base_v + l];
                    ++t[base_u + q];
                    found = true;
                    ++l;
                    ++q;
                }
            }
            if (found) r.marks.mark(v, i);
        }
    }

    // Copy each prefix count to the reverse orientation. lower(u) is sorted and
    // v ascends, so the matching entries of lower(u) are met in order.
    std::vector<std::uint64_t> cursor(n);
    for (VertexId u = 0; u < n; ++u) cursor[u] = adj.offset(u) + adj.higher_size(u);
    for (VertexId v = 0; v < n; ++v) {
        auto pv = adj.higher(v);
        for (std::size_t i = 0; i < pv.size(); ++i) t[cursor[pv[i]]++] = t[adj.offset(v) + i];
    }
    return r;
}

TriangleNeighborhood materialize_triangle_neighbors(const OrderedAdjacency& adj, const TriangleMarks& marks) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 0; v < adj.num_vertices(); ++v) {
        auto pv = adj.higher(v);
        for (std::size_t i = 0; i < pv.size(); ++i)
            if (marks.marked(v, i)) pairs.emplace_back(v, pv[i]);
    }
    return TriangleNeighborhood(adj.num_vertices(), std::move(pairs));
}

TriangleListing triangle_neighbor_alt(const OrderedAdjacency& adj) {
    const VertexId n = adj.num_vertices();
    // Every triangle is met twice; counting whole detections and halving at
    // the end replaces the half increments.
    std::vector<std::uint64_t> twice(n, 0);
    std::uint64_t twice_total = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<std::uint8_t> seen;

    for (VertexId v = 0; v < n; ++v) {
        auto pv = adj.higher(v);
        auto nv = adj.all(v);
        seen.assign(pv.size(), 0);
        for (std::size_t idx = 0; idx < nv.size(); ++idx) {
            const VertexId u = nv[idx];
            const bool in_prefix = idx < pv.size();
            auto pu = adj.higher(u);
            bool found = false;
            std::size_t l = 0, q = 0;
            while (l < pv.size() && q < pu.size()) {
                if (pv[l] < pu[q]) {
                    ++l;
                } else if (pu[q] < pv[l]) {
                    ++q;
                } else {
                    const VertexId w = pv[l];
                    ++twice[v];
                    ++twice[u];
                    ++twice[w];
                    ++twice_total;
                    if (!seen[l]) {
                        seen[l] = 1;
                        pairs.emplace_back(v, w);
                    }
                    found = true;
                    ++l;
                    ++q;
                }
            }
            if (found && in_prefix && !seen[idx]) {
                seen[idx] = 1;
                pairs.emplace_back(v, u);
            }
        }
    }

    TriangleListing out;
    out.stats.per_vertex.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        if (twice[v] % 2 != 0) throw ConsistencyError("odd detection count at a vertex");
        out.stats.per_vertex[v] = twice[v] / 2;
    }
    if (twice_total % 2 != 0) throw ConsistencyError("odd total detection count");
    out.stats.total = twice_total / 2;
    out.neighborhood = TriangleNeighborhood(n, std::move(pairs));
    return out;
}

TriangleStats hash_neighbor_pair_count(const Graph& g, const OrderedAdjacency& adj) {
    const auto edges = edge_set(g);
    TriangleStats s;
    s.per_vertex.assign(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto pv = adj.higher(v);
        for (std::size_t i = 0; i < pv.size(); ++i) {
            for (std::size_t j = i + 1; j < pv.size(); ++j) {
                if (edges.count(edge_key(pv[i], pv[j]))) {
                    ++s.per_vertex[v];
                    ++s.per_vertex[pv[i]];
                    ++s.per_vertex[pv[j]];
                    ++s.total;
                }
            }
        }
    }
    return s;
}

TriangleListing hash_neighbor_pair_tri_neighbors(const Graph& g, const OrderedAdjacency& adj) {
    const auto edges = edge_set(g);
    const auto& rank = adj.order().rank;
    TriangleListing out;
    out.stats.per_vertex.assign(g.num_vertices(), 0);
    std::vector<std::pair<VertexId, VertexId>> pairs;

    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        for (VertexId u : adj.higher(v)) {
            bool t = false;
            for (VertexId w : g.neighbors(v)) {
                if (w == u || !edges.count(edge_key(u, w))) continue;
                if (rank[u] < rank[w]) {
                    ++out.stats.per_vertex[v];
                    ++out.stats.per_vertex[u];
                    ++out.stats.per_vertex[w];
                    ++out.stats.total;
                }
                if (!t) {
                    t = true;
                    pairs.emplace_back(v, u);
                }
            }
        }
    }
    out.neighborhood = TriangleNeighborhood(g.num_vertices(), std::move(pairs));
    return out;
}

TriangleNeighborhood hash_intersection_tri_neighbors(const OrderedAdjacency& adj) {
    const VertexId n = adj.num_vertices();
    std::vector<std::unordered_set<VertexId>> prefix(n);
    for (VertexId v = 0; v < n; ++v) {
        auto pv = adj.higher(v);
        prefix[v].insert(pv.begin(), pv.end());
    }

    std::vector<std::unordered_set<VertexId>> found(n);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : adj.higher(v)) {
            const auto& small = prefix[v].size() <= prefix[u].size() ? prefix[v] : prefix[u];
            const auto& large = &small == &prefix[v] ? prefix[u] : prefix[v];
            for (VertexId w : small) {
                if (!large.count(w)) continue;
                found[v].insert(u);
                found[v].insert(w);
                found[u].insert(v);
                found[u].insert(w);
                found[w].insert(v);
                found[w].insert(u);
            }
        }
    }

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : found[v]) pairs.emplace_back(v, u);
    return TriangleNeighborhood(n, std::move(pairs));
}

TriangleListing brute_force_triangles(const Graph& g, VertexId limit) {
    const VertexId n = g.num_vertices();
    if (n > limit) throw InputError("brute-force triangle oracle refuses graphs above " + std::to_string(limit) + " vertices");
    std::vector<std::uint8_t> a(static_cast<std::size_t>(n) * n, 0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1;
    auto edge = [&](VertexId x, VertexId y) { return a[static_cast<std::size_t>(x) * n + y] != 0; };

    TriangleListing out;
    out.stats.per_vertex.assign(n, 0);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) {
            if (!edge(i, j)) continue;
            for (VertexId k = j + 1; k < n; ++k) {
                if (!edge(i, k) || !edge(j, k)) continue;
                ++out.stats.per_vertex[i];
                ++out.stats.per_vertex[j];
                ++out.stats.per_vertex[k];
                ++out.stats.total;
                pairs.emplace_back(i, j);
                pairs.emplace_back(i, k);
                pairs.emplace_back(j, k);
            }
        }
    out.neighborhood = TriangleNeighborhood(n, std::move(pairs));
    return out;
}

}  // namespace tricent
