#include "tricent/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace tricent {

namespace {

bool is_integer_label(const std::string& s) {
    if (s.empty() || s.size() > 18) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::int64_t as_integer(const std::string& s) {
    std::int64_t value = 0;
    std::from_chars(s.data(), s.data() + s.size(), value);
    return value;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, std::vector<std::pair<VertexId, VertexId>> edges)
    : labels_(std::move(labels)) {
    const VertexId n = static_cast<VertexId>(labels_.size());

    std::vector<std::pair<VertexId, VertexId>> directed;
    directed.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    offsets_.assign(n + 1, 0);
    for (auto [u, v] : directed) ++offsets_[u + 1];
    for (VertexId v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    neighbors_.reserve(directed.size());
    for (auto [u, v] : directed) neighbors_.push_back(v);
}

Graph Graph::from_labeled_edges(std::span<const LabeledEdge> edges) {
    std::vector<std::string> labels;
    labels.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    if (std::all_of(labels.begin(), labels.end(), is_integer_label)) {
        // "007" and "7" are distinct labels; keep them apart but adjacent.
        std::stable_sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            return as_integer(a) < as_integer(b);
        });
    }

    std::unordered_map<std::string_view, VertexId> index;
    index.reserve(labels.size());
    for (VertexId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

    std::vector<std::pair<VertexId, VertexId>> ids;
    ids.reserve(edges.size());
    for (const auto& [a, b] : edges) ids.emplace_back(index.at(a), index.at(b));
    return Graph(std::move(labels), std::move(ids));
}

Graph Graph::from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges) {
    std::vector<std::string> labels(n);
    for (VertexId i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    }
    return Graph(std::move(labels), {edges.begin(), edges.end()});
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> Graph::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

Graph build_graph(std::span<const LabeledEdge> edges) { return Graph::from_labeled_edges(edges); }

std::vector<LabeledEdge> read_edge_list(std::istream& in) {
    std::vector<LabeledEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw InputError("line " + std::to_string(line_no) + ": expected two vertex labels");
        }
        edges.emplace_back(std::move(a), std::move(b));
    }
    if (in.bad()) throw InputError("read failed after line " + std::to_string(line_no));
    return edges;
}

Graph read_graph(std::istream& in) {
    auto edges = read_edge_list(in);
    return build_graph(edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
        }
    }
}

VertexOrder degree_order(const Graph& g) {
    const VertexId n = g.num_vertices();
    VertexOrder pi;
    pi.order.resize(n);
    for (VertexId v = 0; v < n; ++v) pi.order[v] = v;
    std::stable_sort(pi.order.begin(), pi.order.end(),
                     [&g](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
    pi.rank.resize(n);
    for (VertexId i = 0; i < n; ++i) pi.rank[pi.order[i]] = i;
    return pi;
}

OrderedAdjacency::OrderedAdjacency(const Graph& g, VertexOrder pi)
    : offsets_(g.offsets()), neighbors_(g.adjacency()), pi_(std::move(pi)) {
    const VertexId n = g.num_vertices();
    boundary_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        // Pointer exchange: i scans forward, j marks the end of the
        // higher-ordered block.
        auto j = offsets_[v];
        for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) {
            if (pi_.rank[neighbors_[i]] > pi_.rank[v]) {
                std::swap(neighbors_[i], neighbors_[j]);
                ++j;
            }
        }
        boundary_[v] = j;
        std::sort(neighbors_.begin() + offsets_[v], neighbors_.begin() + j);
        std::sort(neighbors_.begin() + j, neighbors_.begin() + offsets_[v + 1]);
    }
}

OrderedAdjacency build_abbreviated_adjacency(const Graph& g, const VertexOrder& pi) {
    return OrderedAdjacency(g, pi);
}

OrderedAdjacency build_abbreviated_adjacency(const Graph& g) { return OrderedAdjacency(g, degree_order(g)); }

Rational average_degeneracy(const Graph& g) {
    if (g.num_edges() == 0) throw InputError("average degeneracy is undefined for a graph without edges");
    std::int64_t sum = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u < v) sum += static_cast<std::int64_t>(std::min(g.degree(u), g.degree(v)));
        }
    }
    return Rational(sum, static_cast<std::int64_t>(g.num_edges()));
}

}  // namespace tricent
