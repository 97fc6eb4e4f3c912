#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace tricent {

using VertexId = std::uint32_t;
using Rational = boost::rational<std::int64_t>;

// Malformed input or arguments outside an operation's domain.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug, not bad input.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using LabeledEdge = std::pair<std::string, std::string>;

// Simple undirected graph in compressed adjacency form. Internal ids are dense
// and follow the sort order of the external labels (numeric when every label
// is an integer, lexicographic otherwise). Neighbor ranges are sorted.
class Graph {
public:
    Graph() : offsets_(1, 0) {}

    // Edges may contain duplicates, both orientations and self-loops.
    static Graph from_labeled_edges(std::span<const LabeledEdge> edges);

    // Vertices 0..n-1 labelled 1..n.
    static Graph from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges);

    VertexId num_vertices() const { return static_cast<VertexId>(labels_.size()); }
    std::uint64_t num_edges() const { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    const std::vector<std::uint64_t>& offsets() const { return offsets_; }
    const std::vector<VertexId>& adjacency() const { return neighbors_; }

    bool has_edge(VertexId u, VertexId v) const;

    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;

    bool operator==(const Graph&) const = default;

private:
    Graph(std::vector<std::string> labels, std::vector<std::pair<VertexId, VertexId>> edges);

    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> neighbors_;
    std::vector<std::string> labels_;
};

Graph build_graph(std::span<const LabeledEdge> edges);

// One edge per line, two whitespace-separated labels, '#' starts a comment line.
std::vector<LabeledEdge> read_edge_list(std::istream& in);
Graph read_graph(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// π: ascending degree, ties by internal id (which is label order).
struct VertexOrder {
    std::vector<VertexId> rank;   // vertex -> position
    std::vector<VertexId> order;  // position -> vertex

    bool before(VertexId u, VertexId v) const { return rank[u] < rank[v]; }
};

VertexOrder degree_order(const Graph& g);

// Each vertex's neighbor range split into N_π(v) (the higher-ordered neighbors)
// followed by the lower-ordered ones. Both parts are sorted by id.
class OrderedAdjacency {
public:
    OrderedAdjacency(const Graph& g, VertexOrder pi);

    VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size() - 1); }
    std::uint64_t num_edges() const { return neighbors_.size() / 2; }

    std::span<const VertexId> all(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::span<const VertexId> higher(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + boundary_[v]};
    }
    std::span<const VertexId> lower(VertexId v) const {
        return {neighbors_.data() + boundary_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t higher_size(VertexId v) const { return boundary_[v] - offsets_[v]; }

    // Position of the first entry of v's range in the flat neighbor array.
    std::uint64_t offset(VertexId v) const { return offsets_[v]; }
    const std::vector<VertexId>& flat() const { return neighbors_; }
    const VertexOrder& order() const { return pi_; }

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint64_t> boundary_;
    std::vector<VertexId> neighbors_;
    VertexOrder pi_;
};

OrderedAdjacency build_abbreviated_adjacency(const Graph& g, const VertexOrder& pi);
OrderedAdjacency build_abbreviated_adjacency(const Graph& g);

// (1/m) Σ over edges of min(d(u), d(v)).
Rational average_degeneracy(const Graph& g);

}  // namespace tricent
