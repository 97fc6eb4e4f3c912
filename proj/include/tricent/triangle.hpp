#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "tricent/graph.hpp"

namespace tricent {

struct TriangleStats {
    std::vector<std::uint64_t> per_vertex;
    std::uint64_t total = 0;
    // Triangles on each edge, aligned with OrderedAdjacency::flat() (both
    // orientations). Empty when the producing routine does not track edges.
    std::vector<std::uint64_t> per_edge;
};

// One flag per entry of the flat ordered neighbor array; only the N_π(v)
// prefix entries are ever set.
class TriangleMarks {
public:
    TriangleMarks() = default;
    explicit TriangleMarks(const OrderedAdjacency& adj) : offsets_(adj.num_vertices() + 1), bits_(adj.flat().size(), 0) {
        for (VertexId v = 0; v < adj.num_vertices(); ++v) offsets_[v] = adj.offset(v);
        offsets_.back() = adj.flat().size();
    }

    bool marked(VertexId v, std::size_t i) const { return bits_[offsets_[v] + i] != 0; }
    void mark(VertexId v, std::size_t i) { bits_[offsets_[v] + i] = 1; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::vector<std::uint8_t>& bits() { return bits_; }

    bool operator==(const TriangleMarks&) const = default;

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint8_t> bits_;
};

// Symmetric triangle-neighbor lists N_Δ(v), each sorted by id.
class TriangleNeighborhood {
public:
    TriangleNeighborhood() : offsets_(1, 0) {}
    // Builds from unordered (v, u) pairs; each pair is added in both directions.
    TriangleNeighborhood(VertexId n, std::vector<std::pair<VertexId, VertexId>> pairs);

    VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size() - 1); }
    std::span<const VertexId> neighbors(VertexId v) const {
        return {list_.data() + offsets_[v], list_.data() + offsets_[v + 1]};
    }

    bool operator==(const TriangleNeighborhood&) const = default;

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> list_;
};

// `v: u1 u2 ...` per vertex using external labels.
void dump_triangle_neighborhood(const Graph& g, const TriangleNeighborhood& nbh, std::ostream& out);

struct TriangleWork {
    std::uint64_t intersections = 0;
    std::uint64_t pair_tests = 0;
    std::uint64_t merge_comparisons = 0;
    std::uint64_t detections = 0;
};

struct TriangleNeighborResult {
    TriangleStats stats;
    TriangleMarks marks;
    TriangleWork work;
};

// Hash-free detection over sorted N_π prefixes; each triangle is found once.
TriangleNeighborResult triangle_neighbor(const OrderedAdjacency& adj);

TriangleNeighborhood materialize_triangle_neighbors(const OrderedAdjacency& adj, const TriangleMarks& marks);

struct TriangleListing {
    TriangleStats stats;
    TriangleNeighborhood neighborhood;
};

// Variant that scans all of N(v) and meets each triangle twice.
TriangleListing triangle_neighbor_alt(const OrderedAdjacency& adj);

// Hash-set references.
TriangleStats hash_neighbor_pair_count(const Graph& g, const OrderedAdjacency& adj);
TriangleListing hash_neighbor_pair_tri_neighbors(const Graph& g, const OrderedAdjacency& adj);
TriangleNeighborhood hash_intersection_tri_neighbors(const OrderedAdjacency& adj);

inline constexpr VertexId kBruteForceLimit = 256;

// Enumerates every vertex triple. Refuses graphs above `limit` vertices.
TriangleListing brute_force_triangles(const Graph& g, VertexId limit = kBruteForceLimit);

}  // namespace tricent
