#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

#include "tricent/centrality.hpp"
#include "tricent/graph.hpp"

namespace tricent::mr {

struct VertexPair {
    VertexId first = 0;
    VertexId second = 0;
    auto operator<=>(const VertexPair&) const = default;
};

// Pair keys are always stored with first < second.
VertexPair make_pair_key(VertexId a, VertexId b);

using Key = std::variant<VertexId, VertexPair>;

struct Zero {
    auto operator<=>(const Zero&) const = default;
};
struct FlaggedVertex {
    VertexId vertex = 0;
    bool flag = false;
    auto operator<=>(const FlaggedVertex&) const = default;
};
struct FlaggedCount {
    std::uint64_t count = 0;
    bool flag = false;
    auto operator<=>(const FlaggedCount&) const = default;
};

using Value = std::variant<VertexId, Zero, FlaggedVertex, FlaggedCount, double>;

struct Record {
    Key key;
    Value value;
    bool operator==(const Record&) const = default;
};

// Number of 64-bit words a record occupies on the wire.
std::size_t field_count(const Record& r);
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kMaxRecordBits = 3 * kWordBits;

struct RoundStats {
    int round = 0;
    std::uint64_t map_in = 0;
    std::uint64_t map_out = 0;
    std::uint64_t reduce_out = 0;
    std::uint64_t broadcast = 0;  // side-channel records
    std::uint64_t bits = 0;       // reduce output plus broadcast
};

struct DegreeEdge {
    VertexId v = 0;
    std::uint64_t dv = 0;
    VertexId u = 0;
    std::uint64_t du = 0;
};

// Both orientations of every edge, each endpoint tagged with its degree.
std::vector<DegreeEdge> degree_annotated_edges(const Graph& g);

struct RoundOutput {
    std::vector<Record> records;
    RoundStats stats;
};

RoundOutput round1(const std::vector<DegreeEdge>& input);
RoundOutput round2(const std::vector<Record>& input);

struct Round3Output {
    std::vector<Record> records;
    RoundStats stats;
    std::vector<std::uint64_t> per_vertex;  // Δ(v) as seen by each reducer
    std::uint64_t total = 0;                // broadcast Δ(G)
};

Round3Output round3(const std::vector<Record>& input, const std::vector<DegreeEdge>& edges, VertexId n);

struct Round4Output {
    CentralityVector centrality;
    RoundStats stats;
};

Round4Output round4(const std::vector<Record>& input, std::uint64_t total, VertexId n);

struct MapReduceResult {
    CentralityVector centrality;
    std::array<RoundStats, 4> rounds;
    std::uint64_t total_bits() const;
};

MapReduceResult run_mapreduce_tc(const Graph& g);

}  // namespace tricent::mr
