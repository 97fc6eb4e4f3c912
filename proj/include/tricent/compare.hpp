#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tricent/centrality.hpp"
#include "tricent/graph.hpp"

namespace tricent {

CentralityVector degree_centrality(const Graph& g);
// (c − 1) / Σ distances within the vertex's component of size c; 0 if isolated.
CentralityVector closeness_centrality(const Graph& g);
CentralityVector betweenness_centrality(const Graph& g);

struct IterationConfig {
    double tol = 1e-10;
    std::uint64_t max_iter = 10000;
};

// Power iteration on A, falling back to A + I when A does not settle.
CentralityVector eigenvector_centrality(const Graph& g, const IterationConfig& cfg = {});
CentralityVector pagerank(const Graph& g, double damping = 0.85, const IterationConfig& cfg = {});

struct Ranking {
    std::vector<VertexId> order;        // best first
    std::vector<double> scores;         // by vertex
    std::vector<std::uint32_t> rank;    // competition rank by vertex, 1-based
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [first, last) spans of `order`
};

inline constexpr double kTieEpsilon = 1e-9;

// Scores within a relative `eps` of a group's leader share its rank; each
// group lists its vertices in label order.
Ranking rank_vertices(const CentralityVector& c, double eps = kTieEpsilon);

std::vector<VertexId> top_k(const Ranking& r, std::size_t k);
Rational top_k_jaccard(const Ranking& a, const Ranking& b, std::size_t k = 10);

enum class Measure { tc, bc, cc, dc, ev, pr };
inline constexpr std::array<Measure, 6> kMeasures{Measure::tc, Measure::bc, Measure::cc,
                                                  Measure::dc, Measure::ev, Measure::pr};
std::string_view measure_name(Measure m);
CentralityVector compute_measure(const Graph& g, Measure m);

// Index of the measure (other than `self`) whose top-k set is most similar to
// that of `self`. Ties go to the measure that ranks self's highest node
// highest, walking down self's list while candidates tie or miss.
struct BestMatch {
    std::size_t measure = 0;
    Rational jaccard;
};
BestMatch best_jaccard_competitor(const std::vector<Ranking>& by_measure, std::size_t self, std::size_t k = 10);

struct DotMatrix {
    std::size_t measure = 0;
    std::vector<std::size_t> columns;     // the other measures
    std::vector<std::vector<bool>> dots;  // [graph][column]
    std::vector<std::size_t> column_sums;
    std::size_t empty_rows = 0;  // graphs where this measure's top vertex is unique to it
    std::size_t full_rows = 0;
    double percent_agreement = 0;
};

struct AgreementReport {
    std::vector<DotMatrix> matrices;  // one per measure
    std::vector<std::vector<std::size_t>> similarity;  // [measure][measure] agreeing graphs
};

// rankings[graph][measure]; agreement means the first vertex of both orders
// is the same.
AgreementReport agreement_dot_matrix(const std::vector<std::vector<Ranking>>& rankings);

}  // namespace tricent
