#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tricent/graph.hpp"
#include "tricent/triangle.hpp"

namespace tricent {

enum class Method {
    triangle,
    triangle_basic,
    triangle_algebraic,
    triangle_parallel,
    triangle_mapreduce,
    degree,
    closeness,
    betweenness,
    eigenvector,
    pagerank,
};

std::string_view method_name(Method m);

enum class Status {
    ok,
    triangle_free,   // Δ(G) = 0, every score is 0
    not_converged,   // iterative measure hit its iteration cap
};

struct CentralityVector {
    std::vector<double> scores;
    Method method = Method::triangle;
    Status status = Status::ok;
    std::uint64_t total_triangles = 0;
    std::uint64_t iterations = 0;
};

// TC(v) = (x/3 + y) / Δ(G), evaluated as (x + 3y) / (3Δ(G)) over integers.
CentralityVector tc_from_triangles(const Graph& g, const TriangleStats& stats, const TriangleNeighborhood& nbh);
CentralityVector tc_from_triangles(const OrderedAdjacency& adj, const TriangleStats& stats, const TriangleMarks& marks);

// Shared final step. `core[v]` is Δ(v) + Σ Δ(u) over triangle neighbors and
// `all[v]` is Σ Δ(u) over every neighbor.
CentralityVector tc_finalize(const std::vector<std::uint64_t>& delta, const std::vector<std::uint64_t>& core,
                             const std::vector<std::uint64_t>& all, std::uint64_t total, Method method);
double tc_score(std::uint64_t delta_v, std::uint64_t core, std::uint64_t all, std::uint64_t total);

CentralityVector triangle_centrality(const Graph& g);
CentralityVector triangle_centrality_basic(const Graph& g);

enum class ObservationFamily {
    clique,
    bridge,           // vertex joined to one vertex of each of p copies of K_k
    disjoint,         // vertex in one of p disjoint copies of K_k
    chain,
    ring,
    single_triangle,  // one triangle plus pendant trees
};

enum class ObservationRole {
    any,
    bridge,
    member,
    inner_joiner,
    end_joiner,
    inner_member,
    end_member,
    joiner,
    triangle_vertex,
    neighbor,
};

struct ObservationParams {
    int p = 1;
    int k = 3;
    ObservationRole role = ObservationRole::any;
};

Rational closed_form_tc(ObservationFamily family, const ObservationParams& params);

}  // namespace tricent
