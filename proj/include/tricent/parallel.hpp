#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tricent/centrality.hpp"
#include "tricent/graph.hpp"
#include "tricent/triangle.hpp"

namespace tricent {

unsigned default_workers();

struct ParallelConfig {
    unsigned workers = default_workers();
    // Vertices per work unit; units are dealt to workers round-robin.
    std::size_t chunk = 64;
};

struct WorkCounters {
    std::uint64_t intersections = 0;
    std::uint64_t pair_tests = 0;
    std::uint64_t merge_comparisons = 0;
    std::uint64_t triangles = 0;
    std::vector<std::pair<std::string, double>> phase_seconds;
};

struct ParallelResult {
    CentralityVector centrality;
    WorkCounters counters;
    TriangleStats stats;              // per_edge left empty
    std::vector<std::uint8_t> marks;  // aligned like TriangleMarks::bits()
};

// Same scores as triangle_centrality, bit for bit, for any worker count.
ParallelResult parallel_triangle_centrality(const Graph& g, const ParallelConfig& cfg = {});

struct WorkReport {
    double bound = 0;             // m·√(2m)
    double pair_test_ratio = 0;   // pair_tests / bound
    double merge_ratio = 0;       // merge_comparisons / bound
};

WorkReport work_report(const WorkCounters& counters, const Graph& g);
std::string format_work_report(const WorkCounters& counters, const Graph& g);

}  // namespace tricent
