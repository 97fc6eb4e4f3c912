#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tricent/centrality.hpp"
#include "tricent/graph.hpp"

namespace tricent {

// Square CSR matrix with 64-bit integer values; columns sorted within rows.
class SparseMatrix {
public:
    SparseMatrix() : offsets_(1, 0) {}
    SparseMatrix(VertexId n, std::vector<std::uint64_t> offsets, std::vector<VertexId> cols,
                 std::vector<std::int64_t> values);

    VertexId rows() const { return static_cast<VertexId>(offsets_.size() - 1); }
    std::uint64_t nnz() const { return cols_.size(); }
    std::span<const VertexId> row_cols(VertexId i) const {
        return {cols_.data() + offsets_[i], cols_.data() + offsets_[i + 1]};
    }
    std::span<const std::int64_t> row_values(VertexId i) const {
        return {values_.data() + offsets_[i], values_.data() + offsets_[i + 1]};
    }
    std::int64_t at(VertexId i, VertexId j) const;

    bool is_symmetric() const;
    std::vector<std::int64_t> multiply(std::span<const std::int64_t> x) const;
    std::vector<std::int64_t> row_sums() const;

    bool operator==(const SparseMatrix&) const = default;

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> cols_;
    std::vector<std::int64_t> values_;
};

SparseMatrix adjacency_matrix(const Graph& g);

// T = A²∘A: t(i,j) is the number of triangles on edge {i,j}. Built from
// triangle enumeration rather than a matrix product.
SparseMatrix build_triangle_matrix(const Graph& g);

// C = (3A − 2Ť + I)·y / (1ᵀy) with y = T·1 and Ť the pattern of T.
CentralityVector tc_algebraic(const SparseMatrix& a, const SparseMatrix& t);
CentralityVector triangle_centrality_algebraic(const Graph& g);

struct TriangleIdentities {
    std::vector<std::uint64_t> per_vertex;  // ½ row sums
    std::uint64_t total = 0;                // ⅙ of the grand sum
};

TriangleIdentities triangle_identities(const SparseMatrix& t);

// `i j value` per nonzero, 1-based.
void dump_coo(const SparseMatrix& m, std::ostream& out);

}  // namespace tricent
