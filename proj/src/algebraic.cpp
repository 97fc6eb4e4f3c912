#include "tricent/algebraic.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "tricent/triangle.hpp"

namespace tricent {

SparseMatrix::SparseMatrix(VertexId n, std::vector<std::uint64_t> offsets, std::vector<VertexId> cols,
                           std::vector<std::int64_t> values)
    : offsets_(std::move(offsets)), cols_(std::move(cols)), values_(std::move(values)) {
    if (offsets_.size() != static_cast<std::size_t>(n) + 1 || cols_.size() != values_.size() ||
        offsets_.back() != cols_.size())
        throw InputError("inconsistent CSR arrays");
}

std::int64_t SparseMatrix::at(VertexId i, VertexId j) const {
    auto c = row_cols(i);
    auto it = std::lower_bound(c.begin(), c.end(), j);
    if (it == c.end() || *it != j) return 0;
    return values_[offsets_[i] + (it - c.begin())];
}

bool SparseMatrix::is_symmetric() const {
    for (VertexId i = 0; i < rows(); ++i) {
        auto c = row_cols(i);
        auto v = row_values(i);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (at(c[k], i) != v[k]) return false;
    }
    return true;
}

std::vector<std::int64_t> SparseMatrix::multiply(std::span<const std::int64_t> x) const {
    std::vector<std::int64_t> y(rows(), 0);
    for (VertexId i = 0; i < rows(); ++i) {
        auto c = row_cols(i);
        auto v = row_values(i);
        for (std::size_t k = 0; k < c.size(); ++k) y[i] += v[k] * x[c[k]];
    }
    return y;
}

std::vector<std::int64_t> SparseMatrix::row_sums() const {
    std::vector<std::int64_t> s(rows(), 0);
    for (VertexId i = 0; i < rows(); ++i) {
        auto v = row_values(i);
        s[i] = std::accumulate(v.begin(), v.end(), std::int64_t{0});
    }
    return s;
}

SparseMatrix adjacency_matrix(const Graph& g) {
    return SparseMatrix(g.num_vertices(), g.offsets(), g.adjacency(),
                        std::vector<std::int64_t>(g.adjacency().size(), 1));
}

SparseMatrix build_triangle_matrix(const Graph& g) {
    const VertexId n = g.num_vertices();
    const auto adj = build_abbreviated_adjacency(g);
    const auto r = triangle_neighbor(adj);
    const auto& t = r.stats.per_edge;

    std::vector<std::uint64_t> offsets(n + 1, 0);
    std::vector<VertexId> cols;
    std::vector<std::int64_t> values;
    std::vector<std::pair<VertexId, std::int64_t>> row;
    for (VertexId v = 0; v < n; ++v) {
        row.clear();
        auto nv = adj.all(v);
        for (std::size_t i = 0; i < nv.size(); ++i) {
            const auto count = t[adj.offset(v) + i];
            if (count > 0) row.emplace_back(nv[i], static_cast<std::int64_t>(count));
        }
        std::sort(row.begin(), row.end());
        for (auto [c, x] : row) {
            cols.push_back(c);
            values.push_back(x);
        }
        offsets[v + 1] = cols.size();
    }
    return SparseMatrix(n, std::move(offsets), std::move(cols), std::move(values));
}

CentralityVector tc_algebraic(const SparseMatrix& a, const SparseMatrix& t) {
    const VertexId n = a.rows();
    if (t.rows() != n) throw InputError("A and T differ in size");

    const std::vector<std::int64_t> ones(n, 1);
    const auto y = t.multiply(ones);
    const std::int64_t k = std::accumulate(y.begin(), y.end(), std::int64_t{0});

    CentralityVector c;
    c.method = Method::triangle_algebraic;
    c.scores.assign(n, 0.0);
    c.total_triangles = static_cast<std::uint64_t>(k / 6);
    if (k == 0) {
        c.status = Status::triangle_free;
        return c;
    }

    // Row i of X·y, merging the sorted rows of A and Ť and adding the diagonal.
    for (VertexId i = 0; i < n; ++i) {
        auto ac = a.row_cols(i);
        auto tc = t.row_cols(i);
        std::int64_t sum = y[i];
        std::size_t q = 0;
        for (VertexId j : ac) {
            while (q < tc.size() && tc[q] < j) ++q;
            const bool in_t = q < tc.size() && tc[q] == j;
            sum += (in_t ? 1 : 3) * y[j];
        }
        for (VertexId j : tc)
            if (!std::binary_search(ac.begin(), ac.end(), j)) throw InputError("pattern of T is not contained in A");
        c.scores[i] = static_cast<double>(sum) / static_cast<double>(k);
    }
    return c;
}

CentralityVector triangle_centrality_algebraic(const Graph& g) {
    return tc_algebraic(adjacency_matrix(g), build_triangle_matrix(g));
}

TriangleIdentities triangle_identities(const SparseMatrix& t) {
    TriangleIdentities id;
    id.per_vertex.resize(t.rows());
    std::int64_t grand = 0;
    const auto sums = t.row_sums();
    for (VertexId i = 0; i < t.rows(); ++i) {
        if (sums[i] < 0 || sums[i] % 2 != 0) throw ConsistencyError("row sum of T is not an even count");
        id.per_vertex[i] = static_cast<std::uint64_t>(sums[i] / 2);
        grand += sums[i];
    }
    if (grand % 6 != 0) throw ConsistencyError("sum of T is not a multiple of six");
    id.total = static_cast<std::uint64_t>(grand / 6);
    return id;
}

void dump_coo(const SparseMatrix& m, std::ostream& out) {
    for (VertexId i = 0; i < m.rows(); ++i) {
        auto c = m.row_cols(i);
        auto v = m.row_values(i);
        for (std::size_t k = 0; k < c.size(); ++k) out << i + 1 << ' ' << c[k] + 1 << ' ' << v[k] << '\n';
    }
}

}  // namespace tricent
