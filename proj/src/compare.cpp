#include "tricent/compare.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>

namespace tricent {

CentralityVector degree_centrality(const Graph& g) {
    CentralityVector c;
    c.method = Method::degree;
    c.scores.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) c.scores[v] = static_cast<double>(g.degree(v));
    return c;
}

CentralityVector closeness_centrality(const Graph& g) {
    const VertexId n = g.num_vertices();
    CentralityVector c;
    c.method = Method::closeness;
    c.scores.assign(n, 0.0);
    std::vector<std::int64_t> dist(n, -1);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        std::int64_t total = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId v = queue[head];
            total += dist[v];
            for (VertexId u : g.neighbors(v)) {
                if (dist[u] >= 0) continue;
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
        if (queue.size() > 1) c.scores[s] = static_cast<double>(queue.size() - 1) / static_cast<double>(total);
    }
    return c;
}

CentralityVector betweenness_centrality(const Graph& g) {
    const VertexId n = g.num_vertices();
    CentralityVector c;
    c.method = Method::betweenness;
    c.scores.assign(n, 0.0);

    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<VertexId> stack;
    stack.reserve(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        stack.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        stack.push_back(s);
        // The BFS order doubles as the stack for the dependency pass.
        for (std::size_t head = 0; head < stack.size(); ++head) {
            const VertexId v = stack[head];
            for (VertexId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    stack.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
            }
        }
        for (std::size_t i = stack.size(); i-- > 0;) {
            const VertexId w = stack[i];
            for (VertexId v : g.neighbors(w))
                if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) c.scores[w] += delta[w];
        }
    }
    for (auto& x : c.scores) x /= 2.0;
    return c;
}

namespace {

// Returns true when the iteration settled within cfg.max_iter steps.
bool power_iterate(const Graph& g, bool shifted, const IterationConfig& cfg, std::vector<double>& x,
                   std::uint64_t& iterations) {
    const VertexId n = g.num_vertices();
    x.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> next(n);
    for (std::uint64_t it = 1; it <= cfg.max_iter; ++it) {
        for (VertexId v = 0; v < n; ++v) {
            double s = shifted ? x[v] : 0.0;
            for (VertexId u : g.neighbors(v)) s += x[u];
            next[v] = s;
        }
        double norm = 0;
        for (double s : next) norm += s * s;
        norm = std::sqrt(norm);
        if (norm == 0) return false;
        double diff = 0;
        for (VertexId v = 0; v < n; ++v) {
            next[v] /= norm;
            diff = std::max(diff, std::abs(next[v] - x[v]));
        }
        x.swap(next);
        iterations = it;
        if (diff < cfg.tol) return true;
    }
    return false;
}

}  // namespace

CentralityVector eigenvector_centrality(const Graph& g, const IterationConfig& cfg) {
    if (g.num_vertices() == 0) throw InputError("eigenvector centrality needs a non-empty graph");
    CentralityVector c;
    c.method = Method::eigenvector;
    std::uint64_t iterations = 0;
    bool ok = power_iterate(g, false, cfg, c.scores, iterations);
    c.iterations = iterations;
    if (!ok) {
        // Bipartite components make plain iteration oscillate; A + I has the
        // same eigenvectors with a strictly dominant top eigenvalue.
        ok = power_iterate(g, true, cfg, c.scores, iterations);
        c.iterations += iterations;
    }
    c.status = ok ? Status::ok : Status::not_converged;
    return c;
}

CentralityVector pagerank(const Graph& g, double damping, const IterationConfig& cfg) {
    const VertexId n = g.num_vertices();
    if (n == 0) throw InputError("pagerank needs a non-empty graph");
    CentralityVector c;
    c.method = Method::pagerank;
    c.status = Status::not_converged;
    std::vector<double> x(n, 1.0 / n), next(n);
    for (std::uint64_t it = 1; it <= cfg.max_iter; ++it) {
        double dangling = 0;
        for (VertexId v = 0; v < n; ++v)
            if (g.degree(v) == 0) dangling += x[v];
        const double base = (1.0 - damping) / n + damping * dangling / n;
        double diff = 0;
        for (VertexId v = 0; v < n; ++v) {
            double s = 0;
            for (VertexId u : g.neighbors(v)) s += x[u] / static_cast<double>(g.degree(u));
            next[v] = base + damping * s;
            diff = std::max(diff, std::abs(next[v] - x[v]));
        }
        x.swap(next);
        c.iterations = it;
        if (diff < cfg.tol) {
            c.status = Status::ok;
            break;
        }
    }
    c.scores = std::move(x);
    return c;
}

Ranking rank_vertices(const CentralityVector& c, double eps) {
    const auto n = c.scores.size();
    Ranking r;
    r.scores = c.scores;
    r.order.resize(n);
    std::iota(r.order.begin(), r.order.end(), VertexId{0});
    std::stable_sort(r.order.begin(), r.order.end(),
                     [&](VertexId a, VertexId b) { return c.scores[a] > c.scores[b]; });
    r.rank.assign(n, 0);

    auto tied = [eps](double leader, double x) {
        return leader == x || std::abs(leader - x) <= eps * std::max(std::abs(leader), std::abs(x));
    };
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && tied(c.scores[r.order[i]], c.scores[r.order[j]])) ++j;
        std::sort(r.order.begin() + i, r.order.begin() + j);
        for (std::size_t q = i; q < j; ++q) r.rank[r.order[q]] = static_cast<std::uint32_t>(i + 1);
        r.groups.emplace_back(i, j);
        i = j;
    }
    return r;
}

std::vector<VertexId> top_k(const Ranking& r, std::size_t k) {
    return {r.order.begin(), r.order.begin() + std::min(k, r.order.size())};
}

Rational top_k_jaccard(const Ranking& a, const Ranking& b, std::size_t k) {
    if (a.order.size() != b.order.size()) throw InputError("rankings cover different vertex sets");
    if (a.order.size() < k) throw InputError("fewer vertices than k");
    auto sa = top_k(a, k), sb = top_k(b, k);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::vector<VertexId> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    const auto c = static_cast<std::int64_t>(common.size());
    const auto denom = static_cast<std::int64_t>(sa.size() + sb.size()) - c;
    if (denom == 0) return Rational(1);
    return Rational(c, denom);
}

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::tc: return "TC";
        case Measure::bc: return "BC";
        case Measure::cc: return "CC";
        case Measure::dc: return "DC";
        case Measure::ev: return "EV";
        case Measure::pr: return "PR";
    }
    return "?";
}

CentralityVector compute_measure(const Graph& g, Measure m) {
    switch (m) {
        case Measure::tc: return triangle_centrality(g);
        case Measure::bc: return betweenness_centrality(g);
        case Measure::cc: return closeness_centrality(g);
        case Measure::dc: return degree_centrality(g);
        case Measure::ev: return eigenvector_centrality(g);
        case Measure::pr: return pagerank(g);
    }
    throw InputError("unknown measure");
}

BestMatch best_jaccard_competitor(const std::vector<Ranking>& by_measure, std::size_t self, std::size_t k) {
    if (by_measure.size() < 2 || self >= by_measure.size()) throw InputError("need at least one competitor");
    std::vector<std::size_t> candidates;
    Rational best(-1);
    for (std::size_t j = 0; j < by_measure.size(); ++j) {
        if (j == self) continue;
        const auto jac = top_k_jaccard(by_measure[self], by_measure[j], k);
        if (jac > best) {
            best = jac;
            candidates.clear();
        }
        if (jac == best) candidates.push_back(j);
    }

    const auto mine = top_k(by_measure[self], k);
    for (VertexId node : mine) {
        if (candidates.size() == 1) break;
        // Position of `node` in each candidate's top-k list; absent is a miss.
        std::vector<std::size_t> pos(candidates.size(), k);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const auto theirs = top_k(by_measure[candidates[c]], k);
            auto it = std::find(theirs.begin(), theirs.end(), node);
            if (it != theirs.end()) pos[c] = static_cast<std::size_t>(it - theirs.begin());
        }
        const auto lowest = *std::min_element(pos.begin(), pos.end());
        if (lowest == k) continue;
        std::vector<std::size_t> kept;
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (pos[c] == lowest) kept.push_back(candidates[c]);
        candidates = std::move(kept);
    }
    return {candidates.front(), best};
}

AgreementReport agreement_dot_matrix(const std::vector<std::vector<Ranking>>& rankings) {
    AgreementReport rep;
    if (rankings.empty()) return rep;
    const std::size_t measures = rankings.front().size();
    for (const auto& row : rankings)
        if (row.size() != measures) throw InputError("every graph needs the same measures");

    auto top = [](const Ranking& r) -> std::optional<VertexId> {
        if (r.order.empty()) return std::nullopt;
        return r.order.front();
    };
    auto agree = [&](std::size_t graph, std::size_t a, std::size_t b) {
        auto x = top(rankings[graph][a]);
        auto y = top(rankings[graph][b]);
        return x && y && *x == *y;
    };

    rep.similarity.assign(measures, std::vector<std::size_t>(measures, 0));
    for (std::size_t i = 0; i < measures; ++i) {
        DotMatrix dm;
        dm.measure = i;
        for (std::size_t j = 0; j < measures; ++j)
            if (j != i) dm.columns.push_back(j);
        dm.column_sums.assign(dm.columns.size(), 0);
        std::size_t dots = 0;
        for (std::size_t gi = 0; gi < rankings.size(); ++gi) {
            std::vector<bool> row(dm.columns.size());
            std::size_t in_row = 0;
            for (std::size_t c = 0; c < dm.columns.size(); ++c) {
                row[c] = agree(gi, i, dm.columns[c]);
                if (row[c]) {
                    ++dm.column_sums[c];
                    ++in_row;
                }
            }
            if (in_row == 0) ++dm.empty_rows;
            if (in_row == dm.columns.size()) ++dm.full_rows;
            dots += in_row;
            dm.dots.push_back(std::move(row));
        }
        const std::size_t cells = rankings.size() * dm.columns.size();
        dm.percent_agreement = cells == 0 ? 0.0 : 100.0 * static_cast<double>(dots) / static_cast<double>(cells);
        for (std::size_t c = 0; c < dm.columns.size(); ++c) rep.similarity[i][dm.columns[c]] = dm.column_sums[c];
        rep.matrices.push_back(std::move(dm));
    }
    return rep;
}

}  // namespace tricent
