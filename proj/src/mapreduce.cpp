#include "tricent/mapreduce.hpp"

#include <algorithm>
#include <span>

namespace tricent::mr {

VertexPair make_pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return {a, b};
}

std::size_t field_count(const Record& r) {
    const std::size_t key = std::holds_alternative<VertexPair>(r.key) ? 2 : 1;
    const std::size_t value = std::visit(
        [](const auto& v) -> std::size_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FlaggedVertex> || std::is_same_v<T, FlaggedCount>)
                return 2;
            else
                return 1;
        },
        r.value);
    return key + value;
}

namespace {

std::uint64_t bits_of(const std::vector<Record>& records) {
    std::uint64_t words = 0;
    for (const auto& r : records) words += field_count(r);
    return words * kWordBits;
}

// Groups records by key, keeping emission order within a group, and calls
// reduce(key, values) once per distinct key in key order.
template <typename Reduce>
void shuffle(std::vector<Record> records, Reduce reduce) {
    std::stable_sort(records.begin(), records.end(),
                     [](const Record& a, const Record& b) { return a.key < b.key; });
    std::vector<Value> values;
    for (std::size_t i = 0; i < records.size();) {
        std::size_t j = i;
        values.clear();
        while (j < records.size() && records[j].key == records[i].key) values.push_back(records[j++].value);
        reduce(records[i].key, std::span<const Value>(values));
        i = j;
    }
}

}  // namespace

std::vector<DegreeEdge> degree_annotated_edges(const Graph& g) {
    std::vector<DegreeEdge> out;
    out.reserve(g.adjacency().size());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId u : g.neighbors(v)) out.push_back({v, g.degree(v), u, g.degree(u)});
    return out;
}

RoundOutput round1(const std::vector<DegreeEdge>& input) {
    VertexId n = 0;
    for (const auto& e : input) n = std::max({n, e.v + 1, e.u + 1});
    std::vector<std::uint64_t> degree(n, 0), seen(n, 0);
    std::vector<std::uint8_t> known(n, 0);
    auto check = [&](VertexId x, std::uint64_t d) {
        if (known[x] && degree[x] != d) throw InputError("inconsistent degree annotation");
        known[x] = 1;
        degree[x] = d;
    };
    for (const auto& e : input) {
        check(e.v, e.dv);
        check(e.u, e.du);
        ++seen[e.v];
    }
    for (VertexId x = 0; x < n; ++x)
        if (known[x] && seen[x] != degree[x]) throw InputError("degree annotation disagrees with the edge records");

    RoundOutput out;
    out.stats.round = 1;
    out.stats.map_in = input.size();
    std::vector<Record> mapped;
    for (const auto& e : input) {
        if (std::pair(e.dv, e.v) < std::pair(e.du, e.u)) mapped.push_back({e.v, e.u});
    }
    out.stats.map_out = mapped.size();

    std::vector<VertexId> nb;
    shuffle(std::move(mapped), [&](const Key& key, std::span<const Value> values) {
        const VertexId v = std::get<VertexId>(key);
        nb.clear();
        for (const auto& x : values) nb.push_back(std::get<VertexId>(x));
        std::sort(nb.begin(), nb.end());
        for (VertexId u : nb) out.records.push_back({make_pair_key(u, v), Zero{}});
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) out.records.push_back({VertexPair{nb[i], nb[j]}, v});
    });
    out.stats.reduce_out = out.records.size();
    out.stats.bits = bits_of(out.records);
    return out;
}

RoundOutput round2(const std::vector<Record>& input) {
    RoundOutput out;
    out.stats.round = 2;
    out.stats.map_in = input.size();
    out.stats.map_out = input.size();
    shuffle(input, [&](const Key& key, std::span<const Value> values) {
        const bool closed = std::any_of(values.begin(), values.end(),
                                        [](const Value& x) { return std::holds_alternative<Zero>(x); });
        if (!closed) return;
        const auto [u, w] = std::get<VertexPair>(key);
        for (const auto& x : values) {
            if (!std::holds_alternative<VertexId>(x)) continue;
            const VertexId v = std::get<VertexId>(x);
            out.records.push_back({v, FlaggedVertex{u, true}});
            out.records.push_back({u, FlaggedVertex{v, true}});
            out.records.push_back({v, FlaggedVertex{w, true}});
            out.records.push_back({w, FlaggedVertex{v, true}});
            out.records.push_back({u, FlaggedVertex{w, true}});
            out.records.push_back({w, FlaggedVertex{u, true}});
        }
    });
    out.stats.reduce_out = out.records.size();
    out.stats.bits = bits_of(out.records);
    return out;
}

Round3Output round3(const std::vector<Record>& input, const std::vector<DegreeEdge>& edges, VertexId n) {
    Round3Output out;
    out.stats.round = 3;
    out.stats.map_in = input.size() + edges.size();
    std::vector<Record> mapped(input);
    for (const auto& e : edges) mapped.push_back({e.v, FlaggedVertex{e.u, false}});
    out.stats.map_out = mapped.size();
    out.per_vertex.assign(n, 0);

    std::uint64_t sum = 0;
    std::vector<FlaggedVertex> nb;
    shuffle(std::move(mapped), [&](const Key& key, std::span<const Value> values) {
        const VertexId v = std::get<VertexId>(key);
        std::uint64_t ones = 0;
        nb.clear();
        for (const auto& x : values) {
            const auto& fv = std::get<FlaggedVertex>(x);
            if (fv.flag) ++ones;
            nb.push_back(fv);
        }
        if (ones % 2 != 0) throw ConsistencyError("odd number of triangle records at a vertex");
        const std::uint64_t delta = ones / 2;
        out.per_vertex[v] = delta;
        sum += delta;

        // Unique neighbors, flag set if any copy was flagged.
        std::sort(nb.begin(), nb.end(), [](const FlaggedVertex& a, const FlaggedVertex& b) {
            return a.vertex != b.vertex ? a.vertex < b.vertex : a.flag > b.flag;
        });
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (i > 0 && nb[i].vertex == nb[i - 1].vertex) continue;
            out.records.push_back({nb[i].vertex, FlaggedCount{delta, nb[i].flag}});
        }
        out.records.push_back({v, FlaggedCount{delta, true}});
    });
    if (sum % 3 != 0) throw ConsistencyError("vertex triangle counts do not sum to a multiple of three");
    out.total = sum / 3;
    out.stats.reduce_out = out.records.size();
    out.stats.broadcast = n;
    out.stats.bits = bits_of(out.records) + static_cast<std::uint64_t>(n) * kWordBits;
    return out;
}

Round4Output round4(const std::vector<Record>& input, std::uint64_t total, VertexId n) {
    Round4Output out;
    out.stats.round = 4;
    out.stats.map_in = input.size();
    out.stats.map_out = input.size();
    auto& c = out.centrality;
    c.method = Method::triangle_mapreduce;
    c.total_triangles = total;
    c.status = total == 0 ? Status::triangle_free : Status::ok;
    c.scores.assign(n, 0.0);

    std::vector<Record> emitted;
    shuffle(input, [&](const Key& key, std::span<const Value> values) {
        const VertexId v = std::get<VertexId>(key);
        std::uint64_t x = 0, y = 0;
        for (const auto& val : values) {
            const auto& fc = std::get<FlaggedCount>(val);
            (fc.flag ? x : y) += fc.count;
        }
        const double score = total == 0 ? 0.0 : static_cast<double>(x + 3 * y) / static_cast<double>(3 * total);
        c.scores[v] = score;
        emitted.push_back({v, score});
    });
    out.stats.reduce_out = emitted.size();
    out.stats.bits = bits_of(emitted);
    return out;
}

std::uint64_t MapReduceResult::total_bits() const {
    std::uint64_t b = 0;
    for (const auto& r : rounds) b += r.bits;
    return b;
}

MapReduceResult run_mapreduce_tc(const Graph& g) {
    const auto edges = degree_annotated_edges(g);
    auto r1 = round1(edges);
    auto r2 = round2(r1.records);
    r1.records = {};
    auto r3 = round3(r2.records, edges, g.num_vertices());
    r2.records = {};
    auto r4 = round4(r3.records, r3.total, g.num_vertices());

    MapReduceResult out;
    out.centrality = std::move(r4.centrality);
    out.rounds = {r1.stats, r2.stats, r3.stats, r4.stats};
    return out;
}

}  // namespace tricent::mr
