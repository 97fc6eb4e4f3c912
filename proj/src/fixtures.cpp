#include "tricent/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

namespace tricent {

namespace detail {
struct BundledFile {
    const char* name;
    const char* text;
};
extern const BundledFile kBundledFiles[];
extern const std::size_t kBundledFileCount;
}  // namespace detail

VertexId Fixture::vertex(std::string_view label) const {
    auto v = graph.find(label);
    if (!v) throw InputError(fmt::format("fixture {} has no vertex {}", name, label));
    return *v;
}

namespace {

// Accumulates labelled edges and role names, then resolves roles to ids.
struct Builder {
    std::vector<LabeledEdge> edges;
    std::map<std::string, std::vector<std::string>> roles;
    int next = 1;

    std::string fresh() { return std::to_string(next++); }
    void edge(const std::string& a, const std::string& b) { edges.emplace_back(a, b); }
    void complete(const std::vector<std::string>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
    }
    void role(const std::string& r, const std::string& label) { roles[r].push_back(label); }

    Fixture finish(std::string name) {
        Fixture f;
        f.name = std::move(name);
        f.graph = build_graph(edges);
        for (auto& [r, labels] : roles) {
            auto& ids = f.roles[r];
            for (const auto& l : labels) ids.push_back(f.vertex(l));
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        }
        return f;
    }
};

void require(bool ok, std::string_view what) {
    if (!ok) throw InputError(fmt::format("invalid generator parameters: {}", what));
}

}  // namespace

Fixture clique(int n) {
    require(n >= 1, "n >= 1");
    if (n == 1) return Fixture{"clique-1", Graph::from_edges(1, {}), {{"member", {0}}}};
    Builder b;
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back(b.fresh());
    b.complete(vs);
    for (const auto& v : vs) b.role("member", v);
    return b.finish(fmt::format("clique-{}", n));
}

Fixture disjoint_cliques(int p, int k) {
    require(p >= 1 && k >= 2, "p >= 1, k >= 2");
    Builder b;
    for (int c = 0; c < p; ++c) {
        std::vector<std::string> vs;
        for (int i = 0; i < k; ++i) vs.push_back(b.fresh());
        b.complete(vs);
        for (const auto& v : vs) b.role("member", v);
    }
    return b.finish(fmt::format("disjoint-cliques-{}x{}", p, k));
}

Fixture bridge_cliques(int p, int k) {
    require(p >= 1 && k >= 2, "p >= 1, k >= 2");
    Builder b;
    b.role("bridge", "a");
    for (int c = 0; c < p; ++c) {
        std::vector<std::string> vs;
        for (int i = 0; i < k; ++i) vs.push_back(b.fresh());
        b.complete(vs);
        b.edge("a", vs.front());
        for (const auto& v : vs) b.role("member", v);
    }
    return b.finish(fmt::format("bridge-cliques-{}x{}", p, k));
}

namespace {

Fixture joined_cliques(int p, int k, bool ring) {
    require(p >= (ring ? 3 : 2) && k >= 3, ring ? "p >= 3, k >= 3" : "p >= 2, k >= 3");
    Builder b;
    const int joiners = ring ? p : p - 1;
    // joiner[i] is shared by copy i and copy i+1 (mod p for the ring).
    std::vector<std::string> joiner;
    for (int i = 0; i < joiners; ++i) joiner.push_back(b.fresh());

    for (int c = 0; c < p; ++c) {
        std::vector<std::string> vs;
        if (ring || c > 0) vs.push_back(joiner[(c + p - 1) % p]);
        if (ring || c < p - 1) vs.push_back(joiner[c]);
        const bool end = !ring && (c == 0 || c == p - 1);
        while (static_cast<int>(vs.size()) < k) {
            auto m = b.fresh();
            vs.push_back(m);
            b.role(ring ? "member" : (end ? "end_member" : "inner_member"), m);
        }
        b.complete(vs);
    }
    for (int i = 0; i < joiners; ++i) {
        if (ring)
            b.role("joiner", joiner[i]);
        else
            b.role(i == 0 || i == joiners - 1 ? "end_joiner" : "inner_joiner", joiner[i]);
    }
    return b.finish(fmt::format("clique-{}-{}x{}", ring ? "ring" : "chain", p, k));
}

}  // namespace

Fixture clique_chain(int p, int k) { return joined_cliques(p, k, false); }
Fixture clique_ring(int p, int k) { return joined_cliques(p, k, true); }

Fixture single_triangle(int q) {
    require(q >= 0, "q >= 0");
    Builder b;
    const std::vector<std::string> tri{"t1", "t2", "t3"};
    b.complete(tri);
    for (const auto& t : tri) {
        b.role("triangle_vertex", t);
        for (int i = 0; i < q; ++i) {
            auto leaf = b.fresh();
            b.edge(t, leaf);
            b.role("neighbor", leaf);
        }
    }
    return b.finish(fmt::format("single-triangle-{}", q));
}

Fixture figure_1a() {
    Builder b;
    const std::string hub = "bcdefg";
    for (char h : hub) b.edge("a", std::string(1, h));
    b.edge("b", "c");
    b.edge("d", "e");
    b.edge("f", "g");
    for (char h : hub)
        for (int i = 0; i < 4; ++i) b.edge(std::string(1, h), b.fresh());
    b.role("center", "a");
    return b.finish("fig1a");
}

Fixture figure_1b() {
    auto f = bridge_cliques(4, 6);
    f.name = "fig1b";
    f.roles["center"] = f.roles["bridge"];
    return f;
}

Fixture figure_1c() {
    Builder b;
    for (int i = 2; i <= 9; ++i) b.edge("1", std::to_string(i));
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"1", "a"}, {"a", "10"}, {"a", "13"}, {"a", "14"}, {"a", "15"}, {"10", "11"},
             {"10", "12"}, {"11", "12"}, {"13", "14"}, {"15", "16"}, {"15", "17"}, {"16", "17"}})
        b.edge(x, y);
    b.role("center", "a");
    return b.finish("fig1c");
}

Fixture figure_1d() {
    Builder b;
    b.complete({"a", "1", "2", "3", "4"});
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"a", "5"}, {"5", "6"}, {"5", "7"}, {"6", "7"}, {"a", "8"}})
        b.edge(x, y);
    for (int i = 9; i <= 17; ++i) b.edge("8", std::to_string(i));
    b.role("center", "a");
    return b.finish("fig1d");
}

Fixture figure_3() {
    Builder b;
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"v", "a"}, {"v", "b"}, {"v", "c"}, {"a", "c"}, {"b", "c"}, {"v", "d"}, {"d", "e"}, {"d", "f"}, {"e", "f"}})
        b.edge(x, y);
    b.role("center", "v");
    return b.finish("fig3");
}

std::vector<std::string> bundled_names() {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < detail::kBundledFileCount; ++i) names.emplace_back(detail::kBundledFiles[i].name);
    return names;
}

std::string_view bundled_text(std::string_view name) {
    for (std::size_t i = 0; i < detail::kBundledFileCount; ++i)
        if (name == detail::kBundledFiles[i].name) return detail::kBundledFiles[i].text;
    throw InputError(fmt::format("no bundled graph named {}", name));
}

Fixture bundled(std::string_view name) {
    std::istringstream in{std::string(bundled_text(name))};
    Fixture f;
    f.name = std::string(name);
    f.graph = read_graph(in);
    return f;
}

std::vector<std::string> generator_families() {
    std::vector<std::string> fams{"clique", "disjoint-cliques", "bridge-cliques", "chain", "ring",
                                  "single-triangle", "fig1a", "fig1b", "fig1c", "fig1d", "fig3"};
    for (auto& n : bundled_names()) fams.push_back(n);
    return fams;
}

Fixture generate_fixture(std::string_view family, const GenParams& gp) {
    if (family == "clique") return clique(gp.n);
    if (family == "disjoint-cliques") return disjoint_cliques(gp.p, gp.k);
    if (family == "bridge-cliques") return bridge_cliques(gp.p, gp.k);
    if (family == "chain") return clique_chain(gp.p, gp.k);
    if (family == "ring") return clique_ring(gp.p, gp.k);
    if (family == "single-triangle") return single_triangle(gp.q);
    if (family == "fig1a") return figure_1a();
    if (family == "fig1b") return figure_1b();
    if (family == "fig1c") return figure_1c();
    if (family == "fig1d") return figure_1d();
    if (family == "fig3") return figure_3();
    for (const auto& n : bundled_names())
        if (family == n) return bundled(n);
    throw InputError(fmt::format("unknown generator family {}", family));
}

}  // namespace tricent
