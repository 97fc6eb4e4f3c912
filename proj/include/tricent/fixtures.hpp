#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tricent/graph.hpp"

namespace tricent {

struct Fixture {
    std::string name;
    Graph graph;
    // Named vertex classes, e.g. "bridge", "joiner", "member".
    std::map<std::string, std::vector<VertexId>> roles;

    VertexId vertex(std::string_view label) const;
};

Fixture clique(int n);
Fixture disjoint_cliques(int p, int k);
// Vertex "a" joined to one vertex of each of p copies of K_k.
Fixture bridge_cliques(int p, int k);
// p copies of K_k, consecutive copies sharing one vertex.
Fixture clique_chain(int p, int k);
// As the chain, with the last copy also sharing a vertex with the first.
Fixture clique_ring(int p, int k);
// One triangle whose vertices each carry q pendant vertices.
Fixture single_triangle(int q);

Fixture figure_1a();
Fixture figure_1b();
Fixture figure_1c();
Fixture figure_1d();
Fixture figure_3();

// Edge lists shipped with the library: borgatti, karate, dolphins, hijackers.
std::vector<std::string> bundled_names();
std::string_view bundled_text(std::string_view name);
Fixture bundled(std::string_view name);

struct GenParams {
    int n = 5;
    int p = 4;
    int k = 6;
    int q = 2;
};

std::vector<std::string> generator_families();
Fixture generate_fixture(std::string_view family, const GenParams& params);

}  // namespace tricent
