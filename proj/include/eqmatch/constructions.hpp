#pragma once

// Graph families witnessing equimatchability results on surfaces: odd
// complete graphs amalgamated with triangles, two complete bipartite blocks
// linked by a pair of edges, the extremal instance of that union for a given
// genus, edge multiplication + subdivision of a 2-connected base, and K_{k,2}.

#include <map>
#include <set>

#include "eqmatch/genus.hpp"
#include "eqmatch/graph.hpp"

namespace eqmatch {

class construction_error : public std::runtime_error {
public:
    construction_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

enum class ClaimedProperty { factor_critical, equimatchable, biconnected, bipartite };

inline std::string to_string(ClaimedProperty p) {
    switch (p) {
        case ClaimedProperty::factor_critical: return "factor_critical";
        case ClaimedProperty::equimatchable: return "equimatchable";
        case ClaimedProperty::biconnected: return "biconnected";
        case ClaimedProperty::bipartite: return "bipartite";
    }
    return "?";
}

struct ConstructionResult {
    Graph graph;
    std::optional<int> claimed_genus;
    std::set<ClaimedProperty> claimed_properties;
    std::map<std::string, long long> parameters;
};

// K_{2n+1} with k triangles glued at vertex 0, using the largest odd complete
// graph of the requested genus. Factor-critical and equimatchable, but never
// 2-connected for k >= 1 (the shared vertex cuts).
inline ConstructionResult amalgam_construction(int genus, int k, bool orientable) {
    if (genus < 0 || k < 0)
        throw construction_error("InvalidParameter", "amalgam: genus and k must be nonnegative");
    int best = -1;
    for (int m = 3;; m += 2) {
        int gm = genus_complete(m, orientable);
        if (gm > genus) break;
        if (gm == genus) best = m;
    }
    if (best < 0)
        throw construction_error("NoOddCompleteGraphOfThisGenus",
                                 "no odd complete graph has " +
                                     std::string(orientable ? "orientable" : "nonorientable") +
                                     " genus " + std::to_string(genus));
    std::vector<VertexPair> edges;
    for (int u = 0; u < best; ++u)
        for (int v = u + 1; v < best; ++v) edges.push_back({u, v});
    for (int i = 0; i < k; ++i) {
        int a = best + 2 * i, b = best + 2 * i + 1;
        edges.push_back({0, a});
        edges.push_back({0, b});
        edges.push_back({a, b});
    }
    ConstructionResult out;
    out.graph = Graph(best + 2 * k, std::move(edges));
    out.claimed_genus = genus;
    out.claimed_properties = {ClaimedProperty::factor_critical, ClaimedProperty::equimatchable};
    out.parameters = {{"n", (best - 1) / 2},
                      {"triangles", k},
                      {orientable ? "genus" : "nonorientable_genus", genus}};
    return out;
}

// K_{n,n} and K_{m+1,m} linked by edges u-x and v-y where u, v are the first
// vertices of the two K_{n,n} sides and x, y the first two larger-side
// vertices of K_{m+1,m}. Vertex layout:
//   [0, n)          side A of K_{n,n}
//   [n, 2n)         side B of K_{n,n}
//   [2n, 2n+m+1)    larger side of K_{m+1,m}
//   [2n+m+1, 2n+2m+1) smaller side of K_{m+1,m}
inline ConstructionResult union_construction(int n, int m) {
    if (n < 1 || m < 1)
        throw construction_error("InvalidParameter", "union: n and m must be at least 1");
    std::vector<VertexPair> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) edges.push_back({a, n + b});
    const int big = 2 * n, small = 2 * n + m + 1;
    for (int a = 0; a < m + 1; ++a)
        for (int b = 0; b < m; ++b) edges.push_back({big + a, small + b});
    edges.push_back({0, big});      // u-x
    edges.push_back({n, big + 1});  // v-y
    ConstructionResult out;
    out.graph = Graph(2 * n + 2 * m + 1, std::move(edges));
    out.claimed_properties = {ClaimedProperty::factor_critical, ClaimedProperty::equimatchable,
                              ClaimedProperty::biconnected};
    out.parameters = {{"n", n}, {"m", m}};
    return out;
}

namespace detail {

// K_{a,b} genus with the degenerate sides (paths, single edges) planar.
inline int bipartite_genus_or_planar(int a, int b, bool orientable) {
    if (a < 2 || b < 2) return 0;
    return genus_complete_bipartite(a, b, orientable);
}

}  // namespace detail

// Largest union_construction embeddable in the surface of the given genus:
// K_{n,n} gets the lower half of the genus, K_{m+1,m} the upper half.
inline ConstructionResult lower_bound_graph(int genus, bool orientable) {
    if (genus < 0)
        throw construction_error("InvalidParameter", "lower_bound_graph: genus must be nonnegative");
    const int low = genus / 2, high = genus - genus / 2;
    int n = 1;
    while (detail::bipartite_genus_or_planar(n + 1, n + 1, orientable) <= low) ++n;
    int m = 1;
    while (detail::bipartite_genus_or_planar(m + 2, m + 1, orientable) <= high) ++m;
    ConstructionResult out = union_construction(n, m);
    out.claimed_genus = genus;
    out.parameters[orientable ? "genus" : "nonorientable_genus"] = genus;
    return out;
}

// Replaces every edge of a 2-connected base by l subdivided parallel edges.
// Output is bipartite: base vertices on one side, subdivision vertices
// (p + j*l + i for base edge j, copy i) on the other.
inline ConstructionResult multiply_subdivide(const Graph& base, int l) {
    if (l < 2) throw construction_error("InvalidParameter", "multiply_subdivide: l must be >= 2");
    auto basic = classify_basic(base);
    if (!basic.connected || !basic.biconnected)
        throw construction_error("InvalidParameter", "multiply_subdivide: base must be 2-connected");
    const int p = base.vertex_count();
    std::vector<VertexPair> edges;
    for (int j = 0; j < base.edge_count(); ++j) {
        auto [u, v] = base.edges()[static_cast<std::size_t>(j)];
        for (int i = 0; i < l; ++i) {
            int s = p + j * l + i;
            edges.push_back({u, s});
            edges.push_back({v, s});
        }
    }
    ConstructionResult out;
    out.graph = Graph(p + l * base.edge_count(), std::move(edges));
    out.claimed_properties = {ClaimedProperty::equimatchable, ClaimedProperty::bipartite,
                              ClaimedProperty::biconnected};
    out.parameters = {{"base_vertices", p}, {"base_edges", base.edge_count()}, {"l", l}};
    return out;
}

// K_{k,2}: arbitrarily large planar 2-connected bipartite equimatchable graphs.
inline ConstructionResult planar_bipartite_family(int k) {
    if (k < 2) throw construction_error("InvalidParameter", "planar_bipartite_family: k must be >= 2");
    ConstructionResult out;
    out.graph = make_complete_bipartite(k, 2);
    out.claimed_genus = 0;
    out.claimed_properties = {ClaimedProperty::equimatchable, ClaimedProperty::bipartite,
                              ClaimedProperty::biconnected};
    out.parameters = {{"k", k}};
    return out;
}

}  // namespace eqmatch
