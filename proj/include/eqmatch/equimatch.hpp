#pragma once

// Equimatchability, factor-criticality, isolating matchings, and the
// remainder structure around an isolated vertex. The central verified claim:
// removing a minimal isolating matching from a 2-connected factor-critical
// equimatchable graph leaves a single even-complete or balanced
// complete-bipartite component.

#include "eqmatch/graph.hpp"
#include "eqmatch/matching.hpp"

namespace eqmatch {

inline bool is_factor_critical(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0 && n > 0) return false;  // even order: G - v has odd order
    for (int v = 0; v < n; ++v)
        if (!has_perfect_matching(remove_vertices(g, {v}).graph)) return false;
    return true;
}

struct EquimatchResult {
    bool equimatchable = false;
    std::optional<Matching> witness;  // a maximal matching smaller than nu, when not
};

// Exhaustive check: every maximal matching must reach nu. Exits on the first
// deficient maximal matching found.
inline EquimatchResult is_equimatchable(const Graph& g) {
    const int nu = matching_number(g);
    EquimatchResult out;
    out.equimatchable = true;
    auto visit = [&](const Matching& m) {
        if (m.size() < nu) {
            out.equimatchable = false;
            out.witness = m;
        }
    };
    auto stop = [&](const Matching&) { return !out.equimatchable; };
    enumerate_maximal_matchings(g, visit, stop);
    return out;
}

inline bool is_randomly_matchable(const Graph& g) {
    return has_perfect_matching(g) && is_equimatchable(g).equimatchable;
}

// Neighborhood criterion for connected bipartite graphs: equimatchable iff
// every vertex u of the smaller side has a non-empty X subset of N(u) with
// |N(X)| <= |X|. Sides of equal size fall outside the criterion's statement;
// there we decide by the exhaustive oracle instead.
inline bool bipartite_equimatchable_criterion(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("criterion requires a connected graph");
    auto parts = find_bipartition(g);
    if (!parts) throw std::invalid_argument("criterion requires a bipartite graph");
    const auto& a = parts->side_a;
    const auto& b = parts->side_b;
    if (a.size() == b.size()) return is_equimatchable(g).equimatchable;
    const auto& small = a.size() < b.size() ? a : b;
    for (int u : small) {
        const auto& nb = g.neighbors(u);
        const int d = static_cast<int>(nb.size());
        if (d > 25) throw std::invalid_argument("criterion subset search: degree too large");
        bool found = false;
        for (std::uint32_t mask = 1; mask < (1u << d) && !found; ++mask) {
            std::vector<char> hit(static_cast<std::size_t>(g.vertex_count()), 0);
            int x_size = 0, nx_size = 0;
            for (int i = 0; i < d; ++i) {
                if (!(mask >> i & 1)) continue;
                ++x_size;
                for (int w : g.neighbors(nb[static_cast<std::size_t>(i)]))
                    if (!hit[static_cast<std::size_t>(w)]) {
                        hit[static_cast<std::size_t>(w)] = 1;
                        ++nx_size;
                    }
            }
            found = nx_size <= x_size;
        }
        if (!found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Isolating matchings: M isolates v when v is uncovered and every neighbor of
// v is covered, i.e. {v} is a component of G minus V(M).

struct IsolatingMatching {
    int vertex = -1;
    Matching matching;
};

inline bool matching_isolates(const Graph& g, int v, const Matching& m) {
    if (!is_matching(g, m)) return false;
    auto covered = covered_mask(g, m);
    if (covered[static_cast<std::size_t>(v)]) return false;
    for (int w : g.neighbors(v))
        if (!covered[static_cast<std::size_t>(w)]) return false;
    return true;
}

// Builds an isolating matching of size at most deg(v) by taking a perfect
// matching of G - v and keeping exactly the edges that touch a neighbor of v.
// The perfect matching comes from the deterministic maximum-matching routine.
inline IsolatingMatching isolating_from_perfect_matching(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("isolating_from_perfect_matching: vertex out of range");
    auto removal = remove_vertices(g, {v});
    Matching pm = maximum_matching(removal.graph);
    if (2 * pm.size() != removal.graph.vertex_count())
        throw std::invalid_argument("isolating_from_perfect_matching: G - v has no perfect matching");
    std::vector<char> is_neighbor(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int w : g.neighbors(v)) is_neighbor[static_cast<std::size_t>(w)] = 1;
    std::vector<VertexPair> kept;
    for (auto [a, b] : pm.edges) {
        int ga = removal.kept[static_cast<std::size_t>(a)];
        int gb = removal.kept[static_cast<std::size_t>(b)];
        if (is_neighbor[static_cast<std::size_t>(ga)] || is_neighbor[static_cast<std::size_t>(gb)])
            kept.push_back({ga, gb});
    }
    return IsolatingMatching{v, make_matching(std::move(kept))};
}

// All minimal matchings isolating v. A matching isolating v is minimal iff
// each of its edges covers some neighbor of v, so the search repeatedly picks
// the lowest uncovered neighbor and branches over the edges that could cover
// it. Each minimal matching is generated exactly once.
inline std::vector<IsolatingMatching> minimal_isolating_matchings(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("minimal_isolating_matchings: vertex out of range");
    std::vector<IsolatingMatching> out;
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> is_neighbor(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int w : g.neighbors(v)) is_neighbor[static_cast<std::size_t>(w)] = 1;
    std::vector<VertexPair> current;

    auto next_uncovered_neighbor = [&]() {
        for (int w : g.neighbors(v))
            if (!covered[static_cast<std::size_t>(w)]) return w;
        return -1;
    };

    auto recurse = [&](auto&& self) -> void {
        int u = next_uncovered_neighbor();
        if (u < 0) {
            out.push_back(IsolatingMatching{v, make_matching(current)});
            return;
        }
        for (int w : g.neighbors(u)) {
            if (w == v || covered[static_cast<std::size_t>(w)]) continue;
            covered[static_cast<std::size_t>(u)] = 1;
            covered[static_cast<std::size_t>(w)] = 1;
            current.push_back({std::min(u, w), std::max(u, w)});
            self(self);
            current.pop_back();
            covered[static_cast<std::size_t>(u)] = 0;
            covered[static_cast<std::size_t>(w)] = 0;
        }
    };
    recurse(recurse);
    return out;
}

// ---------------------------------------------------------------------------
// Remainder classification

struct RemainderReport {
    int vertex = -1;
    IsolatingMatching matching;
    std::vector<Shape> components;
    std::vector<std::vector<int>> component_vertices;  // original vertex ids
    bool single_component = false;
    bool conforms = false;
};

inline bool shape_is_randomly_matchable_form(const Shape& s) {
    if (s.kind == ShapeKind::Complete) return s.a % 2 == 0;
    if (s.kind == ShapeKind::CompleteBipartite) return s.a == s.b;
    return false;
}

// Removes V(M) and v, splits the rest into components, and classifies each.
// Conforming means: at most one component, and it is K_{2n} or K_{n,n}
// (an empty remainder conforms as K_0).
inline RemainderReport classify_remainder(const Graph& g, int v, const IsolatingMatching& m) {
    if (!matching_isolates(g, v, m.matching))
        throw std::invalid_argument("classify_remainder: matching does not isolate the vertex");
    std::vector<int> drop{v};
    for (auto [a, b] : m.matching.edges) {
        drop.push_back(a);
        drop.push_back(b);
    }
    auto removal = remove_vertices(g, drop);
    RemainderReport report;
    report.vertex = v;
    report.matching = m;
    auto comps = connected_components(removal.graph);
    report.single_component = comps.size() <= 1;
    report.conforms = true;
    for (const auto& comp : comps) {
        Shape s = classify_shape(induced_subgraph(removal.graph, comp));
        report.components.push_back(s);
        std::vector<int> original;
        for (int w : comp) original.push_back(removal.kept[static_cast<std::size_t>(w)]);
        std::sort(original.begin(), original.end());
        report.component_vertices.push_back(std::move(original));
        if (!shape_is_randomly_matchable_form(s)) report.conforms = false;
    }
    if (!report.single_component) report.conforms = false;
    return report;
}

// Sweeps every vertex and every minimal isolating matching, returning the
// non-conforming remainder reports (empty for graphs satisfying the single
// randomly-matchable-remainder property).
inline std::vector<RemainderReport> remainder_violations(const Graph& g) {
    std::vector<RemainderReport> violations;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const auto& m : minimal_isolating_matchings(g, v)) {
            RemainderReport report = classify_remainder(g, v, m);
            if (!report.conforms) violations.push_back(std::move(report));
        }
    std::sort(violations.begin(), violations.end(), [](const auto& a, const auto& b) {
        return a.vertex != b.vertex ? a.vertex < b.vertex
                                    : a.matching.matching.edges < b.matching.matching.edges;
    });
    return violations;
}

}  // namespace eqmatch
