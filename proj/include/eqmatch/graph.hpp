#pragma once

// Simple undirected graphs: construction, predicates, generators, file I/O.
// Vertices are 0-based ids; edge lists are kept in canonical sorted order
// with u < v, so equal graphs serialize to identical bytes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqmatch {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

using VertexPair = std::pair<int, int>;

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n))) {}

    Graph(int n, std::vector<VertexPair> edges) : Graph(n) {
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
            if (u < 0 || v >= n_)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                            " " + std::to_string(v));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge");
        edges_ = std::move(edges);
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int min_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = (v == 0) ? degree(0) : std::min(d, degree(v));
        return n_ == 0 ? 0 : d;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }

    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// Generators

inline Graph make_complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: n must be nonnegative");
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// Side A occupies ids 0..a-1, side B ids a..a+b-1.
inline Graph make_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: sides must be nonnegative");
    std::vector<VertexPair> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, std::move(edges));
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// File format: '#' comment lines, one "n <count>" header, "e <u> <v>" lines.

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<VertexPair> edges;
    std::vector<std::vector<char>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag == "n") {
            if (n >= 0) throw parse_error(lineno, "duplicate header");
            long long count;
            if (!(ls >> count) || count < 0) throw parse_error(lineno, "malformed header");
            std::string rest;
            if (ls >> rest) throw parse_error(lineno, "trailing tokens after header");
            n = static_cast<int>(count);
            seen.assign(static_cast<std::size_t>(n), std::vector<char>());
        } else if (tag == "e") {
            if (n < 0) throw parse_error(lineno, "edge before header");
            long long u, v;
            if (!(ls >> u >> v)) throw parse_error(lineno, "malformed edge line");
            std::string rest;
            if (ls >> rest) throw parse_error(lineno, "trailing tokens after edge");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw parse_error(lineno, "vertex id out of range");
            if (u == v) throw parse_error(lineno, "loop at vertex " + std::to_string(u));
            int a = static_cast<int>(std::min(u, v)), b = static_cast<int>(std::max(u, v));
            auto& row = seen[static_cast<std::size_t>(a)];
            if (row.empty()) row.assign(static_cast<std::size_t>(n), 0);
            if (row[static_cast<std::size_t>(b)]) throw parse_error(lineno, "duplicate edge");
            row[static_cast<std::size_t>(b)] = 1;
            edges.push_back({a, b});
        } else {
            throw parse_error(lineno, "unknown directive '" + tag + "'");
        }
    }
    if (n < 0) throw parse_error(lineno, "missing header");
    return Graph(n, std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Structure

struct Bipartition {
    std::vector<int> side_a;  // contains the smallest vertex of every component
    std::vector<int> side_b;
};

struct BasicClassification {
    bool connected = false;
    bool biconnected = false;
    std::optional<Bipartition> bipartition;
    int min_degree = 0;
};

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
        }
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

// Two-colors each component, smallest vertex first (so side A is the
// lexicographically least choice). Returns nothing for odd cycles.
inline std::optional<Bipartition> find_bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(v)] ^ 1;
                    q.push(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? parts.side_a : parts.side_b).push_back(v);
    return parts;
}

namespace detail {

// Articulation vertices by lowpoint DFS (iterative; n can exceed stack-safe depth).
inline bool has_articulation_vertex(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n)),
        parent(static_cast<std::size_t>(n), -1), next(static_cast<std::size_t>(n), 0);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        int root_children = 0;
        std::vector<int> stack{root};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            auto vi = static_cast<std::size_t>(v);
            if (next[vi] < static_cast<int>(g.neighbors(v).size())) {
                int w = g.neighbors(v)[static_cast<std::size_t>(next[vi]++)];
                auto wi = static_cast<std::size_t>(w);
                if (disc[wi] < 0) {
                    parent[wi] = v;
                    disc[wi] = low[wi] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[vi]) {
                    low[vi] = std::min(low[vi], disc[wi]);
                }
            } else {
                stack.pop_back();
                int p = parent[vi];
                if (p >= 0) {
                    auto pi = static_cast<std::size_t>(p);
                    low[pi] = std::min(low[pi], low[vi]);
                    if (p != root && low[vi] >= disc[pi]) return true;
                }
            }
        }
        if (root_children > 1) return true;
    }
    return false;
}

}  // namespace detail

inline BasicClassification classify_basic(const Graph& g) {
    BasicClassification out;
    out.connected = is_connected(g);
    out.min_degree = g.min_degree();
    out.bipartition = find_bipartition(g);
    const int n = g.vertex_count();
    if (n == 2) {
        out.biconnected = g.edge_count() == 1;  // K_2 counts as 2-connected here
    } else if (n >= 3) {
        out.biconnected = out.connected && !detail::has_articulation_vertex(g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shape recognition: is the graph a complete graph or a complete bipartite one?

enum class ShapeKind { Complete, CompleteBipartite, Other };

struct Shape {
    ShapeKind kind = ShapeKind::Other;
    int a = 0;  // Complete(a); for CompleteBipartite(a, b), a >= b
    int b = 0;

    bool operator==(const Shape&) const = default;
};

inline Shape complete_shape(int n) { return Shape{ShapeKind::Complete, n, 0}; }
inline Shape complete_bipartite_shape(int a, int b) {
    return Shape{ShapeKind::CompleteBipartite, std::max(a, b), std::min(a, b)};
}

inline std::string to_string(const Shape& s) {
    switch (s.kind) {
        case ShapeKind::Complete: return "K_" + std::to_string(s.a);
        case ShapeKind::CompleteBipartite:
            return "K_{" + std::to_string(s.a) + "," + std::to_string(s.b) + "}";
        default: return "Other";
    }
}

// K_1 and K_2 come out Complete (K_2 over its K_{1,1} reading), K_0 is Complete(0).
inline Shape classify_shape(const Graph& g) {
    const long long n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2) return complete_shape(static_cast<int>(n));
    auto parts = find_bipartition(g);
    if (parts && is_connected(g)) {
        auto a = static_cast<long long>(parts->side_a.size());
        auto b = static_cast<long long>(parts->side_b.size());
        if (a >= 1 && b >= 1 && g.edge_count() == a * b)
            return complete_bipartite_shape(static_cast<int>(a), static_cast<int>(b));
    }
    return Shape{ShapeKind::Other, 0, 0};
}

// ---------------------------------------------------------------------------

struct VertexRemoval {
    Graph graph;
    std::vector<int> kept;  // kept[new_id] = old_id, increasing
};

inline VertexRemoval remove_vertices(const Graph& g, const std::vector<int>& drop) {
    const int n = g.vertex_count();
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v : drop) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("remove_vertices: id out of range: " + std::to_string(v));
        removed[static_cast<std::size_t>(v)] = 1;
    }
    VertexRemoval out;
    std::vector<int> new_id(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) {
            new_id[static_cast<std::size_t>(v)] = static_cast<int>(out.kept.size());
            out.kept.push_back(v);
        }
    std::vector<VertexPair> edges;
    for (auto [u, v] : g.edges())
        if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)])
            edges.push_back({new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]});
    out.graph = Graph(static_cast<int>(out.kept.size()), std::move(edges));
    return out;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : keep) in_set.at(static_cast<std::size_t>(v)) = 1;
    std::vector<int> drop;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_set[static_cast<std::size_t>(v)]) drop.push_back(v);
    return remove_vertices(g, drop).graph;
}

}  // namespace eqmatch
