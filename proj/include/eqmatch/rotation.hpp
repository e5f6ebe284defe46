#pragma once

// Rotation systems for cellular orientable embeddings. A dart is one end of
// an edge (2*edge for the u-end, 2*edge+1 for the v-end); each vertex holds a
// cyclic order of its incident darts. Faces are the orbits of
//   d  ->  rotation-successor of the reversed dart,
// so traces are reproducible bit for bit.

#include <cstdint>
#include <sstream>

#include "eqmatch/graph.hpp"

namespace eqmatch {

class embedding_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RotationSystem {
    int n = 0;
    std::vector<VertexPair> edges;           // parallel edges allowed, loops not
    std::vector<std::vector<int>> rotation;  // cyclic dart sequence per vertex
};

inline int dart_edge(int d) { return d >> 1; }
inline int dart_reverse(int d) { return d ^ 1; }
inline int dart_tail(const RotationSystem& r, int d) {
    const auto& e = r.edges[static_cast<std::size_t>(dart_edge(d))];
    return (d & 1) ? e.second : e.first;
}
inline int dart_head(const RotationSystem& r, int d) { return dart_tail(r, dart_reverse(d)); }

inline void validate_rotation(const RotationSystem& r) {
    std::vector<std::vector<int>> expected(static_cast<std::size_t>(r.n));
    for (std::size_t j = 0; j < r.edges.size(); ++j) {
        auto [u, v] = r.edges[j];
        if (u < 0 || v < 0 || u >= r.n || v >= r.n)
            throw std::invalid_argument("rotation system: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("rotation system: loops not supported");
        expected[static_cast<std::size_t>(u)].push_back(static_cast<int>(2 * j));
        expected[static_cast<std::size_t>(v)].push_back(static_cast<int>(2 * j + 1));
    }
    if (r.rotation.size() != static_cast<std::size_t>(r.n))
        throw std::invalid_argument("rotation system: one rotation per vertex required");
    for (int v = 0; v < r.n; ++v) {
        auto got = r.rotation[static_cast<std::size_t>(v)];
        std::sort(got.begin(), got.end());
        auto& want = expected[static_cast<std::size_t>(v)];
        std::sort(want.begin(), want.end());
        if (got != want)
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its incident darts");
    }
}

// Canonical start: neighbors in increasing order (ties by edge id).
inline RotationSystem rotation_from_graph(const Graph& g) {
    RotationSystem r;
    r.n = g.vertex_count();
    r.edges = g.edges();
    r.rotation.assign(static_cast<std::size_t>(r.n), {});
    for (std::size_t j = 0; j < r.edges.size(); ++j) {
        auto [u, v] = r.edges[j];
        r.rotation[static_cast<std::size_t>(u)].push_back(static_cast<int>(2 * j));
        r.rotation[static_cast<std::size_t>(v)].push_back(static_cast<int>(2 * j + 1));
    }
    for (int v = 0; v < r.n; ++v) {
        auto& rot = r.rotation[static_cast<std::size_t>(v)];
        std::sort(rot.begin(), rot.end(), [&](int a, int b) {
            int ha = dart_head(r, a), hb = dart_head(r, b);
            return ha != hb ? ha < hb : a < b;
        });
    }
    return r;
}

struct EmbeddingStats {
    int p = 0, q = 0, r = 0;
    int genus = 0;
};

struct FaceTrace {
    EmbeddingStats stats;
    std::vector<std::vector<int>> faces;  // dart cycles, deterministic order
};

namespace detail {

inline std::vector<int> dart_successors(const RotationSystem& r) {
    std::vector<int> succ(2 * r.edges.size(), -1);
    for (const auto& rot : r.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i)
            succ[static_cast<std::size_t>(rot[i])] =
                rot[(i + 1) % rot.size()];
    return succ;
}

inline bool rotation_connected(const RotationSystem& r) {
    if (r.n == 0) return false;
    std::vector<int> stack{0};
    std::vector<char> seen(static_cast<std::size_t>(r.n), 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : r.rotation[static_cast<std::size_t>(v)]) {
            int w = dart_head(r, d);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == r.n;
}

}  // namespace detail

inline FaceTrace trace_faces(const RotationSystem& r) {
    validate_rotation(r);
    if (!detail::rotation_connected(r))
        throw embedding_error("face tracing requires a connected graph");
    FaceTrace out;
    out.stats.p = r.n;
    out.stats.q = static_cast<int>(r.edges.size());
    if (r.edges.empty()) {
        // single vertex on the sphere: one face, no darts
        out.faces.push_back({});
        out.stats.r = 1;
        out.stats.genus = 0;
        return out;
    }
    auto succ = detail::dart_successors(r);
    std::vector<char> seen(succ.size(), 0);
    for (int d0 = 0; d0 < static_cast<int>(succ.size()); ++d0) {
        if (seen[static_cast<std::size_t>(d0)]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[static_cast<std::size_t>(d)] = 1;
            face.push_back(d);
            d = succ[static_cast<std::size_t>(dart_reverse(d))];
        } while (d != d0);
        out.faces.push_back(std::move(face));
    }
    out.stats.r = static_cast<int>(out.faces.size());
    int doubled = 2 - (out.stats.p - out.stats.q + out.stats.r);
    if (doubled < 0 || doubled % 2 != 0)
        throw embedding_error("face trace produced an inconsistent Euler characteristic");
    out.stats.genus = doubled / 2;
    return out;
}

// ---------------------------------------------------------------------------
// File format: "n <count>", "e <id> <u> <v>", "r <v>: <darts>" with a dart
// written "<edge id><+|->" (+ marks the u-end). '#' starts a comment.

inline RotationSystem parse_rotation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1;
    std::vector<std::optional<VertexPair>> edges;
    std::vector<std::optional<std::vector<int>>> rotations;
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
            n = static_cast<int>(count);
            rotations.assign(static_cast<std::size_t>(n), std::nullopt);
        } else if (tag == "e") {
            if (n < 0) throw parse_error(lineno, "edge before header");
            long long id, u, v;
            if (!(ls >> id >> u >> v)) throw parse_error(lineno, "malformed edge line");
            if (id < 0) throw parse_error(lineno, "negative edge id");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw parse_error(lineno, "vertex id out of range");
            if (u == v) throw parse_error(lineno, "loop at vertex " + std::to_string(u));
            if (edges.size() <= static_cast<std::size_t>(id))
                edges.resize(static_cast<std::size_t>(id) + 1);
            if (edges[static_cast<std::size_t>(id)])
                throw parse_error(lineno, "duplicate edge id " + std::to_string(id));
            edges[static_cast<std::size_t>(id)] = {static_cast<int>(u), static_cast<int>(v)};
        } else if (tag == "r") {
            if (n < 0) throw parse_error(lineno, "rotation before header");
            std::string vtok;
            if (!(ls >> vtok) || vtok.size() < 2 || vtok.back() != ':')
                throw parse_error(lineno, "malformed rotation line");
            long long v;
            try {
                v = std::stoll(vtok.substr(0, vtok.size() - 1));
            } catch (const std::exception&) {
                throw parse_error(lineno, "malformed rotation vertex");
            }
            if (v < 0 || v >= n) throw parse_error(lineno, "vertex id out of range");
            if (rotations[static_cast<std::size_t>(v)])
                throw parse_error(lineno, "duplicate rotation for vertex " + std::to_string(v));
            std::vector<int> darts;
            std::string dtok;
            while (ls >> dtok) {
                char sign = dtok.back();
                if (dtok.size() < 2 || (sign != '+' && sign != '-'))
                    throw parse_error(lineno, "malformed dart '" + dtok + "'");
                long long id;
                try {
                    id = std::stoll(dtok.substr(0, dtok.size() - 1));
                } catch (const std::exception&) {
                    throw parse_error(lineno, "malformed dart '" + dtok + "'");
                }
                if (id < 0) throw parse_error(lineno, "negative edge id in dart");
                darts.push_back(static_cast<int>(2 * id + (sign == '-' ? 1 : 0)));
            }
            rotations[static_cast<std::size_t>(v)] = std::move(darts);
        } else {
            throw parse_error(lineno, "unknown directive '" + tag + "'");
        }
    }
    if (n < 0) throw parse_error(lineno, "missing header");
    RotationSystem r;
    r.n = n;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        if (!edges[j]) throw parse_error(lineno, "edge ids must form 0..q-1 (missing " +
                                                     std::to_string(j) + ")");
        r.edges.push_back(*edges[j]);
    }
    r.rotation.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v)
        if (rotations[static_cast<std::size_t>(v)])
            r.rotation[static_cast<std::size_t>(v)] = *rotations[static_cast<std::size_t>(v)];
    validate_rotation(r);
    return r;
}

inline std::string serialize_rotation(const RotationSystem& r) {
    std::ostringstream out;
    out << "n " << r.n << "\n";
    for (std::size_t j = 0; j < r.edges.size(); ++j)
        out << "e " << j << " " << r.edges[j].first << " " << r.edges[j].second << "\n";
    for (int v = 0; v < r.n; ++v) {
        const auto& rot = r.rotation[static_cast<std::size_t>(v)];
        if (rot.empty()) continue;
        // cyclic sequences start at their smallest dart so output is canonical
        std::size_t start = static_cast<std::size_t>(
            std::min_element(rot.begin(), rot.end()) - rot.begin());
        out << "r " << v << ":";
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int d = rot[(start + i) % rot.size()];
            out << " " << dart_edge(d) << ((d & 1) ? '-' : '+');
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Embedding surgery

namespace detail {

inline bool face_has_vertex(const RotationSystem& r, const std::vector<int>& face, int v) {
    if (face.empty()) return true;  // the sphere face of an edgeless system
    for (int d : face)
        if (dart_tail(r, d) == v) return true;
    return false;
}

inline int first_face_with(const RotationSystem& r, const std::vector<std::vector<int>>& faces,
                           int u, int v) {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (face_has_vertex(r, faces[i], u) && face_has_vertex(r, faces[i], v))
            return static_cast<int>(i);
    return -1;
}

// Inserts dart nd (tail u) at the first corner of `face` at u, so the new
// edge runs through that face.
inline void insert_dart_at_face_corner(RotationSystem& r, const std::vector<int>& face, int u,
                                       int nd) {
    auto& rot = r.rotation[static_cast<std::size_t>(u)];
    if (rot.empty()) {
        rot.push_back(nd);
        return;
    }
    for (std::size_t j = 0; j < face.size(); ++j) {
        if (dart_tail(r, face[j]) != u) continue;
        int prev = face[(j + face.size() - 1) % face.size()];
        int anchor = dart_reverse(prev);  // dart at u whose successor is face[j]
        auto it = std::find(rot.begin(), rot.end(), anchor);
        if (it == rot.end()) throw embedding_error("corrupt face trace");
        rot.insert(it + 1, nd);
        return;
    }
    throw embedding_error("vertex " + std::to_string(u) + " is not on the chosen face");
}

}  // namespace detail

// Disjoint union of two embedded graphs plus edges u-x and v-y, spliced so the
// resulting genus is the sum of the input genera: u-x merges a face holding
// {u, v} with a face holding {x, y}; v-y then subdivides the merged face.
inline RotationSystem embedding_join(const RotationSystem& r1, int u, int v,
                                     const RotationSystem& r2, int x, int y) {
    FaceTrace t1 = trace_faces(r1);
    FaceTrace t2 = trace_faces(r2);
    int f1 = detail::first_face_with(r1, t1.faces, u, v);
    if (f1 < 0) throw embedding_error("join: u and v share no face");
    int f2 = detail::first_face_with(r2, t2.faces, x, y);
    if (f2 < 0) throw embedding_error("join: x and y share no face");

    RotationSystem r;
    r.n = r1.n + r2.n;
    r.edges = r1.edges;
    const int dart_shift = 2 * static_cast<int>(r1.edges.size());
    for (auto [a, b] : r2.edges) r.edges.push_back({a + r1.n, b + r1.n});
    r.rotation = r1.rotation;
    for (const auto& rot : r2.rotation) {
        std::vector<int> shifted;
        for (int d : rot) shifted.push_back(d + dart_shift);
        r.rotation.push_back(std::move(shifted));
    }
    std::vector<int> face2;
    for (int d : t2.faces[static_cast<std::size_t>(f2)]) face2.push_back(d + dart_shift);

    int ex = static_cast<int>(r.edges.size());
    r.edges.push_back({u, x + r1.n});
    detail::insert_dart_at_face_corner(r, t1.faces[static_cast<std::size_t>(f1)], u, 2 * ex);
    detail::insert_dart_at_face_corner(r, face2, x + r1.n, 2 * ex + 1);

    FaceTrace merged = trace_faces(r);
    int fm = detail::first_face_with(r, merged.faces, v, y + r1.n);
    if (fm < 0)
        throw embedding_error("join: v and y do not share the merged face");
    int ey = static_cast<int>(r.edges.size());
    r.edges.push_back({v, y + r1.n});
    detail::insert_dart_at_face_corner(r, merged.faces[static_cast<std::size_t>(fm)], v, 2 * ey);
    detail::insert_dart_at_face_corner(r, merged.faces[static_cast<std::size_t>(fm)], y + r1.n,
                                       2 * ey + 1);
    validate_rotation(r);
    return r;
}

// Replaces each edge by l parallel copies (in order at the lower endpoint,
// reversed at the higher one) and subdivides each copy. Gains (l-1) faces per
// original edge and keeps the genus.
inline RotationSystem multiply_subdivide_embedding(const RotationSystem& r, int l) {
    if (l < 2) throw std::invalid_argument("multiply_subdivide_embedding: l must be at least 2");
    validate_rotation(r);
    const int q = static_cast<int>(r.edges.size());
    RotationSystem out;
    out.n = r.n + l * q;
    out.edges.resize(static_cast<std::size_t>(2 * l * q));
    auto sub_vertex = [&](int j, int i) { return r.n + j * l + i; };
    auto lo_half = [&](int j, int i) { return 2 * (j * l + i); };      // (lo, s_{j,i})
    auto hi_half = [&](int j, int i) { return 2 * (j * l + i) + 1; };  // (s_{j,i}, hi)
    for (int j = 0; j < q; ++j) {
        int lo = std::min(r.edges[static_cast<std::size_t>(j)].first,
                          r.edges[static_cast<std::size_t>(j)].second);
        int hi = std::max(r.edges[static_cast<std::size_t>(j)].first,
                          r.edges[static_cast<std::size_t>(j)].second);
        for (int i = 0; i < l; ++i) {
            out.edges[static_cast<std::size_t>(lo_half(j, i))] = {lo, sub_vertex(j, i)};
            out.edges[static_cast<std::size_t>(hi_half(j, i))] = {sub_vertex(j, i), hi};
        }
    }
    out.rotation.assign(static_cast<std::size_t>(out.n), {});
    for (int w = 0; w < r.n; ++w) {
        auto& rot = out.rotation[static_cast<std::size_t>(w)];
        for (int d : r.rotation[static_cast<std::size_t>(w)]) {
            int j = dart_edge(d);
            int other = dart_head(r, d);
            if (w < other) {
                for (int i = 0; i < l; ++i) rot.push_back(2 * lo_half(j, i));  // u-end at lo
            } else {
                for (int i = l - 1; i >= 0; --i) rot.push_back(2 * hi_half(j, i) + 1);
            }
        }
    }
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < l; ++i)
            out.rotation[static_cast<std::size_t>(sub_vertex(j, i))] = {
                2 * lo_half(j, i) + 1, 2 * hi_half(j, i)};
    validate_rotation(out);
    return out;
}

// The plain graph beneath a rotation system; requires it to be simple.
inline Graph underlying_graph(const RotationSystem& r) {
    return Graph(r.n, r.edges);
}

}  // namespace eqmatch
