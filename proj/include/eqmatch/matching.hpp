#pragma once

// Maximum matching (Edmonds' blossom contraction) and exhaustive enumeration
// of maximal matchings with include/exclude branching.

#include <cstdint>
#include <limits>
#include <queue>

#include "eqmatch/graph.hpp"

namespace eqmatch {

struct Matching {
    std::vector<VertexPair> edges;  // normalized u < v, sorted

    int size() const { return static_cast<int>(edges.size()); }

    bool covers(int v) const {
        for (auto [a, b] : edges)
            if (a == v || b == v) return true;
        return false;
    }

    bool operator==(const Matching&) const = default;
};

inline Matching make_matching(std::vector<VertexPair> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return Matching{std::move(edges)};
}

inline std::vector<char> covered_mask(const Graph& g, const Matching& m) {
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : m.edges) {
        covered.at(static_cast<std::size_t>(u)) = 1;
        covered.at(static_cast<std::size_t>(v)) = 1;
    }
    return covered;
}

inline bool is_matching(const Graph& g, const Matching& m) {
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v)) return false;
        if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)])
            return false;
        covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Edmonds' algorithm with blossom contraction, O(V^3). Deterministic: vertices
// are seeded and scanned in increasing order.

namespace detail {

class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(static_cast<std::size_t>(n_), -1) {}

    std::vector<int> run() {
        for (int u = 0; u < n_; ++u) {
            if (match_[static_cast<std::size_t>(u)] >= 0) continue;
            for (int v : g_.neighbors(u))
                if (match_[static_cast<std::size_t>(v)] < 0) {
                    match_[static_cast<std::size_t>(u)] = v;
                    match_[static_cast<std::size_t>(v)] = u;
                    break;
                }
        }
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] < 0) {
                int w = find_augmenting_path(v);
                if (w >= 0) augment(w);
            }
        return match_;
    }

private:
    int find_augmenting_path(int root) {
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        used_.assign(static_cast<std::size_t>(n_), 0);
        used_[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] >= 0 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] >= 0)) {
                    contract_blossom(v, to, q);
                } else if (parent_[static_cast<std::size_t>(to)] < 0) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    int mt = match_[static_cast<std::size_t>(to)];
                    if (mt < 0) return to;
                    used_[static_cast<std::size_t>(mt)] = 1;
                    q.push(mt);
                }
            }
        }
        return -1;
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> mark(static_cast<std::size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            mark[static_cast<std::size_t>(a)] = 1;
            int ma = match_[static_cast<std::size_t>(a)];
            if (ma < 0) break;
            a = parent_[static_cast<std::size_t>(ma)];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (mark[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(std::vector<char>& in_blossom, int v, int stop, int child) {
        while (base_[static_cast<std::size_t>(v)] != stop) {
            int mv = match_[static_cast<std::size_t>(v)];
            in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    void contract_blossom(int v, int to, std::queue<int>& q) {
        int cur_base = lowest_common_base(v, to);
        std::vector<char> in_blossom(static_cast<std::size_t>(n_), 0);
        mark_path(in_blossom, v, cur_base, to);
        mark_path(in_blossom, to, cur_base, v);
        for (int i = 0; i < n_; ++i)
            if (in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                base_[static_cast<std::size_t>(i)] = cur_base;
                if (!used_[static_cast<std::size_t>(i)]) {
                    used_[static_cast<std::size_t>(i)] = 1;
                    q.push(i);
                }
            }
    }

    void augment(int v) {
        while (v >= 0) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int next = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_;
};

}  // namespace detail

inline Matching maximum_matching(const Graph& g) {
    auto mate = detail::BlossomMatcher(g).run();
    std::vector<VertexPair> edges;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[static_cast<std::size_t>(v)] > v) edges.push_back({v, mate[static_cast<std::size_t>(v)]});
    return make_matching(std::move(edges));
}

inline int matching_number(const Graph& g) { return maximum_matching(g).size(); }

inline bool has_perfect_matching(const Graph& g) {
    return g.vertex_count() % 2 == 0 && 2 * matching_number(g) == g.vertex_count();
}

inline bool is_maximal_matching(const Graph& g, const Matching& m) {
    if (!is_matching(g, m)) throw std::invalid_argument("is_maximal_matching: not a matching");
    auto covered = covered_mask(g, m);
    for (auto [u, v] : g.edges())
        if (!covered[static_cast<std::size_t>(u)] && !covered[static_cast<std::size_t>(v)])
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Maximal matching enumeration. Branches on the lowest uncovered vertex that
// still has an uncovered eligible neighbor: one branch per such neighbor, then
// one branch committing the vertex to stay unmatched. Every maximal matching
// is visited exactly once; a committed-unmatched pair of adjacent vertices can
// never become maximal, which prunes dead subtrees early.

struct MaximalMatchingSummary {
    std::uint64_t count = 0;
    int min_size = 0;
    int max_size = 0;
};

namespace detail {

template <typename Visitor, typename Stop>
class MaximalMatchingEnumerator {
public:
    MaximalMatchingEnumerator(const Graph& g, Visitor& visit, Stop& stop)
        : g_(g), visit_(visit), stop_(stop),
          covered_(static_cast<std::size_t>(g.vertex_count()), 0),
          unmatched_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    MaximalMatchingSummary run() {
        recurse();
        if (summary_.count == 0) summary_.min_size = 0;
        return summary_;
    }

private:
    bool free_vertex(int v) const {
        return !covered_[static_cast<std::size_t>(v)] && !unmatched_[static_cast<std::size_t>(v)];
    }

    // Returns false to abort the whole enumeration (stop predicate fired).
    bool recurse() {
        int branch_vertex = -1;
        for (int v = 0; v < g_.vertex_count() && branch_vertex < 0; ++v) {
            if (!free_vertex(v)) continue;
            for (int w : g_.neighbors(v))
                if (!covered_[static_cast<std::size_t>(w)]) {
                    branch_vertex = v;
                    break;
                }
        }
        if (branch_vertex < 0) return emit();

        auto vi = static_cast<std::size_t>(branch_vertex);
        covered_[vi] = 1;
        for (int w : g_.neighbors(branch_vertex)) {
            if (!free_vertex(w)) continue;
            covered_[static_cast<std::size_t>(w)] = 1;
            current_.push_back({std::min(branch_vertex, w), std::max(branch_vertex, w)});
            bool keep_going = recurse();
            current_.pop_back();
            covered_[static_cast<std::size_t>(w)] = 0;
            if (!keep_going) {
                covered_[vi] = 0;
                return false;
            }
        }
        covered_[vi] = 0;

        // Leave branch_vertex unmatched. Dead if an adjacent vertex already
        // made the same commitment while both stay uncovered.
        for (int w : g_.neighbors(branch_vertex))
            if (unmatched_[static_cast<std::size_t>(w)] && !covered_[static_cast<std::size_t>(w)])
                return true;
        unmatched_[vi] = 1;
        bool keep_going = recurse();
        unmatched_[vi] = 0;
        return keep_going;
    }

    bool emit() {
        Matching m = make_matching(current_);
        if (summary_.count == 0) {
            summary_.min_size = summary_.max_size = m.size();
        } else {
            summary_.min_size = std::min(summary_.min_size, m.size());
            summary_.max_size = std::max(summary_.max_size, m.size());
        }
        ++summary_.count;
        visit_(m);
        return !stop_(m);
    }

    const Graph& g_;
    Visitor& visit_;
    Stop& stop_;
    std::vector<char> covered_, unmatched_;
    std::vector<VertexPair> current_;
    MaximalMatchingSummary summary_;
};

}  // namespace detail

template <typename Visitor, typename Stop>
MaximalMatchingSummary enumerate_maximal_matchings(const Graph& g, Visitor&& visit, Stop&& stop) {
    detail::MaximalMatchingEnumerator<Visitor, Stop> e(g, visit, stop);
    return e.run();
}

template <typename Visitor>
MaximalMatchingSummary enumerate_maximal_matchings(const Graph& g, Visitor&& visit) {
    auto never = [](const Matching&) { return false; };
    return enumerate_maximal_matchings(g, visit, never);
}

inline MaximalMatchingSummary enumerate_maximal_matchings(const Graph& g) {
    auto ignore = [](const Matching&) {};
    return enumerate_maximal_matchings(g, ignore);
}

}  // namespace eqmatch
