#pragma once

// Genus machinery: closed-form genera of complete and complete bipartite
// graphs, the Euler-formula lower bound, and minimum-genus search over
// rotation systems (exhaustive for small graphs, simulated annealing beyond).

#include <cmath>
#include <random>

#include "eqmatch/rotation.hpp"

namespace eqmatch {

namespace detail {
inline long long ceil_div(long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -(-a / b);
}
}  // namespace detail

// Ringel--Youngs values. The nonorientable K_7 is the lone exception to its
// formula.
inline int genus_complete(int n, bool orientable) {
    if (n < 3) throw std::invalid_argument("genus_complete: n must be at least 3");
    long long a = n - 3, b = n - 4;
    if (orientable) return static_cast<int>(detail::ceil_div(a * b, 12));
    if (n == 7) return 3;
    return static_cast<int>(detail::ceil_div(a * b, 6));
}

inline int genus_complete_bipartite(int m, int n, bool orientable) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("genus_complete_bipartite: sides must be at least 2");
    long long a = m - 2, b = n - 2;
    return static_cast<int>(detail::ceil_div(a * b, orientable ? 4 : 2));
}

// ceil((q - 3p + 6)/6) from 2q >= 3r, or ceil((q - 2p + 4)/4) when faces have
// length at least four (bipartite), clamped at zero.
inline int euler_genus_lower_bound(const Graph& g, bool bipartite_aware) {
    if (!is_connected(g)) throw std::invalid_argument("euler bound requires a connected graph");
    if (g.edge_count() < 1) throw std::invalid_argument("euler bound requires at least one edge");
    long long p = g.vertex_count(), q = g.edge_count();
    long long val;
    if (bipartite_aware && find_bipartition(g))
        val = detail::ceil_div(q - 2 * p + 4, 4);
    else
        val = detail::ceil_div(q - 3 * p + 6, 6);
    return static_cast<int>(std::max(0ll, val));
}

struct GenusSearchResult {
    RotationSystem rotation;
    int genus = 0;
    int euler_bound = 0;   // best applicable Euler-formula lower bound
    bool certified = false;
    std::uint64_t inspected = 0;  // rotation systems tried (exhaustive) / moves (anneal)
};

namespace detail {

inline int count_faces(const std::vector<int>& succ, std::vector<std::uint64_t>& stamp,
                       std::uint64_t gen) {
    int faces = 0;
    const int nd = static_cast<int>(succ.size());
    for (int d0 = 0; d0 < nd; ++d0) {
        if (stamp[static_cast<std::size_t>(d0)] == gen) continue;
        ++faces;
        int d = d0;
        do {
            stamp[static_cast<std::size_t>(d)] = gen;
            d = succ[static_cast<std::size_t>(d ^ 1)];
        } while (d != d0);
    }
    return faces;
}

inline int applicable_euler_bound(const Graph& g) {
    return euler_genus_lower_bound(g, /*bipartite_aware=*/true);
}

}  // namespace detail

// Provably minimum genus by sweeping all rotation systems. The first dart of
// every rotation is pinned (cyclic orders), and one maximum-degree vertex is
// additionally restricted to one representative per reflection pair, which is
// sound because mirroring every rotation preserves the face count. Stops as
// soon as the Euler lower bound is attained.
inline GenusSearchResult min_genus_exhaustive(const Graph& g,
                                              std::uint64_t limit = 500000000ull) {
    if (!is_connected(g)) throw std::invalid_argument("genus search requires a connected graph");
    const int n = g.vertex_count();
    GenusSearchResult out;
    if (g.edge_count() == 0) {
        out.rotation = rotation_from_graph(g);
        out.certified = true;
        return out;
    }
    out.euler_bound = detail::applicable_euler_bound(g);

    RotationSystem base = rotation_from_graph(g);
    int pivot = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(pivot)) pivot = v;

    // saturating size estimate before materializing any permutation list
    std::uint64_t total = 1;
    for (int v = 0; v < n && total <= limit; ++v) {
        std::uint64_t f = 1;
        for (int i = 2; i < g.degree(v) && f <= limit; ++i) f *= static_cast<std::uint64_t>(i);
        if (v == pivot && g.degree(v) >= 3) f = std::max<std::uint64_t>(1, f / 2);
        total = (f > limit / std::max<std::uint64_t>(1, total)) ? limit + 1 : total * f;
    }
    if (total > limit)
        throw embedding_error("exhaustive genus search infeasible: more than " +
                              std::to_string(limit) + " rotation systems");

    std::vector<std::vector<std::vector<int>>> perms(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& darts = base.rotation[static_cast<std::size_t>(v)];
        std::vector<int> tail(darts.begin() + (darts.empty() ? 0 : 1), darts.end());
        std::sort(tail.begin(), tail.end());
        do {
            if (v == pivot && tail.size() >= 2) {
                std::vector<int> mirrored(tail.rbegin(), tail.rend());
                if (mirrored < tail) continue;
            }
            std::vector<int> rot;
            if (!darts.empty()) rot.push_back(darts[0]);
            rot.insert(rot.end(), tail.begin(), tail.end());
            perms[static_cast<std::size_t>(v)].push_back(std::move(rot));
        } while (std::next_permutation(tail.begin(), tail.end()));
    }

    const int nd = 2 * g.edge_count();
    std::vector<int> succ(static_cast<std::size_t>(nd), -1);
    std::vector<std::uint64_t> stamp(static_cast<std::size_t>(nd), 0);
    std::uint64_t gen = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    auto apply = [&](int v) {
        const auto& rot = perms[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]];
        for (std::size_t i = 0; i < rot.size(); ++i)
            succ[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
    };
    for (int v = 0; v < n; ++v) apply(v);

    int best_faces = -1;
    std::vector<std::size_t> best_idx;
    const int target_faces = g.edge_count() - g.vertex_count() + 2 - 2 * out.euler_bound;
    for (;;) {
        ++out.inspected;
        int faces = detail::count_faces(succ, stamp, ++gen);
        if (faces > best_faces) {
            best_faces = faces;
            best_idx = idx;
            if (best_faces == target_faces) break;  // Euler bound met: provably minimal
        }
        int k = 0;
        while (k < n) {
            auto ki = static_cast<std::size_t>(k);
            if (++idx[ki] < perms[ki].size()) {
                apply(k);
                break;
            }
            idx[ki] = 0;
            apply(k);
            ++k;
        }
        if (k == n) break;
    }

    out.rotation = base;
    for (int v = 0; v < n; ++v)
        out.rotation.rotation[static_cast<std::size_t>(v)] =
            perms[static_cast<std::size_t>(v)][best_idx[static_cast<std::size_t>(v)]];
    out.genus = (2 - (g.vertex_count() - g.edge_count() + best_faces)) / 2;
    out.certified = true;
    return out;
}

// Simulated annealing over rotation systems: moves are adjacent
// transpositions or single-dart reinsertions in one vertex's rotation, with
// geometric cooling and periodic restarts from a shuffled state.
// Deterministic for a fixed seed. The result is certified minimal only when
// it reaches the Euler lower bound.
inline GenusSearchResult min_genus_anneal(const Graph& g, std::uint64_t seed,
                                          std::uint64_t budget) {
    if (!is_connected(g)) throw std::invalid_argument("genus search requires a connected graph");
    GenusSearchResult out;
    if (g.edge_count() == 0) {
        out.rotation = rotation_from_graph(g);
        out.certified = true;
        return out;
    }
    out.euler_bound = detail::applicable_euler_bound(g);

    RotationSystem cur = rotation_from_graph(g);
    const int n = g.vertex_count();
    const int nd = 2 * g.edge_count();
    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) movable.push_back(v);

    std::vector<int> succ(static_cast<std::size_t>(nd), -1);
    auto apply_vertex = [&](int v) {
        const auto& rot = cur.rotation[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < rot.size(); ++i)
            succ[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
    };
    for (int v = 0; v < n; ++v) apply_vertex(v);

    std::vector<std::uint64_t> stamp(static_cast<std::size_t>(nd), 0);
    std::uint64_t gen = 0;
    int cur_faces = detail::count_faces(succ, stamp, ++gen);
    int best_faces = cur_faces;
    RotationSystem best = cur;
    const int target_faces = g.edge_count() - g.vertex_count() + 2 - 2 * out.euler_bound;

    std::mt19937_64 rng(seed);
    if (best_faces != target_faces && !movable.empty()) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const std::uint64_t segments = 4;
        const std::uint64_t seg_len = std::max<std::uint64_t>(1, budget / segments);
        const double t_hot = 1.0, t_cold = 0.01;
        bool done = false;
        std::vector<int> saved;
        for (std::uint64_t s = 0; s < segments && !done && out.inspected < budget; ++s) {
            if (s > 0) {  // restart from a shuffled state, keeping the best found
                for (int v = 0; v < n; ++v)
                    std::shuffle(cur.rotation[static_cast<std::size_t>(v)].begin(),
                                 cur.rotation[static_cast<std::size_t>(v)].end(), rng);
                for (int v = 0; v < n; ++v) apply_vertex(v);
                cur_faces = detail::count_faces(succ, stamp, ++gen);
            }
            for (std::uint64_t step = 0; step < seg_len && out.inspected < budget; ++step) {
                ++out.inspected;
                double t = t_hot * std::pow(t_cold / t_hot,
                                            static_cast<double>(step) / static_cast<double>(seg_len));
                int w = movable[rng() % movable.size()];
                auto& rot = cur.rotation[static_cast<std::size_t>(w)];
                saved = rot;
                if (rng() & 1) {
                    std::size_t i = rng() % rot.size();
                    std::swap(rot[i], rot[(i + 1) % rot.size()]);
                } else {
                    std::size_t i = rng() % rot.size();
                    int d = rot[i];
                    rot.erase(rot.begin() + static_cast<long>(i));
                    rot.insert(rot.begin() + static_cast<long>(rng() % (rot.size() + 1)), d);
                }
                apply_vertex(w);
                int faces = detail::count_faces(succ, stamp, ++gen);
                int delta = faces - cur_faces;
                if (delta >= 0 || unit(rng) < std::exp(delta / t)) {
                    cur_faces = faces;
                    if (faces > best_faces) {
                        best_faces = faces;
                        best = cur;
                        if (best_faces == target_faces) {
                            done = true;
                            break;
                        }
                    }
                } else {
                    rot = saved;
                    apply_vertex(w);
                }
            }
        }
    }

    out.rotation = best;
    out.genus = (2 - (g.vertex_count() - g.edge_count() + best_faces)) / 2;
    out.certified = out.genus == out.euler_bound;
    return out;
}

}  // namespace eqmatch
