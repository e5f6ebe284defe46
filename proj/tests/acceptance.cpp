// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Thresholds and tolerances are pinned in code; see the assertions.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>

#include "eqmatch/bounds.hpp"
#include "eqmatch/constructions.hpp"
#include "eqmatch/equimatch.hpp"
#include "eqmatch/genus.hpp"
#include "eqmatch/reports.hpp"

using namespace eqmatch;

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int criterion, const std::string& name, bool pass) {
    std::printf("ACCEPTANCE %d (%s): %s\n", criterion, name.c_str(), pass ? "PASS" : "FAIL");
    std::fflush(stdout);
}

template <typename Fn>
void for_each_labeled_graph(int n, Fn fn) {
    std::vector<VertexPair> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<VertexPair> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        fn(Graph(n, std::move(edges)));
    }
}

// The 2-connected corpus for criteria 3, 4 and 10.
std::vector<std::pair<std::string, Graph>> biconnected_corpus() {
    std::vector<std::pair<std::string, Graph>> out = {
        {"C_5", make_cycle(5)},       {"C_7", make_cycle(7)},
        {"K_5", make_complete(5)},    {"K_7", make_complete(7)},
        {"K_9", make_complete(9)},
    };
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            out.push_back({"union(" + std::to_string(n) + "," + std::to_string(m) + ")",
                           union_construction(n, m).graph});
    for (int g = 0; g <= 2; ++g)
        out.push_back({"lower_bound(" + std::to_string(g) + ")", lower_bound_graph(g, true).graph});
    return out;
}

// First adjacent pair of vertices sharing a face (for the splice's first block).
std::pair<int, int> adjacent_cofacial_pair(const RotationSystem& r) {
    auto trace = trace_faces(r);
    Graph g = underlying_graph(r);
    for (const auto& face : trace.faces) {
        std::vector<int> seen;
        for (int d : face) {
            int t = dart_tail(r, d);
            if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            for (std::size_t j = i + 1; j < seen.size(); ++j)
                if (g.has_edge(seen[i], seen[j])) return {seen[i], seen[j]};
    }
    throw std::runtime_error("no adjacent cofacial pair");
}

// First two candidate vertices sharing a face.
std::pair<int, int> cofacial_from(const RotationSystem& r, const std::vector<int>& candidates) {
    auto trace = trace_faces(r);
    for (const auto& face : trace.faces) {
        std::vector<int> hits;
        for (int d : face) {
            int t = dart_tail(r, d);
            if (std::find(candidates.begin(), candidates.end(), t) != candidates.end() &&
                std::find(hits.begin(), hits.end(), t) == hits.end())
                hits.push_back(t);
        }
        if (hits.size() >= 2) return {hits[0], hits[1]};
    }
    throw std::runtime_error("no cofacial candidate pair");
}

}  // namespace

TEST_CASE("criterion 1: Sumner sweep on at most 6 vertices", "[c1]") {
    Stopwatch watch;
    long long checked = 0, discrepancies = 0;
    auto allowed = [](const Shape& s) {
        return (s.kind == ShapeKind::Complete && (s.a == 2 || s.a == 4 || s.a == 6)) ||
               (s.kind == ShapeKind::CompleteBipartite && s.a == s.b);
    };
    for (int n = 1; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_connected(g)) return;
            ++checked;
            if (is_randomly_matchable(g) != allowed(classify_shape(g))) ++discrepancies;
        });
    double secs = watch.seconds();
    std::printf("  - connected graphs checked: %lld, discrepancies: %lld, %.1fs\n", checked,
                discrepancies, secs);
    bool pass = discrepancies == 0 && secs < 60.0;
    report(1, "Sumner sweep", pass);
    CHECK(discrepancies == 0);
    CHECK(secs < 60.0);
}

TEST_CASE("criterion 2: bipartite criterion vs oracle on at most 7 vertices", "[c2]") {
    Stopwatch watch;
    long long checked = 0, mismatches = 0;
    for (int n = 1; n <= 7; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            auto parts = find_bipartition(g);
            if (!parts || parts->side_a.size() == parts->side_b.size() || !is_connected(g))
                return;
            ++checked;
            if (bipartite_equimatchable_criterion(g) != is_equimatchable(g).equimatchable)
                ++mismatches;
        });
    double secs = watch.seconds();
    std::printf("  - connected bipartite graphs with unequal sides: %lld, mismatches: %lld, %.1fs\n",
                checked, mismatches, secs);
    bool pass = mismatches == 0 && secs < 300.0;
    report(2, "bipartite criterion vs oracle", pass);
    CHECK(mismatches == 0);
    CHECK(secs < 300.0);
}

TEST_CASE("criterion 3: remainder verifier on the corpus", "[c3]") {
    Stopwatch watch;
    bool clean_ok = true;
    for (const auto& [name, g] : biconnected_corpus()) {
        auto violations = remainder_violations(g);
        if (!violations.empty()) {
            clean_ok = false;
            std::printf("  - unexpected violations on %s: %zu\n", name.c_str(),
                        violations.size());
        }
    }
    auto three_triangles = amalgam_construction(0, 2, true).graph;
    std::size_t amalgam_violations = remainder_violations(three_triangles).size();
    std::printf("  - 3-triangle amalgam violations: %zu (expected > 0)\n", amalgam_violations);
    auto bowtie = amalgam_construction(0, 1, true).graph;
    std::size_t bowtie_violations = remainder_violations(bowtie).size();
    std::printf("  - bowtie violations (observed, not gated): %zu\n", bowtie_violations);
    double secs = watch.seconds();
    std::printf("  - %.1fs\n", secs);
    bool pass = clean_ok && amalgam_violations > 0 && secs < 300.0;
    report(3, "remainder verifier", pass);
    CHECK(clean_ok);
    CHECK(amalgam_violations > 0);
    CHECK(secs < 300.0);
}

TEST_CASE("criterion 4: isolating matchings stay within the degree bound", "[c4]") {
    auto corpus = biconnected_corpus();
    corpus.push_back({"bowtie", amalgam_construction(0, 1, true).graph});
    corpus.push_back({"3-triangle amalgam", amalgam_construction(0, 2, true).graph});
    long long checked = 0, violations = 0;
    for (const auto& [name, g] : corpus) {
        if (!is_factor_critical(g)) {
            ++violations;
            std::printf("  - corpus graph not factor-critical: %s\n", name.c_str());
            continue;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            ++checked;
            auto m = isolating_from_perfect_matching(g, v);
            if (m.matching.size() > g.degree(v) || !matching_isolates(g, v, m.matching))
                ++violations;
        }
    }
    std::printf("  - vertices checked: %lld, violations: %lld\n", checked, violations);
    bool pass = violations == 0;
    report(4, "isolating matching degree bound", pass);
    CHECK(violations == 0);
}

TEST_CASE("criterion 5: genus search vs the closed-form values", "[c5]") {
    Stopwatch watch;
    bool pass = true;

    struct ExhaustiveCase { std::string name; Graph g; int want; };
    std::vector<ExhaustiveCase> exhaustive = {
        {"K_5", make_complete(5), genus_complete(5, true)},
        {"K_6", make_complete(6), genus_complete(6, true)},
        {"K_{3,3}", make_complete_bipartite(3, 3), genus_complete_bipartite(3, 3, true)},
        {"K_{4,3}", make_complete_bipartite(4, 3), genus_complete_bipartite(4, 3, true)},
    };
    for (const auto& c : exhaustive) {
        auto res = min_genus_exhaustive(c.g);
        bool ok = res.genus == c.want && res.certified &&
                  trace_faces(res.rotation).stats.genus == c.want;
        std::printf("  - exhaustive %-8s genus %d (want %d) inspected %llu %s\n", c.name.c_str(),
                    res.genus, c.want, static_cast<unsigned long long>(res.inspected),
                    ok ? "ok" : "MISMATCH");
        pass = pass && ok;
        CHECK(ok);
    }

    struct AnnealCase { std::string name; Graph g; int want; };
    std::vector<AnnealCase> anneal = {
        {"K_7", make_complete(7), 1},
        {"K_8", make_complete(8), 2},
        {"K_{4,4}", make_complete_bipartite(4, 4), 1},
        {"K_{5,4}", make_complete_bipartite(5, 4), 2},
    };
    for (const auto& c : anneal) {
        auto res = min_genus_anneal(c.g, 1, 1000000);  // budget within the 10^6 cap
        bool ok = res.genus == c.want && res.certified && res.euler_bound == c.want;
        std::printf("  - anneal     %-8s genus %d (want %d, euler bound %d) moves %llu %s\n",
                    c.name.c_str(), res.genus, c.want, res.euler_bound,
                    static_cast<unsigned long long>(res.inspected), ok ? "certified" : "MISS");
        pass = pass && ok;
        CHECK(ok);
    }

    double secs = watch.seconds();
    std::printf("  - %.1fs\n", secs);
    pass = pass && secs < 600.0;
    report(5, "genus search vs closed forms", pass);
    CHECK(secs < 600.0);
}

TEST_CASE("criterion 6: Euler bound equals the closed forms exactly", "[c6]") {
    long long cases = 0, mismatches = 0;
    for (int n = 3; n <= 50; ++n) {
        ++cases;
        if (euler_genus_lower_bound(make_complete(n), false) != genus_complete(n, true))
            ++mismatches;
    }
    for (int m = 2; m <= 50; ++m)
        for (int n = 2; n <= 50; ++n) {
            ++cases;
            if (euler_genus_lower_bound(make_complete_bipartite(m, n), true) !=
                genus_complete_bipartite(m, n, true))
                ++mismatches;
        }
    std::printf("  - cases: %lld, mismatches: %lld\n", cases, mismatches);
    bool pass = mismatches == 0;
    report(6, "Euler bound identity", pass);
    CHECK(mismatches == 0);
    CHECK(cases == 2449);  // 48 complete + 49*49 complete bipartite
}

TEST_CASE("criterion 7: embedding join additivity and multiply-subdivide", "[c7]") {
    bool pass = true;

    auto c4 = min_genus_exhaustive(make_cycle(4)).rotation;
    auto k22 = min_genus_exhaustive(make_complete_bipartite(2, 2)).rotation;
    auto k33 = min_genus_exhaustive(make_complete_bipartite(3, 3)).rotation;
    auto k43 = min_genus_exhaustive(make_complete_bipartite(4, 3)).rotation;
    auto k44 = min_genus_anneal(make_complete_bipartite(4, 4), 1, 1000000);
    auto k54 = min_genus_anneal(make_complete_bipartite(5, 4), 1, 1000000);
    REQUIRE(k44.certified);
    REQUIRE(k54.certified);

    struct JoinCase {
        std::string name;
        const RotationSystem* r1;
        const RotationSystem* r2;
        std::vector<int> larger_side;  // of r2
        int want;
    };
    std::vector<JoinCase> joins = {
        {"C_4 + C_4", &c4, &c4, {0, 1}, 0},
        {"K_{2,2} + K_{3,3}", &k22, &k33, {0, 1, 2}, 1},
        {"K_{3,3} + K_{4,3}", &k33, &k43, {0, 1, 2, 3}, 2},
        {"K_{4,4} + K_{2,2}", &k44.rotation, &k22, {0, 1}, 1},
        {"K_{5,4} + K_{3,3}", &k54.rotation, &k33, {0, 1, 2}, 3},
    };
    for (const auto& c : joins) {
        auto [u, v] = adjacent_cofacial_pair(*c.r1);
        auto [x, y] = cofacial_from(*c.r2, c.larger_side);
        auto joined = embedding_join(*c.r1, u, v, *c.r2, x, y);
        int got = trace_faces(joined).stats.genus;
        bool ok = got == c.want &&
                  joined.edges.size() == c.r1->edges.size() + c.r2->edges.size() + 2;
        std::printf("  - join %-20s genus %d (want %d) %s\n", c.name.c_str(), got, c.want,
                    ok ? "ok" : "MISMATCH");
        pass = pass && ok;
        CHECK(ok);
    }

    struct SubCase { std::string name; RotationSystem r; int l; };
    std::vector<SubCase> subs = {
        {"planar K_4", min_genus_exhaustive(make_complete(4)).rotation, 2},
        {"C_3", rotation_from_graph(make_cycle(3)), 2},
        {"C_3", rotation_from_graph(make_cycle(3)), 3},
        {"K_2", rotation_from_graph(make_complete(2)), 3},
        {"toroidal K_{3,3}", k33, 2},
    };
    for (const auto& c : subs) {
        auto before = trace_faces(c.r).stats;
        auto after = trace_faces(multiply_subdivide_embedding(c.r, c.l)).stats;
        bool ok = after.genus == before.genus && after.r == before.r + (c.l - 1) * before.q;
        std::printf("  - multisub %-16s l=%d r %d -> %d genus %d -> %d %s\n", c.name.c_str(), c.l,
                    before.r, after.r, before.genus, after.genus, ok ? "ok" : "MISMATCH");
        pass = pass && ok;
        CHECK(ok);
    }

    report(7, "join additivity and multiply-subdivide", pass);
}

TEST_CASE("criterion 8: construction claims verified by the oracle", "[c8]") {
    bool pass = true;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            auto res = union_construction(n, m);
            bool ok = is_equimatchable(res.graph).equimatchable &&
                      is_factor_critical(res.graph) && classify_basic(res.graph).biconnected;
            if (!ok) std::printf("  - union(%d,%d) FAILED its claims\n", n, m);
            pass = pass && ok;
            CHECK(ok);
        }
    std::printf("  - union(n,m) claims verified for n,m <= 3\n");

    for (const auto& [name, base] : {std::pair<std::string, Graph>{"C_3", make_cycle(3)},
                                     {"K_4", make_complete(4)}})
        for (int l : {2, 3}) {
            auto res = multiply_subdivide(base, l);
            auto basic = classify_basic(res.graph);
            bool ok = is_equimatchable(res.graph).equimatchable && basic.biconnected &&
                      basic.bipartition.has_value();
            std::printf("  - multisub(%s, l=%d): %d vertices, claims %s\n", name.c_str(), l,
                        res.graph.vertex_count(), ok ? "ok" : "FAILED");
            pass = pass && ok;
            CHECK(ok);
        }

    const int expected_sizes[3] = {9, 11, 15};
    for (int g = 0; g <= 2; ++g) {
        auto res = lower_bound_graph(g, true);
        long long floor_sqrt_2g = static_cast<long long>(std::sqrt(2.0 * g) + 1e-9);
        bool ok = res.graph.vertex_count() == expected_sizes[g] &&
                  res.graph.vertex_count() >= 4 * floor_sqrt_2g + 5;
        std::printf("  - lower_bound(%d): %d vertices (want %d) %s\n", g,
                    res.graph.vertex_count(), expected_sizes[g], ok ? "ok" : "MISMATCH");
        pass = pass && ok;
        CHECK(ok);
    }

    report(8, "construction claims", pass);
}

TEST_CASE("criterion 9: bounds arithmetic", "[c9]") {
    bool pass = true;

    double c3 = solve_degree_threshold(make_surface(true, 3)).c_star;
    bool c3_ok = std::abs(c3 - 10.931) <= 1e-3 && c3 <= 12.0;
    std::printf("  - c_3 = %.6f (want 10.931 +- 1e-3, <= 12) %s\n", c3, c3_ok ? "ok" : "FAIL");
    pass = pass && c3_ok;
    CHECK(c3_ok);

    double ct3 = solve_degree_threshold(make_surface(false, 3)).c_star;
    bool ct3_ok = ct3 <= 10.0;
    std::printf("  - c~_3 = %.6f (<= 10) %s\n", ct3, ct3_ok ? "ok" : "FAIL");
    pass = pass && ct3_ok;
    CHECK(ct3_ok);

    bool monotone = true;
    double prev_o = 1e9, prev_n = 1e9;
    std::vector<long long> grid;
    for (long long g = 3; g <= 100; ++g) grid.push_back(g);
    for (long long g = 300; g <= 1000000000ll; g *= 3) grid.push_back(g);
    for (long long g : grid) {
        double co = solve_degree_threshold(make_surface(true, g)).c_star;
        double cn = solve_degree_threshold(make_surface(false, g)).c_star;
        monotone = monotone && co < prev_o && cn < prev_n;
        prev_o = co;
        prev_n = cn;
    }
    std::printf("  - c_g and c~_h strictly decreasing over the grid: %s\n",
                monotone ? "ok" : "FAIL");
    pass = pass && monotone;
    CHECK(monotone);

    // Stated tolerance: within 1e-6 of the limits at genus 1e10. The formula
    // value sits (5 + 60/sqrt(112))/(2 sqrt(g)) above the limit, about 5.3e-5
    // at this genus, so this sub-check cannot pass as stated; it is asserted
    // anyway and left red rather than loosened.
    const double lim_o = 2.0 * std::sqrt(7.0) + 2.0;
    const double lim_n = std::sqrt(2.0) * (std::sqrt(7.0) + 1.0);
    double gap_o =
        std::abs(solve_degree_threshold(make_surface(true, 10000000000ll)).c_star - lim_o);
    double gap_n =
        std::abs(solve_degree_threshold(make_surface(false, 10000000000ll)).c_star - lim_n);
    bool limits_ok = gap_o <= 1e-6 && gap_n <= 1e-6;
    std::printf("  - limit gaps at genus 1e10: orientable %.3e, nonorientable %.3e "
                "(stated tolerance 1e-6) %s\n",
                gap_o, gap_n, limits_ok ? "ok" : "FAIL");
    double envelope = (5.0 + 60.0 / std::sqrt(112.0)) / (2.0 * std::sqrt(1e10));
    std::printf("    (predicted convergence envelope at 1e10: %.3e)\n", envelope);
    pass = pass && limits_ok;
    CHECK(gap_o <= 1e-6);
    CHECK(gap_n <= 1e-6);

    bool dstar_ok = true;
    for (long long g : grid) {
        dstar_ok = dstar_ok && solve_degree_threshold(make_surface(true, g)).d_star >= 6.0;
        dstar_ok = dstar_ok && solve_degree_threshold(make_surface(false, g)).d_star >= 6.0;
    }
    std::printf("  - d_star >= 6 on the grid: %s\n", dstar_ok ? "ok" : "FAIL");
    pass = pass && dstar_ok;
    CHECK(dstar_ok);

    report(9, "bounds arithmetic", pass);
}

TEST_CASE("criterion 10: size sandwich for corpus graphs with certified genus", "[c10]") {
    bool pass = true;
    int certified_count = 0;
    for (const auto& [name, g] : biconnected_corpus()) {
        // certificate: exhaustive search when feasible, else annealing that
        // reaches the Euler lower bound
        int genus = -1;
        try {
            auto res = min_genus_exhaustive(g, 20000000ull);
            genus = res.genus;
        } catch (const embedding_error&) {
            auto res = min_genus_anneal(g, 1, 1000000);
            if (res.certified) genus = res.genus;
        }
        if (genus < 0) {
            std::printf("  - %-16s no certificate (skipped by the criterion's own filter)\n",
                        name.c_str());
            continue;
        }
        ++certified_count;
        auto bounds = size_bounds(make_surface(true, genus));
        bool ok = bounds.lower - 4.0 <= g.vertex_count() && g.vertex_count() <= bounds.upper;
        std::printf("  - %-16s genus %d, |V| = %2d in [%.2f, %.2f] %s\n", name.c_str(), genus,
                    g.vertex_count(), bounds.lower - 4.0, bounds.upper, ok ? "ok" : "OUTSIDE");
        pass = pass && ok;
        CHECK(ok);
    }
    std::printf("  - certified graphs: %d\n", certified_count);
    pass = pass && certified_count >= 10;
    CHECK(certified_count >= 10);  // C_5..K_9 and the whole union family certify

    report(10, "size sandwich", pass);
}
