#pragma once

// Size-bound arithmetic for 2-connected factor-critical equimatchable graphs
// on a fixed surface, and the supporting degree-threshold solution.

#include <cmath>

#include "eqmatch/graph.hpp"

namespace eqmatch {

struct Surface {
    bool orientable = true;
    long long genus = 0;  // handles, or crosscaps (>= 1) when nonorientable

    long long chi() const { return orientable ? 2 - 2 * genus : 2 - genus; }
};

inline Surface make_surface(bool orientable, long long genus) {
    if (genus < 0) throw std::invalid_argument("surface genus must be nonnegative");
    if (!orientable && genus < 1)
        throw std::invalid_argument("nonorientable genus must be at least 1");
    return Surface{orientable, genus};
}

// Largest randomly-matchable graph embeddable in the surface: the complete
// bipartite branch dominates the complete one, giving 4 + 4*sqrt(g)
// (orientable) or 4 + 2*sqrt(2h).
inline double randomly_matchable_size_bound(const Surface& s) {
    double g = static_cast<double>(s.genus);
    return s.orientable ? 4.0 + 4.0 * std::sqrt(g) : 4.0 + 2.0 * std::sqrt(2.0 * g);
}

// A graph cellularly embedded in s with more than this many vertices has a
// vertex of degree at most d.
inline double min_degree_threshold(const Surface& s, double d) {
    if (d < 6.0) throw std::invalid_argument("min_degree_threshold: d must be at least 6");
    return 6.0 * static_cast<double>(s.chi()) / (5.0 - d);
}

// Size bound once some vertex has degree at most d.
inline double size_bound_given_degree(const Surface& s, double d) {
    if (d < 0.0) throw std::invalid_argument("size_bound_given_degree: d must be nonnegative");
    double g = static_cast<double>(s.genus);
    return 5.0 + 2.0 * d +
           (s.orientable ? 4.0 * std::sqrt(g) : 2.0 * std::sqrt(2.0 * g));
}

struct DegreeThresholdSolution {
    double d_star = 0.0;  // smallest d >= 6 with 6*chi/(5-d) <= 5 + 2d + (genus term)
    double c_star = 0.0;  // resulting coefficient: size bound = c_star*sqrt(genus) + 5
};

// Balances the two size bounds above. Orientable surfaces have a closed form;
// nonorientable ones are solved by bisection (the quadratic root can fall
// below 6 for small h, in which case d = 6 already satisfies the inequality).
inline DegreeThresholdSolution solve_degree_threshold(const Surface& s) {
    if (s.genus < 3) throw std::invalid_argument("solve_degree_threshold: genus must be >= 3");
    DegreeThresholdSolution out;
    if (s.orientable) {
        double g = static_cast<double>(s.genus);
        double root = std::sqrt(112.0 * g + 120.0 * std::sqrt(g) + 129.0);
        out.d_star = (5.0 - 4.0 * std::sqrt(g) + root) / 4.0;
        out.c_star = (5.0 + 4.0 * std::sqrt(g) + root) / (2.0 * std::sqrt(g));
        return out;
    }
    double h = static_cast<double>(s.genus);
    double tail = 2.0 * std::sqrt(2.0 * h);
    auto gap = [&](double d) {
        return 6.0 * (2.0 - h) / (5.0 - d) - (5.0 + 2.0 * d + tail);
    };
    if (gap(6.0) <= 0.0) {
        out.d_star = 6.0;
    } else {
        double lo = 6.0, hi = 12.0;
        while (gap(hi) > 0.0) hi *= 2.0;
        for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
            double mid = 0.5 * (lo + hi);
            (gap(mid) > 0.0 ? lo : hi) = mid;
        }
        out.d_star = 0.5 * (lo + hi);
    }
    out.c_star = (2.0 * out.d_star + tail) / std::sqrt(h);
    return out;
}

struct BoundsReport {
    Surface surface;
    double rm_bound = 0.0;  // randomly-matchable component size cap
    std::optional<double> d_star;
    std::optional<double> c_star;
    double lower = 0.0;
    double upper = 0.0;
};

inline BoundsReport size_bounds(const Surface& s) {
    BoundsReport out;
    out.surface = s;
    out.rm_bound = randomly_matchable_size_bound(s);
    double g = static_cast<double>(s.genus);
    out.lower = s.orientable ? 4.0 * std::sqrt(2.0 * g) + 1.0 : 4.0 * std::sqrt(g) + 1.0;
    if (s.genus <= 2) {
        out.upper = s.orientable ? 4.0 * std::sqrt(g) + 17.0 : 2.0 * std::sqrt(2.0 * g) + 17.0;
    } else {
        auto sol = solve_degree_threshold(s);
        out.d_star = sol.d_star;
        out.c_star = sol.c_star;
        out.upper = sol.c_star * std::sqrt(g) + 5.0;
    }
    return out;
}

}  // namespace eqmatch
