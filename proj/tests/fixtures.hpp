#pragma once

#include "eqmatch/graph.hpp"

namespace fixtures {

inline eqmatch::Graph path(int n) {
    std::vector<eqmatch::VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return eqmatch::Graph(n, std::move(edges));
}

inline eqmatch::Graph cube() {
    std::vector<eqmatch::VertexPair> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit : {1, 2, 4})
            if ((v ^ bit) > v) edges.push_back({v, v ^ bit});
    return eqmatch::Graph(8, std::move(edges));
}

inline eqmatch::Graph petersen() {
    std::vector<eqmatch::VertexPair> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({i, i + 5});                // spokes
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    }
    return eqmatch::Graph(10, std::move(edges));
}

}  // namespace fixtures
