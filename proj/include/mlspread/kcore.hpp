#pragma once

// K-core decomposition via bucketed minimum-degree peeling
// (Batagelj & Zaversnik, 2003). O(V + E), tie-order independent.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlspread/graph.hpp"

namespace mlspread {

struct ShellAssignment {
    std::string layer;
    std::vector<std::uint32_t> shell; // indexed by actor; degree-0 actors get shell 0
};

inline ShellAssignment k_core_decompose(const MultilayerNetwork& net, std::string_view layer_name) {
    const Layer& layer = net.layer(layer_name);
    const std::size_t n = net.actor_count();

    std::vector<std::uint32_t> degree(n);
    std::uint32_t max_degree = 0;
    for (ActorIndex u = 0; u < n; ++u) {
        degree[u] = static_cast<std::uint32_t>(layer.degree(u));
        max_degree = std::max(max_degree, degree[u]);
    }

    // Bucket sort vertices by degree.
    std::vector<std::uint32_t> bin(max_degree + 2, 0);
    for (ActorIndex u = 0; u < n; ++u) {
        ++bin[degree[u]];
    }
    std::uint32_t start = 0;
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
        std::uint32_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<ActorIndex> vert(n);
    std::vector<std::uint32_t> pos(n);
    for (ActorIndex u = 0; u < n; ++u) {
        pos[u] = bin[degree[u]];
        vert[pos[u]] = u;
        ++bin[degree[u]];
    }
    for (std::uint32_t d = max_degree; d >= 1; --d) {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    // Peel in nondecreasing degree order; moving a neighbor one bucket down
    // keeps the ordering valid.
    std::vector<std::uint32_t> core = degree;
    for (std::size_t i = 0; i < n; ++i) {
        ActorIndex u = vert[i];
        for (ActorIndex v : layer.neighbors(u)) {
            if (core[v] > core[u]) {
                std::uint32_t dv = core[v];
                std::uint32_t pv = pos[v];
                std::uint32_t pw = bin[dv];
                ActorIndex w = vert[pw];
                if (v != w) {
                    pos[v] = pw;
                    pos[w] = pv;
                    vert[pv] = w;
                    vert[pw] = v;
                }
                ++bin[dv];
                --core[v];
            }
        }
    }

    return ShellAssignment{std::string(layer_name), std::move(core)};
}

} // namespace mlspread
