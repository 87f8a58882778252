#include <algorithm>
#include <string>

#include "netsens/graph.hpp"

namespace netsens {

Graph erdos_renyi(int n, double p, RngSeed seed) {
    if (n < 0) throw Error("erdos_renyi: n must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw Error("erdos_renyi: p must lie in [0,1]");

    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph barabasi_albert(int n, int m, RngSeed seed) {
    if (m < 1 || m >= n)
        throw Error("barabasi_albert: need 1 <= m < n, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));

    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2 + static_cast<std::size_t>(n - m) * m);

    // endpoint multiset: drawing a uniform entry is a degree-proportional draw
    std::vector<int> endpoints;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }

    std::vector<int> targets(m);
    for (int t = m; t < n; ++t) {
        // m distinct targets, weights frozen before t's own edges land
        const auto pool_size = static_cast<std::uint64_t>(endpoints.size());
        for (int picked = 0; picked < m;) {
            // with m = 1 the seed "clique" has no edges yet, so the very
            // first attachment is a uniform draw over the existing nodes
            const int candidate = pool_size == 0
                                      ? static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(t)))
                                      : endpoints[rng.uniform_int(pool_size)];
            if (std::find(targets.begin(), targets.begin() + picked, candidate) !=
                targets.begin() + picked)
                continue;
            targets[picked++] = candidate;
        }
        for (int i = 0; i < m; ++i) {
            edges.emplace_back(targets[i], t);
            endpoints.push_back(targets[i]);
            endpoints.push_back(t);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace netsens
