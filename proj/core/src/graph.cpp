#include "netsens/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace netsens {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw Error("graph: negative node count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw Error("graph: label count does not match node count");

    for (auto& [u, v] : edges_) {
        if (u == v) throw Error("graph: self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) throw Error("graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("graph: duplicate edge");

    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(int u) const {
    return labels_.empty() ? std::to_string(u) : labels_[u];
}

Graph largest_connected_component(const Graph& g) {
    const int n = g.n();
    if (n == 0) return g;

    std::vector<int> component(n, -1);
    std::vector<int> comp_size;
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        const int c = static_cast<int>(comp_size.size());
        component[start] = c;
        queue.assign(1, start);
        int size = 0;
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            ++size;
            for (int v : g.neighbors(u)) {
                if (component[v] < 0) {
                    component[v] = c;
                    queue.push_back(v);
                }
            }
        }
        comp_size.push_back(size);
    }

    // components are discovered in increasing min-id order, so the first
    // maximum realizes the smallest-min-id tie-break
    int best = 0;
    for (int c = 1; c < static_cast<int>(comp_size.size()); ++c)
        if (comp_size[c] > comp_size[best]) best = c;

    std::vector<int> new_id(n, -1);
    std::vector<std::string> labels;
    int next = 0;
    for (int u = 0; u < n; ++u) {
        if (component[u] == best) {
            new_id[u] = next++;
            labels.push_back(g.label(u));  // original identity survives relabeling
        }
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (component[u] == best) edges.emplace_back(new_id[u], new_id[v]);

    return Graph(next, std::move(edges), std::move(labels));
}

namespace {

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return mix64((static_cast<std::uint64_t>(e.first) << 32) | static_cast<std::uint32_t>(e.second));
    }
};

}  // namespace

std::vector<Edge> non_edge_sample(const Graph& g, std::int64_t k, RngSeed seed) {
    const std::int64_t available = g.non_edge_count();
    if (k < 0 || k > available)
        throw InfeasibleError("non_edge_sample: requested " + std::to_string(k) + " of " +
                              std::to_string(available) + " non-edges");
    if (k == 0) return {};

    Rng rng(seed);
    const std::int64_t n = g.n();

    // dense case: enumerate non-edges and take a partial Fisher-Yates prefix
    if (k * 2 > available) {
        std::vector<Edge> pool;
        pool.reserve(static_cast<std::size_t>(available));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) pool.emplace_back(u, v);
        for (std::int64_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::int64_t>(rng.uniform_int(static_cast<std::uint64_t>(available - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(static_cast<std::size_t>(k));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    std::unordered_set<Edge, EdgeHash> chosen;
    chosen.reserve(static_cast<std::size_t>(k) * 2);
    std::vector<Edge> result;
    result.reserve(static_cast<std::size_t>(k));
    while (static_cast<std::int64_t>(result.size()) < k) {
        int u = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        const Edge e{u, v};
        if (g.has_edge(u, v) || chosen.count(e)) continue;
        chosen.insert(e);
        result.push_back(e);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace netsens
