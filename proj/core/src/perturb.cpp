#include "netsens/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netsens {

std::string error_kind_token(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::remove_nodes_uniform: return "rm_nodes";
        case ErrorKind::remove_edges_uniform: return "rm_edges_unif";
        case ErrorKind::remove_edges_proportional: return "rm_edges_prop";
        case ErrorKind::add_edges_uniform: return "add_edges";
    }
    throw Error("unknown error kind");
}

std::string mechanism_token(const ErrorMechanism& phi) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", phi.level);
    return error_kind_token(phi.kind) + ":" + buf;
}

ErrorMechanism parse_mechanism_token(std::string_view token) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("mechanism token needs kind:level, got: " + std::string(token));
    const std::string_view kind = token.substr(0, colon);
    const std::string level_str{token.substr(colon + 1)};

    ErrorMechanism phi;
    if (kind == "rm_nodes") phi.kind = ErrorKind::remove_nodes_uniform;
    else if (kind == "rm_edges_unif") phi.kind = ErrorKind::remove_edges_uniform;
    else if (kind == "rm_edges_prop") phi.kind = ErrorKind::remove_edges_proportional;
    else if (kind == "add_edges") phi.kind = ErrorKind::add_edges_uniform;
    else throw ParseError("unknown error mechanism: " + std::string(kind));

    std::size_t used = 0;
    try {
        phi.level = std::stod(level_str, &used);
    } catch (const std::exception&) {
        throw ParseError("bad error level in token: " + std::string(token));
    }
    if (used != level_str.size() || !(phi.level >= 0.0 && phi.level < 1.0))
        throw ParseError("error level must lie in [0,1): " + std::string(token));
    return phi;
}

std::int64_t round_count(double alpha, std::int64_t count) {
    return static_cast<std::int64_t>(std::floor(alpha * static_cast<double>(count) + 0.5));
}

namespace {

/// k indices drawn without replacement from 0..population-1, uniformly.
std::vector<std::int64_t> sample_indices(std::int64_t population, std::int64_t k, Rng& rng) {
    std::vector<std::int64_t> pool(population);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::int64_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::int64_t>(rng.uniform_int(static_cast<std::uint64_t>(population - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

/// Weighted sample without replacement via exponential-race keys: item i
/// gets key -log(U_i)/w_i and the k smallest keys win (equivalent to
/// successive renormalized draws).
std::vector<std::int64_t> weighted_sample_indices(const std::vector<double>& weights,
                                                  std::int64_t k, Rng& rng) {
    const auto population = static_cast<std::int64_t>(weights.size());
    std::vector<std::pair<double, std::int64_t>> keyed(population);
    for (std::int64_t i = 0; i < population; ++i) {
        const double u = rng.uniform();
        keyed[i] = {-std::log1p(-u) / weights[i], i};
    }
    std::partial_sort(keyed.begin(), keyed.begin() + k, keyed.end());
    std::vector<std::int64_t> result(k);
    for (std::int64_t i = 0; i < k; ++i) result[i] = keyed[i].second;
    return result;
}

Graph remove_nodes(const Graph& g, std::int64_t k, Rng& rng) {
    const int n = g.n();
    if (k >= n && k > 0)
        throw InfeasibleError("remove_nodes: would remove every node");

    const auto victims = sample_indices(n, k, rng);
    std::vector<char> removed(n, 0);
    for (auto u : victims) removed[u] = 1;

    std::vector<int> new_id(n, -1);
    std::vector<std::string> labels;  // survivors keep their identity
    int next = 0;
    for (int u = 0; u < n; ++u) {
        if (removed[u]) continue;
        new_id[u] = next++;
        labels.push_back(g.label(u));
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (!removed[u] && !removed[v]) edges.emplace_back(new_id[u], new_id[v]);
    return Graph(next, std::move(edges), std::move(labels));
}

Graph remove_edges(const Graph& g, const std::vector<std::int64_t>& victims) {
    std::vector<char> removed(g.edges().size(), 0);
    for (auto e : victims) removed[e] = 1;
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - victims.size());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (!removed[i]) edges.push_back(g.edges()[i]);
    std::vector<std::string> labels = g.has_labels() ? g.labels() : std::vector<std::string>{};
    return Graph(g.n(), std::move(edges), std::move(labels));
}

Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    std::vector<std::string> labels = g.has_labels() ? g.labels() : std::vector<std::string>{};
    return Graph(g.n(), std::move(edges), std::move(labels));
}

}  // namespace

Graph apply_error(const Graph& g, const ErrorMechanism& phi, RngSeed seed) {
    if (!(phi.level >= 0.0 && phi.level < 1.0))
        throw Error("error level must lie in [0,1)");
    Rng rng(seed);
    const std::int64_t m = g.edge_count();

    switch (phi.kind) {
        case ErrorKind::remove_nodes_uniform:
            return remove_nodes(g, round_count(phi.level, g.n()), rng);

        case ErrorKind::remove_edges_uniform: {
            const std::int64_t k = round_count(phi.level, m);
            if (k >= m && k > 0) throw InfeasibleError("remove_edges: would remove every edge");
            return remove_edges(g, sample_indices(m, k, rng));
        }

        case ErrorKind::remove_edges_proportional: {
            const std::int64_t k = round_count(phi.level, m);
            if (k == 0) return g;
            if (k >= m) throw InfeasibleError("remove_edges: would remove every edge");
            std::vector<double> weights(g.edges().size());
            for (std::size_t i = 0; i < g.edges().size(); ++i) {
                const auto& [u, v] = g.edges()[i];
                weights[i] = static_cast<double>(g.degree(u) + g.degree(v));
            }
            return remove_edges(g, weighted_sample_indices(weights, k, rng));
        }

        case ErrorKind::add_edges_uniform: {
            const std::int64_t k = round_count(phi.level, m);
            if (k > g.non_edge_count())
                throw InfeasibleError("add_edges: not enough non-edges");
            return add_edges(g, non_edge_sample(g, k, seed.derive(1)));
        }
    }
    throw Error("unknown error kind");
}

ImputationMechanism invert_error(const ErrorMechanism& phi, const Graph& observed) {
    const double a = phi.level;
    ImputationMechanism psi;
    switch (phi.kind) {
        case ErrorKind::remove_edges_uniform:
        case ErrorKind::remove_edges_proportional:
            // |E_obs| = (1-a)|E_hidden|  =>  missing = |E_obs| * a/(1-a)
            psi.kind = ImputationKind::add_uniform_non_edges;
            psi.count = round_count(a / (1.0 - a), observed.edge_count());
            break;
        case ErrorKind::add_edges_uniform:
            // |E_obs| = (1+a)|E_hidden|  =>  spurious = |E_obs| * a/(1+a)
            psi.kind = ImputationKind::remove_uniform_edges;
            psi.count = round_count(a / (1.0 + a), observed.edge_count());
            break;
        case ErrorKind::remove_nodes_uniform:
            psi.kind = ImputationKind::add_nodes_degree_sampled;
            psi.count = round_count(a / (1.0 - a), observed.n());
            break;
    }
    return psi;
}

namespace {

Graph add_degree_sampled_nodes(const Graph& g, std::int64_t k, Rng& rng) {
    int n = g.n();
    std::vector<int> degree(n);
    for (int u = 0; u < n; ++u) degree[u] = g.degree(u);

    std::vector<std::string> labels;
    if (g.has_labels() || k > 0) {
        labels.reserve(n + k);
        for (int u = 0; u < n; ++u) labels.push_back(g.label(u));
    }
    std::vector<Edge> edges = g.edges();

    std::vector<int> picked;
    for (std::int64_t i = 0; i < k; ++i) {
        // target degree from the current empirical distribution (which
        // includes nodes added in earlier rounds), capped at |V|
        int d;
        do {
            d = degree[rng.uniform_int(static_cast<std::uint64_t>(n))];
        } while (d > n);

        picked.clear();
        while (static_cast<int>(picked.size()) < d) {
            const int t = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
            if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
        }

        const int fresh = n;
        for (int t : picked) {
            edges.emplace_back(t, fresh);
            ++degree[t];
        }
        degree.push_back(d);
        std::string label = "imputed_" + std::to_string(i);
        while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "'";
        labels.push_back(std::move(label));
        ++n;
    }
    return Graph(n, std::move(edges), std::move(labels));
}

}  // namespace

Graph apply_imputation(const Graph& g, const ImputationMechanism& psi, RngSeed seed) {
    Rng rng(seed);
    switch (psi.kind) {
        case ImputationKind::add_uniform_non_edges:
            if (psi.count > g.non_edge_count())
                throw InfeasibleError("imputation: not enough non-edges to add");
            return add_edges(g, non_edge_sample(g, psi.count, seed.derive(1)));

        case ImputationKind::remove_uniform_edges:
            if (psi.count > g.edge_count())
                throw InfeasibleError("imputation: cannot remove more edges than exist");
            return remove_edges(g, sample_indices(g.edge_count(), psi.count, rng));

        case ImputationKind::add_nodes_degree_sampled:
            return add_degree_sampled_nodes(g, psi.count, rng);
    }
    throw Error("unknown imputation kind");
}

}  // namespace netsens
