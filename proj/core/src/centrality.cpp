#include "netsens/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace netsens {

std::string measure_token(Measure m) {
    switch (m) {
        case Measure::degree: return "dc";
        case Measure::closeness: return "cc";
        case Measure::betweenness: return "bc";
        case Measure::eigenvector: return "ec";
        case Measure::pagerank: return "pr";
    }
    throw Error("unknown measure");
}

Measure parse_measure_token(std::string_view token) {
    if (token == "dc" || token == "degree") return Measure::degree;
    if (token == "cc" || token == "closeness") return Measure::closeness;
    if (token == "bc" || token == "betweenness") return Measure::betweenness;
    if (token == "ec" || token == "eigenvector") return Measure::eigenvector;
    if (token == "pr" || token == "pagerank") return Measure::pagerank;
    throw ParseError("unknown centrality measure token: " + std::string(token));
}

const std::vector<Measure>& all_measures() {
    static const std::vector<Measure> measures = {
        Measure::betweenness, Measure::closeness, Measure::degree,
        Measure::eigenvector, Measure::pagerank};
    return measures;
}

namespace {

std::vector<std::string> node_labels(const Graph& g) {
    if (g.has_labels()) return g.labels();
    std::vector<std::string> labels;
    labels.reserve(g.n());
    for (int u = 0; u < g.n(); ++u) labels.push_back(std::to_string(u));
    return labels;
}

CentralityVector make_vector(const Graph& g, Measure m) {
    CentralityVector v;
    v.measure = m;
    v.labels = node_labels(g);
    v.scores.assign(g.n(), 0.0);
    return v;
}

}  // namespace

CentralityVector degree_centrality(const Graph& g) {
    auto v = make_vector(g, Measure::degree);
    for (int u = 0; u < g.n(); ++u) v.scores[u] = g.degree(u);
    return v;
}

CentralityVector closeness_centrality(const Graph& g) {
    const int n = g.n();
    auto v = make_vector(g, Measure::closeness);

    std::vector<int> dist(n);
    std::vector<int> frontier, next;
    for (int s = 0; s < n; ++s) {
        if (g.degree(s) == 0) continue;  // isolated nodes score 0
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier.assign(1, s);
        long long total = 0;
        int reached = 1;
        int d = 0;
        while (!frontier.empty()) {
            next.clear();
            ++d;
            for (int u : frontier)
                for (int w : g.neighbors(u))
                    if (dist[w] < 0) {
                        dist[w] = d;
                        total += d;
                        ++reached;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        // unreachable pairs are charged distance n
        total += static_cast<long long>(n - reached) * n;
        v.scores[s] = total > 0 ? static_cast<double>(n - 1) / static_cast<double>(total) : 0.0;
    }
    return v;
}

CentralityVector betweenness_centrality(const Graph& g) {
    const int n = g.n();
    auto v = make_vector(g, Measure::betweenness);

    std::vector<int> dist(n), order;
    std::vector<double> sigma(n), delta(n);
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        std::size_t head = 0;
        order.push_back(s);
        while (head < order.size()) {
            const int u = order[head++];
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
            }
        }
        // dependency accumulation in reverse BFS order
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (int u : g.neighbors(w))
                if (dist[u] == dist[w] - 1)
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            if (w != s) v.scores[w] += delta[w];
        }
    }
    // each unordered pair was counted from both endpoints
    for (auto& x : v.scores) x /= 2.0;
    return v;
}

namespace {

int iteration_cap(const CentralityConfig& cfg, int fallback) {
    return cfg.max_iterations > 0 ? cfg.max_iterations : fallback;
}

}  // namespace

CentralityVector eigenvector_centrality(const Graph& g, const CentralityConfig& cfg) {
    const int n = g.n();
    if (g.edge_count() == 0) throw Error("eigenvector centrality: graph has no edges");

    auto v = make_vector(g, Measure::eigenvector);
    const int max_iter = iteration_cap(cfg, 1000);

    std::vector<double> x(n, 1.0), next(n);
    v.converged = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int u = 0; u < n; ++u) {
            double sum = x[u];  // iterate on A + I: same eigenvectors, but no
            for (int w : g.neighbors(u)) sum += x[w];  // bipartite oscillation
            next[u] = sum;
        }
        const double max_entry = *std::max_element(next.begin(), next.end());
        double diff = 0.0;
        for (int u = 0; u < n; ++u) {
            next[u] /= max_entry;
            diff = std::max(diff, std::abs(next[u] - x[u]));
        }
        x.swap(next);
        if (diff < cfg.tolerance) {
            v.converged = true;
            break;
        }
    }
    // The true principal eigenvector is supported on the component with the
    // largest eigenvalue only; everything else is numerical residue of the
    // iteration. Zero it so those nodes tie exactly instead of carrying a
    // spurious ordering.
    const int top = static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());
    std::vector<char> dominant(n, 0);
    std::vector<int> stack{top};
    dominant[top] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!dominant[w]) {
                dominant[w] = 1;
                stack.push_back(w);
            }
    }
    for (int u = 0; u < n; ++u)
        if (!dominant[u]) x[u] = 0.0;

    v.scores = std::move(x);
    return v;
}

CentralityVector pagerank(const Graph& g, const CentralityConfig& cfg) {
    const int n = g.n();
    auto v = make_vector(g, Measure::pagerank);
    if (n == 0) return v;

    const double d = cfg.damping;
    const int max_iter = iteration_cap(cfg, 200);

    std::vector<double> pr(n, 1.0 / n), next(n);
    v.converged = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        double dangling = 0.0;
        for (int u = 0; u < n; ++u)
            if (g.degree(u) == 0) dangling += pr[u];
        const double base = (1.0 - d) / n + d * dangling / n;
        for (int u = 0; u < n; ++u) next[u] = base;
        for (int u = 0; u < n; ++u) {
            const int deg = g.degree(u);
            if (deg == 0) continue;
            const double share = d * pr[u] / deg;
            for (int w : g.neighbors(u)) next[w] += share;
        }
        double l1 = 0.0;
        for (int u = 0; u < n; ++u) l1 += std::abs(next[u] - pr[u]);
        pr.swap(next);
        if (l1 < cfg.tolerance) {
            v.converged = true;
            break;
        }
    }
    v.scores = std::move(pr);
    return v;
}

CentralityVector compute_centrality(const Graph& g, Measure m, const CentralityConfig& cfg) {
    switch (m) {
        case Measure::degree: return degree_centrality(g);
        case Measure::closeness: return closeness_centrality(g);
        case Measure::betweenness: return betweenness_centrality(g);
        case Measure::eigenvector: return eigenvector_centrality(g, cfg);
        case Measure::pagerank: return pagerank(g, cfg);
    }
    throw Error("unknown measure");
}

void write_centrality_csv(const CentralityVector& v, std::ostream& out) {
    out << "node_label,score,measure\n";
    const std::string token = measure_token(v.measure);
    char buf[40];
    for (int u = 0; u < v.size(); ++u) {
        std::snprintf(buf, sizeof buf, "%.12g", v.scores[u]);
        out << v.labels[u] << ',' << buf << ',' << token << '\n';
    }
}

}  // namespace netsens
