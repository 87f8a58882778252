#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netsens/errors.hpp"
#include "netsens/rng.hpp"

namespace netsens {

/// Unordered node pair, stored with first < second.
using Edge = std::pair<int, int>;

/// Undirected, unweighted simple graph with dense node ids 0..n-1.
/// Nodes optionally carry string labels (a bijection with ids); labels are
/// how nodes keep their identity across perturbation and relabeling.
/// Immutable after construction, safe to share across threads.
class Graph {
  public:
    Graph() = default;

    /// edges must be simple: u != v, 0 <= u,v < n, no duplicates
    /// (orientation and order are normalized here). labels must be empty
    /// or hold n distinct strings.
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int n() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    bool has_edge(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    /// Stored label, or the decimal id when no labels were assigned.
    std::string label(int u) const;
    const std::vector<std::string>& labels() const { return labels_; }

    /// Number of unordered node pairs that are not edges.
    std::int64_t non_edge_count() const {
        return static_cast<std::int64_t>(n_) * (n_ - 1) / 2 - edge_count();
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;             // sorted, u < v
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
    std::vector<std::string> labels_;     // empty, or one label per node
};

/// Induced subgraph on the largest connected component, nodes relabeled
/// densely in increasing original-id order (ties between equal-size
/// components go to the one containing the smallest id). Labels carry over.
Graph largest_connected_component(const Graph& g);

/// k distinct pairs drawn uniformly without replacement from the non-edges.
/// Throws InfeasibleError if k exceeds the number of non-edges.
std::vector<Edge> non_edge_sample(const Graph& g, std::int64_t k, RngSeed seed);

/// G(n, p): every one of the C(n,2) pairs is an edge independently with
/// probability p.
Graph erdos_renyi(int n, double p, RngSeed seed);

/// Preferential attachment starting from an m-clique; each later node
/// attaches to m distinct existing nodes, chosen proportionally to current
/// degree (repeat-until-distinct). Result is simple and connected, with
/// exactly C(m,2) + (n-m)*m edges.
Graph barabasi_albert(int n, int m, RngSeed seed);

}  // namespace netsens
