#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "netsens/centrality.hpp"
#include "netsens/edge_list.hpp"

using namespace netsens;

namespace {

// The five-node example graph: a-b, b-c, c-d, c-e (degrees 1,2,3,1,1).
Graph example_graph() {
    return from_edge_list("a b\nb c\nc d\nc e").graph;
}

Graph complete_graph(int n) { return erdos_renyi(n, 1.0, RngSeed{0, 0}); }

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
    return Graph(n, std::move(edges));
}

Graph star_graph(int n) {  // node 0 is the center, n-1 leaves
    std::vector<Edge> edges;
    for (int u = 1; u < n; ++u) edges.emplace_back(0, u);
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("degree centrality") {
    const auto scores = degree_centrality(example_graph()).scores;
    CHECK(scores == std::vector<double>{1, 2, 3, 1, 1});

    const auto k4 = degree_centrality(complete_graph(4)).scores;
    CHECK(k4 == std::vector<double>{3, 3, 3, 3});

    const auto empty = degree_centrality(Graph(3, {})).scores;
    CHECK(empty == std::vector<double>{0, 0, 0});
}

TEST_CASE("closeness centrality on stars and cliques") {
    const auto s4 = closeness_centrality(star_graph(4)).scores;
    CHECK(s4[0] == doctest::Approx(1.0));
    CHECK(s4[1] == doctest::Approx(3.0 / 5.0));

    const auto k3 = closeness_centrality(complete_graph(3)).scores;
    for (double x : k3) CHECK(x == doctest::Approx(1.0));
}

TEST_CASE("closeness charges unreachable pairs distance n") {
    // two disjoint edges: per node 1 + 4 + 4 = 9, score 3/9
    const auto g = from_edge_list("a b\nc d").graph;
    for (double x : closeness_centrality(g).scores) CHECK(x == doctest::Approx(1.0 / 3.0));

    // isolated node scores 0
    const auto with_isolated = Graph(3, {{0, 1}});
    CHECK(closeness_centrality(with_isolated).scores[2] == 0.0);
}

TEST_CASE("betweenness centrality") {
    const auto p3 = betweenness_centrality(from_edge_list("a b\nb c").graph).scores;
    CHECK(p3 == std::vector<double>{0, 1, 0});

    const auto k4 = betweenness_centrality(complete_graph(4)).scores;
    CHECK(k4 == std::vector<double>{0, 0, 0, 0});

    const auto s5 = betweenness_centrality(star_graph(5)).scores;
    CHECK(s5[0] == doctest::Approx(6.0));  // C(4,2) leaf pairs route via center
    for (int u = 1; u < 5; ++u) CHECK(s5[u] == 0.0);
}

TEST_CASE("betweenness splits shortest-path mass on C4") {
    // opposite nodes have two shortest paths, each midpoint carries 1/2
    const auto c4 = betweenness_centrality(cycle_graph(4)).scores;
    for (double x : c4) CHECK(x == doctest::Approx(0.5));
}

TEST_CASE("eigenvector centrality") {
    const auto k3 = eigenvector_centrality(complete_graph(3));
    CHECK(k3.converged);
    for (double x : k3.scores) CHECK(x == doctest::Approx(1.0));

    const auto p3 = eigenvector_centrality(from_edge_list("a b\nb c").graph).scores;
    CHECK(p3[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(p3[1] == doctest::Approx(1.0));

    const auto s4 = eigenvector_centrality(star_graph(4)).scores;
    CHECK(s4[0] == doctest::Approx(1.0));
    CHECK(s4[1] == doctest::Approx(1.0 / std::sqrt(3.0)));

    CHECK_THROWS_AS(eigenvector_centrality(Graph(3, {})), Error);
}

TEST_CASE("eigenvector residual is small at convergence") {
    const auto g = erdos_renyi(60, 0.1, RngSeed{5, 0});
    CentralityConfig cfg;
    const auto v = eigenvector_centrality(g, cfg);
    REQUIRE(v.converged);
    // lambda estimated from the fixed point Ax = lambda x at the max entry
    std::vector<double> ax(g.n(), 0.0);
    for (int u = 0; u < g.n(); ++u)
        for (int w : g.neighbors(u)) ax[u] += v.scores[w];
    const double lambda = *std::max_element(ax.begin(), ax.end());
    double residual = 0.0;
    for (int u = 0; u < g.n(); ++u)
        residual = std::max(residual, std::abs(ax[u] - lambda * v.scores[u]));
    CHECK(residual < 10.0 * cfg.tolerance * lambda);
}

TEST_CASE("pagerank on symmetric graphs") {
    const auto k4 = pagerank(complete_graph(4)).scores;
    for (double x : k4) CHECK(x == doctest::Approx(0.25));

    const auto isolated = pagerank(Graph(3, {})).scores;
    for (double x : isolated) CHECK(x == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("pagerank star matches the two-class fixed point") {
    // center c and leaves l of the 4-node star satisfy
    //   c = (1-d)/4 + 3*d*l,  l = (1-d)/4 + d*c/3,  c + 3l = 1
    const double d = 0.85;
    const double center = ((1.0 - d) / 4.0 + d * (3.0 * (1.0 - d) / 4.0)) / (1.0 - d * d);
    const double leaf = (1.0 - center) / 3.0;

    const auto s4 = pagerank(star_graph(4)).scores;
    CHECK(s4[0] == doctest::Approx(center).epsilon(1e-8));
    CHECK(s4[1] == doctest::Approx(leaf).epsilon(1e-8));
}

TEST_CASE("pagerank sums to one across the corpus") {
    const std::vector<Graph> corpus = {
        complete_graph(4), Graph(3, {}), star_graph(4), from_edge_list("a b\nc d").graph,
        erdos_renyi(80, 0.1, RngSeed{17, 0})};
    for (const auto& g : corpus) {
        const auto scores = pagerank(g).scores;
        const double sum = std::accumulate(scores.begin(), scores.end(), 0.0);
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    const auto g = erdos_renyi(50, 0.3, RngSeed{23, 0});
    const auto scores = degree_centrality(g).scores;
    CHECK(std::accumulate(scores.begin(), scores.end(), 0.0) == doctest::Approx(2.0 * g.edge_count()));
}

TEST_CASE("relabeling nodes permutes every measure's scores identically") {
    const auto g = erdos_renyi(30, 0.2, RngSeed{31, 0});
    // rotate ids by 7
    std::vector<int> perm(g.n());
    for (int u = 0; u < g.n(); ++u) perm[u] = (u + 7) % g.n();
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    const Graph permuted(g.n(), std::move(edges));

    for (Measure m : all_measures()) {
        const auto base = compute_centrality(g, m).scores;
        const auto moved = compute_centrality(permuted, m).scores;
        for (int u = 0; u < g.n(); ++u)
            CHECK(moved[perm[u]] == doctest::Approx(base[u]).epsilon(1e-9));
    }
}

TEST_CASE("vertex-transitive graphs score uniformly under every measure") {
    for (const auto& g : {complete_graph(7), cycle_graph(8)}) {
        for (Measure m : all_measures()) {
            const auto scores = compute_centrality(g, m).scores;
            const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
            CHECK(*hi - *lo < 1e-9);
        }
    }
}

TEST_CASE("centrality csv carries label, score, and measure") {
    std::ostringstream out;
    write_centrality_csv(degree_centrality(example_graph()), out);
    CHECK(out.str() ==
          "node_label,score,measure\na,1,dc\nb,2,dc\nc,3,dc\nd,1,dc\ne,1,dc\n");
}

TEST_CASE("measure tokens round trip") {
    for (Measure m : all_measures()) CHECK(parse_measure_token(measure_token(m)) == m);
    CHECK(parse_measure_token("pagerank") == Measure::pagerank);
    CHECK_THROWS_AS(parse_measure_token("xx"), ParseError);
}
