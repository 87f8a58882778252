#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "netsens/edge_list.hpp"
#include "netsens/perturb.hpp"

using namespace netsens;

namespace {
const std::string kDataDir = NETSENS_DATA_DIR;

Graph dolphins() {
    return read_edge_list_file(kDataDir + "/dolphins.edges").graph;
}
}  // namespace

TEST_CASE("mechanism tokens round trip") {
    const ErrorMechanism phi{ErrorKind::remove_edges_proportional, 0.3};
    CHECK(mechanism_token(phi) == "rm_edges_prop:0.3");
    const auto back = parse_mechanism_token("rm_edges_prop:0.3");
    CHECK(back.kind == ErrorKind::remove_edges_proportional);
    CHECK(back.level == 0.3);

    CHECK(parse_mechanism_token("rm_nodes:0.1").kind == ErrorKind::remove_nodes_uniform);
    CHECK(parse_mechanism_token("rm_edges_unif:0").level == 0.0);
    CHECK(parse_mechanism_token("add_edges:0.25").kind == ErrorKind::add_edges_uniform);

    CHECK_THROWS_AS(parse_mechanism_token("rm_nodes"), ParseError);
    CHECK_THROWS_AS(parse_mechanism_token("bogus:0.1"), ParseError);
    CHECK_THROWS_AS(parse_mechanism_token("rm_nodes:1.0"), ParseError);
    CHECK_THROWS_AS(parse_mechanism_token("rm_nodes:-0.1"), ParseError);
}

TEST_CASE("round_count rounds half up") {
    CHECK(round_count(0.1, 159) == 16);  // 15.9
    CHECK(round_count(0.5, 3) == 2);     // 1.5
    CHECK(round_count(0.5, 5) == 3);     // 2.5
    CHECK(round_count(0.0, 100) == 0);
    CHECK(round_count(0.3, 10) == 3);
}

TEST_CASE("level zero is the identity for every mechanism") {
    const auto g = dolphins();
    for (const char* token : {"rm_nodes:0", "rm_edges_unif:0", "rm_edges_prop:0", "add_edges:0"}) {
        const auto h = apply_error(g, parse_mechanism_token(token), RngSeed{1, 0});
        CHECK(h.n() == g.n());
        CHECK(h.edges() == g.edges());
    }
}

TEST_CASE("uniform edge removal drops the rounded count") {
    const auto g = dolphins();
    const auto h = apply_error(g, parse_mechanism_token("rm_edges_unif:0.1"), RngSeed{3, 0});
    CHECK(h.n() == 62);
    CHECK(h.edge_count() == 143);  // 159 - round(15.9)
    // surviving edges are a subset of the original ones, matched by label
    for (const auto& [u, v] : h.edges()) {
        int gu = -1, gv = -1;
        for (int w = 0; w < g.n(); ++w) {
            if (g.label(w) == h.label(u)) gu = w;
            if (g.label(w) == h.label(v)) gv = w;
        }
        REQUIRE(gu >= 0);
        REQUIRE(gv >= 0);
        CHECK(g.has_edge(gu, gv));
    }
}

TEST_CASE("node removal drops nodes and their incident edges") {
    const auto g = dolphins();
    const auto h = apply_error(g, parse_mechanism_token("rm_nodes:0.1"), RngSeed{5, 0});
    CHECK(h.n() == 56);  // 62 - round(6.2)
    std::set<std::string> survivors;
    for (int u = 0; u < h.n(); ++u) survivors.insert(h.label(u));
    CHECK(survivors.size() == 56);
    // every survivor label existed in g
    std::set<std::string> original;
    for (int u = 0; u < g.n(); ++u) original.insert(g.label(u));
    CHECK(std::includes(original.begin(), original.end(), survivors.begin(), survivors.end()));
}

TEST_CASE("edge addition inserts the rounded count of fresh non-edges") {
    const auto g = dolphins();
    const auto h = apply_error(g, parse_mechanism_token("add_edges:0.1"), RngSeed{7, 0});
    CHECK(h.n() == 62);
    CHECK(h.edge_count() == 175);  // 159 + 16
}

TEST_CASE("proportional removal favours high-degree endpoints") {
    // Star with a pendant path: the hub's edges carry far more weight, so
    // across many draws hub edges must vanish more often than the tail edge.
    std::vector<Edge> edges;
    for (int u = 1; u <= 10; ++u) edges.emplace_back(0, u);
    edges.emplace_back(10, 11);  // low-weight tail edge
    const Graph g(12, std::move(edges));

    const auto phi = parse_mechanism_token("rm_edges_prop:0.3");  // removes 3 of 11
    int tail_removed = 0;
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
        const auto h = apply_error(g, phi, RngSeed{11, static_cast<std::uint64_t>(t)});
        CHECK(h.edge_count() == 8);
        bool tail_alive = false;
        for (int u = 0; u < h.n(); ++u)
            for (int v : h.neighbors(u))
                if (u < v && h.label(u) == "10" && h.label(v) == "11") tail_alive = true;
        if (!tail_alive) ++tail_removed;
    }
    // uniform removal would delete the tail edge in 3/11 ~ 27% of draws;
    // weight 11-vs-3 pushes it well below that
    CHECK(tail_removed < trials * 27 / 100);
    CHECK(tail_removed > 0);
}

TEST_CASE("perturbation draws are deterministic in the seed") {
    const auto g = dolphins();
    for (const char* token : {"rm_nodes:0.3", "rm_edges_unif:0.3", "rm_edges_prop:0.3", "add_edges:0.3"}) {
        const auto phi = parse_mechanism_token(token);
        const auto a = apply_error(g, phi, RngSeed{13, 4});
        const auto b = apply_error(g, phi, RngSeed{13, 4});
        CHECK(a.edges() == b.edges());
        const auto c = apply_error(g, phi, RngSeed{13, 5});
        CHECK((a.edges() != c.edges() || a.n() != c.n()));
    }
}

TEST_CASE("infeasible draws are rejected") {
    const auto k5 = erdos_renyi(5, 1.0, RngSeed{1, 0});
    CHECK_THROWS_AS(apply_error(k5, parse_mechanism_token("add_edges:0.1"), RngSeed{1, 0}),
                    InfeasibleError);
    const Graph tiny(2, {{0, 1}});
    CHECK_THROWS_AS(apply_error(tiny, parse_mechanism_token("rm_edges_unif:0.6"), RngSeed{1, 0}),
                    InfeasibleError);
    CHECK_THROWS_AS(apply_error(Graph(1, {}), parse_mechanism_token("rm_nodes:0.7"), RngSeed{1, 0}),
                    InfeasibleError);
}

TEST_CASE("invert_error solves for the pre-error magnitude") {
    const auto g = dolphins();  // 62 nodes, 159 edges
    const auto psi_rm = invert_error(parse_mechanism_token("rm_edges_unif:0.1"), g);
    CHECK(psi_rm.kind == ImputationKind::add_uniform_non_edges);
    CHECK(psi_rm.count == 18);  // round(159 * 0.1/0.9) = round(17.67)

    const auto psi_prop = invert_error(parse_mechanism_token("rm_edges_prop:0.3"), g);
    CHECK(psi_prop.kind == ImputationKind::add_uniform_non_edges);
    CHECK(psi_prop.count == 68);  // round(159 * 3/7)

    const auto psi_add = invert_error(parse_mechanism_token("add_edges:0.1"), g);
    CHECK(psi_add.kind == ImputationKind::remove_uniform_edges);
    CHECK(psi_add.count == 14);  // round(159 / 11)

    const auto psi_nodes = invert_error(parse_mechanism_token("rm_nodes:0.1"), g);
    CHECK(psi_nodes.kind == ImputationKind::add_nodes_degree_sampled);
    CHECK(psi_nodes.count == 7);  // round(62 / 9)

    for (const char* token : {"rm_nodes:0", "rm_edges_unif:0", "add_edges:0"})
        CHECK(invert_error(parse_mechanism_token(token), g).count == 0);
}

TEST_CASE("imputation restores the expected sizes") {
    const auto g = dolphins();

    const auto add = apply_imputation(g, invert_error(parse_mechanism_token("rm_edges_unif:0.1"), g),
                                      RngSeed{17, 0});
    CHECK(add.n() == 62);
    CHECK(add.edge_count() == 177);  // 159 + 18

    const auto removed = apply_imputation(g, invert_error(parse_mechanism_token("add_edges:0.1"), g),
                                          RngSeed{17, 1});
    CHECK(removed.n() == 62);
    CHECK(removed.edge_count() == 145);  // 159 - 14

    const auto grown = apply_imputation(g, invert_error(parse_mechanism_token("rm_nodes:0.1"), g),
                                        RngSeed{17, 2});
    CHECK(grown.n() == 69);  // 62 + 7
    // the added nodes carry fresh labels and at least one edge each
    int fresh = 0;
    for (int u = 0; u < grown.n(); ++u) {
        if (grown.label(u).rfind("imputed_", 0) == 0) {
            ++fresh;
            CHECK(grown.degree(u) >= 1);
        }
    }
    CHECK(fresh == 7);
}

TEST_CASE("round-tripping error then matching imputation restores sizes on average") {
    const auto g = dolphins();
    const auto phi = parse_mechanism_token("rm_edges_unif:0.2");
    const auto observed = apply_error(g, phi, RngSeed{19, 0});
    CHECK(observed.edge_count() == 127);  // 159 - 32
    const auto repaired = apply_imputation(observed, invert_error(phi, observed), RngSeed{19, 1});
    CHECK(repaired.edge_count() == 159);  // 127 + round(127 * 0.25)
}

TEST_CASE("imputation with count zero is the identity") {
    const auto g = dolphins();
    for (auto kind : {ImputationKind::add_uniform_non_edges, ImputationKind::remove_uniform_edges,
                      ImputationKind::add_nodes_degree_sampled}) {
        const auto h = apply_imputation(g, ImputationMechanism{kind, 0}, RngSeed{23, 0});
        CHECK(h.n() == g.n());
        CHECK(h.edges() == g.edges());
    }
}
