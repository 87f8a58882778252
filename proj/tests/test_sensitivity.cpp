#include <doctest.h>

#include <cmath>
#include <vector>

#include "netsens/edge_list.hpp"
#include "netsens/sensitivity.hpp"

using namespace netsens;

namespace {

CentralityVector vec(std::vector<std::string> labels, std::vector<double> scores) {
    CentralityVector v;
    v.measure = Measure::degree;
    v.labels = std::move(labels);
    v.scores = std::move(scores);
    return v;
}

// Brute-force oracle mirroring the definition: classify every unordered
// pair of common labels with exact tie handling at the same tolerance.
PairClassification brute_force(const CentralityVector& a, const CentralityVector& b) {
    PairClassification pc;
    std::vector<std::pair<double, double>> common;
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        for (std::size_t j = 0; j < b.labels.size(); ++j)
            if (a.labels[i] == b.labels[j]) common.emplace_back(a.scores[i], b.scores[j]);
    pc.compared_nodes = static_cast<int>(common.size());
    auto tied = [](double x, double y) {
        return std::abs(x - y) <= kTieRelTolerance * std::max(std::abs(x), std::abs(y));
    };
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            const auto [x1, y1] = common[i];
            const auto [x2, y2] = common[j];
            if (tied(x1, x2) || tied(y1, y2)) ++pc.ties;
            else if ((x1 < x2) == (y1 < y2)) ++pc.concordant;
            else ++pc.discordant;
        }
    return pc;
}

}  // namespace

TEST_CASE("worked example: path-star graph against its two-component variant") {
    // H: a-b, b-c, c-d, c-e with degrees (1,2,3,1,1);
    // dropping both c-d and c-e leaves degrees (1,2,1,0,0).
    const auto h = vec({"a", "b", "c", "d", "e"}, {1, 2, 3, 1, 1});
    const auto g = vec({"a", "b", "c", "d", "e"}, {1, 2, 1, 0, 0});
    const auto pc = classify_pairs(h, g);
    CHECK(pc.concordant == 5);
    CHECK(pc.discordant == 1);
    CHECK(pc.ties == 4);
    CHECK(pc.compared_nodes == 5);
    CHECK(*sensitivity(pc) == doctest::Approx(5.0 / 6.0));
    CHECK(*gamma_coefficient(pc) == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("identical rankings give sensitivity 1, reversed give 0") {
    const auto up = vec({"a", "b", "c"}, {1, 2, 3});
    const auto down = vec({"a", "b", "c"}, {3, 2, 1});
    CHECK(*sensitivity(classify_pairs(up, up)) == 1.0);
    CHECK(*sensitivity(classify_pairs(up, down)) == 0.0);
    CHECK(*gamma_coefficient(classify_pairs(up, down)) == -1.0);
}

TEST_CASE("all-tied comparisons are undefined") {
    const auto flat = vec({"a", "b", "c"}, {1, 1, 1});
    const auto up = vec({"a", "b", "c"}, {1, 2, 3});
    CHECK_FALSE(sensitivity(classify_pairs(flat, up)).has_value());
    CHECK_FALSE(gamma_coefficient(classify_pairs(flat, flat)).has_value());
}

TEST_CASE("nodes are matched by label, not by position") {
    const auto a = vec({"a", "b", "c", "x"}, {1, 2, 3, 99});
    const auto b = vec({"c", "a", "b", "y"}, {30, 10, 20, -1});
    const auto pc = classify_pairs(a, b);
    CHECK(pc.compared_nodes == 3);
    CHECK(pc.concordant == 3);
    CHECK(pc.discordant == 0);
    CHECK(*sensitivity(pc) == 1.0);
}

TEST_CASE("fewer than two common nodes is an error") {
    const auto a = vec({"a", "b"}, {1, 2});
    const auto b = vec({"x", "y"}, {1, 2});
    CHECK_THROWS_AS(classify_pairs(a, b), Error);
    const auto c = vec({"a", "z"}, {1, 2});
    CHECK_THROWS_AS(classify_pairs(a, c), Error);
}

TEST_CASE("pair counts always partition C(k,2)") {
    Rng rng(RngSeed{77, 0});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::string> labels;
        std::vector<double> s1, s2;
        const int k = 3 + static_cast<int>(rng.uniform_int(10));
        for (int i = 0; i < k; ++i) {
            labels.push_back("n" + std::to_string(i));
            s1.push_back(static_cast<double>(rng.uniform_int(5)));
            s2.push_back(static_cast<double>(rng.uniform_int(5)));
        }
        const auto pc = classify_pairs(vec(labels, s1), vec(labels, s2));
        CHECK(pc.concordant + pc.discordant + pc.ties ==
              static_cast<long long>(k) * (k - 1) / 2);
    }
}

TEST_CASE("classification agrees with a brute-force oracle on random inputs") {
    Rng rng(RngSeed{78, 0});
    for (int trial = 0; trial < 30; ++trial) {
        const int ka = 2 + static_cast<int>(rng.uniform_int(12));
        const int kb = 2 + static_cast<int>(rng.uniform_int(12));
        std::vector<std::string> la, lb;
        std::vector<double> sa, sb;
        for (int i = 0; i < ka; ++i) {
            la.push_back("n" + std::to_string(rng.uniform_int(15)) + "_" + std::to_string(i));
            sa.push_back(rng.uniform() < 0.3 ? 1.0 : rng.uniform());
        }
        for (int i = 0; i < kb; ++i) {
            // overlap roughly half the labels with vector a
            lb.push_back(rng.uniform() < 0.5 && i < ka ? la[i] : "m" + std::to_string(i));
            sb.push_back(rng.uniform() < 0.3 ? 1.0 : rng.uniform());
        }
        const auto a = vec(la, sa);
        const auto b = vec(lb, sb);
        const auto expected = brute_force(a, b);
        if (expected.compared_nodes < 2) {
            CHECK_THROWS_AS(classify_pairs(a, b), Error);
            continue;
        }
        const auto got = classify_pairs(a, b);
        CHECK(got.concordant == expected.concordant);
        CHECK(got.discordant == expected.discordant);
        CHECK(got.ties == expected.ties);
        CHECK(got.compared_nodes == expected.compared_nodes);
    }
}

TEST_CASE("sensitivity is symmetric in its arguments") {
    const auto a = vec({"a", "b", "c", "d"}, {1, 3, 2, 2});
    const auto b = vec({"a", "b", "c", "d"}, {4, 1, 3, 3});
    CHECK(*sensitivity(classify_pairs(a, b)) == *sensitivity(classify_pairs(b, a)));
}

TEST_CASE("strictly monotone score transforms leave sensitivity unchanged") {
    const auto a = vec({"a", "b", "c", "d", "e"}, {1, 2, 3, 1, 1});
    const auto b = vec({"a", "b", "c", "d", "e"}, {1, 2, 1, 0, 0});
    const auto baseline = *sensitivity(classify_pairs(a, b));

    auto transform = [](const CentralityVector& v, auto f) {
        auto out = v;
        for (double& x : out.scores) x = f(x);
        return out;
    };
    const auto exp_a = transform(a, [](double x) { return std::exp(x); });
    const auto cube_b = transform(b, [](double x) { return x * x * x + 10.0; });
    CHECK(*sensitivity(classify_pairs(exp_a, cube_b)) == doctest::Approx(baseline));
}

TEST_CASE("sensitivity equals (gamma + 1) / 2") {
    const auto a = vec({"a", "b", "c", "d"}, {1, 4, 2, 3});
    const auto b = vec({"a", "b", "c", "d"}, {2, 1, 4, 3});
    const auto pc = classify_pairs(a, b);
    CHECK(*sensitivity(pc) == doctest::Approx((*gamma_coefficient(pc) + 1.0) / 2.0));
}

TEST_CASE("near-equal scores within relative tolerance count as ties") {
    const double x = 0.3;
    const double y = x * (1.0 + 0.5 * kTieRelTolerance);
    const auto a = vec({"a", "b", "c"}, {x, y, 1.0});
    const auto b = vec({"a", "b", "c"}, {1.0, 2.0, 3.0});
    const auto pc = classify_pairs(a, b);
    CHECK(pc.ties == 1);
    CHECK(pc.concordant == 2);
}

TEST_CASE("comparing a graph with itself under any measure gives 1 or undefined") {
    const auto g = from_edge_list("a b\nb c\nc d\nc e").graph;
    for (Measure m : all_measures()) {
        const auto v = compute_centrality(g, m);
        const auto rho = sensitivity(v, v);
        if (rho.has_value()) CHECK(*rho == 1.0);
    }
}
