#include "netsens/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace netsens {

namespace {

bool tied(double x, double y) {
    return std::abs(x - y) <= kTieRelTolerance * std::max(std::abs(x), std::abs(y));
}

}  // namespace

PairClassification classify_pairs(const CentralityVector& a, const CentralityVector& b) {
    std::unordered_map<std::string_view, int> index_b;
    index_b.reserve(b.labels.size());
    for (int i = 0; i < b.size(); ++i) index_b.emplace(b.labels[i], i);

    // scores of the common nodes, aligned
    std::vector<double> xs, ys;
    xs.reserve(a.labels.size());
    ys.reserve(a.labels.size());
    for (int i = 0; i < a.size(); ++i) {
        const auto it = index_b.find(a.labels[i]);
        if (it == index_b.end()) continue;
        xs.push_back(a.scores[i]);
        ys.push_back(b.scores[it->second]);
    }

    const int k = static_cast<int>(xs.size());
    if (k < 2) throw Error("classify_pairs: fewer than 2 common nodes");

    PairClassification pc;
    pc.compared_nodes = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (tied(xs[i], xs[j]) || tied(ys[i], ys[j])) {
                ++pc.ties;
            } else if ((xs[i] < xs[j]) == (ys[i] < ys[j])) {
                ++pc.concordant;
            } else {
                ++pc.discordant;
            }
        }
    return pc;
}

std::optional<double> gamma_coefficient(const PairClassification& pc) {
    const long long total = pc.concordant + pc.discordant;
    if (total == 0) return std::nullopt;
    return static_cast<double>(pc.concordant - pc.discordant) / static_cast<double>(total);
}

std::optional<double> sensitivity(const PairClassification& pc) {
    const long long total = pc.concordant + pc.discordant;
    if (total == 0) return std::nullopt;
    return static_cast<double>(pc.concordant) / static_cast<double>(total);
}

std::optional<double> sensitivity(const CentralityVector& a, const CentralityVector& b) {
    return sensitivity(classify_pairs(a, b));
}

}  // namespace netsens
