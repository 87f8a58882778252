#pragma once

#include <optional>

#include "netsens/centrality.hpp"

namespace netsens {

/// Pair counts over the nodes common to two centrality vectors.
/// concordant + discordant + ties == C(compared_nodes, 2).
struct PairClassification {
    long long concordant = 0;
    long long discordant = 0;
    long long ties = 0;  // tied in either vector
    int compared_nodes = 0;
};

/// Classifies every unordered pair of common nodes (matched by label):
/// concordant when both vectors order the pair strictly the same way,
/// discordant when strictly opposite, tie otherwise. Ties use
/// kTieRelTolerance. Throws Error if fewer than 2 common nodes.
PairClassification classify_pairs(const CentralityVector& a, const CentralityVector& b);

/// Goodman-Kruskal gamma, (n_c - n_d) / (n_c + n_d); nullopt when every
/// pair is tied.
std::optional<double> gamma_coefficient(const PairClassification& pc);

/// n_c / (n_c + n_d) in [0,1]; equals (gamma + 1) / 2. nullopt when every
/// pair is tied.
std::optional<double> sensitivity(const PairClassification& pc);
std::optional<double> sensitivity(const CentralityVector& a, const CentralityVector& b);

}  // namespace netsens
