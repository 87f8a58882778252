#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "netsens/graph.hpp"

namespace netsens {

enum class Measure { degree, closeness, betweenness, eigenvector, pagerank };

/// Short tokens as used in flags and CSV columns: dc, cc, bc, ec, pr.
std::string measure_token(Measure m);
Measure parse_measure_token(std::string_view token);
const std::vector<Measure>& all_measures();

struct CentralityConfig {
    double damping = 0.85;      // pagerank only
    double tolerance = 1e-10;   // iterative measures
    int max_iterations = 0;     // 0 = per-measure default (200 pagerank, 1000 eigenvector)
};

/// Scores within this relative tolerance count as tied when pairs are
/// classified downstream; exact comparison would turn floating-point noise
/// into spurious concordances.
inline constexpr double kTieRelTolerance = 1e-12;

/// Centrality scores for every node of one graph, aligned with labels so
/// vectors from different graphs can be compared over common nodes.
struct CentralityVector {
    Measure measure = Measure::degree;
    std::vector<std::string> labels;
    std::vector<double> scores;
    bool converged = true;  // false when power iteration hit max_iterations

    int size() const { return static_cast<int>(scores.size()); }
};

/// score(u) = deg(u)
CentralityVector degree_centrality(const Graph& g);

/// score(u) = (n-1) / sum_v d(u,v); unreachable pairs count distance n,
/// isolated nodes score 0.
CentralityVector closeness_centrality(const Graph& g);

/// Brandes' algorithm, unnormalized, over unordered pairs.
CentralityVector betweenness_centrality(const Graph& g);

/// Principal adjacency eigenvector by power iteration from the uniform
/// positive vector, normalized to unit maximum entry. Throws on edgeless
/// graphs.
CentralityVector eigenvector_centrality(const Graph& g, const CentralityConfig& cfg = {});

/// Stationary vector of the damped random walk; isolated nodes redistribute
/// their mass uniformly. Scores sum to 1.
CentralityVector pagerank(const Graph& g, const CentralityConfig& cfg = {});

CentralityVector compute_centrality(const Graph& g, Measure m, const CentralityConfig& cfg = {});

/// CSV with columns node_label,score,measure.
void write_centrality_csv(const CentralityVector& v, std::ostream& out);

}  // namespace netsens
