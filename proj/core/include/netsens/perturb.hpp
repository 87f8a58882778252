#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "netsens/graph.hpp"

namespace netsens {

enum class ErrorKind {
    remove_nodes_uniform,
    remove_edges_uniform,
    remove_edges_proportional,
    add_edges_uniform,
};

/// An error mechanism phi: a seeded sampler mapping a graph to one draw
/// from the random graph phi(G). level is the affected fraction alpha.
struct ErrorMechanism {
    ErrorKind kind = ErrorKind::remove_edges_uniform;
    double level = 0.0;  // alpha in [0, 1)
};

enum class ImputationKind {
    add_uniform_non_edges,
    remove_uniform_edges,
    add_nodes_degree_sampled,
};

/// An imputation mechanism psi with its magnitude k already resolved
/// against a concrete observed graph (see invert_error).
struct ImputationMechanism {
    ImputationKind kind = ImputationKind::add_uniform_non_edges;
    std::int64_t count = 0;
};

/// Tokens used in CLI flags, spec files and CSVs:
/// rm_nodes:0.1, rm_edges_unif:0.3, rm_edges_prop:0.1, add_edges:0.3.
std::string mechanism_token(const ErrorMechanism& phi);
std::string error_kind_token(ErrorKind kind);
ErrorMechanism parse_mechanism_token(std::string_view token);

/// round-half-up of alpha * count; the rounding rule is frozen project-wide
/// so that error levels map to reproducible integer magnitudes.
std::int64_t round_count(double alpha, std::int64_t count);

/// One draw from phi(g):
///  - remove_nodes_uniform:      drop round(alpha*n) uniform nodes + incident edges
///  - remove_edges_uniform:      drop round(alpha*|E|) uniform edges
///  - remove_edges_proportional: drop round(alpha*|E|) edges, weight of {u,v}
///                               = deg(u)+deg(v) frozen on the input graph
///  - add_edges_uniform:         insert round(alpha*|E|) uniform non-edges
/// Survivor labels are preserved; ids are re-densified.
/// Throws InfeasibleError when the draw is impossible (not enough
/// non-edges, or a removal count reaching the whole population).
Graph apply_error(const Graph& g, const ErrorMechanism& phi, RngSeed seed);

/// The imputation mechanism matching phi, magnitude computed from the
/// observed graph:
///  - remove_edges_*    -> add k = round(|E|*a/(1-a)) non-edges
///  - add_edges_uniform -> remove k = round(|E|*a/(1+a)) edges
///  - remove_nodes      -> add k = round(n*a/(1-a)) degree-sampled nodes
ImputationMechanism invert_error(const ErrorMechanism& phi, const Graph& observed);

/// One draw from psi(g). Degree-sampled nodes are added one at a time:
/// each draws a target degree from the degree distribution of the graph as
/// it currently stands (capped at the current node count, resampling on
/// violation) and connects to that many distinct existing nodes uniformly.
Graph apply_imputation(const Graph& g, const ImputationMechanism& psi, RngSeed seed);

}  // namespace netsens
