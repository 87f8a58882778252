#pragma once

#include <optional>
#include <vector>

#include "netsens/perturb.hpp"
#include "netsens/sensitivity.hpp"

namespace netsens {

struct EstimatorConfig {
    int inner_samples = 50;  // Monte-Carlo draws approximating E(.)
    RngSeed seed;
    CentralityConfig centrality;
};

struct Estimate {
    double value = 0.0;      // mean over defined draws
    double std_error = 0.0;  // standard error of that mean
    int defined_draws = 0;
    int undefined_draws = 0;  // draws where every pair was tied

    bool defined() const { return defined_draws > 0; }
};

/// E[rho_c(O, phi(O))]: mean sensitivity between the observed graph and
/// fresh error draws applied to it. One graph draw serves all requested
/// measures. Throws InfeasibleError when phi cannot be applied to O.
/// Entries with defined_draws == 0 had all draws undefined.
std::vector<Estimate> iterative_estimate_batch(const Graph& observed,
                                               const ErrorMechanism& phi,
                                               const std::vector<Measure>& measures,
                                               const EstimatorConfig& cfg);

/// E[rho_c(O, psi(O))] with psi = invert_error(phi, O). Throws
/// InfeasibleError when the inversion is infeasible on O.
std::vector<Estimate> imputation_estimate_batch(const Graph& observed,
                                                const ErrorMechanism& phi,
                                                const std::vector<Measure>& measures,
                                                const EstimatorConfig& cfg);

/// Single-measure conveniences; throw UndefinedSensitivityError when every
/// inner draw was undefined.
double iterative_estimate(const Graph& observed, const ErrorMechanism& phi,
                          Measure measure, const EstimatorConfig& cfg);
double imputation_estimate(const Graph& observed, const ErrorMechanism& phi,
                           Measure measure, const EstimatorConfig& cfg);

}  // namespace netsens
