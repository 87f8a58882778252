#include "netsens/estimators.hpp"

#include <cmath>
#include <functional>

namespace netsens {

namespace {

/// Shared Monte-Carlo core: draw() yields one perturbed/imputed graph per
/// call; every draw is scored against the observed vectors for all
/// requested measures.
std::vector<Estimate> expectation_over_draws(
    const Graph& observed, const std::vector<Measure>& measures, const EstimatorConfig& cfg,
    const std::function<Graph(RngSeed)>& draw) {
    if (cfg.inner_samples < 1) throw Error("estimator: inner_samples must be >= 1");

    std::vector<CentralityVector> observed_vectors;
    observed_vectors.reserve(measures.size());
    for (Measure m : measures)
        observed_vectors.push_back(compute_centrality(observed, m, cfg.centrality));

    struct Accumulator {
        double sum = 0.0, sum_sq = 0.0;
        int defined = 0, undefined = 0;
    };
    std::vector<Accumulator> acc(measures.size());

    for (int r = 0; r < cfg.inner_samples; ++r) {
        const Graph sample = draw(cfg.seed.derive(static_cast<std::uint64_t>(r)));
        for (std::size_t i = 0; i < measures.size(); ++i) {
            const auto sampled = compute_centrality(sample, measures[i], cfg.centrality);
            if (const auto rho = sensitivity(observed_vectors[i], sampled)) {
                acc[i].sum += *rho;
                acc[i].sum_sq += *rho * *rho;
                ++acc[i].defined;
            } else {
                ++acc[i].undefined;
            }
        }
    }

    std::vector<Estimate> result(measures.size());
    for (std::size_t i = 0; i < measures.size(); ++i) {
        result[i].defined_draws = acc[i].defined;
        result[i].undefined_draws = acc[i].undefined;
        if (acc[i].defined > 0) {
            const double mean = acc[i].sum / acc[i].defined;
            result[i].value = mean;
            if (acc[i].defined > 1) {
                const double var =
                    std::max(0.0, (acc[i].sum_sq - acc[i].defined * mean * mean) / (acc[i].defined - 1));
                result[i].std_error = std::sqrt(var / acc[i].defined);
            }
        }
    }
    return result;
}

}  // namespace

std::vector<Estimate> iterative_estimate_batch(const Graph& observed, const ErrorMechanism& phi,
                                               const std::vector<Measure>& measures,
                                               const EstimatorConfig& cfg) {
    return expectation_over_draws(observed, measures, cfg,
                                  [&](RngSeed s) { return apply_error(observed, phi, s); });
}

std::vector<Estimate> imputation_estimate_batch(const Graph& observed, const ErrorMechanism& phi,
                                                const std::vector<Measure>& measures,
                                                const EstimatorConfig& cfg) {
    const ImputationMechanism psi = invert_error(phi, observed);
    // feasibility of psi on O is deterministic; probe it up front
    if (psi.kind == ImputationKind::add_uniform_non_edges && psi.count > observed.non_edge_count())
        throw InfeasibleError("imputation estimate: not enough non-edges to add");
    if (psi.kind == ImputationKind::remove_uniform_edges && psi.count > observed.edge_count())
        throw InfeasibleError("imputation estimate: cannot remove more edges than exist");
    return expectation_over_draws(observed, measures, cfg,
                                  [&](RngSeed s) { return apply_imputation(observed, psi, s); });
}

namespace {

double single(const std::vector<Estimate>& batch, const char* what) {
    if (!batch.front().defined())
        throw UndefinedSensitivityError(std::string(what) + ": every inner draw was undefined");
    return batch.front().value;
}

}  // namespace

double iterative_estimate(const Graph& observed, const ErrorMechanism& phi, Measure measure,
                          const EstimatorConfig& cfg) {
    return single(iterative_estimate_batch(observed, phi, {measure}, cfg), "iterative estimate");
}

double imputation_estimate(const Graph& observed, const ErrorMechanism& phi, Measure measure,
                           const EstimatorConfig& cfg) {
    return single(imputation_estimate_batch(observed, phi, {measure}, cfg), "imputation estimate");
}

}  // namespace netsens
