#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netsens/estimators.hpp"

namespace netsens {

struct NetworkSource {
    enum class Kind { erdos_renyi, barabasi_albert, edge_list_file };
    Kind kind = Kind::erdos_renyi;
    int n = 100;
    double p = 0.2;        // ER
    int m = 11;            // BA
    std::string path;      // edge_list_file; loaded once, LCC taken
    std::string name;      // CSV network column ("er", "ba", or file stem)
};

struct ExperimentSpec {
    NetworkSource network;
    std::vector<ErrorMechanism> mechanisms;
    std::vector<Measure> measures;
    int runs = 500;
    int inner_samples = 50;
    double threshold = 0.3;
    std::uint64_t master_seed = 1;
    int workers = 1;
    bool compute_estimates = true;  // off = record true sensitivity only
    CentralityConfig centrality;
};

/// One (run, mechanism, measure) outcome. Estimates and derived columns
/// are empty when undefined or infeasible; flags says why.
struct ExperimentRecord {
    int run_id = 0;
    std::string network;
    ErrorMechanism mechanism;
    Measure measure = Measure::degree;
    std::optional<double> s;          // true sensitivity rho_c(H, O)
    std::optional<double> s_hat_iter;
    std::optional<double> s_hat_imp;
    std::optional<double> werr_iter;
    std::optional<double> werr_imp;
    std::optional<int> success_iter;
    std::optional<int> success_imp;
    std::string flags;
};

struct AggregateRow {
    std::string network;
    ErrorMechanism mechanism;
    Measure measure = Measure::degree;
    double mean_s = 0.0;
    std::optional<double> p95_abs_err_imp;
    std::optional<double> p95_abs_err_iter;
    std::optional<double> success_rate_imp;
    std::optional<double> success_rate_iter;
    int records = 0;
    int excluded_runs = 0;
};

/// |s - s_hat| / (1 - s); requires s < 1.
double weighted_error(double s, double s_hat);

/// 1 iff the estimate counts as successful: weighted error at or below the
/// threshold when s < 1, exact hit when s == 1.
int success(double s, double s_hat, double threshold);

/// Runs the full protocol: per run draw/load the hidden graph H, draw
/// O from phi(H), record s = rho_c(H, O) and (optionally) both estimates
/// computed from O alone. Random models regenerate H each run; an edge-list
/// source is loaded once (largest connected component) and reused.
/// Record order and content depend only on the spec, not on the worker
/// count. Infeasible or undefined runs are flagged, never dropped.
std::vector<ExperimentRecord> run_experiment(const ExperimentSpec& spec);

/// Per (network, mechanism, measure): mean s over defined records,
/// nearest-rank 95th percentile of |s - s_hat| and success rate per
/// estimator, and the number of records excluded as undefined/infeasible.
std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records,
                                    std::ostream* warnings = nullptr);

void write_records_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);
void write_aggregates_csv(const std::vector<AggregateRow>& rows, std::ostream& out);
std::vector<ExperimentRecord> read_records_csv(std::istream& in);

/// Flat key=value spec document (one key per line, '#' comments).
/// Keys: network (er|ba|path), n, p, m, name, mechanisms (comma-separated
/// tokens), measures (comma-separated tokens), runs, inner_samples,
/// threshold, seed, workers.
ExperimentSpec parse_spec_text(std::string_view text);
ExperimentSpec read_spec_file(const std::string& path);

}  // namespace netsens
