#include "netsens/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "netsens/edge_list.hpp"

namespace netsens {

double weighted_error(double s, double s_hat) {
    if (s >= 1.0) throw Error("weighted_error requires s < 1");
    return std::abs(s - s_hat) / (1.0 - s);
}

int success(double s, double s_hat, double threshold) {
    if (s >= 1.0) return s_hat >= 1.0 ? 1 : 0;
    // hitting the threshold exactly counts; the slack keeps rounding in the
    // division from flipping that boundary
    return weighted_error(s, s_hat) <= threshold + 1e-9 ? 1 : 0;
}

namespace {

constexpr std::uint64_t kStreamHidden = 0;
constexpr std::uint64_t kStreamError = 1;
constexpr std::uint64_t kStreamIterative = 2;
constexpr std::uint64_t kStreamImputation = 3;

void append_flag(std::string& flags, const char* flag) {
    if (!flags.empty()) flags += ';';
    flags += flag;
}

void fill_estimates(ExperimentRecord& rec, const std::optional<Estimate>& iter,
                    const std::optional<Estimate>& imp, double threshold) {
    if (iter) {
        if (iter->defined()) {
            rec.s_hat_iter = iter->value;
        } else {
            append_flag(rec.flags, "iter_undefined");
        }
    }
    if (imp) {
        if (imp->defined()) {
            rec.s_hat_imp = imp->value;
        } else {
            append_flag(rec.flags, "imp_undefined");
        }
    }
    if (rec.s) {
        if (rec.s_hat_iter) {
            if (*rec.s < 1.0) rec.werr_iter = weighted_error(*rec.s, *rec.s_hat_iter);
            rec.success_iter = success(*rec.s, *rec.s_hat_iter, threshold);
        }
        if (rec.s_hat_imp) {
            if (*rec.s < 1.0) rec.werr_imp = weighted_error(*rec.s, *rec.s_hat_imp);
            rec.success_imp = success(*rec.s, *rec.s_hat_imp, threshold);
        }
    }
}

std::string source_name(const NetworkSource& src) {
    if (!src.name.empty()) return src.name;
    switch (src.kind) {
        case NetworkSource::Kind::erdos_renyi: return "er";
        case NetworkSource::Kind::barabasi_albert: return "ba";
        case NetworkSource::Kind::edge_list_file: {
            auto stem = src.path;
            if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
                stem = stem.substr(slash + 1);
            if (const auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0)
                stem = stem.substr(0, dot);
            return stem;
        }
    }
    return "unknown";
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentSpec& spec) {
    if (spec.runs < 1) throw Error("experiment: runs must be >= 1");
    if (spec.threshold <= 0) throw Error("experiment: threshold must be positive");
    if (spec.mechanisms.empty()) throw Error("experiment: no mechanisms given");
    if (spec.measures.empty()) throw Error("experiment: no measures given");

    const std::string network_name = source_name(spec.network);

    // a fixed real network is loaded once; its centralities never change
    Graph fixed_hidden;
    std::vector<CentralityVector> fixed_hidden_vectors;
    const bool fixed = spec.network.kind == NetworkSource::Kind::edge_list_file;
    if (fixed) {
        fixed_hidden = largest_connected_component(read_edge_list_file(spec.network.path).graph);
        for (Measure m : spec.measures)
            fixed_hidden_vectors.push_back(compute_centrality(fixed_hidden, m, spec.centrality));
    }

    const RngSeed base{spec.master_seed, 0};
    const int mech_count = static_cast<int>(spec.mechanisms.size());
    const int measure_count = static_cast<int>(spec.measures.size());
    const std::size_t job_count = static_cast<std::size_t>(mech_count) * spec.runs;
    std::vector<ExperimentRecord> records(job_count * measure_count);

    const auto run_job = [&](std::size_t job) {
        const int mech_idx = static_cast<int>(job / spec.runs);
        const int run = static_cast<int>(job % spec.runs);
        const ErrorMechanism phi = spec.mechanisms[mech_idx];
        const RngSeed job_seed = base.derive(mech_idx).derive(run);

        ExperimentRecord* out = records.data() + job * measure_count;
        for (int i = 0; i < measure_count; ++i) {
            out[i].run_id = run;
            out[i].network = network_name;
            out[i].mechanism = phi;
            out[i].measure = spec.measures[i];
        }

        Graph generated;
        const Graph* hidden = &fixed_hidden;
        if (!fixed) {
            const RngSeed gen_seed = job_seed.derive(kStreamHidden);
            generated = spec.network.kind == NetworkSource::Kind::erdos_renyi
                            ? erdos_renyi(spec.network.n, spec.network.p, gen_seed)
                            : barabasi_albert(spec.network.n, spec.network.m, gen_seed);
            hidden = &generated;
        }

        Graph observed;
        try {
            observed = apply_error(*hidden, phi, job_seed.derive(kStreamError));
        } catch (const InfeasibleError&) {
            for (int i = 0; i < measure_count; ++i) append_flag(out[i].flags, "error_infeasible");
            return;
        }

        for (int i = 0; i < measure_count; ++i) {
            const CentralityVector hidden_vec =
                fixed ? fixed_hidden_vectors[i]
                      : compute_centrality(*hidden, spec.measures[i], spec.centrality);
            const auto observed_vec = compute_centrality(observed, spec.measures[i], spec.centrality);
            out[i].s = sensitivity(hidden_vec, observed_vec);
            if (!out[i].s) append_flag(out[i].flags, "s_undefined");
        }

        if (!spec.compute_estimates) return;

        EstimatorConfig cfg;
        cfg.inner_samples = spec.inner_samples;
        cfg.centrality = spec.centrality;

        std::vector<std::optional<Estimate>> iter(measure_count), imp(measure_count);
        cfg.seed = job_seed.derive(kStreamIterative);
        try {
            const auto batch = iterative_estimate_batch(observed, phi, spec.measures, cfg);
            for (int i = 0; i < measure_count; ++i) iter[i] = batch[i];
        } catch (const InfeasibleError&) {
            for (int i = 0; i < measure_count; ++i) append_flag(out[i].flags, "iter_infeasible");
        }
        cfg.seed = job_seed.derive(kStreamImputation);
        try {
            const auto batch = imputation_estimate_batch(observed, phi, spec.measures, cfg);
            for (int i = 0; i < measure_count; ++i) imp[i] = batch[i];
        } catch (const InfeasibleError&) {
            for (int i = 0; i < measure_count; ++i) append_flag(out[i].flags, "imp_infeasible");
        }
        for (int i = 0; i < measure_count; ++i)
            fill_estimates(out[i], iter[i], imp[i], spec.threshold);
    };

    const int workers = std::max(1, spec.workers);
    if (workers == 1) {
        for (std::size_t job = 0; job < job_count; ++job) run_job(job);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t job = next.fetch_add(1);
                    if (job >= job_count) return;
                    try {
                        run_job(job);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    return records;
}

namespace {

double nearest_rank_p95(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const auto n = static_cast<std::size_t>(values.size());
    const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(n)));
    return values[std::max<std::size_t>(rank, 1) - 1];
}

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records,
                                    std::ostream* warnings) {
    struct Group {
        std::vector<const ExperimentRecord*> records;
    };
    std::vector<std::string> order;
    std::map<std::string, Group> groups;
    for (const auto& rec : records) {
        const std::string key =
            rec.network + '|' + mechanism_token(rec.mechanism) + '|' + measure_token(rec.measure);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.records.push_back(&rec);
    }

    std::vector<AggregateRow> rows;
    for (const auto& key : order) {
        const auto& group = groups[key].records;
        AggregateRow row;
        row.network = group.front()->network;
        row.mechanism = group.front()->mechanism;
        row.measure = group.front()->measure;

        double s_sum = 0.0;
        int s_count = 0;
        std::vector<double> err_imp, err_iter;
        int succ_imp = 0, succ_imp_n = 0, succ_iter = 0, succ_iter_n = 0;
        for (const auto* rec : group) {
            if (!rec->flags.empty()) {  // flagged runs never enter the statistics
                ++row.excluded_runs;
                continue;
            }
            if (!rec->s) continue;
            s_sum += *rec->s;
            ++s_count;
            if (rec->s_hat_imp) {
                err_imp.push_back(std::abs(*rec->s - *rec->s_hat_imp));
                succ_imp += *rec->success_imp;
                ++succ_imp_n;
            }
            if (rec->s_hat_iter) {
                err_iter.push_back(std::abs(*rec->s - *rec->s_hat_iter));
                succ_iter += *rec->success_iter;
                ++succ_iter_n;
            }
        }
        if (s_count == 0) {
            if (warnings)
                *warnings << "warning: group " << key << " has no defined records, omitted\n";
            continue;
        }
        row.records = static_cast<int>(group.size()) - row.excluded_runs;
        row.mean_s = s_sum / s_count;
        if (!err_imp.empty()) {
            row.p95_abs_err_imp = nearest_rank_p95(std::move(err_imp));
            row.success_rate_imp = static_cast<double>(succ_imp) / succ_imp_n;
        }
        if (!err_iter.empty()) {
            row.p95_abs_err_iter = nearest_rank_p95(std::move(err_iter));
            row.success_rate_iter = static_cast<double>(succ_iter) / succ_iter_n;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : std::string(); }
std::string fmt(const std::optional<int>& x) { return x ? std::to_string(*x) : std::string(); }

// records.csv doubles round-trip exactly so that re-aggregation of a written
// file reproduces the original aggregates byte for byte
std::string fmt_exact(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_exact(const std::optional<double>& x) { return x ? fmt_exact(*x) : std::string(); }

}  // namespace

void write_records_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
    out << "run_id,network,mechanism,level,centrality,s,s_hat_iter,s_hat_imp,"
           "werr_iter,werr_imp,success_iter,success_imp,flags\n";
    for (const auto& r : records) {
        out << r.run_id << ',' << r.network << ',' << error_kind_token(r.mechanism.kind) << ','
            << fmt(r.mechanism.level) << ',' << measure_token(r.measure) << ',' << fmt_exact(r.s)
            << ',' << fmt_exact(r.s_hat_iter) << ',' << fmt_exact(r.s_hat_imp) << ','
            << fmt_exact(r.werr_iter) << ',' << fmt_exact(r.werr_imp) << ','
            << fmt(r.success_iter) << ',' << fmt(r.success_imp) << ',' << r.flags << '\n';
    }
}

void write_aggregates_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
    out << "network,mechanism,level,centrality,mean_s,p95_abs_err_imp,p95_abs_err_iter,"
           "success_rate_imp,success_rate_iter,records,excluded_runs\n";
    for (const auto& r : rows) {
        out << r.network << ',' << error_kind_token(r.mechanism.kind) << ','
            << fmt(r.mechanism.level) << ',' << measure_token(r.measure) << ',' << fmt(r.mean_s)
            << ',' << fmt(r.p95_abs_err_imp) << ',' << fmt(r.p95_abs_err_iter) << ','
            << fmt(r.success_rate_imp) << ',' << fmt(r.success_rate_iter) << ',' << r.records
            << ',' << r.excluded_runs << '\n';
    }
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

std::optional<double> parse_opt_double(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return std::stod(s);
}

std::optional<int> parse_opt_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return std::stoi(s);
}

}  // namespace

std::vector<ExperimentRecord> read_records_csv(std::istream& in) {
    std::vector<ExperimentRecord> records;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("records csv: empty input");
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 13)
            throw ParseError("records csv line " + std::to_string(line_no) +
                             ": expected 13 fields, got " + std::to_string(f.size()));
        ExperimentRecord r;
        try {
            r.run_id = std::stoi(f[0]);
            r.network = f[1];
            r.mechanism = parse_mechanism_token(f[2] + ":" + f[3]);
            r.measure = parse_measure_token(f[4]);
            r.s = parse_opt_double(f[5]);
            r.s_hat_iter = parse_opt_double(f[6]);
            r.s_hat_imp = parse_opt_double(f[7]);
            r.werr_iter = parse_opt_double(f[8]);
            r.werr_imp = parse_opt_double(f[9]);
            r.success_iter = parse_opt_int(f[10]);
            r.success_imp = parse_opt_int(f[11]);
            r.flags = f[12];
        } catch (const std::exception& e) {
            throw ParseError("records csv line " + std::to_string(line_no) + ": " + e.what());
        }
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    for (auto& item : split(value, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

}  // namespace

ExperimentSpec parse_spec_text(std::string_view text) {
    ExperimentSpec spec;
    spec.mechanisms.clear();
    spec.measures.clear();

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("spec line " + std::to_string(line_no) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        const auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);

        try {
            if (key == "network") {
                if (value == "er") spec.network.kind = NetworkSource::Kind::erdos_renyi;
                else if (value == "ba") spec.network.kind = NetworkSource::Kind::barabasi_albert;
                else {
                    spec.network.kind = NetworkSource::Kind::edge_list_file;
                    spec.network.path = value;
                }
            } else if (key == "n") spec.network.n = std::stoi(value);
            else if (key == "p") spec.network.p = std::stod(value);
            else if (key == "m") spec.network.m = std::stoi(value);
            else if (key == "name") spec.network.name = value;
            else if (key == "mechanisms") {
                for (const auto& token : split_list(value))
                    spec.mechanisms.push_back(parse_mechanism_token(token));
            } else if (key == "measures") {
                for (const auto& token : split_list(value))
                    spec.measures.push_back(parse_measure_token(token));
            } else if (key == "runs") spec.runs = std::stoi(value);
            else if (key == "inner_samples") spec.inner_samples = std::stoi(value);
            else if (key == "threshold") spec.threshold = std::stod(value);
            else if (key == "seed") spec.master_seed = std::stoull(value);
            else if (key == "workers") spec.workers = std::stoi(value);
            else if (key == "estimates") spec.compute_estimates = (value != "off" && value != "0" && value != "false");
            else throw ParseError("unknown key: " + key);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("spec line " + std::to_string(line_no) + ": bad value for " + key);
        }
    }

    if (spec.mechanisms.empty())
        for (const char* token : {"rm_nodes:0.1", "rm_edges_unif:0.1", "rm_edges_prop:0.1",
                                  "add_edges:0.1", "rm_nodes:0.3", "rm_edges_unif:0.3",
                                  "rm_edges_prop:0.3", "add_edges:0.3"})
            spec.mechanisms.push_back(parse_mechanism_token(token));
    if (spec.measures.empty()) spec.measures = all_measures();
    return spec;
}

ExperimentSpec read_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_spec_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace netsens
