// netsens: measure and estimate the sensitivity of centrality rankings to
// network measurement errors.
//
// Subcommands: generate | perturb | sensitivity | estimate | experiment | report

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "netsens/edge_list.hpp"
#include "netsens/evaluation.hpp"

namespace fs = std::filesystem;
using namespace netsens;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("NETSENS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring NETSENS_SEED, not a valid 64-bit seed\n";
        }
    }
    return 42;
}

std::vector<Measure> parse_measures(const std::string& csv) {
    std::vector<Measure> measures;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) measures.push_back(parse_measure_token(token));
    if (measures.empty()) throw CLI::ValidationError("--measures", "no measures given");
    return measures;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
    int n = 100;
    double p = 0.2;
    int m = 11;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
};

int run_generate(bool ba, const GenerateOpts& opt) {
    const RngSeed seed{opt.seed_given ? opt.seed : default_seed(), 0};
    const Graph g = ba ? barabasi_albert(opt.n, opt.m, seed) : erdos_renyi(opt.n, opt.p, seed);
    if (opt.out.empty()) {
        write_edge_list(g, std::cout);
    } else {
        write_edge_list_file(g, opt.out);
    }
    std::cerr << "n=" << g.n() << " edges=" << g.edge_count() << "\n";
    return 0;
}

// ----------------------------------------------------------------- perturb

int run_perturb(const std::string& in, const std::string& mech, std::uint64_t seed,
                const std::string& out) {
    const Graph g = read_edge_list_file(in).graph;
    const ErrorMechanism phi = parse_mechanism_token(mech);
    const Graph perturbed = apply_error(g, phi, RngSeed{seed, 0});
    if (out.empty()) {
        write_edge_list(perturbed, std::cout);
    } else {
        write_edge_list_file(perturbed, out);
    }
    std::cerr << "before: n=" << g.n() << " edges=" << g.edge_count()
              << "  after: n=" << perturbed.n() << " edges=" << perturbed.edge_count() << "\n";
    return 0;
}

// ------------------------------------------------------------- sensitivity

int run_sensitivity(const std::string& path_a, const std::string& path_b,
                    const std::vector<Measure>& measures) {
    const Graph a = read_edge_list_file(path_a).graph;
    const Graph b = read_edge_list_file(path_b).graph;
    std::cout << "measure,n_c,n_d,ties,rho\n";
    for (Measure m : measures) {
        const auto pc = classify_pairs(compute_centrality(a, m), compute_centrality(b, m));
        const auto rho = sensitivity(pc);
        std::cout << measure_token(m) << ',' << pc.concordant << ',' << pc.discordant << ','
                  << pc.ties << ',' << (rho ? fmt(*rho) : "undefined") << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- estimate

int run_estimate(const std::string& in, const std::string& mech,
                 const std::vector<Measure>& measures, int inner_samples, std::uint64_t seed) {
    const Graph observed = read_edge_list_file(in).graph;
    const ErrorMechanism phi = parse_mechanism_token(mech);
    EstimatorConfig cfg;
    cfg.inner_samples = inner_samples;
    cfg.seed = RngSeed{seed, 0};

    std::cout << "measure,estimator,estimate,std_error,undefined_draws,flags\n";
    const auto emit = [&](const char* name, const std::vector<Estimate>* batch,
                          const char* flag) {
        for (std::size_t i = 0; i < measures.size(); ++i) {
            std::cout << measure_token(measures[i]) << ',' << name << ',';
            if (batch && (*batch)[i].defined()) {
                std::cout << fmt((*batch)[i].value) << ',' << fmt((*batch)[i].std_error) << ','
                          << (*batch)[i].undefined_draws << ',';
            } else {
                std::cout << ",," << (batch ? (*batch)[i].undefined_draws : 0) << ','
                          << (batch ? "undefined" : flag);
            }
            std::cout << '\n';
        }
    };

    cfg.seed = RngSeed{seed, 1};
    const auto iter = iterative_estimate_batch(observed, phi, measures, cfg);
    emit("iterative", &iter, "");

    cfg.seed = RngSeed{seed, 2};
    try {
        const auto imp = imputation_estimate_batch(observed, phi, measures, cfg);
        emit("imputation", &imp, "");
    } catch (const InfeasibleError& e) {
        std::cerr << "imputation estimate infeasible: " << e.what() << "\n";
        emit("imputation", nullptr, "infeasible");
    }
    return 0;
}

// -------------------------------------------------------------- experiment

std::vector<ExperimentSpec> expand_preset(const std::string& preset, const std::string& data_dir) {
    const auto base = [] {
        ExperimentSpec spec = parse_spec_text("");  // defaults: 8 mechanisms, 5 measures
        spec.runs = 500;
        spec.inner_samples = 50;
        spec.threshold = 0.3;
        return spec;
    };

    std::vector<ExperimentSpec> specs;
    if (preset == "er-paper") {
        ExperimentSpec spec = base();
        spec.network.kind = NetworkSource::Kind::erdos_renyi;
        spec.network.n = 100;
        spec.network.p = 0.2;
        specs.push_back(std::move(spec));
    } else if (preset == "ba-paper") {
        ExperimentSpec spec = base();
        spec.network.kind = NetworkSource::Kind::barabasi_albert;
        spec.network.n = 100;
        spec.network.m = 11;
        specs.push_back(std::move(spec));
    } else if (preset == "realworld-paper") {
        for (const char* name : {"dolphins", "jazz", "protein", "hamsterster"}) {
            const fs::path path = fs::path(data_dir) / (std::string(name) + ".edges");
            if (!fs::exists(path)) {
                std::cerr << "warning: fixture " << path.string()
                          << " not found, skipping (see data/README.md)\n";
                continue;
            }
            ExperimentSpec spec = base();
            spec.network.kind = NetworkSource::Kind::edge_list_file;
            spec.network.path = path.string();
            spec.network.name = name;
            specs.push_back(std::move(spec));
        }
        if (specs.empty()) throw Error("realworld-paper: no fixtures found under " + data_dir);
    } else {
        throw CLI::ValidationError("--preset", "unknown preset: " + preset +
                                                   " (er-paper, ba-paper, realworld-paper)");
    }
    return specs;
}

struct ExperimentOpts {
    std::string spec_path, preset, out_dir = ".", data_dir = "data";
    std::string mechs, measures;
    int runs = 0, inner_samples = 0, workers = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int run_experiment_cmd(const ExperimentOpts& opt) {
    std::vector<ExperimentSpec> specs;
    if (!opt.spec_path.empty()) {
        specs.push_back(read_spec_file(opt.spec_path));
    } else {
        specs = expand_preset(opt.preset, opt.data_dir);
    }
    for (auto& spec : specs) {
        if (opt.runs > 0) spec.runs = opt.runs;
        if (opt.inner_samples > 0) spec.inner_samples = opt.inner_samples;
        if (opt.seed_given) spec.master_seed = opt.seed;
        if (!opt.mechs.empty()) {
            spec.mechanisms.clear();
            std::istringstream in(opt.mechs);
            std::string token;
            while (std::getline(in, token, ','))
                if (!token.empty()) spec.mechanisms.push_back(parse_mechanism_token(token));
        }
        if (!opt.measures.empty()) spec.measures = parse_measures(opt.measures);
        spec.workers = opt.workers > 0 ? opt.workers
                                       : std::max(1u, std::thread::hardware_concurrency());
    }

    fs::create_directories(opt.out_dir);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<ExperimentRecord> records;
    for (const auto& spec : specs) {
        auto part = run_experiment(spec);
        records.insert(records.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
    const auto rows = aggregate(records, &std::cerr);

    const fs::path records_path = fs::path(opt.out_dir) / "records.csv";
    const fs::path aggregates_path = fs::path(opt.out_dir) / "aggregates.csv";
    {
        std::ofstream out(records_path, std::ios::binary);
        write_records_csv(records, out);
    }
    {
        std::ofstream out(aggregates_path, std::ios::binary);
        write_aggregates_csv(rows, out);
    }

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    int excluded = 0;
    for (const auto& r : records)
        if (!r.flags.empty()) ++excluded;
    std::cerr << "wrote " << records_path.string() << " (" << records.size() << " records, "
              << excluded << " flagged) and " << aggregates_path.string() << " in "
              << elapsed.count() / 1000.0 << " s\n";
    return 0;
}

// ------------------------------------------------------------------ report

int run_report(const std::string& records_path, const std::string& out_path) {
    std::ifstream in(records_path, std::ios::binary);
    if (!in) throw Error("cannot open records file: " + records_path);
    const auto records = read_records_csv(in);
    const auto rows = aggregate(records, &std::cerr);
    if (out_path.empty()) {
        write_aggregates_csv(rows, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        write_aggregates_csv(rows, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sensitivity of centrality rankings to network measurement errors"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a random graph as an edge list");
    generate->require_subcommand(1);
    GenerateOpts gen;
    auto* gen_er = generate->add_subcommand("er", "Erdos-Renyi G(n, p)");
    gen_er->add_option("--n", gen.n, "node count")->check(CLI::NonNegativeNumber);
    gen_er->add_option("--p", gen.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    auto* gen_ba = generate->add_subcommand("ba", "Barabasi-Albert preferential attachment");
    gen_ba->add_option("--n", gen.n, "node count")->check(CLI::PositiveNumber);
    gen_ba->add_option("--m", gen.m, "edges per new node")->check(CLI::PositiveNumber);
    for (auto* sub : {gen_er, gen_ba}) {
        sub->add_option("--seed", gen.seed, "master seed (default: $NETSENS_SEED or 42)")
            ->each([&](const std::string&) { gen.seed_given = true; });
        sub->add_option("--out", gen.out, "output edge-list file (default: stdout)");
    }

    // perturb
    auto* perturb = app.add_subcommand("perturb", "Apply one error-mechanism draw to a graph");
    std::string pt_in, pt_mech, pt_out;
    std::uint64_t pt_seed = default_seed();
    perturb->add_option("--in", pt_in, "input edge-list file")->required()->check(CLI::ExistingFile);
    perturb->add_option("--mech", pt_mech,
                        "mechanism token, e.g. rm_edges_unif:0.1 | rm_nodes:0.3 | "
                        "rm_edges_prop:0.1 | add_edges:0.3")
        ->required();
    perturb->add_option("--seed", pt_seed, "master seed");
    perturb->add_option("--out", pt_out, "output edge-list file (default: stdout)");

    // sensitivity
    auto* sens = app.add_subcommand("sensitivity", "Sensitivity between two graphs per measure");
    std::string sv_a, sv_b, sv_measures = "bc,cc,dc,ec,pr";
    sens->add_option("--a", sv_a, "first edge-list file")->required()->check(CLI::ExistingFile);
    sens->add_option("--b", sv_b, "second edge-list file")->required()->check(CLI::ExistingFile);
    sens->add_option("--measures", sv_measures, "comma-separated measure tokens");

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate true sensitivity from an observed graph");
    std::string es_in, es_mech, es_measures = "bc,cc,dc,ec,pr";
    int es_inner = 50;
    std::uint64_t es_seed = default_seed();
    est->add_option("--in", es_in, "observed edge-list file")->required()->check(CLI::ExistingFile);
    est->add_option("--mech", es_mech, "assumed error mechanism token")->required();
    est->add_option("--measures", es_measures, "comma-separated measure tokens");
    est->add_option("--inner-samples", es_inner, "Monte-Carlo draws per estimate")
        ->check(CLI::PositiveNumber);
    est->add_option("--seed", es_seed, "master seed");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run a full evaluation experiment");
    ExperimentOpts eo;
    auto* spec_opt = exp->add_option("--spec", eo.spec_path, "experiment spec file")
                         ->check(CLI::ExistingFile);
    exp->add_option("--preset", eo.preset, "er-paper | ba-paper | realworld-paper")
        ->excludes(spec_opt);
    exp->add_option("--out-dir", eo.out_dir, "directory for records.csv and aggregates.csv");
    exp->add_option("--data-dir", eo.data_dir, "fixture directory for realworld-paper");
    exp->add_option("--mech", eo.mechs, "override mechanisms (comma-separated tokens)");
    exp->add_option("--measures", eo.measures, "override measures (comma-separated tokens)");
    exp->add_option("--runs", eo.runs, "override outer repetitions")->check(CLI::PositiveNumber);
    exp->add_option("--inner-samples", eo.inner_samples, "override Monte-Carlo draws")
        ->check(CLI::PositiveNumber);
    exp->add_option("--workers", eo.workers, "worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);
    exp->add_option("--seed", eo.seed, "override master seed")
        ->each([&](const std::string&) { eo.seed_given = true; });

    // report
    auto* rep = app.add_subcommand("report", "Re-aggregate a records.csv");
    std::string rp_records, rp_out;
    rep->add_option("--records", rp_records, "records.csv from a previous experiment")->required();
    rep->add_option("--out", rp_out, "output aggregates.csv (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (gen_er->parsed()) return run_generate(false, gen);
        if (gen_ba->parsed()) return run_generate(true, gen);
        if (perturb->parsed()) return run_perturb(pt_in, pt_mech, pt_seed, pt_out);
        if (sens->parsed()) return run_sensitivity(sv_a, sv_b, parse_measures(sv_measures));
        if (est->parsed())
            return run_estimate(es_in, es_mech, parse_measures(es_measures), es_inner, es_seed);
        if (exp->parsed()) {
            if (eo.spec_path.empty() && eo.preset.empty())
                throw CLI::ValidationError("experiment", "need --spec or --preset");
            return run_experiment_cmd(eo);
        }
        if (rep->parsed()) return run_report(rp_records, rp_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
