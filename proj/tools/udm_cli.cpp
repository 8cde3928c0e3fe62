// Command-line front end: cross-over tables, per-mapping SER tables,
// exhaustive mapping optimization, achievable-rate sweeps, recoding tables,
// PMF dumps, and Monte-Carlo BER runs, all as reproducible CSV/JSON files.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udm/udm.hpp"

namespace {

using namespace udm;

std::string fmt(double v) { return format_double(v); }

SymbolDistribution resolve_dist(const std::string& name, const SymbolAlphabet& alphabet) {
    if (name == "uniform") return uniform_pmf(alphabet);
    if (name == "gaussian") return gaussian_like_pmf(alphabet);
    if (name == "bimodal") return bimodal_pmf(alphabet);
    return read_pmf_csv(name, alphabet);
}

CrossoverMatrix resolve_channel(const std::string& model, int n_bits, double epsilon) {
    if (model == "bsc") return bsc_crossover(n_bits, epsilon);
    return sac_crossover(n_bits, epsilon);
}

struct MappingChoice {
    std::string spec;  // "2c", "sm", "optimized", or a JSON path
};

Mapping resolve_fixed_mapping(const std::string& spec, const SymbolAlphabet& alphabet) {
    if (spec == "2c") return mapping_twos_complement(alphabet);
    if (spec == "sm") return mapping_sign_magnitude(alphabet);
    Mapping m = read_mapping_json(spec);
    if (m.alphabet() != alphabet)
        throw std::runtime_error(spec + ": mapping alphabet does not match the requested flags");
    return m;
}

std::vector<double> snr_grid(double start, double stop, double step) {
    if (step <= 0.0) throw std::runtime_error("--snr-step must be > 0");
    if (stop < start) throw std::runtime_error("--snr-stop must be >= --snr-start");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double s = start + i * step;
        if (s > stop + 1e-9) break;
        grid.push_back(s);
    }
    return grid;
}

// ---------------------------------------------------------------- commands

struct CommonOpts {
    int n_bits = 3;
    int n_frac = 0;
    double epsilon = 0.1;
    double delta = 1.0;
    std::string model = "sac";
    int workers = 0;
    int enum_limit = kDefaultEnumLimit;
    bool prune = false;
};

void add_alphabet_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n-bits", o.n_bits, "label width N")->check(CLI::Range(1, 16));
    cmd->add_option("--n-frac", o.n_frac, "fractional bits F")->check(CLI::Range(0, 15));
}

void add_channel_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--model", o.model, "fault model")
        ->check(CLI::IsMember({"bsc", "sac"}))
        ->capture_default_str();
    cmd->add_option("--epsilon", o.epsilon, "bit-cell error probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
}

int cmd_crossover(const CommonOpts& o, const std::string& out) {
    const CrossoverMatrix m = resolve_channel(o.model, o.n_bits, o.epsilon);
    write_crossover_csv(out, m,
                        "crossover model=" + o.model + " n_bits=" + std::to_string(o.n_bits) +
                            " epsilon=" + fmt(o.epsilon));
    std::cout << "crossover: wrote " << m.size() << "x" << m.size() << " matrix to " << out
              << "\n";
    return 0;
}

int cmd_pmf(const CommonOpts& o, double snr_db, const std::string& bit, std::uint64_t mc_trials,
            std::uint64_t seed, const std::string& out) {
    const SymbolAlphabet a = make_alphabet(o.n_bits, o.n_frac);
    const QuantizerParams qp(a, o.delta);
    const AwgnParams awgn = AwgnParams::from_snr_db(snr_db);
    SymbolDistribution dist;
    if (bit == "marginal") {
        dist = marginal_pmf(conditional_pmf(qp, awgn, 0), conditional_pmf(qp, awgn, 1));
    } else {
        const int b = bit == "1" ? 1 : 0;
        dist = mc_trials ? estimate_pdc_mc(qp, awgn, b, mc_trials, seed)
                         : conditional_pmf(qp, awgn, b);
    }
    write_pmf_csv(out, dist,
                  "pmf bit=" + bit + " n_bits=" + std::to_string(o.n_bits) +
                      " n_frac=" + std::to_string(o.n_frac) + " delta=" + fmt(o.delta) +
                      " snr_db=" + fmt(snr_db) +
                      (mc_trials ? " mc_trials=" + std::to_string(mc_trials) +
                                       " seed=" + std::to_string(seed)
                                 : " exact=1"));
    std::cout << "pmf: wrote " << dist.size() << " rows to " << out << "\n";
    return 0;
}

int cmd_ser(const CommonOpts& o, const std::string& dist_name, const std::string& out) {
    const SymbolAlphabet a = make_alphabet(o.n_bits, o.n_frac);
    const SymbolDistribution p_d = resolve_dist(dist_name, a);
    const CrossoverMatrix ch = resolve_channel(o.model, o.n_bits, o.epsilon);
    OptimizeOptions opts;
    opts.enum_limit = o.enum_limit;
    opts.keep_ranking = true;
    opts.workers = o.workers;
    opts.prune_bit_symmetry = o.prune;
    OptimizationResult res = optimize(CostSpec::mse(ch, p_d), a, opts);

    CsvWriter csv(out);
    csv.comment("ser model=" + o.model + " n_bits=" + std::to_string(o.n_bits) +
                " epsilon=" + fmt(o.epsilon) + " dist=" + dist_name);
    csv.header({"mapping_rank", "ser_db", "encode_table"});
    // rank 1 = highest SER = lowest MSE
    for (std::size_t i = 0; i < res.ranking.size(); ++i)
        csv.row_strings({std::to_string(i + 1), fmt(ser_db(p_d, res.ranking[i].cost)),
                         encode_table_string(res.ranking[i].encode)});
    std::cout << "ser: " << res.ranking.size() << " mappings, best " << fmt(ser_db(p_d, res.best_cost))
              << " dB, wrote " << out << "\n";
    return 0;
}

CostSpec build_cost_spec(const std::string& cost, const CommonOpts& o, const CrossoverMatrix& ch,
                         const SymbolAlphabet& a, const std::string& dist_name, double snr_db,
                         const std::string& hypothesis) {
    const QuantizerParams qp(a, o.delta);
    const AwgnParams awgn = AwgnParams::from_snr_db(snr_db);
    if (cost == "mse") return CostSpec::mse(ch, resolve_dist(dist_name, a));
    if (cost == "msbe") {
        // default input for MSBE is the quantized-LLR marginal at the SNR
        SymbolDistribution p_d =
            dist_name == "llr-marginal"
                ? marginal_pmf(conditional_pmf(qp, awgn, 0), conditional_pmf(qp, awgn, 1))
                : resolve_dist(dist_name, a);
        return CostSpec::msbe(ch, std::move(p_d),
                              hypothesis == "avg" ? BranchHypothesis::AverageAll
                                                  : BranchHypothesis::AllZero);
    }
    if (cost == "mi") return CostSpec::mutual_info(ch, qp, awgn);
    return CostSpec::rep_error(ch, qp, awgn);
}

int cmd_optimize(const CommonOpts& o, const std::string& cost, const std::string& dist_name,
                 double snr_db, const std::string& hypothesis, const std::string& method,
                 int restarts, std::uint64_t seed, const std::string& base,
                 const std::string& out, const std::string& ranking_out,
                 const std::string& recode_out) {
    const SymbolAlphabet a = make_alphabet(o.n_bits, o.n_frac);
    const CrossoverMatrix ch = resolve_channel(o.model, o.n_bits, o.epsilon);
    const CostSpec spec = build_cost_spec(cost, o, ch, a, dist_name, snr_db, hypothesis);

    OptimizationResult res;
    if (method == "hillclimb") {
        res = optimize_hill_climb(spec, a, restarts, seed);
        std::cout << "optimize: heuristic hill-climb result, no optimality guarantee\n";
    } else {
        OptimizeOptions opts;
        opts.enum_limit = o.enum_limit;
        opts.keep_ranking = !ranking_out.empty();
        opts.workers = o.workers;
        opts.prune_bit_symmetry = o.prune;
        res = optimize(spec, a, opts);
    }

    write_mapping_json(out, res.best);
    if (!ranking_out.empty()) {
        CsvWriter csv(ranking_out);
        csv.comment("ranking cost=" + cost + " model=" + o.model + " epsilon=" + fmt(o.epsilon) +
                    " snr_db=" + fmt(snr_db));
        csv.header({"rank", "cost", "encode_table"});
        for (std::size_t i = 0; i < res.ranking.size(); ++i)
            csv.row_strings({std::to_string(i + 1), fmt(res.ranking[i].cost),
                             encode_table_string(res.ranking[i].encode)});
    }
    // recode table against the base representation, next to the mapping by default
    std::string recode_path = recode_out;
    if (recode_path.empty()) {
        recode_path = out;
        const std::size_t dot = recode_path.rfind('.');
        if (dot != std::string::npos) recode_path.resize(dot);
        recode_path += "_recode_" + base + ".csv";
    }
    const Mapping base_map = resolve_fixed_mapping(base, a);
    write_recode_csv(recode_path, recode_tables(base_map, res.best),
                     "recode base=" + base + " target=" + out);
    std::cout << "optimize: cost=" << cost << " best_cost=" << fmt(res.best_cost) << " encode=["
              << encode_table_string(res.best.encode_table()) << "] evaluated=" << res.evaluated
              << " wrote " << out << "\n";
    return 0;
}

int cmd_rates(const CommonOpts& o, double start, double stop, double step,
              const std::string& out) {
    const SymbolAlphabet a = make_alphabet(o.n_bits, o.n_frac);
    const QuantizerParams qp(a, o.delta);
    const CrossoverMatrix ch = resolve_channel(o.model, o.n_bits, o.epsilon);
    const CrossoverMatrix reliable = resolve_channel(o.model, o.n_bits, 0.0);
    const Mapping m2c = mapping_twos_complement(a);
    const Mapping msm = mapping_sign_magnitude(a);
    OptimizeOptions opts;
    opts.enum_limit = o.enum_limit;
    opts.workers = o.workers;
    opts.prune_bit_symmetry = o.prune;

    CsvWriter csv(out);
    csv.comment("rates model=" + o.model + " n_bits=" + std::to_string(o.n_bits) +
                " n_frac=" + std::to_string(o.n_frac) + " delta=" + fmt(o.delta) +
                " epsilon=" + fmt(o.epsilon));
    csv.header({"snr_db", "mi_2c", "mi_sm", "mi_optimized", "mi_reliable"});
    for (double snr : snr_grid(start, stop, step)) {
        const AwgnParams awgn = AwgnParams::from_snr_db(snr);
        const SymbolDistribution p0 = conditional_pmf(qp, awgn, 0);
        const SymbolDistribution p1 = conditional_pmf(qp, awgn, 1);
        const double mi2c = mutual_information(compound_crossover(m2c, p0, p1, ch));
        const double mism = mutual_information(compound_crossover(msm, p0, p1, ch));
        const double mirel = mutual_information(compound_crossover(m2c, p0, p1, reliable));
        const OptimizationResult res = optimize(CostSpec::mutual_info(ch, qp, awgn), a, opts);
        csv.row_strings({fmt(snr), fmt(mi2c), fmt(mism), fmt(-res.best_cost), fmt(mirel)});
    }
    std::cout << "rates: wrote " << out << "\n";
    return 0;
}

int cmd_recode(const CommonOpts& o, const std::string& base, const std::string& target,
               const std::string& out) {
    const SymbolAlphabet a = make_alphabet(o.n_bits, o.n_frac);
    const Mapping bm = resolve_fixed_mapping(base, a);
    const Mapping tm = resolve_fixed_mapping(target, a);
    write_recode_csv(out, recode_tables(bm, tm), "recode base=" + base + " target=" + target);
    std::cout << "recode: wrote " << out << "\n";
    return 0;
}

struct BerOpts {
    std::string scheme = "rep";
    std::vector<std::string> mappings{"2c", "sm", "optimized"};
    std::string cost;  // for "optimized"; empty = scheme default
    double snr_start = 0.0, snr_stop = 8.0, snr_step = 1.0;
    std::uint64_t seed = 1;
    std::uint64_t max_bits = 10'000'000;
    std::uint64_t target_errors = 100;
    int frame_bits = 1000;
    bool analytic = false;
};

int cmd_ber(const CommonOpts& o, const BerOpts& b, const std::string& out) {
    const SymbolAlphabet a = make_alphabet(o.n_bits, o.n_frac);
    const QuantizerParams qp(a, o.delta);
    const CrossoverMatrix ch = resolve_channel(o.model, o.n_bits, o.epsilon);
    const std::string cost = b.cost.empty() ? (b.scheme == "rep" ? "rep" : "msbe") : b.cost;
    OptimizeOptions opts;
    opts.enum_limit = o.enum_limit;
    opts.workers = o.workers;

    CsvWriter csv(out);
    csv.comment("ber scheme=" + b.scheme + " model=" + o.model + " epsilon=" + fmt(o.epsilon) +
                " delta=" + fmt(o.delta) + " n_bits=" + std::to_string(o.n_bits) +
                " seed=" + std::to_string(b.seed) + " max_bits=" + std::to_string(b.max_bits) +
                " target_errors=" + std::to_string(b.target_errors) +
                (b.scheme == "conv" ? " frame_bits=" + std::to_string(b.frame_bits) : "") +
                (b.analytic ? " analytic=1" : ""));
    csv.header({"mapping", "snr_db", "ber", "errors", "bits", "ci95"});

    for (const std::string& mspec : b.mappings) {
        for (double snr : snr_grid(b.snr_start, b.snr_stop, b.snr_step)) {
            const AwgnParams awgn = AwgnParams::from_snr_db(snr);
            Mapping mapping;
            if (mspec == "optimized") {
                const CostSpec cs = build_cost_spec(cost, o, ch, a, "llr-marginal", snr, "all");
                mapping = optimize(cs, a, opts).best;
            } else {
                mapping = resolve_fixed_mapping(mspec, a);
            }
            if (b.analytic) {
                if (b.scheme != "rep")
                    throw std::runtime_error("--analytic is only available for --scheme rep");
                const double pe = rep_error_prob(mapping, conditional_pmf(qp, awgn, 0),
                                                 conditional_pmf(qp, awgn, 1), ch);
                csv.row_strings({mspec, fmt(snr), fmt(pe), "0", "0", "0"});
                continue;
            }
            LinkConfig cfg;
            cfg.scheme = b.scheme == "rep" ? CodingScheme::Repetition : CodingScheme::Convolutional;
            cfg.quantizer = qp;
            cfg.mapping = mapping;
            cfg.channel = ch;
            cfg.awgn = awgn;
            cfg.n_info_bits = b.frame_bits;
            cfg.seed = b.seed;
            cfg.target_errors = b.target_errors;
            cfg.max_bits = b.max_bits;
            cfg.workers = o.workers;
            const BerPoint p =
                cfg.scheme == CodingScheme::Repetition ? simulate_rep(cfg) : simulate_conv(cfg);
            csv.row_strings({mspec, fmt(snr), fmt(p.ber), std::to_string(p.errors),
                             std::to_string(p.bits), fmt(p.ci95)});
        }
    }
    std::cout << "ber: wrote " << out << "\n";
    return 0;
}

int cmd_figure(const std::string& preset, const std::string& out_dir, int workers) {
    std::filesystem::create_directories(out_dir);
    auto path = [&](const std::string& name) { return out_dir + "/" + name; };
    auto short_eps = [](double eps) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", eps);
        return std::string(buf);
    };
    CommonOpts o;
    o.workers = workers;
    if (preset == "fig2") {
        for (const std::string model : {"bsc", "sac"})
            for (double eps : {1e-1, 1e-2}) {
                o.model = model;
                o.epsilon = eps;
                cmd_crossover(o, path("crossover_" + model + "_eps" + short_eps(eps) + ".csv"));
            }
        return 0;
    }
    if (preset == "fig3") {
        o.epsilon = 1e-2;
        cmd_ser(o, "gaussian", path("ser_gaussian.csv"));
        cmd_ser(o, "bimodal", path("ser_bimodal.csv"));
        return 0;
    }
    if (preset == "fig5") {
        o.epsilon = 1e-1;
        o.delta = 1.0;
        return cmd_rates(o, -4.0, 8.0, 0.5, path("rates.csv"));
    }
    if (preset == "fig6") {
        o.delta = 0.2;
        for (double eps : {1e-2, 1e-3}) {
            o.epsilon = eps;
            BerOpts b;
            b.scheme = "rep";
            b.snr_start = 0.0;
            b.snr_stop = 12.0;
            b.snr_step = 1.0;
            cmd_ber(o, b, path("ber_rep_eps" + short_eps(eps) + ".csv"));
            b.analytic = true;
            b.snr_step = 0.25;
            cmd_ber(o, b, path("ber_rep_analytic_eps" + short_eps(eps) + ".csv"));
        }
        return 0;
    }
    if (preset == "fig7") {
        o.delta = 0.6;
        for (double eps : {1e-1, 1e-2}) {
            o.epsilon = eps;
            BerOpts b;
            b.scheme = "conv";
            b.snr_start = 1.0;
            b.snr_stop = 7.0;
            b.snr_step = 0.5;
            b.max_bits = 1'000'000;
            cmd_ber(o, b, path("ber_conv_eps" + short_eps(eps) + ".csv"));
        }
        return 0;
    }
    throw std::runtime_error("unknown preset " + preset);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"data-representation optimization for unreliable memories"};
    app.require_subcommand(1);

    CommonOpts o;
    app.add_option("--workers", o.workers, "worker threads (0 = machine default)");
    app.add_option("--enum-limit", o.enum_limit,
                   "raise the exhaustive-search limit (4 at most; default 3)")
        ->check(CLI::Range(1, 4));

    std::string out = "out.csv";

    auto* crossover = app.add_subcommand("crossover", "emit a label cross-over matrix as CSV");
    add_alphabet_flags(crossover, o);
    add_channel_flags(crossover, o);
    crossover->add_option("-o,--output", out, "output CSV path");

    auto* pmf = app.add_subcommand("pmf", "emit conditional/marginal quantized-LLR PMFs as CSV");
    double pmf_snr = 2.0;
    std::string pmf_bit = "marginal";
    std::uint64_t pmf_mc = 0, pmf_seed = 1;
    add_alphabet_flags(pmf, o);
    pmf->add_option("--delta", o.delta, "LLR scaling");
    pmf->add_option("--snr-db", pmf_snr, "channel SNR in dB");
    pmf->add_option("--bit", pmf_bit, "conditioning bit")->check(CLI::IsMember({"0", "1", "marginal"}));
    pmf->add_option("--mc", pmf_mc, "Monte-Carlo trials (0 = exact integration)");
    pmf->add_option("--seed", pmf_seed, "Monte-Carlo seed");
    pmf->add_option("-o,--output", out, "output CSV path");

    auto* ser = app.add_subcommand("ser", "per-mapping signal-to-MSE table over all mappings");
    std::string ser_dist = "bimodal";
    add_alphabet_flags(ser, o);
    add_channel_flags(ser, o);
    ser->add_option("--dist", ser_dist, "input distribution (uniform|gaussian|bimodal|CSV path)");
    ser->add_option("-o,--output", out, "output CSV path");

    auto* opt = app.add_subcommand("optimize", "exhaustively optimize a mapping for a cost");
    std::string opt_cost = "mse", opt_dist = "bimodal", opt_base = "2c", opt_hyp = "all";
    std::string opt_method = "exhaustive", opt_ranking, opt_recode;
    std::string opt_out = "mapping.json";
    double opt_snr = 2.0;
    int opt_restarts = 16;
    std::uint64_t opt_seed = 1;
    add_alphabet_flags(opt, o);
    add_channel_flags(opt, o);
    opt->add_option("--cost", opt_cost, "cost function")
        ->check(CLI::IsMember({"mse", "mi", "rep", "msbe"}));
    opt->add_option("--dist", opt_dist, "input distribution for mse/msbe");
    opt->add_option("--snr-db", opt_snr, "operating SNR for mi/rep (and msbe default input)");
    opt->add_option("--delta", o.delta, "LLR scaling");
    opt->add_option("--hypothesis", opt_hyp, "msbe branch hypothesis")
        ->check(CLI::IsMember({"all", "avg"}));
    opt->add_option("--method", opt_method, "search method")
        ->check(CLI::IsMember({"exhaustive", "hillclimb"}));
    opt->add_option("--restarts", opt_restarts, "hill-climb restarts");
    opt->add_option("--seed", opt_seed, "hill-climb seed");
    opt->add_flag("--prune", o.prune, "search one representative per bit-complement orbit");
    opt->add_option("--base", opt_base, "base representation for the recode table")
        ->check(CLI::IsMember({"2c", "sm"}));
    opt->add_option("-o,--output", opt_out, "best-mapping JSON path");
    opt->add_option("--dump-ranking", opt_ranking, "also write the full ranking CSV here");
    opt->add_option("--recode-out", opt_recode, "also write a recode-table CSV against --base");

    auto* rates = app.add_subcommand("rates", "achievable-rate sweep (2C, SM, optimized, reliable)");
    double r_start = -4.0, r_stop = 8.0, r_step = 0.5;
    add_alphabet_flags(rates, o);
    add_channel_flags(rates, o);
    rates->add_option("--delta", o.delta, "LLR scaling");
    rates->add_option("--snr-start", r_start, "sweep start, dB");
    rates->add_option("--snr-stop", r_stop, "sweep stop, dB");
    rates->add_option("--snr-step", r_step, "sweep step, dB");
    rates->add_flag("--prune", o.prune, "search one representative per bit-complement orbit");
    rates->add_option("-o,--output", out, "output CSV path");

    auto* recode = app.add_subcommand("recode", "emit a recoding table between two mappings");
    std::string rc_base = "2c", rc_target;
    add_alphabet_flags(recode, o);
    recode->add_option("--base", rc_base, "base mapping (2c|sm|JSON path)");
    recode->add_option("--target", rc_target, "target mapping (2c|sm|JSON path)")->required();
    recode->add_option("-o,--output", out, "output CSV path");

    auto* ber = app.add_subcommand("ber", "Monte-Carlo BER of the coded link");
    BerOpts b;
    add_alphabet_flags(ber, o);
    add_channel_flags(ber, o);
    ber->add_option("--scheme", b.scheme, "coding scheme")->check(CLI::IsMember({"rep", "conv"}));
    ber->add_option("--mapping", b.mappings,
                    "mappings to simulate (repeatable: 2c|sm|optimized|JSON path)");
    ber->add_option("--cost", b.cost, "cost for --mapping optimized (default rep/msbe by scheme)")
        ->check(CLI::IsMember({"mse", "mi", "rep", "msbe"}));
    ber->add_option("--delta", o.delta, "LLR scaling");
    ber->add_option("--snr-start", b.snr_start, "sweep start, dB");
    ber->add_option("--snr-stop", b.snr_stop, "sweep stop, dB");
    ber->add_option("--snr-step", b.snr_step, "sweep step, dB");
    ber->add_option("--seed", b.seed, "master seed");
    ber->add_option("--max-bits", b.max_bits, "bit budget per point");
    ber->add_option("--target-errors", b.target_errors, "early-stop error count");
    ber->add_option("--frame-bits", b.frame_bits, "info bits per convolutional frame");
    ber->add_flag("--analytic", b.analytic, "exact repetition error probability, no simulation");
    ber->add_option("-o,--output", out, "output CSV path");

    auto* figure = app.add_subcommand("figure", "one-command figure reproduction presets");
    std::string fig_preset, fig_dir = "figures";
    figure->add_option("--preset", fig_preset, "which experiment preset to run")
        ->check(CLI::IsMember({"fig2", "fig3", "fig5", "fig6", "fig7"}))
        ->required();
    figure->add_option("--out-dir", fig_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (crossover->parsed()) return cmd_crossover(o, out);
        if (pmf->parsed()) return cmd_pmf(o, pmf_snr, pmf_bit, pmf_mc, pmf_seed, out);
        if (ser->parsed()) return cmd_ser(o, ser_dist, out);
        if (opt->parsed())
            return cmd_optimize(o, opt_cost, opt_dist, opt_snr, opt_hyp, opt_method, opt_restarts,
                                opt_seed, opt_base, opt_out, opt_ranking, opt_recode);
        if (rates->parsed()) return cmd_rates(o, r_start, r_stop, r_step, out);
        if (recode->parsed()) return cmd_recode(o, rc_base, rc_target, out);
        if (ber->parsed()) return cmd_ber(o, b, out);
        if (figure->parsed()) return cmd_figure(fig_preset, fig_dir, o.workers);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
