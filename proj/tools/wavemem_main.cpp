// Command line front end: simulate M(d) samples, estimate the memory
// parameter from a sample, evaluate the closed-form limit variances, and run
// Monte Carlo experiments from a JSON config.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "wavemem/asymptotics.hpp"
#include "wavemem/dwt.hpp"
#include "wavemem/estimators.hpp"
#include "wavemem/mc.hpp"
#include "wavemem/simulate.hpp"
#include "wavemem/spectral.hpp"

namespace {

using nlohmann::json;

int cmd_simulate(const std::string& out_path, const std::string& sidecar, double d,
                 std::size_t n, const std::string& law, std::size_t truncation,
                 long long burn_in, std::uint64_t seed) {
    wavemem::SimulationPlan plan;
    plan.farima.d = d;
    plan.farima.law = wavemem::innovation_law_from_string(law);
    plan.farima.ma_truncation = truncation;
    plan.farima.seed = seed;
    plan.n = n;
    plan.burn_in = burn_in >= 0 ? static_cast<std::size_t>(burn_in) : truncation;
    plan.K = wavemem::integration_order(d);
    plan.seed = seed;
    const wavemem::Sample sample = wavemem::simulate_md(plan);
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open " + out_path);
    wavemem::write_sample_csv(sample, os);
    if (!sidecar.empty()) {
        json j;
        j["model"] = {{"model", "farima00"},
                      {"d", d},
                      {"innovations", law},
                      {"ma_truncation", truncation},
                      {"seed", seed}};
        j["n"] = n;
        j["burn_in"] = plan.burn_in;
        j["K"] = plan.K;
        std::ofstream ss(sidecar);
        if (!ss) throw std::runtime_error("cannot open " + sidecar);
        ss << j.dump(2) << '\n';
    }
    return 0;
}

std::vector<double> weights_from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open weights file " + path);
    std::vector<double> w;
    double v;
    while (is >> v) w.push_back(v);
    if (w.size() < 2) throw std::runtime_error("weights file needs at least two values");
    return w;
}

int cmd_estimate(const std::string& input, int order, const std::string& estimator, int L,
                 int ell, int U, const std::string& weights, double beta,
                 const std::string& scalogram_out, const std::string& output) {
    std::ifstream is(input);
    if (!is) throw std::runtime_error("cannot open " + input);
    const wavemem::Sample sample = wavemem::read_sample(is);
    const wavemem::WaveletSpec spec = wavemem::make_family(order);
    const int j_top = wavemem::max_scale(sample.size(), spec.support_length);
    const wavemem::FilterBank bank = wavemem::build_filters(spec, j_top);
    const wavemem::Scalogram scal = wavemem::scalogram(wavemem::transform(bank, sample));
    if (!scalogram_out.empty()) {
        std::ofstream ss(scalogram_out);
        if (!ss) throw std::runtime_error("cannot open " + scalogram_out);
        wavemem::write_scalogram_csv(scal, ss);
    }
    if (L < 0) L = wavemem::default_lower_scale(sample.size(), beta, j_top);

    json j;
    double d_hat = 0.0, avar = 0.0;
    if (estimator == "logreg") {
        wavemem::RegressionConfig cfg;
        cfg.L = L;
        cfg.ell = ell;
        cfg.weights = (weights == "ols") ? wavemem::regression_weights(ell)
                                         : weights_from_file(weights);
        cfg.weight_mode =
            (weights == "ols") ? wavemem::WeightMode::ols : wavemem::WeightMode::custom;
        d_hat = wavemem::estimate_logreg(scal, cfg);
        if (wavemem::admissible_d(spec, d_hat))
            avar = wavemem::regression_variance(spec, d_hat, cfg.weights);
        j["ell"] = ell;
    } else {
        wavemem::WhittleConfig cfg;
        cfg.L = L;
        cfg.U = U >= 0 ? U : L + ell;
        d_hat = wavemem::estimate_whittle(scal, cfg);
        if (wavemem::admissible_d(spec, d_hat))
            avar = wavemem::whittle_variance(spec, d_hat, cfg.U - cfg.L);
        j["U"] = cfg.U;
    }
    j["estimator"] = estimator;
    j["d_hat"] = d_hat;
    j["L"] = L;
    j["n"] = sample.size();
    j["J"] = j_top;
    j["order"] = order;
    const double rate = static_cast<double>(sample.size()) * std::exp2(-L);
    j["asymptotic_sd"] = avar > 0.0 ? std::sqrt(avar / rate) : 0.0;
    if (output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream os(output);
        if (!os) throw std::runtime_error("cannot open " + output);
        os << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_variance(double d, int order, int ell, const std::string& estimator,
                 const std::string& weights, double fstar0, const std::string& output) {
    const wavemem::WaveletSpec spec = wavemem::make_family(order);
    if (!wavemem::admissible_d(spec, d))
        throw std::runtime_error("variance: d outside the admissible range (1/2 - N, N]");
    json j;
    j["d"] = d;
    j["order"] = order;
    j["ell"] = ell;
    j["fstar0"] = fstar0;
    const wavemem::ValueWithError kp = wavemem::k_psi_estimate(spec, d);
    j["k_psi"] = kp.value;
    j["diagnostics"]["k_psi_error"] = kp.error;
    std::vector<double> iu;
    double iu_err = 0.0;
    for (int u = 0; u <= ell; ++u) {
        const wavemem::ValueWithError e = wavemem::i_u_estimate(spec, u, d);
        iu.push_back(e.value);
        iu_err = std::max(iu_err, e.error);
    }
    j["i_u"] = iu;
    j["diagnostics"]["i_u_error"] = iu_err;
    j["cov"] = wavemem::cov_matrix(spec, d, fstar0, ell);
    j["V"] = wavemem::regression_cov(spec, d, ell);
    if (estimator == "logreg") {
        const std::vector<double> w =
            (weights == "ols") ? wavemem::regression_weights(ell) : weights_from_file(weights);
        j["weights"] = w;
        j["wVw"] = wavemem::regression_variance(spec, d, w);
    } else {
        j["eta_ell"] = wavemem::whittle_eta(ell);
        j["kappa_ell"] = wavemem::whittle_kappa(ell);
        j["whittle_var_ell"] = wavemem::whittle_variance(spec, d, ell);
        j["whittle_var_inf"] = wavemem::whittle_variance_inf(spec, d);
    }
    if (output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream os(output);
        if (!os) throw std::runtime_error("cannot open " + output);
        os << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_mc(const std::string& config_path) {
    std::ifstream is(config_path);
    if (!is) throw std::runtime_error("cannot open " + config_path);
    json j;
    is >> j;
    const wavemem::McConfig config = wavemem::mc_config_from_json(j);
    const wavemem::McSummary summary = wavemem::run_mc(config);
    wavemem::write_mc_outputs(config, summary);
    if (config.summary_json.empty())
        std::cout << wavemem::mc_summary_to_json(config, summary).dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavelet estimation of the memory parameter of M(d) processes"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Generate a FARIMA(0,d,0) M(d) sample");
    double sim_d = 0.0;
    std::size_t sim_n = 0, sim_trunc = 1u << 16;
    long long sim_burn = -1;
    std::uint64_t sim_seed = 0;
    std::string sim_law = "gaussian", sim_out, sim_sidecar;
    sim->add_option("--d", sim_d, "memory parameter")->required();
    sim->add_option("--n", sim_n, "sample length")->required();
    sim->add_option("--law", sim_law,
                    "innovation law: gaussian|uniform|centered_exponential|rademacher");
    sim->add_option("--truncation", sim_trunc, "MA truncation length");
    sim->add_option("--burn-in", sim_burn, "burn-in length (default: truncation)");
    sim->add_option("--seed", sim_seed, "RNG seed");
    sim->add_option("--output", sim_out, "output sample CSV")->required();
    sim->add_option("--sidecar", sim_sidecar, "JSON sidecar echoing the plan");

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate d from a sample");
    std::string est_input, est_kind = "logreg", est_weights = "ols", est_scal, est_out;
    int est_order = 2, est_L = -1, est_ell = 3, est_U = -1;
    double est_beta = 2.0;
    est->add_option("--input", est_input, "sample CSV or one value per line")->required();
    est->add_option("--order", est_order, "wavelet order N");
    est->add_option("--estimator", est_kind, "logreg|whittle");
    est->add_option("--L", est_L, "lower scale (default: rate-based heuristic)");
    est->add_option("--ell", est_ell, "number of extra scales (logreg)");
    est->add_option("--U", est_U, "upper scale (whittle; default L+ell)");
    est->add_option("--weights", est_weights, "ols or a file with ell+1 weights");
    est->add_option("--beta", est_beta, "regularity exponent for the default L");
    est->add_option("--dump-scalogram", est_scal, "write the scalogram CSV here");
    est->add_option("--output", est_out, "output JSON (default: stdout)");

    // variance
    auto* var = app.add_subcommand("variance", "Evaluate the asymptotic variances");
    double var_d = 0.0, var_fstar0 = 1.0 / (2.0 * M_PI);
    int var_order = 2, var_ell = 3;
    std::string var_kind = "logreg", var_weights = "ols", var_out;
    var->add_option("--d", var_d, "memory parameter")->required();
    var->add_option("--order", var_order, "wavelet order N");
    var->add_option("--ell", var_ell, "number of extra scales");
    var->add_option("--estimator", var_kind, "logreg|whittle");
    var->add_option("--weights", var_weights, "ols or a weights file (logreg)");
    var->add_option("--fstar0", var_fstar0, "short-range density at 0");
    var->add_option("--output", var_out, "output JSON (default: stdout)");

    // mc
    auto* mc = app.add_subcommand("mc", "Run a Monte Carlo experiment from a JSON config");
    std::string mc_config;
    mc->add_option("--config", mc_config, "config JSON path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return cmd_simulate(sim_out, sim_sidecar, sim_d, sim_n, sim_law, sim_trunc, sim_burn,
                                sim_seed);
        if (est->parsed())
            return cmd_estimate(est_input, est_order, est_kind, est_L, est_ell, est_U, est_weights,
                                est_beta, est_scal, est_out);
        if (var->parsed())
            return cmd_variance(var_d, var_order, var_ell, var_kind, var_weights, var_fstar0,
                                var_out);
        if (mc->parsed()) return cmd_mc(mc_config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
