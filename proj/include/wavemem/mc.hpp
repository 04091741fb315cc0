#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavemem/asymptotics.hpp"
#include "wavemem/estimators.hpp"
#include "wavemem/simulate.hpp"

namespace wavemem {

enum class EstimatorKind { logreg, whittle };

EstimatorKind estimator_kind_from_string(const std::string& name);
std::string to_string(EstimatorKind kind);

/// Monte Carlo experiment: R independent replicates of simulate -> transform
/// -> estimate, replicate r seeded with mix_seed(seed, r). Outputs are fully
/// determined by the config, whatever the thread count.
struct McConfig {
    SimulationPlan plan;  // template; per-replicate seeds are derived
    int order = 2;
    int replicates = 0;
    EstimatorKind kind = EstimatorKind::logreg;
    int L = -1;  // -1: default_lower_scale(n, beta, J)
    int ell = 3;
    int U = -1;  // whittle upper scale; -1: L + ell
    std::vector<double> weights;  // empty: OLS
    double beta = 2.0;
    std::uint64_t seed = 0;
    std::string replicates_csv;
    std::string summary_json;
};

struct McSummary {
    int replicates = 0;
    long long n = 0;
    int L = 0;
    int upper = 0;  // L + ell or U
    EstimatorKind kind = EstimatorKind::logreg;
    double d_true = 0.0;
    double mean_d_hat = 0.0;
    double sd_d_hat = 0.0;
    double scaled_var = 0.0;      // (n 2^-L) Var(d_hat)
    double asymptotic_var = 0.0;  // w^T V w or V(d, ell) at the true d
    double ks_distance = 0.0;     // of standardized estimates vs N(0,1)
    std::vector<double> estimates;
};

McSummary run_mc(const McConfig& config);

McConfig mc_config_from_json(const nlohmann::json& j);
nlohmann::json mc_summary_to_json(const McConfig& config, const McSummary& summary);
void write_mc_outputs(const McConfig& config, const McSummary& summary);

/// Kolmogorov-Smirnov distance of the values against the standard normal.
double ks_normal_distance(std::vector<double> values);

double normal_cdf(double z);

}  // namespace wavemem
