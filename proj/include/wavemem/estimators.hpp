#pragma once

#include <vector>

#include "wavemem/dwt.hpp"

namespace wavemem {

enum class WeightMode { ols, custom };

/// Log-regression estimator setup over scales j = L..L+ell. The weights must
/// sum to 0 and satisfy 2 log(2) sum i w_i = 1, so that an exact power law
/// sigma_j^2 = c 2^{2dj} is mapped to d.
struct RegressionConfig {
    int L = 0;
    int ell = 1;
    std::vector<double> weights;
    WeightMode weight_mode = WeightMode::ols;
};

/// Local Whittle estimator setup over scales L..U with a bracketing search
/// interval for the contrast minimizer.
struct WhittleConfig {
    int L = 0;
    int U = 1;
    double d_min = -10.0;
    double d_max = 10.0;
};

/// w = D B (B^T D B)^{-1} b with design rows [1, i], i = 0..ell, and
/// b = [0, (2 log 2)^{-1}]; D = identity gives the OLS weights.
std::vector<double> regression_weights(int ell);
std::vector<double> regression_weights(int ell, const std::vector<std::vector<double>>& d_matrix);

RegressionConfig make_regression_config(int L, int ell);

/// d_hat = sum_j w_{j-L} log(sigma2_hat_j).
double estimate_logreg(const Scalogram& scalogram, const RegressionConfig& config);

/// log(sum_j 2^{-2 d' j} n_j sigma2_hat_j) + 2 d' log(2) J with the
/// count-weighted mean scale J = sum j n_j / sum n_j.
double whittle_contrast(const Scalogram& scalogram, int L, int U, double d_prime);

/// Unique minimizer of the (convex) contrast, found by bisection on its
/// derivative; throws if the minimizer pins to an interval endpoint.
double estimate_whittle(const Scalogram& scalogram, const WhittleConfig& config);

/// Heuristic lower scale L = ceil(log2(n)/(1+2 beta)) + 1 clamped to
/// [1, J-1]; satisfies the rate conditions of both central limit theorems
/// along n.
int default_lower_scale(long long n, double beta, int max_scale);

}  // namespace wavemem
