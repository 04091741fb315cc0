#include "wavemem/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wavemem {

namespace {

void check_regression_config(const Scalogram& scalogram, const RegressionConfig& config) {
    if (config.ell < 1) throw std::invalid_argument("logreg: ell must be >= 1");
    if (config.L < 0) throw std::invalid_argument("logreg: L must be >= 0");
    if (config.weights.size() != static_cast<std::size_t>(config.ell) + 1)
        throw std::invalid_argument("logreg: weight count must be ell + 1");
    if (config.L + config.ell > scalogram.max_scale())
        throw std::invalid_argument("logreg: L + ell exceeds the maximal scale of the sample");
    double sum = 0.0, slope = 0.0;
    for (std::size_t i = 0; i < config.weights.size(); ++i) {
        sum += config.weights[i];
        slope += static_cast<double>(i) * config.weights[i];
    }
    if (std::abs(sum) > 1e-10 || std::abs(2.0 * std::log(2.0) * slope - 1.0) > 1e-10)
        throw std::invalid_argument("logreg: weights violate the sum/slope constraints");
}

}  // namespace

std::vector<double> regression_weights(int ell) {
    if (ell < 1) throw std::invalid_argument("regression_weights: ell must be >= 1");
    std::vector<std::vector<double>> identity(static_cast<std::size_t>(ell) + 1,
                                              std::vector<double>(static_cast<std::size_t>(ell) + 1, 0.0));
    for (int i = 0; i <= ell; ++i) identity[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    return regression_weights(ell, identity);
}

std::vector<double> regression_weights(int ell, const std::vector<std::vector<double>>& d_matrix) {
    if (ell < 1) throw std::invalid_argument("regression_weights: ell must be >= 1");
    const std::size_t rows = static_cast<std::size_t>(ell) + 1;
    if (d_matrix.size() != rows)
        throw std::invalid_argument("regression_weights: D has the wrong size");
    // DB, with B rows [1, i]
    std::vector<double> db0(rows, 0.0), db1(rows, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        if (d_matrix[r].size() != rows)
            throw std::invalid_argument("regression_weights: D has the wrong size");
        for (std::size_t c = 0; c < rows; ++c) {
            db0[r] += d_matrix[r][c];
            db1[r] += d_matrix[r][c] * static_cast<double>(c);
        }
    }
    // B^T D B (2x2)
    double m00 = 0.0, m01 = 0.0, m11 = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        m00 += db0[r];
        m01 += db1[r];
        m11 += static_cast<double>(r) * db1[r];
    }
    const double det = m00 * m11 - m01 * m01;
    if (!(std::abs(det) > 1e-14 * (std::abs(m00 * m11) + std::abs(m01 * m01))))
        throw std::invalid_argument("regression_weights: singular normal equations");
    // (B^T D B)^{-1} b with b = [0, 1/(2 log 2)]
    const double b1 = 1.0 / (2.0 * std::log(2.0));
    const double y0 = -m01 * b1 / det;
    const double y1 = m00 * b1 / det;
    std::vector<double> w(rows);
    for (std::size_t r = 0; r < rows; ++r) w[r] = db0[r] * y0 + db1[r] * y1;
    return w;
}

RegressionConfig make_regression_config(int L, int ell) {
    RegressionConfig c;
    c.L = L;
    c.ell = ell;
    c.weights = regression_weights(ell);
    c.weight_mode = WeightMode::ols;
    return c;
}

double estimate_logreg(const Scalogram& scalogram, const RegressionConfig& config) {
    check_regression_config(scalogram, config);
    double d_hat = 0.0;
    for (int j = config.L; j <= config.L + config.ell; ++j) {
        const double s2 = scalogram.at(j);
        if (!(s2 > 0.0))
            throw std::runtime_error("logreg: non-positive scalogram at scale " + std::to_string(j));
        d_hat += config.weights[static_cast<std::size_t>(j - config.L)] * std::log(s2);
    }
    return d_hat;
}

namespace {

void check_whittle_scales(const Scalogram& scalogram, int L, int U) {
    if (!(L < U)) throw std::invalid_argument("whittle: need L < U");
    if (L < 0) throw std::invalid_argument("whittle: L must be >= 0");
    if (U > scalogram.max_scale())
        throw std::invalid_argument("whittle: U exceeds the maximal scale of the sample");
    for (int j = L; j <= U; ++j) {
        if (scalogram.counts[static_cast<std::size_t>(j)] < 1)
            throw std::invalid_argument("whittle: no coefficients at scale " + std::to_string(j));
        if (!(scalogram.at(j) > 0.0))
            throw std::runtime_error("whittle: non-positive scalogram at scale " + std::to_string(j));
    }
}

double mean_scale(const Scalogram& scalogram, int L, int U) {
    double num = 0.0, den = 0.0;
    for (int j = L; j <= U; ++j) {
        const double nj = static_cast<double>(scalogram.counts[static_cast<std::size_t>(j)]);
        num += j * nj;
        den += nj;
    }
    return num / den;
}

// d/dd' of the contrast: 2 log 2 (J - <j>_{d'}) with the tilted mean <j>.
double contrast_derivative(const Scalogram& scalogram, int L, int U, double jbar, double d_prime) {
    double num = 0.0, den = 0.0;
    for (int j = L; j <= U; ++j) {
        const double t = static_cast<double>(scalogram.counts[static_cast<std::size_t>(j)]) *
                         scalogram.at(j) * std::exp2(-2.0 * d_prime * j);
        num += j * t;
        den += t;
    }
    return 2.0 * std::log(2.0) * (jbar - num / den);
}

}  // namespace

double whittle_contrast(const Scalogram& scalogram, int L, int U, double d_prime) {
    check_whittle_scales(scalogram, L, U);
    double acc = 0.0;
    for (int j = L; j <= U; ++j)
        acc += static_cast<double>(scalogram.counts[static_cast<std::size_t>(j)]) *
               scalogram.at(j) * std::exp2(-2.0 * d_prime * j);
    return std::log(acc) + 2.0 * d_prime * std::log(2.0) * mean_scale(scalogram, L, U);
}

double estimate_whittle(const Scalogram& scalogram, const WhittleConfig& config) {
    check_whittle_scales(scalogram, config.L, config.U);
    if (!(config.d_min < config.d_max))
        throw std::invalid_argument("whittle: empty search interval");
    const double jbar = mean_scale(scalogram, config.L, config.U);
    double lo = config.d_min, hi = config.d_max;
    double glo = contrast_derivative(scalogram, config.L, config.U, jbar, lo);
    double ghi = contrast_derivative(scalogram, config.L, config.U, jbar, hi);
    // the derivative is nondecreasing in d'; a sign change brackets the min
    if (glo >= 0.0 || ghi <= 0.0) {
        if (std::abs(glo) <= 1e-10) return lo;
        if (std::abs(ghi) <= 1e-10) return hi;
        throw std::runtime_error("whittle: minimizer at the search boundary; widen the interval");
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double g = contrast_derivative(scalogram, config.L, config.U, jbar, mid);
        if (std::abs(g) <= 1e-10) return mid;
        if (g < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

int default_lower_scale(long long n, double beta, int max_scale) {
    if (n < 2) throw std::invalid_argument("default_lower_scale: n must be >= 2");
    if (!(beta > 0.0 && beta <= 2.0))
        throw std::invalid_argument("default_lower_scale: beta must lie in (0,2]");
    const int raw = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)) / (1.0 + 2.0 * beta))) + 1;
    return std::clamp(raw, 1, std::max(1, max_scale - 1));
}

}  // namespace wavemem
