#pragma once

#include <complex>
#include <vector>

#include "wavemem/wavelet_family.hpp"

namespace wavemem {

struct ValueWithError {
    double value = 0.0;
    double error = 0.0;  // |last refinement delta|
};

/// Admissible memory parameters: 1/2 - alpha < d <= M.
bool admissible_d(const WaveletSpec& spec, double d);

/// K_psi(d) = int |xi|^{-2d} |psi_hat(xi)|^2 dxi. Graded quadrature near 0,
/// oscillation-resolving panels up to an adaptive cutoff, analytic tail
/// beyond it (power-law main term plus first-order oscillatory corrections,
/// grown until the remainder bound drops below 1e-10 of the value).
double k_psi(const WaveletSpec& spec, double d);
ValueWithError k_psi_estimate(const WaveletSpec& spec, double d);

/// The 2^u-dimensional cross-spectral density vector
///   D_u(lambda; d) = sum_l |lambda_l|^{-2d} e_u(lambda_l)
///                    conj(psi_hat(lambda_l)) psi_hat(2^{-u} lambda_l),
/// lambda_l = lambda + 2 pi l, using the full complex psi_hat. Terms with
/// |l| <= window 2^u are summed directly; the rest is completed in closed
/// form through Hurwitz-zeta lattice tails, exact for this family because
/// psi_hat factors into a per-residue phase times |lambda_l|^{-s}.
std::vector<std::complex<double>> d_vector(const WaveletSpec& spec, int u, double lambda,
                                           double d, int window = 8);

/// I_u(d) = int_{-pi}^{pi} ||D_u(lambda; d)||^2 dlambda.
double i_u(const WaveletSpec& spec, int u, double d);
ValueWithError i_u_estimate(const WaveletSpec& spec, int u, double d);

/// Scalogram limit covariance D_{u,u'} = 4 pi fstar0^2 2^{4d(u v u') + u ^ u'}
/// I_{|u-u'|}(d), for 0 <= u,u' <= ell.
std::vector<std::vector<double>> cov_matrix(const WaveletSpec& spec, double d, double fstar0,
                                            int ell);

/// Regression limit matrix V_{i,j} = 4 pi 2^{2d|j-i|} 2^{i^j} I_{|j-i|}(d)
/// / K_psi(d)^2.
std::vector<std::vector<double>> regression_cov(const WaveletSpec& spec, double d, int ell);

/// w^T V w for a weight vector satisfying sum w = 0, 2 log(2) sum i w_i = 1
/// (checked to 1e-10).
double regression_variance(const WaveletSpec& spec, double d, const std::vector<double>& w);

double whittle_eta(int ell);
double whittle_kappa(int ell);

/// Limit variance of the local Whittle wavelet estimator over ell + 1 scales.
double whittle_variance(const WaveletSpec& spec, double d, int ell);

/// ell -> infinity variant; the series over u stops once the increment falls
/// below 1e-12 of the partial sum (hard cap u <= 200).
double whittle_variance_inf(const WaveletSpec& spec, double d);

namespace detail {

/// Hurwitz zeta sum_{k>=0} (a+k)^{-s} for s > 1, a > 0 (Euler-Maclaurin).
double hurwitz_zeta(double s, double a);

/// sum_{m in Z} |x+m|^{-s} for s > 1 and non-integer x.
double lattice_sum(double s, double x, int window = 8);

/// Residue sums A_r = sum_{l = r mod 2^u} of the D_u terms; the vector
/// satisfies ||D_u(lambda)||^2 = sum_r |A_r|^2.
std::vector<std::complex<double>> fold_sums(const WaveletSpec& spec, int u, double lambda,
                                            double d, int window);

double d_norm2(const WaveletSpec& spec, int u, double lambda, double d, int window = 8);

}  // namespace detail

}  // namespace wavemem
