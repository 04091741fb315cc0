#pragma once

#include <complex>

#include "wavemem/piecewise.hpp"

namespace wavemem {

/// B-spline derivative wavelet pair of order N:
///   phi(x) = B_N(x + N)                    supported on [-N, 0],
///   psi(x) = C_N d^N/dx^N B_{2N}(x)        supported on [0, 2N],
/// with C_N normalizing psi to unit L2 norm. psi has N vanishing moments and
/// |psi_hat| decays like |xi|^-N, phi sums shifted to polynomials up to
/// degree N-1. Neither function is orthonormal; none of the estimators here
/// need that.
struct WaveletSpec {
    int order = 0;               // N
    int vanishing_moments = 0;   // M = N
    double decay_exponent = 0;   // alpha = N
    int support_length = 0;      // T = 2N, covers both supports
    double normalization = 0;    // C_N
    Piecewise phi;               // pieces on [-N, 0]
    Piecewise psi;               // pieces on [0, 2N]
};

WaveletSpec make_family(int order);

double eval_phi(const WaveletSpec& spec, double x);
double eval_psi(const WaveletSpec& spec, double x);

/// |phi_hat(xi)| = |2 sin(xi/2) / xi|^N, with value 1 at xi = 0.
double phi_hat_abs(const WaveletSpec& spec, double xi);

/// |psi_hat(xi)| = C_N |xi|^N |2 sin(xi/2) / xi|^(2N), with value 0 at xi = 0.
double psi_hat_abs(const WaveletSpec& spec, double xi);

/// Full complex transform of the shipped psi (support [0, 2N]):
///   psi_hat(xi) = C_N (i xi)^N e^{-i N xi} (2 sin(xi/2) / xi)^(2N).
/// The e^{-iN xi} phase matters wherever psi_hat appears at two different
/// arguments at once.
std::complex<double> psi_hat(const WaveletSpec& spec, double xi);

}  // namespace wavemem
