#include "wavemem/wavelet_family.hpp"

#include <cmath>
#include <stdexcept>

namespace wavemem {

namespace {

double ipow(double x, int n) {
    double r = 1.0;
    for (double b = x; n > 0; n >>= 1, b *= b)
        if (n & 1) r *= b;
    return r;
}

// sin(y)/y with the removable singularity filled in.
double sinc(double y) {
    if (std::abs(y) < 1e-4) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
    }
    return std::sin(y) / y;
}

}  // namespace

WaveletSpec make_family(int order) {
    if (order < 1) throw std::invalid_argument("make_family: order must be >= 1");
    const int n = order;
    WaveletSpec spec;
    spec.order = n;
    spec.vanishing_moments = n;
    spec.decay_exponent = n;
    spec.support_length = 2 * n;

    spec.phi = shift(cardinal_bspline(n), -n);

    // d^N/dx^N B_{2N} = sum_k (-1)^k binom(N,k) B_N(. - k)
    const Piecewise bn = cardinal_bspline(n);
    Piecewise psi;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        add_scaled(psi, (k % 2 == 0) ? binom : -binom, shift(bn, k));
        binom = binom * (n - k) / (k + 1);
    }
    const double norm2 = integrate_product(psi, psi);
    spec.normalization = 1.0 / std::sqrt(norm2);
    scale(psi, spec.normalization);
    spec.psi = std::move(psi);
    return spec;
}

double eval_phi(const WaveletSpec& spec, double x) { return spec.phi(x); }

double eval_psi(const WaveletSpec& spec, double x) { return spec.psi(x); }

double phi_hat_abs(const WaveletSpec& spec, double xi) {
    return ipow(std::abs(sinc(0.5 * xi)), spec.order);
}

double psi_hat_abs(const WaveletSpec& spec, double xi) {
    return spec.normalization * ipow(std::abs(xi), spec.order) *
           ipow(sinc(0.5 * xi), 2 * spec.order);
}

std::complex<double> psi_hat(const WaveletSpec& spec, double xi) {
    const int n = spec.order;
    const double mag = spec.normalization * ipow(xi, n) * ipow(sinc(0.5 * xi), 2 * n);
    // (i)^N e^{-iN xi}
    const std::complex<double> phase = std::polar(1.0, 0.5 * M_PI * n - n * xi);
    return mag * phase;
}

}  // namespace wavemem
