#include "wavemem/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "wavemem/piecewise.hpp"

namespace wavemem {

namespace {

double ipow(double x, int n) {
    double r = 1.0;
    for (double b = x; n > 0; n >>= 1, b *= b)
        if (n & 1) r *= b;
    return r;
}

// sin^{2m}(theta) = rho + sum_{k=1}^m gamma_k cos(2 k theta)
struct CosExpansion {
    double rho = 0.0;
    std::vector<double> gamma;  // gamma[k-1] multiplies cos(2 k theta)
};

CosExpansion sin_power_expansion(int m) {
    CosExpansion e;
    std::vector<double> binom(static_cast<std::size_t>(2 * m) + 1);
    binom[0] = 1.0;
    for (int i = 1; i <= 2 * m; ++i)
        binom[static_cast<std::size_t>(i)] =
            binom[static_cast<std::size_t>(i - 1)] * (2 * m - i + 1) / i;
    const double inv4m = ipow(0.25, m);
    e.rho = binom[static_cast<std::size_t>(m)] * inv4m;
    e.gamma.resize(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k)
        e.gamma[static_cast<std::size_t>(k - 1)] =
            2.0 * inv4m * ((k % 2 == 0) ? 1.0 : -1.0) * binom[static_cast<std::size_t>(m - k)];
    return e;
}

// ----- oscillatory quadrature helpers ------------------------------------

// int_a^b f(mu) cos(omega mu) dmu with GL panels resolving the phase.
template <class F>
double gl_cos(const F& f, double a, double b, double omega, int mult) {
    const int panels =
        std::max(1, static_cast<int>(std::ceil(std::abs(omega) * (b - a) / 3.0))) * mult;
    const double w = (b - a) / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p)
        acc += gauss_integrate([&](double mu) { return f(mu) * std::cos(omega * mu); },
                               a + p * w, a + (p + 1) * w, 16);
    return acc;
}

// Chebyshev fit of f on [a,b], returned as monomial coefficients in the
// normalized variable t in [-1,1].
template <class F>
std::vector<double> cheb_fit(const F& f, double a, double b, int deg) {
    const int n = deg + 1;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> fv(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        fv[static_cast<std::size_t>(q)] = f(mid + half * std::cos(M_PI * (q + 0.5) / n));
    std::vector<double> cheb(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int q = 0; q < n; ++q)
            s += fv[static_cast<std::size_t>(q)] * std::cos(M_PI * j * (q + 0.5) / n);
        cheb[static_cast<std::size_t>(j)] = (j == 0 ? 1.0 : 2.0) * s / n;
    }
    // convert sum c_j T_j to monomials
    std::vector<double> mono(static_cast<std::size_t>(n), 0.0);
    std::vector<double> tprev{1.0}, tcur{0.0, 1.0};
    mono[0] += cheb[0];
    if (n > 1)
        for (std::size_t m = 0; m < tcur.size(); ++m) mono[m] += cheb[1] * tcur[m];
    for (int j = 2; j < n; ++j) {
        std::vector<double> tnext(static_cast<std::size_t>(j) + 1, 0.0);
        for (std::size_t m = 0; m < tcur.size(); ++m) tnext[m + 1] += 2.0 * tcur[m];
        for (std::size_t m = 0; m < tprev.size(); ++m) tnext[m] -= tprev[m];
        for (std::size_t m = 0; m < tnext.size(); ++m)
            mono[m] += cheb[static_cast<std::size_t>(j)] * tnext[m];
        tprev = std::move(tcur);
        tcur = std::move(tnext);
    }
    return mono;
}

// int_a^b f(mu) cos(omega mu) dmu by Filon: polynomial fit of f against
// analytic moments int_{-1}^{1} t^p e^{i Omega t} dt. Stable for
// Omega >= 2 deg.
template <class F>
double filon_cos(const F& f, double a, double b, double omega, int deg) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double Omega = omega * half;
    const std::vector<double> c = cheb_fit(f, a, b, deg);
    std::vector<std::complex<double>> moments(c.size());
    const std::complex<double> iOmega(0.0, Omega);
    const std::complex<double> eplus = std::polar(1.0, Omega);
    const std::complex<double> eminus = std::conj(eplus);
    moments[0] = 2.0 * std::sin(Omega) / Omega;
    for (std::size_t p = 1; p < c.size(); ++p) {
        const std::complex<double> boundary =
            (eplus - ((p % 2 == 0) ? eminus : -eminus)) / iOmega;
        moments[p] = boundary - (static_cast<double>(p) / iOmega) * moments[p - 1];
    }
    std::complex<double> integral = 0.0;
    for (std::size_t p = 0; p < c.size(); ++p) integral += c[p] * moments[p];
    return std::real(std::polar(1.0, omega * mid) * integral * half);
}

int checked_dim(int u) {
    if (u < 0 || u > 24) throw std::invalid_argument("d_vector: u out of range");
    return 1 << u;
}

}  // namespace

bool admissible_d(const WaveletSpec& spec, double d) {
    return d > 0.5 - spec.decay_exponent && d <= spec.vanishing_moments;
}

namespace detail {

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0) || !(a > 0.0)) throw std::invalid_argument("hurwitz_zeta: need s > 1, a > 0");
    double sum = 0.0;
    while (a < 12.0) {
        sum += std::pow(a, -s);
        a += 1.0;
    }
    // Euler-Maclaurin at q = a
    const double qs = std::pow(a, -s);
    sum += a * qs / (s - 1.0) + 0.5 * qs;
    static const double b2k_over_fact[6] = {
        1.0 / 12.0,       -1.0 / 720.0,        1.0 / 30240.0,
        -1.0 / 1209600.0, 1.0 / 47900160.0,    -691.0 / 1307674368000.0};
    double poch = s;            // s (s+1) ... rising factorial
    double qpow = qs / a;       // a^{-s-1}
    for (int k = 0; k < 6; ++k) {
        sum += b2k_over_fact[k] * poch * qpow;
        poch *= (s + 2 * k + 1) * (s + 2 * k + 2);
        qpow /= a * a;
    }
    return sum;
}

double lattice_sum(double s, double x, int window) {
    x -= std::floor(x);  // periodic in x
    if (x == 0.0) throw std::invalid_argument("lattice_sum: integer x");
    double sum = 0.0;
    for (int m = -window; m <= window; ++m) sum += std::pow(std::abs(x + m), -s);
    sum += hurwitz_zeta(s, x + window + 1);
    sum += hurwitz_zeta(s, window + 1 - x);
    return sum;
}

std::vector<std::complex<double>> fold_sums(const WaveletSpec& spec, int u, double lambda,
                                            double d, int window) {
    const int dim = checked_dim(u);
    if (!(lambda > -M_PI && lambda < M_PI))
        throw std::invalid_argument("d_vector: lambda must lie in (-pi, pi)");
    if (!admissible_d(spec, d))
        throw std::invalid_argument("d_vector: d outside (1/2 - alpha, M]");
    const int n = spec.order;
    const double s = 2.0 * d + 2.0 * n;
    std::vector<std::complex<double>> a(static_cast<std::size_t>(dim));
    const double shalf = std::sin(0.5 * lambda);
    if (shalf == 0.0) return a;  // D_u(0) = 0: psi_hat vanishes on 2 pi Z

    const double scale = 2.0 * M_PI * dim;
    const double base = spec.normalization * spec.normalization * ipow(4.0, 2 * n) *
                        std::pow(2.0, u * n) * ipow(shalf, 2 * n);
    const std::complex<double> cphase =
        std::polar(base, n * lambda * (1.0 - std::pow(2.0, -u)));
    for (int r = 0; r < dim; ++r) {
        const double theta = 0.5 * lambda / dim + M_PI * r / dim;
        const double g = ipow(std::sin(theta), 2 * n);
        const double z = std::pow(scale, -s) * lattice_sum(s, (lambda + 2.0 * M_PI * r) / scale, window);
        a[static_cast<std::size_t>(r)] =
            cphase * std::polar(g * z, -2.0 * M_PI * n * r / dim);
    }
    return a;
}

double d_norm2(const WaveletSpec& spec, int u, double lambda, double d, int window) {
    double s = 0.0;
    for (const std::complex<double>& v : fold_sums(spec, u, lambda, d, window)) s += std::norm(v);
    return s;
}

}  // namespace detail

std::vector<std::complex<double>> d_vector(const WaveletSpec& spec, int u, double lambda,
                                           double d, int window) {
    const int dim = checked_dim(u);
    const std::vector<std::complex<double>> a = detail::fold_sums(spec, u, lambda, d, window);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(dim));
    const double inv_dim = 1.0 / dim;
    for (int m = 0; m < dim; ++m) {
        std::complex<double> s = 0.0;
        for (int r = 0; r < dim; ++r)
            s += a[static_cast<std::size_t>(r)] *
                 std::polar(1.0, -2.0 * M_PI * m * r * inv_dim);
        out[static_cast<std::size_t>(m)] =
            std::polar(std::pow(2.0, -0.5 * u), -m * inv_dim * lambda) * s;
    }
    return out;
}

// ----- K_psi ---------------------------------------------------------------

namespace {

// integrand of K_psi on xi > 0: C^2 2^{4N} sin^{4N}(xi/2) xi^{-s}
double kpsi_integrand(const WaveletSpec& spec, double s, double xi) {
    const int n = spec.order;
    return spec.normalization * spec.normalization * ipow(2.0, 4 * n) *
           ipow(std::sin(0.5 * xi), 4 * n) * std::pow(xi, -s);
}

double kpsi_numeric(const WaveletSpec& spec, double s, double lo, double hi, int mult) {
    // oscillation frequencies go up to 2N
    const int n = spec.order;
    double acc = 0.0;
    const int panels =
        std::max(1, static_cast<int>(std::ceil((hi - lo) * 2.0 * n / 3.0))) * mult;
    const double w = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p)
        acc += gauss_integrate([&](double xi) { return kpsi_integrand(spec, s, xi); },
                               lo + p * w, lo + (p + 1) * w, 16);
    return acc;
}

double kpsi_head(const WaveletSpec& spec, double s, int mult) {
    // (0, 1]: dyadic cells toward the origin, integrand ~ xi^{2N - 2d}
    double acc = 0.0;
    for (int cell = 0; cell < 56; ++cell) {
        const double hi = std::pow(2.0, -cell);
        acc += gauss_integrate([&](double xi) { return kpsi_integrand(spec, s, xi); },
                               0.5 * hi, hi, 16 * std::min(mult, 2));
    }
    return acc;
}

struct KpsiTail {
    double value;
    double bound;
};

KpsiTail kpsi_tail(const WaveletSpec& spec, double s, double cutoff) {
    const int n = spec.order;
    const CosExpansion e = sin_power_expansion(2 * n);
    const double front = spec.normalization * spec.normalization * ipow(2.0, 4 * n);
    double value = e.rho * std::pow(cutoff, 1.0 - s) / (s - 1.0);
    double bound = 0.0;
    for (int k = 1; k <= 2 * n; ++k) {
        const double g = e.gamma[static_cast<std::size_t>(k - 1)];
        value += g * (-std::pow(cutoff, -s) * std::sin(k * cutoff) / k +
                      s / (k * k) * std::pow(cutoff, -s - 1.0) * std::cos(k * cutoff));
        bound += std::abs(g) * s * std::pow(cutoff, -s - 1.0) / (k * k);
    }
    return {front * value, front * bound};
}

}  // namespace

ValueWithError k_psi_estimate(const WaveletSpec& spec, double d) {
    if (!admissible_d(spec, d))
        throw std::invalid_argument("k_psi: d outside (1/2 - alpha, M]");
    const double s = 2.0 * d + 2.0 * spec.order;
    double results[2];
    for (int mult = 1; mult <= 2; ++mult) {
        double cutoff = 8192.0;
        double numeric = kpsi_head(spec, s, mult) + kpsi_numeric(spec, s, 1.0, cutoff, mult);
        KpsiTail tail = kpsi_tail(spec, s, cutoff);
        while (tail.bound > 1e-10 * (numeric + tail.value) && cutoff < 1e9) {
            numeric += kpsi_numeric(spec, s, cutoff, 2.0 * cutoff, mult);
            cutoff *= 2.0;
            tail = kpsi_tail(spec, s, cutoff);
        }
        results[mult - 1] = 2.0 * (numeric + tail.value);
    }
    return {results[1], std::abs(results[1] - results[0])};
}

double k_psi(const WaveletSpec& spec, double d) { return k_psi_estimate(spec, d).value; }

// ----- I_u -----------------------------------------------------------------

namespace {

// Collapsed form: I_u = C^4 4^{2N} ... 2^{u(1 - 2N - 4d)} J_u with
//   J_u = int_{-a}^{2 pi - a} sin^{4N}(2^{u-1} mu) W(mu) dmu,  a = pi 2^{-u},
//   W(mu) = sin^{4N}(mu/2) Z_s(mu)^2,  Z_s(mu) = sum_m |mu + 2 pi m|^{-s}.
// Cells with modest phase integrate the product directly; fast-oscillating
// cells use the cos expansion of sin^{4N}, the mean part by plain GL and
// each cos(k 2^u mu) part by Filon.
double ju_cell(const WaveletSpec& spec, int u, double s, const CosExpansion& e, double lo,
               double hi, int mult) {
    const int n = spec.order;
    const double pow2u = std::pow(2.0, u);
    const auto w_fn = [&](double mu) {
        const double zs =
            std::pow(2.0 * M_PI, -s) * detail::lattice_sum(s, mu / (2.0 * M_PI), 8);
        return ipow(std::sin(0.5 * mu), 4 * n) * zs * zs;
    };
    const double phase = 2.0 * n * pow2u * (hi - lo);
    if (phase <= 48.0) {
        const int panels = std::max(1, static_cast<int>(std::ceil(phase / 3.0))) * mult;
        const double w = (hi - lo) / panels;
        double acc = 0.0;
        for (int p = 0; p < panels; ++p)
            acc += gauss_integrate(
                [&](double mu) {
                    return ipow(std::sin(0.5 * pow2u * mu), 4 * n) * w_fn(mu);
                },
                lo + p * w, lo + (p + 1) * w, 16);
        return acc;
    }
    // mean part
    double acc = 0.0;
    {
        const int panels = 2 * mult;
        const double w = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p)
            acc += e.rho * gauss_integrate(w_fn, lo + p * w, lo + (p + 1) * w, 16);
    }
    // oscillatory parts, frequency k 2^u
    for (int k = 1; k <= 2 * n; ++k) {
        const double g = e.gamma[static_cast<std::size_t>(k - 1)];
        const double omega = k * pow2u;
        const int panels = mult;
        const double w = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double para = lo + p * w, parb = lo + (p + 1) * w;
            if (omega * 0.5 * (parb - para) >= 24.0)
                acc += g * filon_cos(w_fn, para, parb, omega, 12);
            else
                acc += g * gl_cos(w_fn, para, parb, omega, 1);
        }
    }
    return acc;
}

double ju_pass(const WaveletSpec& spec, int u, double s, int mult) {
    const CosExpansion e = sin_power_expansion(2 * spec.order);
    double total = 0.0;
    // right cells toward the interior singularity at 0
    for (int k = 0; k < 56; ++k) {
        const double hi = M_PI * std::pow(2.0, -k);
        total += ju_cell(spec, u, s, e, 0.5 * hi, hi, mult);
    }
    // left cells, from -a up toward 0
    for (int k = u; k < 56 + u; ++k) {
        const double hi = M_PI * std::pow(2.0, -k);
        total += ju_cell(spec, u, s, e, -hi, -0.5 * hi, mult);
    }
    // cells approaching 2 pi from the left, stopping at 2 pi - a
    for (int k = 0; k < u; ++k) {
        const double dist = M_PI * std::pow(2.0, -k);
        total += ju_cell(spec, u, s, e, 2.0 * M_PI - dist, 2.0 * M_PI - 0.5 * dist, mult);
    }
    return total;
}

}  // namespace

ValueWithError i_u_estimate(const WaveletSpec& spec, int u, double d) {
    if (u < 0) throw std::invalid_argument("i_u: u must be >= 0");
    if (!admissible_d(spec, d))
        throw std::invalid_argument("i_u: d outside (1/2 - alpha, M]");
    const int n = spec.order;
    const double s = 2.0 * d + 2.0 * n;
    const double front = ipow(spec.normalization, 4) * ipow(4.0, 4 * n) *
                         std::pow(2.0, u * (1.0 - 2.0 * n - 4.0 * d));
    const double j1 = ju_pass(spec, u, s, 1);
    const double j2 = ju_pass(spec, u, s, 2);
    return {front * j2, front * std::abs(j2 - j1)};
}

double i_u(const WaveletSpec& spec, int u, double d) { return i_u_estimate(spec, u, d).value; }

// ----- limit covariances -----------------------------------------------------

std::vector<std::vector<double>> cov_matrix(const WaveletSpec& spec, double d, double fstar0,
                                            int ell) {
    if (ell < 0) throw std::invalid_argument("cov_matrix: ell must be >= 0");
    std::vector<double> iu(static_cast<std::size_t>(ell) + 1);
    for (int u = 0; u <= ell; ++u) iu[static_cast<std::size_t>(u)] = i_u(spec, u, d);
    std::vector<std::vector<double>> m(static_cast<std::size_t>(ell) + 1,
                                       std::vector<double>(static_cast<std::size_t>(ell) + 1));
    for (int u = 0; u <= ell; ++u)
        for (int v = 0; v <= ell; ++v) {
            const int hi = std::max(u, v), lo = std::min(u, v);
            m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                4.0 * M_PI * fstar0 * fstar0 * std::pow(2.0, 4.0 * d * hi + lo) *
                iu[static_cast<std::size_t>(hi - lo)];
        }
    return m;
}

std::vector<std::vector<double>> regression_cov(const WaveletSpec& spec, double d, int ell) {
    if (ell < 1) throw std::invalid_argument("regression_cov: ell must be >= 1");
    const double kd = k_psi(spec, d);
    std::vector<double> iu(static_cast<std::size_t>(ell) + 1);
    for (int u = 0; u <= ell; ++u) iu[static_cast<std::size_t>(u)] = i_u(spec, u, d);
    std::vector<std::vector<double>> m(static_cast<std::size_t>(ell) + 1,
                                       std::vector<double>(static_cast<std::size_t>(ell) + 1));
    for (int i = 0; i <= ell; ++i)
        for (int j = 0; j <= ell; ++j) {
            const int gap = std::abs(j - i);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                4.0 * M_PI * std::pow(2.0, 2.0 * d * gap + std::min(i, j)) *
                iu[static_cast<std::size_t>(gap)] / (kd * kd);
        }
    return m;
}

double regression_variance(const WaveletSpec& spec, double d, const std::vector<double>& w) {
    if (w.size() < 2) throw std::invalid_argument("regression_variance: need at least 2 weights");
    double sum = 0.0, slope = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        sum += w[i];
        slope += static_cast<double>(i) * w[i];
    }
    if (std::abs(sum) > 1e-10 || std::abs(2.0 * std::log(2.0) * slope - 1.0) > 1e-10)
        throw std::invalid_argument("regression_variance: weights violate the constraints");
    const int ell = static_cast<int>(w.size()) - 1;
    const std::vector<std::vector<double>> v = regression_cov(spec, d, ell);
    double q = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) q += w[i] * v[i][j] * w[j];
    return q;
}

// ----- Whittle -------------------------------------------------------------

double whittle_eta(int ell) {
    if (ell < 1) throw std::invalid_argument("whittle_eta: ell must be >= 1");
    const double denom = 2.0 - std::pow(2.0, -ell);
    double s = 0.0;
    for (int j = 0; j <= ell; ++j) s += j * std::pow(2.0, -j);
    return s / denom;
}

double whittle_kappa(int ell) {
    if (ell < 1) throw std::invalid_argument("whittle_kappa: ell must be >= 1");
    const double denom = 2.0 - std::pow(2.0, -ell);
    const double eta = whittle_eta(ell);
    double s = 0.0;
    for (int j = 0; j <= ell; ++j) s += (j - eta) * (j - eta) * std::pow(2.0, -j);
    return s / denom;
}

double whittle_variance(const WaveletSpec& spec, double d, int ell) {
    if (ell < 1) throw std::invalid_argument("whittle_variance: ell must be >= 1");
    const double kd = k_psi(spec, d);
    const double denom = 2.0 - std::pow(2.0, -ell);
    const double eta = whittle_eta(ell);
    const double kappa = whittle_kappa(ell);
    double braces = i_u(spec, 0, d);
    for (int u = 1; u <= ell; ++u) {
        double inner = 0.0;
        for (int i = 0; i <= ell - u; ++i)
            inner += std::pow(2.0, -i) / denom * (i - eta) * (i + u - eta);
        braces += 2.0 / kappa * i_u(spec, u, d) * std::pow(2.0, (2.0 * d - 1.0) * u) * inner;
    }
    const double lk = std::log(2.0) * kd;
    return M_PI / (denom * kappa * lk * lk) * braces;
}

double whittle_variance_inf(const WaveletSpec& spec, double d) {
    if (!admissible_d(spec, d))
        throw std::invalid_argument("whittle_variance_inf: d outside (1/2 - alpha, M]");
    double series = i_u(spec, 0, d);
    for (int u = 1; u <= 200; ++u) {
        const double inc = 2.0 * i_u(spec, u, d) * std::pow(2.0, (2.0 * d - 1.0) * u);
        series += inc;
        if (std::abs(inc) < 1e-12 * std::abs(series)) break;
    }
    const double lk = 2.0 * std::log(2.0) * k_psi(spec, d);
    return M_PI / (lk * lk) * series;
}

}  // namespace wavemem
