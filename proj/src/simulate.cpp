#include "wavemem/simulate.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace wavemem {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

namespace {

double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<double> draw_innovations(InnovationLaw law, std::size_t count, std::uint64_t seed) {
    if (count == 0) throw std::invalid_argument("draw_innovations: count must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<double> out(count);
    switch (law) {
        case InnovationLaw::gaussian:
            for (std::size_t i = 0; i < count; i += 2) {
                const double u1 = 1.0 - to_unit(rng());  // (0, 1]
                const double u2 = to_unit(rng());
                const double r = std::sqrt(-2.0 * std::log(u1));
                out[i] = r * std::cos(2.0 * M_PI * u2);
                if (i + 1 < count) out[i + 1] = r * std::sin(2.0 * M_PI * u2);
            }
            break;
        case InnovationLaw::uniform: {
            const double s = std::sqrt(12.0);
            for (std::size_t i = 0; i < count; ++i) out[i] = (to_unit(rng()) - 0.5) * s;
            break;
        }
        case InnovationLaw::centered_exponential:
            for (std::size_t i = 0; i < count; ++i)
                out[i] = -std::log(1.0 - to_unit(rng())) - 1.0;
            break;
        case InnovationLaw::rademacher:
            for (std::size_t i = 0; i < count; ++i) out[i] = (rng() >> 63) ? 1.0 : -1.0;
            break;
    }
    return out;
}

namespace detail {

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// FFTW plans are not thread-safe to create; executions on distinct buffers
// are. Plans are cached per size with FFTW_ESTIMATE so the algorithm choice
// (and hence rounding) never depends on timing.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

std::mutex plan_mutex;
std::map<std::size_t, PlanPair>& plan_cache() {
    static std::map<std::size_t, PlanPair> cache;
    return cache;
}

PlanPair get_plans(std::size_t nfft) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(nfft);
    if (it != cache.end()) return it->second;
    std::vector<double> re(nfft);
    std::vector<std::complex<double>> cp(nfft / 2 + 1);
    PlanPair p;
    p.fwd = fftw_plan_dft_r2c_1d(static_cast<int>(nfft), re.data(),
                                 reinterpret_cast<fftw_complex*>(cp.data()),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.inv = fftw_plan_dft_c2r_1d(static_cast<int>(nfft),
                                 reinterpret_cast<fftw_complex*>(cp.data()), re.data(),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(nfft, p);
    return p;
}

std::vector<double> convolve_direct(const std::vector<double>& x, const std::vector<double>& a) {
    const std::size_t m = a.size();
    std::vector<double> y(x.size() - m + 1);
    for (std::size_t t = 0; t < y.size(); ++t) {
        double acc = 0.0;
        for (std::size_t k = 0; k < m; ++k) acc += a[k] * x[t + m - 1 - k];
        y[t] = acc;
    }
    return y;
}

std::vector<double> convolve_fft(const std::vector<double>& x, const std::vector<double>& a) {
    const std::size_t m = a.size();
    const std::size_t full = x.size() + m - 1;
    const std::size_t nfft = next_pow2(full);
    const PlanPair plans = get_plans(nfft);

    std::vector<double> buf(nfft, 0.0);
    std::vector<std::complex<double>> fx(nfft / 2 + 1), fa(nfft / 2 + 1);
    std::copy(x.begin(), x.end(), buf.begin());
    fftw_execute_dft_r2c(plans.fwd, buf.data(), reinterpret_cast<fftw_complex*>(fx.data()));
    std::fill(buf.begin(), buf.end(), 0.0);
    std::copy(a.begin(), a.end(), buf.begin());
    fftw_execute_dft_r2c(plans.fwd, buf.data(), reinterpret_cast<fftw_complex*>(fa.data()));
    for (std::size_t i = 0; i < fx.size(); ++i) fx[i] *= fa[i];
    fftw_execute_dft_c2r(plans.inv, reinterpret_cast<fftw_complex*>(fx.data()), buf.data());

    const double scale = 1.0 / static_cast<double>(nfft);
    std::vector<double> y(x.size() - m + 1);
    for (std::size_t t = 0; t < y.size(); ++t) y[t] = buf[t + m - 1] * scale;
    return y;
}

}  // namespace

std::vector<double> convolve_valid(const std::vector<double>& x, const std::vector<double>& a) {
    if (a.empty() || x.size() < a.size())
        throw std::invalid_argument("convolve_valid: filter longer than input");
    const unsigned long long work =
        static_cast<unsigned long long>(x.size()) * static_cast<unsigned long long>(a.size());
    if (work <= (1ULL << 26)) return convolve_direct(x, a);
    return convolve_fft(x, a);
}

}  // namespace detail

Sample simulate_md(const SimulationPlan& plan) {
    if (plan.n == 0) throw std::invalid_argument("simulate_md: n must be >= 1");
    if (plan.farima.ma_truncation == 0)
        throw std::invalid_argument("simulate_md: ma_truncation must be >= 1");
    const double d_frac = plan.farima.d - plan.K;
    if (!(d_frac < 0.5))
        throw std::invalid_argument("simulate_md: need d - K < 1/2 for a stationary core");

    const std::size_t m = plan.farima.ma_truncation;
    const std::size_t total = plan.n + plan.burn_in;
    const std::vector<double> coeffs = farima_coeffs(d_frac, m);
    const std::vector<double> noise =
        draw_innovations(plan.farima.law, total + m - 1, plan.seed);
    std::vector<double> core = detail::convolve_valid(noise, coeffs);
    core.erase(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(plan.burn_in));

    for (int k = 0; k < plan.K; ++k) {
        double acc = 0.0;
        for (double& v : core) {
            acc += v;
            v = acc;
        }
    }
    return Sample{std::move(core)};
}

}  // namespace wavemem
