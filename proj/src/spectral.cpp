#include "wavemem/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace wavemem {

InnovationLaw innovation_law_from_string(const std::string& name) {
    if (name == "gaussian") return InnovationLaw::gaussian;
    if (name == "uniform") return InnovationLaw::uniform;
    if (name == "centered_exponential") return InnovationLaw::centered_exponential;
    if (name == "rademacher") return InnovationLaw::rademacher;
    throw std::invalid_argument("unknown innovation law '" + name + "'");
}

std::string to_string(InnovationLaw law) {
    switch (law) {
        case InnovationLaw::gaussian: return "gaussian";
        case InnovationLaw::uniform: return "uniform";
        case InnovationLaw::centered_exponential: return "centered_exponential";
        case InnovationLaw::rademacher: return "rademacher";
    }
    return "?";
}

int integration_order(double d) {
    const double k = std::ceil(d - 0.5 + 1e-9);
    return k > 0 ? static_cast<int>(k) : 0;
}

MdModel farima00_model(double d) {
    MdModel m;
    m.d = d;
    m.fstar = [](double) { return 1.0 / (2.0 * M_PI); };
    m.fstar0 = 1.0 / (2.0 * M_PI);
    m.beta = 2.0;
    m.K = integration_order(d);
    m.bounded_fstar = true;
    return m;
}

std::vector<double> farima_coeffs(double d_frac, std::size_t m) {
    if (!(d_frac < 0.5)) throw std::invalid_argument("farima_coeffs: d_frac must be < 1/2");
    if (m == 0) throw std::invalid_argument("farima_coeffs: m must be >= 1");
    std::vector<double> a(m);
    a[0] = 1.0;
    for (std::size_t k = 1; k < m; ++k)
        a[k] = a[k - 1] * (static_cast<double>(k) - 1.0 + d_frac) / static_cast<double>(k);
    return a;
}

double gen_spectral_density(const MdModel& model, double lambda) {
    const double al = std::abs(lambda);
    if (al > M_PI + 1e-12) throw std::invalid_argument("gen_spectral_density: |lambda| > pi");
    if (al == 0.0 && model.d > 0.0)
        throw std::invalid_argument("gen_spectral_density: pole at lambda = 0 for d > 0");
    const double g = 2.0 * std::abs(std::sin(0.5 * lambda));  // |1 - e^{-i lambda}|
    return std::pow(g, -2.0 * model.d) * model.fstar(lambda);
}

namespace {

// One pass over the dyadic cells of (0, pi] with `mult` oscillation panels
// per unit phase of H_j.
double scalogram_pass(const FilterBank& bank, const MdModel& model, int j, double mult) {
    const double phase_span =
        static_cast<double>(bank.taps(j).size()) + std::abs(static_cast<double>(bank.offset(j)));
    double total = 0.0;
    for (int cell = 0; cell < 56; ++cell) {
        const double hi = M_PI * std::pow(2.0, -cell);
        const double lo = 0.5 * hi;
        const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) * phase_span * mult / 6.0)));
        double acc = 0.0;
        const double width = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            acc += gauss_integrate(
                [&](double lam) {
                    const double h = std::abs(transfer_fn(bank, j, lam));
                    return h * h * gen_spectral_density(model, lam);
                },
                lo + p * width, lo + (p + 1) * width, 16);
        }
        total += acc;
    }
    return 2.0 * total;
}

}  // namespace

double theoretical_scalogram(const FilterBank& bank, const MdModel& model, int j) {
    if (model.d > bank.spec().vanishing_moments)
        throw std::invalid_argument("theoretical_scalogram: d > M makes |H_j|^2 f non-integrable");
    double prev = scalogram_pass(bank, model, j, 1.0);
    for (double mult = 2.0; mult <= 8.0; mult *= 2.0) {
        const double cur = scalogram_pass(bank, model, j, mult);
        if (std::abs(cur - prev) <= 1e-9 * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace wavemem
