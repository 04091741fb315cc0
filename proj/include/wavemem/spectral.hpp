#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wavemem/filter_bank.hpp"

namespace wavemem {

enum class InnovationLaw { gaussian, uniform, centered_exponential, rademacher };

InnovationLaw innovation_law_from_string(const std::string& name);
std::string to_string(InnovationLaw law);

/// M(d) model: generalized spectral density f = |1-e^{-i lambda}|^{-2d} fstar.
struct MdModel {
    double d = 0.0;
    std::function<double(double)> fstar;  // symmetric, continuous and > 0 at 0
    double fstar0 = 0.0;
    double beta = 2.0;       // regularity exponent of fstar near 0
    int K = 0;               // integration order: d - K < 1/2
    bool bounded_fstar = true;
};

/// FARIMA(0,d,0) driven by unit-variance iid innovations, truncated MA form.
struct FarimaSpec {
    double d = 0.0;
    InnovationLaw law = InnovationLaw::gaussian;
    std::size_t ma_truncation = 1u << 16;
    std::uint64_t seed = 0;
};

/// Smallest K with d - K < 1/2 (epsilon-guarded ceiling).
int integration_order(double d);

/// Canonical model: fstar = 1/(2 pi), beta = 2, K from d.
MdModel farima00_model(double d);

/// MA(infinity) coefficients of (1-B)^{-d_frac}: a_0 = 1,
/// a_k = a_{k-1} (k-1+d_frac)/k. Requires d_frac < 1/2.
std::vector<double> farima_coeffs(double d_frac, std::size_t m);

/// f(lambda) for 0 < |lambda| <= pi; lambda = 0 is rejected when d > 0.
double gen_spectral_density(const MdModel& model, double lambda);

/// sigma_j^2 = int_{-pi}^{pi} |H_j|^2 f, by symmetric adaptive quadrature
/// with dyadic grading toward the spectral singularity at 0. Requires
/// d <= M so the integrand is integrable.
double theoretical_scalogram(const FilterBank& bank, const MdModel& model, int j);

}  // namespace wavemem
