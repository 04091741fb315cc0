#pragma once

#include <cstdint>
#include <vector>

#include "wavemem/dwt.hpp"
#include "wavemem/spectral.hpp"

namespace wavemem {

/// Recipe for one path: a truncated-MA FARIMA(0, d-K, 0) core of length
/// n + burn_in, burn-in discarded, then K cumulative summations (integration
/// constants 0) so that the K-th difference of the output is the core.
struct SimulationPlan {
    FarimaSpec farima;
    std::size_t n = 0;
    std::size_t burn_in = 0;
    int K = 0;
    std::uint64_t seed = 0;
};

/// splitmix64 of seed + stream; used to derive independent substreams for
/// Monte Carlo replicates.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// iid draws with mean 0 and variance 1: gaussian (Box-Muller), uniform
/// scaled by sqrt(12), unit exponential minus 1, or +-1 fair signs. Same
/// (law, count, seed) always yields the same sequence.
std::vector<double> draw_innovations(InnovationLaw law, std::size_t count, std::uint64_t seed);

Sample simulate_md(const SimulationPlan& plan);

namespace detail {
/// Causal FIR filtering y_t = sum_k a_k x_{t-k} evaluated where the filter
/// history is complete: x has size nx, output has size nx - a.size() + 1.
/// Small products run directly, large ones through FFT; the cutover is fixed
/// so a given plan always takes the same path.
std::vector<double> convolve_valid(const std::vector<double>& x, const std::vector<double>& a);
}  // namespace detail

}  // namespace wavemem
