#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wavemem/wavelet_family.hpp"

namespace wavemem {

/// Finite filters h_{j,l} = 2^{-j/2} \int phi(t+l) psi(2^{-j} t) dt for
/// j = 0..j_max. Nonzero taps sit at l in [-(T 2^j + N) + 1, -1]; the taps
/// are stored densely from offset(j) upward, sub-epsilon values included.
class FilterBank {
  public:
    FilterBank(WaveletSpec spec, int j_max,
               std::vector<std::vector<double>> taps,
               std::vector<long long> offsets)
        : spec_(std::move(spec)),
          j_max_(j_max),
          taps_(std::move(taps)),
          offsets_(std::move(offsets)) {}

    const WaveletSpec& spec() const { return spec_; }
    int j_max() const { return j_max_; }
    const std::vector<double>& taps(int j) const;
    long long offset(int j) const;
    double tap(int j, long long l) const;

  private:
    WaveletSpec spec_;
    int j_max_;
    std::vector<std::vector<double>> taps_;     // taps_[j][i] = h_{j, offset+i}
    std::vector<long long> offsets_;
};

/// Builds the filters by exact piecewise-polynomial quadrature: breakpoints
/// of phi(.+l) (integers) and psi(2^{-j}.) (multiples of 2^j) are merged and
/// each subinterval integrated with a Gauss-Legendre rule exact for the
/// degree <= 2N-2 integrand.
FilterBank build_filters(const WaveletSpec& spec, int j_max);

/// H_j(lambda) = sum_l h_{j,l} e^{-i lambda l}.
std::complex<double> transfer_fn(const FilterBank& bank, int j, double lambda);

/// CSV dump with columns (j,l,h), ordered by (j, ascending l).
void dump_filters_csv(const FilterBank& bank, std::ostream& os);

}  // namespace wavemem
