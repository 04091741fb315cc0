#pragma once

#include <iosfwd>
#include <vector>

#include "wavemem/filter_bank.hpp"

namespace wavemem {

/// Observed series X_1..X_n; values[k] holds X_{k+1}.
struct Sample {
    std::vector<double> values;
    long long size() const { return static_cast<long long>(values.size()); }
};

/// Wavelet coefficients W_{j,k} for the index set whose filter support lies
/// entirely inside the sample; coeffs[j] holds k = 0..n_j-1.
struct WaveletPyramid {
    int max_scale = 0;  // J
    std::vector<std::vector<double>> coeffs;
    long long count(int j) const {
        if (j < 0 || j > max_scale) return 0;
        return static_cast<long long>(coeffs[static_cast<std::size_t>(j)].size());
    }
};

/// Per-scale empirical second moments of the coefficients. By convention
/// sigma2 is 0 past the maximal scale.
struct Scalogram {
    std::vector<long long> counts;  // n_j, j = 0..J
    std::vector<double> sigma2;     // empirical second moments
    int max_scale() const { return static_cast<int>(sigma2.size()) - 1; }
    double at(int j) const {
        if (j < 0 || j >= static_cast<int>(sigma2.size())) return 0.0;
        return sigma2[static_cast<std::size_t>(j)];
    }
};

/// n_j = max(0, floor(2^-j (n - T + 1) - T + 1)).
long long coeff_count(long long n, int t_len, int j);

/// J = max{j >= 0 : n_j > 0}, found by direct scan. Throws if no scale has a
/// single coefficient.
int max_scale(long long n, int t_len);

/// W_{j,k} = sum_l X_l h_{j, 2^j k - l} for all admissible (j,k); requires
/// the bank to cover every usable scale of the sample.
WaveletPyramid transform(const FilterBank& bank, const Sample& sample);

Scalogram scalogram(const WaveletPyramid& pyramid);

/// Sample input: one finite decimal per line, or a single-column CSV with
/// header "x". Throws on non-finite or empty input.
Sample read_sample(std::istream& is);
void write_sample_csv(const Sample& sample, std::ostream& os);

/// CSV with columns (j,k,w).
void write_pyramid_csv(const WaveletPyramid& pyramid, std::ostream& os);
/// CSV with columns (j,n_j,sigma2_hat).
void write_scalogram_csv(const Scalogram& scalogram, std::ostream& os);

}  // namespace wavemem
