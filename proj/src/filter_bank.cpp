#include "wavemem/filter_bank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wavemem {

const std::vector<double>& FilterBank::taps(int j) const {
    if (j < 0 || j > j_max_) throw std::out_of_range("FilterBank::taps: scale out of range");
    return taps_[static_cast<std::size_t>(j)];
}

long long FilterBank::offset(int j) const {
    if (j < 0 || j > j_max_) throw std::out_of_range("FilterBank::offset: scale out of range");
    return offsets_[static_cast<std::size_t>(j)];
}

double FilterBank::tap(int j, long long l) const {
    const std::vector<double>& t = taps(j);
    const long long i = l - offset(j);
    if (i < 0 || i >= static_cast<long long>(t.size())) return 0.0;
    return t[static_cast<std::size_t>(i)];
}

FilterBank build_filters(const WaveletSpec& spec, int j_max) {
    if (j_max < 0) throw std::invalid_argument("build_filters: j_max must be >= 0");
    const int n = spec.order;
    const int t_len = spec.support_length;  // 2N
    const int gl_points = (2 * n - 1) / 2 + 2;  // exact for degree <= 2N-2
    std::vector<std::vector<double>> all_taps;
    std::vector<long long> offsets;
    for (int j = 0; j <= j_max; ++j) {
        const long long scale = 1LL << j;
        const double inv_scale = 1.0 / static_cast<double>(scale);
        const double root = std::pow(2.0, -0.5 * j);
        const long long l_min = -(t_len * scale + n) + 1;
        std::vector<double> taps(static_cast<std::size_t>(-l_min), 0.0);
        for (long long l = l_min; l <= -1; ++l) {
            // phi(t+l) lives on [-n-l, -l], psi(2^-j t) on [0, t_len*2^j]
            const double a = std::max<double>(0.0, static_cast<double>(-n - l));
            const double b = std::min<double>(static_cast<double>(t_len) * scale,
                                              static_cast<double>(-l));
            if (!(a < b)) continue;
            std::vector<double> cuts;
            for (long long m = static_cast<long long>(std::ceil(a)); m <= static_cast<long long>(std::floor(b)); ++m)
                cuts.push_back(static_cast<double>(m));
            for (long long m = static_cast<long long>(std::ceil(a * inv_scale));
                 m <= static_cast<long long>(std::floor(b * inv_scale)); ++m)
                cuts.push_back(static_cast<double>(m * scale));
            cuts.push_back(a);
            cuts.push_back(b);
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            double h = 0.0;
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                if (cuts[i + 1] <= a || cuts[i] >= b) continue;
                h += gauss_integrate(
                    [&](double t) {
                        return spec.phi(t + static_cast<double>(l)) * spec.psi(t * inv_scale);
                    },
                    cuts[i], cuts[i + 1], gl_points);
            }
            taps[static_cast<std::size_t>(l - l_min)] = root * h;
        }
        all_taps.push_back(std::move(taps));
        offsets.push_back(l_min);
    }
    return FilterBank(spec, j_max, std::move(all_taps), std::move(offsets));
}

std::complex<double> transfer_fn(const FilterBank& bank, int j, double lambda) {
    const std::vector<double>& taps = bank.taps(j);
    const long long l0 = bank.offset(j);
    const std::complex<double> step = std::polar(1.0, -lambda);
    std::complex<double> sum = 0.0;
    std::complex<double> rot = 0.0;
    for (std::size_t i = 0; i < taps.size(); ++i) {
        // e^{-i lambda (l0+i)}, re-anchored periodically to stop drift
        if (i % 64 == 0)
            rot = std::polar(1.0, -lambda * static_cast<double>(l0 + static_cast<long long>(i)));
        sum += taps[i] * rot;
        rot *= step;
    }
    return sum;
}

void dump_filters_csv(const FilterBank& bank, std::ostream& os) {
    os << "j,l,h\n";
    char buf[64];
    for (int j = 0; j <= bank.j_max(); ++j) {
        const std::vector<double>& taps = bank.taps(j);
        const long long l0 = bank.offset(j);
        for (std::size_t i = 0; i < taps.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", taps[i]);
            os << j << ',' << (l0 + static_cast<long long>(i)) << ',' << buf << '\n';
        }
    }
}

}  // namespace wavemem
