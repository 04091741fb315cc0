#include "wavemem/dwt.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wavemem {

long long coeff_count(long long n, int t_len, int j) {
    if (n < 1 || t_len < 1 || j < 0) throw std::invalid_argument("coeff_count: bad arguments");
    const long long avail = n - t_len + 1;
    if (avail < 0) return 0;
    const long long count = (avail >> j) - t_len + 1;
    return count > 0 ? count : 0;
}

int max_scale(long long n, int t_len) {
    if (n < t_len) throw std::invalid_argument("max_scale: sample shorter than the support length");
    if (coeff_count(n, t_len, 0) <= 0)
        throw std::invalid_argument("max_scale: no scale has an admissible coefficient");
    int j = 0;
    while (coeff_count(n, t_len, j + 1) > 0) ++j;
    return j;
}

WaveletPyramid transform(const FilterBank& bank, const Sample& sample) {
    const long long n = sample.size();
    const int t_len = bank.spec().support_length;
    if (n < t_len) throw std::invalid_argument("transform: sample shorter than the support length");
    const int j_top = max_scale(n, t_len);
    if (bank.j_max() < j_top)
        throw std::invalid_argument("transform: filter bank does not cover the maximal scale");

    WaveletPyramid pyr;
    pyr.max_scale = j_top;
    pyr.coeffs.resize(static_cast<std::size_t>(j_top) + 1);
    for (int j = 0; j <= j_top; ++j) {
        const long long nj = coeff_count(n, t_len, j);
        const std::vector<double>& taps = bank.taps(j);
        const long long l0 = bank.offset(j);
        std::vector<double>& out = pyr.coeffs[static_cast<std::size_t>(j)];
        out.resize(static_cast<std::size_t>(nj));
        for (long long k = 0; k < nj; ++k) {
            const long long base = (k << j);
            double w = 0.0;
            for (std::size_t i = 0; i < taps.size(); ++i) {
                // l = 2^j k - m with m = l0 + i; admissibility keeps l in [1, n]
                const long long l = base - (l0 + static_cast<long long>(i));
                assert(l >= 1 && l <= n);
                w += taps[i] * sample.values[static_cast<std::size_t>(l - 1)];
            }
            out[static_cast<std::size_t>(k)] = w;
        }
    }
    return pyr;
}

Scalogram scalogram(const WaveletPyramid& pyramid) {
    Scalogram s;
    s.counts.resize(static_cast<std::size_t>(pyramid.max_scale) + 1);
    s.sigma2.resize(static_cast<std::size_t>(pyramid.max_scale) + 1);
    for (int j = 0; j <= pyramid.max_scale; ++j) {
        const std::vector<double>& w = pyramid.coeffs[static_cast<std::size_t>(j)];
        double acc = 0.0;
        for (double v : w) acc += v * v;
        s.counts[static_cast<std::size_t>(j)] = static_cast<long long>(w.size());
        s.sigma2[static_cast<std::size_t>(j)] = w.empty() ? 0.0 : acc / static_cast<double>(w.size());
    }
    return s;
}

Sample read_sample(std::istream& is) {
    Sample s;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && (line == "x" || line == "\"x\"")) {
            first = false;
            continue;
        }
        first = false;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(line, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("read_sample: unparseable line '" + line + "'");
        }
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos != line.size())
            throw std::invalid_argument("read_sample: trailing junk on line '" + line + "'");
        if (!std::isfinite(v)) throw std::invalid_argument("read_sample: non-finite value");
        s.values.push_back(v);
    }
    if (s.values.empty()) throw std::invalid_argument("read_sample: empty input");
    return s;
}

namespace {
void put(std::ostream& os, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}
}  // namespace

void write_sample_csv(const Sample& sample, std::ostream& os) {
    os << "x\n";
    for (double v : sample.values) {
        put(os, v);
        os << '\n';
    }
}

void write_pyramid_csv(const WaveletPyramid& pyramid, std::ostream& os) {
    os << "j,k,w\n";
    for (int j = 0; j <= pyramid.max_scale; ++j) {
        const std::vector<double>& w = pyramid.coeffs[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < w.size(); ++k) {
            os << j << ',' << k << ',';
            put(os, w[k]);
            os << '\n';
        }
    }
}

void write_scalogram_csv(const Scalogram& scalogram, std::ostream& os) {
    os << "j,n_j,sigma2_hat\n";
    for (std::size_t j = 0; j < scalogram.sigma2.size(); ++j) {
        os << j << ',' << scalogram.counts[j] << ',';
        put(os, scalogram.sigma2[j]);
        os << '\n';
    }
}

}  // namespace wavemem
