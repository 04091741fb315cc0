#include "wavemem/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wavemem {

double Piecewise::operator()(double x) const {
    const double fl = std::floor(x);
    const long long i = static_cast<long long>(fl) - x0;
    if (i < 0 || i >= static_cast<long long>(pieces.size())) return 0.0;
    const std::vector<double>& c = pieces[static_cast<std::size_t>(i)];
    const double t = x - fl;
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
    return v;
}

Piecewise cardinal_bspline(int order) {
    if (order < 1) throw std::invalid_argument("cardinal_bspline: order must be >= 1");
    Piecewise b;
    b.x0 = 0;
    b.pieces = {{1.0}};
    // B_k(x) = (x B_{k-1}(x) + (k - x) B_{k-1}(x-1)) / (k-1)
    for (int k = 2; k <= order; ++k) {
        std::vector<std::vector<double>> next(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            std::vector<double> piece(static_cast<std::size_t>(k), 0.0);
            // x = i + t on piece i
            if (i < k - 1) {
                const std::vector<double>& p = b.pieces[static_cast<std::size_t>(i)];
                for (std::size_t m = 0; m < p.size(); ++m) {
                    piece[m] += i * p[m];
                    piece[m + 1] += p[m];
                }
            }
            if (i > 0) {
                const std::vector<double>& p = b.pieces[static_cast<std::size_t>(i - 1)];
                for (std::size_t m = 0; m < p.size(); ++m) {
                    piece[m] += (k - i) * p[m];
                    piece[m + 1] -= p[m];
                }
            }
            for (double& c : piece) c /= (k - 1);
            next[static_cast<std::size_t>(i)] = std::move(piece);
        }
        b.pieces = std::move(next);
    }
    return b;
}

Piecewise shift(const Piecewise& p, int k) {
    Piecewise out = p;
    out.x0 += k;
    return out;
}

void add_scaled(Piecewise& accum, double c, const Piecewise& p) {
    if (p.pieces.empty()) return;
    if (accum.pieces.empty()) {
        accum.x0 = p.x0;
        accum.pieces.assign(p.pieces.size(), {});
    }
    int lo = std::min(accum.x0, p.x0);
    int hi = std::max(accum.x0 + static_cast<int>(accum.pieces.size()),
                      p.x0 + static_cast<int>(p.pieces.size()));
    std::vector<std::vector<double>> merged(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < accum.pieces.size(); ++i)
        merged[static_cast<std::size_t>(accum.x0 - lo) + i] = std::move(accum.pieces[i]);
    for (std::size_t i = 0; i < p.pieces.size(); ++i) {
        std::vector<double>& dst = merged[static_cast<std::size_t>(p.x0 - lo) + i];
        const std::vector<double>& src = p.pieces[i];
        if (dst.size() < src.size()) dst.resize(src.size(), 0.0);
        for (std::size_t m = 0; m < src.size(); ++m) dst[m] += c * src[m];
    }
    accum.x0 = lo;
    accum.pieces = std::move(merged);
}

void scale(Piecewise& p, double c) {
    for (std::vector<double>& piece : p.pieces)
        for (double& v : piece) v *= c;
}

double integrate(const Piecewise& p) {
    double s = 0.0;
    for (const std::vector<double>& piece : p.pieces)
        for (std::size_t m = 0; m < piece.size(); ++m) s += piece[m] / (m + 1.0);
    return s;
}

double moment(const Piecewise& p, int m) {
    if (m < 0) throw std::invalid_argument("moment: m must be >= 0");
    // binomials of (a + t)^m
    std::vector<double> binom(static_cast<std::size_t>(m) + 1, 1.0);
    for (int r = 1; r <= m; ++r)
        binom[static_cast<std::size_t>(r)] =
            binom[static_cast<std::size_t>(r - 1)] * (m - r + 1) / r;
    double s = 0.0;
    for (std::size_t i = 0; i < p.pieces.size(); ++i) {
        const double a = p.x0 + static_cast<double>(i);
        const std::vector<double>& c = p.pieces[i];
        for (int r = 0; r <= m; ++r) {
            const double ar = binom[static_cast<std::size_t>(r)] * std::pow(a, m - r);
            if (ar == 0.0) continue;
            for (std::size_t k = 0; k < c.size(); ++k)
                s += ar * c[k] / (r + static_cast<double>(k) + 1.0);
        }
    }
    return s;
}

double integrate_product(const Piecewise& p, const Piecewise& q) {
    const int lo = std::max(p.x0, q.x0);
    const int hi = std::min(p.x0 + static_cast<int>(p.pieces.size()),
                            q.x0 + static_cast<int>(q.pieces.size()));
    double s = 0.0;
    for (int i = lo; i < hi; ++i) {
        const std::vector<double>& a = p.pieces[static_cast<std::size_t>(i - p.x0)];
        const std::vector<double>& b = q.pieces[static_cast<std::size_t>(i - q.x0)];
        for (std::size_t m = 0; m < a.size(); ++m)
            for (std::size_t k = 0; k < b.size(); ++k)
                s += a[m] * b[k] / (m + static_cast<double>(k) + 1.0);
    }
    return s;
}

namespace {

GaussRule compute_gauss_legendre(int n) {
    GaussRule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[static_cast<std::size_t>(i)] = x;
        r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

}  // namespace wavemem
