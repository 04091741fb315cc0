#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace wavemem {

/// Polynomial pieces on consecutive unit intervals with integer breakpoints.
/// Piece i covers [x0+i, x0+i+1) and is stored as coefficients of the local
/// variable t = x - (x0+i), t in [0,1). Values outside the pieces are 0.
struct Piecewise {
    int x0 = 0;
    std::vector<std::vector<double>> pieces;

    double left() const { return x0; }
    double right() const { return x0 + static_cast<double>(pieces.size()); }
    double operator()(double x) const;
};

/// Cardinal B-spline B_N, the N-fold self-convolution of the indicator of
/// [0,1), supported on [0,N] with polynomial pieces of degree N-1.
Piecewise cardinal_bspline(int order);

/// p(x - k) for integer k.
Piecewise shift(const Piecewise& p, int k);

/// accum += c * p, on the union of unit-interval grids.
void add_scaled(Piecewise& accum, double c, const Piecewise& p);

void scale(Piecewise& p, double c);

/// Exact integral of p over its support.
double integrate(const Piecewise& p);

/// Exact moment  \int x^m p(x) dx.
double moment(const Piecewise& p, int m);

/// Exact integral of the product p*q over the common support.
double integrate_product(const Piecewise& p, const Piecewise& q);

/// Gauss-Legendre nodes and weights on [-1,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// \int_a^b f by a single n-point Gauss-Legendre rule.
template <class F>
double gauss_integrate(const F& f, double a, double b, int n) {
    const GaussRule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

}  // namespace wavemem
