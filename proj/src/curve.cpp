// SPDX-License-Identifier: Apache-2.0
#include "isosum/curve.hpp"

#include <cassert>
#include <stdexcept>

namespace isosum {

Curve::Curve(const Prime& p, Fp a2, Fp a4, Fp a6) : p_(&p), a2_(a2), a4_(a4), a6_(a6) {
    // discriminant of t^3 + a t^2 + b t + c
    Fp a = a2, b = a4, c = a6;
    Fp disc = Fp::from_int(p, 18) * a * b * c - Fp::from_int(p, 4) * a * a * a * c +
              a * a * b * b - Fp::from_int(p, 4) * b * b * b - Fp::from_int(p, 27) * c * c;
    if (disc.is_zero()) throw std::invalid_argument("Curve: singular (repeated root mod p)");
}

Curve Curve::mordell(const Prime& p, Fp d) { return Curve(p, Fp(p, 0), Fp(p, 0), d); }

bool Curve::contains(const Point& pt) const {
    if (pt.is_infinity()) return true;
    return pt.y() * pt.y() == rhs(pt.x());
}

Point Curve::negate(const Point& pt) const {
    if (pt.is_infinity()) return pt;
    return Point::affine(pt.x(), -pt.y());
}

Point Curve::add(const Point& P, const Point& Q) const {
    assert(contains(P) && contains(Q));
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const Prime& p = *p_;
    Fp lambda(p, 0);
    if (P.x() == Q.x()) {
        if (P.y() != Q.y() || P.y().is_zero()) return Point::infinity();
        // tangent slope (3x^2 + 2 a2 x + a4) / 2y
        Fp num = Fp(p, 3) * P.x() * P.x() + Fp(p, 2) * a2_ * P.x() + a4_;
        lambda = num / (Fp(p, 2) * P.y());
    } else {
        lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    }
    Fp x3 = lambda * lambda - a2_ - P.x() - Q.x();
    Fp y3 = lambda * (P.x() - x3) - P.y();
    return Point::affine(x3, y3);
}

Point Curve::scalar_mul(long long n, const Point& P) const {
    Point base = n < 0 ? negate(P) : P;
    unsigned long long k = n < 0 ? -(unsigned long long)n : (unsigned long long)n;
    Point acc = Point::infinity();
    while (k > 0) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

std::vector<Point> Curve::enumerate_affine() const {
    // quadratic-residue table once per curve: O(1) square tests in the x-scan
    const Prime& p = *p_;
    std::uint64_t n = p.value();
    std::vector<std::uint64_t> root(n, ResidueTables::kNone);
    for (std::uint64_t y = 0; y <= (n - 1) / 2; ++y) {
        std::uint64_t c = p.mul(y, y);
        if (root[c] == ResidueTables::kNone) root[c] = y;
    }
    std::vector<Point> pts;
    for (std::uint64_t x = 0; x < n; ++x) {
        Fp fx = rhs(Fp(p, x));
        std::uint64_t r = root[fx.lift()];
        if (r == ResidueTables::kNone) continue;
        pts.push_back(Point::affine(Fp(p, x), Fp(p, r)));
        if (r != 0) pts.push_back(Point::affine(Fp(p, x), Fp(p, n - r)));
    }
    return pts;
}

std::vector<Point> Curve::enumerate_affine(const ResidueTables& tables) const {
    const Prime& p = *p_;
    std::uint64_t n = p.value();
    std::vector<Point> pts;
    for (std::uint64_t x = 0; x < n; ++x) {
        Fp fx = rhs(Fp(p, x));
        std::uint64_t r = tables.sqrt_smaller(fx.lift());
        if (r == ResidueTables::kNone) continue;
        pts.push_back(Point::affine(Fp(p, x), Fp(p, r)));
        if (r != 0) pts.push_back(Point::affine(Fp(p, x), Fp(p, n - r)));
    }
    return pts;
}

} // namespace isosum
