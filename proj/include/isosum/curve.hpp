// SPDX-License-Identifier: Apache-2.0
#pragma once

// Affine Weierstrass curves y^2 = x^3 + a2 x^2 + a4 x + a6 over F_p with the
// chord-tangent group law and exhaustive point enumeration. The Mordell
// shape y^2 = x^3 + d is the workhorse; the general form also carries the
// 2-isogeny example curve.

#include <cstdint>
#include <vector>

#include "isosum/fp.hpp"

namespace isosum {

class Point {
public:
    Point() = default;  // infinity
    static Point infinity() { return Point(); }
    static Point affine(Fp x, Fp y) { return Point(x, y); }

    bool is_infinity() const { return infinity_; }
    const Fp& x() const { return x_; }
    const Fp& y() const { return y_; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // infinity first, then ascending (x, y) lifts
    friend bool operator<(const Point& a, const Point& b) {
        if (a.infinity_ || b.infinity_) return a.infinity_ && !b.infinity_;
        if (a.x_.lift() != b.x_.lift()) return a.x_.lift() < b.x_.lift();
        return a.y_.lift() < b.y_.lift();
    }

private:
    Point(Fp x, Fp y) : x_(x), y_(y), infinity_(false) {}
    Fp x_, y_;
    bool infinity_ = true;
};

class Curve {
public:
    // y^2 = x^3 + a2 x^2 + a4 x + a6; throws if the cubic has a repeated root
    Curve(const Prime& p, Fp a2, Fp a4, Fp a6);
    static Curve mordell(const Prime& p, Fp d);  // y^2 = x^3 + d

    const Prime& prime() const { return *p_; }
    Fp a2() const { return a2_; }
    Fp a4() const { return a4_; }
    Fp a6() const { return a6_; }

    Fp rhs(Fp x) const { return ((x + a2_) * x + a4_) * x + a6_; }
    bool contains(const Point& pt) const;

    Point negate(const Point& pt) const;
    Point add(const Point& P, const Point& Q) const;
    Point sub(const Point& P, const Point& Q) const { return add(P, negate(Q)); }
    Point scalar_mul(long long n, const Point& P) const;

    // All affine points in ascending (x, y) order.
    std::vector<Point> enumerate_affine() const;
    std::vector<Point> enumerate_affine(const ResidueTables& tables) const;

private:
    const Prime* p_;
    Fp a2_, a4_, a6_;
};

} // namespace isosum
