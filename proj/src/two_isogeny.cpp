// SPDX-License-Identifier: Apache-2.0
#include "isosum/two_isogeny.hpp"

#include <algorithm>
#include <stdexcept>

namespace isosum {

namespace {

// shifted model y^2 = x^3 + A x^2 + B x with the kernel at the origin:
// substituting x -> x - 2 into x^3 + 2x^2 - 2x - 4 gives A = -4, B = 2
constexpr long long kShiftedA = -4;
constexpr long long kShiftedB = 2;
// Velu codomain y^2 = x^3 - 2A x^2 + (A^2 - 4B) x = x^3 + 8x^2 + 8x
constexpr long long kCodomainA = 8;
constexpr long long kCodomainB = 8;

} // namespace

TwoIsogenyCase::TwoIsogenyCase(const Prime& p)
    : p_(&p),
      curve_(p, Fp(p, 2), Fp::from_int(p, -2), Fp::from_int(p, -4)),
      kernel_(Point::affine(Fp::from_int(p, -2), Fp(p, 0))),
      iso_u_(p, 1),
      iso_r_(p, 0) {
    points_ = curve_.enumerate_affine();
    order_ = points_.size() + 1;
    trace_ = (long long)(p.value() + 1) - (long long)order_;

    // match y^2 = x^3 + 8x^2 + 8x against the curve under x -> u^2 x + r,
    // y -> u^3 y: the x^2 coefficient pins r for each u, the rest is checked
    Fp a2 = curve_.a2(), a4 = curve_.a4(), a6 = curve_.a6();
    Fp ca(p, kCodomainA), cb(p, kCodomainB);
    Fp third = Fp(p, 3).inv();
    for (std::uint64_t u = 1; u < p.value(); ++u) {
        Fp uu(p, u);
        Fp u2 = uu * uu, u4 = u2 * u2, u6 = u4 * u2;
        Fp r = (a2 * u2 - ca) * third;
        if (Fp(p, 3) * r * r + Fp(p, 2) * ca * r + cb != a4 * u4) continue;
        if (((r + ca) * r + cb) * r != a6 * u6) continue;
        iso_u_ = uu;
        iso_r_ = r;
        iso_found_ = true;
        break;
    }

    if (iso_found_) {
        image_.reserve(points_.size() / 2 + 1);
        for (const Point& P : points_) {
            Point img = apply(P);
            if (!img.is_infinity()) image_.push_back(img);
        }
        std::sort(image_.begin(), image_.end());
        image_.erase(std::unique(image_.begin(), image_.end()), image_.end());
        if ((image_.size() + 1) * 2 != order_)
            throw std::logic_error("TwoIsogenyCase: image does not have index 2");
    }
}

Point TwoIsogenyCase::velu(const Point& P) const {
    const Prime& p = *p_;
    if (P.is_infinity()) return Point::infinity();
    Fp xs = P.x() + Fp(p, 2);  // kernel shifted to the origin
    if (xs.is_zero()) return Point::infinity();
    Fp A = Fp::from_int(p, kShiftedA), B = Fp::from_int(p, kShiftedB);
    Fp X = xs + A + B / xs;
    Fp Y = P.y() * (Fp(p, 1) - B / (xs * xs));
    return Point::affine(X, Y);
}

Point TwoIsogenyCase::apply(const Point& P) const {
    if (!iso_found_) throw std::domain_error("TwoIsogenyCase: no rational isomorphism onto the curve");
    if (!curve_.contains(P)) throw std::domain_error("TwoIsogenyCase: point not on the curve");
    Point mid = velu(P);
    if (mid.is_infinity()) return mid;
    Fp u2 = iso_u_ * iso_u_;
    Point out = Point::affine((mid.x() - iso_r_) / u2, mid.y() / (u2 * iso_u_));
    if (!curve_.contains(out)) throw std::logic_error("TwoIsogenyCase: image left the curve");
    return out;
}

bool TwoIsogenyCase::in_image(const Point& P) const {
    if (P.is_infinity()) return true;
    return std::binary_search(image_.begin(), image_.end(), P);
}

TwoIsogenyCase build_two_isogeny(const Prime& p) { return TwoIsogenyCase(p); }

TwoIsogenySum two_isogeny_sum(const TwoIsogenyCase& c) {
    if (!c.has_endomorphism())
        throw std::domain_error("two_isogeny_sum: endomorphism was not realized over F_p");
    long long total = 0;
    for (const Point& P : c.points())
        total += c.in_image(P) ? (long long)P.x().lift() : -(long long)P.x().lift();
    long long p = (long long)c.prime().value();
    if (total % p != 0) throw std::runtime_error("two-isogeny sum not divisible by p");
    return {total, total / p};
}

} // namespace isosum
