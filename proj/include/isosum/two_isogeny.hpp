// SPDX-License-Identifier: Apache-2.0
#pragma once

// The motivating degree-2 case: y^2 = (x + 2)(x^2 - 2), which carries
// multiplication by sqrt(-2). The map is realized as the Velu isogeny with
// kernel (-2, 0) composed with a rational isomorphism back onto the curve;
// the attached quadratic character is +1 exactly on the image, and the
// x-weighted sum divides by p at ordinary primes.

#include <cstdint>
#include <vector>

#include "isosum/curve.hpp"
#include "isosum/fp.hpp"

namespace isosum {

class TwoIsogenyCase {
public:
    explicit TwoIsogenyCase(const Prime& p);

    const Prime& prime() const { return *p_; }
    const Curve& curve() const { return curve_; }
    const Point& kernel_point() const { return kernel_; }
    std::uint64_t group_order() const { return order_; }
    long long trace() const { return trace_; }
    bool ordinary() const { return trace_ != 0; }
    // True when the Velu codomain admits a rational isomorphism back onto the
    // curve; the endomorphism and its sum exist only in that case.
    bool has_endomorphism() const { return iso_found_; }

    Point apply(const Point& P) const;  // requires has_endomorphism()
    bool in_image(const Point& P) const;
    const std::vector<Point>& image_affine() const { return image_; }
    const std::vector<Point>& points() const { return points_; }

private:
    Point velu(const Point& P) const;  // onto y^2 = x^3 + 8x^2 + 8x

    const Prime* p_;
    Curve curve_;   // y^2 = x^3 + 2x^2 - 2x - 4
    Point kernel_;  // (-2, 0)
    std::vector<Point> points_;
    std::uint64_t order_ = 0;
    long long trace_ = 0;
    bool iso_found_ = false;
    Fp iso_u_, iso_r_;  // x -> u^2 x + r carries the curve onto the codomain
    std::vector<Point> image_;
};

TwoIsogenyCase build_two_isogeny(const Prime& p);

struct TwoIsogenySum {
    long long value = 0;
    long long quotient = 0;  // value / p
};

// sum {x(P)} chi(P) with chi = +1 on the image and -1 off it; checks p
// divides the result. Requires a built endomorphism.
TwoIsogenySum two_isogeny_sum(const TwoIsogenyCase& c);

} // namespace isosum
