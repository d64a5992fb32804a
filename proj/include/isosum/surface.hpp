// SPDX-License-Identifier: Apache-2.0
#pragma once

// The elliptic surface y^2 = x^3 + z^2 over F_p minus its singular fiber at
// z = 0, the global degree-3 map gluing the fiberwise isogenies, its cubic
// character, and the global x-weighted character sum computed three ways:
// fiberwise, as the literal triple sum, and by the O(p) closed form.

#include <cstdint>

#include "isosum/fp.hpp"
#include "isosum/isogeny3.hpp"

namespace isosum {

class SurfacePoint {
public:
    // throws unless z != 0 and y^2 = x^3 + z^2
    SurfacePoint(Fp x, Fp y, Fp z);

    Fp x() const { return x_; }
    Fp y() const { return y_; }
    Fp z() const { return z_; }  // fiber coordinate

    bool operator==(const SurfacePoint&) const = default;

private:
    Fp x_, y_, z_;
};

enum class SurfaceMethod { fiberwise, direct, fast };

struct SurfaceSumResult {
    std::uint64_t p = 0;
    CyclotomicSum total;
    int128 integer_value = 0;
    long long quotient = 0;  // integer_value / p
    SurfaceMethod method = SurfaceMethod::fiberwise;
};

// The glued map: acts fiberwise as the 3-isogeny, sends the fiber over z to
// the fiber over -27z. Requires x != 0 (the fiberwise kernel).
SurfacePoint surface_apply(const SurfacePoint& pt);

// The glued character. Trivial exactly on the image of surface_apply.
Mu3 surface_character(const SurfacePoint& pt);

// Global sum over all fibers as 2 * (sum over distinct square d).
SurfaceSumResult surface_sum_fiberwise(const Prime& p, int workers = 1);
// Global sum as the literal triple sum over z, y and the cube roots bucket.
SurfaceSumResult surface_sum_direct(const Prime& p, int workers = 1);
// Closed form -2 * sum of nonzero-square lifts; O(p).
SurfaceSumResult surface_sum_fast(const Prime& p);

// Inner z-sum for fixed x != 0, y, in closed form: 0 unless y^2 - x^3 is a
// nonzero square, else 2 when y + sqrt(y^2 - x^3) is a cube and -1 otherwise.
int xy_inner_sum(const Prime& p, std::uint64_t x, std::uint64_t y,
                 const ResidueTables* tables = nullptr);

// Sum of xy_inner_sum over all y; checked against its closed form
// -1 - legendre(x) and throwing on mismatch.
long long row_character_sum(const Prime& p, std::uint64_t x,
                            const ResidueTables* tables = nullptr);

// |{y : y^2 - x^3 is a nonzero square}| for fixed x != 0.
long long count_y_quadratic(const Prime& p, std::uint64_t x,
                            const ResidueTables* tables = nullptr);

} // namespace isosum
