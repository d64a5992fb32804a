// SPDX-License-Identifier: Apache-2.0
#pragma once

// h*(p): the class number of Q(sqrt(-p)) for p = 3 (mod 4) and 0 otherwise,
// computed two independent ways: Dirichlet's weighted character sum and an
// exhaustive count of reduced primitive binary quadratic forms of
// discriminant -p.

#include <cstdint>

#include "isosum/fp.hpp"

namespace isosum {

enum class HStarMethod { dirichlet, forms };

struct HStarResult {
    std::uint64_t p = 0;
    std::uint64_t h_star = 0;
    HStarMethod method = HStarMethod::dirichlet;
};

// -(1/p) * sum x (x/p); checks divisibility and positivity for p = 3 (mod 4).
HStarResult h_star_dirichlet(const Prime& p);

// Count of reduced forms (a, b, c), b^2 - 4ac = -p, |b| <= a <= c,
// gcd(a, b, c) = 1, b > 0 at the reduction boundary.
HStarResult h_star_forms(const Prime& p);

// sum_{x=1}^{p-1} x (x/p) as an exact integer (Dirichlet's sum).
int128 dirichlet_weighted_sum(const Prime& p);

} // namespace isosum
