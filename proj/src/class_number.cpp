// SPDX-License-Identifier: Apache-2.0
#include "isosum/class_number.hpp"

#include <numeric>
#include <stdexcept>

namespace isosum {

int128 dirichlet_weighted_sum(const Prime& p) {
    // sum x (x/p) = 2 * (sum over squares) - sum over all x
    int128 n = p.value();
    return 2 * int128(sum_of_square_lifts(p)) - n * (n - 1) / 2;
}

HStarResult h_star_dirichlet(const Prime& p) {
    HStarResult out{p.value(), 0, HStarMethod::dirichlet};
    if (p.mod4() == 1) return out;
    int128 sum = dirichlet_weighted_sum(p);
    int128 q = p.value();
    if (sum % q != 0 || sum >= 0)
        throw std::runtime_error("Dirichlet sum is not a negative multiple of p");
    out.h_star = std::uint64_t(-(sum / q));
    return out;
}

HStarResult h_star_forms(const Prime& p) {
    HStarResult out{p.value(), 0, HStarMethod::forms};
    if (p.mod4() == 1) return out;
    std::uint64_t n = p.value();
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; 3 * a * a <= n; ++a) {
        for (long long b = -(long long)a; b <= (long long)a; ++b) {
            if ((b & 1) == 0) continue;  // -p odd forces b odd
            std::uint64_t b2 = std::uint64_t(b * b);
            if ((b2 + n) % (4 * a) != 0) continue;
            std::uint64_t c = (b2 + n) / (4 * a);
            if (c < a) continue;
            std::uint64_t babs = std::uint64_t(b < 0 ? -b : b);
            if (std::gcd(std::gcd(a, babs), c) != 1) continue;
            if ((babs == a || a == c) && b < 0) continue;
            ++count;
        }
    }
    out.h_star = count;
    return out;
}

} // namespace isosum
