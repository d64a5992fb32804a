// SPDX-License-Identifier: Apache-2.0
#include "isosum/fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace isosum {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t(uint128(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs with the first twelve primes
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (p <= 3 || p % 2 == 0 || p >= (std::uint64_t(1) << 63))
        throw std::invalid_argument("Prime: need an odd prime 3 < p < 2^63");
    if (!is_prime_u64(p)) throw std::invalid_argument("Prime: not a prime");
    mod3_ = unsigned(p % 3);
    mod4_ = unsigned(p % 4);
    if (mod3_ == 1) {
        // omega = (-1 + sqrt(-3)) / 2 for either root of -3; keep the smaller.
        auto roots = sqrt_raw(neg(3 % p_));
        std::uint64_t half = inv(2);
        std::uint64_t w0 = mul(sub(roots[0], 1), half);
        std::uint64_t w1 = mul(sub(roots[1], 1), half);
        omega_ = std::min(w0, w1);
        omega_sq_ = std::max(w0, w1);
    }
}

std::uint64_t Prime::omega() const {
    if (mod3_ != 1) throw std::domain_error("omega: requires p = 1 (mod 3)");
    return omega_;
}

std::uint64_t Prime::omega_sq() const {
    if (mod3_ != 1) throw std::domain_error("omega: requires p = 1 (mod 3)");
    return omega_sq_;
}

std::uint64_t Prime::reduce_signed(long long a) const {
    long long r = a % (long long)p_;
    if (r < 0) r += (long long)p_;
    return std::uint64_t(r);
}

std::uint64_t Prime::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;  // p < 2^63, no overflow
    return s >= p_ ? s - p_ : s;
}

std::uint64_t Prime::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t Prime::pow(std::uint64_t a, std::uint64_t e) const {
    return powmod(a, e, p_);
}

std::uint64_t Prime::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inv: division by zero");
    return pow(a, p_ - 2);
}

int Prime::legendre_raw(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    std::uint64_t e = pow(a, (p_ - 1) / 2);
    return e == 1 ? 1 : -1;  // e is 1 or p-1 for prime p
}

std::vector<std::uint64_t> Prime::sqrt_raw(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return {0};
    if (legendre_raw(a) != 1) return {};
    std::uint64_t r;
    if (mod4_ == 3) {
        r = pow(a, (p_ + 1) / 4);
    } else {
        // Tonelli-Shanks
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        std::uint64_t z = 2;
        while (legendre_raw(z) != -1) ++z;
        std::uint64_t c = pow(z, q);
        std::uint64_t t = pow(a, q);
        r = pow(a, (q + 1) / 2);
        int m = s;
        while (t != 1) {
            std::uint64_t t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            std::uint64_t b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
            r = mul(r, b);
            c = mul(b, b);
            t = mul(t, c);
            m = i;
        }
    }
    std::uint64_t other = p_ - r;
    return {std::min(r, other), std::max(r, other)};
}

unsigned Prime::cubic_exp_raw(std::uint64_t a) const {
    if (mod3_ != 1) throw std::domain_error("cubic symbol: requires p = 1 (mod 3)");
    a %= p_;
    if (a == 0) throw std::domain_error("cubic symbol: zero argument");
    std::uint64_t e = pow(a, (p_ - 1) / 3);
    if (e == 1) return 0;
    if (e == omega_) return 1;
    if (e == omega_sq_) return 2;
    throw std::logic_error("cubic symbol: value outside mu_3");
}

std::vector<Fp> sqrt_mod(const Fp& a) {
    std::vector<Fp> out;
    for (std::uint64_t r : a.field().sqrt_raw(a.lift())) out.emplace_back(a.field(), r);
    return out;
}

Fp canonical_omega(const Prime& p) { return Fp(p, p.omega()); }

Mu3 cubic_symbol(const Fp& a) { return Mu3(a.field().cubic_exp_raw(a.lift())); }

ResidueTables::ResidueTables(const Prime& p) : p_(&p) {
    std::uint64_t n = p.value();
    sqrt_.assign(n, kNone);
    for (std::uint64_t y = 0; y <= (n - 1) / 2; ++y) {
        std::uint64_t c = p.mul(y, y);
        if (sqrt_[c] == kNone) sqrt_[c] = y;
    }
    cube_roots_.assign(n, {0, 0, 0});
    cube_count_.assign(n, 0);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t c = p.mul(p.mul(x, x), x);
        cube_roots_[c][cube_count_[c]++] = x;
    }
    if (p.is_one_mod_3()) {
        cubic_.assign(n, 0xFF);
        for (std::uint64_t a = 1; a < n; ++a)
            cubic_[a] = std::uint8_t(p.cubic_exp_raw(a));
    }
}

uint128 sum_of_square_lifts(const Prime& p) {
    // t = 1 .. (p-1)/2 hits every nonzero square exactly once
    uint128 total = 0;
    std::uint64_t n = p.value();
    for (std::uint64_t t = 1; t <= (n - 1) / 2; ++t) total += p.mul(t, t);
    return total;
}

} // namespace isosum
