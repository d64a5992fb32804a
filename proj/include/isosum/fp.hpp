// SPDX-License-Identifier: Apache-2.0
#pragma once

// Arithmetic in F_p for odd word-size primes p > 3: canonical lifts, powers,
// inverses, quadratic/cubic residue symbols, square roots, and the per-prime
// lookup tables used by the exhaustive sweeps.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "isosum/int128.hpp"

namespace isosum {

bool is_prime_u64(std::uint64_t n);

// An odd prime p > 3, validated at construction. All element arithmetic is
// routed through the raw helpers here; products use 128-bit intermediates so
// any p < 2^63 is safe.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const { return p_; }
    unsigned mod3() const { return mod3_; }
    unsigned mod4() const { return mod4_; }
    bool is_one_mod_3() const { return mod3_ == 1; }

    // The root of t^2 + t + 1 with the smaller lift; this is the cube root of
    // unity declared to correspond to zeta. Requires p = 1 (mod 3).
    std::uint64_t omega() const;
    std::uint64_t omega_sq() const;

    std::uint64_t reduce(std::uint64_t a) const { return a % p_; }
    std::uint64_t reduce_signed(long long a) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return std::uint64_t(uint128(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws on a = 0

    int legendre_raw(std::uint64_t a) const;
    std::vector<std::uint64_t> sqrt_raw(std::uint64_t a) const;
    unsigned cubic_exp_raw(std::uint64_t a) const;  // a != 0, p = 1 (mod 3)

    bool operator==(const Prime& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
    unsigned mod3_;
    unsigned mod4_;
    std::uint64_t omega_ = 0;
    std::uint64_t omega_sq_ = 0;
};

// A cube root of unity zeta^k held as the exponent k in {0,1,2}.
class Mu3 {
public:
    constexpr Mu3() = default;
    constexpr explicit Mu3(unsigned k) : k_(static_cast<std::uint8_t>(k % 3)) {}

    static constexpr Mu3 one() { return Mu3(0); }
    unsigned exponent() const { return k_; }
    bool is_one() const { return k_ == 0; }
    Mu3 conjugate() const { return Mu3(2u * k_); }
    Mu3 pow(unsigned e) const { return Mu3(k_ * (e % 3)); }

    friend Mu3 operator*(Mu3 a, Mu3 b) { return Mu3(unsigned(a.k_) + b.k_); }
    bool operator==(const Mu3&) const = default;

private:
    std::uint8_t k_ = 0;
};

// Residue mod p in canonical form 0 <= value < p.
class Fp {
public:
    Fp() = default;
    Fp(const Prime& p, std::uint64_t v) : v_(p.reduce(v)), p_(&p) {}
    static Fp from_int(const Prime& p, long long v) { return Fp(p, p.reduce_signed(v), 0); }

    std::uint64_t lift() const { return v_; }
    const Prime& field() const { return *p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(*p_, p_->neg(v_), 0); }
    friend Fp operator+(Fp a, Fp b) { return Fp(a.field(), a.field().add(a.v_, b.v_), 0); }
    friend Fp operator-(Fp a, Fp b) { return Fp(a.field(), a.field().sub(a.v_, b.v_), 0); }
    friend Fp operator*(Fp a, Fp b) { return Fp(a.field(), a.field().mul(a.v_, b.v_), 0); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    Fp pow(std::uint64_t e) const { return Fp(*p_, p_->pow(v_, e), 0); }
    Fp inv() const { return Fp(*p_, p_->inv(v_), 0); }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

private:
    Fp(const Prime& p, std::uint64_t v, int /*already reduced*/) : v_(v), p_(&p) {}
    std::uint64_t v_ = 0;
    const Prime* p_ = nullptr;
};

// Canonical lift {a}: the unique integer in [0, p-1] congruent to a.
inline std::uint64_t lift(const Fp& a) { return a.lift(); }

// Quadratic residue symbol: 0 at zero, +1 on nonzero squares, -1 otherwise.
inline int legendre(const Fp& a) { return a.field().legendre_raw(a.lift()); }

// Square roots of a: two roots (ascending) for a nonzero residue, {0} for
// zero, empty for a non-residue.
std::vector<Fp> sqrt_mod(const Fp& a);

// The root of t^2 + t + 1 (mod p) with the smaller lift.
Fp canonical_omega(const Prime& p);

// Cubic residue symbol (a/p)_3 as a power of the canonical omega.
Mu3 cubic_symbol(const Fp& a);

// Per-prime lookup tables: smallest square roots, cubic symbol exponents and
// cube-root buckets. Costs O(p) memory; built once per prime and shared by
// the O(p^2) sweeps.
class ResidueTables {
public:
    explicit ResidueTables(const Prime& p);

    const Prime& prime() const { return *p_; }

    bool is_square(std::uint64_t a) const {  // nonzero squares only
        return a != 0 && sqrt_[a] != kNone;
    }
    int legendre(std::uint64_t a) const {
        return a == 0 ? 0 : (sqrt_[a] != kNone ? 1 : -1);
    }
    // smallest root, provided a has one
    std::uint64_t sqrt_smaller(std::uint64_t a) const { return sqrt_[a]; }

    unsigned cubic_exp(std::uint64_t a) const { return cubic_[a]; }  // a != 0

    unsigned cube_root_count(std::uint64_t c) const { return cube_count_[c]; }
    const std::array<std::uint64_t, 3>& cube_roots(std::uint64_t c) const {
        return cube_roots_[c];
    }

    static constexpr std::uint64_t kNone = ~std::uint64_t(0);

private:
    const Prime* p_;
    std::vector<std::uint64_t> sqrt_;
    std::vector<std::uint8_t> cubic_;
    std::vector<std::array<std::uint64_t, 3>> cube_roots_;
    std::vector<std::uint8_t> cube_count_;
};

// Sum of the lifts of the (p-1)/2 distinct nonzero squares mod p. Feeds both
// Dirichlet's class number sum and the closed-form surface sum, each of which
// reduces to it; O(p) time, O(1) memory.
uint128 sum_of_square_lifts(const Prime& p);

} // namespace isosum
