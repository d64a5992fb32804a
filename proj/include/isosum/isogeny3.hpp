// SPDX-License-Identifier: Apache-2.0
#pragma once

// The rational 3-isogeny between y^2 = x^3 + d and y^2 = x^3 - 27d for a
// square d mod p, p = 1 (mod 3). Carries the Tate-pairing functions, the
// attached cubic character computed two independent ways (closed formulas vs
// coset membership), and the x-weighted character sum over the codomain.

#include <cstdint>
#include <memory>
#include <vector>

#include "isosum/curve.hpp"
#include "isosum/fp.hpp"
#include "isosum/int128.hpp"

namespace isosum {

// Integer combination A + B zeta + C zeta^2; a rational integer exactly when
// B = C, with value A - B.
struct CyclotomicSum {
    int128 c0 = 0, c1 = 0, c2 = 0;

    void add(unsigned exponent, std::uint64_t weight) {
        switch (exponent % 3) {
            case 0: c0 += weight; break;
            case 1: c1 += weight; break;
            default: c2 += weight; break;
        }
    }
    bool is_integral() const { return c1 == c2; }
    int128 integer_value() const;  // throws when c1 != c2
    CyclotomicSum conjugate() const { return {c0, c2, c1}; }

    CyclotomicSum& operator+=(const CyclotomicSum& o) {
        c0 += o.c0;
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    bool operator==(const CyclotomicSum&) const = default;
};

// tau(x, y) = ((y^2 + 3d)/x^2, y(x^3 - 8d)/x^3) on y^2 = x^3 + d, with the
// subgroup at x = 0 (and infinity) mapping to infinity.
Point mordell_isogeny(const Prime& p, Fp d, const Point& P);

enum class CharRoute { tate, coset };
enum class CosetRelation { equal, conjugate };

struct FiberSum {
    CyclotomicSum parts;
    int128 value = 0;      // parts as a rational integer
    int128 quotient = 0;   // value / p
};

class FiberIsogeny {
public:
    // Requires p = 1 (mod 3) and d a nonzero square mod p. Precomputes the
    // codomain points, the image set and a coset representative; shares the
    // residue tables when given (fibers of one prime reuse them).
    FiberIsogeny(const Prime& p, Fp d,
                 std::shared_ptr<const ResidueTables> tables = nullptr);

    const Prime& prime() const { return *p_; }
    Fp d() const { return d_; }
    Fp d_prime() const { return d_prime_; }
    Fp alpha() const { return alpha_; }  // chosen square root of -3d
    const Curve& domain() const { return domain_; }
    const Curve& codomain() const { return codomain_; }
    // (0, 3 alpha): generates the rational kernel of the dual isogeny
    const Point& torsion_point() const { return torsion_; }
    const Point& coset_rep() const { return coset_rep_; }
    const std::shared_ptr<const ResidueTables>& tables() const { return tables_; }

    Point apply(const Point& P) const;

    // f with divisor 3[T] - 3[infinity]: y - 3 alpha, and the function whose
    // cube is its pullback: (y - alpha)/x.
    Fp pairing_function(const Point& P) const;
    Fp pairing_cube_root(const Point& P) const;

    // Closed-form character: on the x = 0 subgroup the cubic symbol of -4d
    // raised to the multiple of T, elsewhere the symbol of y - 3 alpha.
    Mu3 character(const Point& P) const;
    // Definitional character: the unique k with P - kQ in the image.
    Mu3 character_by_coset(const Point& P) const { return character_by_coset(coset_rep_, P); }
    Mu3 character_by_coset(const Point& Q, const Point& P) const;
    // Whether the two routes agree pointwise or are conjugate pointwise.
    CosetRelation coset_relation() const;

    bool in_image(const Point& P) const;
    const std::vector<Point>& image_affine() const { return image_; }
    std::size_t image_size() const { return image_.size() + 1; }  // with infinity
    const std::vector<Point>& codomain_points() const { return codomain_points_; }
    // First `count` valid coset representatives in enumeration order.
    std::vector<Point> coset_rep_choices(std::size_t count) const;

    // Sum of {x(P)} zeta^chi(P) over the affine codomain points. Checks the
    // result is a rational integer divisible by p and throws otherwise.
    FiberSum sum(CharRoute route = CharRoute::tate) const;
    FiberSum sum_with_rep(const Point& Q) const;

    Mu3 minus_4d_symbol() const { return minus_4d_symbol_; }

private:
    Mu3 symbol(std::uint64_t a) const;
    FiberSum finish_sum(const CyclotomicSum& parts) const;

    const Prime* p_;
    Fp d_, d_prime_, alpha_;
    Curve domain_, codomain_;
    Point torsion_;
    Mu3 minus_4d_symbol_;
    std::shared_ptr<const ResidueTables> tables_;
    std::vector<Point> codomain_points_;
    std::vector<Point> image_;  // sorted affine image, infinity implicit
    Point coset_rep_;
};

} // namespace isosum
