// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>

#include "isosum/isogeny3.hpp"

using namespace isosum;

namespace {

std::vector<std::uint64_t> square_ds(const Prime& p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 1; t <= (p.value() - 1) / 2; ++t) out.push_back(p.mul(t, t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> primes_one_mod_3(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (n % 3 == 1 && is_prime_u64(n)) out.push_back(n);
    return out;
}

} // namespace

TEST_CASE("fiber construction, p = 7, d = 1") {
    Prime p(7);
    FiberIsogeny fiber(p, Fp(p, 1));
    CHECK(fiber.d_prime().lift() == 1);  // -27 = 1 (mod 7)
    CHECK(fiber.alpha().lift() == 2);    // smaller root of -3 = 4
    CHECK(fiber.torsion_point() == Point::affine(Fp(p, 0), Fp(p, 6)));
    CHECK(fiber.image_size() == 4);  // (11 + 1) / 3
    std::set<std::pair<std::uint64_t, std::uint64_t>> img;
    for (auto& pt : fiber.image_affine()) img.insert({pt.x().lift(), pt.y().lift()});
    CHECK(img == std::set<std::pair<std::uint64_t, std::uint64_t>>{{3, 0}, {5, 0}, {6, 0}});
    CHECK(fiber.coset_rep() == Point::affine(Fp(p, 0), Fp(p, 1)));  // first non-image point
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(FiberIsogeny(Prime(11), Fp(Prime(11), 1)), std::domain_error);  // p = 2 mod 3
    Prime p(7);
    CHECK_THROWS_AS(FiberIsogeny(p, Fp(p, 3)), std::domain_error);  // non-square d
    CHECK_THROWS_AS(FiberIsogeny(p, Fp(p, 0)), std::domain_error);
}

TEST_CASE("isogeny values") {
    Prime p(7);
    FiberIsogeny f1(p, Fp(p, 1));
    CHECK(f1.apply(Point::infinity()).is_infinity());
    CHECK(f1.apply(Point::affine(Fp(p, 0), Fp(p, 1))).is_infinity());  // kernel
    CHECK(f1.apply(Point::affine(Fp(p, 0), Fp(p, 6))).is_infinity());
    CHECK_THROWS_AS(f1.apply(Point::affine(Fp(p, 0), Fp(p, 2))), std::domain_error);

    // delta with delta^3 = -4d lands on T: p = 7, d = 2, -8 = 6 = 3^3
    FiberIsogeny f2(p, Fp(p, 2));
    CHECK(f2.alpha().lift() == 1);  // sqrt(-6) = sqrt(1)
    Point delta = Point::affine(Fp(p, 3), Fp(p, 1));
    CHECK(f2.domain().contains(delta));
    CHECK(f2.apply(delta) == f2.torsion_point());
    CHECK(f2.character(f2.torsion_point()).is_one());  // -4d is a cube here
}

TEST_CASE("pairing function and its pulled-back cube root") {
    Prime p(7);
    FiberIsogeny f(p, Fp(p, 1));
    CHECK(f.pairing_function(f.torsion_point()).is_zero());
    Point minus_t = f.codomain().negate(f.torsion_point());
    CHECK(f.pairing_function(minus_t) == Fp::from_int(p, -6) * f.alpha());
    CHECK_THROWS_AS(f.pairing_function(Point::infinity()), std::domain_error);
    CHECK_THROWS_AS(f.pairing_cube_root(Point::affine(Fp(p, 0), Fp(p, 1))), std::domain_error);
    CHECK_THROWS_AS(f.pairing_cube_root(Point::infinity()), std::domain_error);
}

TEST_CASE("cube identity, exhaustive to 61") {
    for (std::uint64_t q : primes_one_mod_3(7, 61)) {
        Prime p(q);
        auto tables = std::make_shared<const ResidueTables>(p);
        for (std::uint64_t d : square_ds(p)) {
            FiberIsogeny f(p, Fp(p, d), tables);
            for (const Point& P : f.domain().enumerate_affine(*tables)) {
                if (P.x().is_zero()) continue;
                Fp g = f.pairing_cube_root(P);
                CHECK(f.pairing_function(f.apply(P)) == g * g * g);
            }
        }
    }
}

TEST_CASE("character homomorphism and image law, exhaustive to 31") {
    for (std::uint64_t q : primes_one_mod_3(7, 31)) {
        Prime p(q);
        auto tables = std::make_shared<const ResidueTables>(p);
        for (std::uint64_t d : square_ds(p)) {
            FiberIsogeny f(p, Fp(p, d), tables);
            std::vector<Point> pts = f.codomain_points();
            pts.push_back(Point::infinity());
            for (auto& a : pts) {
                // trivial exactly on the image
                CHECK(f.character(a).is_one() == f.in_image(a));
                for (auto& b : pts) {
                    Point ab = f.codomain().add(a, b);
                    CHECK(f.character(ab) == f.character(a) * f.character(b));
                    // the image is a subgroup
                    if (f.in_image(a) && f.in_image(b)) CHECK(f.in_image(ab));
                }
            }
        }
    }
}

TEST_CASE("closed-form and coset characters agree up to conjugation, to 61") {
    for (std::uint64_t q : primes_one_mod_3(7, 61)) {
        Prime p(q);
        auto tables = std::make_shared<const ResidueTables>(p);
        for (std::uint64_t d : square_ds(p)) {
            FiberIsogeny f(p, Fp(p, d), tables);
            CosetRelation rel = f.coset_relation();
            std::vector<Point> pts = f.codomain_points();
            pts.push_back(Point::infinity());
            for (auto& pt : pts) {
                Mu3 tate = f.character(pt);
                Mu3 coset = f.character_by_coset(pt);
                if (rel == CosetRelation::equal) {
                    CHECK(coset == tate);
                } else {
                    CHECK(coset == tate.conjugate());
                }
            }
        }
    }
}

TEST_CASE("image cardinality") {
    for (std::uint64_t q : primes_one_mod_3(7, 43)) {
        Prime p(q);
        auto tables = std::make_shared<const ResidueTables>(p);
        for (std::uint64_t d : square_ds(p)) {
            FiberIsogeny f(p, Fp(p, d), tables);
            std::size_t order = f.domain().enumerate_affine(*tables).size() + 1;
            CHECK(f.image_size() * 3 == order);
            std::size_t codomain_order = f.codomain_points().size() + 1;
            CHECK(codomain_order == order);  // isogenous curves, equal counts
        }
    }
}

TEST_CASE("fiber sums at p = 7") {
    Prime p(7);
    auto s1 = FiberIsogeny(p, Fp(p, 1)).sum();
    auto s2 = FiberIsogeny(p, Fp(p, 2)).sum();
    auto s4 = FiberIsogeny(p, Fp(p, 4)).sum();
    CHECK(s1.value == 7);
    CHECK(s1.parts == CyclotomicSum{14, 7, 7});
    CHECK(s2.value == -14);
    CHECK(s4.value == 0);
    CHECK(s1.value + s2.value + s4.value == -7);
}

TEST_CASE("fiber sums are integers divisible by p, to 103") {
    for (std::uint64_t q : primes_one_mod_3(7, 103)) {
        Prime p(q);
        auto tables = std::make_shared<const ResidueTables>(p);
        for (std::uint64_t d : square_ds(p)) {
            auto fs = FiberIsogeny(p, Fp(p, d), tables).sum();
            CHECK(fs.parts.is_integral());
            CHECK(fs.value % int128(q) == 0);
        }
    }
}

TEST_CASE("coset route gives the same integers") {
    for (std::uint64_t q : primes_one_mod_3(7, 31)) {
        Prime p(q);
        auto tables = std::make_shared<const ResidueTables>(p);
        for (std::uint64_t d : square_ds(p)) {
            FiberIsogeny f(p, Fp(p, d), tables);
            CHECK(f.sum(CharRoute::coset).value == f.sum(CharRoute::tate).value);
        }
    }
}

TEST_CASE("sum is independent of the coset representative") {
    for (std::uint64_t q : primes_one_mod_3(7, 31)) {
        Prime p(q);
        auto tables = std::make_shared<const ResidueTables>(p);
        for (std::uint64_t d : square_ds(p)) {
            FiberIsogeny f(p, Fp(p, d), tables);
            int128 reference = f.sum().value;
            for (const Point& q_pt : f.coset_rep_choices(3))
                CHECK(f.sum_with_rep(q_pt).value == reference);
        }
    }
}

TEST_CASE("conjugating the root of unity fixes the integer") {
    Prime p(13);
    auto tables = std::make_shared<const ResidueTables>(p);
    for (std::uint64_t d : square_ds(p)) {
        FiberIsogeny f(p, Fp(p, d), tables);
        // rebuilding the sum with conjugated characters swaps the zeta buckets
        CyclotomicSum conj;
        for (const Point& pt : f.codomain_points())
            conj.add(f.character(pt).conjugate().exponent(), pt.x().lift());
        auto fs = f.sum();
        CHECK(conj == fs.parts.conjugate());
        CHECK(conj.integer_value() == fs.value);
    }
}

TEST_CASE("non-square d degenerates to a surjective map") {
    for (std::uint64_t q : {7ull, 13ull}) {
        Prime p(q);
        ResidueTables tables(p);
        for (std::uint64_t d = 1; d < q; ++d) {
            if (p.legendre_raw(d) != -1) continue;
            Fp dd(p, d);
            Curve domain = Curve::mordell(p, dd);
            Curve codomain = Curve::mordell(p, Fp::from_int(p, -27) * dd);
            std::set<std::pair<std::uint64_t, std::uint64_t>> image;
            for (const Point& P : domain.enumerate_affine(tables)) {
                Point img = mordell_isogeny(p, dd, P);
                if (!img.is_infinity()) image.insert({img.x().lift(), img.y().lift()});
            }
            std::set<std::pair<std::uint64_t, std::uint64_t>> full;
            for (const Point& P : codomain.enumerate_affine(tables))
                full.insert({P.x().lift(), P.y().lift()});
            CHECK(image == full);
        }
    }
}
