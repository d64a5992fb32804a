// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <set>

#include "isosum/curve.hpp"

using namespace isosum;

namespace {

std::vector<std::uint64_t> square_ds(const Prime& p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 1; t <= (p.value() - 1) / 2; ++t) out.push_back(p.mul(t, t));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("curve membership") {
    Prime p(7);
    Curve e1 = Curve::mordell(p, Fp(p, 1));
    CHECK(e1.contains(Point::affine(Fp(p, 0), Fp(p, 1))));
    CHECK_FALSE(e1.contains(Point::affine(Fp(p, 0), Fp(p, 2))));
    CHECK(e1.contains(Point::infinity()));
}

TEST_CASE("singular curves are rejected") {
    Prime p(7);
    CHECK_THROWS_AS(Curve::mordell(p, Fp(p, 0)), std::invalid_argument);
    // (t - 1)^2 (t + 2) = t^3 - 3t + 2
    CHECK_THROWS_AS(Curve(p, Fp(p, 0), Fp::from_int(p, -3), Fp(p, 2)), std::invalid_argument);
}

TEST_CASE("group law basics") {
    Prime p(7);
    Curve e1 = Curve::mordell(p, Fp(p, 1));
    Point t = Point::affine(Fp(p, 0), Fp(p, 1));
    Point inf = Point::infinity();

    CHECK(e1.add(t, inf) == t);
    CHECK(e1.add(inf, t) == t);
    CHECK(e1.add(t, e1.negate(t)) == inf);
    CHECK(e1.add(t, t) == Point::affine(Fp(p, 0), Fp(p, 6)));

    CHECK(e1.scalar_mul(0, t) == inf);
    CHECK(e1.scalar_mul(1, t) == t);
    CHECK(e1.scalar_mul(3, t) == inf);  // (0, 1) is 3-torsion: x = 0 forces y^2 = d
    CHECK(e1.scalar_mul(-1, t) == e1.negate(t));
    CHECK(e1.scalar_mul(-2, t) == e1.negate(e1.add(t, t)));
}

TEST_CASE("enumeration of E_1 over F_7") {
    Prime p(7);
    Curve e1 = Curve::mordell(p, Fp(p, 1));
    auto pts = e1.enumerate_affine();
    CHECK(pts.size() == 11);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (auto& pt : pts) {
        CHECK(e1.contains(pt));
        seen.insert({pt.x().lift(), pt.y().lift()});
    }
    CHECK(seen.size() == pts.size());  // no duplicates
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    // x^3 = -1 has three roots mod 7
    CHECK(seen.count({3, 0}));
    CHECK(seen.count({5, 0}));
    CHECK(seen.count({6, 0}));

    ResidueTables tables(p);
    CHECK(e1.enumerate_affine(tables) == pts);
}

TEST_CASE("group axioms, exhaustive for small curves") {
    auto check_curve = [](const Curve& e) {
        auto pts = e.enumerate_affine();
        pts.push_back(Point::infinity());
        for (auto& a : pts) {
            CHECK(e.add(a, Point::infinity()) == a);
            CHECK(e.add(a, e.negate(a)).is_infinity());
            for (auto& b : pts) {
                Point ab = e.add(a, b);
                CHECK(e.contains(ab));
                CHECK(ab == e.add(b, a));
            }
        }
        for (auto& a : pts)
            for (auto& b : pts)
                for (auto& c : pts)
                    CHECK(e.add(e.add(a, b), c) == e.add(a, e.add(b, c)));
    };
    Prime p7(7), p13(13), p31(31), p11(11);
    check_curve(Curve::mordell(p7, Fp(p7, 1)));
    check_curve(Curve::mordell(p7, Fp(p7, 2)));
    check_curve(Curve::mordell(p13, Fp(p13, 1)));
    check_curve(Curve::mordell(p31, Fp(p31, 4)));
    // a curve with a full general equation
    check_curve(Curve(p11, Fp(p11, 2), Fp::from_int(p11, -2), Fp::from_int(p11, -4)));
}

TEST_CASE("Hasse interval") {
    for (std::uint64_t q : {7ull, 13ull, 31ull, 61ull, 103ull, 199ull}) {
        Prime p(q);
        for (std::uint64_t d = 1; d <= 6 && d < q; ++d) {
            Curve e = Curve::mordell(p, Fp(p, d));
            double n = double(e.enumerate_affine().size() + 1);
            double center = double(q) + 1.0;
            CHECK(std::abs(n - center) <= 2.0 * std::sqrt(double(q)) + 1e-9);
        }
    }
}

TEST_CASE("order divisible by 3 on fibers with rational 3-torsion") {
    for (std::uint64_t q : {7ull, 13ull, 19ull, 31ull}) {
        Prime p(q);
        for (std::uint64_t d : square_ds(p)) {
            Curve e = Curve::mordell(p, Fp(p, d));
            CHECK((e.enumerate_affine().size() + 1) % 3 == 0);
            Point t = Point::affine(Fp(p, 0), sqrt_mod(Fp(p, d)).at(0));
            CHECK(e.contains(t));
            CHECK(!e.scalar_mul(1, t).is_infinity());
            CHECK(!e.add(t, t).is_infinity());
            CHECK(e.scalar_mul(3, t).is_infinity());
        }
    }
}
