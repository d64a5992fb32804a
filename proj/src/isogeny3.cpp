// SPDX-License-Identifier: Apache-2.0
#include "isosum/isogeny3.hpp"

#include <algorithm>
#include <stdexcept>

namespace isosum {

int128 CyclotomicSum::integer_value() const {
    if (c1 != c2)
        throw std::runtime_error("cyclotomic sum is not a rational integer (zeta buckets differ)");
    return c0 - c1;
}

namespace {

Fp checked_fiber_parameter(const Prime& p, Fp d) {
    if (!p.is_one_mod_3()) throw std::domain_error("FiberIsogeny: requires p = 1 (mod 3)");
    if (legendre(d) != 1) throw std::domain_error("FiberIsogeny: d must be a nonzero square mod p");
    return d;
}

} // namespace

Point mordell_isogeny(const Prime& p, Fp d, const Point& P) {
    Curve domain = Curve::mordell(p, d);
    if (!domain.contains(P)) throw std::domain_error("mordell_isogeny: point not on y^2 = x^3 + d");
    if (P.is_infinity() || P.x().is_zero()) return Point::infinity();
    Fp x = P.x(), y = P.y();
    Fp x2 = x * x, x3 = x2 * x;
    Fp xi = (y * y + Fp(p, 3) * d) / x2;
    Fp eta = y * (x3 - Fp(p, 8) * d) / x3;
    return Point::affine(xi, eta);
}

FiberIsogeny::FiberIsogeny(const Prime& p, Fp d, std::shared_ptr<const ResidueTables> tables)
    : p_(&p),
      d_(checked_fiber_parameter(p, d)),
      d_prime_(Fp::from_int(p, -27) * d),
      alpha_(p, 0),
      domain_(Curve::mordell(p, d)),
      codomain_(Curve::mordell(p, d_prime_)),
      tables_(std::move(tables)) {
    if (!tables_) tables_ = std::make_shared<ResidueTables>(p);

    auto roots = sqrt_mod(Fp::from_int(p, -3) * d);
    alpha_ = roots.at(0);  // smaller lift
    torsion_ = Point::affine(Fp(p, 0), Fp(p, 3) * alpha_);
    if (!codomain_.contains(torsion_)) throw std::logic_error("FiberIsogeny: T not on codomain");
    minus_4d_symbol_ = symbol((Fp::from_int(p, -4) * d).lift());

    codomain_points_ = codomain_.enumerate_affine(*tables_);

    std::vector<Point> domain_points = domain_.enumerate_affine(*tables_);
    image_.reserve(domain_points.size() / 3 + 1);
    for (const Point& P : domain_points) {
        Point img = apply(P);
        if (!img.is_infinity()) image_.push_back(img);
    }
    std::sort(image_.begin(), image_.end());
    image_.erase(std::unique(image_.begin(), image_.end()), image_.end());

    // |image| (with infinity) is one third of the group order
    if ((image_.size() + 1) * 3 != domain_points.size() + 1)
        throw std::logic_error("FiberIsogeny: image does not have index 3");

    bool found = false;
    for (const Point& P : codomain_points_) {
        if (!in_image(P)) {
            coset_rep_ = P;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("FiberIsogeny: no point outside the image");
}

Point FiberIsogeny::apply(const Point& P) const {
    Point img = mordell_isogeny(*p_, d_, P);
    if (!codomain_.contains(img)) throw std::logic_error("FiberIsogeny: image left the codomain");
    return img;
}

Fp FiberIsogeny::pairing_function(const Point& P) const {
    if (P.is_infinity()) throw std::domain_error("pairing_function: pole at infinity");
    return P.y() - Fp(*p_, 3) * alpha_;
}

Fp FiberIsogeny::pairing_cube_root(const Point& P) const {
    if (P.is_infinity() || P.x().is_zero())
        throw std::domain_error("pairing_cube_root: undefined on the kernel subgroup");
    return (P.y() - alpha_) / P.x();
}

Mu3 FiberIsogeny::symbol(std::uint64_t a) const {
    if (tables_) return Mu3(tables_->cubic_exp(a));
    return Mu3(p_->cubic_exp_raw(a));
}

Mu3 FiberIsogeny::character(const Point& P) const {
    if (P.is_infinity()) return Mu3::one();
    if (P.x().is_zero()) {
        unsigned k = (P.y() == torsion_.y()) ? 1 : 2;
        return minus_4d_symbol_.pow(k);
    }
    return symbol(pairing_function(P).lift());
}

Mu3 FiberIsogeny::character_by_coset(const Point& Q, const Point& P) const {
    Point shifted = P;
    for (unsigned k = 0; k < 3; ++k) {
        if (shifted.is_infinity() || in_image(shifted)) return Mu3(k);
        shifted = codomain_.sub(shifted, Q);
    }
    throw std::logic_error("character_by_coset: no multiple of Q reaches the image");
}

CosetRelation FiberIsogeny::coset_relation() const {
    for (const Point& P : codomain_points_) {
        unsigned t = character(P).exponent();
        if (t == 0) continue;
        return character_by_coset(P).exponent() == t ? CosetRelation::equal
                                                     : CosetRelation::conjugate;
    }
    throw std::logic_error("coset_relation: character has no nontrivial value");
}

bool FiberIsogeny::in_image(const Point& P) const {
    if (P.is_infinity()) return true;
    return std::binary_search(image_.begin(), image_.end(), P);
}

std::vector<Point> FiberIsogeny::coset_rep_choices(std::size_t count) const {
    std::vector<Point> out;
    for (const Point& P : codomain_points_) {
        if (out.size() == count) break;
        if (!in_image(P)) out.push_back(P);
    }
    return out;
}

FiberSum FiberIsogeny::finish_sum(const CyclotomicSum& parts) const {
    FiberSum out;
    out.parts = parts;
    out.value = parts.integer_value();
    int128 p = p_->value();
    if (out.value % p != 0)
        throw std::runtime_error("fiber sum not divisible by p");
    out.quotient = out.value / p;
    return out;
}

FiberSum FiberIsogeny::sum(CharRoute route) const {
    CyclotomicSum parts;
    for (const Point& P : codomain_points_) {
        Mu3 chi = route == CharRoute::tate ? character(P) : character_by_coset(P);
        parts.add(chi.exponent(), P.x().lift());
    }
    return finish_sum(parts);
}

FiberSum FiberIsogeny::sum_with_rep(const Point& Q) const {
    if (in_image(Q) || Q.is_infinity())
        throw std::domain_error("sum_with_rep: Q must lie outside the image");
    CyclotomicSum parts;
    for (const Point& P : codomain_points_)
        parts.add(character_by_coset(Q, P).exponent(), P.x().lift());
    return finish_sum(parts);
}

} // namespace isosum
