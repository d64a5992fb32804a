// SPDX-License-Identifier: Apache-2.0
#include "isosum/surface.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

namespace isosum {

namespace {

void require_one_mod_3(const Prime& p) {
    if (!p.is_one_mod_3()) throw std::domain_error("surface sums require p = 1 (mod 3)");
}

// fixed square root of -27: the smaller lift
std::uint64_t beta(const Prime& p) { return p.sqrt_raw(p.neg(27 % p.value()))[0]; }

// Partition [lo, hi) into chunks, run fn(chunk_lo, chunk_hi) on each worker,
// and combine the partial CyclotomicSums in chunk order. Integer addition, so
// the reduction is exact and independent of scheduling.
template <typename Fn>
CyclotomicSum parallel_chunks(std::uint64_t lo, std::uint64_t hi, int workers, Fn fn) {
    if (workers < 1) workers = 1;
    std::uint64_t n = hi - lo;
    if (workers == 1 || n < 2) {
        return fn(lo, hi);
    }
    std::uint64_t chunks = std::min<std::uint64_t>(std::uint64_t(workers), n);
    std::vector<CyclotomicSum> partial(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        std::uint64_t a = lo + n * c / chunks;
        std::uint64_t b = lo + n * (c + 1) / chunks;
        threads.emplace_back([&partial, c, a, b, &fn] { partial[c] = fn(a, b); });
    }
    for (auto& t : threads) t.join();
    CyclotomicSum total;
    for (const auto& part : partial) total += part;
    return total;
}

SurfaceSumResult finish(const Prime& p, CyclotomicSum total, SurfaceMethod method) {
    SurfaceSumResult out;
    out.p = p.value();
    out.total = total;
    out.method = method;
    out.integer_value = total.integer_value();
    int128 q = p.value();
    if (out.integer_value % q != 0)
        throw std::runtime_error("surface sum not divisible by p");
    out.quotient = (long long)(out.integer_value / q);
    return out;
}

} // namespace

SurfacePoint::SurfacePoint(Fp x, Fp y, Fp z) : x_(x), y_(y), z_(z) {
    if (z.is_zero()) throw std::domain_error("SurfacePoint: singular fiber z = 0 excluded");
    if (y * y != x * x * x + z * z)
        throw std::domain_error("SurfacePoint: not on y^2 = x^3 + z^2");
}

SurfacePoint surface_apply(const SurfacePoint& pt) {
    const Prime& p = pt.x().field();
    if (pt.x().is_zero()) throw std::domain_error("surface_apply: kernel point (x = 0)");
    Fp d = pt.z() * pt.z();
    Point img = mordell_isogeny(p, d, Point::affine(pt.x(), pt.y()));
    // scale from y^2 = x^3 - 27z^2 onto the fiber over -27z, which carries
    // y^2 = x^3 + 729 z^2; (x, y) -> (-3x, beta y) with beta^2 = -27
    Fp b(p, beta(p));
    return SurfacePoint(Fp::from_int(p, -3) * img.x(), b * img.y(),
                        Fp::from_int(p, -27) * pt.z());
}

Mu3 surface_character(const SurfacePoint& pt) {
    const Prime& p = pt.x().field();
    require_one_mod_3(p);
    if (!pt.x().is_zero()) return cubic_symbol(pt.y() - pt.z());
    // x = 0 forces y = +-z: the torsion point of the fiber and its negative
    unsigned k = (pt.y() == pt.z()) ? 1 : 2;
    Mu3 base = cubic_symbol(Fp::from_int(p, -4) * pt.z() * pt.z());
    return base.pow(k);
}

SurfaceSumResult surface_sum_fiberwise(const Prime& p, int workers) {
    require_one_mod_3(p);
    auto tables = std::make_shared<const ResidueTables>(p);
    std::uint64_t half = (p.value() - 1) / 2;
    // t = 1 .. (p-1)/2 lists each nonzero square d = t^2 once; every fiber
    // sum appears twice in the global sum
    CyclotomicSum total = parallel_chunks(
        1, half + 1, workers, [&p, &tables](std::uint64_t lo, std::uint64_t hi) {
            CyclotomicSum acc;
            for (std::uint64_t t = lo; t < hi; ++t) {
                FiberIsogeny fiber(p, Fp(p, p.mul(t, t)), tables);
                acc += fiber.sum().parts;
            }
            return acc;
        });
    total += total;
    return finish(p, total, SurfaceMethod::fiberwise);
}

SurfaceSumResult surface_sum_direct(const Prime& p, int workers) {
    require_one_mod_3(p);
    ResidueTables tables(p);
    std::uint64_t n = p.value();
    std::uint64_t b = beta(p);
    CyclotomicSum total = parallel_chunks(
        1, n, workers, [&p, &tables, b, n](std::uint64_t lo, std::uint64_t hi) {
            CyclotomicSum acc;
            for (std::uint64_t z = lo; z < hi; ++z) {
                std::uint64_t z2_27 = p.mul(27 % n, p.mul(z, z));
                std::uint64_t bz = p.mul(b, z);
                for (std::uint64_t y = 0; y < n; ++y) {
                    std::uint64_t c = p.add(p.mul(y, y), z2_27);
                    unsigned roots = tables.cube_root_count(c);
                    if (roots == 0) continue;
                    std::uint64_t diff = p.sub(y, bz);
                    if (diff == 0) continue;  // c = 0 there; only root is x = 0
                    unsigned exponent = tables.cubic_exp(diff);
                    for (unsigned i = 0; i < roots; ++i) {
                        std::uint64_t x = tables.cube_roots(c)[i];
                        if (x != 0) acc.add(exponent, x);
                    }
                }
            }
            return acc;
        });
    return finish(p, total, SurfaceMethod::direct);
}

SurfaceSumResult surface_sum_fast(const Prime& p) {
    require_one_mod_3(p);
    // sum of x (-1 - (x/p)) over x != 0: non-residues cancel, squares count -2
    CyclotomicSum total;
    total.c0 = -2 * int128(sum_of_square_lifts(p));
    return finish(p, total, SurfaceMethod::fast);
}

int xy_inner_sum(const Prime& p, std::uint64_t x, std::uint64_t y,
                 const ResidueTables* tables) {
    require_one_mod_3(p);
    if (x == 0) throw std::domain_error("xy_inner_sum: x must be nonzero");
    std::uint64_t c = p.sub(p.mul(y, y), p.mul(p.mul(x, x), x));
    int leg = tables ? tables->legendre(c) : p.legendre_raw(c);
    if (leg != 1) return 0;
    std::uint64_t r = tables ? tables->sqrt_smaller(c) : p.sqrt_raw(c)[0];
    unsigned exponent = tables ? tables->cubic_exp(p.add(y, r)) : p.cubic_exp_raw(p.add(y, r));
    return exponent == 0 ? 2 : -1;
}

long long row_character_sum(const Prime& p, std::uint64_t x, const ResidueTables* tables) {
    require_one_mod_3(p);
    if (x == 0) throw std::domain_error("row_character_sum: x must be nonzero");
    long long total = 0;
    for (std::uint64_t y = 0; y < p.value(); ++y) total += xy_inner_sum(p, x, y, tables);
    long long expected = -1 - (tables ? tables->legendre(x) : p.legendre_raw(x));
    if (total != expected)
        throw std::runtime_error("row character sum deviates from -1 - (x/p)");
    return total;
}

long long count_y_quadratic(const Prime& p, std::uint64_t x, const ResidueTables* tables) {
    if (x == 0) throw std::domain_error("count_y_quadratic: x must be nonzero");
    std::uint64_t x3 = p.mul(p.mul(x, x), x);
    long long count = 0;
    for (std::uint64_t y = 0; y < p.value(); ++y) {
        std::uint64_t c = p.sub(p.mul(y, y), x3);
        int leg = tables ? tables->legendre(c) : p.legendre_raw(c);
        if (leg == 1) ++count;
    }
    return count;
}

} // namespace isosum
