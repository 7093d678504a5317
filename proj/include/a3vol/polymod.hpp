#pragma once

// Factorization degree patterns of monic squarefree quartics modulo p.
// Only the multiset of irreducible-factor degrees is computed; that is all
// the splitting logic needs.  Odd p uses Montgomery arithmetic and
// distinct-degree splitting via x^p mod f; tiny p falls back to brute force.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "a3vol/rational.hpp"

namespace a3vol {

// Montgomery arithmetic modulo an odd modulus p < 2^62.
class MontMod {
  public:
    explicit MontMod(uint64_t p) : p_(p) {
        if (p < 3 || (p & 1) == 0) throw std::invalid_argument("MontMod: modulus must be odd >= 3");
        // Newton iteration for p^{-1} mod 2^64.
        uint64_t inv = p;
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
        ninv_ = ~inv + 1;  // -p^{-1} mod 2^64
        r2_ = compute_r2();
        one_ = to_mont(1);
    }

    uint64_t modulus() const { return p_; }
    uint64_t one() const { return one_; }

    uint64_t to_mont(uint64_t x) const { return mul(x % p_, r2_); }
    uint64_t from_mont(uint64_t x) const { return redc(x); }

    uint64_t mul(uint64_t a, uint64_t b) const {
        unsigned __int128 t = (unsigned __int128)a * b;
        uint64_t m = (uint64_t)t * ninv_;
        unsigned __int128 u = t + (unsigned __int128)m * p_;
        uint64_t r = (uint64_t)(u >> 64);
        return r >= p_ ? r - p_ : r;
    }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }

    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

    uint64_t pow(uint64_t base, uint64_t e) const {
        uint64_t r = one_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    uint64_t inv(uint64_t a) const { return pow(a, p_ - 2); }  // p prime

  private:
    uint64_t redc(uint64_t x) const {
        uint64_t m = x * ninv_;
        unsigned __int128 u = (unsigned __int128)x + (unsigned __int128)m * p_;
        uint64_t r = (uint64_t)(u >> 64);
        return r >= p_ ? r - p_ : r;
    }

    uint64_t compute_r2() const {
        uint64_t r = (~uint64_t(0)) % p_ + 1;  // 2^64 mod p
        if (r == p_) r = 0;
        unsigned __int128 wide = (unsigned __int128)r * r;  // 2^128 mod p
        return (uint64_t)(wide % p_);
    }

    uint64_t p_, ninv_, r2_, one_;
};

enum class QuarticPattern { P1111, P112, P22, P4, P13 };

namespace detail {

// Residues mod a monic quartic f over F_p, in Montgomery form, degree <= 3.
using Res = std::array<uint64_t, 4>;

struct QuarticCtx {
    MontMod m;
    std::array<uint64_t, 4> fred;  // f = x^4 + fred[3] x^3 + ... + fred[0]

    QuarticCtx(const std::array<uint64_t, 5>& fcoef, uint64_t p) : m(p) {
        for (int i = 0; i < 4; ++i) fred[i] = m.to_mont(fcoef[i]);
    }

    // Multiply two residues and reduce mod f.
    Res mul(const Res& a, const Res& b) const {
        uint64_t prod[7] = {0, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                prod[i + j] = m.add(prod[i + j], m.mul(a[i], b[j]));
            }
        }
        // Reduce degrees 6..4: x^4 = -(fred[3] x^3 + ... + fred[0]).
        for (int d = 6; d >= 4; --d) {
            uint64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < 4; ++i) {
                prod[d - 4 + i] = m.sub(prod[d - 4 + i], m.mul(c, fred[i]));
            }
        }
        return {prod[0], prod[1], prod[2], prod[3]};
    }

    Res mul_x(const Res& a) const {
        Res r = {0, a[0], a[1], a[2]};
        uint64_t c = a[3];
        if (c != 0) {
            for (int i = 0; i < 4; ++i) r[i] = m.sub(r[i], m.mul(c, fred[i]));
        }
        return r;
    }

    Res x_pow(uint64_t e) const {
        Res r = {m.one(), 0, 0, 0};
        Res base = {0, m.one(), 0, 0};
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // g(h) mod f for g of degree <= 3 (Horner).
    Res compose(const Res& g, const Res& h) const {
        Res r = {g[3], 0, 0, 0};
        for (int i = 2; i >= 0; --i) {
            r = mul(r, h);
            r[0] = m.add(r[0], g[i]);
        }
        return r;
    }
};

// Degree of gcd(a, b) where a has degree <= 4 (a may be given as 5 coeffs),
// all coefficients in Montgomery form.
inline int gcd_degree(const MontMod& m, std::array<uint64_t, 5> a, std::array<uint64_t, 5> b) {
    auto deg = [&](const std::array<uint64_t, 5>& v) {
        for (int i = 4; i >= 0; --i)
            if (v[i] != 0) return i;
        return -1;
    };
    int da = deg(a), db = deg(b);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
    }
    while (db >= 0) {
        // a <- a mod b
        uint64_t lead_inv = m.inv(b[db]);
        while (da >= db) {
            uint64_t c = m.mul(a[da], lead_inv);
            if (c != 0) {
                for (int i = 0; i <= db; ++i) {
                    a[da - db + i] = m.sub(a[da - db + i], m.mul(c, b[i]));
                }
            }
            --da;
            while (da >= 0 && a[da] == 0) --da;
            if (da < 0) break;
        }
        std::swap(a, b);
        da = deg(a);
        db = deg(b);
    }
    return da;
}

inline QuarticPattern pattern_small_p(const std::array<uint64_t, 5>& f, uint64_t p) {
    // Brute force for tiny p: count roots, strip them, test the rest.
    auto eval = [&](const std::array<uint64_t, 5>& g, int dg, uint64_t x) {
        uint64_t r = 0;
        for (int i = dg; i >= 0; --i) r = (r * x + g[i]) % p;
        return r;
    };
    std::array<uint64_t, 5> g = f;
    int dg = 4;
    int roots = 0;
    for (uint64_t x = 0; x < p; ++x) {
        while (dg > 0 && eval(g, dg, x) == 0) {
            ++roots;
            // synthetic division by (X - x)
            std::array<uint64_t, 5> h{};
            uint64_t carry = 0;
            for (int i = dg; i >= 1; --i) {
                carry = (carry * x + g[i]) % p;
                h[i - 1] = carry;
            }
            g = h;
            --dg;
        }
    }
    if (roots == 4) return QuarticPattern::P1111;
    if (roots == 2) return QuarticPattern::P112;
    if (roots == 1) return QuarticPattern::P13;
    if (roots == 3) throw std::logic_error("squarefree quartic with three roots");
    // No roots: degree-4 remainder is (2,2) or (4): check for irreducible quadratic factors
    // by trial over all monic quadratics (p is tiny here).
    for (uint64_t b = 0; b < p; ++b) {
        for (uint64_t c = 0; c < p; ++c) {
            // does x^2 + bx + c (irreducible) divide g?
            bool irred = true;
            for (uint64_t x = 0; x < p; ++x) {
                if ((x * x + b * x + c) % p == 0) {
                    irred = false;
                    break;
                }
            }
            if (!irred) continue;
            // long-divide g by the quadratic, monic: remainder check
            std::array<uint64_t, 5> r = g;
            for (int i = 4; i >= 2; --i) {
                uint64_t coef = r[i];
                if (coef == 0) continue;
                r[i] = 0;
                r[i - 1] = (r[i - 1] + p * p - coef * b % p) % p;
                r[i - 2] = (r[i - 2] + p * p - coef * c % p) % p;
            }
            if (r[0] == 0 && r[1] == 0) return QuarticPattern::P22;
        }
    }
    return QuarticPattern::P4;
}

}  // namespace detail

// Degree pattern of a monic quartic with integer coefficients, reduced mod p.
// Requires p not to divide the discriminant of the polynomial (the reduction
// must stay squarefree and quartic).
inline QuarticPattern quartic_pattern_mod_p(const std::array<Int, 5>& f, uint64_t p) {
    if (f[4] != 1) throw std::invalid_argument("quartic_pattern_mod_p: polynomial must be monic");
    std::array<uint64_t, 5> fc;
    for (int i = 0; i <= 4; ++i) {
        fc[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    }
    if (p < 5) return detail::pattern_small_p(fc, p);

    detail::QuarticCtx ctx(fc, p);
    const MontMod& m = ctx.m;
    detail::Res xp = ctx.x_pow(p);

    // gcd(x^p - x, f): number of linear factors.
    std::array<uint64_t, 5> a = {xp[0], m.sub(xp[1], m.one()), xp[2], xp[3], 0};
    std::array<uint64_t, 5> fm = {m.to_mont(fc[0]), m.to_mont(fc[1]), m.to_mont(fc[2]),
                                  m.to_mont(fc[3]), m.one()};
    int d1 = detail::gcd_degree(m, fm, a);
    if (d1 < 0) d1 = 0;
    if (d1 == 4) return QuarticPattern::P1111;
    if (d1 == 2) return QuarticPattern::P112;
    if (d1 == 1) return QuarticPattern::P13;
    if (d1 == 3) throw std::logic_error("quartic_pattern_mod_p: three linear factors");

    // No linear factors: f splits into quadratics iff x^{p^2} == x mod f.
    detail::Res xp2 = ctx.compose(xp, xp);
    detail::Res x = {0, m.one(), 0, 0};
    if (xp2 == x) return QuarticPattern::P22;
    return QuarticPattern::P4;
}

// Discriminant of a monic integer quartic via the resultant of f and f',
// computed with exact rational Euclidean division.
inline Int poly_discriminant(const std::array<Int, 5>& f) {
    if (f[4] != 1) throw std::invalid_argument("poly_discriminant: polynomial must be monic");
    std::vector<Rational> a(5), b(4);
    for (int i = 0; i <= 4; ++i) a[i] = Rational(f[i]);
    for (int i = 0; i <= 3; ++i) b[i] = Rational(f[i + 1] * (i + 1));

    Rational res(1);
    // res accumulates lc(b)^{deg a - deg r} over pseudo-division steps.
    while (true) {
        int da = (int)a.size() - 1;
        while (da >= 0 && a[da] == 0) --da;
        int db = (int)b.size() - 1;
        while (db >= 0 && b[db] == 0) --db;
        if (db < 0) return Int(0);  // common factor: discriminant 0
        if (db == 0) {
            res *= pow_rational(b[0], da);
            break;
        }
        // a mod b
        std::vector<Rational> r(a.begin(), a.begin() + da + 1);
        for (int i = da; i >= db; --i) {
            Rational c = r[i] / b[db];
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
        }
        int dr = db - 1;
        while (dr >= 0 && r[dr] == 0) --dr;
        if (dr < 0) return Int(0);
        res *= pow_rational(b[db], da - dr);
        if (((da % 2) == 1) && ((db % 2) == 1)) res = -res;
        a.assign(b.begin(), b.begin() + db + 1);
        b.assign(r.begin(), r.begin() + dr + 1);
    }
    // disc = (-1)^{n(n-1)/2} Res(f, f') / lc(f) with n = 4.
    if (res.get_den() != 1) throw std::logic_error("poly_discriminant: non-integer resultant");
    return res.get_num();
}

}  // namespace a3vol
