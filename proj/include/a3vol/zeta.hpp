#pragma once

// Exact special values of zeta and L-functions at negative integers, and the
// certified numeric route (Euler product at s = 3, functional equation,
// rational reconstruction) used when no character decomposition is available.
//
// Sign conventions: values are computed with their analytic signs; the
// positive quantity R = 2^{-3d} zeta_k(-1) L(-2) zeta_k(-3) checks its own
// sign at the end.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "a3vol/fields.hpp"
#include "a3vol/interval.hpp"
#include "a3vol/primes.hpp"
#include "a3vol/rational.hpp"

namespace a3vol {

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials

// B_n with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0.
inline Rational bernoulli(unsigned n, unsigned cap = 64) {
    if (n > cap) throw std::domain_error("bernoulli: index exceeds cap");
    std::vector<Rational> b(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        if (m == 0) {
            b[0] = Rational(1);
            continue;
        }
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
        b[m] = -acc / Rational(Int(m + 1));
    }
    return b[n];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline Rational bernoulli_poly(unsigned n, const Rational& x) {
    Rational acc(0);
    Rational xp(1);
    // accumulate from k = n down so that xp tracks x^{n-k}
    for (int k = (int)n; k >= 0; --k) {
        acc += Rational(binomial(n, (unsigned long)k)) * bernoulli((unsigned)k) * xp;
        xp *= x;
    }
    return acc;
}

// zeta(-n) for odd n: -B_{n+1}/(n+1).
inline Rational zeta_rational_neg(unsigned n) {
    if (n != 1 && n != 3) throw std::domain_error("zeta_rational_neg: n must be 1 or 3");
    return -bernoulli(n + 1) / Rational(Int(n + 1));
}

namespace detail {

inline Int sigma_power(long n, unsigned j) {
    if (n <= 0) throw std::domain_error("sigma_power: positive argument required");
    Int acc(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        acc += pow_int(Int(d), j);
        long e = n / d;
        if (e != d) acc += pow_int(Int(e), j);
    }
    return acc;
}

}  // namespace detail

// Siegel's divisor-sum formulas for a real quadratic field of discriminant D:
//   zeta_k(-1) = (1/60)  sum sigma_1((D - t^2)/4),
//   zeta_k(-3) = (1/120) sum sigma_3((D - t^2)/4),
// summing over integers t with t^2 < D and t^2 == D (mod 4).
inline Rational zeta_quadratic_neg(long D, unsigned n) {
    if (D <= 1 || !is_fundamental_discriminant(D))
        throw std::invalid_argument("zeta_quadratic_neg: need a real quadratic fundamental discriminant");
    if (n != 1 && n != 3) throw std::domain_error("zeta_quadratic_neg: n must be 1 or 3");
    Int acc(0);
    unsigned j = (n == 1) ? 1 : 3;
    for (long t = (D % 2 == 0) ? 0 : 1; t * t < D; t += 2) {
        Int term = detail::sigma_power((D - t * t) / 4, j);
        acc += (t == 0) ? term : 2 * term;
    }
    return make_rational(acc, Int(n == 1 ? 60 : 120));
}

// Signed zeta_k(-n) for either base degree.
inline Rational zeta_k_neg(const BaseField& k, unsigned n) {
    return k.degree == 1 ? zeta_rational_neg(n) : zeta_quadratic_neg(k.disc, n);
}

// ---------------------------------------------------------------------------
// Dirichlet characters with values in Z[i]

struct GaussInt {
    long re = 0, im = 0;
    bool operator==(const GaussInt&) const = default;
};

inline GaussInt gauss_mul(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

class DirichletCharacter {
  public:
    long conductor() const { return f_; }
    int order() const { return order_; }

    GaussInt value(const Int& a) const {
        long r = (long)mpz_fdiv_ui(a.get_mpz_t(), (unsigned long)f_);
        return values_[(size_t)r];
    }
    GaussInt value(long a) const { return value(Int(a)); }

    bool is_odd() const { return f_ > 1 && values_[(size_t)(f_ - 1)].re == -1; }

    DirichletCharacter conjugate() const {
        DirichletCharacter c(*this);
        for (auto& v : c.values_) v.im = -v.im;
        return c;
    }

    // Quadratic character attached to a fundamental discriminant.
    static DirichletCharacter kronecker_char(long D) {
        if (!is_fundamental_discriminant(D))
            throw std::invalid_argument("kronecker_char: non-fundamental discriminant");
        long f = D < 0 ? -D : D;
        DirichletCharacter chi;
        chi.f_ = f;
        chi.order_ = (f == 1) ? 1 : 2;
        chi.values_.resize((size_t)f);
        for (long a = 0; a < f; ++a) chi.values_[(size_t)a] = {kronecker_symbol(D, a == 0 && f == 1 ? 1 : a), 0};
        return chi;
    }

    // Odd quartic residue character mod a prime f == 5 (mod 8).
    static DirichletCharacter quartic_residue_char(long f) {
        if (!is_prime_u64_compat(f) || f % 8 != 5)
            throw std::invalid_argument("quartic_residue_char: need a prime conductor == 5 (mod 8)");
        DirichletCharacter chi;
        chi.f_ = f;
        chi.order_ = 4;
        chi.values_.assign((size_t)f, GaussInt{0, 0});
        long g = smallest_generator(f);
        static const GaussInt kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        long x = 1;
        for (long e = 0; e < f - 1; ++e) {
            chi.values_[(size_t)x] = kI[e % 4];
            x = (x * g) % f;
        }
        return chi;
    }

  private:
    // g generates (Z/f)* iff g^((f-1)/q) != 1 for every prime q | f-1.
    static long smallest_generator(long f) {
        long n = f - 1;
        std::vector<long> qs;
        long m = n;
        for (long q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                qs.push_back(q);
                while (m % q == 0) m /= q;
            }
        }
        if (m > 1) qs.push_back(m);
        auto powmod = [f](long b, long e) {
            long r = 1;
            b %= f;
            while (e) {
                if (e & 1) r = (r * b) % f;
                b = (b * b) % f;
                e >>= 1;
            }
            return r;
        };
        for (long g = 2; g < f; ++g) {
            bool gen = true;
            for (long q : qs) {
                if (powmod(g, n / q) == 1) {
                    gen = false;
                    break;
                }
            }
            if (gen) return g;
        }
        throw std::logic_error("quartic_residue_char: no generator found");
    }

    long f_ = 1;
    int order_ = 1;
    std::vector<GaussInt> values_;
};

// Element of Q(i).
struct CycRational {
    Rational re, im;
};

// B_{n,chi} = f^{n-1} sum_{a=1..f} chi(a) B_n(a/f).
inline CycRational generalized_bernoulli(unsigned n, const DirichletCharacter& chi) {
    if (n > 8) throw std::domain_error("generalized_bernoulli: n exceeds cap");
    long f = chi.conductor();
    CycRational acc{Rational(0), Rational(0)};
    for (long a = 1; a <= f; ++a) {
        GaussInt v = chi.value(a);
        if (v.re == 0 && v.im == 0) continue;
        Rational b = bernoulli_poly(n, make_rational(a, f));
        acc.re += Rational(Int(v.re)) * b;
        acc.im += Rational(Int(v.im)) * b;
    }
    Rational scale = pow_rational(Rational(Int(f)), (long)n - 1);
    acc.re *= scale;
    acc.im *= scale;
    return acc;
}

// L(1-n, chi) = -B_{n,chi}/n.
inline CycRational dirichlet_L_at_neg(unsigned n, const DirichletCharacter& chi) {
    CycRational b = generalized_bernoulli(n, chi);
    Rational d = Rational(Int(n));
    return {-b.re / d, -b.im / d};
}

// ---------------------------------------------------------------------------
// Numeric route: Euler products, functional equations, reconstruction

struct ReconstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoRationalFound : ReconstructionError {
    using ReconstructionError::ReconstructionError;
};
struct PrecisionInsufficient : ReconstructionError {
    using ReconstructionError::ReconstructionError;
};

// Cache of local Euler factors (1 - sym q^{-3})^{-1}; shared across pairs.
class EulerFactorCache {
  public:
    explicit EulerFactorCache(mpfr_prec_t prec) : prec_(prec) {}

    const Interval& factor(const Int& q, int sym) {
        long qk = to_long(q);
        auto key = std::make_pair(qk, sym);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        Interval one = Interval::from_long(1, prec_);
        Rational q3inv = make_rational(Int(1), q * q * q);
        Interval t = Interval::from_rational(sym > 0 ? q3inv : -q3inv, prec_);
        Interval val = one / (one - t);
        return map_.emplace(key, std::move(val)).first->second;
    }

    mpfr_prec_t precision() const { return prec_; }

  private:
    std::map<std::pair<long, int>, Interval> map_;
    mpfr_prec_t prec_;
};

struct ZetaOptions {
    mpfr_prec_t precision_bits = 384;
    long prime_cap = 1000000;
    Int den_cap = Int(10000);
    EulerFactorCache* cache = nullptr;
};

// L_{l|k}(3) = prod_v (1 - sym(v) q_v^{-3})^{-1} over places with q_v within
// the prime cap, times a rigorous tail enclosure exp([-t, t]) with
// t = 2/cap^2 (each rational prime contributes at most two places and
// |log(1 - x)^{-1}| <= 2|x| for |x| <= 1/2).
inline Interval euler_product_L3(const FieldPair& pair, const ZetaOptions& opts) {
    if (opts.prime_cap < 1000) throw std::invalid_argument("euler_product_L3: prime cap too small");
    mpfr_prec_t prec = opts.precision_bits;
    Interval acc = Interval::from_long(1, prec);
    Interval one = Interval::from_long(1, prec);
    std::vector<uint32_t> ps = primes_up_to((uint32_t)opts.prime_cap);
    for (uint32_t p : ps) {
        for (const auto& [v, sym] : places_with_splitting(pair, (long)p)) {
            if (sym == SplittingType::RamifiedInL) continue;
            int s = (sym == SplittingType::SplitInL) ? 1 : -1;
            if (opts.cache != nullptr) {
                acc *= opts.cache->factor(v.q, s);
            } else {
                Rational q3inv = make_rational(Int(1), v.q * v.q * v.q);
                Interval t = Interval::from_rational(s > 0 ? q3inv : -q3inv, prec);
                acc *= one / (one - t);
            }
        }
    }
    Rational tail = make_rational(Int(2), Int(opts.prime_cap) * Int(opts.prime_cap));
    acc *= exp(Interval::from_endpoints(-tail, tail, prec));
    return acc;
}

// zeta_k(2j) from zeta_k(1-2j):
//   zeta_k(2j) = D_k^{1/2-2j} ((-1)^j 2^{2j-1} pi^{2j} / (2j-1)!)^d zeta_k(1-2j).
inline Interval functional_eq_zeta(int d, long Dk, int j, const Rational& at_1_minus_2j,
                                   mpfr_prec_t prec) {
    if (j != 1 && j != 2) throw std::domain_error("functional_eq_zeta: j must be 1 or 2");
    Interval pi = Interval::pi(prec);
    Interval coef = pow_si(pi, 2 * j);
    long fact = (j == 1) ? 1 : 6;  // (2j-1)!
    Rational scale = make_rational(pow2((unsigned long)(2 * j - 1)), Int(fact));
    if (j % 2 == 1) scale = -scale;
    coef *= Interval::from_rational(scale, prec);
    Interval r = pow_si(coef, d) * Interval::from_rational(at_1_minus_2j, prec);
    // D_k^{1/2 - 2j} = D_k^{-(2j)} * sqrt(D_k)
    r *= pow_rat(Interval::from_long(Dk, prec), Rational(1, 2) - Rational(2 * j), prec);
    return r;
}

// Inverse direction: zeta_k(1-2j) enclosure from a zeta_k(2j) enclosure.
inline Interval functional_eq_zeta_inverse(int d, long Dk, int j, const Interval& at_2j,
                                           mpfr_prec_t prec) {
    if (j != 1 && j != 2) throw std::domain_error("functional_eq_zeta_inverse: j must be 1 or 2");
    Interval pi = Interval::pi(prec);
    Interval coef = pow_si(pi, 2 * j);
    long fact = (j == 1) ? 1 : 6;
    Rational scale = make_rational(pow2((unsigned long)(2 * j - 1)), Int(fact));
    if (j % 2 == 1) scale = -scale;
    coef *= Interval::from_rational(scale, prec);
    return at_2j * pow_rat(Interval::from_long(Dk, prec), Rational(2 * j) - Rational(1, 2), prec) /
           pow_si(coef, d);
}

// L_{l|k}(-2) from L_{l|k}(3):
//   L(3) = (D_k/D_l)^{5/2} (-2 pi^3)^d L(-2).
inline Interval functional_eq_L(int d, long Dk, const Int& Dl, const Interval& at_3,
                                mpfr_prec_t prec) {
    Int dk2 = Int(Dk) * Int(Dk);
    if (Dl < dk2 || (d == 1 && Dl <= 1))
        throw std::invalid_argument("functional_eq_L: inadmissible discriminant pair");
    Interval pi = Interval::pi(prec);
    Interval coef = pow_si(Interval::from_long(-2, prec) * pow_si(pi, 3), d);
    Rational ratio = make_rational(Dl, Int(Dk));  // D_l/D_k
    Interval scale = pow_rat(Interval::from_rational(ratio, prec), Rational(5, 2), prec);
    return at_3 * scale / coef;
}

namespace detail {

// Smallest-denominator rational in [lo, hi] by the Stern-Brocot walk.
inline Rational simplest_in_closed(const Rational& lo, const Rational& hi) {
    Int fl = floor_int(lo);
    // Integer available?
    Int cl = -floor_int(-lo);  // ceil(lo)
    if (Rational(cl) <= hi) return Rational(cl);
    Rational lo_frac = lo - Rational(fl);
    Rational hi_frac = hi - Rational(fl);
    // 0 < lo_frac <= hi_frac < 1; recurse on reciprocals.
    Rational inner = simplest_in_closed(Rational(1) / hi_frac, Rational(1) / lo_frac);
    return Rational(fl) + Rational(1) / inner;
}

}  // namespace detail

// The unique rational with denominator <= den_cap inside the interval.
inline Rational rational_reconstruct(const Interval& x, const Int& den_cap) {
    if (den_cap < 1) throw std::invalid_argument("rational_reconstruct: bad denominator cap");
    Rational lo = x.lower(), hi = x.upper();
    Rational width = hi - lo;
    if (width * den_cap * den_cap >= 1)
        throw PrecisionInsufficient("rational_reconstruct: interval too wide for denominator cap");
    Rational r = detail::simplest_in_closed(lo, hi);
    if (r.get_den() > den_cap)
        throw NoRationalFound("rational_reconstruct: no rational with denominator within cap");
    return r;
}

// ---------------------------------------------------------------------------
// The relative L-value and the closed form R

// Exact numeric path (route c): Euler product at 3, functional equation,
// reconstruction.
inline Rational L_rel_minus2_numeric(const FieldPair& pair, const ZetaOptions& opts) {
    Interval L3 = euler_product_L3(pair, opts);
    Interval Lm2 = functional_eq_L(pair.base.degree, pair.base.disc, pair.ext.disc, L3,
                                   opts.precision_bits);
    return rational_reconstruct(Lm2, opts.den_cap);
}

// Signed L_{l|k}(-2): exact character route when available, numeric otherwise.
inline Rational L_rel_minus2(const FieldPair& pair, const ZetaOptions& opts = {}) {
    if (pair.base.degree == 1) {
        CycRational v = dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(pair.ext.imag_disc));
        if (v.im != 0) throw std::logic_error("L_rel_minus2: quadratic character gave complex value");
        return v.re;
    }
    switch (pair.ext.kind) {
        case QuarticKind::Biquadratic: {
            CycRational a = dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(pair.ext.sub_disc1));
            CycRational b = dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(pair.ext.sub_disc2));
            if (a.im != 0 || b.im != 0)
                throw std::logic_error("L_rel_minus2: quadratic character gave complex value");
            return a.re * b.re;
        }
        case QuarticKind::CyclicPrime: {
            DirichletCharacter chi = DirichletCharacter::quartic_residue_char(pair.ext.cyclic_conductor);
            CycRational v = dirichlet_L_at_neg(3, chi);
            return v.re * v.re + v.im * v.im;  // L(-2,chi) L(-2,chi-bar)
        }
        case QuarticKind::General:
            return L_rel_minus2_numeric(pair, opts);
        case QuarticKind::NotQuartic:
            break;
    }
    throw std::logic_error("L_rel_minus2: unclassified extension");
}

// R = 2^{-3d} zeta_k(-1) L_{l|k}(-2) zeta_k(-3), returned as a positive
// rational after checking the sign of the signed product.
inline Rational script_R(const FieldPair& pair, const ZetaOptions& opts = {}) {
    int d = pair.base.degree;
    Rational r = make_rational(Int(1), pow2((unsigned long)(3 * d)));
    r *= zeta_k_neg(pair.base, 1);
    r *= L_rel_minus2(pair, opts);
    r *= zeta_k_neg(pair.base, 3);
    if (r <= 0) throw std::logic_error("script_R: signed product is not positive for " + pair.label);
    return r;
}

// zeta_k at the positive even argument 2j, from the exact negative value.
inline Interval zeta_k_even(const BaseField& k, int j, mpfr_prec_t prec) {
    return functional_eq_zeta(k.degree, k.disc, j, zeta_k_neg(k, (unsigned)(2 * j - 1)), prec);
}

}  // namespace a3vol
