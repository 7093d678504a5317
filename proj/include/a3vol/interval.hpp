#pragma once

// Rigorous real arithmetic: closed intervals [lo, hi] with MPFR endpoints,
// lower endpoints rounded down and upper endpoints rounded up at every
// operation.  An inequality certified through this type (strictly_below /
// strictly_above) is a proof at the working precision, not an estimate.

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "a3vol/rational.hpp"

namespace a3vol {

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 256) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    Interval(const Interval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    Interval(Interval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, 2);
        mpfr_init2(hi_, 2);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    Interval& operator=(const Interval& o) {
        if (this != &o) {
            Interval tmp(o);
            swap(tmp);
        }
        return *this;
    }

    Interval& operator=(Interval&& o) noexcept {
        swap(o);
        return *this;
    }

    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    void swap(Interval& o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    mpfr_prec_t precision() const { return prec_; }

    static Interval from_long(long v, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    static Interval from_rational(const Rational& q, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    static Interval from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
        Interval r(prec);
        mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    static Interval pi(mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    bool is_point() const { return mpfr_equal_p(lo_, hi_); }

    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    // Exact comparisons against rationals (mpfr_cmp_q does not round).
    bool strictly_below(const Rational& c) const { return mpfr_cmp_q(hi_, c.get_mpq_t()) < 0; }
    bool strictly_above(const Rational& c) const { return mpfr_cmp_q(lo_, c.get_mpq_t()) > 0; }
    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }

    bool certainly_less_than(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }

    // Exact rational endpoints (every finite mpfr value is rational).
    Rational lower() const { return endpoint_rational(lo_); }
    Rational upper() const { return endpoint_rational(hi_); }
    Rational width() const { return upper() - lower(); }

    double midpoint_double() const {
        mpfr_t m;
        mpfr_init2(m, 64);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_ui(m, m, 2, MPFR_RNDN);
        double d = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return d;
    }

    Interval operator-() const {
        Interval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
            mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
            mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
            return r;
        }
        // General case: hull of the four endpoint products.
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
        Interval r(std::max(a.prec_, b.prec_));
        if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) > 0) {
            mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
            mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
            return r;
        }
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

        mpfr_div(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    // exp is increasing.
    friend Interval exp(const Interval& x) {
        Interval r(x.prec_);
        mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
        return r;
    }

    // log is increasing; domain x > 0.
    friend Interval log(const Interval& x) {
        if (!x.is_positive()) throw std::domain_error("Interval log: nonpositive argument");
        Interval r(x.prec_);
        mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
        mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval sqrt(const Interval& x) {
        if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("Interval sqrt: negative argument");
        Interval r(x.prec_);
        mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
        return r;
    }

    // Integer power; base may have any sign for even/odd handling via
    // repeated interval multiplication (exponents used here are tiny).
    friend Interval pow_si(const Interval& x, long e) {
        Interval r = Interval::from_long(1, x.prec_);
        if (e == 0) return r;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        Interval base(x);
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        if (e < 0) r = Interval::from_long(1, x.prec_) / r;
        return r;
    }

    // x^q for positive x and rational exponent, via exp(q log x).
    friend Interval pow_rat(const Interval& x, const Rational& q, mpfr_prec_t prec) {
        if (!x.is_positive()) throw std::domain_error("Interval pow_rat: base must be positive");
        Interval lx = log(x);
        return exp(Interval::from_rational(q, prec) * lx);
    }

    // Riemann zeta, decreasing on (1, oo).
    friend Interval zeta(const Interval& x) {
        if (mpfr_cmp_ui(x.lo_, 1) <= 0)
            throw std::domain_error("Interval zeta: argument must exceed 1");
        Interval r(x.prec_);
        mpfr_zeta(r.lo_, x.hi_, MPFR_RNDD);
        mpfr_zeta(r.hi_, x.lo_, MPFR_RNDU);
        return r;
    }

    // Gamma on [1, 2]: convex, so the max is at an endpoint; the min is
    // bounded below using |Gamma'| <= 3/5 on [1, 2].
    friend Interval gamma(const Interval& x) {
        if (mpfr_cmp_ui(x.lo_, 1) < 0 || mpfr_cmp_ui(x.hi_, 2) > 0)
            throw std::domain_error("Interval gamma: argument must lie in [1, 2]");
        Interval r(x.prec_);
        mpfr_t a, b, w;
        mpfr_init2(a, x.prec_);
        mpfr_init2(b, x.prec_);
        mpfr_init2(w, x.prec_);

        mpfr_gamma(a, x.lo_, MPFR_RNDD);
        mpfr_gamma(b, x.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, a, b, MPFR_RNDD);
        mpfr_sub(w, x.hi_, x.lo_, MPFR_RNDU);
        mpfr_mul_d(w, w, 0.6, MPFR_RNDU);
        mpfr_sub(r.lo_, r.lo_, w, MPFR_RNDD);

        mpfr_gamma(a, x.lo_, MPFR_RNDU);
        mpfr_gamma(b, x.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, a, b, MPFR_RNDU);

        mpfr_clear(a);
        mpfr_clear(b);
        mpfr_clear(w);
        return r;
    }

    friend Interval hull(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    std::string str(int digits = 18) const {
        char* s = nullptr;
        std::string out;
        if (mpfr_asprintf(&s, "[%.*RDg, %.*RUg]", digits, lo_, digits, hi_) >= 0) {
            out = s;
            mpfr_free_str(s);
        }
        return out;
    }

  private:
    static Rational endpoint_rational(const mpfr_t v) {
        if (!mpfr_number_p(v)) throw std::domain_error("Interval: non-finite endpoint");
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, v);
        Rational r(q);
        mpq_clear(q);
        return r;
    }

    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

inline Interval interval_from_decimal(const std::string& s, mpfr_prec_t prec) {
    return Interval::from_rational(rational_from_string(s), prec);
}

}  // namespace a3vol
