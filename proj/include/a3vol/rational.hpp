#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Thin layer over GMP's C++ classes: mpq_class is kept canonical
// (reduced, positive denominator) at every construction point.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace a3vol {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// Base-10 always (the mpz_class string constructor auto-detects octal/hex).
inline Int int_from_string(const std::string& s) {
    Int r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("int_from_string: not a base-10 integer: '" + s + "'");
    return r;
}

// Parses "a", "a/b" or a plain decimal like "-18.93" (exactly, as 1893/100).
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty input");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return make_rational(int_from_string(s.substr(0, slash)), int_from_string(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        return Rational(int_from_string(s));
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) return Rational(int_from_string(s.substr(0, dot)));
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_rational(int_from_string(digits), den);
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Int pow2(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: 0 to negative power");
        r = Rational(1) / r;
    }
    r.canonicalize();
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_power_of_two(const Int& n) {
    if (n <= 0) return false;
    // A 2-power has exactly one set bit.
    return mpz_popcount(n.get_mpz_t()) == 1;
}

// Proposition-1 style test: numerator of a positive reduced rational is in
// {1, 2, 4, 8, ...}.
inline bool numerator_is_power_of_2(const Rational& x) {
    if (x <= 0) throw std::domain_error("numerator_is_power_of_2: input must be positive");
    return is_power_of_two(x.get_num());
}

inline Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline bool fits_long(const Int& n) {
    return mpz_fits_slong_p(n.get_mpz_t()) != 0;
}

inline long to_long(const Int& n) {
    if (!fits_long(n)) throw std::overflow_error("to_long: value out of range");
    return mpz_get_si(n.get_mpz_t());
}

}  // namespace a3vol
