#pragma once

// Local volume data for parahoric subgroups of quasi-split and non-quasi-split
// forms of SU(4) over a nonarchimedean local field: the residue-group density
// of the ambient group, the factor e(P_v) and the normalized factor e'(P_v)
// for every conjugacy class of parahoric that occurs.
//
// Case naming: C1* split place / split group (five parahoric classes down to
// the Iwahori), C2* split place / inner form of positive division degree,
// C3* inert place (rank 2 and rank 1), C4* ramified place (rank 2 and rank 1).
// e'(P_v) = 1 exactly for the hyperspecial (C1a, C3ai) and special (C4ai)
// classes; those places lie outside the exceptional set T.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "a3vol/rational.hpp"
#include "a3vol/splitting.hpp"

namespace a3vol {

enum class ParahoricCase {
    C1a, C1b, C1c, C1d, C1e,
    C2a, C2bi, C2bii,
    C3ai, C3aii, C3aiii, C3aiv, C3av,
    C3bi, C3bii,
    C4ai, C4aii, C4aiii, C4aiv,
    C4bi, C4bii, C4biii,
};

inline constexpr std::array<ParahoricCase, 22> kAllParahoricCases = {
    ParahoricCase::C1a,   ParahoricCase::C1b,  ParahoricCase::C1c,   ParahoricCase::C1d,
    ParahoricCase::C1e,   ParahoricCase::C2a,  ParahoricCase::C2bi,  ParahoricCase::C2bii,
    ParahoricCase::C3ai,  ParahoricCase::C3aii, ParahoricCase::C3aiii, ParahoricCase::C3aiv,
    ParahoricCase::C3av,  ParahoricCase::C3bi, ParahoricCase::C3bii, ParahoricCase::C4ai,
    ParahoricCase::C4aii, ParahoricCase::C4aiii, ParahoricCase::C4aiv, ParahoricCase::C4bi,
    ParahoricCase::C4bii, ParahoricCase::C4biii,
};

inline const char* case_name(ParahoricCase c) {
    switch (c) {
        case ParahoricCase::C1a: return "1a";
        case ParahoricCase::C1b: return "1b";
        case ParahoricCase::C1c: return "1c";
        case ParahoricCase::C1d: return "1d";
        case ParahoricCase::C1e: return "1e";
        case ParahoricCase::C2a: return "2a";
        case ParahoricCase::C2bi: return "2b(i)";
        case ParahoricCase::C2bii: return "2b(ii)";
        case ParahoricCase::C3ai: return "3a(i)";
        case ParahoricCase::C3aii: return "3a(ii)";
        case ParahoricCase::C3aiii: return "3a(iii)";
        case ParahoricCase::C3aiv: return "3a(iv)";
        case ParahoricCase::C3av: return "3a(v)";
        case ParahoricCase::C3bi: return "3b(i)";
        case ParahoricCase::C3bii: return "3b(ii)";
        case ParahoricCase::C4ai: return "4a(i)";
        case ParahoricCase::C4aii: return "4a(ii)";
        case ParahoricCase::C4aiii: return "4a(iii)";
        case ParahoricCase::C4aiv: return "4a(iv)";
        case ParahoricCase::C4bi: return "4b(i)";
        case ParahoricCase::C4bii: return "4b(ii)";
        case ParahoricCase::C4biii: return "4b(iii)";
    }
    return "?";
}

// Splitting type of the place a case can be attached to.
inline SplittingType case_splitting(ParahoricCase c) {
    switch (c) {
        case ParahoricCase::C1a:
        case ParahoricCase::C1b:
        case ParahoricCase::C1c:
        case ParahoricCase::C1d:
        case ParahoricCase::C1e:
        case ParahoricCase::C2a:
        case ParahoricCase::C2bi:
        case ParahoricCase::C2bii:
            return SplittingType::SplitInL;
        case ParahoricCase::C3ai:
        case ParahoricCase::C3aii:
        case ParahoricCase::C3aiii:
        case ParahoricCase::C3aiv:
        case ParahoricCase::C3av:
        case ParahoricCase::C3bi:
        case ParahoricCase::C3bii:
            return SplittingType::InertInL;
        default:
            return SplittingType::RamifiedInL;
    }
}

// Local rank of the group at the place.
inline int case_rank(ParahoricCase c) {
    switch (c) {
        case ParahoricCase::C1a:
        case ParahoricCase::C1b:
        case ParahoricCase::C1c:
        case ParahoricCase::C1d:
        case ParahoricCase::C1e:
            return 3;
        case ParahoricCase::C2a:
            return 0;
        case ParahoricCase::C2bi:
        case ParahoricCase::C2bii:
        case ParahoricCase::C3bi:
        case ParahoricCase::C3bii:
        case ParahoricCase::C4bi:
        case ParahoricCase::C4bii:
        case ParahoricCase::C4biii:
            return 1;
        default:
            return 2;
    }
}

// C2 cases only occur at places where the underlying division algebra is
// locally nontrivial (members of T0).
inline bool requires_division_place(ParahoricCase c) {
    return c == ParahoricCase::C2a || c == ParahoricCase::C2bi || c == ParahoricCase::C2bii;
}

// e'(P_v) == 1: hyperspecial or special maximal parahorics.
inline bool is_trivial_case(ParahoricCase c) {
    return c == ParahoricCase::C1a || c == ParahoricCase::C3ai || c == ParahoricCase::C4ai;
}

inline bool is_iwahori(ParahoricCase c) {
    return c == ParahoricCase::C1e || c == ParahoricCase::C2bii || c == ParahoricCase::C3av ||
           c == ParahoricCase::C3bii || c == ParahoricCase::C4aiv || c == ParahoricCase::C4biii;
}

// Rank-1 cases at nonsplit places (the set T1 in the classification).
inline bool is_rank1_nonsplit(ParahoricCase c) {
    return c == ParahoricCase::C3bi || c == ParahoricCase::C3bii || c == ParahoricCase::C4bi ||
           c == ParahoricCase::C4bii || c == ParahoricCase::C4biii;
}

inline bool case_compatible(ParahoricCase c, SplittingType s) {
    return case_splitting(c) == s;
}

inline std::optional<ParahoricCase> case_from_name(const std::string& name) {
    for (ParahoricCase c : kAllParahoricCases)
        if (name == case_name(c)) return c;
    return std::nullopt;
}

// #M(f_v) / q_v^dim for the ambient residue group: SL4 at split places,
// SU4 at inert places, a C2-type group at ramified places.
inline Rational density(SplittingType s, const Int& q) {
    if (q < 2) throw std::domain_error("density: q must be >= 2");
    Rational q2 = make_rational(Int(1), q * q);
    Rational q3 = make_rational(Int(1), q * q * q);
    Rational q4 = make_rational(Int(1), q * q * q * q);
    switch (s) {
        case SplittingType::SplitInL:
            return (1 - q2) * (1 - q3) * (1 - q4);
        case SplittingType::InertInL:
            return (1 - q2) * (1 + q3) * (1 - q4);
        case SplittingType::RamifiedInL:
            return (1 - q2) * (1 - q4);
    }
    throw std::logic_error("density: bad splitting type");
}

inline Rational e_factor(ParahoricCase c, const Int& q) {
    if (q < 2) throw std::domain_error("e_factor: q must be >= 2");
    const Rational one(1);
    Rational t = make_rational(Int(1), q);     // 1/q
    Rational t2 = t * t;
    Rational t3 = t2 * t;
    Rational t4 = t2 * t2;
    Rational qr(q);
    switch (c) {
        case ParahoricCase::C1a:
            return one / ((1 - t2) * (1 - t3) * (1 - t4));
        case ParahoricCase::C1b:
            return pow_rational(qr, 3) / ((1 - t) * (1 - t2) * (1 - t3));
        case ParahoricCase::C1c:
            return pow_rational(qr, 4) / ((1 - t) * (1 - t2) * (1 - t2));
        case ParahoricCase::C1d:
            return pow_rational(qr, 5) / ((1 - t2) * (1 - t) * (1 - t));
        case ParahoricCase::C1e:
            return pow_rational(qr, 6) / ((1 - t) * (1 - t) * (1 - t));
        case ParahoricCase::C2a:
            return pow_rational(qr, 6) / ((1 + t) * (1 + t2));
        case ParahoricCase::C2bi:
            return pow_rational(qr, 4) / ((1 + t) * (1 - t4));
        case ParahoricCase::C2bii:
            return pow_rational(qr, 6) / ((1 + t) * (1 - t2));
        case ParahoricCase::C3ai:
            return one / ((1 - t2) * (1 + t3) * (1 - t4));
        case ParahoricCase::C3aii:
            return pow_rational(qr, 4) / ((1 + t) * (1 - t2) * (1 - t2));
        case ParahoricCase::C3aiii:
            return pow_rational(qr, 4) / ((1 - t) * (1 - t4));
        case ParahoricCase::C3aiv:
            return pow_rational(qr, 5) / ((1 - t2) * (1 - t2));
        case ParahoricCase::C3av:
            return pow_rational(qr, 6) / ((1 - t) * (1 - t2));
        case ParahoricCase::C3bi:
            return pow_rational(qr, 3) / ((1 + t) * (1 - t2) * (1 + t3));
        case ParahoricCase::C3bii:
            return pow_rational(qr, 6) / ((1 + t) * (1 - t2));
        case ParahoricCase::C4ai:
            return one / ((1 - t2) * (1 - t4));
        case ParahoricCase::C4aii:
            return pow_rational(qr, 2) / ((1 - t2) * (1 - t2));
        case ParahoricCase::C4aiii:
            return pow_rational(qr, 3) / ((1 - t) * (1 - t2));
        case ParahoricCase::C4aiv:
            return pow_rational(qr, 4) / ((1 - t) * (1 - t));
        case ParahoricCase::C4bi:
            return pow_rational(qr, 2) / (1 - t4);
        case ParahoricCase::C4bii:
            return pow_rational(qr, 3) / ((1 + t) * (1 - t2));
        case ParahoricCase::C4biii:
            return pow_rational(qr, 4) / (1 - t2);
    }
    throw std::logic_error("e_factor: bad case");
}

inline Int e_prime(ParahoricCase c, const Int& q) {
    if (q < 2) throw std::domain_error("e_prime: q must be >= 2");
    Int q2 = q * q;
    Int q3 = q2 * q;
    Int q4 = q2 * q2;
    switch (c) {
        case ParahoricCase::C1a:
            return 1;
        case ParahoricCase::C1b:
            return (q + 1) * (q2 + 1);
        case ParahoricCase::C1c:
            return (q2 + 1) * (q2 + q + 1);
        case ParahoricCase::C1d:
            return (q + 1) * (q2 + 1) * (q2 + q + 1);
        case ParahoricCase::C1e:
            return (q + 1) * (q + 1) * (q2 + 1) * (q2 + q + 1);
        case ParahoricCase::C2a:
            return (q - 1) * (q2 - 1) * (q3 - 1);
        case ParahoricCase::C2bi:
            return (q - 1) * (q3 - 1);
        case ParahoricCase::C2bii:
            return (q - 1) * (q2 + 1) * (q3 - 1);
        case ParahoricCase::C3ai:
            return 1;
        case ParahoricCase::C3aii:
            return (q2 + 1) * (q2 - q + 1);
        case ParahoricCase::C3aiii:
            return (q + 1) * (q3 + 1);
        case ParahoricCase::C3aiv:
            return (q2 + 1) * (q3 + 1);
        case ParahoricCase::C3av:
            return (q + 1) * (q2 + 1) * (q3 + 1);
        case ParahoricCase::C3bi:
            return (q - 1) * (q2 + 1);
        case ParahoricCase::C3bii:
            return (q - 1) * (q2 + 1) * (q3 + 1);
        case ParahoricCase::C4ai:
            return 1;
        case ParahoricCase::C4aii:
            return q2 + 1;
        case ParahoricCase::C4aiii:
            return (q + 1) * (q2 + 1);
        case ParahoricCase::C4aiv:
            return (q + 1) * (q + 1) * (q2 + 1);
        case ParahoricCase::C4bi:
            return q2 - 1;
        case ParahoricCase::C4bii:
            return (q - 1) * (q2 + 1);
        case ParahoricCase::C4biii:
            return q4 - 1;
    }
    throw std::logic_error("e_prime: bad case");
}

// The two increasing polynomials governing rank-1 nonsplit contributions:
// psi1 is the minimal ramified factor, psi2 the minimal unramified one.
inline Int psi1(const Int& q) { return e_prime(ParahoricCase::C4bi, q); }
inline Int psi2(const Int& q) { return e_prime(ParahoricCase::C3bi, q); }

}  // namespace a3vol
