#pragma once

// Number-field descriptors for the classification: a totally real base field
// k of degree 1 or 2, a totally complex quadratic extension l, splitting of
// rational primes through the tower, and the class-group quantities entering
// the covolume bounds.  Quartic extensions are keyed by a defining polynomial;
// splitting at primes dividing the polynomial discriminant comes from an
// explicit override table carried by the data files.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "a3vol/polymod.hpp"
#include "a3vol/rational.hpp"
#include "a3vol/splitting.hpp"

namespace a3vol {

// ---------------------------------------------------------------------------
// Discriminant helpers

inline bool is_squarefree_small(long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

// Fundamental discriminant of a quadratic field: D == 1 (mod 4) squarefree,
// or D = 4m with m == 2 or 3 (mod 4) squarefree.  D = 1 is allowed as the
// degenerate rational case.
inline bool is_fundamental_discriminant(long D) {
    if (D == 1) return true;
    if (D == 0) return false;
    long m = ((D % 4) + 4) % 4;
    if (m == 1) return is_squarefree_small(D);
    if (m == 0) {
        long q = D / 4;
        long r = ((q % 4) + 4) % 4;
        return (r == 2 || r == 3) && is_squarefree_small(q);
    }
    return false;
}

inline long fundamental_discriminant_of(long n) {
    if (n == 0) throw std::domain_error("fundamental_discriminant_of: zero");
    long s = n < 0 ? -1 : 1;
    long m = n < 0 ? -n : n;
    long core = 1;
    for (long d = 2; d * d <= m; ++d) {
        while (m % (d * d) == 0) m /= d * d;
    }
    core = s * m;
    if (((core % 4) + 4) % 4 == 1) return core;
    return 4 * core;
}

// Kronecker symbol (D | n) for a fundamental discriminant D.
inline int kronecker_symbol(long D, const Int& n) {
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("kronecker_symbol: discriminant is not fundamental");
    Int d(D);
    return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t());
}

inline int kronecker_symbol(long D, long n) { return kronecker_symbol(D, Int(n)); }

// ---------------------------------------------------------------------------
// Domain types

struct BaseField {
    int degree = 1;   // d
    long disc = 1;    // D_k; 1 when degree == 1
    Rational regulator_floor = Rational(0);

    void validate() const {
        if (degree != 1 && degree != 2) throw std::invalid_argument("BaseField: degree must be 1 or 2");
        if (degree == 1) {
            if (disc != 1) throw std::invalid_argument("BaseField: rational field must have D_k = 1");
        } else {
            if (disc <= 1 || !is_fundamental_discriminant(disc))
                throw std::invalid_argument("BaseField: D_k must be a fundamental discriminant > 1");
        }
    }
};

enum class QuarticKind {
    NotQuartic,    // d == 1
    Biquadratic,   // Galois group V4; two imaginary quadratic subfields
    CyclicPrime,   // cyclic quartic of prime conductor
    General,       // anything else: handled by the factorization/override path
};

struct ExtensionField {
    Int disc;                        // D_l (positive)
    std::vector<Int> class_divisors; // elementary divisors of Cl(l); empty = trivial
    std::string regulator;           // decimal string, informational
    int w = 2;                       // number of roots of unity
    long imag_disc = 0;              // d == 1: the negative fundamental discriminant
    bool has_poly = false;
    std::array<Int, 5> poly{};       // d == 2: monic quartic, constant term first
    std::map<long, std::string> overrides;  // rational prime -> per-place symbols, e.g. "si"

    // Derived at load time.
    QuarticKind kind = QuarticKind::NotQuartic;
    long sub_disc1 = 0, sub_disc2 = 0;  // imaginary quadratic subfields (biquadratic)
    long cyclic_conductor = 0;          // prime conductor (CyclicPrime)
    Int poly_disc;                      // discriminant of the defining polynomial

    Int class_number() const {
        Int h(1);
        for (const Int& d : class_divisors) h *= d;
        return h;
    }
};

struct FieldPair {
    std::string label;
    BaseField base;
    ExtensionField ext;

    Int relative_disc() const {
        Int dk2 = Int(base.disc) * Int(base.disc);
        if (ext.disc % dk2 != 0)
            throw std::invalid_argument("FieldPair: D_l is not divisible by D_k^2");
        return ext.disc / dk2;
    }
};

struct Place {
    long p = 0;       // rational prime below
    Int q;            // residue field size: p or p^2
    SplittingType in_k = SplittingType::SplitInL;  // behavior of p in k (degenerate: split when d == 1)
    int index = 0;    // distinguishes the two places over a prime split in k
};

// ---------------------------------------------------------------------------
// Operations

inline std::vector<Place> places_above(const BaseField& k, long p) {
    std::vector<Place> out;
    if (k.degree == 1) {
        out.push_back({p, Int(p), SplittingType::SplitInL, 0});
        return out;
    }
    int sym = kronecker_symbol(k.disc, p);
    if (sym > 0) {
        out.push_back({p, Int(p), SplittingType::SplitInL, 0});
        out.push_back({p, Int(p), SplittingType::SplitInL, 1});
    } else if (sym < 0) {
        out.push_back({p, Int(p) * Int(p), SplittingType::InertInL, 0});
    } else {
        out.push_back({p, Int(p), SplittingType::RamifiedInL, 0});
    }
    return out;
}

// Small local primality check.
inline bool is_prime_u64_compat(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Classify a depressed quartic x^4 + P x^2 + Q defining a totally complex
// field with a real quadratic subfield, and fill in the derived data used by
// the exact character route.  With roots {±sqrt(a), ±sqrt(b)} the Galois
// group is V4 iff Q = ab is a square, cyclic iff Q(P^2-4Q) is a square,
// dihedral otherwise.  The quadratic resolvents P^2-4Q, -P+2r, -P-2r
// (r = sqrt(Q)) generate the quadratic subfields in the V4 case; P^2-4Q
// alone generates the unique one otherwise, and it must match the base.
inline void classify_quartic(ExtensionField& ext, long base_disc) {
    ext.kind = QuarticKind::General;
    if (ext.poly[3] != 0 || ext.poly[1] != 0)
        throw std::invalid_argument("classify_quartic: expected a depressed quartic x^4+Px^2+Q");
    const Int& P = ext.poly[2];
    const Int& Q = ext.poly[0];
    Int c1 = P * P - 4 * Q;
    if (mpz_perfect_square_p(Q.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), Q.get_mpz_t());
        Int c2 = -P + 2 * r, c3 = -P - 2 * r;
        long pos_count = (c1 > 0) + (c2 > 0) + (c3 > 0);
        if (pos_count != 1 || c1 == 0 || c2 == 0 || c3 == 0)
            throw std::invalid_argument("classify_quartic: not a totally complex quartic over a real base");
        Int pos = c1 > 0 ? c1 : (c2 > 0 ? c2 : c3);
        if (mpz_perfect_square_p(pos.get_mpz_t()))
            throw std::invalid_argument("classify_quartic: polynomial is reducible");
        if (fundamental_discriminant_of(to_long(pos)) != base_disc)
            throw std::invalid_argument("classify_quartic: real subfield does not match the base field");
        long negs[2];
        int ni = 0;
        for (const Int& c : {c1, c2, c3})
            if (c < 0) negs[ni++] = to_long(c);
        ext.kind = QuarticKind::Biquadratic;
        ext.sub_disc1 = fundamental_discriminant_of(negs[0]);
        ext.sub_disc2 = fundamental_discriminant_of(negs[1]);
        return;
    }
    // Not V4: the unique quadratic subfield comes from P^2 - 4Q.
    if (c1 <= 0 || mpz_perfect_square_p(c1.get_mpz_t()))
        throw std::invalid_argument("classify_quartic: resolvent inconsistent with a CM quartic");
    if (fundamental_discriminant_of(to_long(c1)) != base_disc)
        throw std::invalid_argument("classify_quartic: real subfield does not match the base field");
    Int t = Q * c1;
    if (mpz_perfect_square_p(t.get_mpz_t())) {
        // Cyclic quartic.  Prime conductor f means D_l = f^3.
        Int froot;
        if (mpz_root(froot.get_mpz_t(), ext.disc.get_mpz_t(), 3) != 0) {
            long f = to_long(froot);
            if (is_prime_u64_compat(f) && Int(f) * f * f == ext.disc) {
                ext.kind = QuarticKind::CyclicPrime;
                ext.cyclic_conductor = f;
                return;
            }
        }
    }
}

// Splitting of one place of k in l.
inline SplittingType splitting_in_ell(const FieldPair& pair, const Place& v);

namespace detail {

// Map (splitting of p in k, degree pattern of the quartic mod p) to the
// splitting symbols of the one or two places over p.  Valid for p coprime to
// the polynomial discriminant.
inline std::string pattern_symbols(SplittingType in_k, QuarticPattern pat, long p,
                                   const std::string& label) {
    auto fail = [&](const char* msg) {
        std::ostringstream os;
        os << "splitting_in_ell(" << label << ", p=" << p << "): " << msg;
        throw std::runtime_error(os.str());
    };
    switch (in_k) {
        case SplittingType::SplitInL:  // p split in k: two places
            if (pat == QuarticPattern::P1111) return "ss";
            if (pat == QuarticPattern::P112) return "si";
            if (pat == QuarticPattern::P22) return "ii";
            fail("degree pattern inconsistent with p split in k");
            break;
        case SplittingType::InertInL:  // p inert in k: one place of norm p^2
            if (pat == QuarticPattern::P22) return "s";
            if (pat == QuarticPattern::P4) return "i";
            fail("degree pattern inconsistent with p inert in k");
            break;
        case SplittingType::RamifiedInL:
            fail("ramified base prime requires an override entry");
            break;
    }
    return {};
}

}  // namespace detail

inline SplittingType splitting_in_ell(const FieldPair& pair, const Place& v) {
    const ExtensionField& ext = pair.ext;
    if (pair.base.degree == 1) {
        return splitting_from_symbol(kronecker_symbol(ext.imag_disc, v.p));
    }
    switch (ext.kind) {
        case QuarticKind::Biquadratic: {
            long d1 = ext.sub_disc1, d2 = ext.sub_disc2;
            long use = 0;
            if (v.p != 0 && d1 % v.p != 0)
                use = d1;
            else if (d2 % v.p != 0)
                use = d2;
            else
                return SplittingType::RamifiedInL;
            return splitting_from_symbol(kronecker_symbol(use, v.q));
        }
        case QuarticKind::CyclicPrime: {
            long f = ext.cyclic_conductor;
            if (v.p == f) return SplittingType::RamifiedInL;
            Int t = v.q % f;
            Int e;
            Int fm(f);
            mpz_powm_ui(e.get_mpz_t(), t.get_mpz_t(), (unsigned long)((f - 1) / 4), fm.get_mpz_t());
            if (e == 1) return SplittingType::SplitInL;
            if (e == f - 1) return SplittingType::InertInL;
            throw std::runtime_error("splitting_in_ell: quartic character value not real at " +
                                     std::to_string(v.p) + " (" + pair.label + ")");
        }
        case QuarticKind::General: {
            if (!ext.has_poly) throw std::runtime_error("splitting_in_ell: missing polynomial");
            bool bad = (ext.poly_disc % v.p == 0);
            std::string syms;
            if (bad) {
                auto it = ext.overrides.find(v.p);
                if (it == ext.overrides.end())
                    throw std::runtime_error("splitting_in_ell: no override for bad prime " +
                                             std::to_string(v.p) + " of " + pair.label);
                syms = it->second;
            } else {
                QuarticPattern pat = quartic_pattern_mod_p(ext.poly, (uint64_t)v.p);
                syms = detail::pattern_symbols(v.in_k, pat, v.p, pair.label);
            }
            size_t need = (v.in_k == SplittingType::SplitInL) ? 2 : 1;
            if (syms.size() != need)
                throw std::runtime_error("splitting_in_ell: override arity mismatch at prime " +
                                         std::to_string(v.p) + " of " + pair.label);
            return splitting_from_char(syms[(size_t)v.index]);
        }
        case QuarticKind::NotQuartic:
            break;
    }
    throw std::logic_error("splitting_in_ell: unclassified extension");
}

// All places of k over p together with their splitting in l.  For the
// generic quartic route this factors the defining polynomial once per prime
// instead of once per place.
inline std::vector<std::pair<Place, SplittingType>> places_with_splitting(const FieldPair& pair,
                                                                          long p) {
    std::vector<Place> places = places_above(pair.base, p);
    std::vector<std::pair<Place, SplittingType>> out;
    out.reserve(places.size());
    if (pair.base.degree == 2 && pair.ext.kind == QuarticKind::General &&
        pair.ext.poly_disc % p != 0) {
        QuarticPattern pat = quartic_pattern_mod_p(pair.ext.poly, (uint64_t)p);
        std::string syms = detail::pattern_symbols(places[0].in_k, pat, p, pair.label);
        for (size_t i = 0; i < places.size(); ++i) {
            out.emplace_back(places[i], splitting_from_char(syms[i]));
        }
        return out;
    }
    for (const Place& v : places) out.emplace_back(v, splitting_in_ell(pair, v));
    return out;
}

// Class number of an imaginary quadratic field by counting reduced binary
// quadratic forms (a, b, c): b^2 - 4ac = D, |b| <= a <= c, and b >= 0
// whenever |b| = a or a = c.
inline Int class_number_imag_quadratic(long D, long enumeration_cap = 1000000) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw std::invalid_argument("class_number_imag_quadratic: need a negative fundamental discriminant");
    if (-D > enumeration_cap)
        throw std::domain_error("class_number_imag_quadratic: |D| exceeds enumeration cap");
    long absD = -D;
    long h = 0;
    for (long b = (absD % 2); b * b <= absD / 3; b += 2) {
        long n = (b * b + absD) / 4;  // = a*c
        for (long a = std::max(b, 1L); a * a <= n; ++a) {
            if (n % a != 0) continue;
            long c = n / a;
            if (c < a) continue;
            if (b == 0 || a == b || a == c)
                h += 1;
            else
                h += 2;
        }
    }
    return Int(h);
}

inline Int h4(const ExtensionField& ext) {
    Int r(1);
    for (const Int& d : ext.class_divisors) r *= gcd(Int(4), d);
    return r;
}

// Largest power of 2 not exceeding H.
inline Int h4_upper_bound(const Int& H) {
    if (H < 1) throw std::domain_error("h4_upper_bound: H must be >= 1");
    size_t bits = mpz_sizeinbase(H.get_mpz_t(), 2);
    return pow2((unsigned long)(bits - 1));
}

// ---------------------------------------------------------------------------
// Field-table ingestion (TSV; see data/README for the schema)

namespace detail {

inline std::vector<std::string> split_tsv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

// Parses one field-table record (9 tab-separated columns):
// label, d, D_k, D_l, divisors(';'), R_l, w_l, poly(','), overrides("p:sym;")
inline FieldPair parse_field_record(const std::vector<std::string>& cols, size_t row) {
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("field table row " + std::to_string(row) + ": " + msg);
    };
    if (cols.size() != 9) fail("expected 9 columns, got " + std::to_string(cols.size()));
    FieldPair pair;
    pair.label = cols[0];
    try {
        pair.base.degree = std::stoi(cols[1]);
        pair.base.disc = std::stol(cols[2]);
        pair.ext.disc = int_from_string(cols[3]);
        if (!cols[4].empty()) {
            std::istringstream ds(cols[4]);
            std::string tok;
            while (std::getline(ds, tok, ';')) {
                if (!tok.empty()) pair.ext.class_divisors.push_back(int_from_string(tok));
            }
        }
        pair.ext.regulator = cols[5];
        pair.ext.w = std::stoi(cols[6]);
        if (!cols[7].empty()) {
            std::istringstream ps(cols[7]);
            std::string tok;
            int i = 0;
            while (std::getline(ps, tok, ',')) {
                if (i > 4) fail("polynomial has more than 5 coefficients");
                pair.ext.poly[(size_t)i++] = int_from_string(tok);
            }
            if (i != 5) fail("polynomial needs 5 coefficients");
            pair.ext.has_poly = true;
        }
        if (!cols[8].empty()) {
            std::istringstream os(cols[8]);
            std::string tok;
            while (std::getline(os, tok, ';')) {
                if (tok.empty()) continue;
                auto colon = tok.find(':');
                if (colon == std::string::npos) fail("override entry missing ':'");
                long p = std::stol(tok.substr(0, colon));
                pair.ext.overrides[p] = tok.substr(colon + 1);
            }
        }
    } catch (const std::invalid_argument&) {
        fail("malformed numeric field");
    }

    // Type invariants.
    pair.base.validate();
    if (pair.ext.disc <= 0) fail("D_l must be positive");
    if (pair.base.degree == 1) {
        if (pair.ext.has_poly) fail("degree-1 record must not carry a polynomial");
        if (!fits_long(pair.ext.disc)) fail("imaginary discriminant out of range");
        pair.ext.imag_disc = -to_long(pair.ext.disc);
        if (!is_fundamental_discriminant(pair.ext.imag_disc)) fail("D_l is not fundamental");
        pair.ext.kind = QuarticKind::NotQuartic;
    } else {
        if (!pair.ext.has_poly) fail("degree-2 record requires a defining polynomial");
        if (pair.ext.poly[4] != 1) fail("defining polynomial must be monic");
        Int dk2 = Int(pair.base.disc) * Int(pair.base.disc);
        if (pair.ext.disc % dk2 != 0) fail("D_l not divisible by D_k^2");
        pair.ext.poly_disc = poly_discriminant(pair.ext.poly);
        if (pair.ext.poly_disc == 0) fail("defining polynomial is not separable");
        classify_quartic(pair.ext, pair.base.disc);
        // Totally complex test for depressed quartics: x^4 + P x^2 + Q has no
        // real roots iff Q > 0 and (P > 0 or P^2 < 4Q).
        if (pair.ext.poly[3] == 0 && pair.ext.poly[1] == 0) {
            const Int& P = pair.ext.poly[2];
            const Int& Q = pair.ext.poly[0];
            if (!(Q > 0 && (P > 0 || P * P < 4 * Q))) fail("polynomial has a real root");
        }
    }
    if (pair.ext.w % 2 != 0 || pair.ext.w < 2 || pair.ext.w > 12) fail("w_l out of range");
    Int h = pair.ext.class_number();
    if (h < 1) fail("class number must be positive");
    return pair;
}

}  // namespace a3vol
