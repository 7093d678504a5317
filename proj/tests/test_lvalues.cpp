#include <catch2/catch_amalgamated.hpp>

#include "a3vol/zeta.hpp"

using namespace a3vol;

namespace {

constexpr mpfr_prec_t kPrec = 384;

FieldPair pair_d1(long neg_disc) {
    FieldPair p;
    p.label = "Q(sqrt(" + std::to_string(neg_disc) + "))";
    p.base.degree = 1;
    p.base.disc = 1;
    p.ext.disc = Int(-neg_disc);
    p.ext.imag_disc = neg_disc;
    p.ext.kind = QuarticKind::NotQuartic;
    return p;
}

FieldPair pair_d2(long dk, const Int& dl, std::array<Int, 5> poly, const std::string& label) {
    FieldPair p;
    p.label = label;
    p.base.degree = 2;
    p.base.disc = dk;
    p.ext.disc = dl;
    p.ext.poly = poly;
    p.ext.has_poly = true;
    p.ext.poly_disc = poly_discriminant(poly);
    classify_quartic(p.ext, dk);
    return p;
}

// Q(zeta_5) over Q(sqrt 5): theta = -(5+sqrt5)/2, x^4 + 5x^2 + 5.
FieldPair pair_C1() { return pair_d2(5, Int(125), {Int(5), Int(0), Int(5), Int(0), Int(1)}, "C1"); }
// Q(sqrt5, zeta_3): x^4 - 4x^2 + 64.
FieldPair pair_C2() { return pair_d2(5, Int(225), {Int(64), Int(0), Int(-4), Int(0), Int(1)}, "C2"); }
// Q(sqrt5, i): x^4 - 2x^2 + 9.
FieldPair pair_C3() { return pair_d2(5, Int(1600), {Int(9), Int(0), Int(-2), Int(0), Int(1)}, "C3"); }
// Q(sqrt5, sqrt-11): x^4 + 12x^2 + 64.
FieldPair pair_F1() { return pair_d2(5, Int(3025), {Int(64), Int(0), Int(12), Int(0), Int(1)}, "F1"); }
// C23 = (Q(sqrt14), Q(sqrt14, sqrt-7)): x^4 - 14x^2 + 441.
FieldPair pair_C23() {
    return pair_d2(56, Int(3136), {Int(441), Int(0), Int(-14), Int(0), Int(1)}, "C23");
}

}  // namespace

TEST_CASE("euler product for L(3) of the Gaussian field") {
    ZetaOptions opts;
    opts.precision_bits = kPrec;
    opts.prime_cap = 1000000;
    Interval L3 = euler_product_L3(pair_d1(-4), opts);

    // Oracle 1: beta(3) = pi^3/32.
    Interval ref = pow_si(Interval::pi(kPrec), 3) / Interval::from_long(32, kPrec);
    CHECK(L3.lower() <= ref.upper());
    CHECK(L3.upper() >= ref.lower());
    CHECK(L3.width() < rational_from_string("0.00000000001"));

    // Oracle 2: alternating series 1 - 1/27 + 1/125 - ... with |tail| < 1/(2N+1)^3.
    Rational s(0);
    long N = 200;
    for (long k = 0; k < N; ++k) {
        Rational term = make_rational(1, (2 * k + 1) * (2 * k + 1) * (2 * k + 1));
        s += (k % 2 == 0) ? term : -term;
    }
    Rational tail = make_rational(1, (2 * N + 1) * (2 * N + 1) * (2 * N + 1));
    CHECK(L3.upper() >= s - tail);
    CHECK(L3.lower() <= s + tail);
}

TEST_CASE("trivial all-split euler product increases with the cap") {
    // With every place split the product is a partial zeta-like product, so
    // enlarging the cap (ignoring tails) can only increase it.
    FieldPair p = pair_d1(-4);
    auto raw_product = [&](long cap) {
        Interval acc = Interval::from_long(1, kPrec);
        Interval one = Interval::from_long(1, kPrec);
        for (uint32_t q : primes_up_to((uint32_t)cap)) {
            Rational inv = make_rational(Int(1), Int(q) * Int(q) * Int(q));
            acc *= one / (one - Interval::from_rational(inv, kPrec));
        }
        return acc;
    };
    (void)p;
    Interval a = raw_product(2000), b = raw_product(4000);
    CHECK(b.strictly_above(a.lower()));
    CHECK(a.strictly_below(rational_from_string("1.2021")));  // below zeta(3)
}

TEST_CASE("zeta functional equation forward and inverse") {
    Interval z2 = functional_eq_zeta(1, 1, 1, make_rational(-1, 12), kPrec);
    Interval ref2 = pow_si(Interval::pi(kPrec), 2) / Interval::from_long(6, kPrec);
    CHECK(z2.lower() <= ref2.upper());
    CHECK(z2.upper() >= ref2.lower());

    Interval z4 = functional_eq_zeta(1, 1, 2, make_rational(1, 120), kPrec);
    Interval ref4 = pow_si(Interval::pi(kPrec), 4) / Interval::from_long(90, kPrec);
    CHECK(z4.lower() <= ref4.upper());
    CHECK(z4.upper() >= ref4.lower());

    // Round trip: inverse recovers the exact input.
    Interval back = functional_eq_zeta_inverse(1, 1, 1, z2, kPrec);
    CHECK(back.contains(make_rational(-1, 12)));
    CHECK(back.width() < make_rational(1, Int(1) << 300));
}

TEST_CASE("L functional equation recovers -1/2 for the Gaussian field") {
    ZetaOptions opts;
    opts.precision_bits = kPrec;
    opts.prime_cap = 100000;
    Interval L3 = euler_product_L3(pair_d1(-4), opts);
    Interval Lm2 = functional_eq_L(1, 1, Int(4), L3, kPrec);
    CHECK(Lm2.contains(make_rational(-1, 2)));
    CHECK(Lm2.width() < rational_from_string("0.0000000001"));

    CHECK_THROWS_AS(functional_eq_L(1, 1, Int(1), L3, kPrec), std::invalid_argument);
}

TEST_CASE("rational reconstruction") {
    Rational eps = make_rational(1, Int("10000000000"));
    auto widen = [&](const Rational& q) {
        return Interval::from_endpoints(q - eps, q + eps, kPrec);
    };
    CHECK(rational_reconstruct(widen(make_rational(4, 5)), Int(10000)) == make_rational(4, 5));
    CHECK(rational_reconstruct(widen(make_rational(1, 2)), Int(10000)) == make_rational(1, 2));
    CHECK(rational_reconstruct(widen(Rational(2400)), Int(10000)) == Rational(2400));
    CHECK(rational_reconstruct(widen(make_rational(-16, 7)), Int(10000)) == make_rational(-16, 7));

    // pi is not close to any rational with denominator <= 10.
    Interval pi_apx = Interval::from_endpoints(rational_from_string("3.1415926535"),
                                               rational_from_string("3.1415926536"), kPrec);
    CHECK_THROWS_AS(rational_reconstruct(pi_apx, Int(10)), NoRationalFound);

    // too-wide interval is refused
    Interval wide = Interval::from_endpoints(Rational(0), make_rational(1, 100), kPrec);
    CHECK_THROWS_AS(rational_reconstruct(wide, Int(10000)), PrecisionInsufficient);

    // identity on a grid of rationals with terms up to 1000
    for (long num = -999; num <= 999; num += 67) {
        for (long den = 1; den <= 1000; den += 41) {
            Rational q = make_rational(num, den);
            CHECK(rational_reconstruct(widen(q), Int(10000)) == q);
        }
    }
}

TEST_CASE("exact L values for degree-1 pairs") {
    CHECK(L_rel_minus2(pair_d1(-4)) == make_rational(-1, 2));
    CHECK(L_rel_minus2(pair_d1(-7)) == make_rational(-16, 7));
    CHECK(L_rel_minus2(pair_d1(-8)) == Rational(-3));
}

TEST_CASE("exact L values for degree-2 pairs via characters") {
    CHECK(pair_C1().ext.kind == QuarticKind::CyclicPrime);
    CHECK(pair_C2().ext.kind == QuarticKind::Biquadratic);
    CHECK(L_rel_minus2(pair_C1()) == make_rational(4, 5));
    CHECK(L_rel_minus2(pair_C2()) == make_rational(32, 9));
    CHECK(L_rel_minus2(pair_C3()) == Rational(15));
    CHECK(L_rel_minus2(pair_F1()) == Rational(2400));
    CHECK(L_rel_minus2(pair_C23()) == make_rational(48, 7));
}

TEST_CASE("numeric route agrees with the exact route") {
    ZetaOptions opts;
    opts.precision_bits = kPrec;
    opts.prime_cap = 100000;
    EulerFactorCache cache(kPrec);
    opts.cache = &cache;
    CHECK(L_rel_minus2_numeric(pair_d1(-4), opts) == make_rational(-1, 2));
    CHECK(L_rel_minus2_numeric(pair_d1(-7), opts) == make_rational(-16, 7));
    CHECK(L_rel_minus2_numeric(pair_C1(), opts) == make_rational(4, 5));
    CHECK(L_rel_minus2_numeric(pair_C2(), opts) == make_rational(32, 9));
    CHECK(L_rel_minus2_numeric(pair_F1(), opts) == Rational(2400));
}

TEST_CASE("script R reproduces the closed-form covolume constants") {
    CHECK(script_R(pair_d1(-4)) == make_rational(1, 23040));
    CHECK(script_R(pair_d1(-7)) == make_rational(1, 5040));
    CHECK(script_R(pair_d1(-23)) == make_rational(1, 240));
    CHECK(script_R(pair_d1(-47)) == make_rational(1, 40));
    CHECK(script_R(pair_C1()) == make_rational(1, 144000));
    CHECK(script_R(pair_C2()) == make_rational(1, 32400));
    CHECK(script_R(pair_C3()) == make_rational(1, 7680));
    CHECK(script_R(pair_F1()) == make_rational(1, 48));
    CHECK(script_R(pair_C23()) == make_rational(2503, 168));
}

TEST_CASE("divisor-sum zeta values agree with an independent Dirichlet-series oracle") {
    // For each real quadratic discriminant D <= 100, evaluate
    // zeta_k(2) = zeta(2) L(2, chi_D) with the L-series summed directly
    // (partial sums of chi are bounded by |D|, so the tail after N terms is
    // at most 2|D|/N^2), convert via the functional equation, and compare
    // with the exact divisor-sum value.
    const long N = 1000000;
    for (long D = 5; D <= 100; ++D) {
        if (D % 4 != 0 && D % 4 != 1) continue;
        if (!is_fundamental_discriminant(D) || D == 1) continue;
        mpfr_t acc, term;
        mpfr_init2(acc, kPrec);
        mpfr_init2(term, kPrec);
        mpfr_set_zero(acc, 1);
        for (long n = 1; n <= N; ++n) {
            int c = kronecker_symbol(D, n);
            if (c == 0) continue;
            mpfr_set_ui(term, (unsigned long)(n * n), MPFR_RNDN);
            mpfr_ui_div(term, 1, term, MPFR_RNDN);
            if (c > 0)
                mpfr_add(acc, acc, term, MPFR_RNDN);
            else
                mpfr_sub(acc, acc, term, MPFR_RNDN);
        }
        // widen by series tail plus a generous rounding allowance
        Rational tail = make_rational(2 * D, Int(N) * Int(N)) + make_rational(1, Int(1) << 200);
        mpq_t lo, hi;
        mpq_inits(lo, hi, nullptr);
        mpfr_get_q(lo, acc);
        mpq_set(hi, lo);
        Rational L2 = Rational(lo);
        mpq_clears(lo, hi, nullptr);
        mpfr_clears(acc, term, nullptr);

        Interval L2iv = Interval::from_endpoints(L2 - tail, L2 + tail, kPrec);
        Interval zk2 = (pow_si(Interval::pi(kPrec), 2) / Interval::from_long(6, kPrec)) * L2iv;
        Interval back = functional_eq_zeta_inverse(2, D, 1, zk2, kPrec);
        Rational exact = zeta_quadratic_neg(D, 1);
        CAPTURE(D);
        CHECK(back.contains(exact));
        CHECK(back.width() < rational_from_string("0.000000001"));
    }
}
