#include <catch2/catch_amalgamated.hpp>

#include "a3vol/interval.hpp"

using namespace a3vol;

static constexpr mpfr_prec_t kPrec = 256;

TEST_CASE("interval basics") {
    Interval a = Interval::from_rational(make_rational(1, 3), kPrec);
    CHECK(a.lower() <= make_rational(1, 3));
    CHECK(a.upper() >= make_rational(1, 3));
    CHECK(a.contains(make_rational(1, 3)));
    CHECK(a.width() > 0);  // 1/3 is not a binary rational
    CHECK(a.width() < make_rational(1, Int(1) << 200));

    Interval b = Interval::from_long(2, kPrec);
    CHECK((a + b).contains(make_rational(7, 3)));
    CHECK((b - a).contains(make_rational(5, 3)));
    CHECK((a * b).contains(make_rational(2, 3)));
    CHECK((b / a).strictly_above(make_rational(59, 10)));
    CHECK((b / a).strictly_below(make_rational(61, 10)));
}

TEST_CASE("interval sign handling in products") {
    Interval m = Interval::from_endpoints(make_rational(-2), make_rational(3), kPrec);
    Interval n = Interval::from_endpoints(make_rational(-5), make_rational(1), kPrec);
    Interval p = m * n;
    CHECK(p.contains(make_rational(-15)));  // 3 * -5
    CHECK(p.contains(make_rational(10)));   // -2 * -5
    CHECK(p.contains(Rational(0)));
    CHECK_THROWS(m / n);
}

TEST_CASE("pi and integer powers") {
    Interval pi = Interval::pi(kPrec);
    CHECK(pi.strictly_above(make_rational(314159, 100000)));
    CHECK(pi.strictly_below(make_rational(314160, 100000)));

    Interval pi2 = pow_si(pi, 2);
    CHECK(pi2.strictly_above(rational_from_string("9.8696")));
    CHECK(pi2.strictly_below(rational_from_string("9.8697")));

    Interval inv = pow_si(pi, -2);
    CHECK(inv.strictly_above(rational_from_string("0.101321")));
    CHECK(inv.strictly_below(rational_from_string("0.101322")));

    Interval neg = pow_si(-pi, 3);
    CHECK(neg.strictly_below(rational_from_string("-31.0062")));
    CHECK(neg.strictly_above(rational_from_string("-31.0063")));
}

TEST_CASE("exp log round trip") {
    Interval x = Interval::from_rational(make_rational(5, 4), kPrec);
    Interval y = exp(log(x));
    CHECK(y.contains(make_rational(5, 4)));
    CHECK(y.width() < make_rational(1, Int(1) << 200));
}

TEST_CASE("rational powers") {
    Interval two = Interval::from_long(2, kPrec);
    Interval r = pow_rat(two, make_rational(1, 2), kPrec);
    Interval r2 = r * r;
    CHECK(r2.contains(Rational(2)));
    CHECK(r.strictly_above(rational_from_string("1.41421")));
    CHECK(r.strictly_below(rational_from_string("1.41422")));

    // 8^(2/3) = 4
    Interval e = pow_rat(Interval::from_long(8, kPrec), make_rational(2, 3), kPrec);
    CHECK(e.contains(Rational(4)));
}

TEST_CASE("zeta and gamma enclosures") {
    // zeta(2) = pi^2/6
    Interval z2 = zeta(Interval::from_long(2, kPrec));
    Interval ref = pow_si(Interval::pi(kPrec), 2) / Interval::from_long(6, kPrec);
    CHECK(z2.lower() <= ref.upper());
    CHECK(z2.upper() >= ref.lower());

    // Gamma(1.5) = sqrt(pi)/2
    Interval g = gamma(Interval::from_rational(make_rational(3, 2), kPrec));
    Interval gref = sqrt(Interval::pi(kPrec)) / Interval::from_long(2, kPrec);
    CHECK(g.lower() <= gref.upper());
    CHECK(g.upper() >= gref.lower());
    CHECK(g.strictly_above(rational_from_string("0.886")));
    CHECK(g.strictly_below(rational_from_string("0.8863")));

    CHECK_THROWS(zeta(Interval::from_long(1, kPrec)));
    CHECK_THROWS(gamma(Interval::from_long(3, kPrec)));
}

TEST_CASE("certified comparisons are exact") {
    Interval x = Interval::from_rational(rational_from_string("18.9299999"), kPrec);
    CHECK(x.strictly_below(rational_from_string("18.93")));
    CHECK_FALSE(x.strictly_above(rational_from_string("18.93")));
}
