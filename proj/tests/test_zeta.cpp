#include <catch2/catch_amalgamated.hpp>

#include "a3vol/zeta.hpp"

using namespace a3vol;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    CHECK(bernoulli(13) == Rational(0));
    CHECK_THROWS(bernoulli(65));

    // Defining recurrence: sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1.
    for (unsigned n = 1; n <= 40; ++n) {
        Rational acc(0);
        for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
        CHECK(acc == 0);
    }
}

TEST_CASE("riemann zeta at negative odd integers") {
    CHECK(zeta_rational_neg(1) == make_rational(-1, 12));
    CHECK(zeta_rational_neg(3) == make_rational(1, 120));
    Rational prod = zeta_rational_neg(1) * zeta_rational_neg(3);
    CHECK(abs(prod) == make_rational(1, 1440));
    CHECK_THROWS(zeta_rational_neg(2));
}

TEST_CASE("real quadratic zeta values via divisor sums") {
    CHECK(zeta_quadratic_neg(5, 1) == make_rational(1, 30));
    CHECK(zeta_quadratic_neg(5, 3) == make_rational(1, 60));
    CHECK(zeta_quadratic_neg(8, 1) == make_rational(1, 12));
    CHECK(zeta_quadratic_neg(33, 1) == Rational(1));
    CHECK(zeta_quadratic_neg(33, 3) == make_rational(141, 10));
    CHECK(zeta_quadratic_neg(44, 1) == make_rational(7, 6));
    CHECK(zeta_quadratic_neg(44, 3) == make_rational(2153, 60));
    CHECK(zeta_quadratic_neg(56, 1) == make_rational(5, 3));
    CHECK(zeta_quadratic_neg(56, 3) == make_rational(2503, 30));
    CHECK(zeta_quadratic_neg(57, 1) == make_rational(7, 3));
    CHECK(zeta_quadratic_neg(57, 3) == make_rational(2867, 30));
    CHECK(zeta_quadratic_neg(60, 1) == Rational(2));
    CHECK(zeta_quadratic_neg(60, 3) == make_rational(537, 5));
    CHECK_THROWS(zeta_quadratic_neg(7, 1));   // not fundamental
    CHECK_THROWS(zeta_quadratic_neg(-4, 1));  // not real
}

TEST_CASE("kronecker characters") {
    DirichletCharacter chi = DirichletCharacter::kronecker_char(-4);
    CHECK(chi.conductor() == 4);
    CHECK(chi.order() == 2);
    CHECK(chi.is_odd());
    CHECK(chi.value(1L).re == 1);
    CHECK(chi.value(3L).re == -1);
    CHECK(chi.value(2L).re == 0);

    // complete multiplicativity on units
    DirichletCharacter chi7 = DirichletCharacter::kronecker_char(-7);
    for (long a = 1; a < 7; ++a) {
        for (long b = 1; b < 7; ++b) {
            GaussInt lhs = chi7.value(a * b);
            GaussInt rhs = gauss_mul(chi7.value(a), chi7.value(b));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("quartic residue character mod 5") {
    DirichletCharacter chi = DirichletCharacter::quartic_residue_char(5);
    CHECK(chi.order() == 4);
    CHECK(chi.is_odd());
    // chi(4) = chi(2)^2 = -1 regardless of the generator convention
    CHECK(chi.value(4L).re == -1);
    CHECK(chi.value(4L).im == 0);
    GaussInt v2 = chi.value(2L);
    CHECK(v2.re == 0);
    CHECK((v2.im == 1 || v2.im == -1));
    CHECK_THROWS(DirichletCharacter::quartic_residue_char(17));  // even character
    CHECK_THROWS(DirichletCharacter::quartic_residue_char(9));   // not prime
}

TEST_CASE("generalized bernoulli numbers and L values") {
    CycRational b4 = generalized_bernoulli(3, DirichletCharacter::kronecker_char(-4));
    CHECK(b4.re == make_rational(3, 2));
    CHECK(b4.im == 0);
    CHECK(dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(-4)).re == make_rational(-1, 2));

    CycRational b7 = generalized_bernoulli(3, DirichletCharacter::kronecker_char(-7));
    CHECK(abs(b7.re) == make_rational(48, 7));
    CHECK(dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(-7)).re == make_rational(-16, 7));

    // trivial character mod 1: B_3(1) = 0
    CycRational b1 = generalized_bernoulli(3, DirichletCharacter::kronecker_char(1));
    CHECK(b1.re == 0);
    CHECK(b1.im == 0);

    CHECK(dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(-3)).re == make_rational(-2, 9));
    CHECK(dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(-8)).re == Rational(-3));
    CHECK(dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(-11)).re == Rational(-6));
    CHECK(dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(-20)).re == Rational(-30));
    CHECK(dirichlet_L_at_neg(3, DirichletCharacter::kronecker_char(-15)).re == Rational(-16));

    // conjugate pair for the cyclic quartic character mod 5:
    // |B_{3,chi}|^2 = 36/5, so L(-2,chi) L(-2,chi-bar) = 4/5.
    CycRational bq = generalized_bernoulli(3, DirichletCharacter::quartic_residue_char(5));
    CHECK(bq.re * bq.re + bq.im * bq.im == make_rational(36, 5));
}
