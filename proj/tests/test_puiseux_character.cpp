#include "sl2wt/character.hpp"

#include "doctest.h"

using namespace sl2wt;

TEST_CASE("partition generating function") {
    static const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    PuiseuxSeries ps = partition_series(10);
    for (long n = 0; n <= 10; ++n) CHECK(ps.coefficient(Rational(n)) == p[n]);
}

TEST_CASE("eta satisfies the pentagonal number theorem") {
    // q^{-1/24} eta(q) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
    PuiseuxSeries eta = dedekind_eta(Rational(30));
    for (long n = 0; n <= 29; ++n) {
        Rational expect = 0;
        for (long k = -10; k <= 10; ++k)
            if (k * (3 * k - 1) / 2 == n) expect += (k % 2 == 0) ? 1 : -1;
        CHECK(eta.coefficient(Rational(n) + rat(1, 24)) == expect);
    }
}

TEST_CASE("eta times its inverse is one") {
    PuiseuxSeries eta = dedekind_eta(Rational(12));
    PuiseuxSeries prod = eta * eta.inverse();
    CHECK(prod.coefficient(0) == 1);
    for (const auto& [e, c] : prod.terms())
        if (e != 0) CHECK(c == 0);
    // 1/eta has partition-number coefficients.
    PuiseuxSeries inv = eta.inverse();
    CHECK(inv.coefficient(rat(-1, 24) + 5) == 7);
}

TEST_CASE("cutoff propagation through products") {
    PuiseuxSeries a = PuiseuxSeries::monomial(rat(1, 2), 1) + PuiseuxSeries::zero_to(3);
    PuiseuxSeries b = PuiseuxSeries::monomial(Rational(2), 5) + PuiseuxSeries::zero_to(7);
    PuiseuxSeries prod = a * b;
    REQUIRE(prod.cutoff().has_value());
    // min(3 + 2, 7 + 1/2) = 5.
    CHECK(*prod.cutoff() == 5);
    CHECK(prod.coefficient(rat(5, 2)) == 5);
    // Exact finite series carry no cutoff.
    PuiseuxSeries exact = PuiseuxSeries(Rational(1)) + PuiseuxSeries::monomial(1, -1);
    CHECK_FALSE((exact * exact).cutoff().has_value());
    CHECK((exact * exact).coefficient(1) == -2);
}

TEST_CASE("shift truncate leading exponent") {
    PuiseuxSeries s = PuiseuxSeries::monomial(rat(-1, 8), 3) + PuiseuxSeries::monomial(2, 1);
    CHECK(s.leading_exponent() == rat(-1, 8));
    CHECK(s.shifted(rat(1, 8)).leading_exponent() == 0);
    PuiseuxSeries t = s.truncated(1);
    CHECK(t.coefficient(2) == 0);
    REQUIRE(t.cutoff().has_value());
    CHECK(*t.cutoff() == 1);
}

TEST_CASE("exponent denominator bound is enforced") {
    Integer saved = PuiseuxSeries::max_exponent_denominator();
    PuiseuxSeries::set_max_exponent_denominator(24);
    CHECK_THROWS_AS(PuiseuxSeries::monomial(rat(1, 25), 1), domain_error);
    PuiseuxSeries::set_max_exponent_denominator(saved);
    CHECK_NOTHROW(PuiseuxSeries::monomial(rat(1, 25), 1));
}

TEST_CASE("two-variable convolution matches Laurent polynomial arithmetic") {
    // (z + z^{-1})^2 = z^2 + 2 + z^{-2}.
    TwoVarCharacter a(-1, 1);
    a.set_column(-1, PuiseuxSeries(Rational(1)));
    a.set_column(1, PuiseuxSeries(Rational(1)));
    TwoVarCharacter sq = a * a;
    CHECK(sq.column(-2).coefficient(0) == 1);
    CHECK(sq.column(0).coefficient(0) == 2);
    CHECK(sq.column(2).coefficient(0) == 1);
    CHECK((sq - sq).is_zero());
}

TEST_CASE("q-skew multiplies column a by q^{a h}") {
    TwoVarCharacter a(-2, 2);
    a.set_column(-2, PuiseuxSeries(Rational(3)));
    a.set_column(2, PuiseuxSeries::monomial(1, 1));
    TwoVarCharacter sk = a.q_skewed(rat(1, 2));
    CHECK(sk.column(-2).coefficient(-1) == 3);
    CHECK(sk.column(2).coefficient(2) == 1);
}

TEST_CASE("z-shift moves the window") {
    TwoVarCharacter a(0, 2);
    a.set_column(0, PuiseuxSeries(Rational(1)));
    TwoVarCharacter sh = a.z_shifted(rat(-1, 2));
    CHECK(sh.z_lo() == rat(-1, 2));
    CHECK(sh.column(rat(-1, 2)).coefficient(0) == 1);
}

TEST_CASE("formal delta of z squared") {
    TwoVarCharacter d = TwoVarCharacter::formal_delta(-5, 5);
    for (long e = -5; e <= 5; ++e)
        CHECK(d.column(Rational(e)).coefficient(0) == (e % 2 == 0 ? 1 : 0));
}

TEST_CASE("restricted drops outside columns") {
    TwoVarCharacter a(-4, 4);
    for (long e = -4; e <= 4; e += 2) a.set_column(Rational(e), PuiseuxSeries(Rational(e + 9)));
    TwoVarCharacter r = a.restricted(-2, 2);
    CHECK(r.z_terms().size() == 3);
    CHECK(r.column(0).coefficient(0) == 9);
}
