#include "sl2wt/linalg.hpp"

#include "doctest.h"

#include <random>

using namespace sl2wt;

TEST_CASE("rational parse/print round trip") {
    for (const char* s : {"0", "1", "-1", "2/3", "-7/12", "123456789123456789"}) {
        Rational r = parse_rational(s);
        CHECK(to_string(r) == s);
    }
    CHECK(parse_rational("4/6") == rat(2, 3));
    CHECK_THROWS_AS(parse_rational("1.5"), domain_error);
    CHECK_THROWS_AS(parse_rational("a/b"), domain_error);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational(""), domain_error);
}

TEST_CASE("rational helpers") {
    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_floor(rat(-7, 2)) == -4);
    CHECK(is_integer(rat(4, 2)));
    CHECK(is_half_odd(rat(3, 2)));
    CHECK_FALSE(is_half_odd(rat(3, 4)));
}

TEST_CASE("Hilbert matrix determinant") {
    // det of the 4x4 Hilbert matrix is 1/6048000 (classical value).
    QMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rational(1, i + j + 1);
    CHECK(m.determinant() == Rational(1, 6048000));
    CHECK(m.rank() == 4);
    CHECK(m.kernel_basis().empty());
}

TEST_CASE("kernel basis solves the system") {
    std::mt19937 rng(11);
    auto rnd = [&] { return Rational((long)(rng() % 19) - 9, (long)(rng() % 5) + 1); };
    // Build a 4x6 matrix: kernel has dimension >= 2.
    QMatrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rnd();
    auto kb = m.kernel_basis();
    CHECK(kb.size() == 6 - m.rank());
    for (const auto& x : kb)
        for (std::size_t i = 0; i < 4; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < 6; ++j) acc += m.at(i, j) * x[j];
            CHECK(acc == 0);
        }
}

TEST_CASE("rank of an outer product is one") {
    QMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            m.at(i, j) = Rational(i + 1) * Rational(2 * (long)j - 3, 7);
    CHECK(m.rank() == 1);
    CHECK(m.kernel_basis().size() == 4);
}

TEST_CASE("sparse span membership and dimension") {
    SparseSpan sp;
    SparseSpan::Vec a{{0, Rational(1)}, {2, rat(1, 2)}};
    SparseSpan::Vec b{{1, Rational(3)}};
    SparseSpan::Vec c{{0, Rational(2)}, {1, Rational(3)}, {2, Rational(1)}}; // 2a + b
    CHECK(sp.insert(a));
    CHECK(sp.insert(b));
    CHECK_FALSE(sp.insert(c));
    CHECK(sp.dim() == 2);
    CHECK(sp.contains(c));
    CHECK_FALSE(sp.contains({{3, Rational(1)}}));
    // The residue of any reduced vector is itself reducible to nothing.
    auto res = sp.reduce({{0, Rational(1)}, {3, rat(5, 3)}});
    CHECK_FALSE(res.empty());
    sp.insert(res);
    CHECK(sp.contains({{0, Rational(1)}, {3, rat(5, 3)}}));
}

TEST_CASE("sparse span dimension is at most the number of inserts") {
    std::mt19937 rng(5);
    SparseSpan sp;
    for (int k = 0; k < 12; ++k) {
        SparseSpan::Vec v;
        for (int j = 0; j < 4; ++j) v[(int)(rng() % 6)] = Rational((long)(rng() % 9) - 4);
        sp.insert(v);
        CHECK(sp.dim() <= 6);
    }
}
