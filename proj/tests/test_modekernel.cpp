#include "sl2wt/ffspace.hpp"

#include "doctest.h"

using namespace sl2wt;

namespace {

FFSpace::Params generic_params() {
    return {rat(11, 7), rat(5, 3), rat(1, 5), rat(-3, 2), false};
}

} // namespace

TEST_CASE("Virasoro bracket table passes the super-Jacobi check") {
    VirasoroAlgebra va = make_virasoro_algebra(rat(-22, 5));
    CHECK(check_super_jacobi(va.alg, 4).empty());
}

TEST_CASE("moding is enforced") {
    FFSpace sp(generic_params());
    CHECK_THROWS_AS(sp.apply_generator(sp.psi_p(), Rational(-1), 0), domain_error);
    CHECK_THROWS_AS(sp.apply_generator(sp.X(), rat(-1, 2), 0), domain_error);
}

TEST_CASE("vacuum field acts as the identity") {
    FFSpace sp(generic_params());
    FieldApplicator app(sp);
    int st = sp.state_id(FFMonomial{{}, {1}, {}, {}});
    StateVec v{{st, rat(2, 3)}};
    CHECK(app.apply_std(Field::vacuum(), -1, v) == v);
    CHECK(app.apply_std(Field::vacuum(), 0, v).empty());
}

TEST_CASE("derivative field shifts the mode with factor -p") {
    FFSpace sp(generic_params());
    FieldApplicator app(sp);
    Field::Ptr psi = Field::generator(sp.algebra(), sp.psi_p());
    Field::Ptr dpsi = Field::derivative(psi);
    CHECK(dpsi->weight() == rat(3, 2));
    std::vector<int> states = sp.basis_states(rat(3, 2));
    for (int st : states) {
        StateVec v{{st, Rational(1)}};
        for (long p = -3; p <= 3; ++p) {
            StateVec lhs = app.apply_std(dpsi, p, v);
            StateVec rhs = app.apply_std(psi, p - 1, v);
            add_scaled(lhs, rhs, Rational(p));
            CHECK(lhs.empty());
        }
    }
}

TEST_CASE("iterate at -2 equals the derivative on the vacuum") {
    // a_(-2)|0> = (da)_(-1)|0>, so the two composite fields act identically.
    FFSpace sp(generic_params());
    FieldApplicator app(sp);
    Field::Ptr X = Field::generator(sp.algebra(), sp.X());
    Field::Ptr it = Field::iterate(X, -2, Field::vacuum());
    Field::Ptr dX = Field::derivative(X);
    for (int st : sp.basis_states(1))
        for (long p = -2; p <= 2; ++p) {
            StateVec v{{st, Rational(1)}};
            StateVec lhs = app.apply_std(it, p, v);
            add_scaled(lhs, app.apply_std(dX, p, v), Rational(-1));
            CHECK(lhs.empty());
        }
}

TEST_CASE("fermion number operator") {
    // :psi+ psi-:_(0) has eigenvalue |B| - |Bt| on every basis monomial.
    FFSpace sp(generic_params());
    FieldApplicator app(sp);
    Field::Ptr num = Field::normal_ordered(Field::generator(sp.algebra(), sp.psi_p()),
                                           Field::generator(sp.algebra(), sp.psi_m()));
    CHECK(num->weight() == 1);
    for (Rational w = 0; w <= rat(5, 2); w += rat(1, 2))
        for (int st : sp.basis_states(w)) {
            const FFMonomial& m = sp.monomial(st);
            StateVec out = app.apply_std(num, 0, StateVec{{st, Rational(1)}});
            Rational expect = Rational(m.B.size()) - Rational(m.Bt.size());
            if (expect == 0)
                CHECK(out.empty());
            else {
                REQUIRE(out.size() == 1);
                CHECK(out.begin()->first == st);
                CHECK(out.begin()->second == expect);
            }
        }
}

TEST_CASE("boson bilinear reproduces the Heisenberg Sugawara action") {
    // With [X_m, X_n] = m kappa delta, T_X = :XX:/(2 kappa) satisfies
    // (T_X)_(1) X_{-1}|top> = L_0-eigenvalue lambda^2/(2 kappa) + 1 piece; we
    // check the zero mode on X-monomials: eigenvalue lambda^2/(2kappa) + sum C.
    FFSpace::Params par = generic_params();
    FFSpace sp(par);
    FieldApplicator app(sp);
    Field::Ptr X = Field::generator(sp.algebra(), sp.X());
    Field::Ptr TX = Field::scaled(Rational(1) / (2 * par.kappa_x),
                                  Field::normal_ordered(X, X));
    Rational base = par.lambda * par.lambda / (2 * par.kappa_x);
    for (const std::vector<long>& C :
         {std::vector<long>{}, std::vector<long>{1}, std::vector<long>{2, 1}}) {
        FFMonomial m;
        m.C = C;
        int st = sp.state_id(m);
        StateVec out = app.apply_std(TX, 1, StateVec{{st, Rational(1)}});
        Rational expect = base;
        for (long c : C) expect += c;
        REQUIRE(out.count(st) == 1);
        CHECK(out.at(st) == expect);
    }
}

TEST_CASE("apply_word multiplies right factor first") {
    FFSpace sp(generic_params());
    FieldApplicator app(sp);
    Field::Ptr pp = Field::generator(sp.algebra(), sp.psi_p());
    Field::Ptr pm = Field::generator(sp.algebra(), sp.psi_m());
    // psi+_{-1/2} psi-_{-1/2} |top> vs psi-_{-1/2} psi+_{-1/2} |top>: the
    // monomial stores psi+ parts first, so the second order costs a sign.
    ModeWord w1{{{pp, rat(-1, 2)}, {pm, rat(-1, 2)}}};
    ModeWord w2{{{pm, rat(-1, 2)}, {pp, rat(-1, 2)}}};
    StateVec top{{0, Rational(1)}};
    StateVec a = apply_word(app, w1, top);
    StateVec b = apply_word(app, w2, top);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a.begin()->first == b.begin()->first);
    CHECK(a.begin()->second == -b.begin()->second);
}

TEST_CASE("weight bookkeeping of composite fields") {
    FFSpace sp(generic_params());
    Field::Ptr L = Field::generator(sp.algebra(), sp.L());
    Field::Ptr pm = Field::generator(sp.algebra(), sp.psi_m());
    CHECK(Field::normal_ordered(L, pm)->weight() == rat(5, 2));
    CHECK(Field::iterate(L, -3, pm)->weight() == rat(9, 2));
    CHECK(Field::sum({{rat(1, 2), pm}})->weight() == rat(1, 2));
    CHECK(Field::normal_ordered(L, pm)->parity() == Parity::odd);
    CHECK(Field::normal_ordered(pm, pm)->parity() == Parity::even);
}
