#include "sl2wt/levels.hpp"

#include "doctest.h"

using namespace sl2wt;

TEST_CASE("admissible level constants at (3,2)") {
    AdmissibleLevel lvl = level_from_uv(3, 2);
    CHECK(lvl.k == rat(-1, 2));
    CHECK(lvl.t == rat(3, 2));
    CHECK(lvl.c_vir == 0);
    CHECK(lvl.c_sug == -1);
    CHECK_FALSE(lvl.integral());
    CHECK(level_from_uv(3, 1).integral());
}

TEST_CASE("level validation") {
    CHECK_THROWS_AS(level_from_uv(4, 2), domain_error); // not coprime
    CHECK_THROWS_AS(level_from_uv(1, 3), domain_error); // u < 2
    CHECK_THROWS_AS(level_from_uv(3, 0), domain_error);
}

TEST_CASE("Virasoro weight table") {
    CHECK(virasoro_h(2, 2, rat(4, 3)) == rat(1, 16)); // Ising sigma at (4,3)
    CHECK(virasoro_h(1, 1, rat(7, 5)) == 0);
    // Kac-table symmetry h_{r,s} = h_{u-r,v-s} at t = u/v.
    for (long r = 1; r <= 4; ++r)
        for (long s = 1; s <= 2; ++s)
            CHECK(virasoro_h(r, s, rat(5, 3)) == virasoro_h(5 - r, 3 - s, rat(5, 3)));
    CHECK(virasoro_c(rat(4, 3)) == rat(1, 2));
}

TEST_CASE("affine weight data at (3,2)") {
    AdmissibleLevel lvl = level_from_uv(3, 2);
    auto [lam, delta] = affine_weights(1, 1, lvl);
    CHECK(lam == rat(-3, 2)); // r - 1 - t s
    CHECK(delta == rat(-1, 8));
    CHECK_THROWS_AS(affine_weights(3, 1, lvl), domain_error);
    CHECK_THROWS_AS(affine_weights(1, 2, lvl), domain_error);
}

TEST_CASE("Kazama-Suzuki dual levels") {
    for (auto [u, v] : {std::pair<long, long>{3, 2}, {5, 3}, {7, 2}}) {
        AdmissibleLevel lvl = level_from_uv(u, v);
        DualPair d = dual_levels(lvl);
        CHECK(d.ell == lvl.k);
        CHECK((d.ell + 2) * (d.k_w + 1) == 1);
        CHECK(d.c_n2 == 3 * d.ell / (d.ell + 2));
    }
}

TEST_CASE("coset triple") {
    CosetTriple ct = coset_triple(level_from_uv(3, 2));
    CHECK(ct.shifted.u == 5);
    CHECK(ct.shifted.v == 2);
    CHECK(ct.shifted.k == ct.base.k + 1);
    CHECK(ct.minimal_u == 5);
    CHECK(ct.minimal_v == 3);
    // k' = (k+3)/(k+2) - 2.
    CHECK(ct.k_prime == (ct.base.k + 3) / (ct.base.k + 2) - 2);
}

TEST_CASE("ribbon criterion") {
    CHECK(ribbon_known(level_from_uv(3, 2)));
    CHECK(ribbon_known(level_from_uv(5, 3)));
    CHECK(ribbon_known(level_from_uv(5, 2)));
    CHECK_FALSE(ribbon_known(level_from_uv(4, 3)));
    CHECK_FALSE(ribbon_known(level_from_uv(7, 4)));
}
