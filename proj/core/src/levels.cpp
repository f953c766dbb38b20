#include "sl2wt/levels.hpp"

#include <numeric>

namespace sl2wt {

AdmissibleLevel level_from_uv(long u, long v) {
    if (u < 2 || v < 1) throw domain_error("admissible level needs u >= 2, v >= 1");
    if (std::gcd(u, v) != 1) throw domain_error("u and v must be coprime");
    AdmissibleLevel lvl;
    lvl.u = u;
    lvl.v = v;
    lvl.t = rat(u, v);
    lvl.k = lvl.t - 2;
    lvl.c_vir = virasoro_c(lvl.t);
    lvl.c_sug = 3 * lvl.k / (lvl.k + 2);
    return lvl;
}

Rational virasoro_c(const Rational& t) {
    if (t == 0) throw domain_error("c(t) undefined at t = 0");
    return 13 - 6 * t - 6 / t;
}

Rational virasoro_h(long r, long s, const Rational& t) {
    if (r < 1 || s < 1) throw domain_error("virasoro_h needs r, s >= 1");
    if (t == 0) throw domain_error("virasoro_h undefined at t = 0");
    return rat(s * s - 1, 4) * t - rat(r * s - 1, 2) + rat(r * r - 1, 4) / t;
}

std::pair<Rational, Rational> affine_weights(long r, long s, const AdmissibleLevel& lvl) {
    if (r < 1 || r > lvl.u - 1 || s < 1 || s > lvl.v - 1)
        throw domain_error("affine_weights: (r,s) out of range for (u,v)");
    Rational lambda = Rational(r - 1) - lvl.t * s;
    long d = lvl.v * r - lvl.u * s;
    Rational delta = rat(d * d - lvl.v * lvl.v) / rat(4 * lvl.u * lvl.v);
    return {lambda, delta};
}

DualPair dual_levels(const Rational& ell) {
    if (ell == -2) throw domain_error("dual level undefined at ell = -2");
    DualPair d;
    d.ell = ell;
    d.k_w = Rational(1) / (ell + 2) - 1;
    d.c_n2 = 3 * ell / (ell + 2);
    return d;
}

CosetTriple coset_triple(const AdmissibleLevel& lvl) {
    CosetTriple c;
    c.base = lvl;
    c.shifted = level_from_uv(lvl.u + lvl.v, lvl.v);
    c.minimal_u = lvl.u + lvl.v;
    c.minimal_v = lvl.u;
    c.k_prime = rat(lvl.u + lvl.v, lvl.u) - 2;
    return c;
}

bool ribbon_known(const AdmissibleLevel& lvl) {
    if (lvl.v != 2 && lvl.v != 3) return false;
    return (lvl.u + 1) % lvl.v == 0;
}

} // namespace sl2wt
