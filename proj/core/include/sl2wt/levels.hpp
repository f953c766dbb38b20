#pragma once

#include "sl2wt/rational.hpp"

namespace sl2wt {

/// Admissible level k = -2 + u/v for affine sl2, with all derived constants.
struct AdmissibleLevel {
    long u = 0;
    long v = 0;
    Rational k;     // -2 + u/v
    Rational t;     // u/v
    Rational c_vir; // 13 - 6t - 6/t
    Rational c_sug; // 3k/(k+2)

    bool integral() const { return v == 1; }
};

/// Kazama-Suzuki partner data: (ell+2)(k_w+1) = 1, c = 3 ell/(ell+2).
struct DualPair {
    Rational ell;
    Rational k_w;
    Rational c_n2;
};

/// Coset data: level k together with k+1 and the minimal-model level
/// k' = (k+3)/(k+2) - 2.
struct CosetTriple {
    AdmissibleLevel base;    // (u, v)
    AdmissibleLevel shifted; // (u+v, v), level k+1
    long minimal_u = 0;      // minimal model (u+v, u), level k'
    long minimal_v = 0;
    Rational k_prime;
};

AdmissibleLevel level_from_uv(long u, long v);

/// h_{r,s}(t) = (s^2-1)t/4 - (rs-1)/2 + (r^2-1)/(4t).
Rational virasoro_h(long r, long s, const Rational& t);

/// c(t) = 13 - 6t - 6/t.
Rational virasoro_c(const Rational& t);

/// (lambda_{r,s}, Delta_{r,s}) with lambda = r - 1 - ts and
/// Delta = ((vr-us)^2 - v^2)/(4uv).  Requires 1<=r<=u-1, 1<=s<=v-1.
std::pair<Rational, Rational> affine_weights(long r, long s, const AdmissibleLevel& lvl);

DualPair dual_levels(const Rational& ell);
inline DualPair dual_levels(const AdmissibleLevel& lvl) { return dual_levels(lvl.k); }

CosetTriple coset_triple(const AdmissibleLevel& lvl);

/// The proven ribbon criterion: v in {2,3} and u = -1 mod v.
bool ribbon_known(const AdmissibleLevel& lvl);

} // namespace sl2wt
