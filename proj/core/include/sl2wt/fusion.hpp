#pragma once

#include "sl2wt/affine.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sl2wt {

using FusionDecomposition = std::map<ModuleLabel, long>;

/// Fusion of the unflowed simple current family member L(r) with x, where x
/// is a (possibly non-canonical) simple or a projective P-kind label.  The
/// result is in canonical labels with multiplicities.
FusionDecomposition fuse(long r, const ModuleLabel& x);

/// One summand of an induction decomposition: a label one level up paired
/// with a simple minimal-model module.
struct BranchingSummand {
    ModuleLabel level_up;
    MinimalLabel minimal;
};

/// Decomposition of (x tensor level-1 module a) as a sum over first-index
/// values m of (level-up label with first index m) x (minimal M_{m,r}).
/// Requires x to have first index 1 up to the dense-label identification.
std::vector<BranchingSummand> induct_decompose(const ModuleLabel& x, int a);

struct BranchParams {
    AdmissibleLevel lvl; // base level (u, v)
    long r = 1;          // first index of the dense module (must be 1)
    long s = 1;
    int a = 1; // level-1 label in {1, 2}
    long ell = 0;
    Rational lambda;
    /// Shift applied to lambda on the decomposed side; defaults to a/2, the
    /// value under which the identity holds.  Override for negative controls.
    std::optional<Rational> rhs_lambda_shift;
};

/// Residual of the two-variable character identity behind induct_decompose:
/// flow_ell(ch E) * ch L^1 minus the sum over m of flow_ell(ch E') * ch M.
/// Returns the residual restricted to a window of half-width z_window around
/// the product's central column, each column truncated at its leading
/// exponent plus q_order.  Zero residual certifies the identity to that
/// order; all truncations are tracked, so a reported zero is honest.
TwoVarCharacter branching_char_verify(const BranchParams& p, long q_order, long z_window);

} // namespace sl2wt
