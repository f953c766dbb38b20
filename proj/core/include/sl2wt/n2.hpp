#pragma once

#include "sl2wt/ffspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace sl2wt {

enum class N2Gen { T, J, Gp, Gm };

/// Which dictionary maps the symbolic mode index of an N=2 generator to the
/// standard (z^{-p-1}) index of its composite field.  `symmetric` is the
/// grading in which the superconformal bracket table takes its textbook
/// form; `realization` is the grading inherited from the free fields, in
/// which G+_{-1/2} acts as the bare fermion mode.
enum class N2Moding { symmetric, realization };

struct N2Params {
    Rational ell;    // level parameter, not 0 or -2
    Rational h;      // Virasoro tensorand highest weight
    Rational lambda; // boson momentum
    bool simple_factor = false;
};

/// Central charge of the Virasoro tensorand, c(ell + 2).
Rational n2_factor_charge(const Rational& ell);

/// Data of the N=2 parameters attached to ell.
Rational n2_central_charge(const Rational& ell);
Rational n2_kappa_x(const Rational& ell);

/// p_r(h, lambda) = (ell+2) h - (r-1+ell lambda/4)^2 - (ell+1)(r-1+ell lambda/4).
Rational n2_p_factor(const Rational& ell, const Rational& h, const Rational& lambda, long r);

/// Image of lambda under the self-duality of the realization.
Rational n2_lambda_dual(const Rational& ell, const Rational& lambda);

/// Free-field realization of the N=2 superconformal algebra of central
/// charge 3 ell/(ell+2) on a Virasoro x fermion x boson module.
class N2Realization {
  public:
    explicit N2Realization(N2Params p);

    FFSpace& space() { return sp_; }
    FieldApplicator& applicator() { return app_; }
    const N2Params& params() const { return par_; }
    Rational central_charge() const { return c_; }

    const Field::Ptr& field(N2Gen g) const;

    /// Standard index of generator mode `n` under the given dictionary.
    long std_index(N2Gen g, const Rational& n, N2Moding moding) const;
    StateVec apply(N2Gen g, const Rational& n, const StateVec& v, N2Moding moding);

    /// Eigenvalues of T_0 and J_0 (realization moding) on the designated top
    /// vector psi-_{-1/2} |top>; throws if it is not a joint eigenvector.
    std::pair<Rational, Rational> top_data();

    /// Checks the full superconformal bracket table by applying commutators
    /// to every basis state of free weight <= w_max, mode indices bounded by
    /// mode_max.  Returns a description of the first failure, empty if clean.
    std::string verify_relations(const Rational& w_max, long mode_max);
    /// Number of (bracket, mode pair, state) triples the last call examined.
    long relations_checked() const { return relations_checked_; }

    /// Compares G-_{-b} ... G-_{-1/2}|top> against the product of the p_r
    /// factors times psi-_{-b} ... psi-_{-1/2}|top> for the full half-odd
    /// ladder of length len.  Empty string on success.
    std::string ladder_factorization_check(long len);

    /// Dimensions (per free weight 0, 1/2, ..., w_max) of the submodule
    /// generated from the top vector by the negative-index realization
    /// modes, next to the full graded dimensions.
    std::pair<std::vector<long>, std::vector<long>> generation_dims(const Rational& w_max);

    /// Span of u_{(-1)} q over positive-weight vacuum descendants u of the
    /// four generator fields and basis vectors q, at each free weight
    /// 1/2, 1, ..., d.  Membership test against it, and the graded
    /// dimensions of the quotient (weight 0 included).
    bool c1_contains(const StateVec& v);
    std::vector<std::pair<Rational, long>> c1_quotient_dims(const Rational& d);

  private:
    SparseSpan& c1_span(const Rational& w);
    std::vector<Field::Ptr> vacuum_descendants(const Rational& d);
    StateVec apply_sym_bracket(N2Gen g, const Rational& n, const StateVec& v);

    N2Params par_;
    Rational c_;
    FFSpace sp_;
    FieldApplicator app_;
    std::map<N2Gen, Field::Ptr> fields_;
    Field::Ptr gm_bracket_; // 2/(ell+2) G-, the table-normalized partner
    std::map<Rational, SparseSpan> c1_;
    Rational c1_built_to_ = -1;
    long relations_checked_ = 0;
};

} // namespace sl2wt
