#pragma once

#include "sl2wt/modekernel.hpp"
#include "sl2wt/virasoro.hpp"

#include <optional>
#include <vector>

namespace sl2wt {

/// Basis monomial of the product of a Virasoro highest-weight module, a
/// charged free-fermion Fock space and a rank-one boson Fock space:
/// L_{-A} X_{-C} psi+_{-B} psi-_{-Bt} |top>.  A, C are partitions; B and Bt
/// hold doubled half-odd indices (positive odd integers), strictly
/// decreasing.
struct FFMonomial {
    Partition A, C;
    std::vector<long> B, Bt;

    friend auto operator<=>(const FFMonomial&, const FFMonomial&) = default;
};

std::string ff_str(const FFMonomial& m);

/// The free-field module as a graded module over the four-generator mode
/// algebra {L, X, psi+, psi-}.  Grading is the free conformal weight
/// (relative, top at 0).  With simple_factor set, the Virasoro tensorand is
/// the simple quotient L(c_factor, h): partitions are reduced modulo the
/// radical of the contravariant form after every L action.
class FFSpace : public GradedModule {
  public:
    struct Params {
        Rational c_factor;
        Rational h;
        Rational lambda;  // X_0 eigenvalue
        Rational kappa_x; // [X_m, X_n] = m kappa_x delta_{m+n,0}
        bool simple_factor = false;
    };

    explicit FFSpace(Params p);

    const Algebra& algebra() const override { return alg_; }
    StateVec apply_generator(GenId g, const Rational& mode, int state) override;
    Rational weight(int state) const override;

    GenId L() const { return L_; }
    GenId X() const { return X_; }
    GenId psi_p() const { return pp_; }
    GenId psi_m() const { return pm_; }

    const Params& params() const { return par_; }

    int state_id(const FFMonomial& m);
    const FFMonomial& monomial(int id) const { return states_.at(id); }
    std::size_t size() const { return states_.size(); }

    /// All basis monomials of the given exact free weight, interned.
    std::vector<int> basis_states(const Rational& weight);

  private:
    Params par_;
    Algebra alg_;
    GenId L_, X_, pp_, pm_;
    VirasoroAction act_;
    std::optional<RadicalReducer> red_;
    std::vector<FFMonomial> states_;
    std::map<FFMonomial, int> ids_;
};

} // namespace sl2wt
