#pragma once

#include "sl2wt/levels.hpp"
#include "sl2wt/linalg.hpp"
#include "sl2wt/modekernel.hpp"
#include "sl2wt/puiseux.hpp"

#include <map>
#include <vector>

namespace sl2wt {

/// Weakly decreasing list of positive integers, indexing L_{-I} = L_{-i1}...L_{-in}.
using Partition = std::vector<long>;

std::vector<Partition> partitions_of(long n);
long partition_count(long n);
std::string partition_str(const Partition& p);

/// Sparse vector in a Virasoro Verma module, in the PBW basis.
using PBWVec = std::map<Partition, Rational>;

struct VirasoroAlgebra {
    Algebra alg;
    GenId L;
};
VirasoroAlgebra make_virasoro_algebra(const Rational& c);

/// Straightening engine: rewrites L_n applied to PBW monomials over a fixed
/// highest-weight vector (central charge c, weight h).  Memoized.
class VirasoroAction {
  public:
    VirasoroAction(Rational c, Rational h) : c_(std::move(c)), h_(std::move(h)) {}

    const Rational& c() const { return c_; }
    const Rational& h() const { return h_; }

    /// L_n L_{-I} |h> in the PBW basis (n any integer).
    const PBWVec& apply(long n, const Partition& I);
    PBWVec apply(long n, const PBWVec& v);

  private:
    Rational c_, h_;
    std::map<std::pair<long, Partition>, PBWVec> cache_;
};

/// Shapovalov form on the level-N subspace, rows/columns in partitions_of(N)
/// order.  Process-wide memoized; concurrent fills are idempotent.
const QMatrix& gram_matrix(const Rational& c, const Rational& h, long N);

/// Graded dimensions of the simple quotient L(c,h) at levels 0..N_max,
/// computed as ranks of the Gram matrices.
std::vector<long> simple_graded_dims(const Rational& c, const Rational& h, long N_max);

/// Basis of weight-(h+N) vectors annihilated by L_1 and L_2, normalized to
/// unit L_{-1}^N coefficient when that coefficient is nonzero.  At most one
/// element for Verma modules.
std::vector<PBWVec> find_singular_vectors(const Rational& c, const Rational& h, long N);

/// Reduction modulo the radical of the Shapovalov form, level by level;
/// models the simple quotient L(c,h).  Reduced vectors are supported on the
/// non-pivot partitions of the per-level radical echelon form.
class RadicalReducer {
  public:
    RadicalReducer(Rational c, Rational h) : c_(std::move(c)), h_(std::move(h)) {}

    PBWVec reduce(const PBWVec& v);
    /// True if L_{-I}|h> survives as a basis vector of the simple quotient.
    bool is_basis_partition(const Partition& I);

  private:
    struct LevelData {
        SparseSpan radical;              // over partition indices at this level
        std::vector<Partition> parts;    // partitions_of(n) order
        std::map<Partition, int> index;
    };
    const LevelData& level(long n);

    Rational c_, h_;
    std::map<long, LevelData> levels_;
};

/// Verma module V(c,h) exposed through the generic mode-calculus interface.
class VirasoroVerma : public GradedModule {
  public:
    VirasoroVerma(const Rational& c, const Rational& h);

    const Algebra& algebra() const override { return va_.alg; }
    StateVec apply_generator(GenId g, const Rational& mode_adj, int state) override;
    Rational weight(int state) const override;
    GenId L() const { return va_.L; }

    int state_id(const Partition& I);
    const Partition& partition_of(int id) const { return states_.at(id); }
    StateVec to_states(const PBWVec& v);
    PBWVec to_pbw(const StateVec& v) const;

  private:
    VirasoroAlgebra va_;
    VirasoroAction act_;
    std::vector<Partition> states_;
    std::map<Partition, int> ids_;
};

/// Label of a simple minimal-model module M_{r,s} at (u,v); canonical
/// representative under (r,s) ~ (u-r, v-s), chosen by lexicographically
/// smaller (s,r).
struct MinimalLabel {
    long u = 0, v = 0;
    long r = 0, s = 0;

    friend bool operator==(const MinimalLabel&, const MinimalLabel&) = default;
    friend auto operator<=>(const MinimalLabel&, const MinimalLabel&) = default;
};

MinimalLabel minimal_label(long u, long v, long r, long s);
Rational minimal_h(const MinimalLabel& lab);
Rational minimal_c(const MinimalLabel& lab);
std::string minimal_str(const MinimalLabel& lab);

/// q^{h - c/24} * (graded dimensions of the simple module), to q_order terms
/// above the leading exponent.
PuiseuxSeries minimal_character(const MinimalLabel& lab, long q_order);

/// Fusion decomposition; multiplicities are 0/1 per summand formula but the
/// canonicalized multiset is returned as label -> multiplicity.
std::map<MinimalLabel, long> minimal_fusion(const MinimalLabel& a, const MinimalLabel& b);

/// A highest-weight module presented as a Verma modulo the submodules
/// generated by its singular vectors at the listed levels.
struct HwModuleSpec {
    Rational c, h;
    std::vector<long> singular_levels;
};

/// Per-level dimensions of W/C1(W) for levels 0..level_max, where C1(W) is
/// spanned by a_{(-1)} w over vacuum-algebra PBW vectors a of positive weight.
std::vector<long> c1_quotient_dims(const HwModuleSpec& spec, long level_max);

} // namespace sl2wt
