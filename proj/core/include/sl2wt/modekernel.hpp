#pragma once

#include "sl2wt/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sl2wt {

enum class Parity { even, odd };
enum class Moding { integer, half_integer };

struct GenId {
    int v = -1;
    bool valid() const { return v >= 0; }
    friend bool operator==(GenId a, GenId b) { return a.v == b.v; }
    friend auto operator<=>(GenId a, GenId b) { return a.v <=> b.v; }
};

/// One term g_{m+n} of a bracket value, plus a central scalar.
struct BracketValue {
    std::vector<std::pair<GenId, Rational>> terms;
    Rational central;
    bool is_zero() const { return terms.empty() && central == 0; }
};

/// [a_m, b_n] as a closed form in the mode indices.
using BracketFn = std::function<BracketValue(const Rational& m, const Rational& n)>;

/// A Lie superalgebra of field modes given by generators and closed-form
/// super-brackets with central terms.  Immutable once populated.
class Algebra {
  public:
    GenId add_generator(std::string name, Parity parity, Rational conformal_weight,
                        Moding moding);
    /// Registers [a_m, b_n]; the opposite orientation is derived from super
    /// skew-symmetry.
    void set_bracket(GenId a, GenId b, BracketFn f);

    BracketValue bracket(GenId a, const Rational& m, GenId b, const Rational& n) const;

    std::size_t size() const { return gens_.size(); }
    Parity parity(GenId g) const { return gens_.at(g.v).parity; }
    const Rational& weight(GenId g) const { return gens_.at(g.v).weight; }
    Moding moding(GenId g) const { return gens_.at(g.v).moding; }
    const std::string& name(GenId g) const { return gens_.at(g.v).name; }

    /// Checks that the mode index matches the generator's moding.
    void check_moding(GenId g, const Rational& mode) const;

  private:
    struct Gen {
        std::string name;
        Parity parity;
        Rational weight;
        Moding moding;
    };
    std::vector<Gen> gens_;
    std::map<std::pair<int, int>, BracketFn> brackets_;
};

/// Sparse vector over an interned basis of a graded module.
using StateVec = std::map<int, Rational>;

StateVec& add_scaled(StateVec& dst, const StateVec& src, const Rational& f);

/// A lower-bounded graded module with an exact generator-mode action.
/// Mode indices are weight-adjusted: for a generator of conformal weight
/// Delta, the mode g_n maps the weight-d subspace to weight d - n.
/// Relative weights are >= 0 with the top at 0.
class GradedModule {
  public:
    virtual ~GradedModule() = default;
    virtual const Algebra& algebra() const = 0;
    virtual StateVec apply_generator(GenId g, const Rational& mode_adj, int state) = 0;
    virtual Rational weight(int state) const = 0;
};

StateVec apply_generator(GradedModule& m, GenId g, const Rational& mode_adj,
                         const StateVec& v);

/// Composite fields: expression trees whose leaves are generator fields and
/// whose nodes are iterates a_(n) b (normal-ordered products and beyond),
/// derivatives, and linear combinations.  Standard-convention mode indices
/// (the z^{-n-1} expansion) are integers throughout; the weight-adjusted
/// index of A_(p) is p - Delta_A + 1.
class Field {
  public:
    enum class Kind { generator, vacuum, iterate, derivative, sum };
    using Ptr = std::shared_ptr<const Field>;

    static Ptr generator(const Algebra& alg, GenId g);
    static Ptr vacuum();
    /// a_(n) b for standard index n <= -1.
    static Ptr iterate(Ptr a, long n_std, Ptr b);
    /// :ab: = a_(-1) b.
    static Ptr normal_ordered(Ptr a, Ptr b) { return iterate(std::move(a), -1, std::move(b)); }
    static Ptr derivative(Ptr a);
    static Ptr sum(std::vector<std::pair<Rational, Ptr>> parts);
    static Ptr scaled(const Rational& f, Ptr a);

    Kind kind() const { return kind_; }
    const Rational& weight() const { return weight_; }
    Parity parity() const { return parity_; }
    GenId gen() const { return gen_; }
    long iter_index() const { return n_std_; }
    const Ptr& left() const { return left_; }
    const Ptr& right() const { return right_; }
    const std::vector<std::pair<Rational, Ptr>>& parts() const { return parts_; }

  private:
    Field() = default;
    Kind kind_ = Kind::vacuum;
    Rational weight_;
    Parity parity_ = Parity::even;
    GenId gen_;
    long n_std_ = 0;
    Ptr left_, right_;
    std::vector<std::pair<Rational, Ptr>> parts_;
};

/// Applies composite-field modes to module states, with memoization.  The
/// iterate expansion terminates by lower-boundedness; no user cutoff.
class FieldApplicator {
  public:
    explicit FieldApplicator(GradedModule& m) : mod_(m) {}

    /// Standard-index mode A_(p).
    StateVec apply_std(const Field::Ptr& f, long p, const StateVec& v);
    /// Weight-adjusted mode A_n, n = p - Delta + 1.  n must be compatible
    /// with the field's moding (n + Delta integral).
    StateVec apply_adj(const Field::Ptr& f, const Rational& n_adj, const StateVec& v);

    GradedModule& module() { return mod_; }

  private:
    StateVec apply_std_basis(const Field::Ptr& f, long p, int state);

    GradedModule& mod_;
    std::map<std::tuple<const Field*, long, int>, StateVec> cache_;
    std::vector<Field::Ptr> pinned_; // keep cached fields alive
};

/// A word of modes x1_{n1} ... xr_{nr}, applied to v right factor first.
struct ModeWord {
    std::vector<std::pair<Field::Ptr, Rational>> factors; // (field, adjusted mode)
};

StateVec apply_word(FieldApplicator& app, const ModeWord& w, const StateVec& v);

/// Super-Jacobi check of the registered bracket tables over a grid of mode
/// indices; returns a human-readable description of the first violation, or
/// empty if all sampled triples pass.
std::string check_super_jacobi(const Algebra& alg, long max_mode);

} // namespace sl2wt
