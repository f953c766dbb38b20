#include "sl2wt/modekernel.hpp"

#include <sstream>

namespace sl2wt {

GenId Algebra::add_generator(std::string name, Parity parity, Rational conformal_weight,
                             Moding moding) {
    gens_.push_back({std::move(name), parity, std::move(conformal_weight), moding});
    return GenId{static_cast<int>(gens_.size()) - 1};
}

void Algebra::set_bracket(GenId a, GenId b, BracketFn f) {
    brackets_[{a.v, b.v}] = std::move(f);
}

void Algebra::check_moding(GenId g, const Rational& mode) const {
    bool ok = moding(g) == Moding::integer ? is_integer(mode) : is_half_odd(mode);
    if (!ok)
        throw domain_error("mode " + to_string(mode) + " incompatible with moding of " +
                           name(g));
}

BracketValue Algebra::bracket(GenId a, const Rational& m, GenId b, const Rational& n) const {
    check_moding(a, m);
    check_moding(b, n);
    if (auto it = brackets_.find({a.v, b.v}); it != brackets_.end()) return it->second(m, n);
    if (auto it = brackets_.find({b.v, a.v}); it != brackets_.end()) {
        BracketValue r = it->second(n, m);
        // [a, b] = -(-1)^{|a||b|} [b, a]
        Rational sign = (parity(a) == Parity::odd && parity(b) == Parity::odd) ? 1 : -1;
        for (auto& [g, c] : r.terms) c *= sign;
        r.central *= sign;
        return r;
    }
    return {};
}

StateVec& add_scaled(StateVec& dst, const StateVec& src, const Rational& f) {
    if (f == 0) return dst;
    for (const auto& [id, c] : src) {
        Rational& slot = dst[id];
        slot += c * f;
        if (slot == 0) dst.erase(id);
    }
    return dst;
}

StateVec apply_generator(GradedModule& m, GenId g, const Rational& mode_adj,
                         const StateVec& v) {
    StateVec out;
    for (const auto& [id, c] : v) add_scaled(out, m.apply_generator(g, mode_adj, id), c);
    return out;
}

// ---- Field construction ----------------------------------------------------

Field::Ptr Field::generator(const Algebra& alg, GenId g) {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::generator;
    f->gen_ = g;
    f->weight_ = alg.weight(g);
    f->parity_ = alg.parity(g);
    return f;
}

Field::Ptr Field::vacuum() {
    static const Ptr inst = std::shared_ptr<Field>(new Field());
    return inst;
}

Field::Ptr Field::iterate(Ptr a, long n_std, Ptr b) {
    if (n_std > -1) throw domain_error("iterate index must be <= -1");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::iterate;
    f->weight_ = a->weight_ + b->weight_ - n_std - 1;
    f->parity_ = (a->parity_ == b->parity_) ? Parity::even : Parity::odd;
    f->n_std_ = n_std;
    f->left_ = std::move(a);
    f->right_ = std::move(b);
    return f;
}

Field::Ptr Field::derivative(Ptr a) {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::derivative;
    f->weight_ = a->weight_ + 1;
    f->parity_ = a->parity_;
    f->left_ = std::move(a);
    return f;
}

Field::Ptr Field::sum(std::vector<std::pair<Rational, Ptr>> parts) {
    if (parts.empty()) throw domain_error("empty field sum");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::sum;
    f->weight_ = parts.front().second->weight_;
    f->parity_ = parts.front().second->parity_;
    for (const auto& [c, p] : parts) {
        if (p->weight_ != f->weight_ || p->parity_ != f->parity_)
            throw domain_error("field sum must be weight- and parity-homogeneous");
    }
    f->parts_ = std::move(parts);
    return f;
}

Field::Ptr Field::scaled(const Rational& f, Ptr a) {
    return sum({{f, std::move(a)}});
}

// ---- Mode application ------------------------------------------------------

StateVec FieldApplicator::apply_std(const Field::Ptr& f, long p, const StateVec& v) {
    StateVec out;
    for (const auto& [id, c] : v) add_scaled(out, apply_std_basis(f, p, id), c);
    return out;
}

StateVec FieldApplicator::apply_adj(const Field::Ptr& f, const Rational& n_adj,
                                    const StateVec& v) {
    Rational p = n_adj + f->weight() - 1;
    if (!is_integer(p))
        throw domain_error("adjusted mode " + to_string(n_adj) +
                           " incompatible with field weight " + to_string(f->weight()));
    return apply_std(f, rat_floor(p).convert_to<long>(), v);
}

namespace {

Rational max_weight(const GradedModule& m, const StateVec& v) {
    Rational w = 0;
    for (const auto& [id, c] : v) w = std::max(w, m.weight(id));
    return w;
}

} // namespace

StateVec FieldApplicator::apply_std_basis(const Field::Ptr& f, long p, int state) {
    auto key = std::make_tuple(f.get(), p, state);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    StateVec out;
    switch (f->kind()) {
    case Field::Kind::vacuum:
        if (p == -1) out[state] = 1;
        break;
    case Field::Kind::generator: {
        Rational n_adj = Rational(p) - f->weight() + 1;
        out = mod_.apply_generator(f->gen(), n_adj, state);
        break;
    }
    case Field::Kind::derivative:
        // (dA)_(p) = -p A_(p-1)
        out = apply_std_basis(f->left(), p - 1, state);
        for (auto& [id, c] : out) c *= Rational(-p);
        break;
    case Field::Kind::sum:
        for (const auto& [c, part] : f->parts()) {
            StateVec t = apply_std_basis(part, p, state);
            add_scaled(out, t, c);
        }
        break;
    case Field::Kind::iterate: {
        // (a_(n) b)_(p) v = sum_{i>=0} binom(n,i) (-1)^i
        //     [ a_(n-i) b_(p+i) v  -  eps (-1)^n b_(n+p-i) a_(i) v ],
        // eps = (-1)^{|a||b|}.  Both sums terminate on lower-bounded modules.
        const Field::Ptr& a = f->left();
        const Field::Ptr& b = f->right();
        long n = f->iter_index();
        Rational eps = (a->parity() == Parity::odd && b->parity() == Parity::odd) ? -1 : 1;
        Rational sign_n = (n % 2 == 0) ? 1 : -1;
        Rational d = mod_.weight(state);

        // Term 1: b_(p+i) kills weight d once its adjusted index p+i-Db+1 > d.
        Rational bound1 = d + b->weight() - 1 - p;
        // Term 2: a_(i) kills weight d once i - Da + 1 > d.
        Rational bound2 = d + a->weight() - 1;
        Integer imax = std::max(rat_floor(bound1), rat_floor(bound2));

        Rational binom = 1; // binom(n, i), updated incrementally
        StateVec base{{state, Rational(1)}};
        for (Integer i = 0; i <= imax; ++i) {
            long il = i.convert_to<long>();
            if (binom != 0) {
                Rational coef = binom * ((il % 2 == 0) ? 1 : -1);
                if (i <= rat_floor(bound1)) {
                    StateVec t = apply_std(b, p + il, base);
                    t = apply_std(a, n - il, t);
                    add_scaled(out, t, coef);
                }
                if (i <= rat_floor(bound2)) {
                    StateVec t = apply_std(a, il, base);
                    t = apply_std(b, n + p - il, t);
                    add_scaled(out, t, -coef * eps * sign_n);
                }
            }
            binom *= Rational(n - il) / Rational(il + 1);
        }
        break;
    }
    }

    pinned_.push_back(f);
    cache_.emplace(key, out);
    return out;
}

StateVec apply_word(FieldApplicator& app, const ModeWord& w, const StateVec& v) {
    StateVec cur = v;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        cur = app.apply_adj(it->first, it->second, cur);
    return cur;
}

// ---- Jacobi sampling -------------------------------------------------------

namespace {

// Linear combination of generator modes plus a central scalar, used only for
// the closure check below.
struct ModeCombo {
    std::map<std::pair<int, Rational>, Rational> terms; // (gen, mode) -> coeff
    Rational central;

    void add(GenId g, const Rational& mode, const Rational& c) {
        auto& slot = terms[{g.v, mode}];
        slot += c;
        if (slot == 0) terms.erase({g.v, mode});
    }
    void add_scaled(const ModeCombo& o, const Rational& f) {
        for (const auto& [k, c] : o.terms) {
            auto& slot = terms[k];
            slot += c * f;
            if (slot == 0) terms.erase(k);
        }
        central += o.central * f;
    }
    bool is_zero() const { return terms.empty() && central == 0; }
};

// [a_m, b_n] as a ModeCombo.
ModeCombo bracket_combo(const Algebra& alg, GenId a, const Rational& m, GenId b,
                        const Rational& n) {
    ModeCombo r;
    BracketValue bv = alg.bracket(a, m, b, n);
    for (const auto& [g, c] : bv.terms) r.add(g, m + n, c);
    r.central = bv.central;
    return r;
}

// [a_m, combo] where combo is a sum of single modes + central.
ModeCombo bracket_with_combo(const Algebra& alg, GenId a, const Rational& m,
                             const ModeCombo& combo) {
    ModeCombo r;
    for (const auto& [key, c] : combo.terms) {
        GenId g{key.first};
        ModeCombo t = bracket_combo(alg, a, m, g, key.second);
        r.add_scaled(t, c);
    }
    return r;
}

Rational sample_mode(const Algebra& alg, GenId g, long j) {
    return alg.moding(g) == Moding::integer ? Rational(j) : Rational(2 * j + 1, 2);
}

} // namespace

std::string check_super_jacobi(const Algebra& alg, long max_mode) {
    auto sgn = [&](GenId x, GenId y) {
        return (alg.parity(x) == Parity::odd && alg.parity(y) == Parity::odd)
                   ? Rational(-1)
                   : Rational(1);
    };
    int ng = static_cast<int>(alg.size());
    for (int ia = 0; ia < ng; ++ia)
        for (int ib = 0; ib < ng; ++ib)
            for (int ic = 0; ic < ng; ++ic) {
                GenId a{ia}, b{ib}, c{ic};
                for (long ma = -max_mode; ma <= max_mode; ++ma)
                    for (long mb = -max_mode; mb <= max_mode; ++mb)
                        for (long mc = -max_mode; mc <= max_mode; ++mc) {
                            Rational m = sample_mode(alg, a, ma);
                            Rational n = sample_mode(alg, b, mb);
                            Rational p = sample_mode(alg, c, mc);
                            // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
                            ModeCombo lhs =
                                bracket_with_combo(alg, a, m, bracket_combo(alg, b, n, c, p));
                            ModeCombo r2 =
                                bracket_with_combo(alg, b, n, bracket_combo(alg, a, m, c, p));
                            ModeCombo rhs;
                            {
                                BracketValue ab = alg.bracket(a, m, b, n);
                                for (const auto& [g, cc] : ab.terms)
                                    rhs.add_scaled(bracket_combo(alg, g, m + n, c, p), cc);
                                // central part of [a,b] commutes with c_p.
                            }
                            rhs.add_scaled(r2, sgn(a, b));
                            ModeCombo diff = lhs;
                            diff.add_scaled(rhs, -1);
                            if (!diff.is_zero()) {
                                std::ostringstream os;
                                os << "jacobi violation at [" << alg.name(a) << "_"
                                   << to_string(m) << ", [" << alg.name(b) << "_"
                                   << to_string(n) << ", " << alg.name(c) << "_"
                                   << to_string(p) << "]]";
                                return os.str();
                            }
                        }
            }
    return {};
}

} // namespace sl2wt
