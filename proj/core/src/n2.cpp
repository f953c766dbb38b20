#include "sl2wt/n2.hpp"

#include "sl2wt/levels.hpp"

#include <sstream>

namespace sl2wt {

Rational n2_central_charge(const Rational& ell) {
    if (ell == -2) throw domain_error("level parameter must differ from -2");
    return Rational(3) * ell / (ell + 2);
}

Rational n2_kappa_x(const Rational& ell) {
    if (ell == 0 || ell == -2) throw domain_error("level parameter must differ from 0, -2");
    return Rational(-8) * (ell + 2) / (ell * ell);
}

Rational n2_factor_charge(const Rational& ell) { return virasoro_c(ell + 2); }

Rational n2_p_factor(const Rational& ell, const Rational& h, const Rational& lambda, long r) {
    Rational x = Rational(r - 1) + ell * lambda / 4;
    return (ell + 2) * h - x * x - (ell + 1) * x;
}

Rational n2_lambda_dual(const Rational& ell, const Rational& lambda) {
    if (ell == 0) throw domain_error("duality needs a nonzero level parameter");
    return -lambda - Rational(4) * (ell + 2) / ell;
}

N2Realization::N2Realization(N2Params p)
    : par_(std::move(p)),
      c_(n2_central_charge(par_.ell)),
      sp_(FFSpace::Params{n2_factor_charge(par_.ell), par_.h, par_.lambda,
                          n2_kappa_x(par_.ell), par_.simple_factor}),
      app_(sp_) {
    const Rational& ell = par_.ell;
    auto NO = [](Field::Ptr a, Field::Ptr b) {
        return Field::normal_ordered(std::move(a), std::move(b));
    };
    Field::Ptr Lf = Field::generator(sp_.algebra(), sp_.L());
    Field::Ptr Xf = Field::generator(sp_.algebra(), sp_.X());
    Field::Ptr Pp = Field::generator(sp_.algebra(), sp_.psi_p());
    Field::Ptr Pm = Field::generator(sp_.algebra(), sp_.psi_m());
    Field::Ptr pppm = NO(Pp, Pm);

    fields_[N2Gen::J] = Field::sum({{-ell / (2 * (ell + 2)), Xf}, {Rational(1), pppm}});
    fields_[N2Gen::Gp] = Pp;
    // The unique charge -1 composite of free weight 5/2 that is a weight-3/2
    // primary for T and J and closes the superconformal brackets against
    // psi+, normalized so that G-_{-1/2}|top> = p_1(h, lambda) psi-_{-1/2}|top>
    // (leading term (ell+2):L psi-:).  Coefficients were solved for exactly
    // from the bracket constraints, which are linear in this composite.
    fields_[N2Gen::Gm] =
        Field::sum({{ell / 2, Field::derivative(Field::derivative(Pm))},
                    {-ell / 2, NO(Xf, Field::derivative(Pm))},
                    {ell * (ell + 1) / 4, NO(Field::derivative(Xf), Pm)},
                    {-ell * ell / 16, NO(Xf, NO(Xf, Pm))},
                    {ell + 2, NO(Lf, Pm)},
                    {-(ell + 2), NO(Pp, NO(Field::derivative(Pm), Pm))}});
    // Bracket-normalized partner of psi+: the superconformal table holds
    // verbatim for (G+, 2/(ell+2) G-).
    gm_bracket_ = Field::scaled(Rational(2) / (ell + 2), fields_[N2Gen::Gm]);

    Field::Ptr Lpsi = Field::sum({{rat(1, 2), NO(Field::derivative(Pp), Pm)},
                                  {rat(1, 2), NO(Field::derivative(Pm), Pp)}});
    Field::Ptr LX = Field::scaled(Rational(1) / (2 * n2_kappa_x(ell)), NO(Xf, Xf));
    fields_[N2Gen::T] = Field::sum(
        {{Rational(1), Lf},
         {Rational(1), Lpsi},
         {Rational(1), LX},
         {Rational(1),
          Field::derivative(Field::sum({{ell / 4, Xf}, {Rational(-1), pppm}}))}});
}

const Field::Ptr& N2Realization::field(N2Gen g) const { return fields_.at(g); }

long N2Realization::std_index(N2Gen g, const Rational& n, N2Moding moding) const {
    Rational p;
    switch (g) {
    case N2Gen::T: p = n + 1; break;
    case N2Gen::J: p = n; break;
    case N2Gen::Gp: p = moding == N2Moding::realization ? n - rat(1, 2) : n + rat(1, 2); break;
    case N2Gen::Gm: p = moding == N2Moding::realization ? n + rat(3, 2) : n + rat(1, 2); break;
    }
    if (!is_integer(p))
        throw domain_error("mode " + to_string(n) + " incompatible with the moding");
    return rat_floor(p).convert_to<long>();
}

StateVec N2Realization::apply(N2Gen g, const Rational& n, const StateVec& v,
                              N2Moding moding) {
    return app_.apply_std(field(g), std_index(g, n, moding), v);
}

StateVec N2Realization::apply_sym_bracket(N2Gen g, const Rational& n, const StateVec& v) {
    const Field::Ptr& f = g == N2Gen::Gm ? gm_bracket_ : field(g);
    return app_.apply_std(f, std_index(g, n, N2Moding::symmetric), v);
}

std::pair<Rational, Rational> N2Realization::top_data() {
    FFMonomial top;
    top.Bt = {1}; // psi-_{-1/2} |top>
    StateVec v{{sp_.state_id(top), Rational(1)}};
    auto eigen = [&](N2Gen g) {
        StateVec r = apply(g, 0, v, N2Moding::realization);
        StateVec probe = r;
        Rational val = 0;
        if (auto it = probe.find(v.begin()->first); it != probe.end()) {
            val = it->second;
            probe.erase(it);
        }
        if (!probe.empty())
            throw domain_error("designated top vector is not an eigenvector");
        return val;
    };
    return {eigen(N2Gen::T), eigen(N2Gen::J)};
}

namespace {

const char* gen_name(N2Gen g) {
    switch (g) {
    case N2Gen::T: return "T";
    case N2Gen::J: return "J";
    case N2Gen::Gp: return "G+";
    case N2Gen::Gm: return "G-";
    }
    return "?";
}

bool is_odd_gen(N2Gen g) { return g == N2Gen::Gp || g == N2Gen::Gm; }

struct ExpectedBracket {
    std::vector<std::pair<N2Gen, Rational>> terms; // generator coefficient at mode m+n
    Rational central;
};

ExpectedBracket expected_bracket(N2Gen a, const Rational& m, N2Gen b, const Rational& n,
                                 const Rational& c) {
    ExpectedBracket e;
    auto delta0 = (m + n == 0);
    if (a == N2Gen::T && b == N2Gen::T) {
        e.terms = {{N2Gen::T, m - n}};
        if (delta0) e.central = c / 12 * (m * m * m - m);
    } else if (a == N2Gen::T && b == N2Gen::J) {
        e.terms = {{N2Gen::J, -n}};
    } else if (a == N2Gen::T && (b == N2Gen::Gp || b == N2Gen::Gm)) {
        e.terms = {{b, m / 2 - n}};
    } else if (a == N2Gen::J && b == N2Gen::J) {
        if (delta0) e.central = c / 3 * m;
    } else if (a == N2Gen::J && (b == N2Gen::Gp || b == N2Gen::Gm)) {
        e.terms = {{b, b == N2Gen::Gp ? Rational(1) : Rational(-1)}};
    } else if (a == N2Gen::Gp && b == N2Gen::Gm) {
        e.terms = {{N2Gen::T, Rational(2)}, {N2Gen::J, m - n}};
        if (delta0) e.central = c / 3 * (m * m - rat(1, 4));
    }
    // {G+,G+}, {G-,G-} vanish.
    return e;
}

} // namespace

std::string N2Realization::verify_relations(const Rational& w_max, long mode_max) {
    relations_checked_ = 0;
    // Basis vectors to probe.
    std::vector<int> states;
    for (Rational w = 0; w <= w_max; w += rat(1, 2)) {
        auto s = sp_.basis_states(w);
        states.insert(states.end(), s.begin(), s.end());
    }
    auto modes_for = [&](N2Gen g) {
        std::vector<Rational> ms;
        if (is_odd_gen(g))
            for (long j = -mode_max; j < mode_max; ++j) ms.push_back(rat(2 * j + 1, 2));
        else
            for (long j = -mode_max; j <= mode_max; ++j) ms.push_back(Rational(j));
        return ms;
    };
    const N2Gen gens[] = {N2Gen::T, N2Gen::J, N2Gen::Gp, N2Gen::Gm};
    for (int ia = 0; ia < 4; ++ia)
        for (int ib = ia; ib < 4; ++ib) {
            N2Gen a = gens[ia], b = gens[ib];
            bool anti = is_odd_gen(a) && is_odd_gen(b);
            for (const Rational& m : modes_for(a))
                for (const Rational& n : modes_for(b)) {
                    ExpectedBracket e = expected_bracket(a, m, b, n, c_);
                    for (int st : states) {
                        StateVec v{{st, Rational(1)}};
                        StateVec lhs = apply_sym_bracket(a, m, apply_sym_bracket(b, n, v));
                        StateVec rev = apply_sym_bracket(b, n, apply_sym_bracket(a, m, v));
                        add_scaled(lhs, rev, anti ? Rational(1) : Rational(-1));
                        StateVec rhs;
                        for (const auto& [g, coef] : e.terms)
                            add_scaled(rhs, apply_sym_bracket(g, m + n, v), coef);
                        if (e.central != 0) add_scaled(rhs, v, e.central);
                        add_scaled(lhs, rhs, Rational(-1));
                        ++relations_checked_;
                        if (!lhs.empty()) {
                            std::ostringstream os;
                            os << "bracket mismatch: [" << gen_name(a) << "_" << to_string(m)
                               << ", " << gen_name(b) << "_" << to_string(n) << "] on "
                               << ff_str(sp_.monomial(st));
                            return os.str();
                        }
                    }
                }
        }
    return {};
}

std::string N2Realization::ladder_factorization_check(long len) {
    StateVec top{{0, Rational(1)}};
    StateVec lhs = top;
    Rational prod = 1;
    for (long r = 1; r <= len; ++r) {
        lhs = apply(N2Gen::Gm, -rat(2 * r - 1, 2), lhs, N2Moding::realization);
        prod *= n2_p_factor(par_.ell, par_.h, par_.lambda, r);
    }
    FFMonomial mono;
    for (long r = len; r >= 1; --r) mono.Bt.push_back(2 * r - 1);
    StateVec rhs{{sp_.state_id(mono), prod}};
    if (prod == 0) rhs.clear();
    add_scaled(lhs, rhs, Rational(-1));
    if (!lhs.empty()) {
        std::ostringstream os;
        os << "ladder of length " << len << " does not factor through the product "
           << to_string(prod);
        return os.str();
    }
    return {};
}

std::pair<std::vector<long>, std::vector<long>>
N2Realization::generation_dims(const Rational& w_max) {
    std::map<Rational, SparseSpan> spans;
    std::vector<std::pair<Rational, StateVec>> queue{{Rational(0), StateVec{{0, Rational(1)}}}};
    spans[0].insert(queue.front().second);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [w, vec] = queue[qi];
        for (Rational j = rat(1, 2); w + j <= w_max; j += rat(1, 2)) {
            std::vector<std::pair<N2Gen, Rational>> ops;
            if (is_integer(j)) {
                ops.push_back({N2Gen::T, -j});
                ops.push_back({N2Gen::J, -j});
            } else {
                ops.push_back({N2Gen::Gp, -j});
                ops.push_back({N2Gen::Gm, -j});
            }
            for (const auto& [g, mode] : ops) {
                StateVec nv = apply(g, mode, vec, N2Moding::realization);
                if (nv.empty()) continue;
                if (spans[w + j].insert(nv)) queue.push_back({w + j, std::move(nv)});
            }
        }
    }
    std::vector<long> gen_dims, full_dims;
    for (Rational w = 0; w <= w_max; w += rat(1, 2)) {
        auto it = spans.find(w);
        gen_dims.push_back(it == spans.end() ? 0 : static_cast<long>(it->second.dim()));
        full_dims.push_back(static_cast<long>(sp_.basis_states(w).size()));
    }
    return {gen_dims, full_dims};
}

std::vector<Field::Ptr> N2Realization::vacuum_descendants(const Rational& d) {
    std::vector<Field::Ptr> result;
    std::vector<Field::Ptr> frontier{Field::vacuum()};
    const N2Gen gens[] = {N2Gen::T, N2Gen::J, N2Gen::Gp, N2Gen::Gm};
    while (!frontier.empty()) {
        std::vector<Field::Ptr> next;
        for (const Field::Ptr& tail : frontier)
            for (N2Gen g : gens)
                for (long n = -1;; --n) {
                    if (field(g)->weight() - n - 1 + tail->weight() > d) break;
                    Field::Ptr f = Field::iterate(field(g), n, tail);
                    next.push_back(f);
                    result.push_back(f);
                }
        frontier = std::move(next);
    }
    return result;
}

SparseSpan& N2Realization::c1_span(const Rational& w) {
    if (c1_built_to_ < w) {
        c1_.clear();
        for (const Field::Ptr& u : vacuum_descendants(w)) {
            Rational du = u->weight();
            for (Rational target = du; target <= w; target += rat(1, 2))
                for (int q : sp_.basis_states(target - du)) {
                    StateVec vec = app_.apply_std(u, -1, StateVec{{q, Rational(1)}});
                    if (!vec.empty()) c1_[target].insert(vec);
                }
        }
        c1_built_to_ = w;
    }
    return c1_[w];
}

bool N2Realization::c1_contains(const StateVec& v) {
    if (v.empty()) return true;
    Rational w = sp_.weight(v.begin()->first);
    for (const auto& [id, coef] : v)
        if (sp_.weight(id) != w)
            throw domain_error("membership test needs a weight-homogeneous vector");
    return c1_span(w).contains(v);
}

std::vector<std::pair<Rational, long>> N2Realization::c1_quotient_dims(const Rational& d) {
    c1_span(d);
    std::vector<std::pair<Rational, long>> out;
    for (Rational w = 0; w <= d; w += rat(1, 2)) {
        long full = static_cast<long>(sp_.basis_states(w).size());
        long span = 0;
        if (auto it = c1_.find(w); it != c1_.end()) span = static_cast<long>(it->second.dim());
        out.push_back({w, full - span});
    }
    return out;
}

} // namespace sl2wt
