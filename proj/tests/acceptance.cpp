// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit if any
// criterion fails.  All checks are exact; runtimes are printed for the
// criteria that carry a budget.

#include "sl2wt/fusion.hpp"
#include "sl2wt/n2.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace sl2wt;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
        body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << n << ": " << (err.empty() ? "PASS" : "FAIL") << "  [" << what
         << "]  (" << secs << " s)";
    if (!err.empty()) {
        line << "\n  reason: " << err;
        ++failures;
    }
    std::cout << line.str() << std::endl;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::string rs(const Rational& r) { return to_string(r); }

// --- criterion 1 -----------------------------------------------------------

void singular_suite() {
    for (const Rational& t : {rat(3, 2), rat(4, 3), rat(5, 3), rat(5, 2)}) {
        Rational c = virasoro_c(t);
        for (long r = 1; r <= 6; ++r)
            for (long s = 1; r * s <= 6; ++s) {
                long N = r * s;
                Rational h = virasoro_h(r, s, t);
                auto vecs = find_singular_vectors(c, h, N);
                require(vecs.size() == 1, "expected one singular vector at t=" + rs(t) +
                                              " (r,s)=(" + std::to_string(r) + "," +
                                              std::to_string(s) + "), got " +
                                              std::to_string(vecs.size()));
                Partition ones(N, 1);
                require(vecs[0].count(ones) == 1 && vecs[0].at(ones) == 1,
                        "singular vector lacks a unit L_{-1}^N coefficient");
                // Annihilation by every positive mode up to the level.
                VirasoroAction act(c, h);
                for (long m = 1; m <= N; ++m) {
                    PBWVec img = act.apply(m, vecs[0]);
                    require(img.empty(), "L_" + std::to_string(m) + " does not annihilate");
                }
            }
        // Off the root locus nothing is singular.
        std::mt19937 rng(421);
        int tried = 0;
        while (tried < 50) {
            Rational h((long)(rng() % 161) - 80, (long)(rng() % 12) + 1);
            bool on_locus = false;
            for (long r = 1; r <= 3 && !on_locus; ++r)
                for (long s = 1; r * s <= 3; ++s)
                    if (h == virasoro_h(r, s, t)) on_locus = true;
            if (on_locus) continue;
            ++tried;
            require(find_singular_vectors(c, h, 3).empty(),
                    "unexpected singular vector at generic h=" + rs(h));
        }
    }
}

// --- criterion 2 -----------------------------------------------------------

void corank_oracle() {
    require(simple_graded_dims(0, 0, 5) == std::vector<long>{1, 0, 0, 0, 0, 0},
            "(3,2) vacuum is not one-dimensional");
    auto gen = simple_graded_dims(rat(11, 7), rat(5, 3), 6);
    for (long n = 0; n <= 6; ++n)
        require(gen[n] == partition_count(n), "generic dims differ from partition numbers");
    auto vac = simple_graded_dims(rat(11, 7), 0, 6);
    require(vac[0] == 1, "vacuum top dimension");
    for (long n = 1; n <= 6; ++n)
        require(vac[n] == partition_count(n) - partition_count(n - 1),
                "generic-c vacuum dims differ from p(n)-p(n-1)");
}

// --- criterion 3 -----------------------------------------------------------

std::vector<MinimalLabel> all_minimal(long u, long v) {
    std::set<MinimalLabel> out;
    for (long r = 1; r <= u - 1; ++r)
        for (long s = 1; s <= v - 1; ++s) out.insert(minimal_label(u, v, r, s));
    return {out.begin(), out.end()};
}

void minimal_fusion_suite() {
    MinimalLabel one = minimal_label(4, 3, 1, 1);
    MinimalLabel sigma = minimal_label(4, 3, 2, 2);
    MinimalLabel eps = minimal_label(4, 3, 3, 1);
    auto ss = minimal_fusion(sigma, sigma);
    require(ss.size() == 2 && ss.count(one) && ss.count(eps) && ss.at(one) == 1 &&
                ss.at(eps) == 1,
            "sigma x sigma != 1 + eps in the Ising model");
    for (auto [u, v] : {std::pair<long, long>{4, 3}, {5, 2}}) {
        auto labels = all_minimal(u, v);
        MinimalLabel unit = minimal_label(u, v, 1, 1);
        for (const MinimalLabel& x : labels) {
            auto ux = minimal_fusion(unit, x);
            require(ux.size() == 1 && ux.count(x) && ux.at(x) == 1, "unit law fails");
        }
        // Associativity over every triple.
        auto fuse_sum = [](const std::map<MinimalLabel, long>& dec, const MinimalLabel& z) {
            std::map<MinimalLabel, long> out;
            for (const auto& [w, m] : dec)
                for (const auto& [y, m2] : minimal_fusion(w, z)) out[y] += m * m2;
            return out;
        };
        for (const MinimalLabel& a : labels)
            for (const MinimalLabel& b : labels)
                for (const MinimalLabel& c : labels)
                    require(fuse_sum(minimal_fusion(a, b), c) ==
                                fuse_sum(minimal_fusion(b, c), a),
                            "associativity fails at (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
    }
}

// --- criterion 4 -----------------------------------------------------------

void branching_identity() {
    BranchParams p;
    p.lvl = level_from_uv(3, 2);
    p.lambda = rat(1, 3);
    for (int a : {1, 2})
        for (long ell : {0L, 1L}) {
            p.a = a;
            p.ell = ell;
            p.rhs_lambda_shift.reset();
            TwoVarCharacter res = branching_char_verify(p, 6, 8);
            require(res.is_zero(), "nonzero residual at a=" + std::to_string(a) +
                                       ", ell=" + std::to_string(ell));
        }
    p.a = 1;
    p.ell = 0;
    p.rhs_lambda_shift = Rational(1);
    require(!branching_char_verify(p, 6, 4).is_zero(),
            "perturbed-weight negative control reported zero");
}

// --- criterion 5 -----------------------------------------------------------

FusionDecomposition fuse_into(long r, const FusionDecomposition& dec) {
    FusionDecomposition out;
    for (const auto& [x, mult] : dec)
        for (const auto& [y, m2] : fuse(r, x)) out[y] += mult * m2;
    return out;
}

void affine_fusion_suite() {
    for (auto [u, v] : {std::pair<long, long>{3, 2}, {5, 3}}) {
        AdmissibleLevel lvl = level_from_uv(u, v);
        // Representatives of all four rule families.
        std::vector<ModuleLabel> samples;
        samples.push_back(make_label(lvl, 0, ModuleKind::L, u - 1, 0));
        samples.push_back(make_label(lvl, 1, ModuleKind::L, 1, 0));
        samples.push_back(make_label(lvl, 0, ModuleKind::Dplus, 1, 1));
        samples.push_back(make_label(lvl, -1, ModuleKind::P, 1, 1));
        samples.push_back(make_label(lvl, 0, ModuleKind::E, 1, 1, rat(1, 7)));
        if (v > 2) {
            samples.push_back(make_label(lvl, 0, ModuleKind::Dminus, 2, 1));
            samples.push_back(make_label(lvl, 2, ModuleKind::E, 2, 2, rat(10, 7)));
        }
        for (const ModuleLabel& x : samples) {
            // Unit.
            FusionDecomposition ux = fuse(1, x);
            require(ux.size() == 1 && ux.begin()->first == normal_form(x) &&
                        ux.begin()->second == 1,
                    "unit law fails for " + label_str(x));
            // Flow equivariance.
            for (long r = 1; r <= u - 1; ++r)
                for (int n : {-1, 2}) {
                    FusionDecomposition flowed = fuse(r, spectral_flow(x, n));
                    FusionDecomposition expect;
                    for (const auto& [y, m] : fuse(r, x))
                        expect[normal_form(spectral_flow(y, n))] += m;
                    require(flowed == expect, "flow equivariance fails for " + label_str(x));
                }
            // Associativity of the family action.
            for (long r1 = 1; r1 <= u - 1; ++r1)
                for (long r2 = 1; r2 <= u - 1; ++r2) {
                    FusionDecomposition family =
                        fuse(r1, make_label(lvl, 0, ModuleKind::L, r2, 0));
                    FusionDecomposition lhs;
                    for (const auto& [lr, m] : family)
                        for (const auto& [y, m2] : fuse(lr.r, x)) lhs[y] += m * m2;
                    require(lhs == fuse_into(r1, fuse(r2, x)),
                            "associativity fails for " + label_str(x));
                }
        }
        // The top simple current squares to the unit.
        FusionDecomposition sq = fuse(u - 1, make_label(lvl, 0, ModuleKind::L, u - 1, 0));
        require(sq.size() == 1 &&
                    sq.begin()->first == make_label(lvl, 0, ModuleKind::L, 1, 0) &&
                    sq.begin()->second == 1,
                "L_{u-1} x L_{u-1} != L_1");
    }
}

// --- criterion 6 -----------------------------------------------------------

void catalog_integrity() {
    std::mt19937 rng(77);
    AdmissibleLevel lvls[] = {level_from_uv(3, 2), level_from_uv(5, 3)};
    ModuleKind kinds[] = {ModuleKind::L,     ModuleKind::Dplus,  ModuleKind::Dminus,
                          ModuleKind::E,     ModuleKind::Eplus,  ModuleKind::Eminus,
                          ModuleKind::P};
    int made = 0;
    while (made < 1000) {
        const AdmissibleLevel& lvl = lvls[rng() % 2];
        ModuleKind k = kinds[rng() % 7];
        long r = 1 + (long)(rng() % (lvl.u - 1));
        long s = 1 + (long)(rng() % (lvl.v - 1));
        int flow = (int)(rng() % 9) - 4;
        Rational lam((long)(rng() % 43) - 21, 13);
        ModuleLabel x;
        try {
            x = make_label(lvl, flow, k, r, s, lam);
        } catch (const domain_error&) {
            continue;
        }
        ++made;
        ModuleLabel nf = normal_form(x);
        require(normal_form(nf) == nf, "normal form is not idempotent");
        require(parse_label(label_str(x)) == x, "label grammar does not round-trip");
        require(normal_form(spectral_flow(x, 3)) == normal_form(spectral_flow(nf, 3)),
                "normal form is not orbit-constant");
    }
    // Windowed block parametrization is a bijection.
    for (auto [u, v] : {std::pair<long, long>{3, 2}, {5, 3}}) {
        AdmissibleLevel lvl = level_from_uv(u, v);
        std::set<ModuleLabel> labels;
        std::set<std::tuple<long, long, long>> slots;
        for (long r = 1; r <= u - 1; ++r)
            for (long n = 0; n <= v - 1; ++n)
                for (long l = -2; l <= 2; ++l)
                    for (long m = 0; m <= v - 2; ++m) {
                        long phi = (l % 2 == 0) ? r : u - r;
                        ModuleLabel member = normal_form(
                            make_label(lvl, (int)(-n - 2 * l * v - m), ModuleKind::Dplus,
                                       phi, v - 1 - m));
                        auto [blk, pos] = block_of(member);
                        require(blk.is_c, "chain member not assigned to a C block");
                        require(pos == -l * (v - 1) - m, "wrong chain position");
                        bool fresh_label = labels.insert(member).second;
                        bool fresh_slot = slots.insert({blk.r, blk.n, pos}).second;
                        require(fresh_label == fresh_slot,
                                "window parametrization is not bijective");
                    }
    }
}

// --- criterion 7 -----------------------------------------------------------

void n2_relations() {
    for (auto [l, h, lam] :
         {std::tuple<Rational, Rational, Rational>{rat(-1, 2), rat(2, 7), rat(1, 5)},
          {rat(-4, 3), rat(3, 11), rat(2, 7)},
          {rat(1, 3), rat(1, 2), rat(1, 7)}}) {
        N2Realization rea({l, h, lam, false});
        std::string fail = rea.verify_relations(3, 3);
        require(fail.empty(), "at ell=" + rs(l) + ": " + fail);
        require(rea.relations_checked() > 0, "no relations were checked");
    }
}

// --- criterion 8 -----------------------------------------------------------

void factorization_and_generation() {
    const std::tuple<Rational, Rational, Rational> grid[] = {
        {rat(-1, 2), rat(2, 7), rat(1, 5)},
        {rat(-4, 3), rat(3, 11), rat(2, 7)},
        {rat(1, 3), rat(1, 2), rat(1, 7)},
        {rat(3, 5), rat(1, 4), rat(2, 3)},
        {rat(-5, 7), rat(3, 5), rat(1, 2)}};
    for (const auto& [l, h, lam] : grid) {
        N2Realization rea({l, h, lam, false});
        for (long len = 1; len <= 3; ++len) {
            std::string fail = rea.ladder_factorization_check(len);
            require(fail.empty(), "at ell=" + rs(l) + ": " + fail);
        }
    }
    // Generic generation through weight 5/2.
    N2Realization gen({rat(1, 3), rat(1, 2), rat(1, 7), false});
    auto [gd, fd] = gen.generation_dims(rat(5, 2));
    require(gd == fd, "generic top vector fails to generate through weight 5/2");
    // p_1 root: strict defect at weight 1/2.
    Rational l = 1, lam = rat(1, 3);
    Rational x = l * lam / 4;
    Rational h1 = (x * x + (l + 1) * x) / (l + 2);
    require(n2_p_factor(l, h1, lam, 1) == 0, "p_1 root miscomputed");
    N2Realization defect({l, h1, lam, false});
    auto [gd2, fd2] = defect.generation_dims(rat(1, 2));
    require(gd2[1] < fd2[1], "expected strict generation defect at a p_1 root");
}

// --- criterion 9 -----------------------------------------------------------

void tau_duality() {
    std::mt19937 rng(999);
    auto rnd = [&](long span, long den_max) {
        return Rational((long)(rng() % (2 * span + 1)) - span, (long)(rng() % den_max) + 1);
    };
    int done = 0;
    while (done < 20) {
        Rational l = rnd(6, 9);
        if (l == 0 || l == -2) continue;
        Rational h = rnd(8, 9), lam = rnd(8, 9), lam2 = rnd(8, 9);
        Rational lt = n2_lambda_dual(l, lam), lt2 = n2_lambda_dual(l, lam2);
        ++done;
        N2Realization a({l, h, lam, false}), at({l, h, lt, false});
        auto [da, mua] = a.top_data();
        auto [dat, muat] = at.top_data();
        require(da == dat, "Delta not tau-symmetric at ell=" + rs(l));
        N2Realization b({l, h, lam2, false}), bt({l, h, lt2, false});
        auto [db, mub] = b.top_data();
        auto [dbt, mubt] = bt.top_data();
        require(mua + muat == mub + mubt,
                "mu(lambda) + mu(lambda^tau) depends on lambda at ell=" + rs(l));
    }
}

// --- criterion 10 ----------------------------------------------------------

void c1_desk_scale() {
    // (3,2)-dual data: ell = -1/2 has Virasoro tensorand c = 0, take the
    // simple quotient at h = h_{1,1} = 0, where N = 1.
    require(n2_factor_charge(rat(-1, 2)) == virasoro_c(level_from_uv(3, 2).t),
            "dual tensorand charge mismatch");
    N2Realization rea({rat(-1, 2), 0, rat(1, 7), true});
    StateVec v{{0, Rational(1)}};
    v = rea.apply(N2Gen::Gp, -rat(1, 2), v, N2Moding::realization);
    v = rea.apply(N2Gen::T, -1, v, N2Moding::realization);
    require(rea.c1_contains(v), "T_{-1} G+_{-1/2} pi(z) is not in C1(Q)");
    auto dims = rea.c1_quotient_dims(2);
    long total = 0, positive = 0;
    for (const auto& [w, d] : dims) {
        total += d;
        if (w > 0) positive += d;
    }
    require(dims[0].second == 1, "top weight space of the quotient");
    require(positive <= 4, "positive-weight quotient exceeds the spanning-list bound");
    require(total <= 5, "quotient exceeds the spanning-list size N+1 + 2N + N at N=1");
    // Virasoro-side quotients mirror criterion 2's module structure.
    HwModuleSpec verma{rat(11, 7), rat(5, 3), {}};
    require(c1_quotient_dims(verma, 6) == std::vector<long>(7, 1),
            "Verma module lost its non-cofinite signature");
    HwModuleSpec vac{rat(11, 7), 0, {1}};
    require(c1_quotient_dims(vac, 6) == std::vector<long>{1, 0, 0, 0, 0, 0, 0},
            "vacuum quotient is not one-dimensional");
    for (auto [r, s] : {std::pair<long, long>{1, 2}, {2, 1}, {2, 2}}) {
        Rational t = rat(5, 3);
        long N = r * s;
        HwModuleSpec spec{virasoro_c(t), virasoro_h(r, s, t), {N}};
        auto qd = c1_quotient_dims(spec, 6);
        long tot = 0;
        for (long d : qd) tot += d;
        require(tot <= N, "quotient-by-singular total exceeds the level");
    }
}

} // namespace

int main() {
    criterion(1, "singular-vector suite", singular_suite);
    criterion(2, "corank/character oracle", corank_oracle);
    criterion(3, "minimal-model fusion", minimal_fusion_suite);
    criterion(4, "branching character identity", branching_identity);
    criterion(5, "affine fusion engine", affine_fusion_suite);
    criterion(6, "catalog integrity", catalog_integrity);
    criterion(7, "N=2 representation check", n2_relations);
    criterion(8, "p_r factorization and generation", factorization_and_generation);
    criterion(9, "tau-duality", tau_duality);
    criterion(10, "C1 desk-scale checks", c1_desk_scale);
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
