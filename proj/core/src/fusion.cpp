#include "sl2wt/fusion.hpp"

#include <cmath>
#include <cstdlib>

namespace sl2wt {

FusionDecomposition fuse(long r, const ModuleLabel& x0) {
    ModuleLabel x = normal_form(x0);
    const long u = x.lvl.u;
    if (r < 1 || r > u - 1) throw domain_error("fusion index out of range");
    if (x.kind == ModuleKind::Eplus || x.kind == ModuleKind::Eminus)
        throw domain_error("fusion implemented for simple and P-kind labels");

    FusionDecomposition out;
    long lo = std::labs(r - x.r) + 1;
    long hi = std::min(r + x.r - 1, 2 * u - r - x.r - 1);
    for (long rpp = lo; rpp <= hi; rpp += 2) {
        ModuleLabel y;
        switch (x.kind) {
        case ModuleKind::L:
            y = make_label(x.lvl, x.flow, ModuleKind::L, rpp, 0);
            break;
        case ModuleKind::Dplus:
        case ModuleKind::Dminus:
        case ModuleKind::P:
            y = make_label(x.lvl, x.flow, x.kind, rpp, x.s);
            break;
        case ModuleKind::E:
            y = make_label(x.lvl, x.flow, ModuleKind::E, rpp, x.s,
                           x.lambda + Rational(r - 1));
            break;
        default:
            throw domain_error("unreachable");
        }
        out[normal_form(y)] += 1;
    }
    return out;
}

std::vector<BranchingSummand> induct_decompose(const ModuleLabel& x, int a) {
    const long u = x.lvl.u, v = x.lvl.v;
    if (x.kind == ModuleKind::L)
        throw domain_error("induction decomposition applies to D/E/P-family labels");
    AdmissibleLevel up = level_from_uv(u + v, v);
    std::vector<BranchingSummand> out;
    for (long m = 1; m <= u + v - 1; ++m) {
        if (((m + x.r + x.s + a) % 2 + 2) % 2 == 0) continue;
        BranchingSummand term;
        if (x.kind == ModuleKind::E)
            term.level_up = make_label(up, x.flow, ModuleKind::E, m, x.s,
                                       x.lambda + Rational(a + 1) / 2);
        else
            term.level_up = make_label(up, x.flow, x.kind, m, x.s);
        term.minimal = minimal_label(u + v, u, m, x.r);
        out.push_back(std::move(term));
    }
    return out;
}

TwoVarCharacter branching_char_verify(const BranchParams& p, long q_order, long z_window) {
    const long u = p.lvl.u, v = p.lvl.v;
    // Validates the index ranges and the genericity of lambda.
    make_label(p.lvl, static_cast<int>(p.ell), ModuleKind::E, p.r, p.s, p.lambda);
    AdmissibleLevel up = level_from_uv(u + v, v);
    const Rational k = p.lvl.k, k1 = up.k;
    int a1 = (((p.a + p.ell) % 2 + 2) % 2 != 0) ? 1 : 2; // level-1 label of a + ell
    Rational shift = p.rhs_lambda_shift ? *p.rhs_lambda_shift : Rational(p.a) / 2;
    Rational lam_up = p.lambda + shift;

    // Margins: theta columns out to n_theta, dense-character windows wide
    // enough that everything omitted lands above the per-column targets.
    long ell_abs = std::labs(p.ell);
    long n_theta =
        static_cast<long>(std::ceil(std::sqrt(double(q_order + (ell_abs + 2) * (z_window + 8))))) +
        2;
    long theta_hw = 2 * n_theta + 1;
    long z_big = z_window + theta_hw + 2;
    long big_order = q_order + (z_window + 2) * ell_abs + theta_hw * ell_abs / 2 + 4;

    Rational anchor = -k + Rational(2) * p.lambda;
    TwoVarCharacter lhs =
        flow_character(relaxed_character(p.lvl, p.r, p.s, p.lambda, big_order,
                                         anchor - z_big, anchor + z_big),
                       p.ell, k) *
        level1_character(a1, Rational(big_order), theta_hw);

    Rational anchor1 = -k1 + Rational(2) * lam_up;
    TwoVarCharacter rhs;
    bool first = true;
    for (long m = 1; m <= u + v - 1; ++m) {
        if (((m + p.r + p.s + p.a) % 2 + 2) % 2 == 0) continue;
        TwoVarCharacter term =
            flow_character(relaxed_character(up, m, p.s, lam_up, big_order,
                                             anchor1 - z_big, anchor1 + z_big),
                           p.ell, k1) *
            minimal_character(minimal_label(u + v, u, m, p.r), big_order);
        rhs = first ? term : rhs + term;
        first = false;
    }

    // Compare around the flowed right-hand anchor; both supports lie on the
    // same coset mod 2.
    Rational c0 = anchor1 + k1 * Rational(p.ell);
    TwoVarCharacter diff = (lhs - rhs).restricted(c0 - z_window, c0 + z_window);
    TwoVarCharacter out(c0 - z_window, c0 + z_window);
    for (long o = -(z_window - (z_window % 2)); o <= z_window; o += 2) {
        Rational e = c0 + o;
        PuiseuxSeries d = diff.column(e);
        // Target order is measured from the product column's leading term;
        // if the supports do not even overlap (a failed identity), fall back
        // to the residual's own leading term.
        PuiseuxSeries ref = lhs.column(e);
        if (ref.is_zero() && !ref.cutoff()) ref = d;
        if (ref.is_zero() && !ref.cutoff())
            throw domain_error("empty product column; widen the z window");
        Rational target = ref.leading_exponent() + q_order;
        if (!d.cutoff() || *d.cutoff() < target)
            throw domain_error("internal truncation below the requested order");
        out.set_column(e, d.truncated(target));
    }
    return out;
}

} // namespace sl2wt
