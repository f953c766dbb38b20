#include "sl2wt/affine.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sl2wt {

std::string kind_str(ModuleKind k) {
    switch (k) {
    case ModuleKind::L: return "L";
    case ModuleKind::Dplus: return "D+";
    case ModuleKind::Dminus: return "D-";
    case ModuleKind::E: return "E";
    case ModuleKind::Eplus: return "E+";
    case ModuleKind::Eminus: return "E-";
    case ModuleKind::P: return "P";
    }
    return "?";
}

namespace {

Rational lambda_mod2(const Rational& lambda) {
    Rational r = lambda - Rational(2) * Rational(rat_floor(lambda / 2));
    if (r < 0) r += 2; // guard against floor convention surprises
    return r;
}

bool lambda_excluded(const AdmissibleLevel& lvl, long r, long s, const Rational& lambda) {
    Rational lam = lambda_mod2(lambda);
    Rational a = lambda_mod2(affine_weights(r, s, lvl).first);
    Rational b = lambda_mod2(affine_weights(lvl.u - r, lvl.v - s, lvl).first);
    return lam == a || lam == b;
}

} // namespace

ModuleLabel make_label(const AdmissibleLevel& lvl, int flow, ModuleKind kind, long r, long s,
                       const Rational& lambda) {
    ModuleLabel x;
    x.lvl = lvl;
    x.flow = flow;
    x.kind = kind;
    x.r = r;
    x.s = s;
    if (r < 1 || r > lvl.u - 1) throw domain_error("label index r out of range");
    switch (kind) {
    case ModuleKind::L:
        x.s = 0;
        break;
    case ModuleKind::Dplus:
    case ModuleKind::Dminus:
    case ModuleKind::Eplus:
    case ModuleKind::Eminus:
    case ModuleKind::P:
        if (s < 1 || s > lvl.v - 1) throw domain_error("label index s out of range");
        break;
    case ModuleKind::E:
        if (s < 1 || s > lvl.v - 1) throw domain_error("label index s out of range");
        if (lambda_excluded(lvl, r, s, lambda))
            throw domain_error("dense-module weight " + to_string(lambda) +
                               " coincides with a highest/lowest weight for (" +
                               std::to_string(r) + "," + std::to_string(s) + ")");
        x.lambda = lambda_mod2(lambda);
        break;
    }
    return x;
}

ModuleLabel normal_form(const ModuleLabel& x) {
    const long u = x.lvl.u, v = x.lvl.v;
    switch (x.kind) {
    case ModuleKind::Dplus:
        if (x.s == v - 1) return make_label(x.lvl, x.flow + 1, ModuleKind::L, u - x.r, 0);
        return x;
    case ModuleKind::Dminus:
        if (x.s == v - 1) return make_label(x.lvl, x.flow - 1, ModuleKind::L, u - x.r, 0);
        return make_label(x.lvl, x.flow - 1, ModuleKind::Dplus, u - x.r, v - x.s - 1);
    case ModuleKind::E: {
        // (s, r) ~ (v - s, u - r); keep the lexicographically smaller pair.
        if (std::pair(v - x.s, u - x.r) < std::pair(x.s, x.r))
            return make_label(x.lvl, x.flow, ModuleKind::E, u - x.r, v - x.s, x.lambda);
        return x;
    }
    default:
        return x;
    }
}

ModuleLabel spectral_flow(const ModuleLabel& x, int n) {
    ModuleLabel y = x;
    y.flow += n;
    return y;
}

std::string label_str(const ModuleLabel& x) {
    std::ostringstream os;
    os << kind_str(x.kind) << '[';
    if (x.kind == ModuleKind::E) os << to_string(x.lambda) << ';';
    os << x.r;
    if (x.kind != ModuleKind::L) os << ',' << x.s;
    os << ']';
    std::string core = os.str();
    std::ostringstream full;
    if (x.flow != 0)
        full << 's' << x.flow << '(' << core << ')';
    else
        full << core;
    full << "@(" << x.lvl.u << ',' << x.lvl.v << ')';
    return full.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& s) {
    throw domain_error("malformed module label: '" + s + "'");
}

long parse_long(const std::string& s, const std::string& tok) {
    try {
        std::size_t used = 0;
        long r = std::stol(tok, &used);
        if (used != tok.size()) parse_fail(s);
        return r;
    } catch (const std::logic_error&) {
        parse_fail(s);
    }
}

} // namespace

ModuleLabel parse_label(const std::string& s) {
    auto at = s.rfind("@(");
    if (at == std::string::npos || s.back() != ')') parse_fail(s);
    std::string lvl_part = s.substr(at + 2, s.size() - at - 3);
    auto comma = lvl_part.find(',');
    if (comma == std::string::npos) parse_fail(s);
    AdmissibleLevel lvl = level_from_uv(parse_long(s, lvl_part.substr(0, comma)),
                                        parse_long(s, lvl_part.substr(comma + 1)));

    std::string head = s.substr(0, at);
    int flow = 0;
    if (head.size() > 2 && head[0] == 's' &&
        (std::isdigit(static_cast<unsigned char>(head[1])) || head[1] == '-' ||
         head[1] == '+')) {
        auto open = head.find('(');
        if (open == std::string::npos || head.back() != ')') parse_fail(s);
        flow = static_cast<int>(parse_long(s, head.substr(1, open - 1)));
        head = head.substr(open + 1, head.size() - open - 2);
    }

    auto lb = head.find('[');
    if (lb == std::string::npos || head.back() != ']') parse_fail(s);
    std::string kind_tok = head.substr(0, lb);
    std::string args = head.substr(lb + 1, head.size() - lb - 2);

    ModuleKind kind;
    if (kind_tok == "L") kind = ModuleKind::L;
    else if (kind_tok == "D+") kind = ModuleKind::Dplus;
    else if (kind_tok == "D-") kind = ModuleKind::Dminus;
    else if (kind_tok == "E") kind = ModuleKind::E;
    else if (kind_tok == "E+") kind = ModuleKind::Eplus;
    else if (kind_tok == "E-") kind = ModuleKind::Eminus;
    else if (kind_tok == "P") kind = ModuleKind::P;
    else parse_fail(s);

    Rational lambda = 0;
    if (kind == ModuleKind::E) {
        auto semi = args.find(';');
        if (semi == std::string::npos) parse_fail(s);
        lambda = parse_rational(args.substr(0, semi));
        args = args.substr(semi + 1);
    }
    long r = 0, sidx = 0;
    auto comma2 = args.find(',');
    if (kind == ModuleKind::L) {
        if (comma2 != std::string::npos) parse_fail(s);
        r = parse_long(s, args);
    } else {
        if (comma2 == std::string::npos) parse_fail(s);
        r = parse_long(s, args.substr(0, comma2));
        sidx = parse_long(s, args.substr(comma2 + 1));
    }
    return make_label(lvl, flow, kind, r, sidx, lambda);
}

std::vector<ModuleLabel> enumerate_simples(const AdmissibleLevel& lvl, int flow_lo,
                                           int flow_hi,
                                           const std::vector<Rational>& lambda_samples) {
    std::set<ModuleLabel> out;
    for (int f = flow_lo; f <= flow_hi; ++f) {
        for (long r = 1; r <= lvl.u - 1; ++r) {
            out.insert(make_label(lvl, f, ModuleKind::L, r, 0));
            for (long s = 1; s <= lvl.v - 2; ++s)
                out.insert(make_label(lvl, f, ModuleKind::Dplus, r, s));
            for (long s = 1; s <= lvl.v - 1; ++s) {
                if (std::pair(lvl.v - s, lvl.u - r) < std::pair(s, r)) continue;
                for (const Rational& lam : lambda_samples) {
                    if (lambda_excluded(lvl, r, s, lam)) continue;
                    out.insert(make_label(lvl, f, ModuleKind::E, r, s, lam));
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

std::string BlockId::str() const {
    std::ostringstream os;
    if (is_c)
        os << "C(" << r << ',' << n << ')';
    else
        os << "E(" << n << ';' << to_string(lambda) << ';' << r << ',' << s << ')';
    return os.str();
}

std::pair<BlockId, long> block_of(const ModuleLabel& x0) {
    ModuleLabel x = normal_form(x0);
    const long u = x.lvl.u, v = x.lvl.v;
    if (x.kind == ModuleKind::E) {
        BlockId b;
        b.is_c = false;
        b.r = x.r;
        b.n = x.flow;
        b.s = x.s;
        b.lambda = x.lambda;
        return {b, 0};
    }
    if (x.kind != ModuleKind::L && x.kind != ModuleKind::Dplus)
        throw domain_error("block_of is defined for simple labels only");
    if (v < 2) throw domain_error("block decomposition requires v >= 2");

    // Match against the chain parametrization: the member at position
    // -l(v-1)-m of C(r,n) is the flow by -n-2lv-m of D+ with first index r
    // (l even) or u-r (l odd) and second index v-1-m.
    for (long W = 4; W <= 64; W *= 2) {
        for (long r = 1; r <= u - 1; ++r)
            for (long n = 0; n <= v - 1; ++n)
                for (long l = -W; l <= W; ++l)
                    for (long m = 0; m <= v - 2; ++m) {
                        long phi = (l % 2 == 0) ? r : u - r;
                        ModuleLabel cand =
                            normal_form(make_label(x.lvl, static_cast<int>(-n - 2 * l * v - m),
                                                   ModuleKind::Dplus, phi, v - 1 - m));
                        if (cand == x) return {BlockId{true, r, n, 0, Rational(0)},
                                               -l * (v - 1) - m};
                    }
    }
    throw domain_error("label not located in any block window: " + label_str(x0));
}

StructureData structure_of(const ModuleLabel& x) {
    const long u = x.lvl.u, v = x.lvl.v;
    StructureData d;
    auto lbl = [&](int flow, ModuleKind k, long r, long s) {
        return make_label(x.lvl, flow, k, r, s);
    };
    switch (x.kind) {
    case ModuleKind::L:
    case ModuleKind::Dplus:
    case ModuleKind::Dminus:
    case ModuleKind::E:
        d.composition_factors = {normal_form(x)};
        return d;
    case ModuleKind::Eplus: {
        ExactSeq seq{normal_form(lbl(x.flow, ModuleKind::Dplus, x.r, x.s)), x,
                     normal_form(lbl(x.flow, ModuleKind::Dminus, u - x.r, v - x.s))};
        d.composition_factors = {seq.sub, seq.quot};
        d.sequences = {seq};
        return d;
    }
    case ModuleKind::Eminus: {
        ExactSeq seq{normal_form(lbl(x.flow, ModuleKind::Dminus, x.r, x.s)), x,
                     normal_form(lbl(x.flow, ModuleKind::Dplus, u - x.r, v - x.s))};
        d.composition_factors = {seq.sub, seq.quot};
        d.sequences = {seq};
        return d;
    }
    case ModuleKind::P: {
        ModuleLabel sub_p = lbl(x.flow, ModuleKind::Eplus, x.r, x.s);
        ModuleLabel quot_p = (x.s <= v - 2)
                                 ? lbl(x.flow + 1, ModuleKind::Eplus, x.r, x.s + 1)
                                 : lbl(x.flow + 2, ModuleKind::Eplus, u - x.r, 1);
        ModuleLabel sub_m = lbl(x.flow, ModuleKind::Eminus, x.r, x.s);
        ModuleLabel quot_m = (x.s <= v - 2)
                                 ? lbl(x.flow - 1, ModuleKind::Eminus, x.r, x.s + 1)
                                 : lbl(x.flow - 2, ModuleKind::Eminus, u - x.r, 1);
        d.sequences = {{sub_p, x, quot_p}, {sub_m, x, quot_m}};
        StructureData ds = structure_of(sub_p), dq = structure_of(quot_p);
        d.composition_factors = {ds.composition_factors[0], ds.composition_factors[1],
                                 dq.composition_factors[0], dq.composition_factors[1]};
        d.loewy_top = ds.composition_factors[0];   // = socle of the submodule
        d.loewy_socle = d.loewy_top;
        d.loewy_middle = {ds.composition_factors[1], dq.composition_factors[0]};
        return d;
    }
    }
    throw domain_error("unreachable label kind");
}

TwoVarCharacter relaxed_character(const AdmissibleLevel& lvl, long r, long s,
                                  const Rational& lambda, long q_order, const Rational& z_lo,
                                  const Rational& z_hi) {
    if (r < 1 || r > lvl.u - 1 || s < 1 || s > lvl.v - 1)
        throw domain_error("dense character indices out of range");
    PuiseuxSeries inv = dedekind_eta(Rational(q_order + 1)).inverse();
    PuiseuxSeries col = minimal_character(minimal_label(lvl.u, lvl.v, r, s), q_order + 1) *
                        (inv * inv);
    Rational anchor = -lvl.k + Rational(2) * lambda;
    TwoVarCharacter ch(z_lo, z_hi);
    // Columns live on anchor + 2Z; find the first even shift inside the window.
    Rational j0 = (z_lo - anchor) / 2;
    Integer j = rat_floor(j0);
    if (Rational(j) < j0) j += 1; // ceil
    for (Rational e = anchor + Rational(2) * Rational(j); e <= z_hi; e += 2)
        ch.set_column(e, col);
    return ch;
}

TwoVarCharacter character(const ModuleLabel& x, long q_order, long z_window) {
    if (x.kind != ModuleKind::E)
        throw domain_error("two-variable character implemented for dense (E) labels");
    Rational anchor = -x.lvl.k + Rational(2) * x.lambda;
    TwoVarCharacter base = relaxed_character(x.lvl, x.r, x.s, x.lambda, q_order,
                                             anchor - z_window, anchor + z_window);
    return x.flow == 0 ? base : flow_character(base, x.flow, x.lvl.k);
}

TwoVarCharacter level1_character(int a, const Rational& q_cutoff, long z_halfwidth) {
    if (a != 1 && a != 2) throw domain_error("level-1 label must be 1 or 2");
    long order = rat_floor(q_cutoff).convert_to<long>() + 2;
    if (order < 2) order = 2;
    PuiseuxSeries inv = dedekind_eta(Rational(order)).inverse();
    TwoVarCharacter ch(Rational(-z_halfwidth), Rational(z_halfwidth));
    // Columns z^{2n}, n in Z + (a-1)/2, each q^{n^2}/eta.
    for (long two_n = -z_halfwidth; two_n <= z_halfwidth; ++two_n) {
        if ((two_n - (a - 1)) % 2 != 0) continue;
        Rational n2 = Rational(two_n) * Rational(two_n) / 4;
        PuiseuxSeries col = inv.shifted(n2).truncated(q_cutoff);
        if (!col.is_zero() || col.cutoff()) ch.set_column(Rational(two_n), col);
    }
    return ch;
}

TwoVarCharacter flow_character(const TwoVarCharacter& ch, long ell, const Rational& k) {
    if (ell == 0) return ch;
    TwoVarCharacter r = ch.q_skewed(Rational(ell) / 2);
    r = r * PuiseuxSeries::monomial(k * Rational(ell) * Rational(ell) / 4, Rational(1));
    return r.z_shifted(k * Rational(ell));
}

} // namespace sl2wt
