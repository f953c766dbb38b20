#pragma once

#include "sl2wt/character.hpp"
#include "sl2wt/levels.hpp"
#include "sl2wt/virasoro.hpp"

#include <optional>
#include <vector>

namespace sl2wt {

enum class ModuleKind { L, Dplus, Dminus, E, Eplus, Eminus, P };

std::string kind_str(ModuleKind k);

/// Label of a weight module at an admissible level: spectral flow, kind and
/// indices.  E-kind carries a rational weight parameter stored canonically
/// in [0,2).
struct ModuleLabel {
    AdmissibleLevel lvl;
    int flow = 0;
    ModuleKind kind = ModuleKind::L;
    long r = 0;
    long s = 0;
    Rational lambda;

    friend bool operator==(const ModuleLabel& a, const ModuleLabel& b) {
        return a.lvl.u == b.lvl.u && a.lvl.v == b.lvl.v && a.flow == b.flow &&
               a.kind == b.kind && a.r == b.r && a.s == b.s && a.lambda == b.lambda;
    }
    friend bool operator<(const ModuleLabel& a, const ModuleLabel& b) {
        auto ka = std::tuple(a.lvl.u, a.lvl.v, a.flow, static_cast<int>(a.kind), a.r, a.s);
        auto kb = std::tuple(b.lvl.u, b.lvl.v, b.flow, static_cast<int>(b.kind), b.r, b.s);
        return ka != kb ? ka < kb : a.lambda < b.lambda;
    }
};

/// Validates index ranges (and the excluded-weight condition for E-kind) and
/// canonicalizes lambda into [0,2).  Does not rewrite between kinds.
ModuleLabel make_label(const AdmissibleLevel& lvl, int flow, ModuleKind kind, long r, long s,
                       const Rational& lambda = Rational(0));

/// Canonical representative: flowed L(r); Dplus(r,s) with s <= v-2;
/// E(lambda;r,s) with (s,r) lexicographically minimal.  Dminus and
/// out-of-range Dplus are rewritten through the identification rules.
/// Eplus/Eminus/P are canonical whenever their indices are in range.
ModuleLabel normal_form(const ModuleLabel& x);

ModuleLabel spectral_flow(const ModuleLabel& x, int n);

/// Prints e.g. "s3(E[1/3;1,1])@(3,2)"; flow 0 omits the prefix:
/// "D+[2,1]@(5,3)".  parse_label accepts both shapes.
std::string label_str(const ModuleLabel& x);
ModuleLabel parse_label(const std::string& s);

/// All canonical simples with flow in [flow_lo, flow_hi]; E-kind entries for
/// each valid sample weight.
std::vector<ModuleLabel> enumerate_simples(const AdmissibleLevel& lvl, int flow_lo,
                                           int flow_hi,
                                           const std::vector<Rational>& lambda_samples);

/// Block of the category: either C(r,n) or an E-type block keyed by
/// (flow, r, s, lambda).
struct BlockId {
    bool is_c = true;
    long r = 0;
    long n = 0; // C: 0..v-1; E: the flow
    long s = 0;
    Rational lambda;

    friend bool operator==(const BlockId&, const BlockId&) = default;
    std::string str() const;
};

/// Block and integer position of a simple label.  For C-blocks the position
/// is the index m of the simple within the block's chain; found by matching
/// the defining parametrization over an auto-expanding flow window.
std::pair<BlockId, long> block_of(const ModuleLabel& x);

struct ExactSeq {
    ModuleLabel sub, mid, quot;
};

/// Structure of the indecomposables: exact sequences, composition factors
/// (canonical), and for P-kind the Loewy layers (top/socle coincide).
struct StructureData {
    std::vector<ExactSeq> sequences;
    std::vector<ModuleLabel> composition_factors;
    std::optional<ModuleLabel> loewy_top;
    std::vector<ModuleLabel> loewy_middle;
    std::optional<ModuleLabel> loewy_socle;
};

StructureData structure_of(const ModuleLabel& x);

/// Character of the dense (E-kind) module with parameters given directly:
/// z^{-k+2*lambda} ch[M_{r,s}](q) delta(z^2) / eta(q)^2, with columns on the
/// coset (-k+2*lambda) + 2Z restricted to [z_lo, z_hi], each complete to
/// q_order terms above its leading exponent.
TwoVarCharacter relaxed_character(const AdmissibleLevel& lvl, long r, long s,
                                  const Rational& lambda, long q_order, const Rational& z_lo,
                                  const Rational& z_hi);

/// Character of an E-kind label on the default window: anchor +- z_window.
TwoVarCharacter character(const ModuleLabel& x, long q_order, long z_window);

/// Level-1 integrable character (theta over eta), columns z^{2n} for
/// n in Z + (a-1)/2 with |2n| <= z_halfwidth, truncated at the absolute
/// q-exponent cutoff.
TwoVarCharacter level1_character(int a, const Rational& q_cutoff, long z_halfwidth);

/// z^{k l} q^{k l^2/4} ch(z q^{l/2}, q).
TwoVarCharacter flow_character(const TwoVarCharacter& ch, long ell, const Rational& k);

} // namespace sl2wt
