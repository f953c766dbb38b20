// Command-line front end: exact computations on admissible-level affine sl2
// weight modules, Virasoro Verma modules and the N=2 free-field realization.
// Every subcommand emits either an aligned text table or (--json) a JSON
// document with sorted keys; all numbers are exact rationals "p/q".

#include "sl2wt/fusion.hpp"
#include "sl2wt/n2.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <unistd.h>

using nlohmann::json;
using namespace sl2wt;

namespace {

struct Config {
    bool json_out = false;
    long q_order = 8;
    long z_window = 8;
    std::string cache_dir;
    bool no_cache = false;
    long seed = 0;
};

std::string rstr(const Rational& r) { return to_string(r); }

// ---------------------------------------------------------------------------
// Read-through JSON cache: one file per key, filename = 64-bit FNV-1a hex of
// the canonical key string.  Entries store the key verbatim; a mismatch or
// unreadable entry triggers recomputation and an overwrite (with a warning).
// Writes go through a temp file plus atomic rename so concurrent processes
// only ever observe complete entries.

std::string hex_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string cached(const Config& cfg, const std::string& key,
                   const std::function<json()>& producer) {
    if (cfg.no_cache || cfg.cache_dir.empty()) return producer().dump(2);
    namespace fs = std::filesystem;
    fs::create_directories(cfg.cache_dir);
    fs::path file = fs::path(cfg.cache_dir) / (hex_hash(key) + ".json");
    if (fs::exists(file)) {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            json entry = json::parse(ss.str());
            if (entry.at("key").get<std::string>() == key)
                return entry.at("payload").get<std::string>();
            std::cerr << "warning: cache key collision in " << file.string()
                      << ", recomputing\n";
        } catch (const json::exception&) {
            std::cerr << "warning: corrupt cache entry " << file.string()
                      << ", recomputing\n";
        }
    }
    std::string payload = producer().dump(2);
    json entry;
    entry["key"] = key;
    entry["payload"] = payload;
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp);
        out << entry.dump(2) << '\n';
    }
    fs::rename(tmp, file);
    return payload;
}

// ---------------------------------------------------------------------------
// Serializers shared between text and JSON paths.

json series_json(const PuiseuxSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"q", rstr(e)}, {"c", rstr(c)}});
    json out;
    out["terms"] = std::move(terms);
    if (s.cutoff()) out["cutoff"] = rstr(*s.cutoff());
    return out;
}

json character_json(const TwoVarCharacter& ch) {
    json cols = json::array();
    for (const auto& [z, col] : ch.z_terms()) {
        json c = series_json(col);
        c["z"] = rstr(z);
        cols.push_back(std::move(c));
    }
    json out;
    out["z_lo"] = rstr(ch.z_lo());
    out["z_hi"] = rstr(ch.z_hi());
    out["columns"] = std::move(cols);
    return out;
}

json pbw_json(const PBWVec& v) {
    json out = json::array();
    for (const auto& [part, coef] : v)
        out.push_back({{"partition", part}, {"coeff", rstr(coef)}});
    return out;
}

void emit(const Config& cfg, const json& j, const std::function<void()>& text) {
    if (cfg.json_out)
        std::cout << j.dump(2) << '\n';
    else
        text();
}

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_levels(const Config& cfg, long u, long v) {
    AdmissibleLevel lvl = level_from_uv(u, v);
    DualPair dual = dual_levels(lvl);
    CosetTriple coset = coset_triple(lvl);
    json j;
    j["u"] = u;
    j["v"] = v;
    j["k"] = rstr(lvl.k);
    j["t"] = rstr(lvl.t);
    j["c_vir"] = rstr(lvl.c_vir);
    j["c_sug"] = rstr(lvl.c_sug);
    j["dual"] = {{"ell", rstr(dual.ell)}, {"k_w", rstr(dual.k_w)}, {"c_n2", rstr(dual.c_n2)}};
    j["coset"] = {{"shifted_u", coset.shifted.u},
                  {"shifted_v", coset.shifted.v},
                  {"minimal_u", coset.minimal_u},
                  {"minimal_v", coset.minimal_v},
                  {"k_prime", rstr(coset.k_prime)}};
    j["ribbon_known"] = ribbon_known(lvl);
    emit(cfg, j, [&] {
        std::cout << "level k = " << rstr(lvl.k) << "  (t = " << rstr(lvl.t) << ")\n"
                  << "c_vir  = " << rstr(lvl.c_vir) << "\n"
                  << "c_sug  = " << rstr(lvl.c_sug) << "\n"
                  << "dual   : ell = " << rstr(dual.ell) << ", k_w = " << rstr(dual.k_w)
                  << ", c_n2 = " << rstr(dual.c_n2) << "\n"
                  << "coset  : (" << coset.shifted.u << "," << coset.shifted.v
                  << ") x minimal (" << coset.minimal_u << "," << coset.minimal_v
                  << "), k' = " << rstr(coset.k_prime) << "\n"
                  << "ribbon criterion known: " << (ribbon_known(lvl) ? "yes" : "no") << "\n";
    });
    return 0;
}

int cmd_singular(const Config& cfg, const std::string& t_s, long r, long s) {
    Rational t = parse_rational(t_s);
    Rational c = virasoro_c(t), h = virasoro_h(r, s, t);
    long N = r * s;
    std::string key = "singular|t=" + rstr(t) + "|r=" + std::to_string(r) +
                      "|s=" + std::to_string(s);
    std::string payload = cached(cfg, key, [&] {
        auto vecs = find_singular_vectors(c, h, N);
        json j;
        j["c"] = rstr(c);
        j["h"] = rstr(h);
        j["level"] = N;
        j["vectors"] = json::array();
        for (const auto& v : vecs) j["vectors"].push_back(pbw_json(v));
        return j;
    });
    if (cfg.json_out) {
        std::cout << payload << '\n';
        return 0;
    }
    json j = json::parse(payload);
    std::cout << "c = " << rstr(c) << ", h = " << rstr(h) << ", level " << N << "\n";
    for (const auto& vec : j["vectors"]) {
        for (const auto& term : vec) {
            Partition p = term["partition"].get<Partition>();
            std::cout << "  " << term["coeff"].get<std::string>() << " * " << partition_str(p)
                      << "\n";
        }
    }
    if (j["vectors"].empty()) std::cout << "  (no singular vector at this level)\n";
    return 0;
}

int cmd_char(const Config& cfg, const std::string& label) {
    ModuleLabel x = parse_label(label);
    std::string key = "char|" + label_str(x) + "|q=" + std::to_string(cfg.q_order) +
                      "|z=" + std::to_string(cfg.z_window);
    std::string payload = cached(cfg, key, [&] {
        json j = character_json(character(x, cfg.q_order, cfg.z_window));
        j["label"] = label_str(x);
        j["q_order"] = cfg.q_order;
        j["z_window"] = cfg.z_window;
        return j;
    });
    if (cfg.json_out)
        std::cout << payload << '\n';
    else
        std::cout << label_str(x) << ":\n"
                  << character(x, cfg.q_order, cfg.z_window).str() << '\n';
    return 0;
}

int cmd_fuse(const Config& cfg, long r, const std::string& label) {
    FusionDecomposition dec = fuse(r, parse_label(label));
    json j = json::array();
    for (const auto& [y, m] : dec) j.push_back({{"label", label_str(y)}, {"mult", m}});
    emit(cfg, j, [&] {
        for (const auto& [y, m] : dec) std::cout << m << " x " << label_str(y) << "\n";
    });
    return 0;
}

int cmd_branch(const Config& cfg, const std::string& label, int a) {
    auto dec = induct_decompose(parse_label(label), a);
    json j = json::array();
    for (const auto& t : dec)
        j.push_back({{"level_up", label_str(t.level_up)}, {"minimal", minimal_str(t.minimal)}});
    emit(cfg, j, [&] {
        for (const auto& t : dec)
            std::cout << label_str(t.level_up) << "  x  " << minimal_str(t.minimal) << "\n";
    });
    return 0;
}

int cmd_branch_verify(const Config& cfg, long u, long v, long r, long s, int a, long ell,
                      const std::string& lambda_s, const std::string& shift_s) {
    BranchParams p;
    p.lvl = level_from_uv(u, v);
    p.r = r;
    p.s = s;
    p.a = a;
    p.ell = ell;
    p.lambda = parse_rational(lambda_s);
    if (!shift_s.empty()) p.rhs_lambda_shift = parse_rational(shift_s);
    TwoVarCharacter res = branching_char_verify(p, cfg.q_order, cfg.z_window);
    json j;
    j["zero"] = res.is_zero();
    j["residual"] = character_json(res);
    j["q_order"] = cfg.q_order;
    j["z_window"] = cfg.z_window;
    emit(cfg, j, [&] {
        std::cout << "residual "
                  << (res.is_zero() ? "is identically zero"
                                    : "is NONZERO:\n" + res.str())
                  << " (q-order " << cfg.q_order << ", z-window " << cfg.z_window << ")\n";
    });
    return 0;
}

int cmd_blocks(const Config& cfg, const std::string& label) {
    ModuleLabel x = parse_label(label);
    auto [blk, pos] = block_of(x);
    json j;
    j["label"] = label_str(normal_form(x));
    j["block"] = blk.str();
    j["position"] = pos;
    emit(cfg, j, [&] {
        std::cout << label_str(normal_form(x)) << "  in  " << blk.str() << "  at position "
                  << pos << "\n";
    });
    return 0;
}

int cmd_n2_verify(const Config& cfg, const std::string& ell_s, const std::string& h_s,
                  const std::string& lam_s, const std::string& level_s, long mode_max,
                  bool simple) {
    N2Params p{parse_rational(ell_s), parse_rational(h_s), parse_rational(lam_s), simple};
    N2Realization rea(p);
    std::string fail = rea.verify_relations(parse_rational(level_s), mode_max);
    json j;
    j["checked"] = rea.relations_checked();
    j["mismatches"] = json::array();
    if (!fail.empty()) j["mismatches"].push_back(fail);
    j["central_charge"] = rstr(rea.central_charge());
    emit(cfg, j, [&] {
        std::cout << "checked " << rea.relations_checked() << " bracket evaluations, c = "
                  << rstr(rea.central_charge()) << "\n"
                  << (fail.empty() ? std::string("all relations hold")
                                   : "FIRST MISMATCH: " + fail)
                  << "\n";
    });
    return 0;
}

int cmd_n2_c1(const Config& cfg, const std::string& ell_s, const std::string& h_s,
              const std::string& lam_s, const std::string& depth_s, bool simple) {
    N2Params p{parse_rational(ell_s), parse_rational(h_s), parse_rational(lam_s), simple};
    N2Realization rea(p);
    // The Step-1 test vector: T_{-1} G+_{-1/2} applied to the top state.
    StateVec v{{0, Rational(1)}};
    v = rea.apply(N2Gen::Gp, -rat(1, 2), v, N2Moding::realization);
    v = rea.apply(N2Gen::T, -1, v, N2Moding::realization);
    bool member = rea.c1_contains(v);
    auto dims = rea.c1_quotient_dims(parse_rational(depth_s));
    json j;
    j["membership_T-1Gp-1/2"] = member;
    j["quotient_dims"] = json::array();
    long total = 0;
    for (const auto& [w, d] : dims) {
        j["quotient_dims"].push_back({{"weight", rstr(w)}, {"dim", d}});
        total += d;
    }
    j["quotient_total"] = total;
    emit(cfg, j, [&] {
        std::cout << "T_{-1} G+_{-1/2} |top>  in C1: " << (member ? "yes" : "no") << "\n"
                  << "C1-quotient dims:";
        for (const auto& [w, d] : dims) std::cout << "  " << rstr(w) << ":" << d;
        std::cout << "  (total " << total << ")\n";
    });
    return 0;
}

int cmd_c1_vir(const Config& cfg, const std::string& c_s, const std::string& h_s,
               const std::string& levels_s, long depth) {
    HwModuleSpec spec;
    spec.c = parse_rational(c_s);
    spec.h = parse_rational(h_s);
    if (!levels_s.empty()) {
        std::stringstream ss(levels_s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            spec.singular_levels.push_back(std::stol(tok));
    }
    auto dims = c1_quotient_dims(spec, depth);
    json j;
    j["dims"] = dims;
    j["total"] = std::accumulate(dims.begin(), dims.end(), 0L);
    emit(cfg, j, [&] {
        std::cout << "C1-quotient dims by level:";
        for (long d : dims) std::cout << " " << d;
        std::cout << "\n";
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for admissible-level sl2 weight modules"};
    app.require_subcommand(1);

    Config cfg;
    app.fallthrough(); // global flags may follow the subcommand name
    app.add_flag("--json", cfg.json_out, "machine-readable JSON output")
        ->envname("SL2WT_JSON");
    app.add_option("--q-order", cfg.q_order, "q-series truncation order")
        ->envname("SL2WT_Q_ORDER")
        ->check(CLI::PositiveNumber);
    app.add_option("--z-window", cfg.z_window, "z-exponent half-width")
        ->envname("SL2WT_Z_WINDOW")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cfg.cache_dir, "on-disk JSON cache directory")
        ->envname("SL2WT_CACHE_DIR");
    app.add_flag("--no-cache", cfg.no_cache, "bypass the cache")->envname("SL2WT_NO_CACHE");
    app.add_option("--seed", cfg.seed, "seed for sampled-property commands")
        ->envname("SL2WT_SEED");

    long u = 3, v = 2, r = 1, s = 1, mode_max = 2, depth_i = 6;
    int a = 1;
    long ell_flow = 0;
    std::string t_s = "3/2", label, ell_s = "-1/2", h_s = "0", lam_s = "0", shift_s,
                level_s = "2", depth_s = "2", c_s = "25", levels_s;
    bool simple = false;

    auto* levels = app.add_subcommand("levels", "admissible-level constants");
    levels->add_option("--u", u)->required();
    levels->add_option("--v", v)->required();

    auto* singular = app.add_subcommand("singular", "Virasoro singular vector at level r*s");
    singular->add_option("--t", t_s, "central-charge parameter t = u/v")->required();
    singular->add_option("--r", r)->required();
    singular->add_option("--s", s)->required();

    auto* chr = app.add_subcommand("char", "two-variable character of a dense label");
    chr->add_option("--label", label)->required();

    auto* fus = app.add_subcommand("fuse", "fusion with the simple current family L(r)");
    fus->add_option("--r", r)->required();
    fus->add_option("--label", label)->required();

    auto* br = app.add_subcommand("branch", "induction decomposition against a level-1 label");
    br->add_option("--label", label)->required();
    br->add_option("--a", a)->required();

    auto* brv = app.add_subcommand("branch-verify", "branching character identity residual");
    brv->add_option("--u", u)->required();
    brv->add_option("--v", v)->required();
    brv->add_option("--r", r);
    brv->add_option("--s", s);
    brv->add_option("--a", a)->required();
    brv->add_option("--ell", ell_flow, "spectral flow amount");
    brv->add_option("--lambda", lam_s)->required();
    brv->add_option("--shift", shift_s, "override the decomposed-side lambda shift");

    auto* blk = app.add_subcommand("blocks", "block and chain position of a simple label");
    blk->add_option("--label", label)->required();

    auto* n2v = app.add_subcommand("n2-verify", "N=2 bracket table on the realization");
    n2v->set_help_flag("--help", "print help"); // frees -h for the weight option
    n2v->add_option("--ell", ell_s)->required();
    n2v->add_option("--h", h_s)->required();
    n2v->add_option("--lambda", lam_s)->required();
    n2v->add_option("--level", level_s, "probe basis states up to this weight");
    n2v->add_option("--mode-max", mode_max);
    n2v->add_flag("--simple", simple, "use the simple Virasoro tensorand");

    auto* n2c = app.add_subcommand("n2-c1", "C1 membership and quotient dimensions");
    n2c->set_help_flag("--help", "print help");
    n2c->add_option("--ell", ell_s)->required();
    n2c->add_option("--h", h_s)->required();
    n2c->add_option("--lambda", lam_s)->required();
    n2c->add_option("--depth", depth_s, "largest weight tested");
    n2c->add_flag("--simple", simple, "use the simple Virasoro tensorand");

    auto* c1v = app.add_subcommand("c1-vir", "Virasoro highest-weight C1-quotient dims");
    c1v->set_help_flag("--help", "print help");
    c1v->add_option("--c", c_s)->required();
    c1v->add_option("--h", h_s)->required();
    c1v->add_option("--singular-levels", levels_s, "comma-separated singular-vector levels");
    c1v->add_option("--depth", depth_i);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (levels->parsed()) return cmd_levels(cfg, u, v);
        if (singular->parsed()) return cmd_singular(cfg, t_s, r, s);
        if (chr->parsed()) return cmd_char(cfg, label);
        if (fus->parsed()) return cmd_fuse(cfg, r, label);
        if (br->parsed()) return cmd_branch(cfg, label, a);
        if (brv->parsed()) return cmd_branch_verify(cfg, u, v, r, s, a, ell_flow, lam_s, shift_s);
        if (blk->parsed()) return cmd_blocks(cfg, label);
        if (n2v->parsed()) return cmd_n2_verify(cfg, ell_s, h_s, lam_s, level_s, mode_max, simple);
        if (n2c->parsed()) return cmd_n2_c1(cfg, ell_s, h_s, lam_s, depth_s, simple);
        if (c1v->parsed()) return cmd_c1_vir(cfg, c_s, h_s, levels_s, depth_i);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
