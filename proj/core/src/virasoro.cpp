#include "sl2wt/virasoro.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sl2wt {

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    // lexicographically decreasing enumeration, largest part first
    auto rec = [&](auto&& self, long rest, long max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long partition_count(long n) {
    if (n < 0) return 0;
    // pentagonal-number recurrence
    static std::vector<long> memo{1};
    for (long m = static_cast<long>(memo.size()); m <= n; ++m) {
        long total = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            long sign = (j % 2 == 1) ? 1 : -1;
            total += sign * memo[m - g1];
            if (g2 <= m) total += sign * memo[m - g2];
        }
        memo.push_back(total);
    }
    return memo[n];
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]";
    return os.str();
}

VirasoroAlgebra make_virasoro_algebra(const Rational& c) {
    VirasoroAlgebra va;
    va.L = va.alg.add_generator("L", Parity::even, 2, Moding::integer);
    GenId L = va.L;
    va.alg.set_bracket(L, L, [L, c](const Rational& m, const Rational& n) {
        BracketValue r;
        Rational coef = m - n;
        if (coef != 0) r.terms.push_back({L, coef});
        if (m + n == 0) r.central = (m * m * m - m) / 12 * c;
        return r;
    });
    return va;
}

namespace {
long level_of(const Partition& I) { return std::accumulate(I.begin(), I.end(), 0L); }

void pbw_add(PBWVec& dst, const Partition& I, const Rational& coef) {
    if (coef == 0) return;
    Rational& slot = dst[I];
    slot += coef;
    if (slot == 0) dst.erase(I);
}

void pbw_add_scaled(PBWVec& dst, const PBWVec& src, const Rational& f) {
    if (f == 0) return;
    for (const auto& [I, coef] : src) pbw_add(dst, I, coef * f);
}
} // namespace

const PBWVec& VirasoroAction::apply(long n, const Partition& I) {
    auto key = std::make_pair(n, I);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    PBWVec out;
    if (I.empty()) {
        if (n == 0)
            pbw_add(out, {}, h_);
        else if (n < 0)
            pbw_add(out, {-n}, 1);
        // n > 0 annihilates the highest-weight vector
    } else {
        long j = I.front();
        if (n <= -j) {
            Partition J;
            J.reserve(I.size() + 1);
            J.push_back(-n);
            J.insert(J.end(), I.begin(), I.end());
            pbw_add(out, J, 1);
        } else {
            // L_n L_{-j} = L_{-j} L_n + (n+j) L_{n-j} + delta_{n,j} (n^3-n)/12 c
            Partition rest(I.begin() + 1, I.end());
            // L_{-j} (L_n rest): prepend via recursion to restore order
            for (const auto& [K, coef] : apply(n, rest)) {
                PBWVec t = apply(-j, K);
                pbw_add_scaled(out, t, coef);
            }
            pbw_add_scaled(out, apply(n - j, rest), n + j);
            if (n == j) {
                Rational central = Rational(n) * (n * n - 1) / 12 * c_;
                pbw_add(out, rest, central);
            }
        }
    }
    return cache_.emplace(key, std::move(out)).first->second;
}

PBWVec VirasoroAction::apply(long n, const PBWVec& v) {
    PBWVec out;
    for (const auto& [I, coef] : v) pbw_add_scaled(out, apply(n, I), coef);
    return out;
}

const QMatrix& gram_matrix(const Rational& c, const Rational& h, long N) {
    if (N < 0) throw domain_error("gram_matrix needs N >= 0");
    using Key = std::tuple<Rational, Rational, long>;
    static std::map<Key, QMatrix> cache;
    static std::mutex mu;
    Key key{c, h, N};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    auto parts = partitions_of(N);
    std::size_t d = parts.size();
    QMatrix g(d, d);
    VirasoroAction act(c, h);
    for (std::size_t j = 0; j < d; ++j) {
        // column j: apply the adjoint of L_{-I} to L_{-J}|h> and read off the
        // highest-weight coefficient
        for (std::size_t i = 0; i < d; ++i) {
            PBWVec v{{parts[j], Rational(1)}};
            for (long part : parts[i]) v = act.apply(part, v);
            auto it = v.find(Partition{});
            g.at(i, j) = it == v.end() ? Rational(0) : it->second;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(g)).first->second;
}

std::vector<long> simple_graded_dims(const Rational& c, const Rational& h, long N_max) {
    std::vector<long> dims;
    for (long n = 0; n <= N_max; ++n)
        dims.push_back(static_cast<long>(gram_matrix(c, h, n).rank()));
    return dims;
}

std::vector<PBWVec> find_singular_vectors(const Rational& c, const Rational& h, long N) {
    if (N < 1) throw domain_error("find_singular_vectors needs N >= 1");
    auto parts = partitions_of(N);
    std::size_t d = parts.size();
    auto lower1 = partitions_of(N - 1);
    auto lower2 = partitions_of(N - 2);
    std::map<Partition, std::size_t> row_of;
    for (std::size_t i = 0; i < lower1.size(); ++i) row_of[lower1[i]] = i;
    for (std::size_t i = 0; i < lower2.size(); ++i) row_of[lower2[i]] = lower1.size() + i;

    QMatrix m(lower1.size() + lower2.size(), d);
    VirasoroAction act(c, h);
    for (std::size_t j = 0; j < d; ++j) {
        for (long n : {1L, 2L}) {
            if (N - n < 0) continue;
            for (const auto& [K, coef] : act.apply(n, parts[j])) m.at(row_of.at(K), j) = coef;
        }
    }

    std::vector<PBWVec> out;
    Partition ones(static_cast<std::size_t>(N), 1);
    for (const auto& x : m.kernel_basis()) {
        PBWVec v;
        for (std::size_t j = 0; j < d; ++j) pbw_add(v, parts[j], x[j]);
        auto it = v.find(ones);
        if (it != v.end() && it->second != 0) {
            Rational scale = Rational(1) / it->second;
            for (auto& [I, coef] : v) coef *= scale;
        }
        out.push_back(std::move(v));
    }
    return out;
}

const RadicalReducer::LevelData& RadicalReducer::level(long n) {
    auto it = levels_.find(n);
    if (it != levels_.end()) return it->second;
    LevelData ld;
    ld.parts = partitions_of(n);
    for (std::size_t i = 0; i < ld.parts.size(); ++i) ld.index[ld.parts[i]] = static_cast<int>(i);
    for (const auto& x : gram_matrix(c_, h_, n).kernel_basis()) {
        SparseSpan::Vec v;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) v[static_cast<int>(i)] = x[i];
        ld.radical.insert(std::move(v));
    }
    return levels_.emplace(n, std::move(ld)).first->second;
}

PBWVec RadicalReducer::reduce(const PBWVec& v) {
    // split by level, reduce each component against that level's radical
    std::map<long, SparseSpan::Vec> by_level;
    for (const auto& [I, coef] : v) by_level[level_of(I)][level(level_of(I)).index.at(I)] = coef;
    PBWVec out;
    for (auto& [n, vec] : by_level) {
        const LevelData& ld = level(n);
        for (const auto& [i, coef] : ld.radical.reduce(std::move(vec)))
            pbw_add(out, ld.parts[static_cast<std::size_t>(i)], coef);
    }
    return out;
}

bool RadicalReducer::is_basis_partition(const Partition& I) {
    const LevelData& ld = level(level_of(I));
    return !ld.radical.rows().count(ld.index.at(I));
}

VirasoroVerma::VirasoroVerma(const Rational& c, const Rational& h)
    : va_(make_virasoro_algebra(c)), act_(c, h) {
    state_id({}); // id 0 is the highest-weight vector
}

int VirasoroVerma::state_id(const Partition& I) {
    auto it = ids_.find(I);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(states_.size());
    states_.push_back(I);
    ids_.emplace(I, id);
    return id;
}

Rational VirasoroVerma::weight(int state) const { return level_of(states_.at(state)); }

StateVec VirasoroVerma::to_states(const PBWVec& v) {
    StateVec out;
    for (const auto& [I, coef] : v) out[state_id(I)] = coef;
    return out;
}

PBWVec VirasoroVerma::to_pbw(const StateVec& v) const {
    PBWVec out;
    for (const auto& [id, coef] : v) out[states_.at(id)] = coef;
    return out;
}

StateVec VirasoroVerma::apply_generator(GenId g, const Rational& mode_adj, int state) {
    if (!(g == va_.L)) throw domain_error("unknown generator for Virasoro module");
    if (!is_integer(mode_adj)) throw domain_error("Virasoro modes are integers");
    long n = rat_floor(mode_adj).convert_to<long>();
    return to_states(act_.apply(n, PBWVec{{partition_of(state), Rational(1)}}));
}

MinimalLabel minimal_label(long u, long v, long r, long s) {
    if (u < 2 || v < 2 || std::gcd(u, v) != 1)
        throw domain_error("minimal model needs coprime u, v >= 2");
    if (r < 1 || r > u - 1 || s < 1 || s > v - 1)
        throw domain_error("minimal label (r,s) out of range");
    MinimalLabel a{u, v, r, s}, b{u, v, u - r, v - s};
    return std::make_pair(a.s, a.r) <= std::make_pair(b.s, b.r) ? a : b;
}

Rational minimal_h(const MinimalLabel& lab) {
    return virasoro_h(lab.r, lab.s, rat(lab.u, lab.v));
}

Rational minimal_c(const MinimalLabel& lab) { return virasoro_c(rat(lab.u, lab.v)); }

std::string minimal_str(const MinimalLabel& lab) {
    std::ostringstream os;
    os << "M[" << lab.r << "," << lab.s << "]@(" << lab.u << "," << lab.v << ")";
    return os.str();
}

PuiseuxSeries minimal_character(const MinimalLabel& lab, long q_order) {
    // Alternating-sum character: (1/eta) sum_n [q^{(2uvn+vr-us)^2/(4uv)}
    // - q^{(2uvn+vr+us)^2/(4uv)}].  Agrees with the Gram-rank dimensions;
    // cheap at high order.
    const long u = lab.u, v = lab.v;
    Rational lead = minimal_h(lab) - minimal_c(lab) / 24;
    Rational cutoff = lead + q_order;
    PuiseuxSeries theta = PuiseuxSeries::zero_to(cutoff + rat(1, 24));
    Rational uv4 = Rational(4) * u * v;
    for (long n = 0;; ++n) {
        bool any = false;
        for (long sign : {1L, -1L}) {
            long m = 2 * u * v * sign * n;
            for (auto [base, coef] :
                 {std::pair(m + v * lab.r - u * lab.s, Rational(1)),
                  std::pair(m + v * lab.r + u * lab.s, Rational(-1))}) {
                Rational e = Rational(base) * base / uv4;
                if (e < cutoff + rat(1, 24)) {
                    theta.set_term(e, theta.coefficient(e) + coef);
                    any = true;
                }
            }
            if (n == 0) break; // avoid double-counting the n = 0 shell
        }
        if (n > 0 && !any) break;
    }
    return (theta * dedekind_eta(Rational(q_order + 2)).inverse()).truncated(cutoff);
}

namespace {
// Verlinde-type 0/1 coefficient of the quantum group truncation.
bool n_coeff(long q, long t, long t1, long t2) {
    if (t2 < std::labs(t - t1) + 1) return false;
    if (t2 > std::min(t + t1 - 1, 2 * q - t - t1 - 1)) return false;
    return (t + t1 + t2) % 2 == 1;
}
} // namespace

std::map<MinimalLabel, long> minimal_fusion(const MinimalLabel& a, const MinimalLabel& b) {
    if (a.u != b.u || a.v != b.v) throw domain_error("minimal_fusion: mismatched models");
    std::map<MinimalLabel, long> out;
    for (long r = 1; r <= a.u - 1; ++r)
        for (long s = 1; s <= a.v - 1; ++s)
            if (n_coeff(a.u, a.r, b.r, r) && n_coeff(a.v, a.s, b.s, s))
                out[minimal_label(a.u, a.v, r, s)] += 1;
    return out;
}

std::vector<long> c1_quotient_dims(const HwModuleSpec& spec, long level_max) {
    VirasoroVerma mod(spec.c, spec.h);
    FieldApplicator app(mod);
    VirasoroAction act(spec.c, spec.h);
    Field::Ptr Lf = Field::generator(mod.algebra(), mod.L());

    // singular vectors generating the quotiented submodule
    std::vector<std::pair<long, PBWVec>> sing;
    for (long N : spec.singular_levels)
        for (auto& v : find_singular_vectors(spec.c, spec.h, N)) sing.push_back({N, v});

    std::vector<long> dims;
    for (long n = 0; n <= level_max; ++n) {
        SparseSpan span;
        // level-n piece of the submodule: L_{-K} applied to singular vectors
        for (const auto& [N, sv] : sing) {
            if (N > n) continue;
            for (const auto& K : partitions_of(n - N)) {
                PBWVec v = sv;
                for (auto it = K.rbegin(); it != K.rend(); ++it) v = act.apply(-*it, v);
                span.insert(mod.to_states(v));
            }
        }
        // C1 at level n: a_(-1) applied to level (n - wt a), over the vacuum
        // PBW spanning set (partitions with parts >= 2)
        for (long w = 2; w <= n; ++w) {
            for (const auto& A : partitions_of(w)) {
                if (!A.empty() && A.back() < 2) continue;
                Field::Ptr f = Field::vacuum();
                for (auto it = A.rbegin(); it != A.rend(); ++it)
                    f = Field::iterate(Lf, -*it + 1, f);
                for (const auto& J : partitions_of(n - w)) {
                    StateVec v{{mod.state_id(J), Rational(1)}};
                    span.insert(app.apply_std(f, -1, v));
                }
            }
        }
        dims.push_back(partition_count(n) - static_cast<long>(span.dim()));
    }
    return dims;
}

} // namespace sl2wt
