#include "sl2wt/ffspace.hpp"

#include <algorithm>
#include <sstream>

namespace sl2wt {

std::string ff_str(const FFMonomial& m) {
    std::ostringstream os;
    for (long a : m.A) os << "L(-" << a << ")";
    for (long c : m.C) os << "X(-" << c << ")";
    for (long b : m.B) os << "p+(-" << b << "/2)";
    for (long b : m.Bt) os << "p-(-" << b << "/2)";
    os << "|top>";
    return os.str();
}

FFSpace::FFSpace(Params p)
    : par_(std::move(p)), act_(par_.c_factor, par_.h) {
    L_ = alg_.add_generator("L", Parity::even, 2, Moding::integer);
    X_ = alg_.add_generator("X", Parity::even, 1, Moding::integer);
    pp_ = alg_.add_generator("psi+", Parity::odd, rat(1, 2), Moding::half_integer);
    pm_ = alg_.add_generator("psi-", Parity::odd, rat(1, 2), Moding::half_integer);
    if (par_.simple_factor) red_.emplace(par_.c_factor, par_.h);
    state_id(FFMonomial{}); // id 0 is the top vector
}

int FFSpace::state_id(const FFMonomial& m) {
    auto it = ids_.find(m);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(states_.size());
    states_.push_back(m);
    ids_.emplace(m, id);
    return id;
}

Rational FFSpace::weight(int state) const {
    const FFMonomial& m = states_.at(state);
    long tw = 0, half = 0;
    for (long a : m.A) tw += a;
    for (long c : m.C) tw += c;
    for (long b : m.B) half += b;
    for (long b : m.Bt) half += b;
    return Rational(tw) + Rational(half) / 2;
}

namespace {

// Inserts a doubled half-odd index into a strictly decreasing fermionic
// block; returns the Koszul sign, or 0 if the index is already present.
int fermi_insert(std::vector<long>& block, long b) {
    auto it = block.begin();
    int pos = 0;
    while (it != block.end() && *it > b) ++it, ++pos;
    if (it != block.end() && *it == b) return 0;
    block.insert(it, b);
    return pos % 2 == 0 ? 1 : -1;
}

} // namespace

StateVec FFSpace::apply_generator(GenId g, const Rational& mode, int state) {
    alg_.check_moding(g, mode);
    const FFMonomial m = states_.at(state); // copy: interning may reallocate
    StateVec out;

    if (g == L_) {
        long n = rat_floor(mode).convert_to<long>();
        PBWVec res = act_.apply(n, PBWVec{{m.A, Rational(1)}});
        if (red_) res = red_->reduce(res);
        for (const auto& [A, coef] : res) {
            FFMonomial mm = m;
            mm.A = A;
            out[state_id(mm)] = coef;
        }
        return out;
    }

    if (g == X_) {
        long n = rat_floor(mode).convert_to<long>();
        if (n == 0) {
            if (par_.lambda != 0) out[state] = par_.lambda;
        } else if (n < 0) {
            FFMonomial mm = m;
            mm.C.insert(std::upper_bound(mm.C.begin(), mm.C.end(), -n,
                                         [](long a, long b) { return a > b; }),
                        -n);
            out[state_id(mm)] = 1;
        } else {
            long mult = static_cast<long>(std::count(m.C.begin(), m.C.end(), n));
            if (mult > 0) {
                FFMonomial mm = m;
                mm.C.erase(std::find(mm.C.begin(), mm.C.end(), n));
                out[state_id(mm)] = Rational(mult) * Rational(n) * par_.kappa_x;
            }
        }
        return out;
    }

    // Fermions; the doubled index of the mode.
    long d2 = rat_num(mode * 2).convert_to<long>();
    bool plus = (g == pp_);
    if (d2 < 0) { // creation: insert into the matching block
        FFMonomial mm = m;
        int sign;
        if (plus) {
            sign = fermi_insert(mm.B, -d2);
        } else {
            sign = fermi_insert(mm.Bt, -d2);
            if (m.B.size() % 2 != 0) sign = -sign; // pass the psi+ block
        }
        if (sign != 0) out[state_id(mm)] = sign;
    } else { // annihilation: contract against the opposite block
        const std::vector<long>& blk = plus ? m.Bt : m.B;
        auto it = std::find(blk.begin(), blk.end(), d2);
        if (it != blk.end()) {
            int pos = static_cast<int>(it - blk.begin());
            int sign = pos % 2 == 0 ? 1 : -1;
            if (plus && m.B.size() % 2 != 0) sign = -sign; // pass the psi+ block
            FFMonomial mm = m;
            if (plus)
                mm.Bt.erase(mm.Bt.begin() + pos);
            else
                mm.B.erase(mm.B.begin() + pos);
            out[state_id(mm)] = sign;
        }
    }
    return out;
}

namespace {

// Strictly decreasing lists of positive odd integers with the given sum.
void odd_strict_lists(long sum, long max_part, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
    if (sum == 0) {
        out.push_back(cur);
        return;
    }
    long start = std::min(max_part, sum);
    if (start % 2 == 0) --start;
    for (long p = start; p >= 1; p -= 2) {
        cur.push_back(p);
        odd_strict_lists(sum - p, p - 2, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> odd_strict_lists(long sum) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    odd_strict_lists(sum, sum, cur, out);
    return out;
}

} // namespace

std::vector<int> FFSpace::basis_states(const Rational& w) {
    std::vector<int> out;
    if (w < 0) return out;
    Rational two_w = w * 2;
    if (!is_integer(two_w)) return out;
    long tw = rat_floor(two_w).convert_to<long>();
    for (long sb = 0; sb <= tw; ++sb) {
        auto bs = odd_strict_lists(sb);
        if (bs.empty()) continue;
        for (long sbt = 0; sbt <= tw - sb; ++sbt) {
            if ((tw - sb - sbt) % 2 != 0) continue;
            auto bts = odd_strict_lists(sbt);
            if (bts.empty()) continue;
            long rest = (tw - sb - sbt) / 2;
            for (long ca = 0; ca <= rest; ++ca) {
                for (const Partition& C : partitions_of(ca))
                    for (const Partition& A : partitions_of(rest - ca)) {
                        if (red_ && !red_->is_basis_partition(A)) continue;
                        for (const auto& B : bs)
                            for (const auto& Bt : bts)
                                out.push_back(state_id(FFMonomial{A, C, B, Bt}));
                    }
            }
        }
    }
    return out;
}

} // namespace sl2wt
