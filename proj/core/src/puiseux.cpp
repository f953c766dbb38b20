#include "sl2wt/puiseux.hpp"

#include <sstream>

namespace sl2wt {

namespace {
Integer g_max_den = Integer(120960);

std::optional<Rational> min_cutoff(const std::optional<Rational>& a,
                                   const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}
} // namespace

void PuiseuxSeries::set_max_exponent_denominator(const Integer& bound) { g_max_den = bound; }
Integer PuiseuxSeries::max_exponent_denominator() { return g_max_den; }

void PuiseuxSeries::check_exponent(const Rational& e) const {
    if (denominator(e) > g_max_den)
        throw domain_error("q-exponent denominator exceeds configured bound: " + to_string(e));
}

PuiseuxSeries::PuiseuxSeries(const Rational& constant) {
    if (constant != 0) terms_[Rational(0)] = constant;
}

PuiseuxSeries PuiseuxSeries::zero_to(const Rational& cutoff) {
    PuiseuxSeries s;
    s.cutoff_ = cutoff;
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& exponent, const Rational& coeff) {
    PuiseuxSeries s;
    s.check_exponent(exponent);
    if (coeff != 0) s.terms_[exponent] = coeff;
    return s;
}

Rational PuiseuxSeries::leading_exponent() const {
    if (!terms_.empty()) return terms_.begin()->first;
    if (cutoff_) return *cutoff_;
    return Rational(0);
}

Rational PuiseuxSeries::coefficient(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PuiseuxSeries::set_term(const Rational& exponent, const Rational& coeff) {
    check_exponent(exponent);
    if (cutoff_ && exponent >= *cutoff_)
        throw domain_error("setting a term beyond the series cutoff");
    if (coeff == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = coeff;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& cutoff) const {
    PuiseuxSeries s;
    s.cutoff_ = cutoff_ ? std::min(*cutoff_, cutoff) : cutoff;
    for (const auto& [e, c] : terms_) {
        if (e >= *s.cutoff_) break;
        s.terms_[e] = c;
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& e) const {
    PuiseuxSeries s;
    check_exponent(e);
    if (cutoff_) s.cutoff_ = *cutoff_ + e;
    for (const auto& [x, c] : terms_) {
        s.check_exponent(x + e);
        s.terms_[x + e] = c;
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    PuiseuxSeries s;
    s.cutoff_ = min_cutoff(cutoff_, o.cutoff_);
    auto keep = [&s](const Rational& e) { return !s.cutoff_ || e < *s.cutoff_; };
    for (const auto& [e, c] : terms_)
        if (keep(e)) s.terms_[e] = c;
    for (const auto& [e, c] : o.terms_) {
        if (!keep(e)) continue;
        auto& t = s.terms_[e];
        t += c;
        if (t == 0) s.terms_.erase(e);
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries s = *this;
    for (auto& [e, c] : s.terms_) c = -c;
    return s;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator*(const Rational& f) const {
    PuiseuxSeries s;
    s.cutoff_ = cutoff_;
    if (f == 0) return s;
    for (const auto& [e, c] : terms_) s.terms_[e] = c * f;
    return s;
}

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    // Unknown terms of one factor, multiplied by the leading term of the
    // other, first pollute exponents at cutoff_a + lead_b (and vice versa).
    PuiseuxSeries s;
    if (cutoff_) s.cutoff_ = *cutoff_ + o.leading_exponent();
    if (o.cutoff_) s.cutoff_ = min_cutoff(s.cutoff_, *o.cutoff_ + leading_exponent());
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Rational e = e1 + e2;
            if (s.cutoff_ && e >= *s.cutoff_) break;
            s.check_exponent(e);
            auto& t = s.terms_[e];
            t += c1 * c2;
            if (t == 0) s.terms_.erase(e);
        }
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (terms_.empty()) throw domain_error("inverse of zero series");
    Rational lead_e = terms_.begin()->first;
    Rational lead_c = terms_.begin()->second;
    // Normalize to 1 + x with x of positive leading order, invert by
    // recursion on coefficients, then shift back.
    std::optional<Rational> rel_cut;
    if (cutoff_) rel_cut = *cutoff_ - lead_e;
    PuiseuxSeries inv;
    inv.cutoff_ = rel_cut;
    inv.terms_[Rational(0)] = 1;
    if (rel_cut) {
        // coefficient recursion: b_0 = 1, b_m = -sum_{0<e<=m} a_e b_{m-e}
        std::map<Rational, Rational> a; // normalized tail
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            a[it->first - lead_e] = it->second / lead_c;
        // iterate in increasing exponent order over the lattice generated by
        // the tail exponents; a worklist over sums that stay below cutoff
        std::map<Rational, Rational> b;
        b[Rational(0)] = 1;
        // collect candidate exponents: closure of tail exponents under
        // addition below cutoff
        std::vector<Rational> todo;
        std::map<Rational, bool> seen;
        seen[Rational(0)] = true;
        todo.push_back(Rational(0));
        std::vector<Rational> lattice;
        while (!todo.empty()) {
            Rational x = todo.back();
            todo.pop_back();
            lattice.push_back(x);
            for (const auto& [e, c] : a) {
                Rational y = x + e;
                if (y >= *rel_cut || seen.count(y)) continue;
                seen[y] = true;
                todo.push_back(y);
            }
        }
        std::sort(lattice.begin(), lattice.end());
        for (const Rational& m : lattice) {
            if (m == 0) continue;
            Rational acc(0);
            for (const auto& [e, c] : a) {
                if (e > m) break;
                auto it = b.find(m - e);
                if (it != b.end()) acc += c * it->second;
            }
            if (acc != 0) b[m] = -acc;
        }
        inv.terms_ = std::move(b);
        for (auto it = inv.terms_.begin(); it != inv.terms_.end();)
            it = (it->second == 0) ? inv.terms_.erase(it) : std::next(it);
    } else if (terms_.size() > 1) {
        throw domain_error("inverse of a non-monomial exact series requires a cutoff");
    }
    PuiseuxSeries res = inv.shifted(-lead_e) * (Rational(1) / lead_c);
    return res;
}

std::string PuiseuxSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")q^(" << to_string(e) << ")";
    }
    if (terms_.empty()) os << "0";
    if (cutoff_) os << " + O(q^(" << to_string(*cutoff_) << "))";
    return os.str();
}

PuiseuxSeries partition_series(long order) {
    // Euler: 1/prod(1-q^n); p(n) via the pentagonal recurrence.
    std::vector<Integer> p(order + 1);
    p[0] = 1;
    for (long n = 1; n <= order; ++n) {
        Integer acc = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Integer sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[n - g1];
            if (g2 <= n) acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    PuiseuxSeries s = PuiseuxSeries::zero_to(Rational(order + 1));
    for (long n = 0; n <= order; ++n) s.set_term(Rational(n), Rational(p[n]));
    return s;
}

PuiseuxSeries dedekind_eta(const Rational& q_order) {
    if (q_order <= 0) throw domain_error("eta needs a positive truncation order");
    long order = static_cast<long>(rat_floor(q_order)) + 1;
    // prod (1 - q^n) truncated
    PuiseuxSeries prod(Rational(1));
    prod = prod.truncated(Rational(order + 1));
    for (long n = 1; n <= order; ++n) {
        PuiseuxSeries f(Rational(1));
        f.set_term(Rational(n), Rational(-1));
        prod = prod * f.truncated(Rational(order + 1));
    }
    return prod.shifted(rat(1, 24)).truncated(rat(1, 24) + q_order);
}

} // namespace sl2wt
