#include "sl2wt/character.hpp"

#include <sstream>

namespace sl2wt {

void TwoVarCharacter::set_column(const Rational& z_exp, PuiseuxSeries s) {
    if (!in_window(z_exp))
        throw domain_error("z-exponent outside the character window: " + to_string(z_exp));
    if (s.is_zero() && !s.cutoff())
        z_terms_.erase(z_exp);
    else
        z_terms_[z_exp] = std::move(s);
}

PuiseuxSeries TwoVarCharacter::column(const Rational& z_exp) const {
    auto it = z_terms_.find(z_exp);
    return it == z_terms_.end() ? PuiseuxSeries() : it->second;
}

TwoVarCharacter TwoVarCharacter::operator+(const TwoVarCharacter& o) const {
    TwoVarCharacter r(std::min(z_lo_, o.z_lo_), std::max(z_hi_, o.z_hi_));
    r.z_terms_ = z_terms_;
    for (const auto& [e, s] : o.z_terms_) {
        auto it = r.z_terms_.find(e);
        if (it == r.z_terms_.end())
            r.z_terms_[e] = s;
        else
            it->second = it->second + s;
    }
    return r;
}

TwoVarCharacter TwoVarCharacter::operator-(const TwoVarCharacter& o) const {
    return *this + (o * Rational(-1));
}

TwoVarCharacter TwoVarCharacter::operator*(const TwoVarCharacter& o) const {
    TwoVarCharacter r(z_lo_ + o.z_lo_, z_hi_ + o.z_hi_);
    for (const auto& [e1, s1] : z_terms_) {
        for (const auto& [e2, s2] : o.z_terms_) {
            Rational e = e1 + e2;
            PuiseuxSeries prod = s1 * s2;
            auto it = r.z_terms_.find(e);
            if (it == r.z_terms_.end())
                r.z_terms_[e] = std::move(prod);
            else
                it->second = it->second + prod;
        }
    }
    return r;
}

TwoVarCharacter TwoVarCharacter::operator*(const PuiseuxSeries& s) const {
    TwoVarCharacter r(z_lo_, z_hi_);
    for (const auto& [e, col] : z_terms_) r.z_terms_[e] = col * s;
    return r;
}

TwoVarCharacter TwoVarCharacter::operator*(const Rational& f) const {
    TwoVarCharacter r(z_lo_, z_hi_);
    for (const auto& [e, col] : z_terms_) r.z_terms_[e] = col * f;
    return r;
}

TwoVarCharacter TwoVarCharacter::z_shifted(const Rational& e) const {
    TwoVarCharacter r(z_lo_ + e, z_hi_ + e);
    for (const auto& [x, col] : z_terms_) r.z_terms_[x + e] = col;
    return r;
}

TwoVarCharacter TwoVarCharacter::q_skewed(const Rational& h) const {
    TwoVarCharacter r(z_lo_, z_hi_);
    for (const auto& [x, col] : z_terms_) r.z_terms_[x] = col.shifted(x * h);
    return r;
}

TwoVarCharacter TwoVarCharacter::restricted(const Rational& lo, const Rational& hi) const {
    TwoVarCharacter r(lo, hi);
    for (const auto& [x, col] : z_terms_)
        if (x >= lo && x <= hi) r.z_terms_[x] = col;
    return r;
}

TwoVarCharacter TwoVarCharacter::q_truncated(const Rational& cutoff) const {
    TwoVarCharacter r(z_lo_, z_hi_);
    for (const auto& [x, col] : z_terms_) r.z_terms_[x] = col.truncated(cutoff);
    return r;
}

bool TwoVarCharacter::is_zero() const {
    for (const auto& [x, col] : z_terms_)
        if (!col.is_zero()) return false;
    return true;
}

std::string TwoVarCharacter::str() const {
    std::ostringstream os;
    for (const auto& [x, col] : z_terms_)
        os << "z^(" << to_string(x) << ") * [" << col.str() << "]\n";
    return os.str();
}

TwoVarCharacter TwoVarCharacter::formal_delta(const Rational& z_lo, const Rational& z_hi) {
    TwoVarCharacter r(z_lo, z_hi);
    Integer n = rat_floor(z_lo / 2);
    if (Rational(2 * n) < z_lo) ++n;
    for (; Rational(2 * n) <= z_hi; ++n)
        r.z_terms_[Rational(2 * n)] = PuiseuxSeries(Rational(1));
    return r;
}

} // namespace sl2wt
