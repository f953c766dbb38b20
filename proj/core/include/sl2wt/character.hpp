#pragma once

#include "sl2wt/puiseux.hpp"

#include <map>

namespace sl2wt {

/// Character in two variables: a finite window of z-exponents, each carrying
/// a truncated q-series.  z-exponents of any one character lie in a single
/// coset mu + 2Z.
class TwoVarCharacter {
  public:
    TwoVarCharacter() = default;
    TwoVarCharacter(const Rational& z_lo, const Rational& z_hi)
        : z_lo_(z_lo), z_hi_(z_hi) {}

    const Rational& z_lo() const { return z_lo_; }
    const Rational& z_hi() const { return z_hi_; }
    const std::map<Rational, PuiseuxSeries>& z_terms() const { return z_terms_; }

    void set_column(const Rational& z_exp, PuiseuxSeries s);
    PuiseuxSeries column(const Rational& z_exp) const;

    bool in_window(const Rational& z_exp) const { return z_exp >= z_lo_ && z_exp <= z_hi_; }

    TwoVarCharacter operator+(const TwoVarCharacter& o) const;
    TwoVarCharacter operator-(const TwoVarCharacter& o) const;
    /// Full convolution of stored columns.  Result window is the sum of the
    /// windows; callers needing edge-exact columns must restrict afterwards.
    TwoVarCharacter operator*(const TwoVarCharacter& o) const;
    /// Diagonal action of a z-free series.
    TwoVarCharacter operator*(const PuiseuxSeries& s) const;
    TwoVarCharacter operator*(const Rational& f) const;

    /// Multiply by z^e: shifts every column and the window.
    TwoVarCharacter z_shifted(const Rational& e) const;
    /// Substitute z -> z q^{h}: column at z-exponent a picks up q^{a h}.
    TwoVarCharacter q_skewed(const Rational& h) const;
    /// Drop columns outside [lo, hi].
    TwoVarCharacter restricted(const Rational& lo, const Rational& hi) const;
    /// Truncate every column's q-series at an absolute exponent.
    TwoVarCharacter q_truncated(const Rational& cutoff) const;

    bool is_zero() const;
    std::string str() const;

    /// delta(z^2) = sum over even integers in the window of z^{2n} q^0.
    static TwoVarCharacter formal_delta(const Rational& z_lo, const Rational& z_hi);

  private:
    Rational z_lo_, z_hi_;
    std::map<Rational, PuiseuxSeries> z_terms_;
};

} // namespace sl2wt
