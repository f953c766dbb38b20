#pragma once

#include "sl2wt/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sl2wt {

/// Truncated formal series sum c_e q^e with rational exponents and exact
/// rational coefficients.  A series optionally carries a cutoff: terms with
/// exponent >= cutoff are unrepresented (unknown).  Series without a cutoff
/// are exact finite sums.
///
/// Exponent denominators are bounded; exceeding the configured bound is a
/// hard error rather than silent precision loss.
class PuiseuxSeries {
  public:
    PuiseuxSeries() = default;
    explicit PuiseuxSeries(const Rational& constant);

    static PuiseuxSeries zero_to(const Rational& cutoff);
    /// Single term c q^e.
    static PuiseuxSeries monomial(const Rational& exponent, const Rational& coeff);

    /// Global bound on exponent denominators (default 120960 = 24*4*7*6*5*3).
    static void set_max_exponent_denominator(const Integer& bound);
    static Integer max_exponent_denominator();

    const std::map<Rational, Rational>& terms() const { return terms_; }
    const std::optional<Rational>& cutoff() const { return cutoff_; }

    bool is_zero() const { return terms_.empty(); }
    /// Leading exponent; for an all-unknown series this is the cutoff.
    Rational leading_exponent() const;
    Rational coefficient(const Rational& exponent) const;

    void set_term(const Rational& exponent, const Rational& coeff);
    PuiseuxSeries truncated(const Rational& cutoff) const;
    /// Multiply by q^e.
    PuiseuxSeries shifted(const Rational& e) const;

    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const Rational& s) const;
    PuiseuxSeries operator-() const;
    bool operator==(const PuiseuxSeries& o) const = default;

    /// Multiplicative inverse, valid when the leading term is a genuine
    /// (represented) term.  Result cutoff matches the input's.
    PuiseuxSeries inverse() const;

    std::string str() const;

  private:
    void check_exponent(const Rational& e) const;

    std::map<Rational, Rational> terms_;
    std::optional<Rational> cutoff_;
};

/// eta(q) = q^{1/24} prod_{n>=1} (1 - q^n), expanded to the given additive
/// order above the leading exponent 1/24.
PuiseuxSeries dedekind_eta(const Rational& q_order);

/// prod_{n>=1} (1-q^n)^{-1} = sum p(n) q^n to the given order.
PuiseuxSeries partition_series(long order);

} // namespace sl2wt
