#include "sl2wt/rational.hpp"

#include <boost/functional/hash.hpp>

namespace sl2wt {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw domain_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw domain_error("malformed rational literal: " + s);
    }
}

Integer rat_floor(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

std::size_t rat_complexity(const Rational& r) {
    return msb(abs(numerator(r)) + 1) + msb(denominator(r));
}

std::size_t rat_hash(const Rational& r) {
    std::size_t seed = 0;
    boost::hash_combine(seed, std::hash<std::string>{}(numerator(r).str()));
    boost::hash_combine(seed, std::hash<std::string>{}(denominator(r).str()));
    return seed;
}

} // namespace sl2wt
