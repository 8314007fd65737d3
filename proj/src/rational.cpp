#include "minkcx/rational.hpp"

#include "minkcx/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace minkcx {

Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw ParseError("not an integer: \"" + text + "\"");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("not a fraction: \"" + text + "\"");
    const Integer d(den);
    if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
    return Rational(Integer(num), d);
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    std::ostringstream out;
    if (denominator(value) == 1)
        out << numerator(value);
    else
        out << numerator(value) << "/" << denominator(value);
    return out.str();
}

std::string to_string(const RatVector& vec) {
    std::string out = "(";
    for (std::size_t i = 0; i < vec.size(); ++i) {
        if (i) out += ", ";
        out += to_string(vec[i]);
    }
    out += ")";
    return out;
}

bool is_integral(const Rational& value) { return denominator(value) == 1; }

Integer floor_int(const Rational& value) {
    Integer q = numerator(value) / denominator(value);
    if (numerator(value) < 0 && q * denominator(value) != numerator(value)) --q;
    return q;
}

Integer ceil_int(const Rational& value) { return -floor_int(-value); }

RatVector zero_vector(int dim) { return RatVector(static_cast<std::size_t>(dim)); }

RatVector vec_add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVector vec_sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVector vec_scale(const Rational& c, const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

Rational vec_dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_dot: dimension mismatch");
    Rational out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

bool vec_is_zero(const RatVector& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

int vec_compare(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_compare: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

RatVector primitive_direction(const RatVector& v) {
    if (vec_is_zero(v)) throw std::invalid_argument("primitive_direction: zero vector");
    Integer lcm_den = 1;
    for (const auto& c : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    int lead_sign = 0;
    for (const auto& c : ints)
        if (c != 0) { lead_sign = c > 0 ? 1 : -1; break; }
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] * lead_sign, g);
    return out;
}

}  // namespace minkcx
