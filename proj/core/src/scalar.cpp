#include "stringcx/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace stringcx {

namespace {

[[noreturn]] void throw_mixed_modes() {
    throw std::logic_error("arithmetic on scalars of different modes");
}

}  // namespace

const Rational& Scalar::rational() const {
    if (!is_exact()) throw std::logic_error("rational() called on a real-mode scalar");
    return std::get<Rational>(v_);
}

double Scalar::as_double() const {
    if (is_exact()) return static_cast<double>(std::get<Rational>(v_));
    return std::get<double>(v_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (mode() != o.mode()) throw_mixed_modes();
    if (is_exact()) return Scalar(std::get<Rational>(v_) + std::get<Rational>(o.v_));
    return Scalar(std::get<double>(v_) + std::get<double>(o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (mode() != o.mode()) throw_mixed_modes();
    if (is_exact()) return Scalar(std::get<Rational>(v_) - std::get<Rational>(o.v_));
    return Scalar(std::get<double>(v_) - std::get<double>(o.v_));
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rational(-std::get<Rational>(v_)));
    return Scalar(-std::get<double>(v_));
}

Scalar Scalar::abs() const {
    if (is_exact()) {
        const Rational& r = std::get<Rational>(v_);
        return Scalar(r < 0 ? Rational(-r) : r);
    }
    return Scalar(std::fabs(std::get<double>(v_)));
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode() != o.mode()) throw_mixed_modes();
    if (is_exact()) return std::get<Rational>(v_) == std::get<Rational>(o.v_);
    return std::get<double>(v_) == std::get<double>(o.v_);
}

bool Scalar::operator<(const Scalar& o) const {
    if (mode() != o.mode()) throw_mixed_modes();
    if (is_exact()) return std::get<Rational>(v_) < std::get<Rational>(o.v_);
    return std::get<double>(v_) < std::get<double>(o.v_);
}

std::string Scalar::str() const {
    if (is_exact()) return format_rational(std::get<Rational>(v_));
    return format_double(std::get<double>(v_));
}

bool approx_eq(const Scalar& a, const Scalar& b, double tol) {
    if (a.mode() != b.mode()) throw std::logic_error("comparing scalars of different modes");
    if (a.is_exact()) return a == b;
    const double x = a.as_double();
    const double y = b.as_double();
    const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) <= tol * scale;
}

bool leq(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact()) return a <= b;
    return a.as_double() <= b.as_double() || approx_eq(a, b, tol);
}

bool lt(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact()) return a < b;
    return a.as_double() < b.as_double() && !approx_eq(a, b, tol);
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos)
            throw std::invalid_argument("malformed rational literal: " + text);
        try {
            BigInt p(num), q(den);
            if (q == 0) throw std::invalid_argument("zero denominator: " + text);
            return Rational(p, q);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed rational literal: " + text);
        }
    }

    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    std::string digits;
    long long frac_digits = 0;
    long long exponent = 0;
    bool seen_dot = false;
    bool seen_digit = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal literal: " + text);
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            const std::string tail = s.substr(pos + 1);
            if (tail.empty()) throw std::invalid_argument("malformed scalar literal: " + text);
            std::size_t used = 0;
            exponent = std::stoll(tail, &used);
            if (used != tail.size())
                throw std::invalid_argument("malformed scalar literal: " + text);
            break;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("malformed scalar literal: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed scalar literal: " + text);
    BigInt p(digits.empty() ? "0" : digits);
    if (negative) p = -p;
    BigInt q = 1;
    for (long long i = 0; i < frac_digits - exponent; ++i) q *= 10;
    for (long long i = 0; i < exponent - frac_digits; ++i) p *= 10;
    return Rational(p, q);
}

std::string format_rational(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace stringcx
