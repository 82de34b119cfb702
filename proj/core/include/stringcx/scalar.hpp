#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace stringcx {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Arithmetic mode of a gap space. `exact` values are arbitrary-precision
/// rationals and compare with no tolerance; `real` values are doubles and
/// compare up to the owning space's relative tolerance.
enum class ScalarMode { exact, real };

/// A single gap value. Every space uses one mode uniformly; arithmetic on
/// mixed modes throws std::logic_error (it indicates a construction bug,
/// since mixing is rejected when a space is built).
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}

    static Scalar exact(Rational r) { return Scalar(std::move(r)); }
    static Scalar exact(long long n) { return Scalar(Rational(n)); }
    static Scalar exact(long long num, long long den) { return Scalar(Rational(num, den)); }
    static Scalar real(double x) { return Scalar(x); }
    static Scalar zero(ScalarMode m) {
        return m == ScalarMode::exact ? exact(0) : real(0.0);
    }

    ScalarMode mode() const {
        return std::holds_alternative<Rational>(v_) ? ScalarMode::exact : ScalarMode::real;
    }
    bool is_exact() const { return mode() == ScalarMode::exact; }

    /// The rational payload; throws std::logic_error in real mode.
    const Rational& rational() const;

    /// The value as a double (exact values are converted, possibly lossily).
    double as_double() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar abs() const;

    /// Mode-exact comparisons (no tolerance; doubles compare numerically).
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;
    bool operator<=(const Scalar& o) const { return *this < o || *this == o; }
    bool operator>(const Scalar& o) const { return o < *this; }
    bool operator>=(const Scalar& o) const { return o <= *this; }

    /// Canonical text form: "p/q" or integer in exact mode, shortest
    /// round-trip decimal in real mode.
    std::string str() const;

private:
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(double x) : v_(x) {}
    std::variant<Rational, double> v_;
};

/// Equality up to the space tolerance: exact scalars compare exactly, real
/// scalars satisfy |a-b| <= tol * max(1, |a|, |b|).
bool approx_eq(const Scalar& a, const Scalar& b, double tol);

/// a <= b, with real-mode equality forgiven up to tol.
bool leq(const Scalar& a, const Scalar& b, double tol);

/// a < b and not approx_eq(a, b, tol).
bool lt(const Scalar& a, const Scalar& b, double tol);

/// Parses "p/q", plain integers, and decimal strings ("-3.25") into an exact
/// rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Inverse of parse_rational: integer string when the denominator is 1,
/// otherwise "p/q".
std::string format_rational(const Rational& q);

/// Shortest decimal that round-trips the double exactly.
std::string format_double(double x);

}  // namespace stringcx
