#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace upq {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Backed by GMP, so numerator and denominator are unbounded.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "n", "n/d", "-n/d" (optional leading '+'). Throws
    /// std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    /// Always "num/den", including "k/1" for integers.
    std::string to_string() const;
    std::string numerator_string() const;
    std::string denominator_string() const;

    bool is_integer() const;
    int sign() const;
    Rational abs() const;
    Rational floor() const;
    Rational ceil() const;

    /// Integral value as int64. Throws std::overflow_error when the value is
    /// not an integer or does not fit.
    std::int64_t to_int64() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class value);

    mpq_class value_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// gcd of two machine integers, non-negative; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace upq
