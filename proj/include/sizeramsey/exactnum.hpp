#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sizeramsey {

using BigInt = mpz_class;

/**
 * Exact rational number in canonical form.
 *
 * The denominator is always positive, numerator and denominator are coprime,
 * and zero is stored as 0/1. Every arithmetic result is canonicalized, so
 * structural equality coincides with numeric equality.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}

    /// p/q in lowest terms; throws std::domain_error when q == 0.
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "p" or "p/q" (optional leading sign on p). Throws ParseError.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigInt floor() const;
    BigInt ceil() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Decimal approximation with the given number of significant digits.
    /// For display only; never feeds back into computation.
    std::string approx(int significant_digits = 15) const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binom(long n, long k);

/// s (s-1) ... (s-k+1); one for k = 0, zero when k > s.
BigInt falling_factorial(long s, long k);

/// Canonical p/q; throws std::domain_error when q == 0.
Rational rat_normalize(const BigInt& p, const BigInt& q);

}  // namespace sizeramsey
