#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace brieskorn {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values are immutable: every operation returns a fresh Rational, so
/// instances can be shared freely between threads.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}                     // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : q_(value) {}           // NOLINT(google-explicit-constructor)
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "p/q", "p" or "-p/q". Throws DomainError on malformed text.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    /// Requires is_integer().
    Integer to_integer() const;
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    /// Throws DomainError on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Decimal string of an integer; parse_integer accepts an optional sign.
std::string to_string(const Integer& z);
Integer parse_integer(std::string_view text);

/// Narrowing conversion that throws DomainError if `z` does not fit.
std::int64_t to_int64(const Integer& z);

} // namespace brieskorn
