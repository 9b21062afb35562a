#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cohid {

using Integer = mpz_class;

/// Exact rational number in canonical form (reduced, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(long p, long q) : Rational(normalize(p, q)) {}

    /// Reduces p/q; throws std::domain_error("zero denominator") when q == 0.
    static Rational normalize(const Integer& p, const Integer& q);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Value as a long; throws if not an integer or out of range.
    long to_long() const;
    /// Largest integer not exceeding the value.
    Integer floor() const;
    Integer ceil() const;

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational or +inf. Distances take values here.
class ExtendedRational {
public:
    ExtendedRational() = default;
    ExtendedRational(Rational r) : finite_(std::move(r)) {}
    ExtendedRational(long v) : finite_(v) {}
    ExtendedRational(int v) : finite_(v) {}

    static ExtendedRational infinity() {
        ExtendedRational e;
        e.infinite_ = true;
        return e;
    }
    /// Accepts the Rational syntax plus "inf".
    static ExtendedRational parse(std::string_view text);

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    /// Finite value; throws std::logic_error on +inf.
    const Rational& value() const;

    std::string str() const;

    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
    bool infinite_ = false;
    Rational finite_;
};

ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

}  // namespace cohid
