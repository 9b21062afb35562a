#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cohid/rational.hpp"

namespace cohid {

/// Coefficient field: the rationals (characteristic 0) or F_p for a prime p < 2^31.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// "q" or "fp:<p>".
    static Field parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string str() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field& f, const Rational& value);
    FieldElement(const Field& f, long value);

    static FieldElement zero(const Field& f) { return FieldElement(f, 0L); }
    static FieldElement one(const Field& f) { return FieldElement(f, 1L); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; for F_p this is the residue in [0,p).
    Rational to_rational() const;
    std::uint64_t residue() const { return res_; }
    std::string str() const;

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    void check(const FieldElement& o) const;
    Field field_;
    Rational q_;
    std::uint64_t res_ = 0;
};

}  // namespace cohid
