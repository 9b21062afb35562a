#include "cohid/field.hpp"

#include <stdexcept>

namespace cohid {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t reduce(const Rational& r, std::uint64_t p) {
    Integer num = r.numerator() % Integer(static_cast<unsigned long>(p));
    if (num < 0) num += static_cast<unsigned long>(p);
    Integer den = r.denominator() % Integer(static_cast<unsigned long>(p));
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic: " + r.str());
    Integer inv;
    Integer pz(static_cast<unsigned long>(p));
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    Integer out = (num * inv) % pz;
    return out.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime(p)) throw std::invalid_argument("not a supported prime: " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.substr(0, 3) == "fp:") {
        std::string digits(text.substr(3));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12)
            throw std::invalid_argument("bad field: " + std::string(text));
        return prime(std::stoull(digits));
    }
    throw std::invalid_argument("bad field: " + std::string(text));
}

std::string Field::str() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

FieldElement::FieldElement(const Field& f, const Rational& value) : field_(f) {
    if (f.is_rational())
        q_ = value;
    else
        res_ = reduce(value, f.characteristic());
}

FieldElement::FieldElement(const Field& f, long value) : field_(f) {
    if (f.is_rational()) {
        q_ = Rational(value);
    } else {
        long p = static_cast<long>(f.characteristic());
        long r = value % p;
        if (r < 0) r += p;
        res_ = static_cast<std::uint64_t>(r);
    }
}

void FieldElement::check(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("mixed field tags: " + field_.str() + " vs " + o.field_.str());
}

bool FieldElement::is_zero() const { return field_.is_rational() ? q_.is_zero() : res_ == 0; }
bool FieldElement::is_one() const { return field_.is_rational() ? q_ == Rational(1) : res_ == 1; }

Rational FieldElement::to_rational() const {
    return field_.is_rational() ? q_ : Rational(static_cast<long>(res_));
}

std::string FieldElement::str() const { return field_.is_rational() ? q_.str() : std::to_string(res_); }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    if (field_.is_rational())
        r.q_ = -q_;
    else if (res_ != 0)
        r.res_ = field_.characteristic() - res_;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    FieldElement r = *this;
    if (field_.is_rational())
        r.q_ = Rational(1) / q_;
    else
        r.res_ = pow_mod(res_, field_.characteristic() - 2, field_.characteristic());
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check(o);
    if (field_.is_rational())
        q_ += o.q_;
    else
        res_ = (res_ + o.res_) % field_.characteristic();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check(o);
    if (field_.is_rational())
        q_ -= o.q_;
    else
        res_ = (res_ + field_.characteristic() - o.res_) % field_.characteristic();
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        res_ = res_ * o.res_ % field_.characteristic();
    return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.res_ == b.res_;
}

}  // namespace cohid
