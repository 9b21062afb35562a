#include "cohid/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace cohid {

Rational Rational::normalize(const Integer& p, const Integer& q) {
    if (sgn(q) == 0) throw std::domain_error("zero denominator");
    mpq_class v(p, q);
    v.canonicalize();
    return Rational(std::move(v));
}

static Integer parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return normalize(parse_integer(text, text), 1);
    return normalize(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + str());
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("integer out of range: " + str());
    return n.get_si();
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

Integer Rational::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

ExtendedRational ExtendedRational::parse(std::string_view text) {
    if (text == "inf" || text == "+inf") return infinity();
    return ExtendedRational(Rational::parse(text));
}

const Rational& ExtendedRational::value() const {
    if (infinite_) throw std::logic_error("value of +inf requested");
    return finite_;
}

std::string ExtendedRational::str() const { return infinite_ ? "inf" : finite_.str(); }

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return ExtendedRational::infinity();
    return ExtendedRational(a.finite_ + b.finite_);
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.finite_ == b.finite_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.finite_ <=> b.finite_;
}

ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }
ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

}  // namespace cohid
