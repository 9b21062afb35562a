#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohid/rational.hpp"

namespace cohid {

/// Half-open interval [left, right); right may be +inf.
struct Bar {
    Rational left;
    ExtendedRational right;

    Bar() = default;
    /// Throws std::invalid_argument unless left < right.
    Bar(Rational l, ExtendedRational r);

    bool is_infinite() const { return right.is_infinite(); }
    /// right - left; +inf for infinite bars.
    ExtendedRational length() const;
    std::string str() const;

    friend bool operator==(const Bar&, const Bar&) = default;
};

bool operator<(const Bar& a, const Bar& b);

/// Finite multiset of bars.
class Barcode {
public:
    Barcode() = default;
    Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {}
    Barcode(std::initializer_list<Bar> bars) : bars_(bars) {}

    const std::vector<Bar>& bars() const { return bars_; }
    std::size_t size() const { return bars_.size(); }
    bool empty() const { return bars_.empty(); }
    void add(const Bar& b) { bars_.push_back(b); }

    Barcode sorted() const;
    bool has_infinite() const;
    std::vector<Bar> finite_bars() const;
    std::vector<Bar> infinite_bars() const;

    /// "[0,4) [3,7)" in sorted order, "(empty)" for no bars.
    std::string str() const;

    /// Multiset equality.
    friend bool operator==(const Barcode& a, const Barcode& b);

private:
    std::vector<Bar> bars_;
};

/// Interleaving distance of interval modules; nullopt encodes the empty interval.
ExtendedRational interval_distance(const std::optional<Bar>& j1, const std::optional<Bar>& j2);

ExtendedRational bottleneck_distance(const Barcode& s, const Barcode& t);

/// Enumerates every padded bijection; requires |S| + |T| <= 8.
ExtendedRational bottleneck_bruteforce(const Barcode& s, const Barcode& t);

/// Throws std::invalid_argument for negative eps.
bool is_interleaved(const Barcode& s, const Barcode& t, const Rational& eps);

}  // namespace cohid
