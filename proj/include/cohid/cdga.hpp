#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohid/dgku.hpp"
#include "cohid/filtered.hpp"

namespace cohid {

struct Generator {
    std::string name;
    int degree = 1;
};

/// Exponents in generator declaration order; odd generators have exponent <= 1.
using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Rational>;

/// Free graded-commutative algebra on named generators with a derivation d.
/// The u-action is multiplication by a degree-2 cocycle.
class FreeCdga {
public:
    FreeCdga() = default;
    /// differential maps generator names to d(g); absent names have d(g) = 0.
    FreeCdga(std::vector<Generator> gens, const std::map<std::string, Polynomial>& differential, Polynomial u_action,
             int truncation, std::optional<KuTailSpec> tail = std::nullopt);

    const std::vector<Generator>& generators() const { return gens_; }
    int truncation() const { return truncation_; }
    const std::optional<KuTailSpec>& tail() const { return tail_; }
    const Polynomial& u_action() const { return u_action_; }
    const Polynomial& generator_differential(std::size_t g) const { return dgen_[g]; }

    std::size_t generator_index(const std::string& name) const;
    Monomial unit() const { return Monomial(gens_.size(), 0); }
    Monomial generator(std::size_t g) const;
    int degree(const Monomial& m) const;

    /// "x y u^2"; "1" is the unit.
    Monomial parse_monomial(const std::string& text) const;
    std::string str(const Monomial& m) const;
    std::string str(const Polynomial& p) const;

    /// Sign and product in canonical order; sign 0 when the product vanishes.
    std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;

    Polynomial differential(const Monomial& m) const;
    Polynomial differential(const Polynomial& p) const;

    /// Monomials of each degree 0..d in a fixed order.
    std::vector<std::vector<Monomial>> basis(int d) const;

private:
    void validate() const;

    std::vector<Generator> gens_;
    std::vector<Polynomial> dgen_;
    Polynomial u_action_;
    int truncation_ = 0;
    std::optional<KuTailSpec> tail_;
};

Polynomial monomial_poly(const Monomial& m, const Rational& c = Rational(1));
Polynomial add(const Polynomial& a, const Polynomial& b, const Rational& scale = Rational(1));

/// Matrix of d: degree n -> n+1 in the canonical bases; checks d∘d = 0 on each source monomial.
Matrix differential_matrix(const FreeCdga& a, int n, int d, const Field& f = Field::rationals());

/// Left multiplication by the u-action: degree n -> n+2.
Matrix u_matrix(const FreeCdga& a, int n, int d, const Field& f = Field::rationals());

/// Cochains up to degree d with u-action; tail from the model, else zero above d-2.
DgKuModule to_dgku(const FreeCdga& a, std::optional<int> d = std::nullopt, const Field& f = Field::rationals());

/// The k-split of H(A) filtered by u-exponent: F^p H^n is spanned by classes with a cocycle
/// representative in the span of monomials divisible by u^p. Needs u_action to be a single
/// generator and a zero tail.
FilteredKtModule u_exponent_filtration(const FreeCdga& a, int k, std::optional<int> d = std::nullopt,
                                       const Field& f = Field::rationals());

}  // namespace cohid
