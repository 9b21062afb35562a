#include "cohid/cdga.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cohid/linalg.hpp"

namespace cohid {

Polynomial monomial_poly(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p[m] = c;
    return p;
}

Polynomial add(const Polynomial& a, const Polynomial& b, const Rational& scale) {
    Polynomial r = a;
    for (const auto& [m, c] : b) {
        Rational v = r[m] + scale * c;
        if (v.is_zero())
            r.erase(m);
        else
            r[m] = v;
    }
    return r;
}

FreeCdga::FreeCdga(std::vector<Generator> gens, const std::map<std::string, Polynomial>& differential,
                   Polynomial u_action, int truncation, std::optional<KuTailSpec> tail)
    : gens_(std::move(gens)), u_action_(std::move(u_action)), truncation_(truncation), tail_(tail) {
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.name.empty()) throw std::invalid_argument("generator with empty name");
        if (g.degree <= 0) throw std::invalid_argument("generator " + g.name + " must have positive degree");
        if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
    }
    dgen_.assign(gens_.size(), Polynomial{});
    for (const auto& [name, p] : differential) dgen_[generator_index(name)] = p;
    validate();
}

void FreeCdga::validate() const {
    auto check_poly = [&](const Polynomial& p, const std::string& what) {
        for (const auto& [m, c] : p) {
            if (m.size() != gens_.size()) throw std::invalid_argument(what + ": monomial has wrong arity");
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] < 0) throw std::invalid_argument(what + ": negative exponent");
                if (gens_[i].degree % 2 == 1 && m[i] > 1)
                    throw std::invalid_argument(what + ": odd generator " + gens_[i].name + " squared");
            }
            if (c.is_zero()) throw std::invalid_argument(what + ": zero coefficient stored");
        }
    };
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        check_poly(dgen_[g], "d(" + gens_[g].name + ")");
        for (const auto& [m, c] : dgen_[g])
            if (degree(m) != gens_[g].degree + 1)
                throw std::invalid_argument("d(" + gens_[g].name + ") is not of degree " +
                                            std::to_string(gens_[g].degree + 1));
    }
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (!differential(dgen_[g]).empty()) throw std::invalid_argument("d∘d ≠ 0 on generator " + gens_[g].name);
    check_poly(u_action_, "u_action");
    for (const auto& [m, c] : u_action_)
        if (degree(m) != 2) throw std::invalid_argument("u_action must have degree 2");
    if (!differential(u_action_).empty()) throw std::invalid_argument("u_action is not a cocycle");
    if (tail_ && (tail_->above < 0 || tail_->above > truncation_ - 2))
        throw std::invalid_argument("model tail degree must satisfy 0 <= N <= D-2");
}

std::size_t FreeCdga::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    throw std::invalid_argument("unknown generator: " + name);
}

Monomial FreeCdga::generator(std::size_t g) const {
    Monomial m = unit();
    m.at(g) = 1;
    return m;
}

int FreeCdga::degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
}

Monomial FreeCdga::parse_monomial(const std::string& text) const {
    Monomial m = unit();
    std::string normalized = text;
    for (auto& ch : normalized)
        if (ch == '*') ch = ' ';
    std::istringstream is(normalized);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        int e = 1;
        auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        if (caret != std::string::npos) {
            std::string ex = tok.substr(caret + 1);
            if (ex.empty() || ex.find_first_not_of("0123456789") != std::string::npos || ex.size() > 6)
                throw std::invalid_argument("bad exponent in monomial: " + tok);
            e = std::stoi(ex);
        }
        std::size_t g = generator_index(name);
        m[g] += e;
    }
    return m;
}

std::string FreeCdga::str(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += gens_[i].name;
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string FreeCdga::str(const Polynomial& p) const {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : p) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + str(m);
    }
    return s;
}

std::pair<int, Monomial> FreeCdga::multiply(const Monomial& a, const Monomial& b) const {
    Monomial r(a.size());
    int swaps = 0;
    std::size_t odd_after = 0;  // odd generators of a at indices > j, counted right to left
    for (std::size_t j = a.size(); j-- > 0;) {
        r[j] = a[j] + b[j];
        bool odd = gens_[j].degree % 2 == 1;
        if (odd && r[j] > 1) return {0, {}};
        if (odd && b[j] == 1) swaps += static_cast<int>(odd_after);
        if (odd && a[j] == 1) ++odd_after;
    }
    return {swaps % 2 == 0 ? 1 : -1, r};
}

Polynomial FreeCdga::multiply(const Polynomial& a, const Polynomial& b) const {
    Polynomial r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto [s, m] = multiply(ma, mb);
            if (s == 0) continue;
            r = add(r, monomial_poly(m, ca * cb * Rational(s)));
        }
    return r;
}

Polynomial FreeCdga::differential(const Monomial& m) const {
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) word.push_back(i);
    Polynomial r;
    int prefix_degree = 0;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        std::size_t g = word[pos];
        if (!dgen_[g].empty()) {
            Monomial prefix = unit(), suffix = unit();
            for (std::size_t k = 0; k < pos; ++k) prefix[word[k]] += 1;
            for (std::size_t k = pos + 1; k < word.size(); ++k) suffix[word[k]] += 1;
            Polynomial term = multiply(multiply(monomial_poly(prefix), dgen_[g]), monomial_poly(suffix));
            r = add(r, term, Rational(prefix_degree % 2 == 0 ? 1 : -1));
        }
        prefix_degree += gens_[g].degree;
    }
    return r;
}

Polynomial FreeCdga::differential(const Polynomial& p) const {
    Polynomial r;
    for (const auto& [m, c] : p) r = add(r, differential(m), c);
    return r;
}

std::vector<std::vector<Monomial>> FreeCdga::basis(int d) const {
    if (d < 0) throw std::invalid_argument("basis degree must be non-negative");
    std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(d + 1));
    Monomial cur = unit();
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int deg) {
        if (g == gens_.size()) {
            out[static_cast<std::size_t>(deg)].push_back(cur);
            return;
        }
        int max_e = gens_[g].degree % 2 == 1 ? 1 : (d - deg) / gens_[g].degree;
        for (int e = 0; e <= max_e && deg + e * gens_[g].degree <= d; ++e) {
            cur[g] = e;
            rec(g + 1, deg + e * gens_[g].degree);
        }
        cur[g] = 0;
    };
    rec(0, 0);
    return out;
}

namespace {

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& b) {
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < b.size(); ++i) idx[b[i]] = i;
    return idx;
}

Matrix poly_matrix(const FreeCdga& a, const std::vector<Monomial>& src, const std::vector<Monomial>& dst,
                   const std::function<Polynomial(const Monomial&)>& op, const Field& f) {
    auto idx = index_of(dst);
    Matrix m(f, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
        for (const auto& [mono, coef] : op(src[c])) {
            auto it = idx.find(mono);
            if (it == idx.end()) throw std::logic_error("image monomial " + a.str(mono) + " outside target basis");
            m(it->second, c) = FieldElement(f, coef);
        }
    return m;
}

}  // namespace

Matrix differential_matrix(const FreeCdga& a, int n, int d, const Field& f) {
    if (n < 0 || n >= d) throw std::invalid_argument("differential_matrix requires 0 <= n < D");
    auto b = a.basis(n + 1);
    for (const auto& m : b[static_cast<std::size_t>(n)])
        if (!a.differential(a.differential(m)).empty())
            throw std::invalid_argument("d∘d ≠ 0 on monomial " + a.str(m));
    return poly_matrix(a, b[static_cast<std::size_t>(n)], b[static_cast<std::size_t>(n + 1)],
                       [&](const Monomial& m) { return a.differential(m); }, f);
}

Matrix u_matrix(const FreeCdga& a, int n, int d, const Field& f) {
    if (n < 0 || n + 2 > d) throw std::invalid_argument("u_matrix requires 0 <= n <= D-2");
    auto b = a.basis(n + 2);
    return poly_matrix(a, b[static_cast<std::size_t>(n)], b[static_cast<std::size_t>(n + 2)],
                       [&](const Monomial& m) { return a.multiply(a.u_action(), monomial_poly(m)); }, f);
}

DgKuModule to_dgku(const FreeCdga& a, std::optional<int> d, const Field& f) {
    int top = d.value_or(a.truncation());
    if (top < 2) throw std::invalid_argument("truncation degree must be at least 2");
    if (!a.differential(a.u_action()).empty()) throw std::invalid_argument("u_action is not a cocycle");
    auto b = a.basis(top);
    std::vector<std::size_t> dims;
    for (const auto& deg : b) dims.push_back(deg.size());
    std::vector<Matrix> dm, um;
    for (int n = 0; n < top; ++n) dm.push_back(differential_matrix(a, n, top, f));
    for (int n = 0; n + 2 <= top; ++n) um.push_back(u_matrix(a, n, top, f));
    KuTailSpec tail = a.tail().value_or(KuTailSpec{KuTail::zero_above, top - 2});
    if (tail.above > top - 2) throw std::invalid_argument("truncation degree too small for the model's tail");
    return DgKuModule(f, std::move(dims), std::move(dm), std::move(um), tail);
}

FilteredKtModule u_exponent_filtration(const FreeCdga& a, int k, std::optional<int> d, const Field& f) {
    const Polynomial& u = a.u_action();
    if (u.size() != 1 || !(u.begin()->second == Rational(1)))
        throw std::invalid_argument("u-exponent filtration needs u_action to be a single generator");
    const Monomial& um = u.begin()->first;
    std::size_t ug = 0;
    while (ug < um.size() && um[ug] == 0) ++ug;
    if (ug == um.size() || um[ug] != 1) throw std::invalid_argument("u-exponent filtration needs u_action to be a single generator");
    DgKuModule m = to_dgku(a, d, f);
    if (m.tail().kind != KuTail::zero_above) throw std::invalid_argument("u-exponent filtration needs a zero tail");
    KuCohomology h = cohomology_ku(m);
    FilteredKtModule fm;
    fm.module = split_even_odd(h, k);
    if (fm.module.lo() != 0) fm.module = widen(fm.module, 0, std::max(0, fm.module.hi()));
    auto basis = a.basis(m.top());
    for (int i = 0; i <= fm.module.hi(); ++i) {
        int n = 2 * i + k;
        std::vector<std::vector<Vector>> levels;
        for (int p = 1; p <= i; ++p) {
            std::vector<Vector> span;
            if (n <= h.top && h.dim(n) > 0) {
                const auto& mons = basis[static_cast<std::size_t>(n)];
                std::vector<std::size_t> deep;
                for (std::size_t c = 0; c < mons.size(); ++c)
                    if (mons[c][ug] >= p) deep.push_back(c);
                Matrix incl(f, mons.size(), deep.size());
                for (std::size_t c = 0; c < deep.size(); ++c) incl(deep[c], c) = FieldElement::one(f);
                for (const auto& v : kernel_basis(m.d_at(n) * incl))
                    span.push_back(h.spaces[static_cast<std::size_t>(n)].coords(incl * v));
            }
            levels.push_back(std::move(span));
        }
        fm.filtration.push_back(std::move(levels));
    }
    validate(fm);
    return fm;
}

}  // namespace cohid
