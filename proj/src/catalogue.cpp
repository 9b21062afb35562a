#include "cohid/catalogue.hpp"

#include <stdexcept>
#include <vector>

namespace cohid {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& ref) {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad catalogue reference: " + ref);
    return std::stoi(s);
}

}  // namespace

FreeCdga pt_model() { return FreeCdga({}, {}, {}, 2, KuTailSpec{KuTail::zero_above, 0}); }

FreeCdga cp_model(int n, int j) {
    if (n < 1) throw std::invalid_argument("cp model needs n >= 1");
    if (j != 0 && j != 1) throw std::invalid_argument("cp model needs j in {0,1}");
    std::vector<Generator> gens{{j == 1 ? "u" : "x", 2}, {"w", 2 * n + 1}};
    Monomial top{n + 1, 0};
    Polynomial u_action;
    if (j == 1) u_action = monomial_poly(Monomial{1, 0});
    return FreeCdga(gens, {{"w", monomial_poly(top)}}, u_action, 2 * n + 2, KuTailSpec{KuTail::zero_above, 2 * n});
}

FreeCdga m_model(int j) {
    if (j != 0 && j != 1) throw std::invalid_argument("m model needs j in {0,1}");
    std::vector<Generator> gens{{"x", 3}, {"y", 3}, {"z", 7}, {"u", 2}};
    Polynomial dz = monomial_poly(Monomial{0, 0, 0, 4});
    if (j == 1) dz = add(dz, monomial_poly(Monomial{1, 1, 0, 1}));
    return FreeCdga(gens, {{"z", dz}}, monomial_poly(Monomial{0, 0, 0, 1}), 16, KuTailSpec{KuTail::zero_above, 12});
}

FreeCdga x_a_model(const Rational& a) {
    if (a.is_zero()) throw std::invalid_argument("x_a model needs a != 0");
    std::vector<Generator> gens{{"u", 2}, {"x", 2}, {"y", 3}, {"z", 3}};
    Polynomial dy = monomial_poly(Monomial{1, 1, 0, 0});
    Polynomial dz = add(monomial_poly(Monomial{0, 2, 0, 0}), monomial_poly(Monomial{2, 0, 0, 0}, a));
    return FreeCdga(gens, {{"y", dy}, {"z", dz}}, monomial_poly(Monomial{1, 0, 0, 0}), 10,
                    KuTailSpec{KuTail::zero_above, 4});
}

FreeCdga builtin(const std::string& ref) {
    auto parts = split(ref, ':');
    const std::string& name = parts[0];
    if (name == "pt" && parts.size() == 1) return pt_model();
    if (name == "cp" && parts.size() == 3) return cp_model(parse_int(parts[1], ref), parse_int(parts[2], ref));
    if (name == "m" && parts.size() == 2) return m_model(parse_int(parts[1], ref));
    if (name == "x_a" && parts.size() == 2) {
        Rational a;
        try {
            a = Rational::parse(parts[1]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad catalogue reference: " + ref);
        }
        return x_a_model(a);
    }
    throw std::invalid_argument("unknown catalogue reference: " + ref);
}

}  // namespace cohid
