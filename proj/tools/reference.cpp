#include "reference.hpp"

#include <algorithm>
#include <cstdlib>

namespace cohid::app {

Rational cp_same_map(int n, int m) {
    return std::min(Rational(std::abs(n - m)), std::max(Rational(m + 1, 2), Rational(n + 1, 2)));
}

Rational cp_mixed(int n) { return Rational((n + 1) / 2); }

Rational cp_trivial_map(int n, int m) { return n == m ? Rational(0) : Rational(1, 2); }

Rational m_vs_cp(int j, int n) {
    if (j == 0) {
        if (n <= 5) return Rational(2);
        if (n <= 9) return Rational(3);
        if (n <= 13) return Rational(n - 6);
        return Rational(n + 1, 2);
    }
    if (n <= 2) return Rational(7, 2);
    if (n <= 5) return Rational(6 - n);
    if (n == 6) return Rational(1, 2);
    if (n <= 13) return Rational(n - 6);
    return Rational(n + 1, 2);
}

Rational m_vs_cp_odd(int, int) { return Rational(2); }

std::vector<TetraEdge> tetrahedron() {
    return {{"pt", "cp:1:1", Rational(1)},    {"pt", "m:0", Rational(2)},       {"pt", "m:1", Rational(7, 2)},
            {"cp:1:1", "m:0", Rational(2)}, {"cp:1:1", "m:1", Rational(7, 2)}, {"m:0", "m:1", Rational(3)}};
}

}  // namespace cohid::app
