#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohid/rational.hpp"

namespace cohid::app {

// Closed-form values stated for the catalogue spaces, used as regression targets.

/// d^0 between (CP^n, f_1) and (CP^m, f_1).
Rational cp_same_map(int n, int m);
/// d^0 between (CP^n, f_0) and (CP^n, f_1).
Rational cp_mixed(int n);
/// d^0 between (CP^n, f_0) and (CP^m, f_0).
Rational cp_trivial_map(int n, int m);
/// d^0 between M_j and (CP^n, f_1).
Rational m_vs_cp(int j, int n);
/// d^1 between M_j and (CP^n, f_1).
Rational m_vs_cp_odd(int j, int n);

struct TetraEdge {
    std::string a, b;
    Rational value;
};
/// The six pairwise distances among pt, CP^1, M_0, M_1.
std::vector<TetraEdge> tetrahedron();

}  // namespace cohid::app
