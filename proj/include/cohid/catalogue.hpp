#pragma once

#include <string>

#include "cohid/cdga.hpp"

namespace cohid {

/// The ground field over BS^1: no generators, u acts as 0.
FreeCdga pt_model();

/// CP^n with u acting by the degree-2 generator (j = 1) or by zero (j = 0).
FreeCdga cp_model(int n, int j);

/// Wedge(x,y,z,u), |x| = |y| = 3, |z| = 7, dz = j xyu + u^4.
FreeCdga m_model(int j);

/// Wedge(u,x,y,z), |u| = |x| = 2, |y| = |z| = 3, dy = ux, dz = x^2 + a u^2.
FreeCdga x_a_model(const Rational& a);

/// Resolves "pt", "cp:n:j", "m:j", "x_a:a".
FreeCdga builtin(const std::string& ref);

}  // namespace cohid
