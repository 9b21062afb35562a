#pragma once

#include <random>

#include "cohid/dgku.hpp"
#include "cohid/filtered.hpp"
#include "cohid/persistence_dg.hpp"

namespace cohid {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

/// Entries drawn from [-range, range].
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng, int range = 2);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);

/// Endpoints are multiples of 1/2 in [-2, 6]; bars are infinite with probability 1/4 when allowed.
Barcode random_barcode(Rng& rng, std::size_t max_bars, bool allow_infinite = true);
/// Integer endpoints in [lo, hi], right endpoint at most hi + 1.
Barcode random_integer_barcode(Rng& rng, std::size_t max_bars, int lo, int hi, bool allow_infinite);

/// The same module in a random basis at every index.
PersistenceModule change_basis(const PersistenceModule& m, Rng& rng);
PersistenceDgModule change_basis(const PersistenceDgModule& x, Rng& rng);
DgKuModule change_basis(const DgKuModule& m, Rng& rng);

/// Direct sum of interval pieces and two-row pieces chi_I -> chi_J in a random basis,
/// on a window of at most max_i x max_n bidegrees with every dimension at most max_dim.
PersistenceDgModule random_dg_module(const Field& f, Rng& rng, int max_i = 5, int max_n = 5,
                                     std::size_t max_dim = 4);

/// Zero differential, u acting by nilpotent chains K[u]/(u^c) placed in non-negative degrees.
DgKuModule random_dgku_formal(const Field& f, Rng& rng, int max_chains = 4, int max_degree = 10);

/// Sums of maps of u-chains K[u]/(u^c) -> K[u]/(u^c') with a random shift; finite cohomology.
DgKuModule random_dgku(const Field& f, Rng& rng, int max_pieces = 4, int max_degree = 10);

/// Filtration adapted to an interval basis of the module realizing b: each bar [b_j, d_j)
/// gets a weight w_j <= b_j, and its basis vector at index k lies in F^p iff w_j + k - b_j >= p.
/// The result is then moved to a random basis. Bars must be finite with integer endpoints >= 0.
FilteredKtModule random_filtration(const Barcode& b, Rng& rng, const Field& f = Field::rationals());

}  // namespace cohid
