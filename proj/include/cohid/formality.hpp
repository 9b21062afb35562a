#pragma once

#include "cohid/persistence_dg.hpp"

namespace cohid {

/// Free resolution Q = F0 + F1 of X with quasi-isomorphisms psi: Q -> X and g: Q -> H(X).
struct FormalityWitness {
    PersistenceDgModule q;
    /// H(X) with zero differential.
    PersistenceDgModule hx;
    ChainMap psi;
    ChainMap g;
    /// Number of free generators in F0 and F1.
    std::size_t f0_generators = 0;
    std::size_t f1_generators = 0;
    /// Size of the F0 part of Q at (i, n); the F0 basis comes first.
    std::map<std::pair<int, int>, std::size_t> f0_dim;
};

FormalityWitness formality_witness(const PersistenceDgModule& x);

/// Both maps are quasi-isomorphisms with D vanishing on F0.
bool verify_witness(const PersistenceDgModule& x, const FormalityWitness& w);

}  // namespace cohid
