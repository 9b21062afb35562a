#pragma once

#include <vector>

#include "cohid/persistence_module.hpp"

namespace cohid {

/// Graded K[t]-module H (a persistence module with lo = 0 and zero tail) with a
/// decreasing filtration per degree k: F^0 = H^k, F^p given for 1 <= p <= k, F^{k+1} = 0.
struct FilteredKtModule {
    PersistenceModule module;
    /// filtration[k][p-1] spans F^p H^k.
    std::vector<std::vector<std::vector<Vector>>> filtration;
};

/// Checks lo = 0, zero tail, nesting and t F^p H^k in F^{p+1} H^{k+1}.
void validate(const FilteredKtModule& f);

/// Tot^i = sum over p of F^p H^i / F^{p+1} H^i, with t: E^{p,q} -> E^{p+1,q}.
PersistenceModule totalize(const FilteredKtModule& f);


}  // namespace cohid
