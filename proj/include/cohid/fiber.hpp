#pragma once

#include <vector>

#include "cohid/barcode.hpp"

namespace cohid {

/// Betti numbers of a fiber: dims[l] = dim H^l(F; K), zero past the end.
struct FiberSignature {
    std::vector<std::size_t> dims;

    int bound() const { return static_cast<int>(dims.size()) - 1; }
};

/// The multiset of floor(l/2) over degrees l = k mod 2, with multiplicity dims[l].
std::vector<long> j_multiset(const FiberSignature& f, int k);

/// The bars [j, inf) for j in the J^k multiset.
Barcode collapse_barcode(const FiberSignature& f, int k);

/// +inf on a cardinality mismatch; otherwise the sorted-pairing min-max value.
ExtendedRational e2_collapse_distance(const FiberSignature& a, const FiberSignature& b, int k);

}  // namespace cohid
