#include "cohid/fiber.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cohid {

std::vector<long> j_multiset(const FiberSignature& f, int k) {
    if (k != 0 && k != 1) throw std::invalid_argument("k must be 0 or 1");
    std::vector<long> out;
    for (std::size_t l = static_cast<std::size_t>(k); l < f.dims.size(); l += 2)
        for (std::size_t c = 0; c < f.dims[l]; ++c) out.push_back(static_cast<long>(l / 2));
    return out;
}

Barcode collapse_barcode(const FiberSignature& f, int k) {
    Barcode b;
    for (long j : j_multiset(f, k)) b.add(Bar(Rational(j), ExtendedRational::infinity()));
    return b;
}

ExtendedRational e2_collapse_distance(const FiberSignature& a, const FiberSignature& b, int k) {
    auto x = j_multiset(a, k);
    auto y = j_multiset(b, k);
    if (x.size() != y.size()) return ExtendedRational::infinity();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    long best = 0;
    for (std::size_t i = 0; i < x.size(); ++i) best = std::max(best, std::labs(x[i] - y[i]));
    return Rational(best);
}

}  // namespace cohid
