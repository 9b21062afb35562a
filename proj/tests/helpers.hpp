#pragma once

#include <optional>

#include "cohid/barcode.hpp"
#include "cohid/matrix.hpp"

namespace testing {

inline cohid::Bar bar(long a, long b) { return cohid::Bar(cohid::Rational(a), cohid::ExtendedRational(cohid::Rational(b))); }
inline cohid::Bar ray(long a) { return cohid::Bar(cohid::Rational(a), cohid::ExtendedRational::infinity()); }
inline cohid::ExtendedRational q(long p, long r = 1) { return cohid::ExtendedRational(cohid::Rational(p, r)); }
inline const cohid::ExtendedRational inf = cohid::ExtendedRational::infinity();

inline cohid::Matrix mat(const cohid::Field& f, std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
    cohid::Matrix m(f, rows, cols);
    std::size_t k = 0;
    for (long e : entries) {
        m(k / cols, k % cols) = cohid::FieldElement(f, e);
        ++k;
    }
    return m;
}

}  // namespace testing
