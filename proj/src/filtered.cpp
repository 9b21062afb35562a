#include "cohid/filtered.hpp"

#include <stdexcept>

#include "cohid/linalg.hpp"

namespace cohid {

namespace {

bool contained(const Field& f, std::size_t dim, const std::vector<Vector>& small, const std::vector<Vector>& big) {
    return complement_indices(f, dim, big, small).empty();
}

// Spanning set of F^p H^k, with F^0 = everything and F^{k+1} = 0.
std::vector<Vector> level(const FilteredKtModule& fm, int k, int p) {
    const Field& f = fm.module.field();
    std::size_t dim = fm.module.dim(k);
    if (p <= 0) return Matrix::identity(f, dim).columns();
    if (p > k) return {};
    return fm.filtration[static_cast<std::size_t>(k)][static_cast<std::size_t>(p - 1)];
}

}  // namespace

void validate(const FilteredKtModule& fm) {
    const PersistenceModule& m = fm.module;
    const Field& f = m.field();
    if (m.lo() != 0) throw std::invalid_argument("filtered module must start at index 0");
    if (m.tail() != Tail::zero) throw std::invalid_argument("filtered module must have a zero tail");
    if (static_cast<int>(fm.filtration.size()) != m.hi() + 1)
        throw std::invalid_argument("filtration needs one entry per degree");
    for (int k = 0; k <= m.hi(); ++k) {
        if (static_cast<int>(fm.filtration[static_cast<std::size_t>(k)].size()) != k)
            throw std::invalid_argument("degree " + std::to_string(k) + " needs levels F^1..F^" + std::to_string(k));
        for (int p = 1; p <= k; ++p)
            for (const auto& v : level(fm, k, p))
                if (v.size() != m.dim(k)) throw std::invalid_argument("filtration vector has wrong length");
        for (int p = 0; p <= k; ++p)
            if (!contained(f, m.dim(k), level(fm, k, p + 1), level(fm, k, p)))
                throw std::invalid_argument("filtration is not nested in degree " + std::to_string(k));
        if (k == m.hi()) continue;
        Matrix t = m.map(k);
        for (int p = 0; p <= k; ++p) {
            std::vector<Vector> img;
            for (const auto& v : level(fm, k, p)) img.push_back(t * v);
            if (!contained(f, m.dim(k + 1), img, level(fm, k + 1, p + 1)))
                throw std::invalid_argument("t F^" + std::to_string(p) + " is not contained in F^" +
                                            std::to_string(p + 1) + " in degree " + std::to_string(k));
        }
    }
}

PersistenceModule totalize(const FilteredKtModule& fm) {
    validate(fm);
    const PersistenceModule& m = fm.module;
    const Field& f = m.field();
    int hi = m.hi();
    std::vector<std::vector<Subquotient>> e(static_cast<std::size_t>(hi + 1));
    for (int k = 0; k <= hi; ++k)
        for (int p = 0; p <= k; ++p)
            e[static_cast<std::size_t>(k)].emplace_back(f, m.dim(k), level(fm, k, p), level(fm, k, p + 1));
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(hi + 1));
    for (int k = 0; k <= hi; ++k) {
        std::size_t total = 0;
        for (const auto& s : e[static_cast<std::size_t>(k)]) {
            offset[static_cast<std::size_t>(k)].push_back(total);
            total += s.dim();
        }
        if (total != m.dim(k)) throw std::logic_error("associated graded has the wrong dimension");
        dims.push_back(total);
    }
    std::vector<Matrix> maps;
    for (int k = 0; k < hi; ++k) {
        Matrix tot(f, dims[static_cast<std::size_t>(k + 1)], dims[static_cast<std::size_t>(k)]);
        Matrix t = m.map(k);
        for (int p = 0; p <= k; ++p) {
            const auto& src = e[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
            const auto& dst = e[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(p + 1)];
            tot.set_block(offset[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(p + 1)],
                          offset[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)], src.induced(t, dst));
        }
        maps.push_back(std::move(tot));
    }
    return PersistenceModule(f, 0, hi, std::move(dims), std::move(maps), Tail::zero);
}

}  // namespace cohid
