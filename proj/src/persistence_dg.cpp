#include "cohid/persistence_dg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohid {

PersistenceDgModule::PersistenceDgModule(Field f, int ilo, int ihi, int nlo, int nhi,
                                         std::vector<std::vector<std::size_t>> dims,
                                         std::vector<std::vector<Matrix>> d, std::vector<std::vector<Matrix>> t,
                                         Tail tail)
    : field_(f), ilo_(ilo), ihi_(ihi), nlo_(nlo), nhi_(nhi), dims_(std::move(dims)), d_(std::move(d)),
      t_(std::move(t)), tail_(tail) {
    if (ihi < ilo || nhi < nlo) throw std::invalid_argument("dbg module window is empty");
    std::size_t ni = static_cast<std::size_t>(ihi - ilo + 1), nn = static_cast<std::size_t>(nhi - nlo + 1);
    if (dims_.size() != ni || d_.size() != ni || t_.size() != ni - 1)
        throw std::invalid_argument("dbg module block counts do not match window");
    for (std::size_t a = 0; a < ni; ++a) {
        if (dims_[a].size() != nn || d_[a].size() != nn - 1)
            throw std::invalid_argument("dbg module column counts do not match window");
        for (std::size_t b = 0; b + 1 < nn; ++b)
            if (d_[a][b].rows() != dims_[a][b + 1] || d_[a][b].cols() != dims_[a][b])
                throw std::invalid_argument("differential has wrong shape at (" + std::to_string(ilo + int(a)) +
                                            "," + std::to_string(nlo + int(b)) + ")");
        if (a + 1 < ni) {
            if (t_[a].size() != nn) throw std::invalid_argument("dbg module t-block count mismatch");
            for (std::size_t b = 0; b < nn; ++b)
                if (t_[a][b].rows() != dims_[a + 1][b] || t_[a][b].cols() != dims_[a][b])
                    throw std::invalid_argument("t has wrong shape at (" + std::to_string(ilo + int(a)) + "," +
                                                std::to_string(nlo + int(b)) + ")");
        }
    }
    for (int i = ilo; i <= ihi; ++i)
        for (int n = nlo; n <= nhi; ++n) {
            if (!(this->d(i, n + 1) * this->d(i, n)).is_zero())
                throw std::invalid_argument("d∘d ≠ 0 at (" + std::to_string(i) + "," + std::to_string(n) + ")");
            if (i < ihi && !(this->t(i, n + 1) * this->d(i, n) == this->d(i + 1, n) * this->t(i, n)))
                throw std::invalid_argument("t∘d ≠ d∘t at (" + std::to_string(i) + "," + std::to_string(n) + ")");
        }
    if (tail_ == Tail::iso && ihi > ilo)
        for (int n = nlo; n <= nhi; ++n) {
            Matrix last = this->t(ihi - 1, n);
            if (last.rows() != last.cols() || rank(last) != last.rows())
                throw std::invalid_argument("inconsistent tail declaration");
        }
}

PersistenceDgModule PersistenceDgModule::from_modules(const std::map<int, PersistenceModule>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_modules needs at least one row");
    const Field f = rows.begin()->second.field();
    int ilo = rows.begin()->second.lo(), ihi = rows.begin()->second.hi();
    bool any_iso = false;
    for (const auto& [n, m] : rows) {
        ilo = std::min(ilo, m.lo());
        ihi = std::max(ihi, m.hi());
        any_iso = any_iso || m.tail() == Tail::iso;
    }
    if (any_iso) ihi += 2;
    int nlo = rows.begin()->first, nhi = rows.rbegin()->first;
    auto row_dim = [&](int i, int n) -> std::size_t {
        auto it = rows.find(n);
        return it == rows.end() ? 0 : it->second.dim(i);
    };
    std::vector<std::vector<std::size_t>> dims;
    std::vector<std::vector<Matrix>> d, t;
    for (int i = ilo; i <= ihi; ++i) {
        std::vector<std::size_t> col;
        std::vector<Matrix> dc, tc;
        for (int n = nlo; n <= nhi; ++n) {
            col.push_back(row_dim(i, n));
            if (n < nhi) dc.emplace_back(f, row_dim(i, n + 1), row_dim(i, n));
            if (i < ihi) {
                auto it = rows.find(n);
                tc.push_back(it == rows.end() ? Matrix(f, 0, 0) : it->second.map(i));
            }
        }
        dims.push_back(std::move(col));
        d.push_back(std::move(dc));
        if (i < ihi) t.push_back(std::move(tc));
    }
    return PersistenceDgModule(f, ilo, ihi, nlo, nhi, std::move(dims), std::move(d), std::move(t),
                               any_iso ? Tail::iso : Tail::zero);
}

std::size_t PersistenceDgModule::dim(int i, int n) const {
    if (n < nlo_ || n > nhi_ || i < ilo_) return 0;
    if (i > ihi_) return tail_ == Tail::iso ? dims_.back()[static_cast<std::size_t>(n - nlo_)] : 0;
    return dims_[static_cast<std::size_t>(i - ilo_)][static_cast<std::size_t>(n - nlo_)];
}

Matrix PersistenceDgModule::d(int i, int n) const {
    if (n < nlo_ || n >= nhi_ || i < ilo_ || (i > ihi_ && tail_ == Tail::zero))
        return Matrix(field_, dim(i, n + 1), dim(i, n));
    int a = std::min(i, ihi_);
    return d_[static_cast<std::size_t>(a - ilo_)][static_cast<std::size_t>(n - nlo_)];
}

Matrix PersistenceDgModule::t(int i, int n) const {
    if (n < nlo_ || n > nhi_) return Matrix(field_, 0, 0);
    if (i >= ilo_ && i < ihi_) return t_[static_cast<std::size_t>(i - ilo_)][static_cast<std::size_t>(n - nlo_)];
    if (i >= ihi_ && tail_ == Tail::iso) return Matrix::identity(field_, dim(i, n));
    return Matrix(field_, dim(i + 1, n), dim(i, n));
}

Matrix PersistenceDgModule::t_composite(int i, int j, int n) const {
    if (i > j) throw std::invalid_argument("t_composite requires i <= j");
    if (tail_ == Tail::zero && j > ihi_) return Matrix(field_, dim(j, n), dim(i, n));
    Matrix r = Matrix::identity(field_, dim(i, n));
    int stop = tail_ == Tail::iso ? std::min(j, std::max(i, ihi_)) : j;
    for (int k = i; k < stop; ++k) r = t(k, n) * r;
    return r;
}

int stable_index(const PersistenceDgModule& x) { return x.ihi(); }

Subquotient homology_space(const PersistenceDgModule& x, int i, int n) {
    Matrix out = x.d(i, n);
    Matrix in = x.d(i, n - 1);
    return Subquotient(x.field(), x.dim(i, n), kernel_basis(out), in.columns());
}

std::map<int, PersistenceModule> homology(const PersistenceDgModule& x) {
    std::map<int, PersistenceModule> out;
    for (int n = x.nlo(); n <= x.nhi(); ++n) {
        std::vector<Subquotient> h;
        for (int i = x.ilo(); i <= x.ihi(); ++i) h.push_back(homology_space(x, i, n));
        std::vector<std::size_t> dims;
        std::vector<Matrix> maps;
        for (std::size_t a = 0; a < h.size(); ++a) {
            dims.push_back(h[a].dim());
            if (a + 1 < h.size()) maps.push_back(h[a].induced(x.t(x.ilo() + int(a), n), h[a + 1]));
        }
        out.emplace(n, PersistenceModule(x.field(), x.ilo(), x.ihi(), std::move(dims), std::move(maps), x.tail()));
    }
    return out;
}

ExtendedRational d_cohI_persistence(const PersistenceDgModule& x, const PersistenceDgModule& y) {
    auto hx = homology(x);
    auto hy = homology(y);
    ExtendedRational best = Rational(0);
    int lo = std::min(x.nlo(), y.nlo()), hi = std::max(x.nhi(), y.nhi());
    for (int n = lo; n <= hi; ++n) {
        Barcode bx = hx.count(n) ? decompose(hx.at(n)) : Barcode();
        Barcode by = hy.count(n) ? decompose(hy.at(n)) : Barcode();
        best = max(best, bottleneck_distance(bx, by));
    }
    return best;
}

Matrix ChainMap::at(const PersistenceDgModule& s, const PersistenceDgModule& t, int i, int n) const {
    Matrix zero(s.field(), t.dim(i, n), s.dim(i, n));
    if (n < s.nlo() || n > s.nhi() || i < s.ilo()) return zero;
    if (i <= s.ihi()) {
        auto it = components.find({i, n});
        if (it == components.end()) return zero;
        if (it->second.rows() != zero.rows() || it->second.cols() != zero.cols())
            throw std::invalid_argument("chain map component has wrong shape at (" + std::to_string(i) + "," +
                                        std::to_string(n) + ")");
        return it->second;
    }
    if (s.tail() == Tail::zero) return zero;
    return t.t_composite(s.ihi(), i, n) * at(s, t, s.ihi(), n);
}

namespace {

struct Range {
    int ilo, ihi, nlo, nhi;
};

Range combined(const PersistenceDgModule& s, const PersistenceDgModule& t) {
    return {std::min(s.ilo(), t.ilo()) - 1, std::max(s.ihi(), t.ihi()) + 2, std::min(s.nlo(), t.nlo()) - 1,
            std::max(s.nhi(), t.nhi()) + 1};
}

}  // namespace

bool is_chain_map(const PersistenceDgModule& s, const PersistenceDgModule& t, const ChainMap& f) {
    Range r = combined(s, t);
    for (int i = r.ilo; i <= r.ihi; ++i)
        for (int n = r.nlo; n <= r.nhi; ++n) {
            Matrix fin = f.at(s, t, i, n);
            if (!(t.d(i, n) * fin == f.at(s, t, i, n + 1) * s.d(i, n))) return false;
            if (!(t.t(i, n) * fin == f.at(s, t, i + 1, n) * s.t(i, n))) return false;
        }
    return true;
}

Matrix induced_on_homology(const PersistenceDgModule& s, const PersistenceDgModule& t, const ChainMap& f, int i,
                           int n) {
    return homology_space(s, i, n).induced(f.at(s, t, i, n), homology_space(t, i, n));
}

bool is_quasi_isomorphism(const PersistenceDgModule& s, const PersistenceDgModule& t, const ChainMap& f) {
    if (!is_chain_map(s, t, f)) return false;
    Range r = combined(s, t);
    for (int i = r.ilo; i <= r.ihi; ++i)
        for (int n = r.nlo; n <= r.nhi; ++n) {
            Matrix h = induced_on_homology(s, t, f, i, n);
            if (h.rows() != h.cols() || rank(h) != h.rows()) return false;
        }
    return true;
}

}  // namespace cohid
