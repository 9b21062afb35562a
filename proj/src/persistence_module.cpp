#include "cohid/persistence_module.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "cohid/linalg.hpp"

namespace cohid {

std::string tail_name(Tail t) { return t == Tail::zero ? "zero" : "iso"; }

Tail parse_tail(const std::string& s) {
    if (s == "zero") return Tail::zero;
    if (s == "iso") return Tail::iso;
    throw std::invalid_argument("unknown tail: " + s);
}

PersistenceModule::PersistenceModule(Field f, int lo, int hi, std::vector<std::size_t> dims,
                                     std::vector<Matrix> maps, Tail tail)
    : field_(f), lo_(lo), hi_(hi), dims_(std::move(dims)), maps_(std::move(maps)), tail_(tail) {
    if (hi < lo) throw std::invalid_argument("persistence module window is empty");
    std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    if (dims_.size() != n) throw std::invalid_argument("persistence module dims do not match window");
    if (maps_.size() != n - 1) throw std::invalid_argument("persistence module needs one map per step");
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Matrix& m = maps_[k];
        if (m.rows() != dims_[k + 1] || m.cols() != dims_[k])
            throw std::invalid_argument("structure map " + std::to_string(lo + static_cast<int>(k)) +
                                        " has wrong shape");
        if (!(m.field() == field_)) throw std::invalid_argument("mixed field tags in persistence module");
    }
    if (tail_ == Tail::iso && n >= 2) {
        const Matrix& last = maps_.back();
        if (last.rows() != last.cols() || rank(last) != last.rows())
            throw std::invalid_argument("inconsistent tail declaration");
    }
}

PersistenceModule PersistenceModule::zero(const Field& f) { return PersistenceModule(f, 0, 0, {0}, {}, Tail::zero); }

std::size_t PersistenceModule::dim(int i) const {
    if (i < lo_) return 0;
    if (i > hi_) return tail_ == Tail::iso ? dims_.back() : 0;
    return dims_[static_cast<std::size_t>(i - lo_)];
}

Matrix PersistenceModule::map(int i) const {
    if (i >= lo_ && i < hi_) return maps_[static_cast<std::size_t>(i - lo_)];
    if (i >= hi_ && tail_ == Tail::iso) return Matrix::identity(field_, dims_.back());
    return Matrix(field_, dim(i + 1), dim(i));
}

Matrix PersistenceModule::composite(int i, int j) const {
    if (i > j) throw std::invalid_argument("composite requires i <= j");
    if (tail_ == Tail::zero && j > hi_) return Matrix(field_, dim(j), dim(i));
    Matrix r = Matrix::identity(field_, dim(i));
    int stop = tail_ == Tail::iso ? std::min(j, std::max(i, hi_)) : j;
    for (int k = i; k < stop; ++k) r = map(k) * r;
    return r;
}

std::size_t rank_invariant(const PersistenceModule& m, int i, int j) {
    if (i > j) throw std::invalid_argument("rank_invariant requires i <= j");
    return rank(m.composite(i, j));
}

Barcode decompose(const PersistenceModule& m) {
    if (m.tail() == Tail::iso && m.hi() > m.lo()) {
        const Matrix& last = m.maps().back();
        if (last.rows() != last.cols() || rank(last) != last.rows())
            throw std::invalid_argument("inconsistent tail declaration");
    }
    int lo = m.lo(), hi = m.hi();
    std::map<std::pair<int, int>, long> cache;
    auto r = [&](int i, int j) -> long {
        if (i < lo || i > j) return 0;
        if (i > hi) return m.tail() == Tail::iso ? static_cast<long>(m.dim(hi)) : 0;
        if (m.tail() == Tail::iso) j = std::min(j, hi);
        if (m.tail() == Tail::zero && j > hi) return 0;
        auto key = std::make_pair(i, j);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        long v = static_cast<long>(rank_invariant(m, i, j));
        cache.emplace(key, v);
        return v;
    };
    Barcode out;
    for (int b = lo; b <= hi; ++b) {
        for (int d = b + 1; d <= hi + 1; ++d) {
            long mult = r(b, d - 1) - r(b - 1, d - 1) - r(b, d) + r(b - 1, d);
            if (mult < 0) throw std::logic_error("negative bar multiplicity");
            for (long k = 0; k < mult; ++k) out.add(Bar(Rational(b), Rational(d)));
        }
        if (m.tail() == Tail::iso) {
            long mult = r(b, hi) - r(b - 1, hi);
            if (mult < 0) throw std::logic_error("negative bar multiplicity");
            for (long k = 0; k < mult; ++k) out.add(Bar(Rational(b), ExtendedRational::infinity()));
        }
    }
    for (int i = lo; i <= hi; ++i) {
        std::size_t cover = 0;
        for (const auto& bar : out.bars())
            if (bar.left <= Rational(i) && ExtendedRational(Rational(i)) < bar.right) ++cover;
        if (cover != m.dim(i)) throw std::invalid_argument("inconsistent tail declaration");
    }
    return out;
}

PersistenceModule realize(const Barcode& b, const Field& f) {
    if (b.empty()) return PersistenceModule::zero(f);
    bool inf = b.has_infinite();
    std::optional<long> lo, max_end, max_inf;
    for (const auto& bar : b.bars()) {
        if (!bar.left.is_integer() || (bar.right.is_finite() && !bar.right.value().is_integer()))
            throw std::invalid_argument("realize requires integer endpoints: " + bar.str());
        long l = bar.left.to_long();
        lo = lo ? std::min(*lo, l) : l;
        if (bar.is_infinite()) {
            max_inf = max_inf ? std::max(*max_inf, l) : l;
        } else {
            long e = bar.right.value().to_long();
            max_end = max_end ? std::max(*max_end, e) : e;
        }
    }
    long hi = inf ? std::max(max_end ? *max_end + 1 : *lo, *max_inf + 1) : *max_end - 1;
    const auto& bars = b.bars();
    auto covers = [&](const Bar& bar, long i) {
        return bar.left <= Rational(i) && ExtendedRational(Rational(i)) < bar.right;
    };
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> index;
    for (long i = *lo; i <= hi; ++i) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < bars.size(); ++k)
            if (covers(bars[k], i)) idx.push_back(k);
        dims.push_back(idx.size());
        index.push_back(std::move(idx));
    }
    std::vector<Matrix> maps;
    for (std::size_t s = 0; s + 1 < dims.size(); ++s) {
        Matrix m(f, dims[s + 1], dims[s]);
        for (std::size_t c = 0; c < index[s].size(); ++c) {
            auto it = std::find(index[s + 1].begin(), index[s + 1].end(), index[s][c]);
            if (it != index[s + 1].end()) m(static_cast<std::size_t>(it - index[s + 1].begin()), c) = FieldElement::one(f);
        }
        maps.push_back(std::move(m));
    }
    return PersistenceModule(f, static_cast<int>(*lo), static_cast<int>(hi), std::move(dims), std::move(maps),
                             inf ? Tail::iso : Tail::zero);
}

PersistenceModule shift(const PersistenceModule& m, int eps) {
    if (eps < 0) throw std::invalid_argument("shift requires eps >= 0");
    return PersistenceModule(m.field(), m.lo() - eps, m.hi() - eps, m.dims(), m.maps(), m.tail());
}

PersistenceModule widen(const PersistenceModule& m, int lo, int hi) {
    if (lo > m.lo() || hi < m.hi()) throw std::invalid_argument("widen can only enlarge the window");
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
    for (int i = lo; i <= hi; ++i) {
        dims.push_back(m.dim(i));
        if (i < hi) maps.push_back(m.map(i));
    }
    return PersistenceModule(m.field(), lo, hi, std::move(dims), std::move(maps), m.tail());
}

Matrix NatTransformation::at(const PersistenceModule& source, const PersistenceModule& target, int i) const {
    if (i < source.lo()) return Matrix(source.field(), target.dim(i + eps), 0);
    if (i <= source.hi()) return components[static_cast<std::size_t>(i - source.lo())];
    if (source.tail() == Tail::zero) return Matrix(source.field(), target.dim(i + eps), 0);
    return target.composite(source.hi() + eps, i + eps) * components.back();
}

namespace {

void check_shapes(const PersistenceModule& s, const PersistenceModule& t, const NatTransformation& f, int eps) {
    if (f.eps != eps) throw std::invalid_argument("shape mismatch: transformation shift differs from eps");
    std::size_t n = static_cast<std::size_t>(s.hi() - s.lo() + 1);
    if (f.components.size() != n) throw std::invalid_argument("shape mismatch: component count");
    for (int i = s.lo(); i <= s.hi(); ++i) {
        const Matrix& c = f.components[static_cast<std::size_t>(i - s.lo())];
        if (c.rows() != t.dim(i + eps) || c.cols() != s.dim(i))
            throw std::invalid_argument("shape mismatch at index " + std::to_string(i));
    }
}

}  // namespace

bool verify_interleaving(const PersistenceModule& m, const PersistenceModule& n, const NatTransformation& phi,
                         const NatTransformation& psi, int eps) {
    if (eps < 0) throw std::invalid_argument("negative epsilon");
    check_shapes(m, n, phi, eps);
    check_shapes(n, m, psi, eps);
    int from = std::min(m.lo(), n.lo()) - 2 * eps - 1;
    int to = std::max(m.hi(), n.hi()) + 2 * eps + 1;
    for (int i = from; i <= to; ++i) {
        Matrix p = phi.at(m, n, i), p1 = phi.at(m, n, i + 1);
        Matrix q = psi.at(n, m, i), q1 = psi.at(n, m, i + 1);
        if (!(n.map(i + eps) * p == p1 * m.map(i))) return false;
        if (!(m.map(i + eps) * q == q1 * n.map(i))) return false;
        if (!(psi.at(n, m, i + eps) * p == m.composite(i, i + 2 * eps))) return false;
        if (!(phi.at(m, n, i + eps) * q == n.composite(i, i + 2 * eps))) return false;
    }
    return true;
}

}  // namespace cohid
