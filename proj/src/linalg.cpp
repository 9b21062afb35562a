#include "cohid/linalg.hpp"

#include <stdexcept>

namespace cohid {

namespace {

void check_field(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(i, j).field() == m.field())) throw std::invalid_argument("mixed field tags in matrix");
}

// Incremental echelon basis: each stored vector has a leading entry 1 at its pivot,
// and entries at other stored pivots are zero.
class Echelon {
public:
    explicit Echelon(const Field& f) : f_(f) {}

    Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            FieldElement s = c;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!rows_[r][k].is_zero()) v[k] -= s * rows_[r][k];
        }
        return v;
    }

    bool add(const Vector& v) {
        Vector w = reduce(v);
        std::size_t p = 0;
        while (p < w.size() && w[p].is_zero()) ++p;
        if (p == w.size()) return false;
        FieldElement inv = w[p].inverse();
        for (auto& x : w) x *= inv;
        for (auto& row : rows_) {
            if (row[p].is_zero()) continue;
            FieldElement s = row[p];
            for (std::size_t k = 0; k < row.size(); ++k)
                if (!w[k].is_zero()) row[k] -= s * w[k];
        }
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

private:
    Field f_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

RrefResult rref(const Matrix& m) {
    check_field(m);
    Matrix a = m;
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
        FieldElement inv = a(r, c).inverse();
        for (std::size_t k = c; k < a.cols(); ++k) a(r, k) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            FieldElement s = a(i, c);
            for (std::size_t k = c; k < a.cols(); ++k)
                if (!a(r, k).is_zero()) a(i, k) -= s * a(r, k);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(a);
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, m.cols());
        v[free] = FieldElement::one(f);
        for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.reduced(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    RrefResult rr = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    return rr.reduced.block(0, n, n, n);
}

std::vector<Vector> image_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<Vector> out;
    for (auto p : rr.pivots) out.push_back(m.column(p));
    return out;
}

std::vector<std::size_t> complement_indices(const Field& f, std::size_t dim, const std::vector<Vector>& base,
                                            const std::vector<Vector>& candidates) {
    Echelon e(f);
    for (const auto& v : base) {
        if (v.size() != dim) throw std::invalid_argument("vector length mismatch");
        e.add(v);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].size() != dim) throw std::invalid_argument("vector length mismatch");
        if (e.add(candidates[i])) out.push_back(i);
    }
    return out;
}

Coordinates::Coordinates(const Field& f, std::size_t ambient, std::vector<Vector> basis)
    : field_(f), ambient_(ambient), basis_(std::move(basis)) {
    std::size_t k = basis_.size();
    Matrix m = Matrix::from_columns(f, ambient, basis_);
    RrefResult rr = rref(m.transpose());
    if (rr.rank != k) throw std::invalid_argument("coordinate basis is linearly dependent");
    rows_ = rr.pivots;
    Matrix s(f, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s(i, j) = m(rows_[i], j);
    auto inv = inverse(s);
    if (!inv) throw std::logic_error("selected rows are singular");
    left_inverse_ = std::move(*inv);
}

Vector Coordinates::coords(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
    std::size_t k = basis_.size();
    Vector sel;
    sel.reserve(k);
    for (auto r : rows_) sel.push_back(v[r]);
    Vector c = k ? left_inverse_ * sel : Vector{};
    Vector back = zero_vector(field_, ambient_);
    for (std::size_t j = 0; j < k; ++j) {
        if (c[j].is_zero()) continue;
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!basis_[j][i].is_zero()) back[i] += c[j] * basis_[j][i];
    }
    if (!(back == v)) throw std::domain_error("vector outside the span");
    return c;
}

bool Coordinates::contains(const Vector& v) const {
    try {
        coords(v);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

Subquotient::Subquotient(const Field& f, std::size_t ambient, const std::vector<Vector>& z,
                         const std::vector<Vector>& b)
    : field_(f), ambient_(ambient) {
    for (auto i : complement_indices(f, ambient, {}, b)) bound_.push_back(b[i]);
    for (auto i : complement_indices(f, ambient, bound_, z)) reps_.push_back(z[i]);
    std::vector<Vector> all = bound_;
    all.insert(all.end(), reps_.begin(), reps_.end());
    all_ = Coordinates(f, ambient, std::move(all));
    for (const auto& v : b)
        if (!all_.contains(v)) throw std::invalid_argument("subquotient: B is not contained in Z");
}

Vector Subquotient::coords(const Vector& v) const {
    Vector c = all_.coords(v);
    return Vector(c.begin() + static_cast<long>(bound_.size()), c.end());
}

bool Subquotient::in_z(const Vector& v) const { return all_.contains(v); }

Matrix Subquotient::induced(const Matrix& f, const Subquotient& target) const {
    if (f.cols() != ambient_ || f.rows() != target.ambient_) throw std::invalid_argument("induced map shape mismatch");
    std::vector<Vector> cols;
    cols.reserve(reps_.size());
    for (const auto& r : reps_) cols.push_back(target.coords(f * r));
    return Matrix::from_columns(field_, target.dim(), cols);
}

}  // namespace cohid
