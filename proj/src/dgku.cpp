#include "cohid/dgku.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohid {

DgKuModule::DgKuModule(Field f, std::vector<std::size_t> dims, std::vector<Matrix> d, std::vector<Matrix> u,
                       KuTailSpec tail)
    : field_(f), dims_(std::move(dims)), d_(std::move(d)), u_(std::move(u)), tail_(tail) {
    if (dims_.empty()) throw std::invalid_argument("dg K[u]-module needs at least degree 0");
    int top = this->top();
    if (static_cast<int>(d_.size()) != top) throw std::invalid_argument("need one differential per degree below D");
    if (static_cast<int>(u_.size()) != std::max(top - 1, 0))
        throw std::invalid_argument("need one u-map per degree n with n+2 <= D");
    for (int n = 0; n < top; ++n) {
        const Matrix& m = d_[static_cast<std::size_t>(n)];
        if (m.rows() != dim(n + 1) || m.cols() != dim(n) || !(m.field() == f))
            throw std::invalid_argument("d_" + std::to_string(n) + " has wrong shape");
    }
    for (int n = 0; n + 2 <= top; ++n) {
        const Matrix& m = u_[static_cast<std::size_t>(n)];
        if (m.rows() != dim(n + 2) || m.cols() != dim(n) || !(m.field() == f))
            throw std::invalid_argument("u_" + std::to_string(n) + " has wrong shape");
    }
    for (int n = 0; n + 2 <= top; ++n)
        if (!(d_at(n + 1) * d_at(n)).is_zero())
            throw std::invalid_argument("d∘d ≠ 0 in degree " + std::to_string(n));
    for (int n = 0; n + 3 <= top; ++n)
        if (!(d_at(n + 2) * u_at(n) == u_at(n + 1) * d_at(n)))
            throw std::invalid_argument("u∘d ≠ d∘u in degree " + std::to_string(n));
    if (tail_.above < 0 || tail_.above > top - 2)
        throw std::invalid_argument("tail degree N must satisfy 0 <= N <= D-2");
    if (tail_.kind == KuTail::u_periodic_above)
        for (int n = tail_.above; n + 2 <= top; ++n) {
            const Matrix& m = u_[static_cast<std::size_t>(n)];
            if (m.rows() != m.cols() || rank(m) != m.rows())
                throw std::invalid_argument("u_" + std::to_string(n) + " is not invertible in the periodic range");
        }
}

std::size_t DgKuModule::dim(int n) const {
    if (n < 0 || n > top()) return 0;
    return dims_[static_cast<std::size_t>(n)];
}

Matrix DgKuModule::d_at(int n) const {
    if (n >= 0 && n < top()) return d_[static_cast<std::size_t>(n)];
    return Matrix(field_, dim(n + 1), dim(n));
}

Matrix DgKuModule::u_at(int n) const {
    if (n >= 0 && n + 2 <= top()) return u_[static_cast<std::size_t>(n)];
    return Matrix(field_, dim(n + 2), dim(n));
}

DgKuModule extend_periodic(const DgKuModule& m, int e) {
    if (m.tail().kind != KuTail::u_periodic_above) throw std::invalid_argument("extension needs a u-periodic tail");
    int top = m.top();
    if (e <= top) return m;
    auto dims = m.dims();
    auto d = m.d();
    auto u = m.u();
    const Field& f = m.field();
    for (int n = top + 1; n <= e; ++n) {
        dims.push_back(dims[static_cast<std::size_t>(n - 2)]);
        u.push_back(Matrix::identity(f, dims[static_cast<std::size_t>(n - 2)]));
        auto inv = inverse(u[static_cast<std::size_t>(n - 3)]);
        if (!inv) throw std::invalid_argument("u is not invertible in the periodic range");
        d.push_back(u[static_cast<std::size_t>(n - 2)] * d[static_cast<std::size_t>(n - 3)] * *inv);
    }
    try {
        return DgKuModule(f, std::move(dims), std::move(d), std::move(u), m.tail());
    } catch (const std::invalid_argument& ex) {
        throw std::invalid_argument(std::string("inconsistent periodic tail: ") + ex.what());
    }
}

namespace {

KuCohomology compute(const DgKuModule& w, int top, KuTail kind, int periodic_from) {
    KuCohomology h;
    h.field = w.field();
    h.kind = kind;
    h.top = top;
    h.periodic_from = periodic_from;
    for (int n = 0; n <= top; ++n)
        h.spaces.emplace_back(w.field(), w.dim(n), kernel_basis(w.d_at(n)), w.d_at(n - 1).columns());
    for (int n = 0; n + 2 <= top; ++n)
        h.u_action.push_back(h.spaces[static_cast<std::size_t>(n)].induced(
            w.u_at(n), h.spaces[static_cast<std::size_t>(n + 2)]));
    return h;
}

}  // namespace

KuCohomology cohomology_ku(const DgKuModule& m) {
    int top = m.top();
    int n_above = m.tail().above;
    if (m.tail().kind == KuTail::zero_above) {
        for (int n = n_above + 1; n <= top - 1; ++n) {
            Subquotient s(m.field(), m.dim(n), kernel_basis(m.d_at(n)), m.d_at(n - 1).columns());
            if (s.dim() != 0)
                throw std::invalid_argument("cohomology is nonzero in degree " + std::to_string(n) +
                                            " above the declared bound " + std::to_string(n_above));
        }
        return compute(m, n_above, KuTail::zero_above, 0);
    }
    int e = std::max(top, n_above + 6);
    DgKuModule w = extend_periodic(m, e);
    return compute(w, e - 1, KuTail::u_periodic_above, n_above + 1);
}

PersistenceModule split_even_odd(const KuCohomology& h, int k) {
    if (k != 0 && k != 1) throw std::invalid_argument("k must be 0 or 1");
    if (h.top < k) return PersistenceModule::zero(h.field);
    int hi = (h.top - k) / 2;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
    for (int i = 0; i <= hi; ++i) {
        dims.push_back(h.dim(2 * i + k));
        if (i < hi) maps.push_back(h.u_action[static_cast<std::size_t>(2 * i + k)]);
    }
    Tail tail = h.kind == KuTail::zero_above ? Tail::zero : Tail::iso;
    return PersistenceModule(h.field, 0, hi, std::move(dims), std::move(maps), tail);
}

Barcode split_barcode(const KuCohomology& h, int k) { return decompose(split_even_odd(h, k)); }

long cup_k(const KuCohomology& h, int k) {
    Barcode b = split_barcode(h, k);
    if (b.has_infinite()) throw std::domain_error("cup undefined for infinite bars");
    long best = -1;
    for (const auto& bar : b.bars()) best = std::max(best, bar.length().value().to_long() - 1);
    return best;
}

ExtendedRational d_cohI_k(const KuCohomology& m, const KuCohomology& n, int k) {
    return bottleneck_distance(split_barcode(m, k), split_barcode(n, k));
}

ExtendedRational d_cohI_k(const DgKuModule& m, const DgKuModule& n, int k) {
    return d_cohI_k(cohomology_ku(m), cohomology_ku(n), k);
}

ExtendedRational d_cohI(const DgKuModule& m, const DgKuModule& n) {
    KuCohomology a = cohomology_ku(m), b = cohomology_ku(n);
    return max(d_cohI_k(a, b, 0), d_cohI_k(a, b, 1));
}

DgKuModule ground_module(const Field& f) {
    return DgKuModule(f, {1, 0, 0}, {Matrix(f, 0, 1), Matrix(f, 0, 0)}, {Matrix(f, 0, 1)},
                      {KuTail::zero_above, 0});
}

DgKuModule ku_mod_u2_module(const Field& f) {
    std::vector<std::size_t> dims{1, 0, 1, 0, 0};
    std::vector<Matrix> d, u;
    for (int n = 0; n < 4; ++n) d.emplace_back(f, dims[static_cast<std::size_t>(n + 1)], dims[static_cast<std::size_t>(n)]);
    for (int n = 0; n + 2 <= 4; ++n) u.emplace_back(f, dims[static_cast<std::size_t>(n + 2)], dims[static_cast<std::size_t>(n)]);
    u[0] = Matrix::identity(f, 1);
    return DgKuModule(f, dims, d, u, {KuTail::zero_above, 2});
}

bool is_ground(const KuCohomology& h) {
    if (h.kind != KuTail::zero_above) return false;
    if (h.dim(0) != 1) return false;
    for (int n = 1; n <= h.top; ++n)
        if (h.dim(n) != 0) return false;
    return true;
}

namespace {

Barcode finite_split(const KuCohomology& h, int k) {
    Barcode b = split_barcode(h, k);
    if (b.has_infinite()) throw std::domain_error("closed form undefined for infinite bars");
    return b;
}

}  // namespace

ExtendedRational distance_to_ground(const KuCohomology& h, int k) {
    Barcode b = finite_split(h, k);
    long l = cup_k(h, k);
    if (k == 0) {
        if (b == Barcode{Bar(Rational(0), Rational(1))}) return Rational(0);
        if (b.empty()) return Rational(1, 2);
    }
    return Rational(l + 1) / Rational(2);
}

ExtendedRational distance_to_ku_mod_u2(const KuCohomology& h, int k) {
    Barcode b = finite_split(h, k);
    long l = cup_k(h, k);
    if (k == 1) return Rational(l + 1) / Rational(2);
    if (l <= 0) return Rational(1);
    if (l <= 2) {
        std::size_t longest = 0;
        bool starts_at_zero = false;
        for (const auto& bar : b.bars())
            if (bar.length().value() == Rational(l + 1)) {
                ++longest;
                starts_at_zero = bar.left.is_zero();
            }
        if (longest == 1 && starts_at_zero)
            return b.size() == 1 ? Rational(l - 1) : Rational(l) / Rational(2);
    }
    return Rational(l + 1) / Rational(2);
}

ExtendedRational distance_to_ground(const DgKuModule& m, int k) { return distance_to_ground(cohomology_ku(m), k); }

ExtendedRational distance_to_ku_mod_u2(const DgKuModule& m, int k) {
    return distance_to_ku_mod_u2(cohomology_ku(m), k);
}

CupBounds cup_bounds(const KuCohomology& m, const KuCohomology& n, int k) {
    long a = cup_k(m, k), b = cup_k(n, k);
    CupBounds r;
    r.upper = Rational(std::max(a + 1, b + 1)) / Rational(2);
    if (!is_ground(m) && !is_ground(n)) r.lower = Rational(std::labs(a - b)) / Rational(2);
    return r;
}

CupBounds cup_bounds(const DgKuModule& m, const DgKuModule& n, int k) {
    return cup_bounds(cohomology_ku(m), cohomology_ku(n), k);
}

DgKuModule regrade(const DgKuModule& m, int l) {
    if (l < 0) throw std::invalid_argument("regrade requires l >= 0");
    const Field& f = m.field();
    std::vector<std::size_t> dims(static_cast<std::size_t>(l), 0);
    dims.insert(dims.end(), m.dims().begin(), m.dims().end());
    int top = static_cast<int>(dims.size()) - 1;
    auto dim = [&](int n) { return n < 0 || n > top ? std::size_t{0} : dims[static_cast<std::size_t>(n)]; };
    std::vector<Matrix> d, u;
    for (int n = 0; n < top; ++n)
        d.push_back(n >= l ? m.d_at(n - l) : Matrix(f, dim(n + 1), dim(n)));
    for (int n = 0; n + 2 <= top; ++n)
        u.push_back(n >= l ? m.u_at(n - l) : Matrix(f, dim(n + 2), dim(n)));
    KuTailSpec tail = m.tail();
    tail.above += l;
    return DgKuModule(f, std::move(dims), std::move(d), std::move(u), tail);
}

DgKuModule loop_shape_module(const std::vector<int>& unit_degrees, const Field& f) {
    int n_above = 0;
    for (int deg : unit_degrees) {
        if (deg < 0) throw std::invalid_argument("unit class degrees must be non-negative");
        n_above = std::max(n_above, deg + 1);
    }
    int top = n_above + 2;
    std::vector<std::size_t> free_part, units;
    for (int n = 0; n <= top; ++n) {
        free_part.push_back(n % 2 == 0 ? 1 : 0);
        units.push_back(static_cast<std::size_t>(std::count(unit_degrees.begin(), unit_degrees.end(), n)));
    }
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n) dims.push_back(free_part[static_cast<std::size_t>(n)] + units[static_cast<std::size_t>(n)]);
    std::vector<Matrix> d, u;
    for (int n = 0; n < top; ++n) d.emplace_back(f, dims[static_cast<std::size_t>(n + 1)], dims[static_cast<std::size_t>(n)]);
    for (int n = 0; n + 2 <= top; ++n) {
        Matrix m(f, dims[static_cast<std::size_t>(n + 2)], dims[static_cast<std::size_t>(n)]);
        if (n % 2 == 0) m(0, 0) = FieldElement::one(f);
        u.push_back(std::move(m));
    }
    return DgKuModule(f, std::move(dims), std::move(d), std::move(u), {KuTail::u_periodic_above, n_above});
}

namespace {

void check_loop_shape(const Barcode& b, int k) {
    std::size_t infinite = 0;
    for (const auto& bar : b.bars()) {
        if (bar.is_infinite()) {
            if (k != 0 || !bar.left.is_zero()) throw std::invalid_argument("not of BV-exact shape");
            ++infinite;
        } else if (bar.length().value() != Rational(1)) {
            throw std::invalid_argument("not of BV-exact shape");
        }
    }
    if (infinite != (k == 0 ? 1u : 0u)) throw std::invalid_argument("not of BV-exact shape");
}

}  // namespace

ExtendedRational loop_shape_distance(const KuCohomology& a, const KuCohomology& b) {
    Rational best(0);
    for (int k = 0; k <= 1; ++k) {
        Barcode x = split_barcode(a, k), y = split_barcode(b, k);
        check_loop_shape(x, k);
        check_loop_shape(y, k);
        if (!(x == y)) best = Rational(1, 2);
    }
    return best;
}

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

PersistenceDgModule persistence_dg(const DgKuModule& m, int row_lo, int row_hi) {
    if (row_lo > row_hi) throw std::invalid_argument("empty row range");
    bool periodic = m.tail().kind == KuTail::u_periodic_above;
    int n_above = m.tail().above;
    DgKuModule w = periodic ? extend_periodic(m, std::max(m.top(), n_above + (row_hi - row_lo) + 6)) : m;
    int top = w.top();
    // Rows vanish for 2i + row_hi < 0; the top row needs its outgoing differential.
    int i_min = ceil_div(-row_hi, 2);
    int i_max = floor_div(top - 1 - row_hi, 2);
    if (i_max < i_min) throw std::invalid_argument("truncation degree too small for the requested rows");
    if (!periodic && row_lo + 2 * i_max + 2 <= n_above)
        throw std::invalid_argument("truncation degree too small: cohomology above the window is not zero");
    const Field& f = m.field();
    auto space = [&](int i, int n) {
        int deg = 2 * i + n;
        std::size_t amb = w.dim(deg);
        std::vector<Vector> z = n == row_hi ? kernel_basis(w.d_at(deg)) : Matrix::identity(f, amb).columns();
        std::vector<Vector> b = n == row_lo ? w.d_at(deg - 1).columns() : std::vector<Vector>{};
        return Subquotient(f, amb, z, b);
    };
    std::vector<std::vector<std::size_t>> dims;
    std::vector<std::vector<Matrix>> d, t;
    std::vector<std::vector<Subquotient>> sp;
    for (int i = i_min; i <= i_max; ++i) {
        std::vector<Subquotient> col;
        for (int n = row_lo; n <= row_hi; ++n) col.push_back(space(i, n));
        sp.push_back(std::move(col));
    }
    for (int i = i_min; i <= i_max; ++i) {
        auto& col = sp[static_cast<std::size_t>(i - i_min)];
        std::vector<std::size_t> dc;
        std::vector<Matrix> dd, tt;
        for (int n = row_lo; n <= row_hi; ++n) {
            std::size_t a = static_cast<std::size_t>(n - row_lo);
            dc.push_back(col[a].dim());
            if (n < row_hi) dd.push_back(col[a].induced(w.d_at(2 * i + n), col[a + 1]));
            if (i < i_max)
                tt.push_back(col[a].induced(w.u_at(2 * i + n), sp[static_cast<std::size_t>(i + 1 - i_min)][a]));
        }
        dims.push_back(std::move(dc));
        d.push_back(std::move(dd));
        if (i < i_max) t.push_back(std::move(tt));
    }
    return PersistenceDgModule(f, i_min, i_max, row_lo, row_hi, std::move(dims), std::move(d), std::move(t),
                               periodic ? Tail::iso : Tail::zero);
}

}  // namespace cohid
