#include "cohid/random.hpp"

#include <limits>

namespace cohid {

namespace {

constexpr int unbounded = std::numeric_limits<int>::max();

std::vector<Matrix> inverses(const std::vector<Matrix>& ps) {
    std::vector<Matrix> out;
    for (const auto& p : ps) out.push_back(*inverse(p));
    return out;
}

}  // namespace

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng, int range) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = FieldElement(f, static_cast<long>(uniform(rng, -range, range)));
    return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
    while (true) {
        Matrix m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

Barcode random_barcode(Rng& rng, std::size_t max_bars, bool allow_infinite) {
    Barcode b;
    int count = uniform(rng, 0, static_cast<int>(max_bars));
    for (int k = 0; k < count; ++k) {
        int a = uniform(rng, -4, 11);
        Rational left(a, 2);
        if (allow_infinite && uniform(rng, 0, 3) == 0) {
            b.add(Bar(left, ExtendedRational::infinity()));
        } else {
            int e = uniform(rng, a + 1, 12);
            b.add(Bar(left, ExtendedRational(Rational(e, 2))));
        }
    }
    return b;
}

Barcode random_integer_barcode(Rng& rng, std::size_t max_bars, int lo, int hi, bool allow_infinite) {
    Barcode b;
    int count = uniform(rng, 0, static_cast<int>(max_bars));
    for (int k = 0; k < count; ++k) {
        int a = uniform(rng, lo, hi);
        if (allow_infinite && uniform(rng, 0, 3) == 0)
            b.add(Bar(Rational(a), ExtendedRational::infinity()));
        else
            b.add(Bar(Rational(a), ExtendedRational(Rational(uniform(rng, a + 1, hi + 1)))));
    }
    return b;
}

PersistenceModule change_basis(const PersistenceModule& m, Rng& rng) {
    std::vector<Matrix> p;
    for (std::size_t k = 0; k < m.dims().size(); ++k) p.push_back(random_invertible(m.field(), m.dims()[k], rng));
    auto pinv = inverses(p);
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < m.maps().size(); ++k) maps.push_back(p[k + 1] * m.maps()[k] * pinv[k]);
    return PersistenceModule(m.field(), m.lo(), m.hi(), m.dims(), std::move(maps), m.tail());
}

PersistenceDgModule change_basis(const PersistenceDgModule& x, Rng& rng) {
    std::map<std::pair<int, int>, Matrix> p, pinv;
    for (int i = x.ilo(); i <= x.ihi(); ++i)
        for (int n = x.nlo(); n <= x.nhi(); ++n) {
            p.emplace(std::pair{i, n}, random_invertible(x.field(), x.dim(i, n), rng));
            pinv.emplace(std::pair{i, n}, *inverse(p.at({i, n})));
        }
    std::vector<std::vector<std::size_t>> dims;
    std::vector<std::vector<Matrix>> d, t;
    for (int i = x.ilo(); i <= x.ihi(); ++i) {
        std::vector<std::size_t> dc;
        std::vector<Matrix> dd, tt;
        for (int n = x.nlo(); n <= x.nhi(); ++n) {
            dc.push_back(x.dim(i, n));
            if (n < x.nhi()) dd.push_back(p.at({i, n + 1}) * x.d(i, n) * pinv.at({i, n}));
            if (i < x.ihi()) tt.push_back(p.at({i + 1, n}) * x.t(i, n) * pinv.at({i, n}));
        }
        dims.push_back(std::move(dc));
        d.push_back(std::move(dd));
        if (i < x.ihi()) t.push_back(std::move(tt));
    }
    return PersistenceDgModule(x.field(), x.ilo(), x.ihi(), x.nlo(), x.nhi(), std::move(dims), std::move(d),
                               std::move(t), x.tail());
}

DgKuModule change_basis(const DgKuModule& m, Rng& rng) {
    std::vector<Matrix> p;
    for (std::size_t n = 0; n < m.dims().size(); ++n) p.push_back(random_invertible(m.field(), m.dims()[n], rng));
    auto pinv = inverses(p);
    std::vector<Matrix> d, u;
    for (std::size_t n = 0; n < m.d().size(); ++n) d.push_back(p[n + 1] * m.d()[n] * pinv[n]);
    for (std::size_t n = 0; n < m.u().size(); ++n) u.push_back(p[n + 2] * m.u()[n] * pinv[n]);
    return DgKuModule(m.field(), m.dims(), std::move(d), std::move(u), m.tail());
}

PersistenceDgModule random_dg_module(const Field& f, Rng& rng, int max_i, int max_n, std::size_t max_dim) {
    int ilo = uniform(rng, -1, 1), nlo = uniform(rng, -1, 1);
    int ihi = ilo + uniform(rng, 0, max_i - 1), nhi = nlo + uniform(rng, 0, max_n - 1);
    Tail tail = ihi - ilo >= 2 && uniform(rng, 0, 2) == 0 ? Tail::iso : Tail::zero;
    // With an iso tail every piece must be stable from ihi - 1 on.
    int start_max = tail == Tail::iso ? ihi - 1 : ihi;
    int end_max = tail == Tail::iso ? ihi - 1 : ihi + 1;

    struct Comp {
        int n, a, b;  // chi_[a,b) in degree n; b may be unbounded
        bool has(int i) const { return a <= i && i < b; }
    };
    std::vector<Comp> comps;
    std::vector<std::pair<std::size_t, std::size_t>> links;
    auto random_end = [&](int a) {
        if (tail == Tail::iso && (a + 1 > end_max || uniform(rng, 0, 2) == 0)) return unbounded;
        return uniform(rng, a + 1, end_max);
    };
    auto fits = [&](const std::vector<Comp>& extra) {
        for (int i = ilo; i <= ihi; ++i)
            for (int n = nlo; n <= nhi; ++n) {
                std::size_t c = 0;
                for (const auto& x : comps) c += x.n == n && x.has(i);
                for (const auto& x : extra) c += x.n == n && x.has(i);
                if (c > max_dim) return false;
            }
        return true;
    };

    int pieces = uniform(rng, 0, 6);
    for (int k = 0; k < pieces; ++k) {
        int n = uniform(rng, nlo, nhi);
        int a = uniform(rng, ilo, start_max);
        Comp src{n, a, random_end(a)};
        if (n < nhi && uniform(rng, 0, 1) == 0) {
            // chi_[a,b) -> chi_[c,e) is nonzero exactly when c <= a < e <= b.
            int c = uniform(rng, ilo, a);
            int e = src.b == unbounded ? random_end(a) : uniform(rng, a + 1, src.b);
            Comp tgt{n + 1, c, e};
            if (!fits({src, tgt})) continue;
            comps.push_back(src);
            comps.push_back(tgt);
            links.emplace_back(comps.size() - 2, comps.size() - 1);
        } else if (fits({src})) {
            comps.push_back(src);
        }
    }

    auto index = [&](int i, int n) {
        std::map<std::size_t, std::size_t> idx;
        for (std::size_t c = 0; c < comps.size(); ++c)
            if (comps[c].n == n && comps[c].has(i)) idx.emplace(c, idx.size());
        return idx;
    };
    std::vector<std::vector<std::size_t>> dims;
    std::vector<std::vector<Matrix>> d, t;
    for (int i = ilo; i <= ihi; ++i) {
        std::vector<std::size_t> dc;
        std::vector<Matrix> dd, tt;
        for (int n = nlo; n <= nhi; ++n) {
            auto here = index(i, n);
            dc.push_back(here.size());
            if (n < nhi) {
                auto up = index(i, n + 1);
                Matrix m(f, up.size(), here.size());
                for (const auto& [s, g] : links)
                    if (here.count(s) && up.count(g)) m(up.at(g), here.at(s)) = FieldElement::one(f);
                dd.push_back(m);
            }
            if (i < ihi) {
                auto next = index(i + 1, n);
                Matrix m(f, next.size(), here.size());
                for (const auto& [c, r] : here)
                    if (next.count(c)) m(next.at(c), r) = FieldElement::one(f);
                tt.push_back(m);
            }
        }
        dims.push_back(std::move(dc));
        d.push_back(std::move(dd));
        if (i < ihi) t.push_back(std::move(tt));
    }
    PersistenceDgModule x(f, ilo, ihi, nlo, nhi, std::move(dims), std::move(d), std::move(t), tail);
    return change_basis(x, rng);
}

namespace {

// Basis elements of a direct sum of u-chains; u moves along a chain and d links chains.
struct ChainComplex {
    std::vector<int> degree;
    std::vector<std::ptrdiff_t> u_next;  // -1 when u kills the element
    std::vector<std::ptrdiff_t> d_next;

    std::size_t chain(int start, int length) {
        std::size_t first = degree.size();
        for (int k = 0; k < length; ++k) {
            degree.push_back(start + 2 * k);
            u_next.push_back(k + 1 < length ? static_cast<std::ptrdiff_t>(first + k + 1) : -1);
            d_next.push_back(-1);
        }
        return first;
    }

    DgKuModule build(const Field& f) const {
        int top = 0;
        for (int deg : degree) top = std::max(top, deg);
        int d_top = top + 2;
        std::vector<std::vector<std::size_t>> in_degree(static_cast<std::size_t>(d_top + 1));
        std::vector<std::size_t> pos(degree.size());
        for (std::size_t e = 0; e < degree.size(); ++e) {
            auto& bucket = in_degree[static_cast<std::size_t>(degree[e])];
            pos[e] = bucket.size();
            bucket.push_back(e);
        }
        std::vector<std::size_t> dims;
        for (const auto& b : in_degree) dims.push_back(b.size());
        auto assemble = [&](int step, const std::vector<std::ptrdiff_t>& next) {
            std::vector<Matrix> out;
            for (int n = 0; n + step <= d_top; ++n) {
                Matrix m(f, dims[static_cast<std::size_t>(n + step)], dims[static_cast<std::size_t>(n)]);
                for (std::size_t e : in_degree[static_cast<std::size_t>(n)])
                    if (next[e] >= 0) m(pos[static_cast<std::size_t>(next[e])], pos[e]) = FieldElement::one(f);
                out.push_back(m);
            }
            return out;
        };
        return DgKuModule(f, dims, assemble(1, d_next), assemble(2, u_next), KuTailSpec{KuTail::zero_above, d_top - 2});
    }
};

}  // namespace

DgKuModule random_dgku_formal(const Field& f, Rng& rng, int max_chains, int max_degree) {
    ChainComplex cc;
    int chains = uniform(rng, 0, max_chains);
    for (int k = 0; k < chains; ++k) {
        int start = uniform(rng, 0, 2) == 0 ? 0 : uniform(rng, 0, max_degree);
        int length = uniform(rng, 1, std::min(4, (max_degree - start) / 2 + 1));
        cc.chain(start, length);
    }
    return change_basis(cc.build(f), rng);
}

DgKuModule random_dgku(const Field& f, Rng& rng, int max_pieces, int max_degree) {
    ChainComplex cc;
    int pieces = uniform(rng, 0, max_pieces);
    for (int k = 0; k < pieces; ++k) {
        int start = uniform(rng, 0, max_degree - 1);
        int room = (max_degree - start) / 2 + 1;
        int length = uniform(rng, 1, std::min(4, room));
        std::size_t a = cc.chain(start, length);
        if (start + 1 > max_degree || uniform(rng, 0, 2) == 0) continue;
        // x_k -> y_{k+j} with y_0 in degree start + 1 - 2j; it commutes with u only when length_b <= length + j.
        int j = uniform(rng, 0, std::min(2, (start + 1) / 2));
        int start_b = start + 1 - 2 * j;
        int room_b = (max_degree - start_b) / 2 + 1;
        int length_b = uniform(rng, 1, std::min({4 + j, room_b, length + j}));
        std::size_t b = cc.chain(start_b, length_b);
        for (int m = 0; m < length && m + j < length_b; ++m)
            cc.d_next[a + static_cast<std::size_t>(m)] = static_cast<std::ptrdiff_t>(b + static_cast<std::size_t>(m + j));
    }
    return change_basis(cc.build(f), rng);
}

FilteredKtModule random_filtration(const Barcode& b, Rng& rng, const Field& f) {
    struct Piece {
        int birth, death, weight;
    };
    std::vector<Piece> pieces;
    int hi = 0;
    Barcode ordered = b.sorted();
    for (const auto& bar : ordered.bars()) {
        if (bar.is_infinite() || !bar.left.is_integer() || !bar.right.value().is_integer() || bar.left.sign() < 0)
            throw std::invalid_argument("random_filtration needs finite bars with integer endpoints >= 0");
        int birth = static_cast<int>(bar.left.to_long()), death = static_cast<int>(bar.right.value().to_long());
        pieces.push_back({birth, death, uniform(rng, 0, birth)});
        hi = std::max(hi, death - 1);
    }
    auto alive = [&](int k) {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < pieces.size(); ++j)
            if (pieces[j].birth <= k && k < pieces[j].death) out.push_back(j);
        return out;
    };
    std::vector<Matrix> p, pinv;
    std::vector<std::size_t> dims;
    for (int k = 0; k <= hi; ++k) {
        dims.push_back(alive(k).size());
        p.push_back(random_invertible(f, dims.back(), rng));
        pinv.push_back(*inverse(p.back()));
    }
    FilteredKtModule fm;
    std::vector<Matrix> maps;
    for (int k = 0; k <= hi; ++k) {
        auto here = alive(k);
        if (k < hi) {
            auto next = alive(k + 1);
            Matrix m(f, next.size(), here.size());
            for (std::size_t r = 0; r < next.size(); ++r)
                for (std::size_t c = 0; c < here.size(); ++c)
                    if (next[r] == here[c]) m(r, c) = FieldElement::one(f);
            maps.push_back(p[static_cast<std::size_t>(k + 1)] * m * pinv[static_cast<std::size_t>(k)]);
        }
        std::vector<std::vector<Vector>> levels;
        for (int lvl = 1; lvl <= k; ++lvl) {
            std::vector<Vector> span;
            for (std::size_t c = 0; c < here.size(); ++c) {
                const Piece& x = pieces[here[c]];
                if (x.weight + k - x.birth >= lvl) span.push_back(p[static_cast<std::size_t>(k)].column(c));
            }
            levels.push_back(std::move(span));
        }
        fm.filtration.push_back(std::move(levels));
    }
    fm.module = PersistenceModule(f, 0, hi, std::move(dims), std::move(maps), Tail::zero);
    validate(fm);
    return fm;
}

}  // namespace cohid
