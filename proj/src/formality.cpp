#include "cohid/formality.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohid {

namespace {

struct Generator {
    int birth;
    Vector vec;   // F0: cycle in X(birth)^n.  F1: the boundary f in F0(birth)^{n+1} coordinates.
    Vector z;     // F1 only: psi(alpha) in X(birth)^n.
};

// Row data for one cohomological degree n.
struct Row {
    std::vector<Generator> f0;  // generators b in degree n
    std::vector<Generator> f1;  // generators alpha in degree n (boundaries live in degree n+1)
};

std::size_t born_by(const std::vector<Generator>& g, int i) {
    return static_cast<std::size_t>(
        std::count_if(g.begin(), g.end(), [i](const Generator& x) { return x.birth <= i; }));
}

Vector pad(const Vector& v, std::size_t n, const Field& f) {
    Vector r = v;
    r.resize(n, FieldElement::zero(f));
    return r;
}

}  // namespace

FormalityWitness formality_witness(const PersistenceDgModule& x) {
    const Field& fld = x.field();
    int ilo = x.ilo();
    int top = x.ihi() + (x.tail() == Tail::zero ? 2 : 0);
    int qnlo = x.nlo() - 1, qnhi = x.nhi();
    std::map<int, Row> rows;
    for (int n = qnlo; n <= qnhi + 1; ++n) rows[n];

    for (int n = x.nlo(); n <= x.nhi(); ++n) {
        Row& row = rows[n];
        std::vector<Subquotient> h;
        for (int i = ilo; i <= top; ++i) h.push_back(homology_space(x, i, n));
        auto H = [&](int i) -> const Subquotient& { return h[static_cast<std::size_t>(i - ilo)]; };

        // Generators of H as a K[t]-module: complements of t.H(i-1) in H(i).
        for (int i = ilo; i <= top; ++i) {
            std::vector<Vector> base;
            if (i > ilo) base = H(i - 1).induced(x.t(i - 1, n), H(i)).columns();
            std::vector<Vector> units;
            for (std::size_t j = 0; j < H(i).dim(); ++j) units.push_back(unit_vector(fld, H(i).dim(), j));
            for (auto j : complement_indices(fld, H(i).dim(), base, units))
                row.f0.push_back({i, H(i).representatives()[j], {}});
        }

        auto phi = [&](int i) {
            std::vector<Vector> cols;
            for (const auto& g : row.f0)
                if (g.birth <= i) cols.push_back(x.t_composite(g.birth, i, n) * g.vec);
            return Matrix::from_columns(fld, x.dim(i, n), cols);
        };

        // Kernel of p.phi, and its generators as a K[t]-submodule of F0.
        std::vector<Vector> prev_kernel;
        for (int i = ilo; i <= top; ++i) {
            Matrix ph = phi(i);
            std::vector<Vector> pcols;
            for (const auto& c : ph.columns()) pcols.push_back(H(i).coords(c));
            Matrix pphi = Matrix::from_columns(fld, H(i).dim(), pcols);
            std::size_t a0 = born_by(row.f0, i);
            auto ker = kernel_basis(pphi);
            std::vector<Vector> base;
            for (const auto& v : prev_kernel) base.push_back(pad(v, a0, fld));
            for (auto j : complement_indices(fld, a0, base, ker)) {
                Vector target = ph * ker[j];
                auto z = solve(x.d(i, n - 1), target);
                if (!z) throw std::logic_error("formality: kernel element is not a boundary");
                rows[n - 1].f1.push_back({i, ker[j], *z});
            }
            prev_kernel = ker;
        }
    }

    int last_birth = ilo;
    for (const auto& [n, r] : rows) {
        for (const auto& g : r.f0) last_birth = std::max(last_birth, g.birth);
        for (const auto& g : r.f1) last_birth = std::max(last_birth, g.birth);
    }
    int qhi = last_birth + 1;

    FormalityWitness w;
    std::vector<std::vector<std::size_t>> dims;
    std::vector<std::vector<Matrix>> dq, tq;
    for (int i = ilo; i <= qhi; ++i) {
        std::vector<std::size_t> col;
        std::vector<Matrix> dcol, tcol;
        for (int n = qnlo; n <= qnhi; ++n) {
            const Row& r = rows[n];
            std::size_t a0 = born_by(r.f0, i), a1 = born_by(r.f1, i);
            col.push_back(a0 + a1);
            w.f0_dim[{i, n}] = a0;

            // psi and g.
            std::vector<Vector> pcols, gcols;
            Subquotient hs = homology_space(x, i, n);
            for (const auto& g : r.f0) {
                if (g.birth > i) continue;
                Vector v = x.t_composite(g.birth, i, n) * g.vec;
                gcols.push_back(hs.coords(v));
                pcols.push_back(std::move(v));
            }
            for (const auto& g : r.f1) {
                if (g.birth > i) continue;
                pcols.push_back(x.t_composite(g.birth, i, n) * g.z);
                gcols.push_back(zero_vector(fld, hs.dim()));
            }
            w.psi.components[{i, n}] = Matrix::from_columns(fld, x.dim(i, n), pcols);
            w.g.components[{i, n}] = Matrix::from_columns(fld, hs.dim(), gcols);

            if (n < qnhi) {
                const Row& up = rows[n + 1];
                std::size_t b0 = born_by(up.f0, i), b1 = born_by(up.f1, i);
                Matrix dm(fld, b0 + b1, a0 + a1);
                std::size_t c = a0;
                for (const auto& g : r.f1) {
                    if (g.birth > i) continue;
                    for (std::size_t k = 0; k < g.vec.size(); ++k) dm(k, c) = g.vec[k];
                    ++c;
                }
                dcol.push_back(std::move(dm));
            }
            if (i < qhi) {
                std::size_t n0 = born_by(r.f0, i + 1), n1 = born_by(r.f1, i + 1);
                Matrix tm(fld, n0 + n1, a0 + a1);
                for (std::size_t k = 0; k < a0; ++k) tm(k, k) = FieldElement::one(fld);
                for (std::size_t k = 0; k < a1; ++k) tm(n0 + k, a0 + k) = FieldElement::one(fld);
                tcol.push_back(std::move(tm));
            }
        }
        dims.push_back(std::move(col));
        dq.push_back(std::move(dcol));
        if (i < qhi) tq.push_back(std::move(tcol));
    }
    for (const auto& [n, r] : rows) {
        if (n < qnlo || n > qnhi) continue;
        w.f0_generators += r.f0.size();
        w.f1_generators += r.f1.size();
    }
    w.q = PersistenceDgModule(fld, ilo, qhi, qnlo, qnhi, std::move(dims), std::move(dq), std::move(tq), Tail::iso);
    w.hx = PersistenceDgModule::from_modules(homology(x));
    return w;
}

bool verify_witness(const PersistenceDgModule& x, const FormalityWitness& w) {
    for (int i = w.q.ilo(); i <= w.q.ihi(); ++i)
        for (int n = w.q.nlo(); n <= w.q.nhi(); ++n) {
            Matrix d = w.q.d(i, n);
            std::size_t a0 = w.f0_dim.at({i, n});
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t c = 0; c < a0; ++c)
                    if (!d(r, c).is_zero()) return false;
        }
    return is_quasi_isomorphism(w.q, x, w.psi) && is_quasi_isomorphism(w.q, w.hx, w.g);
}

}  // namespace cohid
