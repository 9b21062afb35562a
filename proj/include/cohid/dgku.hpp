#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohid/linalg.hpp"
#include "cohid/persistence_dg.hpp"

namespace cohid {

enum class KuTail { zero_above, u_periodic_above };

struct KuTailSpec {
    KuTail kind = KuTail::zero_above;
    int above = 0;
};

/// Cochain complex in degrees [0, D] with a degree-2 operator u commuting with d.
/// zero_above N: cohomology vanishes above N.  u_periodic_above N: u is invertible
/// from degree N on, so the complex repeats with period 2.
class DgKuModule {
public:
    DgKuModule() = default;
    /// d[n]: degree n -> n+1 for n < D.  u[n]: n -> n+2 for n + 2 <= D.
    DgKuModule(Field f, std::vector<std::size_t> dims, std::vector<Matrix> d, std::vector<Matrix> u,
               KuTailSpec tail);

    const Field& field() const { return field_; }
    int top() const { return static_cast<int>(dims_.size()) - 1; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<Matrix>& d() const { return d_; }
    const std::vector<Matrix>& u() const { return u_; }
    const KuTailSpec& tail() const { return tail_; }

    std::size_t dim(int n) const;
    /// d_n, zero outside the stored range.
    Matrix d_at(int n) const;
    Matrix u_at(int n) const;

private:
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_;
    std::vector<Matrix> u_;
    KuTailSpec tail_;
};

/// Periodic extension to top degree E (E >= D); requires a u-periodic tail.
DgKuModule extend_periodic(const DgKuModule& m, int e);

/// H^n for n in [0, top] with the induced u-action.
struct KuCohomology {
    Field field;
    /// zero_above: H vanishes above top.  u_periodic_above: u is an isomorphism H^n -> H^{n+2} for n >= periodic_from.
    KuTail kind = KuTail::zero_above;
    int top = 0;
    int periodic_from = 0;
    std::vector<Subquotient> spaces;
    /// u_action[n]: H^n -> H^{n+2}, for n + 2 <= top.
    std::vector<Matrix> u_action;

    std::size_t dim(int n) const { return n < 0 || n > top ? 0 : spaces[static_cast<std::size_t>(n)].dim(); }
};

KuCohomology cohomology_ku(const DgKuModule& m);

/// i -> H^{2i+k} with t = u.
PersistenceModule split_even_odd(const KuCohomology& h, int k);
Barcode split_barcode(const KuCohomology& h, int k);

/// Max bar length minus one on the k-split; -1 for an empty split.
long cup_k(const KuCohomology& h, int k);

ExtendedRational d_cohI_k(const DgKuModule& m, const DgKuModule& n, int k);
ExtendedRational d_cohI(const DgKuModule& m, const DgKuModule& n);
ExtendedRational d_cohI_k(const KuCohomology& m, const KuCohomology& n, int k);

/// The ground field K in degree 0, and K[u]/(u^2).
DgKuModule ground_module(const Field& f);
DgKuModule ku_mod_u2_module(const Field& f);

/// Closed forms on the k-split barcode; throw for infinite bars.
ExtendedRational distance_to_ground(const DgKuModule& m, int k);
ExtendedRational distance_to_ku_mod_u2(const DgKuModule& m, int k);
ExtendedRational distance_to_ground(const KuCohomology& h, int k);
ExtendedRational distance_to_ku_mod_u2(const KuCohomology& h, int k);

struct CupBounds {
    /// Absent when either cohomology is isomorphic to K.
    std::optional<Rational> lower;
    Rational upper;
};

CupBounds cup_bounds(const DgKuModule& m, const DgKuModule& n, int k);
CupBounds cup_bounds(const KuCohomology& m, const KuCohomology& n, int k);

/// H*(M) isomorphic to K as a graded K[u]-module.
bool is_ground(const KuCohomology& h);

/// Degree shift by l >= 0: the result has M^{n-l} in degree n.
DgKuModule regrade(const DgKuModule& m, int l);

/// K[u] plus classes killed by u in the given degrees; zero differential, u-periodic tail.
DgKuModule loop_shape_module(const std::vector<int>& unit_degrees, const Field& f = Field::rationals());

/// 0 when the k-splits agree, 1/2 otherwise, max over k; throws "not of BV-exact shape".
ExtendedRational loop_shape_distance(const KuCohomology& a, const KuCohomology& b);

/// The dbg module C(M) restricted to rows [row_lo, row_hi], truncated so its homology is exact there.
PersistenceDgModule persistence_dg(const DgKuModule& m, int row_lo, int row_hi);

}  // namespace cohid
