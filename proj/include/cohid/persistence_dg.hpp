#pragma once

#include <map>
#include <vector>

#include "cohid/linalg.hpp"
#include "cohid/persistence_module.hpp"

namespace cohid {

/// Differential bigraded K[t]-module on a window [ilo, ihi] x [nlo, nhi].
/// Index i is the persistence direction (map t), n the cohomological degree (map d).
/// Above ihi the tail is zero, or constant with t the identity.
class PersistenceDgModule {
public:
    PersistenceDgModule() = default;
    /// dims[i-ilo][n-nlo]; d[i-ilo][n-nlo] for n < nhi; t[i-ilo][n-nlo] for i < ihi.
    PersistenceDgModule(Field f, int ilo, int ihi, int nlo, int nhi, std::vector<std::vector<std::size_t>> dims,
                        std::vector<std::vector<Matrix>> d, std::vector<std::vector<Matrix>> t, Tail tail);

    /// Zero differential, one persistence module per degree n (all sharing an index window).
    static PersistenceDgModule from_modules(const std::map<int, PersistenceModule>& rows);

    const Field& field() const { return field_; }
    int ilo() const { return ilo_; }
    int ihi() const { return ihi_; }
    int nlo() const { return nlo_; }
    int nhi() const { return nhi_; }
    Tail tail() const { return tail_; }

    std::size_t dim(int i, int n) const;
    /// d: (i,n) -> (i,n+1), any bidegree.
    Matrix d(int i, int n) const;
    /// t: (i,n) -> (i+1,n), any bidegree.
    Matrix t(int i, int n) const;
    /// Composite of t from (i,n) to (j,n).
    Matrix t_composite(int i, int j, int n) const;

private:
    Field field_;
    int ilo_ = 0, ihi_ = 0, nlo_ = 0, nhi_ = 0;
    std::vector<std::vector<std::size_t>> dims_;
    std::vector<std::vector<Matrix>> d_;
    std::vector<std::vector<Matrix>> t_;
    Tail tail_ = Tail::zero;
};

/// Eventual top index beyond which the module is constant or zero.
int stable_index(const PersistenceDgModule& x);

/// H^n(X(i)) as cycles modulo boundaries of the ambient X(i)^n.
Subquotient homology_space(const PersistenceDgModule& x, int i, int n);

/// Per-degree homology modules i -> H^n(X(i)) with t-induced maps.
std::map<int, PersistenceModule> homology(const PersistenceDgModule& x);

/// Sup over degrees of the bottleneck distance between homology barcodes.
ExtendedRational d_cohI_persistence(const PersistenceDgModule& x, const PersistenceDgModule& y);

/// Bidegree-preserving map of dbg modules. Components are given on the source window
/// and extended past it with the source tail (zero, or target t applied to the top component).
struct ChainMap {
    std::map<std::pair<int, int>, Matrix> components;

    Matrix at(const PersistenceDgModule& source, const PersistenceDgModule& target, int i, int n) const;
};

/// Checks d- and t-compatibility over the combined windows.
bool is_chain_map(const PersistenceDgModule& s, const PersistenceDgModule& t, const ChainMap& f);

/// Matrix of the induced map H^n(S(i)) -> H^n(T(i)) in the homology bases used by homology().
Matrix induced_on_homology(const PersistenceDgModule& s, const PersistenceDgModule& t, const ChainMap& f, int i,
                           int n);

/// Chain map whose induced maps are bijective at every bidegree.
bool is_quasi_isomorphism(const PersistenceDgModule& s, const PersistenceDgModule& t, const ChainMap& f);

}  // namespace cohid
