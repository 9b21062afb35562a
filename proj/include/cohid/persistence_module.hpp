#pragma once

#include <string>
#include <vector>

#include "cohid/barcode.hpp"
#include "cohid/matrix.hpp"

namespace cohid {

enum class Tail { zero, iso };

std::string tail_name(Tail t);
Tail parse_tail(const std::string& s);

/// Functor (Z,<=) -> Vect on a finite window [lo, hi]; zero below lo, and
/// above hi either zero or constant with identity maps.
class PersistenceModule {
public:
    PersistenceModule() = default;
    /// maps[k] is the map lo+k -> lo+k+1, shape dims[k+1] x dims[k].
    PersistenceModule(Field f, int lo, int hi, std::vector<std::size_t> dims, std::vector<Matrix> maps, Tail tail);

    static PersistenceModule zero(const Field& f);

    const Field& field() const { return field_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    Tail tail() const { return tail_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<Matrix>& maps() const { return maps_; }

    /// Dimension at any index, following the tail declaration.
    std::size_t dim(int i) const;
    /// Structure map i -> i+1 at any index.
    Matrix map(int i) const;
    /// Composite i -> j for i <= j.
    Matrix composite(int i, int j) const;

private:
    Field field_;
    int lo_ = 0;
    int hi_ = 0;
    std::vector<std::size_t> dims_{0};
    std::vector<Matrix> maps_;
    Tail tail_ = Tail::zero;
};

/// Rank of M(i -> j); throws for i > j.
std::size_t rank_invariant(const PersistenceModule& m, int i, int j);

Barcode decompose(const PersistenceModule& m);

/// Direct sum of interval modules; endpoints must be integers.
PersistenceModule realize(const Barcode& b, const Field& f = Field::rationals());

/// M composed with translation by eps (eps >= 0): index i holds M(i + eps).
PersistenceModule shift(const PersistenceModule& m, int eps);

/// The same module on a larger window [lo, hi].
PersistenceModule widen(const PersistenceModule& m, int lo, int hi);

/// Components phi(i): source(i) -> target(i + eps) for i in the source window.
/// Past the window they follow the source tail: zero, or target maps applied to phi(hi).
struct NatTransformation {
    int eps = 0;
    std::vector<Matrix> components;

    Matrix at(const PersistenceModule& source, const PersistenceModule& target, int i) const;
};

/// Checks naturality and both triangle identities; throws on shape mismatch.
bool verify_interleaving(const PersistenceModule& m, const PersistenceModule& n, const NatTransformation& phi,
                         const NatTransformation& psi, int eps);

}  // namespace cohid
