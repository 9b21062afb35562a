#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohid/matrix.hpp"

namespace cohid {

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Matrix reduced;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of the null space; length cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is not in the image.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Pivot columns of m, a basis of its column space.
std::vector<Vector> image_basis(const Matrix& m);

/// Indices of vectors in `candidates` that extend span(base) without redundancy, greedy in order.
std::vector<std::size_t> complement_indices(const Field& f, std::size_t dim,
                                            const std::vector<Vector>& base,
                                            const std::vector<Vector>& candidates);

/// Coordinates with respect to a linearly independent list of vectors.
class Coordinates {
public:
    Coordinates() = default;
    Coordinates(const Field& f, std::size_t ambient, std::vector<Vector> basis);

    std::size_t size() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    /// Throws std::domain_error when v is outside the span.
    Vector coords(const Vector& v) const;
    bool contains(const Vector& v) const;

private:
    Field field_;
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> rows_;
    Matrix left_inverse_;
};

/// The quotient Z/B of nested subspaces B <= Z of an ambient space.
/// Representatives are chosen from Z as a complement of B.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const Field& f, std::size_t ambient, const std::vector<Vector>& z,
                const std::vector<Vector>& b);

    std::size_t dim() const { return reps_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Vector>& representatives() const { return reps_; }
    const std::vector<Vector>& boundary_basis() const { return bound_; }

    /// Class of v in Z/B; throws std::domain_error when v is not in Z.
    Vector coords(const Vector& v) const;
    bool in_z(const Vector& v) const;

    /// Matrix of the induced map Z/B -> target given an ambient map f with f(Z) in target's Z.
    Matrix induced(const Matrix& f, const Subquotient& target) const;

private:
    Field field_;
    std::size_t ambient_ = 0;
    std::vector<Vector> bound_;
    std::vector<Vector> reps_;
    Coordinates all_;
};

}  // namespace cohid
