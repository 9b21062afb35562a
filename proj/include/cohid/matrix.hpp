#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohid/field.hpp"

namespace cohid {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Rational>>& rows);
    /// rows x cols matrix whose columns are the given vectors (each of length rows).
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    std::vector<Vector> columns() const;
    Vector row(std::size_t r) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Columns [c0, c0+n) and rows [r0, r0+m).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const FieldElement& s) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

/// Block diagonal [a 0; 0 b].
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace cohid
