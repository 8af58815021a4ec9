#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qgamble/rational.hpp"

namespace qgamble {

using Scalar = GaussianRational;

/// Column vector over Q(i). Never normalized: all formulas divide by squared
/// norms instead.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim) {}
    explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
    Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

    static Vector unit(std::size_t dim, std::size_t k);

    std::size_t dim() const { return entries_.size(); }
    const Scalar& operator[](std::size_t k) const { return entries_[k]; }
    Scalar& operator[](std::size_t k) { return entries_[k]; }
    std::span<const Scalar> entries() const { return entries_; }

    bool is_zero() const;
    Rational norm2() const;

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }

    std::string to_string() const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Scalar> entries_;
};

/// <a, b> = sum conj(a_k) b_k. Throws Error(DimMismatch).
Scalar inner(const Vector& a, const Vector& b);

/// Kronecker product; the first factor is the most significant index.
Vector tensor(const Vector& a, const Vector& b);

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix outer(const Vector& a, const Vector& b);  // a b^dagger
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Matrix adjoint() const;
    Scalar trace() const;
    bool is_zero() const;
    bool is_hermitian() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

    std::string to_string() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Number of linearly independent vectors among `vectors` (exact Gaussian
/// elimination, first nonzero pivot).
std::size_t rank_of(std::span<const Vector> vectors);

/// Basis of {x : <b, x> = 0 for every b in `vectors`}, in row-reduced form.
std::vector<Vector> orthogonal_kernel(std::span<const Vector> vectors, std::size_t dim);

class Projector;

/// A linear subspace given by a linearly independent basis.
class Subspace {
public:
    /// Throws Error(DependentBasis) or Error(DimMismatch).
    Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

    /// Keeps a maximal independent subset of `vectors`, in order.
    static Subspace spanned_by(std::size_t ambient_dim, std::span<const Vector> vectors);
    static Subspace ray(const Vector& v) { return Subspace(v.dim(), {v}); }
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Same basis vectors in the same order.
    bool same_basis(const Subspace& other) const {
        return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
    }

    /// Subspace equality (mutual containment).
    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_dim_;
    std::vector<Vector> basis_;
};

/// Orthogonal projector, exact. Only constructible from a subspace.
class Projector {
public:
    const Matrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }
    /// tr P as an integer (the rank of the subspace).
    std::size_t rank() const { return rank_; }

    friend bool operator==(const Projector& a, const Projector& b) { return a.matrix_ == b.matrix_; }

private:
    friend Projector projector(const Subspace& s);
    friend Projector projector_from_orthogonal(std::span<const Projector> parts);
    Projector(Matrix m, std::size_t rank) : matrix_(std::move(m)), rank_(rank) {}

    Matrix matrix_;
    std::size_t rank_;
};

/// Unnormalized Gram-Schmidt followed by sum of u u^dagger / (u^dagger u).
Projector projector(const Subspace& s);

/// Projector of the direct sum of mutually orthogonal pieces (sum of their
/// projectors). Orthogonality is the caller's precondition.
Projector projector_from_orthogonal(std::span<const Projector> parts);

/// Every basis vector of `a` is orthogonal to every basis vector of `b`.
bool orthogonal(const Subspace& a, const Subspace& b);

/// Projectors commute exactly.
bool compatible(const Subspace& a, const Subspace& b);
bool commute(const Projector& a, const Projector& b);

/// Throws Error(NotOrthogonal) or Error(DimMismatch); an empty list needs
/// `ambient_dim`.
Subspace direct_sum(std::span<const Subspace> parts, std::size_t ambient_dim);

Subspace orthocomplement(const Subspace& s);

} // namespace qgamble
