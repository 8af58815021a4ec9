#include "qgamble/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "qgamble/error.hpp"

namespace qgamble {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(Errc::DimMismatch, std::string(what) + ": dimension " + std::to_string(a) +
                                           " vs " + std::to_string(b));
    }
}

// In-place reduced row echelon form. Returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Scalar inv = rows[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero()) continue;
            const Scalar factor = rows[q][c];
            for (std::size_t k = c; k < cols; ++k) rows[q][k] -= factor * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Scalar>> as_rows(std::span<const Vector> vectors) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.emplace_back(v.entries().begin(), v.entries().end());
    return rows;
}

} // namespace

Vector Vector::unit(std::size_t dim, std::size_t k) {
    Vector v(dim);
    v[k] = 1;
    return v;
}

bool Vector::is_zero() const {
    for (const auto& z : entries_) {
        if (!z.is_zero()) return false;
    }
    return true;
}

Rational Vector::norm2() const {
    Rational total;
    for (const auto& z : entries_) total += z.norm2();
    return total;
}

Vector& Vector::operator+=(const Vector& rhs) {
    require_same_dim(dim(), rhs.dim(), "vector sum");
    for (std::size_t k = 0; k < dim(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
    require_same_dim(dim(), rhs.dim(), "vector difference");
    for (std::size_t k = 0; k < dim(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    for (auto& z : entries_) z *= s;
    return *this;
}

std::string Vector::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k) out += ' ';
        out += entries_[k].to_string();
    }
    return out + "]";
}

Scalar inner(const Vector& a, const Vector& b) {
    require_same_dim(a.dim(), b.dim(), "inner product");
    Scalar total;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        if (a[k].is_zero() || b[k].is_zero()) continue;
        total += a[k].conj() * b[k];
    }
    return total;
}

Vector tensor(const Vector& a, const Vector& b) {
    Vector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    }
    return out;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

Matrix Matrix::outer(const Vector& a, const Vector& b) {
    Matrix m(a.dim(), b.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        if (a[r].is_zero()) continue;
        for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * b[c].conj();
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_dim(rows[r].size(), cols, "matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
    }
    return m;
}

Scalar Matrix::trace() const {
    Scalar total;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) total += (*this)(k, k);
    return total;
}

bool Matrix::is_zero() const {
    for (const auto& z : data_) {
        if (!z.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_hermitian() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r).conj()) return false;
        }
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_dim(rows_, rhs.rows_, "matrix sum");
    require_same_dim(cols_, rhs.cols_, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_dim(rows_, rhs.rows_, "matrix difference");
    require_same_dim(cols_, rhs.cols_, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a.cols_, b.rows_, "matrix product");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
            }
        }
    }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    require_same_dim(a.cols_, v.dim(), "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) {
            if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << " ; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << (*this)(r, c);
        }
    }
    os << ']';
    return os.str();
}

std::size_t rank_of(std::span<const Vector> vectors) {
    if (vectors.empty()) return 0;
    auto rows = as_rows(vectors);
    return row_reduce(rows, vectors.front().dim()).size();
}

std::vector<Vector> orthogonal_kernel(std::span<const Vector> vectors, std::size_t dim) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& v : vectors) {
        require_same_dim(v.dim(), dim, "kernel");
        std::vector<Scalar> row(dim);
        for (std::size_t k = 0; k < dim; ++k) row[k] = v[k].conj();
        rows.push_back(std::move(row));
    }
    const auto pivots = row_reduce(rows, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        Vector x(dim);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_dim_ == 0) throw Error(Errc::DimMismatch, "ambient dimension must be positive");
    for (const auto& v : basis_) require_same_dim(v.dim(), ambient_dim_, "subspace basis");
    if (rank_of(basis_) != basis_.size()) {
        throw Error(Errc::DependentBasis, "subspace basis is linearly dependent");
    }
}

Subspace Subspace::spanned_by(std::size_t ambient_dim, std::span<const Vector> vectors) {
    std::vector<Vector> basis;
    for (const auto& v : vectors) {
        require_same_dim(v.dim(), ambient_dim, "span");
        basis.push_back(v);
        if (rank_of(basis) != basis.size()) basis.pop_back();
    }
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < ambient_dim; ++k) basis.push_back(Vector::unit(ambient_dim, k));
    return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
    require_same_dim(v.dim(), ambient_dim_, "containment");
    if (v.is_zero()) return true;
    std::vector<Vector> extended = basis_;
    extended.push_back(v);
    return rank_of(extended) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    require_same_dim(other.ambient_dim_, ambient_dim_, "containment");
    if (other.rank() > rank()) return false;
    std::vector<Vector> extended = basis_;
    extended.insert(extended.end(), other.basis_.begin(), other.basis_.end());
    return rank_of(extended) == basis_.size();
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rank() == b.rank() && a.contains(b);
}

Projector projector(const Subspace& s) {
    const std::size_t n = s.ambient_dim();
    std::vector<Vector> ortho;
    std::vector<Rational> norms;
    Matrix p(n, n);
    for (const auto& v : s.basis()) {
        Vector u = v;
        for (std::size_t j = 0; j < ortho.size(); ++j) {
            const Scalar c = inner(ortho[j], v) / Scalar(norms[j]);
            if (!c.is_zero()) u -= c * ortho[j];
        }
        const Rational nu = u.norm2();
        if (nu.is_zero()) throw Error(Errc::DependentBasis, "dependent basis in projector");
        p += Scalar(nu.inverse()) * Matrix::outer(u, u);
        ortho.push_back(std::move(u));
        norms.push_back(nu);
    }
    return Projector(std::move(p), s.rank());
}

Projector projector_from_orthogonal(std::span<const Projector> parts) {
    if (parts.empty()) throw Error(Errc::DimMismatch, "empty projector sum needs a dimension");
    Matrix m = parts.front().matrix();
    std::size_t rank = parts.front().rank();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        m += parts[k].matrix();
        rank += parts[k].rank();
    }
    return Projector(std::move(m), rank);
}

bool orthogonal(const Subspace& a, const Subspace& b) {
    require_same_dim(a.ambient_dim(), b.ambient_dim(), "orthogonality");
    for (const auto& u : a.basis()) {
        for (const auto& v : b.basis()) {
            if (!inner(u, v).is_zero()) return false;
        }
    }
    return true;
}

bool commute(const Projector& a, const Projector& b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return a.matrix() * b.matrix() == b.matrix() * a.matrix();
}

bool compatible(const Subspace& a, const Subspace& b) {
    require_same_dim(a.ambient_dim(), b.ambient_dim(), "compatibility");
    return commute(projector(a), projector(b));
}

Subspace direct_sum(std::span<const Subspace> parts, std::size_t ambient_dim) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require_same_dim(parts[i].ambient_dim(), ambient_dim, "direct sum");
        for (std::size_t j = 0; j < i; ++j) {
            if (!orthogonal(parts[i], parts[j])) {
                throw Error(Errc::NotOrthogonal, "direct sum of non-orthogonal subspaces");
            }
        }
        basis.insert(basis.end(), parts[i].basis().begin(), parts[i].basis().end());
    }
    return Subspace(ambient_dim, std::move(basis));
}

Subspace orthocomplement(const Subspace& s) {
    return Subspace(s.ambient_dim(), orthogonal_kernel(s.basis(), s.ambient_dim()));
}

} // namespace qgamble
