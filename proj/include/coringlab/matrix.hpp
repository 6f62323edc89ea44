#pragma once

#include "scalar.hpp"

#include <cassert>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace coringlab {

/// Dense matrix over an exact field, row-major. Linear maps are matrices
/// w.r.t. fixed ordered bases; column vectors are n x 1 matrices.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}

    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix zero(const FieldSpec& f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }

    /// Standard basis column vector e_i in k^n.
    static Matrix basis_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
        Matrix m(f, n, 1);
        m.at(i, 0) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
        if (rows.empty()) return Matrix(f, 0, 0);
        Matrix m(f, rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    /// Convenience for tests: integer entries, reduced into the field.
    static Matrix from_int_rows(const FieldSpec& f, const std::vector<std::vector<std::int64_t>>& rows) {
        std::vector<std::vector<Scalar>> s;
        s.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<Scalar> row;
            row.reserve(r.size());
            for (auto v : r) row.push_back(Scalar::from_int(f, v));
            s.push_back(std::move(row));
        }
        return from_rows(f, s);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return a_[r * cols_ + c];
    }
    const Scalar& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return a_[r * cols_ + c];
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
        Matrix m(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m.at(i, j) += aik * o.at(k, j);
            }
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }

    Matrix operator*(const Scalar& s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x *= s;
        return m;
    }

    Matrix operator-() const { return *this * (-Scalar::one(field_)); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_) if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(field_, rows_);
    }

    Matrix transpose() const {
        Matrix m(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                m.at(c, r) = at(r, c);
        return m;
    }

    Matrix col(std::size_t j) const {
        Matrix v(field_, rows_, 1);
        for (std::size_t r = 0; r < rows_; ++r) v.at(r, 0) = at(r, j);
        return v;
    }

    Matrix row(std::size_t i) const {
        Matrix v(field_, 1, cols_);
        for (std::size_t c = 0; c < cols_; ++c) v.at(0, c) = at(i, c);
        return v;
    }

    void set_col(std::size_t j, const Matrix& v) {
        assert(v.rows_ == rows_ && v.cols_ == 1);
        for (std::size_t r = 0; r < rows_; ++r) at(r, j) = v.at(r, 0);
    }

    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw InputError("hcat row mismatch");
        Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
        }
        return m;
    }

    static Matrix vcat(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw InputError("vcat col mismatch");
        Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) m.at(a.rows_ + r, c) = b.at(r, c);
        return m;
    }

    /// Kronecker product; pair (i,k) maps to flat index i*o.rows()+k
    /// (and (j,l) to j*o.cols()+l), so kron(u, v) of column vectors is the
    /// flat coordinate vector of u (x) v.
    static Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix m(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const Scalar& aij = a.at(i, j);
                if (aij.is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        m.at(i * b.rows_ + k, j * b.cols_ + l) = aij * b.at(k, l);
            }
        return m;
    }

    /// Row-major vectorization as a column vector.
    Matrix vec() const {
        Matrix v(field_, rows_ * cols_, 1);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                v.at(r * cols_ + c, 0) = at(r, c);
        return v;
    }

    static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
        assert(v.rows_ == rows * cols && v.cols_ == 1);
        Matrix m(v.field_, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(r, c) = v.at(r * cols + c, 0);
        return m;
    }

    struct Rref;

    /// Reduced row echelon form. Deterministic: columns scanned left to
    /// right, pivot = first nonzero entry from the top among remaining rows.
    Rref rref() const;

    std::size_t rank() const;

    /// Basis of the right null space, one column per free column of the
    /// rref, in ascending free-column order.
    Matrix kernel() const;

    /// Some x with (*this) x = b, free variables set to zero; nullopt when
    /// the system is inconsistent.
    std::optional<Matrix> solve(const Matrix& b) const;

    /// Columnwise solve of (*this) X = B.
    std::optional<Matrix> solve_matrix(const Matrix& b) const;

    /// Left inverse L with L * (*this) = I; requires full column rank.
    std::optional<Matrix> left_inverse() const;

    std::optional<Matrix> inverse() const;

    bool is_bijective() const { return rows_ == cols_ && rank() == rows_; }
    bool is_injective() const { return rank() == cols_; }
    bool is_surjective() const { return rank() == rows_; }

    /// Canonical row-space form: rref rows with zero rows dropped. Two
    /// subspaces given by spanning rows are equal iff these agree.
    Matrix row_space() const;

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r) os << "; ";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) os << " ";
                os << at(r, c).to_string();
            }
        }
        os << "]";
        return os.str();
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

struct Matrix::Rref {
    Matrix mat;
    std::vector<std::size_t> pivots;
};

inline Matrix::Rref Matrix::rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t piv = lead;
        while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.at(piv, j), m.at(lead, j));
        Scalar inv = m.at(lead, c).inverse();
        for (std::size_t j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, c).is_zero()) continue;
            Scalar f = m.at(r, c);
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(r, j) -= f * m.at(lead, j);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t Matrix::rank() const { return rref().pivots.size(); }

inline Matrix Matrix::kernel() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(field_, cols_, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t f = free_cols[t];
        k.at(f, t) = Scalar::one(field_);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            k.at(r.pivots[i], t) = -r.mat.at(i, f);
    }
    return k;
}

inline std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_ || b.cols_ != 1) throw InputError("solve: rhs shape mismatch");
    Rref r = hcat(*this, b).rref();
    for (auto p : r.pivots)
        if (p == cols_) return std::nullopt;
    Matrix x(field_, cols_, 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        x.at(r.pivots[i], 0) = r.mat.at(i, cols_);
    return x;
}

inline std::optional<Matrix> Matrix::solve_matrix(const Matrix& b) const {
    if (b.rows_ != rows_) throw InputError("solve_matrix: rhs shape mismatch");
    Rref r = hcat(*this, b).rref();
    for (auto p : r.pivots)
        if (p >= cols_) return std::nullopt;
    Matrix x(field_, cols_, b.cols_);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            x.at(r.pivots[i], j) = r.mat.at(i, cols_ + j);
    return x;
}

inline std::optional<Matrix> Matrix::left_inverse() const {
    auto lt = transpose().solve_matrix(identity(field_, cols_));
    if (!lt) return std::nullopt;
    return lt->transpose();
}

inline std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    return solve_matrix(identity(field_, rows_));
}

inline Matrix Matrix::row_space() const {
    Rref r = rref();
    Matrix m(field_, r.pivots.size(), cols_);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(i, c) = r.mat.at(i, c);
    return m;
}

using Vec = Matrix; // column vector, n x 1

/// Matrix of a linear operator on t x s matrices, built by evaluating the
/// operator on elementary matrices. Columns are indexed by vec(E_rc).
inline Matrix operator_matrix(const FieldSpec& f, std::size_t t, std::size_t s,
                              const std::function<Matrix(const Matrix&)>& op) {
    Matrix first = op(Matrix::zero(f, t, s));
    std::size_t out = first.rows() * first.cols();
    Matrix m(f, out, t * s);
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < s; ++c) {
            Matrix e(f, t, s);
            e.at(r, c) = Scalar::one(f);
            m.set_col(r * s + c, op(e).vec());
        }
    return m;
}

} // namespace coringlab
