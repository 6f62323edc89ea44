#pragma once

#include "matrix.hpp"

#include <string>
#include <vector>

namespace coringlab {

/// Finite-dimensional unital associative k-algebra given by structure
/// constants: e_i e_j = sum_l c[i][j][l] e_l.
class Algebra {
public:
    Algebra() : field_(FieldSpec::rationals()), dim_(0) {}

    Algebra(FieldSpec field, std::size_t dim, std::vector<std::vector<Vec>> mult,
            Vec unit, std::string label)
        : field_(field), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)),
          label_(std::move(label)) {
        if (mult_.size() != dim_) throw InputError(label_ + ": mult table has wrong size");
        for (const auto& row : mult_) {
            if (row.size() != dim_) throw InputError(label_ + ": mult table has wrong size");
            for (const auto& v : row)
                if (v.rows() != dim_ || v.cols() != 1)
                    throw InputError(label_ + ": mult entry has wrong shape");
        }
        if (unit_.rows() != dim_ || unit_.cols() != 1)
            throw InputError(label_ + ": unit has wrong shape");
        left_mult_.reserve(dim_);
        right_mult_.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            Matrix li(field_, dim_, dim_), ri(field_, dim_, dim_);
            for (std::size_t j = 0; j < dim_; ++j) {
                li.set_col(j, mult_[i][j]); // e_i * e_j
                ri.set_col(j, mult_[j][i]); // e_j * e_i
            }
            left_mult_.push_back(std::move(li));
            right_mult_.push_back(std::move(ri));
        }
        validate();
    }

    /// The ground field as a one-dimensional algebra.
    static Algebra ground(const FieldSpec& f, std::string label = "k") {
        std::vector<std::vector<Vec>> mult{{Matrix::basis_vector(f, 1, 0)}};
        return Algebra(f, 1, std::move(mult), Matrix::basis_vector(f, 1, 0), std::move(label));
    }

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    const std::string& label() const { return label_; }
    const Vec& table(std::size_t i, std::size_t j) const { return mult_[i][j]; }

    /// Matrix of x -> a x.
    Matrix lmul(const Vec& a) const {
        Matrix m(field_, dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            if (!a.at(i, 0).is_zero()) m = m + left_mult_[i] * a.at(i, 0);
        return m;
    }

    /// Matrix of x -> x a.
    Matrix rmul(const Vec& a) const {
        Matrix m(field_, dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            if (!a.at(i, 0).is_zero()) m = m + right_mult_[i] * a.at(i, 0);
        return m;
    }

    const Matrix& lmul_basis(std::size_t i) const { return left_mult_[i]; }
    const Matrix& rmul_basis(std::size_t i) const { return right_mult_[i]; }

    Vec mul(const Vec& a, const Vec& b) const { return lmul(a) * b; }

    Vec basis(std::size_t i) const { return Matrix::basis_vector(field_, dim_, i); }

    Algebra opposite() const {
        std::vector<std::vector<Vec>> mult(dim_, std::vector<Vec>(dim_, Vec(field_, dim_, 1)));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                mult[i][j] = mult_[j][i];
        return Algebra(field_, dim_, std::move(mult), unit_, label_ + "^op");
    }

    /// Structural equality (field, dimension, unit, multiplication table);
    /// labels are ignored.
    bool operator==(const Algebra& o) const {
        if (field_ != o.field_ || dim_ != o.dim_ || unit_ != o.unit_) return false;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (mult_[i][j] != o.mult_[i][j]) return false;
        return true;
    }
    bool operator!=(const Algebra& o) const { return !(*this == o); }

private:
    void validate() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t l = 0; l < dim_; ++l)
                    if (mul(mult_[i][j], basis(l)) != mul(basis(i), mult_[j][l]))
                        throw InputError(label_ + ": multiplication is not associative at basis (" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(l) + ")");
        for (std::size_t i = 0; i < dim_; ++i) {
            if (mul(unit_, basis(i)) != basis(i) || mul(basis(i), unit_) != basis(i))
                throw InputError(label_ + ": unit law fails at basis " + std::to_string(i));
        }
    }

    FieldSpec field_;
    std::size_t dim_;
    std::vector<std::vector<Vec>> mult_;
    Vec unit_;
    std::string label_;
    std::vector<Matrix> left_mult_, right_mult_;
};

/// Unital algebra morphism B -> A as a dim(A) x dim(B) matrix.
struct AlgebraMorphism {
    Algebra source; // B
    Algebra target; // A
    Matrix mat;

    AlgebraMorphism(Algebra src, Algebra tgt, Matrix m)
        : source(std::move(src)), target(std::move(tgt)), mat(std::move(m)) {
        if (mat.rows() != target.dim() || mat.cols() != source.dim())
            throw InputError("algebra morphism has wrong shape");
        if (mat * source.unit() != target.unit())
            throw InputError("algebra morphism is not unital");
        for (std::size_t i = 0; i < source.dim(); ++i)
            for (std::size_t j = 0; j < source.dim(); ++j)
                if (mat * source.table(i, j) !=
                    target.mul(mat * source.basis(i), mat * source.basis(j)))
                    throw InputError("algebra morphism is not multiplicative at basis (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
    }

    static AlgebraMorphism identity(const Algebra& a) {
        return AlgebraMorphism(a, a, Matrix::identity(a.field(), a.dim()));
    }

    Vec apply(const Vec& b) const { return mat * b; }
};

/// Finite-dimensional (B,A)-bimodule with explicit action matrices per
/// basis element of B and A. One-sided modules take the ground field on
/// the inactive side.
class Bimodule {
public:
    Bimodule() : dim_(0) {}

    Bimodule(Algebra left_alg, Algebra right_alg, std::size_t dim,
             std::vector<Matrix> left_act, std::vector<Matrix> right_act,
             std::string label, bool validate_actions = true)
        : left_(std::move(left_alg)), right_(std::move(right_alg)), dim_(dim),
          left_act_(std::move(left_act)), right_act_(std::move(right_act)),
          label_(std::move(label)) {
        if (left_act_.size() != left_.dim() || right_act_.size() != right_.dim())
            throw InputError(label_ + ": action list sizes do not match algebra dims");
        for (const auto& m : left_act_)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw InputError(label_ + ": left action matrix has wrong shape");
        for (const auto& m : right_act_)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw InputError(label_ + ": right action matrix has wrong shape");
        if (validate_actions) validate();
    }

    /// A as the regular (A,A)-bimodule.
    static Bimodule regular(const Algebra& a) {
        std::vector<Matrix> l, r;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            l.push_back(a.lmul_basis(i));
            r.push_back(a.rmul_basis(i));
        }
        return Bimodule(a, a, a.dim(), std::move(l), std::move(r), a.label());
    }

    /// A as a right A-module (ground field on the left).
    static Bimodule right_regular(const Algebra& a) {
        Algebra k = Algebra::ground(a.field());
        std::vector<Matrix> l{Matrix::identity(a.field(), a.dim())};
        std::vector<Matrix> r;
        for (std::size_t i = 0; i < a.dim(); ++i) r.push_back(a.rmul_basis(i));
        return Bimodule(k, a, a.dim(), std::move(l), std::move(r), a.label());
    }

    /// A as a left A-module (ground field on the right).
    static Bimodule left_regular(const Algebra& a) {
        Algebra k = Algebra::ground(a.field());
        std::vector<Matrix> l;
        for (std::size_t i = 0; i < a.dim(); ++i) l.push_back(a.lmul_basis(i));
        std::vector<Matrix> r{Matrix::identity(a.field(), a.dim())};
        return Bimodule(a, k, a.dim(), std::move(l), std::move(r), a.label());
    }

    /// Free right module R^n as a (k, R)-bimodule.
    static Bimodule free_right(const Algebra& r, std::size_t n, std::string label) {
        Algebra k = Algebra::ground(r.field());
        std::size_t d = r.dim() * n;
        std::vector<Matrix> l{Matrix::identity(r.field(), d)};
        std::vector<Matrix> ra;
        for (std::size_t i = 0; i < r.dim(); ++i) {
            Matrix m(r.field(), d, d);
            for (std::size_t blk = 0; blk < n; ++blk)
                for (std::size_t x = 0; x < r.dim(); ++x)
                    for (std::size_t y = 0; y < r.dim(); ++y)
                        m.at(blk * r.dim() + x, blk * r.dim() + y) = r.rmul_basis(i).at(x, y);
            ra.push_back(std::move(m));
        }
        return Bimodule(k, r, d, std::move(l), std::move(ra), std::move(label));
    }

    const Algebra& left_algebra() const { return left_; }
    const Algebra& right_algebra() const { return right_; }
    const FieldSpec& field() const { return left_.field(); }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }

    /// Matrix of m -> b m for b with the given coordinates.
    Matrix lact(const Vec& b) const {
        Matrix m(field(), dim_, dim_);
        for (std::size_t i = 0; i < left_.dim(); ++i)
            if (!b.at(i, 0).is_zero()) m = m + left_act_[i] * b.at(i, 0);
        return m;
    }

    Matrix ract(const Vec& a) const {
        Matrix m(field(), dim_, dim_);
        for (std::size_t i = 0; i < right_.dim(); ++i)
            if (!a.at(i, 0).is_zero()) m = m + right_act_[i] * a.at(i, 0);
        return m;
    }

    const Matrix& lact_basis(std::size_t i) const { return left_act_[i]; }
    const Matrix& ract_basis(std::size_t i) const { return right_act_[i]; }

    Vec basis(std::size_t i) const { return Matrix::basis_vector(field(), dim_, i); }

    /// Sides swapped: a (B,A)-bimodule becomes an (A^op, B^op)-bimodule on
    /// the same underlying space.
    Bimodule flip() const {
        return Bimodule(right_.opposite(), left_.opposite(), dim_, right_act_, left_act_,
                        label_ + "~flip", false);
    }

    Bimodule relabel(std::string label) const {
        Bimodule b = *this;
        b.label_ = std::move(label);
        return b;
    }

    bool operator==(const Bimodule& o) const {
        return left_ == o.left_ && right_ == o.right_ && dim_ == o.dim_ &&
               left_act_ == o.left_act_ && right_act_ == o.right_act_;
    }
    bool operator!=(const Bimodule& o) const { return !(*this == o); }

private:
    void validate() const {
        if (left_.field() != right_.field())
            throw InputError(label_ + ": bimodule algebras over different fields");
        if (lact(left_.unit()) != Matrix::identity(field(), dim_))
            throw InputError(label_ + ": left action is not unital");
        if (ract(right_.unit()) != Matrix::identity(field(), dim_))
            throw InputError(label_ + ": right action is not unital");
        for (std::size_t i = 0; i < left_.dim(); ++i)
            for (std::size_t j = 0; j < left_.dim(); ++j)
                if (lact(left_.table(i, j)) != left_act_[i] * left_act_[j])
                    throw InputError(label_ + ": left action is not multiplicative at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        for (std::size_t i = 0; i < right_.dim(); ++i)
            for (std::size_t j = 0; j < right_.dim(); ++j)
                if (ract(right_.table(i, j)) != right_act_[j] * right_act_[i])
                    throw InputError(label_ + ": right action fails the right module law at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        for (std::size_t i = 0; i < left_.dim(); ++i)
            for (std::size_t j = 0; j < right_.dim(); ++j)
                if (left_act_[i] * right_act_[j] != right_act_[j] * left_act_[i])
                    throw InputError(label_ + ": left and right actions do not commute at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
    }

    Algebra left_, right_;
    std::size_t dim_;
    std::vector<Matrix> left_act_, right_act_;
    std::string label_;
};

/// A linear map between bimodules, with optionally declared equivariances.
struct LinearMap {
    Bimodule source;
    Bimodule target;
    Matrix mat;

    LinearMap(Bimodule src, Bimodule tgt, Matrix m)
        : source(std::move(src)), target(std::move(tgt)), mat(std::move(m)) {
        if (mat.rows() != target.dim() || mat.cols() != source.dim())
            throw InputError("linear map has wrong shape for its source/target");
    }

    bool is_left_linear() const {
        if (source.left_algebra() != target.left_algebra()) return false;
        for (std::size_t i = 0; i < source.left_algebra().dim(); ++i)
            if (mat * source.lact_basis(i) != target.lact_basis(i) * mat) return false;
        return true;
    }

    bool is_right_linear() const {
        if (source.right_algebra() != target.right_algebra()) return false;
        for (std::size_t i = 0; i < source.right_algebra().dim(); ++i)
            if (mat * source.ract_basis(i) != target.ract_basis(i) * mat) return false;
        return true;
    }

    Vec apply(const Vec& v) const { return mat * v; }
};

} // namespace coringlab
