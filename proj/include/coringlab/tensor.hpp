#pragma once

#include "algebra.hpp"

namespace coringlab {

/// M (x)_R N as a quotient of the k-tensor square M (x)_k N by the span of
/// the middle-action relations (m.r)(x)n - m(x)(r.n). Carries a projection
/// onto the chosen quotient basis and a section embedding it back, with
/// projection o section = id; the quotient basis is the set of non-pivot
/// coordinates of the relation row space (deterministic rref policy).
class TensorSpace {
public:
    TensorSpace() = default;

    TensorSpace(const Algebra& middle, const Bimodule& m, const Bimodule& n)
        : middle_(middle), left_(m), right_(n) {
        if (m.right_algebra() != middle) throw InputError("tensor_over: left factor is not a right module over the middle algebra");
        if (n.left_algebra() != middle) throw InputError("tensor_over: right factor is not a left module over the middle algebra");
        const FieldSpec& f = m.field();
        std::size_t amb = m.dim() * n.dim();
        ambient_dim_ = amb;

        // Relation rows (m_i . r_l) (x) n_j - m_i (x) (r_l . n_j).
        Matrix rel(f, m.dim() * middle.dim() * n.dim(), amb);
        std::size_t row = 0;
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t l = 0; l < middle_.dim(); ++l) {
                Vec mi_r = m.ract_basis(l) * m.basis(i);
                for (std::size_t j = 0; j < n.dim(); ++j) {
                    Vec r_nj = n.lact_basis(l) * n.basis(j);
                    for (std::size_t x = 0; x < m.dim(); ++x) {
                        if (!mi_r.at(x, 0).is_zero())
                            rel.at(row, x * n.dim() + j) += mi_r.at(x, 0);
                    }
                    for (std::size_t y = 0; y < n.dim(); ++y) {
                        if (!r_nj.at(y, 0).is_zero())
                            rel.at(row, i * n.dim() + y) -= r_nj.at(y, 0);
                    }
                    ++row;
                }
            }

        Matrix::Rref rr = rel.rref();
        rel_rref_ = std::move(rr.mat);
        pivots_ = std::move(rr.pivots);
        std::vector<bool> is_pivot(amb, false);
        for (auto p : pivots_) is_pivot[p] = true;
        for (std::size_t c = 0; c < amb; ++c)
            if (!is_pivot[c]) free_cols_.push_back(c);
        std::size_t q = free_cols_.size();

        // Projection: reduce modulo the relation row space, read off the
        // free coordinates. Section: free coordinate -> ambient basis vector.
        projection_ = Matrix(f, q, amb);
        section_ = Matrix(f, amb, q);
        for (std::size_t t = 0; t < q; ++t)
            section_.at(free_cols_[t], t) = Scalar::one(f);
        for (std::size_t c = 0; c < amb; ++c) {
            Vec y = Matrix::basis_vector(f, amb, c);
            for (std::size_t i = 0; i < pivots_.size(); ++i) {
                Scalar coef = y.at(pivots_[i], 0);
                if (coef.is_zero()) continue;
                for (std::size_t x = 0; x < amb; ++x)
                    y.at(x, 0) -= coef * rel_rref_.at(i, x);
            }
            for (std::size_t t = 0; t < q; ++t)
                projection_.at(t, c) = y.at(free_cols_[t], 0);
        }

        // Outer bimodule structure on the quotient.
        std::vector<Matrix> lacts, racts;
        for (std::size_t i = 0; i < m.left_algebra().dim(); ++i)
            lacts.push_back(projection_ * Matrix::kron(m.lact_basis(i), Matrix::identity(f, n.dim())) * section_);
        for (std::size_t i = 0; i < n.right_algebra().dim(); ++i)
            racts.push_back(projection_ * Matrix::kron(Matrix::identity(f, m.dim()), n.ract_basis(i)) * section_);
        space_ = Bimodule(m.left_algebra(), n.right_algebra(), q, std::move(lacts), std::move(racts),
                          m.label() + "(x)" + n.label(), false);
    }

    const Algebra& middle() const { return middle_; }
    const Bimodule& left_factor() const { return left_; }
    const Bimodule& right_factor() const { return right_; }
    const Bimodule& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    std::size_t ambient_dim() const { return ambient_dim_; }
    const Matrix& projection() const { return projection_; }
    const Matrix& section() const { return section_; }

    /// Quotient coordinates of the pure tensor u (x) v.
    Vec pure(const Vec& u, const Vec& v) const {
        return projection_ * Matrix::kron(u, v);
    }

    /// Quotient coordinates of the ambient basis tensor e_i (x) e_j.
    Vec pure_basis(std::size_t i, std::size_t j) const {
        return projection_.col(i * right_.dim() + j);
    }

private:
    Algebra middle_;
    Bimodule left_, right_;
    std::size_t ambient_dim_ = 0;
    Matrix rel_rref_;
    std::vector<std::size_t> pivots_, free_cols_;
    Matrix projection_, section_;
    Bimodule space_;
};

/// Matrix of F (x) G on quotient coordinates: src = M (x)_R N,
/// dst = M' (x)_R N', F: M -> M' right R-linear, G: N -> N' left R-linear.
inline Matrix tensor_map(const TensorSpace& src, const TensorSpace& dst,
                         const Matrix& f_mat, const Matrix& g_mat) {
    return dst.projection() * Matrix::kron(f_mat, g_mat) * src.section();
}

/// Canonical associator (X (x) Y) (x) Z -> X (x) (Y (x) Z) through the flat
/// k-tensor cube; xy/x_yz etc. name the nested quotients involved.
inline Matrix associator_left_to_right(const TensorSpace& xy, const TensorSpace& xy_z,
                                       const TensorSpace& yz, const TensorSpace& x_yz) {
    const FieldSpec& f = xy.space().field();
    std::size_t dx = xy.left_factor().dim();
    std::size_t dz = xy_z.right_factor().dim();
    Matrix lift = Matrix::kron(xy.section(), Matrix::identity(f, dz)) * xy_z.section();
    Matrix proj = x_yz.projection() * Matrix::kron(Matrix::identity(f, dx), yz.projection());
    return proj * lift;
}

inline Matrix associator_right_to_left(const TensorSpace& xy, const TensorSpace& xy_z,
                                       const TensorSpace& yz, const TensorSpace& x_yz) {
    const FieldSpec& f = xy.space().field();
    std::size_t dx = xy.left_factor().dim();
    std::size_t dz = xy_z.right_factor().dim();
    Matrix lift = Matrix::kron(Matrix::identity(f, dx), yz.section()) * x_yz.section();
    Matrix proj = xy_z.projection() * Matrix::kron(xy.projection(), Matrix::identity(f, dz));
    return proj * lift;
}

/// Contraction A (x)_k M -> M, a (x) m -> a.m (left action).
inline Matrix contract_left(const Algebra& a, const Bimodule& m) {
    const FieldSpec& f = a.field();
    Matrix c(f, m.dim(), a.dim() * m.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t l = 0; l < m.dim(); ++l)
            c.set_col(j * m.dim() + l, m.lact_basis(j) * m.basis(l));
    return c;
}

/// Contraction M (x)_k A -> M, m (x) a -> m.a (right action).
inline Matrix contract_right(const Bimodule& m, const Algebra& a) {
    const FieldSpec& f = a.field();
    Matrix c(f, m.dim(), m.dim() * a.dim());
    for (std::size_t l = 0; l < m.dim(); ++l)
        for (std::size_t j = 0; j < a.dim(); ++j)
            c.set_col(l * a.dim() + j, m.ract_basis(j) * m.basis(l));
    return c;
}

/// Flip X (x)_k Y -> Y (x)_k X on flat coordinates.
inline Matrix kron_swap(const FieldSpec& f, std::size_t dx, std::size_t dy) {
    Matrix s(f, dx * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            s.at(j * dx + i, i * dy + j) = Scalar::one(f);
    return s;
}

} // namespace coringlab
