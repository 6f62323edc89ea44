#pragma once

#include "tensor.hpp"

#include <optional>

namespace coringlab {

/// A solved space of linear maps source -> target: a basis of matrices, the
/// vectorized basis as columns, and a left inverse for reading coordinates.
struct HomSpace {
    Bimodule source, target;
    std::vector<Matrix> basis;
    Matrix basis_cols; // (t*s) x d
    Matrix coord_proj; // d x (t*s), coord_proj * basis_cols = I

    std::size_t dim() const { return basis.size(); }

    /// Coordinates of a map in this basis; requires membership.
    Vec coords_of(const Matrix& m) const {
        Vec x = coord_proj * m.vec();
        if (basis_cols * x != m.vec())
            throw PreconditionError("map does not lie in the solved hom space");
        return x;
    }

    bool contains(const Matrix& m) const {
        return basis_cols * (coord_proj * m.vec()) == m.vec();
    }

    Matrix from_coords(const Vec& x) const {
        return Matrix::unvec(basis_cols * x, target.dim(), source.dim());
    }
};

namespace detail {

inline HomSpace solve_hom(const Bimodule& src, const Bimodule& tgt,
                          const std::vector<Matrix>& constraint_blocks) {
    const FieldSpec& f = src.field();
    std::size_t t = tgt.dim(), s = src.dim();
    Matrix stacked(f, 0, t * s);
    for (const auto& b : constraint_blocks) stacked = Matrix::vcat(stacked, b);
    Matrix ker = stacked.cols() == 0 ? Matrix(f, 0, 0) : stacked.kernel();
    HomSpace h{src, tgt, {}, ker, Matrix(f, ker.cols(), t * s)};
    for (std::size_t j = 0; j < ker.cols(); ++j)
        h.basis.push_back(Matrix::unvec(ker.col(j), t, s));
    if (ker.cols() > 0) {
        auto li = ker.left_inverse();
        if (!li) throw std::logic_error("kernel basis is not independent");
        h.coord_proj = *li;
    }
    return h;
}

} // namespace detail

struct HomConstraints {
    bool left_linear = false;
    bool right_linear = false;
};

/// Basis of the space of maps src -> tgt with the declared equivariances,
/// solved as the kernel of the constraint system.
inline HomSpace hom_space(const Bimodule& src, const Bimodule& tgt, HomConstraints c) {
    const FieldSpec& f = src.field();
    std::size_t t = tgt.dim(), s = src.dim();
    std::vector<Matrix> blocks;
    if (c.left_linear) {
        if (src.left_algebra() != tgt.left_algebra())
            throw InputError("hom_space: left algebras differ");
        for (std::size_t i = 0; i < src.left_algebra().dim(); ++i)
            blocks.push_back(operator_matrix(f, t, s, [&](const Matrix& x) {
                return x * src.lact_basis(i) - tgt.lact_basis(i) * x;
            }));
    }
    if (c.right_linear) {
        if (src.right_algebra() != tgt.right_algebra())
            throw InputError("hom_space: right algebras differ");
        for (std::size_t i = 0; i < src.right_algebra().dim(); ++i)
            blocks.push_back(operator_matrix(f, t, s, [&](const Matrix& x) {
                return x * src.ract_basis(i) - tgt.ract_basis(i) * x;
            }));
    }
    if (blocks.empty())
        blocks.push_back(Matrix::zero(f, 1, t * s));
    return detail::solve_hom(src, tgt, blocks);
}

/// The dual module Sigma^* = Hom_A(Sigma, A) of a (B,A)-bimodule, as an
/// (A,B)-bimodule via (a f b)(u) = a f(b u), together with the hom-space
/// data interpreting its coordinates as maps Sigma -> A.
struct DualData {
    Bimodule module;   // Sigma^* as (A,B)-bimodule
    HomSpace maps;     // maps Sigma -> A (right A-linear)

    /// Evaluate f (in dual coordinates) at u; result in A.
    Vec eval(const Vec& f_coords, const Vec& u) const {
        return maps.from_coords(f_coords) * u;
    }
};

inline DualData dual_module(const Bimodule& sigma) {
    const Algebra& a = sigma.right_algebra();
    const Algebra& b = sigma.left_algebra();
    Bimodule a_reg = Bimodule::regular(a);
    HomSpace h = hom_space(sigma, a_reg, {.left_linear = false, .right_linear = true});
    std::vector<Matrix> lacts, racts;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        // (a f)(u) = a f(u)
        Matrix m(a.field(), h.dim(), h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k)
            m.set_col(k, h.coords_of(a.lmul_basis(i) * h.basis[k]));
        lacts.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        // (f b)(u) = f(b u)
        Matrix m(a.field(), h.dim(), h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k)
            m.set_col(k, h.coords_of(h.basis[k] * sigma.lact_basis(i)));
        racts.push_back(std::move(m));
    }
    Bimodule dual(a, b, h.dim(), std::move(lacts), std::move(racts), sigma.label() + "*");
    return {std::move(dual), std::move(h)};
}

/// Dual basis witness e = sum_i e_i (x) f_i in Sigma (x)_A Sigma^* for a
/// module that is finitely generated projective on the right.
struct DualBasis {
    std::vector<std::pair<Vec, Vec>> pairs; // (e_i in Sigma, f_i in Sigma^*)
    TensorSpace sigma_dual;                 // Sigma (x)_A Sigma^*
    Vec e;                                  // coordinates of the witness in the quotient
};

/// Dual basis iff Sigma is f.g. projective as a right A-module; absence is
/// a verdict, not an error. Solved as a linear system: the evaluation map
/// Sigma (x)_A Sigma^* -> End_k(Sigma) must reach the identity.
inline std::optional<DualBasis> dual_basis(const Bimodule& sigma, const DualData& dual) {
    const FieldSpec& f = sigma.field();
    TensorSpace t(sigma.right_algebra(), sigma, dual.module);
    std::size_t ds = sigma.dim(), dd = dual.module.dim();
    // Column per ambient pair (i,k): the endomorphism v -> u_i . f_k(v).
    Matrix ev(f, ds * ds, ds * dd);
    for (std::size_t i = 0; i < ds; ++i)
        for (std::size_t k = 0; k < dd; ++k) {
            Matrix endo(f, ds, ds);
            for (std::size_t c = 0; c < ds; ++c) {
                Vec fa = dual.maps.basis[k] * sigma.basis(c); // f_k(v_c) in A
                endo.set_col(c, sigma.ract(fa) * sigma.basis(i));
            }
            ev.set_col(i * dd + k, endo.vec());
        }
    Matrix ev_quot = ev * t.section();
    auto sol = ev_quot.solve(Matrix::identity(f, ds).vec());
    if (!sol) return std::nullopt;
    DualBasis db{{}, t, *sol};
    Vec amb = t.section() * *sol;
    for (std::size_t k = 0; k < dd; ++k) {
        Vec ek(f, ds, 1);
        bool nonzero = false;
        for (std::size_t i = 0; i < ds; ++i) {
            ek.at(i, 0) = amb.at(i * dd + k, 0);
            nonzero = nonzero || !ek.at(i, 0).is_zero();
        }
        if (nonzero)
            db.pairs.emplace_back(ek, Matrix::basis_vector(f, dd, k));
    }
    return db;
}

/// Both identities of the dual-basis equation, checked exactly on every
/// basis vector: u = sum e_i f_i(u) and f = sum f(e_i) f_i.
inline bool dual_basis_identities_hold(const Bimodule& sigma, const DualData& dual,
                                       const DualBasis& db) {
    const FieldSpec& f = sigma.field();
    for (std::size_t c = 0; c < sigma.dim(); ++c) {
        Vec u = sigma.basis(c);
        Vec acc(f, sigma.dim(), 1);
        for (const auto& [ei, fi] : db.pairs)
            acc = acc + sigma.ract(dual.eval(fi, u)) * ei;
        if (acc != u) return false;
    }
    for (std::size_t k = 0; k < dual.module.dim(); ++k) {
        Vec g = Matrix::basis_vector(f, dual.module.dim(), k);
        Vec acc(f, dual.module.dim(), 1);
        for (const auto& [ei, fi] : db.pairs)
            acc = acc + dual.module.lact(dual.eval(g, ei)) * fi;
        if (acc != g) return false;
    }
    return true;
}

/// Trace ideal of a left module: span{ f(u) : f in _R Hom(Sigma, R), u in
/// Sigma } as a canonical row-space basis inside R.
inline Matrix trace_ideal(const Bimodule& sigma, const Algebra& over) {
    if (sigma.left_algebra() != over)
        throw InputError("trace_ideal: sigma is not a left module over the given algebra");
    Bimodule reg = Bimodule::regular(over);
    Bimodule src(over, over, sigma.dim(), [&] {
        std::vector<Matrix> l;
        for (std::size_t i = 0; i < over.dim(); ++i) l.push_back(sigma.lact_basis(i));
        return l;
    }(), std::vector<Matrix>(over.dim(), Matrix::zero(over.field(), sigma.dim(), sigma.dim())), sigma.label(), false);
    // Only left-linearity matters; build constraints directly.
    const FieldSpec& f = over.field();
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < over.dim(); ++i)
        blocks.push_back(operator_matrix(f, over.dim(), sigma.dim(), [&](const Matrix& x) {
            return x * sigma.lact_basis(i) - over.lmul_basis(i) * x;
        }));
    HomSpace h = detail::solve_hom(src, reg, blocks);
    Matrix span(f, h.dim() * sigma.dim(), over.dim());
    std::size_t row = 0;
    for (const auto& fk : h.basis)
        for (std::size_t i = 0; i < sigma.dim(); ++i, ++row) {
            Vec v = fk * sigma.basis(i);
            for (std::size_t c = 0; c < over.dim(); ++c) span.at(row, c) = v.at(c, 0);
        }
    return span.row_space();
}

/// Left f.g. projectivity, decided through the side-swap reflection.
inline bool is_fg_projective_left(const Bimodule& sigma) {
    Bimodule flipped = sigma.flip();
    DualData d = dual_module(flipped);
    return dual_basis(flipped, d).has_value();
}

inline bool is_fg_projective_right(const Bimodule& sigma) {
    DualData d = dual_module(sigma);
    return dual_basis(sigma, d).has_value();
}

/// Finite-dimensional surrogate for faithful flatness of a left module:
/// f.g. projective with full trace ideal (projective generator).
inline bool is_faithfully_flat(const Bimodule& sigma, const Algebra& over) {
    if (sigma.dim() == 0) return false;
    if (!is_fg_projective_left(sigma)) return false;
    return trace_ideal(sigma, over).rows() == over.dim();
}

/// Package a hom space closed under composition as an algebra (e.g. an
/// endomorphism ring); multiplication is composition in the given basis.
inline Algebra hom_algebra(const HomSpace& h, std::string label) {
    const FieldSpec& f = h.source.field();
    std::size_t d = h.dim();
    std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d, Vec(f, d, 1)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            mult[i][j] = h.coords_of(h.basis[i] * h.basis[j]);
    Vec unit = h.coords_of(Matrix::identity(f, h.source.dim()));
    return Algebra(f, d, std::move(mult), std::move(unit), std::move(label));
}

} // namespace coringlab
