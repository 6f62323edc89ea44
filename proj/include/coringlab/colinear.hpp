#pragma once

#include "coring.hpp"

namespace coringlab {

/// Basis of Hom^C(M,N): right A-linear maps with rho_N o f = (f (x) C) o rho_M,
/// solved as the kernel of the stacked constraint system.
inline HomSpace colinear_hom(const Comodule& m, const Comodule& n) {
    if (m.coring != n.coring) throw InputError("colinear_hom: comodules over different corings");
    const FieldSpec& f = m.field();
    std::size_t t = n.dim(), s = m.dim();
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < m.coring.base.dim(); ++i)
        blocks.push_back(operator_matrix(f, t, s, [&](const Matrix& x) {
            return x * m.carrier.ract_basis(i) - n.carrier.ract_basis(i) * x;
        }));
    Matrix idc = Matrix::identity(f, m.coring.dim());
    blocks.push_back(operator_matrix(f, t, s, [&](const Matrix& x) {
        Matrix x_tensor_c = n.mc.projection() * Matrix::kron(x, idc) * m.mc.section();
        return n.rho * x - x_tensor_c * m.rho;
    }));
    return detail::solve_hom(m.carrier, n.carrier, blocks);
}

/// End^C(Sigma) packaged as an algebra under composition, with Sigma as a
/// (T,A)-bimodule through it.
struct EndData {
    HomSpace homs;
    Algebra algebra;      // T
    Bimodule sigma_t;     // Sigma as (T, A)-bimodule
};

inline EndData end_comodule_algebra(const Comodule& sigma, std::string label = "T") {
    HomSpace h = colinear_hom(sigma, sigma);
    Algebra t = hom_algebra(h, std::move(label));
    std::vector<Matrix> lacts = h.basis;
    std::vector<Matrix> racts;
    for (std::size_t i = 0; i < sigma.coring.base.dim(); ++i)
        racts.push_back(sigma.carrier.ract_basis(i));
    Bimodule st(t, sigma.coring.base, sigma.dim(), std::move(lacts), std::move(racts),
                sigma.carrier.label(), false);
    return {std::move(h), std::move(t), std::move(st)};
}

/// A left C-comodule, stored together with its realization as a right
/// comodule over the opposite coring (the solver-facing form).
struct LeftComodule {
    Coring coring;      // C
    Bimodule carrier;   // (A, B)
    TensorSpace cm;     // C (x)_A M
    Matrix rho_l;       // cm.dim x dim M
    Coring op;          // C^op
    Comodule op_right;  // flipped carrier as a right C^op-comodule

    std::size_t dim() const { return carrier.dim(); }
};

inline LeftComodule make_left_comodule(const Coring& c, const Bimodule& carrier, Matrix rho_l) {
    if (carrier.left_algebra() != c.base)
        throw InputError(carrier.label() + ": left comodule carrier is not a left module over the base");
    TensorSpace cm(c.base, c.carrier, carrier);
    if (rho_l.rows() != cm.dim() || rho_l.cols() != carrier.dim())
        throw InputError(carrier.label() + ": left coaction has wrong shape");
    Coring op = opposite_coring(c);
    // rho^r_op = flip o rho^l : M -> M (x)_{A^op} C^op.
    TensorSpace mc_op(op.base, carrier.flip(), op.carrier);
    Matrix swap = kron_swap(c.field(), c.dim(), carrier.dim());
    Matrix rho_op = mc_op.projection() * swap * cm.section() * rho_l;
    Comodule right{op, carrier.flip(), std::move(mc_op), std::move(rho_op)};
    return LeftComodule{c, carrier, std::move(cm), std::move(rho_l), std::move(op), std::move(right)};
}

/// Recover the left comodule from its opposite-side realization.
inline LeftComodule left_from_op_right(const Coring& c, const Comodule& op_right) {
    Bimodule carrier = op_right.carrier.flip(); // back to (A, B)
    TensorSpace cm(c.base, c.carrier, carrier);
    Matrix swap = kron_swap(c.field(), carrier.dim(), c.dim());
    Matrix rho_l = cm.projection() * swap * op_right.mc.section() * op_right.rho;
    return make_left_comodule(c, carrier, std::move(rho_l));
}

inline ComoduleVerdict check_left_comodule(const LeftComodule& m) {
    return check_comodule(m.op_right);
}

/// C as a left comodule over itself.
inline LeftComodule regular_left_comodule(const Coring& c) {
    return make_left_comodule(c, c.carrier, c.delta);
}

/// The induced left coaction on Sigma^* of a f.g. projective right comodule:
/// rho^l(f) = sum_i f(e_i[0]) e_i[1] (x) f_i.
inline LeftComodule dual_left_comodule(const Comodule& sigma, const DualData& dual,
                                       const DualBasis& db) {
    const FieldSpec& f = sigma.field();
    const Coring& c = sigma.coring;
    TensorSpace cd(c.base, c.carrier, dual.module);
    Matrix rho_l(f, cd.dim(), dual.module.dim());
    for (std::size_t k = 0; k < dual.module.dim(); ++k) {
        Vec g = Matrix::basis_vector(f, dual.module.dim(), k);
        Vec acc(f, cd.dim(), 1);
        for (const auto& [ei, fi] : db.pairs) {
            Vec amb = sigma.mc.section() * (sigma.rho * ei); // e_i[0] (x) e_i[1]
            for (std::size_t mIdx = 0; mIdx < sigma.dim(); ++mIdx)
                for (std::size_t cIdx = 0; cIdx < c.dim(); ++cIdx) {
                    const Scalar& coef = amb.at(mIdx * c.dim() + cIdx, 0);
                    if (coef.is_zero()) continue;
                    Vec ga = dual.eval(g, sigma.carrier.basis(mIdx)); // f(e_i[0]) in A
                    Vec cc = c.carrier.lact(ga) * c.carrier.basis(cIdx);
                    acc = acc + cd.pure(cc, fi) * coef;
                }
        }
        rho_l.set_col(k, acc);
    }
    return make_left_comodule(c, dual.module, std::move(rho_l));
}

/// The cotensor product M square N inside M (x)_A N: the equalizer of
/// rho^r (x) N and M (x) rho^l, with its outer bimodule structure.
struct Cotensor {
    TensorSpace ambient;  // M (x)_A N
    Matrix inclusion;     // ambient-quotient coords x dim(cotensor)
    Bimodule space;       // (B_M, B_N)-bimodule structure on the equalizer

    std::size_t dim() const { return inclusion.cols(); }
};

inline Cotensor cotensor(const Comodule& m, const LeftComodule& n) {
    if (m.coring != n.coring) throw InputError("cotensor: comodules over different corings");
    const FieldSpec& f = m.field();
    const Coring& c = m.coring;
    TensorSpace t(c.base, m.carrier, n.carrier);
    TensorSpace mc_n(c.base, m.mc.space(), n.carrier);
    TensorSpace m_cn(c.base, m.carrier, n.cm.space());
    Matrix t1 = mc_n.projection() * Matrix::kron(m.rho, Matrix::identity(f, n.dim())) * t.section();
    Matrix t2 = m_cn.projection() * Matrix::kron(Matrix::identity(f, m.dim()), n.rho_l) * t.section();
    Matrix to_left = associator_right_to_left(m.mc, mc_n, n.cm, m_cn);
    Matrix incl = (t1 - to_left * t2).kernel();

    // Outer actions restrict to the equalizer; read them off through a left
    // inverse of the inclusion.
    Bimodule amb = t.space();
    std::size_t d = incl.cols();
    Matrix linv(f, d, amb.dim());
    if (d > 0) {
        auto li = incl.left_inverse();
        if (!li) throw std::logic_error("cotensor inclusion is not injective");
        linv = *li;
    }
    std::vector<Matrix> lacts, racts;
    for (std::size_t i = 0; i < amb.left_algebra().dim(); ++i) {
        Matrix act = amb.lact_basis(i) * incl;
        Matrix coords = linv * act;
        if (incl * coords != act)
            throw std::logic_error("cotensor is not stable under the left outer action");
        lacts.push_back(std::move(coords));
    }
    for (std::size_t i = 0; i < amb.right_algebra().dim(); ++i) {
        Matrix act = amb.ract_basis(i) * incl;
        Matrix coords = linv * act;
        if (incl * coords != act)
            throw std::logic_error("cotensor is not stable under the right outer action");
        racts.push_back(std::move(coords));
    }
    Bimodule space(amb.left_algebra(), amb.right_algebra(), d, std::move(lacts), std::move(racts),
                   m.carrier.label() + "[]" + n.carrier.label(), false);
    return Cotensor{std::move(t), std::move(incl), std::move(space)};
}

/// M (x)_A eps: M square C -> M; an isomorphism with inverse rho^r.
inline Matrix cotensor_counit_iso(const Comodule& m, const Cotensor& ct) {
    const FieldSpec& f = m.field();
    Matrix id_x_eps = Matrix::kron(Matrix::identity(f, m.dim()), m.coring.counit);
    return contract_right(m.carrier, m.coring.base) * id_x_eps * ct.ambient.section() * ct.inclusion;
}

/// A colinear left inverse of the coaction, when one exists ((C,A)-injectivity).
inline std::optional<LinearMap> is_ca_injective(const Comodule& m) {
    const FieldSpec& f = m.field();
    Comodule mc_comod = cofree_comodule(m.coring, m.carrier);
    HomSpace h = colinear_hom(mc_comod, m);
    // Solve sum x_k (G_k o rho) = id over the hom-space coordinates.
    Matrix sys(f, m.dim() * m.dim(), h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
        sys.set_col(k, (h.basis[k] * m.rho).vec());
    auto x = sys.solve(Matrix::identity(f, m.dim()).vec());
    if (!x) return std::nullopt;
    return LinearMap(mc_comod.carrier, m.carrier, h.from_coords(*x));
}

/// Lemma-style bijection alpha: Hom_A(L, M0) ~ Hom^C(L, M0 (x) C),
/// alpha(f)(l) = f(l_[0]) (x) l_[1]. Returns the matrix taking hom
/// coordinates of Hom_A(L,M0) to hom coordinates of Hom^C(L, cofree(M0)).
struct CofreeAdjunction {
    HomSpace plain;     // Hom_A(L, M0)
    Comodule cofree;    // M0 (x) C
    HomSpace colinear;  // Hom^C(L, M0 (x) C)
    Matrix alpha;       // colinear-coords x plain-coords
    Matrix alpha_inv;
};

inline CofreeAdjunction cofree_hom_bijection(const Comodule& l, const Bimodule& m0) {
    const FieldSpec& f = l.field();
    const Coring& c = l.coring;
    HomSpace plain = hom_space(l.carrier, m0, {.left_linear = false, .right_linear = true});
    Comodule cof = cofree_comodule(c, m0);
    HomSpace col = colinear_hom(l, cof);
    TensorSpace m0c(c.base, m0, c.carrier); // = carrier presentation of cof
    Matrix alpha(f, col.dim(), plain.dim());
    for (std::size_t k = 0; k < plain.dim(); ++k) {
        // alpha(f) = (f (x) C) o rho_L.
        Matrix fx = m0c.projection() * Matrix::kron(plain.basis[k], Matrix::identity(f, c.dim())) *
                    l.mc.section() * l.rho;
        alpha.set_col(k, col.coords_of(fx));
    }
    Matrix alpha_inv(f, plain.dim(), col.dim());
    for (std::size_t k = 0; k < col.dim(); ++k) {
        // alpha^{-1}(phi) = (M0 (x) eps) o phi.
        Matrix back = contract_right(m0, c.base) *
                      Matrix::kron(Matrix::identity(f, m0.dim()), c.counit) *
                      m0c.section() * col.basis[k];
        alpha_inv.set_col(k, plain.coords_of(back));
    }
    return {std::move(plain), std::move(cof), std::move(col), std::move(alpha), std::move(alpha_inv)};
}

/// The canonical identification Hom^C(Sigma, M) ~ M square Sigma^*:
/// phi -> sum_i phi(e_i) (x) f_i, inverse m (x) g -> (u -> m g(u)).
struct HomCotensorIso {
    HomSpace homs;    // Hom^C(Sigma, M)
    Cotensor cot;     // M square Sigma^*
    Matrix forward;   // cot-coords x hom-coords
    Matrix backward;
};

inline HomCotensorIso hom_cotensor_iso(const Comodule& sigma, const Comodule& m,
                                       const DualData& dual, const DualBasis& db,
                                       const LeftComodule& dual_left) {
    const FieldSpec& f = sigma.field();
    HomSpace h = colinear_hom(sigma, m);
    Cotensor ct = cotensor(m, dual_left);
    auto incl_inv = ct.dim() > 0 ? ct.inclusion.left_inverse()
                                 : std::optional<Matrix>(Matrix(f, 0, ct.ambient.dim()));
    if (!incl_inv) throw std::logic_error("cotensor inclusion is not injective");
    Matrix fwd(f, ct.dim(), h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) {
        Vec acc(f, ct.ambient.dim(), 1);
        for (const auto& [ei, fi] : db.pairs)
            acc = acc + ct.ambient.pure(h.basis[k] * ei, fi);
        Vec coords = *incl_inv * acc;
        if (ct.inclusion * coords != acc)
            throw std::logic_error("image does not lie in the cotensor");
        fwd.set_col(k, coords);
    }
    Matrix bwd(f, h.dim(), ct.dim());
    for (std::size_t k = 0; k < ct.dim(); ++k) {
        Vec amb = ct.ambient.section() * (ct.inclusion.col(k));
        Matrix phi(f, m.dim(), sigma.dim());
        for (std::size_t u = 0; u < sigma.dim(); ++u) {
            Vec acc(f, m.dim(), 1);
            for (std::size_t mi = 0; mi < m.dim(); ++mi)
                for (std::size_t gi = 0; gi < dual.module.dim(); ++gi) {
                    const Scalar& coef = amb.at(mi * dual.module.dim() + gi, 0);
                    if (coef.is_zero()) continue;
                    Vec ga = dual.eval(Matrix::basis_vector(f, dual.module.dim(), gi),
                                       sigma.carrier.basis(u));
                    acc = acc + (m.carrier.ract(ga) * m.carrier.basis(mi)) * coef;
                }
            phi.set_col(u, acc);
        }
        bwd.set_col(k, h.coords_of(phi));
    }
    return {std::move(h), std::move(ct), std::move(fwd), std::move(bwd)};
}

} // namespace coringlab
