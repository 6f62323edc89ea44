#pragma once

#include "comatrix.hpp"

namespace coringlab {

enum class DualSide { Left, Right };

/// The dual ring *C (left dual, (f#g)(c) = g(c_(1) f(c_(2)))) or C* (right
/// dual, (f#g)(c) = f(g(c_(1)) c_(2))), with unit eps.
struct DualRing {
    Coring coring;
    DualSide side;
    HomSpace maps;    // left dual: _A Hom(C, A); right dual: Hom_A(C, A)
    Algebra algebra;  // on the hom-space basis

    std::size_t dim() const { return maps.dim(); }

    /// The image of a in A under the canonical embedding: a -> eps(- a)
    /// (left dual) or a -> a eps(-) is NOT used; the left dual embedding
    /// i(a)(c) = eps(c a) makes c.f the restriction of the comodule action.
    Vec embed_base(const Vec& a) const {
        if (side == DualSide::Left)
            return maps.coords_of(coring.counit * coring.carrier.ract(a));
        return maps.coords_of(coring.base.lmul(a) * coring.counit);
    }
};

namespace detail {

inline Vec dual_product(const Coring& c, const HomSpace& maps, DualSide side,
                        const Matrix& f_map, const Matrix& g_map) {
    const FieldSpec& k = c.field();
    Matrix prod(k, c.base.dim(), c.dim());
    for (std::size_t j = 0; j < c.dim(); ++j) {
        Vec amb = c.cc.section() * c.delta.col(j); // c_(1) (x) c_(2)
        Vec acc(k, c.base.dim(), 1);
        for (std::size_t x = 0; x < c.dim(); ++x)
            for (std::size_t y = 0; y < c.dim(); ++y) {
                const Scalar& coef = amb.at(x * c.dim() + y, 0);
                if (coef.is_zero()) continue;
                if (side == DualSide::Left) {
                    // g(c_(1) f(c_(2)))
                    Vec fa = f_map * c.carrier.basis(y);
                    Vec arg = c.carrier.ract(fa) * c.carrier.basis(x);
                    acc = acc + (g_map * arg) * coef;
                } else {
                    // f(g(c_(1)) c_(2))
                    Vec ga = g_map * c.carrier.basis(x);
                    Vec arg = c.carrier.lact(ga) * c.carrier.basis(y);
                    acc = acc + (f_map * arg) * coef;
                }
            }
        prod.set_col(j, acc);
    }
    return maps.coords_of(prod);
}

} // namespace detail

inline DualRing dual_ring(const Coring& c, DualSide side) {
    Bimodule a_reg = Bimodule::regular(c.base);
    HomSpace maps = side == DualSide::Left
                        ? hom_space(c.carrier, a_reg, {.left_linear = true, .right_linear = false})
                        : hom_space(c.carrier, a_reg, {.left_linear = false, .right_linear = true});
    const FieldSpec& k = c.field();
    std::size_t d = maps.dim();
    std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d, Vec(k, d, 1)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            mult[i][j] = detail::dual_product(c, maps, side, maps.basis[i], maps.basis[j]);
    Vec unit = maps.coords_of(c.counit);
    Algebra alg(k, d, std::move(mult), std::move(unit),
                side == DualSide::Left ? "*" + c.label : c.label + "*");
    return DualRing{c, side, std::move(maps), std::move(alg)};
}

/// The right *C-action on C itself: c . f = c_(1) f(c_(2)).
inline std::vector<Matrix> star_c_action_on_coring(const Coring& c, const DualRing& star) {
    const FieldSpec& k = c.field();
    std::vector<Matrix> acts;
    for (std::size_t t = 0; t < star.dim(); ++t) {
        Matrix act(k, c.dim(), c.dim());
        for (std::size_t j = 0; j < c.dim(); ++j) {
            Vec amb = c.cc.section() * c.delta.col(j);
            Vec acc(k, c.dim(), 1);
            for (std::size_t x = 0; x < c.dim(); ++x)
                for (std::size_t y = 0; y < c.dim(); ++y) {
                    const Scalar& coef = amb.at(x * c.dim() + y, 0);
                    if (coef.is_zero()) continue;
                    Vec fa = star.maps.basis[t] * c.carrier.basis(y);
                    acc = acc + (c.carrier.ract(fa) * c.carrier.basis(x)) * coef;
                }
            act.set_col(j, acc);
        }
        acts.push_back(std::move(act));
    }
    return acts;
}

/// The left C*-action on C: f . c = f(c_(1)) c_(2).
inline std::vector<Matrix> cstar_action_on_coring(const Coring& c, const DualRing& rstar) {
    const FieldSpec& k = c.field();
    std::vector<Matrix> acts;
    for (std::size_t t = 0; t < rstar.dim(); ++t) {
        Matrix act(k, c.dim(), c.dim());
        for (std::size_t j = 0; j < c.dim(); ++j) {
            Vec amb = c.cc.section() * c.delta.col(j);
            Vec acc(k, c.dim(), 1);
            for (std::size_t x = 0; x < c.dim(); ++x)
                for (std::size_t y = 0; y < c.dim(); ++y) {
                    const Scalar& coef = amb.at(x * c.dim() + y, 0);
                    if (coef.is_zero()) continue;
                    Vec fa = rstar.maps.basis[t] * c.carrier.basis(x);
                    acc = acc + (c.carrier.lact(fa) * c.carrier.basis(y)) * coef;
                }
            act.set_col(j, acc);
        }
        acts.push_back(std::move(act));
    }
    return acts;
}

/// The dual canonical maps *can: *C -> _B End(Sigma)^op and
/// can*: C* -> End_B(Sigma^*), with ring-morphism checks and verdicts.
struct DualCanResult {
    DualRing star_c;           // *C
    DualRing c_star;           // C*
    HomSpace b_endos;          // _B End(Sigma)
    HomSpace dual_endos;       // End_B(Sigma^*)
    Matrix star_can;           // b_endos-coords x *C-coords
    Matrix can_star;           // dual_endos-coords x C*-coords
    bool star_can_ring_morphism = false;
    bool can_star_ring_morphism = false;
    bool star_can_bijective = false;
    bool can_star_bijective = false;
};

inline DualCanResult dual_can(const Coring& c, const Comodule& sigma, const DualData& dual) {
    const FieldSpec& k = c.field();
    DualCanResult r;
    r.star_c = dual_ring(c, DualSide::Left);
    r.c_star = dual_ring(c, DualSide::Right);

    Bimodule sb = sigma.carrier;
    r.b_endos = hom_space(sb, sb, {.left_linear = true, .right_linear = false});
    std::vector<Matrix> acts = star_c_right_actions(sigma, r.star_c.maps);
    r.star_can = Matrix(k, r.b_endos.dim(), r.star_c.dim());
    bool ok = true;
    for (std::size_t t = 0; t < r.star_c.dim(); ++t) {
        if (!r.b_endos.contains(acts[t])) { ok = false; break; }
        r.star_can.set_col(t, r.b_endos.coords_of(acts[t]));
    }
    if (ok) {
        // Anti-multiplicativity: *can(f#g) = *can(g) o *can(f).
        for (std::size_t i = 0; i < r.star_c.dim() && ok; ++i)
            for (std::size_t j = 0; j < r.star_c.dim() && ok; ++j) {
                Vec prod = r.star_c.algebra.mul(r.star_c.algebra.basis(i), r.star_c.algebra.basis(j));
                Matrix lhs(k, sigma.dim(), sigma.dim());
                for (std::size_t t = 0; t < r.star_c.dim(); ++t)
                    if (!prod.at(t, 0).is_zero()) lhs = lhs + acts[t] * prod.at(t, 0);
                ok = (lhs == acts[j] * acts[i]);
            }
        Vec unit_img = r.star_can * r.star_c.algebra.unit();
        ok = ok && (r.b_endos.from_coords(unit_img).is_identity());
    }
    r.star_can_ring_morphism = ok;
    r.star_can_bijective = r.star_can.is_bijective();

    // can*(phi)(f) = phi o (f (x) C) o rho.
    r.dual_endos = hom_space(dual.module, dual.module, {.left_linear = false, .right_linear = true});
    std::vector<Matrix> images;
    for (std::size_t t = 0; t < r.c_star.dim(); ++t) {
        Matrix endo(k, dual.module.dim(), dual.module.dim());
        for (std::size_t g = 0; g < dual.module.dim(); ++g) {
            // The functional u -> phi(f_g(u_[0]) u_[1]).
            Matrix func(k, c.base.dim(), sigma.dim());
            for (std::size_t u = 0; u < sigma.dim(); ++u) {
                Vec amb = sigma.mc.section() * sigma.rho.col(u);
                Vec acc(k, c.base.dim(), 1);
                for (std::size_t mi = 0; mi < sigma.dim(); ++mi)
                    for (std::size_t ci = 0; ci < c.dim(); ++ci) {
                        const Scalar& coef = amb.at(mi * c.dim() + ci, 0);
                        if (coef.is_zero()) continue;
                        Vec fa = dual.eval(Matrix::basis_vector(k, dual.module.dim(), g),
                                           sigma.carrier.basis(mi));
                        Vec arg = c.carrier.lact(fa) * c.carrier.basis(ci);
                        acc = acc + (r.c_star.maps.basis[t] * arg) * coef;
                    }
                func.set_col(u, acc);
            }
            endo.set_col(g, dual.maps.coords_of(func));
        }
        images.push_back(std::move(endo));
    }
    ok = true;
    r.can_star = Matrix(k, r.dual_endos.dim(), r.c_star.dim());
    for (std::size_t t = 0; t < r.c_star.dim(); ++t) {
        if (!r.dual_endos.contains(images[t])) { ok = false; break; }
        r.can_star.set_col(t, r.dual_endos.coords_of(images[t]));
    }
    if (ok) {
        // Straight multiplicativity: can*(f#g) = can*(f) o can*(g).
        for (std::size_t i = 0; i < r.c_star.dim() && ok; ++i)
            for (std::size_t j = 0; j < r.c_star.dim() && ok; ++j) {
                Vec prod = r.c_star.algebra.mul(r.c_star.algebra.basis(i), r.c_star.algebra.basis(j));
                Matrix lhs(k, dual.module.dim(), dual.module.dim());
                for (std::size_t t = 0; t < r.c_star.dim(); ++t)
                    if (!prod.at(t, 0).is_zero()) lhs = lhs + images[t] * prod.at(t, 0);
                ok = (lhs == images[i] * images[j]);
            }
        Vec unit_img = r.can_star * r.c_star.algebra.unit();
        ok = ok && (r.dual_endos.from_coords(unit_img).is_identity());
    }
    r.can_star_ring_morphism = ok;
    r.can_star_bijective = r.can_star.is_bijective();
    return r;
}

/// The Morita context of a comodule: (T, *C, Sigma, Q, tau, mu) with
/// Q = { q: C -> Sigma^* left A-linear colinear } cut out by the pointwise
/// colinearity law, mu(q (x) u)(c) = q(c)(u), and
/// tau(u (x) q)(v) = u_[0] (q(u_[1])(v)).
struct MoritaContext {
    EndData end;             // T and Sigma as (T, A)
    DualRing star_c;         // *C
    DualData dual;           // Sigma^*
    DualBasis db;
    HomSpace q_space;        // maps C -> Sigma^* (as matrices over dual coords)
    Bimodule sigma;          // Sigma in _T M_{*C}
    Bimodule q_mod;          // Q in _{*C} M_T
    TensorSpace q_sigma;     // Q (x)_T Sigma
    TensorSpace sigma_q;     // Sigma (x)_{*C} Q
    Matrix mu;               // *C-coords x q_sigma-coords
    Matrix tau;              // T-coords x sigma_q-coords
    bool bilinearity_ok = false;     // Lemma-4.3 style bimodule-map checks
    bool associativity_ok = false;   // Thm-4.4 proof identities
    bool image_in_rational_ok = true; // Im mu inside *C (finite-dim triviality)

    std::size_t dim_t() const { return end.algebra.dim(); }
};

/// Membership law for Q, evaluated pointwise on basis pairs:
/// c_(1) (q(c_(2))(u)) = (q(c)(u_[0])) u_[1].
inline Matrix q_membership_operator(const Coring& c, const Comodule& sigma, const DualData& dual) {
    const FieldSpec& k = c.field();
    std::size_t dq = dual.module.dim();
    std::vector<Matrix> blocks;
    // Left A-linearity of q.
    for (std::size_t i = 0; i < c.base.dim(); ++i)
        blocks.push_back(operator_matrix(k, dq, c.dim(), [&](const Matrix& q) {
            return q * c.carrier.lact_basis(i) - dual.module.lact_basis(i) * q;
        }));
    // The coaction law on each (basis c, basis u) pair.
    blocks.push_back(operator_matrix(k, dq, c.dim(), [&](const Matrix& q) {
        Matrix out(k, c.dim() * sigma.dim() * c.dim(), 1);
        std::size_t row = 0;
        for (std::size_t cj = 0; cj < c.dim(); ++cj) {
            Vec dc = c.cc.section() * c.delta.col(cj);
            for (std::size_t u = 0; u < sigma.dim(); ++u) {
                Vec lhs(k, c.dim(), 1);
                for (std::size_t x = 0; x < c.dim(); ++x)
                    for (std::size_t y = 0; y < c.dim(); ++y) {
                        const Scalar& coef = dc.at(x * c.dim() + y, 0);
                        if (coef.is_zero()) continue;
                        Vec qa = dual.eval(q * c.carrier.basis(y), sigma.carrier.basis(u));
                        lhs = lhs + (c.carrier.ract(qa) * c.carrier.basis(x)) * coef;
                    }
                Vec rho_u = sigma.mc.section() * sigma.rho.col(u);
                Vec rhs(k, c.dim(), 1);
                for (std::size_t mi = 0; mi < sigma.dim(); ++mi)
                    for (std::size_t ci = 0; ci < c.dim(); ++ci) {
                        const Scalar& coef = rho_u.at(mi * c.dim() + ci, 0);
                        if (coef.is_zero()) continue;
                        Vec qa = dual.eval(q * c.carrier.basis(cj), sigma.carrier.basis(mi));
                        rhs = rhs + (c.carrier.lact(qa) * c.carrier.basis(ci)) * coef;
                    }
                Vec diff = lhs - rhs;
                for (std::size_t x = 0; x < c.dim(); ++x) out.at(row + x, 0) = diff.at(x, 0);
                row += c.dim();
            }
        }
        return out;
    }));
    Matrix stacked(k, 0, dq * c.dim());
    for (const auto& b : blocks) stacked = Matrix::vcat(stacked, b);
    return stacked;
}

inline MoritaContext build_context(const Coring& c, const Comodule& sigma_in) {
    const FieldSpec& k = c.field();
    MoritaContext ctx;
    ctx.end = end_comodule_algebra(sigma_in);
    ctx.star_c = dual_ring(c, DualSide::Left);
    ctx.dual = dual_module(sigma_in.carrier);
    auto db = dual_basis(sigma_in.carrier, ctx.dual);
    if (!db) throw PreconditionError("build_context: Sigma has no dual basis");
    ctx.db = std::move(*db);

    // Q as the kernel of the membership system; elements are matrices
    // (dual coords) x (dim C).
    Matrix sys = q_membership_operator(c, sigma_in, ctx.dual);
    Matrix ker = sys.kernel();
    HomSpace q;
    q.source = c.carrier;
    q.target = ctx.dual.module;
    q.basis_cols = ker;
    for (std::size_t j = 0; j < ker.cols(); ++j)
        q.basis.push_back(Matrix::unvec(ker.col(j), ctx.dual.module.dim(), c.dim()));
    if (ker.cols() > 0) {
        auto li = ker.left_inverse();
        if (!li) throw std::logic_error("Q basis is not independent");
        q.coord_proj = *li;
    } else {
        q.coord_proj = Matrix(k, 0, ctx.dual.module.dim() * c.dim());
    }
    ctx.q_space = std::move(q);

    // Sigma in _T M_{*C}.
    std::vector<Matrix> racts = star_c_right_actions(sigma_in, ctx.star_c.maps);
    ctx.sigma = Bimodule(ctx.end.algebra, ctx.star_c.algebra, sigma_in.dim(),
                         ctx.end.homs.basis, racts, sigma_in.carrier.label(), false);

    // Q in _{*C} M_T: (f.q)(c) = q(c_(1) f(c_(2))), (q.t)(c) = q(c) o t.
    std::vector<Matrix> c_racts = star_c_action_on_coring(c, ctx.star_c);
    std::vector<Matrix> q_l, q_r;
    for (std::size_t t = 0; t < ctx.star_c.dim(); ++t) {
        Matrix m(k, ctx.q_space.dim(), ctx.q_space.dim());
        for (std::size_t j = 0; j < ctx.q_space.dim(); ++j)
            m.set_col(j, ctx.q_space.coords_of(ctx.q_space.basis[j] * c_racts[t]));
        q_l.push_back(std::move(m));
    }
    for (std::size_t t = 0; t < ctx.end.algebra.dim(); ++t) {
        // Right T-action on Sigma^*: g o t, i.e. the dual of t acting.
        Matrix dual_t(k, ctx.dual.module.dim(), ctx.dual.module.dim());
        for (std::size_t g = 0; g < ctx.dual.module.dim(); ++g)
            dual_t.set_col(g, ctx.dual.maps.coords_of(ctx.dual.maps.basis[g] * ctx.end.homs.basis[t]));
        Matrix m(k, ctx.q_space.dim(), ctx.q_space.dim());
        for (std::size_t j = 0; j < ctx.q_space.dim(); ++j)
            m.set_col(j, ctx.q_space.coords_of(dual_t * ctx.q_space.basis[j]));
        q_r.push_back(std::move(m));
    }
    ctx.q_mod = Bimodule(ctx.star_c.algebra, ctx.end.algebra, ctx.q_space.dim(),
                         std::move(q_l), std::move(q_r), "Q", false);

    // mu and tau on the balanced tensor quotients.
    ctx.q_sigma = TensorSpace(ctx.end.algebra, ctx.q_mod, ctx.sigma);
    ctx.sigma_q = TensorSpace(ctx.star_c.algebra, ctx.sigma, ctx.q_mod);

    Matrix mu_amb(k, ctx.star_c.dim(), ctx.q_space.dim() * sigma_in.dim());
    for (std::size_t qi = 0; qi < ctx.q_space.dim(); ++qi)
        for (std::size_t u = 0; u < sigma_in.dim(); ++u) {
            // mu(q (x) u)(c) = q(c)(u) as an element of *C.
            Matrix func(k, c.base.dim(), c.dim());
            for (std::size_t cj = 0; cj < c.dim(); ++cj)
                func.set_col(cj, ctx.dual.eval(ctx.q_space.basis[qi] * c.carrier.basis(cj),
                                               sigma_in.carrier.basis(u)));
            mu_amb.set_col(qi * sigma_in.dim() + u, ctx.star_c.maps.coords_of(func));
        }
    ctx.mu = mu_amb * ctx.q_sigma.section();

    Matrix tau_amb(k, ctx.end.algebra.dim(), sigma_in.dim() * ctx.q_space.dim());
    for (std::size_t u = 0; u < sigma_in.dim(); ++u)
        for (std::size_t qi = 0; qi < ctx.q_space.dim(); ++qi) {
            // tau(u (x) q): v -> u_[0] (q(u_[1])(v)).
            Matrix endo(k, sigma_in.dim(), sigma_in.dim());
            Vec rho_u = sigma_in.mc.section() * sigma_in.rho.col(u);
            for (std::size_t v = 0; v < sigma_in.dim(); ++v) {
                Vec acc(k, sigma_in.dim(), 1);
                for (std::size_t mi = 0; mi < sigma_in.dim(); ++mi)
                    for (std::size_t ci = 0; ci < c.dim(); ++ci) {
                        const Scalar& coef = rho_u.at(mi * c.dim() + ci, 0);
                        if (coef.is_zero()) continue;
                        Vec qa = ctx.dual.eval(ctx.q_space.basis[qi] * c.carrier.basis(ci),
                                               sigma_in.carrier.basis(v));
                        acc = acc + (sigma_in.carrier.ract(qa) * sigma_in.carrier.basis(mi)) * coef;
                    }
                endo.set_col(v, acc);
            }
            tau_amb.set_col(u * ctx.q_space.dim() + qi, ctx.end.homs.coords_of(endo));
        }
    ctx.tau = tau_amb * ctx.sigma_q.section();

    // Bilinearity of mu and tau as bimodule maps.
    {
        LinearMap mu_map(ctx.q_sigma.space(), Bimodule::regular(ctx.star_c.algebra), ctx.mu);
        LinearMap tau_map(ctx.sigma_q.space(), Bimodule::regular(ctx.end.algebra), ctx.tau);
        ctx.bilinearity_ok = mu_map.is_left_linear() && mu_map.is_right_linear() &&
                             tau_map.is_left_linear() && tau_map.is_right_linear();
    }

    // Associativity identities on basis triples:
    // mu(q (x) u) . p = q . tau(u (x) p) and tau(u (x) q) . v = u . mu(q (x) v).
    bool assoc = true;
    for (std::size_t qi = 0; qi < ctx.q_space.dim() && assoc; ++qi)
        for (std::size_t u = 0; u < sigma_in.dim() && assoc; ++u)
            for (std::size_t pi = 0; pi < ctx.q_space.dim() && assoc; ++pi) {
                Vec muqu = ctx.mu * ctx.q_sigma.pure(Matrix::basis_vector(k, ctx.q_space.dim(), qi),
                                                     sigma_in.carrier.basis(u));
                Vec lhs = ctx.q_mod.lact(muqu) * Matrix::basis_vector(k, ctx.q_space.dim(), pi);
                Vec taup = ctx.tau * ctx.sigma_q.pure(sigma_in.carrier.basis(u),
                                                      Matrix::basis_vector(k, ctx.q_space.dim(), pi));
                Vec rhs = ctx.q_mod.ract(taup) * Matrix::basis_vector(k, ctx.q_space.dim(), qi);
                assoc = (lhs == rhs);
            }
    for (std::size_t u = 0; u < sigma_in.dim() && assoc; ++u)
        for (std::size_t qi = 0; qi < ctx.q_space.dim() && assoc; ++qi)
            for (std::size_t v = 0; v < sigma_in.dim() && assoc; ++v) {
                Vec tauq = ctx.tau * ctx.sigma_q.pure(sigma_in.carrier.basis(u),
                                                      Matrix::basis_vector(k, ctx.q_space.dim(), qi));
                Vec lhs = ctx.sigma.lact(tauq) * sigma_in.carrier.basis(v);
                Vec muqv = ctx.mu * ctx.q_sigma.pure(Matrix::basis_vector(k, ctx.q_space.dim(), qi),
                                                     sigma_in.carrier.basis(v));
                Vec rhs = ctx.sigma.ract(muqv) * sigma_in.carrier.basis(u);
                assoc = (lhs == rhs);
            }
    ctx.associativity_ok = assoc;
    return ctx;
}

struct Strictness {
    bool tau_surjective = false;
    bool mu_surjective = false;
    bool tau_bijective = false;
    bool mu_bijective = false;
    bool surjective_implies_bijective_ok = true;

    bool strict() const { return tau_surjective && mu_surjective; }
};

inline Strictness strictness(const MoritaContext& ctx) {
    Strictness s;
    s.tau_surjective = ctx.tau.is_surjective();
    s.mu_surjective = ctx.mu.is_surjective();
    s.tau_bijective = ctx.tau.is_bijective();
    s.mu_bijective = ctx.mu.is_bijective();
    if (s.tau_surjective && s.mu_surjective)
        s.surjective_implies_bijective_ok = s.tau_bijective && s.mu_bijective;
    return s;
}

/// omega_N: N (x)_{*C} Q -> Hom^C(Sigma, N), n (x) q -> (u -> n mu(q (x) u)),
/// with Sigma standing in for *(Sigma^*). Fails loudly on a dimension
/// mismatch between Sigma and *(Sigma^*).
struct OmegaResult {
    TensorSpace n_q;
    HomSpace hom;
    Matrix mat;
    bool bijective = false;
};

inline OmegaResult omega_map(const Coring& c, const Comodule& sigma, const MoritaContext& ctx,
                             const Comodule& n) {
    const FieldSpec& k = c.field();
    HomSpace double_dual = hom_space(ctx.dual.module, Bimodule::regular(c.base),
                                     {.left_linear = true, .right_linear = false});
    if (double_dual.dim() != sigma.dim())
        throw UnsupportedInstance("omega_map: dim *(Sigma^*) = " + std::to_string(double_dual.dim()) +
                                  " differs from dim Sigma = " + std::to_string(sigma.dim()));
    // N as a right *C-module through its coaction.
    std::vector<Matrix> n_acts = star_c_right_actions(n, ctx.star_c.maps);
    Bimodule n_mod(Algebra::ground(k), ctx.star_c.algebra, n.dim(),
                   {Matrix::identity(k, n.dim())}, n_acts, n.carrier.label(), false);
    OmegaResult r;
    r.n_q = TensorSpace(ctx.star_c.algebra, n_mod, ctx.q_mod);
    r.hom = colinear_hom(sigma, n);
    Matrix omega_amb(k, r.hom.dim(), n.dim() * ctx.q_space.dim());
    for (std::size_t nj = 0; nj < n.dim(); ++nj)
        for (std::size_t qi = 0; qi < ctx.q_space.dim(); ++qi) {
            Matrix phi(k, n.dim(), sigma.dim());
            for (std::size_t u = 0; u < sigma.dim(); ++u) {
                Vec muqu = ctx.mu * ctx.q_sigma.pure(Matrix::basis_vector(k, ctx.q_space.dim(), qi),
                                                     sigma.carrier.basis(u));
                Vec acc(k, n.dim(), 1);
                for (std::size_t t = 0; t < ctx.star_c.dim(); ++t)
                    if (!muqu.at(t, 0).is_zero())
                        acc = acc + (n_acts[t] * n.carrier.basis(nj)) * muqu.at(t, 0);
                phi.set_col(u, acc);
            }
            omega_amb.set_col(nj * ctx.q_space.dim() + qi, r.hom.coords_of(phi));
        }
    r.mat = omega_amb * r.n_q.section();
    r.bijective = r.mat.is_bijective();
    return r;
}

/// Comparison with the module-theoretic context of Sigma over *C:
/// T-hat = End_{*C}(Sigma), Q-hat = Hom_{*C}(Sigma, *C), with
/// alpha(q) = *q, *q(u)(c) = q(c)(u). Verifies the context-morphism
/// equations and, when C is f.g. projective on the left, bijectivity.
struct ModuleContextComparison {
    HomSpace t_hat;  // End_{*C}(Sigma)
    HomSpace q_hat;  // Hom_{*C}(Sigma, *C): matrices (dim *C) x (dim Sigma)
    Matrix alpha;    // q_hat-coords x Q-coords
    bool t_included = false;        // T subset T-hat
    bool mu_compatible = false;     // mu = mu-hat o (alpha (x) Sigma)
    bool tau_compatible = false;    // tau = tau-hat o (Sigma (x) alpha)
    bool alpha_bijective = false;
    bool t_equal = false;           // T-hat subset T as well
};

inline ModuleContextComparison compare_with_module_context(const Coring& c,
                                                           const Comodule& sigma_in,
                                                           const MoritaContext& ctx) {
    const FieldSpec& k = c.field();
    ModuleContextComparison r;
    Bimodule sigma_kstar(Algebra::ground(k), ctx.star_c.algebra, sigma_in.dim(),
                         {Matrix::identity(k, sigma_in.dim())},
                         star_c_right_actions(sigma_in, ctx.star_c.maps),
                         sigma_in.carrier.label(), false);
    Bimodule starc_right(Algebra::ground(k), ctx.star_c.algebra, ctx.star_c.dim(),
                         {Matrix::identity(k, ctx.star_c.dim())},
                         [&] {
                             std::vector<Matrix> v;
                             for (std::size_t i = 0; i < ctx.star_c.dim(); ++i)
                                 v.push_back(ctx.star_c.algebra.rmul_basis(i));
                             return v;
                         }(),
                         "*C", false);
    r.t_hat = hom_space(sigma_kstar, sigma_kstar, {.left_linear = false, .right_linear = true});
    r.q_hat = hom_space(sigma_kstar, starc_right, {.left_linear = false, .right_linear = true});

    r.t_included = true;
    for (const auto& t : ctx.end.homs.basis)
        if (!r.t_hat.contains(t)) { r.t_included = false; break; }
    r.t_equal = r.t_included && r.t_hat.dim() == ctx.end.homs.dim();

    // alpha(q)(u) = (c -> q(c)(u)).
    r.alpha = Matrix(k, r.q_hat.dim(), ctx.q_space.dim());
    bool in_space = true;
    std::vector<Matrix> alpha_imgs;
    for (std::size_t qi = 0; qi < ctx.q_space.dim(); ++qi) {
        Matrix img(k, ctx.star_c.dim(), sigma_in.dim());
        for (std::size_t u = 0; u < sigma_in.dim(); ++u) {
            Matrix func(k, c.base.dim(), c.dim());
            for (std::size_t cj = 0; cj < c.dim(); ++cj)
                func.set_col(cj, ctx.dual.eval(ctx.q_space.basis[qi] * c.carrier.basis(cj),
                                               sigma_in.carrier.basis(u)));
            img.set_col(u, ctx.star_c.maps.coords_of(func));
        }
        if (!r.q_hat.contains(img)) { in_space = false; break; }
        r.alpha.set_col(qi, r.q_hat.coords_of(img));
        alpha_imgs.push_back(std::move(img));
    }
    if (!in_space) return r;
    r.alpha_bijective = r.alpha.is_bijective();

    // mu-hat(lambda (x) u) = lambda(u); tau-hat(u (x) lambda) = u . lambda(v).
    bool mu_ok = true, tau_ok = true;
    for (std::size_t qi = 0; qi < ctx.q_space.dim(); ++qi)
        for (std::size_t u = 0; u < sigma_in.dim(); ++u) {
            Vec mu_val = ctx.mu * ctx.q_sigma.pure(Matrix::basis_vector(k, ctx.q_space.dim(), qi),
                                                   sigma_in.carrier.basis(u));
            Vec mu_hat_val = alpha_imgs[qi] * sigma_in.carrier.basis(u);
            if (mu_val != mu_hat_val) mu_ok = false;

            Vec tau_val = ctx.tau * ctx.sigma_q.pure(sigma_in.carrier.basis(u),
                                                     Matrix::basis_vector(k, ctx.q_space.dim(), qi));
            Matrix tau_endo = ctx.end.homs.from_coords(tau_val);
            Matrix tau_hat_endo(k, sigma_in.dim(), sigma_in.dim());
            for (std::size_t v = 0; v < sigma_in.dim(); ++v) {
                Vec lam_v = alpha_imgs[qi] * sigma_in.carrier.basis(v);
                Vec acc(k, sigma_in.dim(), 1);
                for (std::size_t t = 0; t < ctx.star_c.dim(); ++t)
                    if (!lam_v.at(t, 0).is_zero())
                        acc = acc + (sigma_kstar.ract_basis(t) * sigma_in.carrier.basis(u)) * lam_v.at(t, 0);
                tau_hat_endo.set_col(v, acc);
            }
            if (tau_endo != tau_hat_endo) tau_ok = false;
        }
    r.mu_compatible = mu_ok;
    r.tau_compatible = tau_ok;
    return r;
}

} // namespace coringlab
