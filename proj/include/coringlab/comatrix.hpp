#pragma once

#include "colinear.hpp"

#include <random>

namespace coringlab {

/// The comatrix coring D = Sigma^* (x)_B Sigma of a (B,A)-bimodule with a
/// dual basis, with its two canonical coactions.
struct ComatrixData {
    Bimodule sigma;          // (B, A)
    DualData dual;           // Sigma^*
    DualBasis db;
    TensorSpace presentation; // Sigma^* (x)_B Sigma
    Coring coring;            // D
    Comodule sigma_coaction;      // rho^r(u) = e (x) u
    LeftComodule dual_coaction;   // rho^l(f) = f (x) e
};

inline ComatrixData comatrix_coring(const Bimodule& sigma) {
    const FieldSpec& f = sigma.field();
    const Algebra& a = sigma.right_algebra();
    const Algebra& b = sigma.left_algebra();
    DualData dual = dual_module(sigma);
    auto db = dual_basis(sigma, dual);
    if (!db)
        throw PreconditionError(sigma.label() +
                                ": comatrix coring needs a dual basis (f.g. projective over A)");

    TensorSpace d(b, dual.module, sigma);
    Bimodule carrier = d.space().relabel(dual.module.label() + "(x)_" + b.label() + sigma.label());
    TensorSpace dd(a, carrier, carrier);

    // Delta(f (x) u) = sum_i (f (x) e_i) (x) (f_i (x) u); eps(f (x) u) = f(u).
    Matrix delta_amb(f, dd.dim(), dual.module.dim() * sigma.dim());
    Matrix eps_amb(f, a.dim(), dual.module.dim() * sigma.dim());
    for (std::size_t k = 0; k < dual.module.dim(); ++k)
        for (std::size_t l = 0; l < sigma.dim(); ++l) {
            Vec g = Matrix::basis_vector(f, dual.module.dim(), k);
            Vec acc(f, dd.dim(), 1);
            for (const auto& [ei, fi] : db->pairs)
                acc = acc + dd.pure(d.pure(g, ei), d.pure(fi, sigma.basis(l)));
            delta_amb.set_col(k * sigma.dim() + l, acc);
            eps_amb.set_col(k * sigma.dim() + l, dual.eval(g, sigma.basis(l)));
        }
    Coring coring{a, carrier, std::move(dd), delta_amb * d.section(), eps_amb * d.section(),
                  "comatrix(" + sigma.label() + ")"};

    // rho^r(u) = e (x) u in Sigma (x)_A D.
    TensorSpace sd(a, sigma, coring.carrier);
    Matrix rho_r(f, sd.dim(), sigma.dim());
    for (std::size_t l = 0; l < sigma.dim(); ++l) {
        Vec acc(f, sd.dim(), 1);
        for (const auto& [ei, fi] : db->pairs)
            acc = acc + sd.pure(ei, d.pure(fi, sigma.basis(l)));
        rho_r.set_col(l, acc);
    }
    Comodule sig{coring, sigma, std::move(sd), std::move(rho_r)};

    // rho^l(f) = (f (x) e_i) (x) f_i in D (x)_A Sigma^*.
    TensorSpace ds(a, coring.carrier, dual.module);
    Matrix rho_l(f, ds.dim(), dual.module.dim());
    for (std::size_t k = 0; k < dual.module.dim(); ++k) {
        Vec g = Matrix::basis_vector(f, dual.module.dim(), k);
        Vec acc(f, ds.dim(), 1);
        for (const auto& [ei, fi] : db->pairs)
            acc = acc + ds.pure(d.pure(g, ei), fi);
        rho_l.set_col(k, acc);
    }
    LeftComodule dualco = make_left_comodule(coring, dual.module, std::move(rho_l));

    ComatrixData data{sigma, std::move(dual), std::move(*db), std::move(d), std::move(coring),
                      std::move(sig), std::move(dualco)};
    CoringVerdict cv = check_coring(data.coring);
    if (!cv.ok)
        throw std::logic_error("comatrix coring fails " + cv.first_failing());
    if (!check_comodule(data.sigma_coaction).ok)
        throw std::logic_error("comatrix right coaction on Sigma is invalid");
    if (!check_left_comodule(data.dual_coaction).ok)
        throw std::logic_error("comatrix left coaction on Sigma^* is invalid");
    return data;
}

/// A verified morphism of corings.
struct CoringMorphism {
    Coring source, target;
    Matrix mat;
    bool bimodule_ok = false;
    bool comult_ok = false;
    bool counit_ok = false;

    bool is_morphism() const { return bimodule_ok && comult_ok && counit_ok; }
    bool bijective() const { return mat.is_bijective(); }
    bool surjective() const { return mat.is_surjective(); }
};

inline CoringMorphism verify_coring_morphism(const Coring& d, const Coring& c, Matrix mat) {
    CoringMorphism m{d, c, std::move(mat)};
    LinearMap lm(d.carrier, c.carrier, m.mat);
    m.bimodule_ok = lm.is_left_linear() && lm.is_right_linear();
    TensorSpace dd = d.cc, cc = c.cc;
    Matrix can_x_can = cc.projection() * Matrix::kron(m.mat, m.mat) * dd.section();
    m.comult_ok = (can_x_can * d.delta == c.delta * m.mat);
    m.counit_ok = (c.counit * m.mat == d.counit);
    return m;
}

/// can: Sigma^* (x)_B Sigma -> C, g (x) u -> g(u_[0]) u_[1], for a bicomodule
/// Sigma whose B-action is colinear (Eq-1.2.1 style).
inline CoringMorphism canonical_map(const Coring& c, const Comodule& sigma,
                                    const ComatrixData& cm) {
    const FieldSpec& f = c.field();
    ComoduleVerdict v = check_comodule(sigma);
    if (!v.ok)
        throw InputError("canonical_map: Sigma is not a (B,C)-bicomodule (" + v.failing.front() + ")");
    Matrix can_amb(f, c.dim(), cm.dual.module.dim() * sigma.dim());
    for (std::size_t k = 0; k < cm.dual.module.dim(); ++k) {
        Vec g = Matrix::basis_vector(f, cm.dual.module.dim(), k);
        for (std::size_t l = 0; l < sigma.dim(); ++l) {
            Vec amb = sigma.mc.section() * sigma.rho.col(l);
            Vec acc(f, c.dim(), 1);
            for (std::size_t mIdx = 0; mIdx < sigma.dim(); ++mIdx)
                for (std::size_t cIdx = 0; cIdx < c.dim(); ++cIdx) {
                    const Scalar& coef = amb.at(mIdx * c.dim() + cIdx, 0);
                    if (coef.is_zero()) continue;
                    Vec ga = cm.dual.eval(g, sigma.carrier.basis(mIdx));
                    acc = acc + (c.carrier.lact(ga) * c.carrier.basis(cIdx)) * coef;
                }
            can_amb.set_col(k * sigma.dim() + l, acc);
        }
    }
    return verify_coring_morphism(cm.coring, c, can_amb * cm.presentation.section());
}

/// Deterministic seeded family of right B-modules used wherever a theorem
/// quantifies over all modules: free modules and module-closure quotients.
inline std::vector<Bimodule> test_right_modules(const Algebra& b, std::uint64_t seed,
                                                std::size_t count) {
    const FieldSpec& f = b.field();
    std::vector<Bimodule> mods;
    mods.push_back(Bimodule::right_regular(b));
    if (count > 1) mods.push_back(Bimodule::free_right(b, 2, b.label() + "^2"));
    std::mt19937_64 rng(seed);
    while (mods.size() < count) {
        // Quotient of B^2 by the submodule generated by a random vector.
        Bimodule free = Bimodule::free_right(b, 2, "F");
        Vec gen(f, free.dim(), 1);
        for (std::size_t i = 0; i < free.dim(); ++i) {
            std::int64_t v = f.is_prime_field() ? std::int64_t(rng() % std::uint64_t(f.p()))
                                                : std::int64_t(rng() % 5) - 2;
            gen.at(i, 0) = Scalar::from_int(f, v);
        }
        // Close under the right action.
        Matrix span = gen.transpose();
        for (bool grew = true; grew;) {
            grew = false;
            Matrix next = span;
            for (std::size_t i = 0; i < b.dim(); ++i)
                next = Matrix::vcat(next, (free.ract_basis(i) * span.transpose()).transpose());
            next = next.row_space();
            if (next.rows() != span.row_space().rows()) grew = true;
            span = next;
        }
        Matrix sub = span.row_space();
        if (sub.rows() == 0 || sub.rows() == free.dim()) {
            mods.push_back(free.relabel("B^2#" + std::to_string(mods.size())));
            continue;
        }
        // Quotient coordinates: reuse the rref complement construction.
        std::vector<bool> is_pivot(free.dim(), false);
        {
            auto rr = sub.rref();
            for (auto p : rr.pivots) is_pivot[p] = true;
        }
        std::vector<std::size_t> free_cols;
        for (std::size_t ccol = 0; ccol < free.dim(); ++ccol)
            if (!is_pivot[ccol]) free_cols.push_back(ccol);
        std::size_t q = free_cols.size();
        Matrix sect(f, free.dim(), q), proj(f, q, free.dim());
        for (std::size_t t = 0; t < q; ++t) sect.at(free_cols[t], t) = Scalar::one(f);
        auto rr = sub.rref();
        for (std::size_t ccol = 0; ccol < free.dim(); ++ccol) {
            Vec y = Matrix::basis_vector(f, free.dim(), ccol);
            for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
                Scalar coef = y.at(rr.pivots[i], 0);
                if (coef.is_zero()) continue;
                for (std::size_t x = 0; x < free.dim(); ++x)
                    y.at(x, 0) -= coef * rr.mat.at(i, x);
            }
            for (std::size_t t = 0; t < q; ++t) proj.at(t, ccol) = y.at(free_cols[t], 0);
        }
        std::vector<Matrix> racts;
        for (std::size_t i = 0; i < b.dim(); ++i)
            racts.push_back(proj * free.ract_basis(i) * sect);
        Bimodule quot(Algebra::ground(f), b, q, {Matrix::identity(f, q)}, std::move(racts),
                      "B^2/sub#" + std::to_string(mods.size()), false);
        mods.push_back(std::move(quot));
    }
    return mods;
}

/// Unit and counit of (F, G) = (- (x)_B Sigma, Hom^C(Sigma, -)) on given
/// objects, with exact triangle-identity verdicts.
struct AdjunctionWitness {
    TensorSpace n_sigma;   // N (x)_B Sigma
    Comodule fn;           // F(N)
    HomSpace gfn;          // Hom^C(Sigma, F(N))
    Matrix nu;             // gfn-coords x dim N
    HomSpace gm;           // Hom^C(Sigma, M)
    TensorSpace gm_sigma;  // G(M) (x)_B Sigma
    Matrix zeta;           // dim M x gm_sigma-coords
    bool triangle_f = false; // zeta_{F(N)} o F(nu_N) = id
    bool triangle_g = false; // G(zeta_M) o nu_{G(M)} = id
};

/// F(N) = N (x)_B Sigma with coaction N (x) rho.
inline Comodule comodule_from_tensor(const Coring& c, const TensorSpace& n_sigma,
                                     const Comodule& sigma) {
    const FieldSpec& f = c.field();
    Bimodule carrier = n_sigma.space();
    TensorSpace t2(c.base, carrier, c.carrier);
    std::size_t dn = n_sigma.left_factor().dim();
    Matrix rho = t2.projection() *
                 Matrix::kron(n_sigma.projection(), Matrix::identity(f, c.dim())) *
                 Matrix::kron(Matrix::identity(f, dn), sigma.mc.section()) *
                 Matrix::kron(Matrix::identity(f, dn), sigma.rho) * n_sigma.section();
    return Comodule{c, carrier, std::move(t2), std::move(rho)};
}

/// Hom^C(Sigma, M) as a right B-module: (phi . b)(u) = phi(b u).
inline Bimodule hom_as_right_module(const HomSpace& h, const Algebra& b, const Bimodule& sigma) {
    const FieldSpec& f = b.field();
    std::vector<Matrix> racts;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        Matrix m(f, h.dim(), h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k)
            m.set_col(k, h.coords_of(h.basis[k] * sigma.lact_basis(i)));
        racts.push_back(std::move(m));
    }
    return Bimodule(Algebra::ground(f), b, h.dim(), {Matrix::identity(f, h.dim())},
                    std::move(racts), "Hom^C", false);
}

inline AdjunctionWitness adjunction_witnesses(const Coring& c, const Comodule& sigma,
                                              const Algebra& b, const Bimodule& n,
                                              const Comodule& m) {
    const FieldSpec& f = c.field();
    if (sigma.carrier.left_algebra() != b)
        throw InputError("adjunction_witnesses: Sigma is not a left module over the given base");
    AdjunctionWitness w;
    w.n_sigma = TensorSpace(b, n, sigma.carrier);
    w.fn = comodule_from_tensor(c, w.n_sigma, sigma);
    w.gfn = colinear_hom(sigma, w.fn);

    // nu_N(n)(u) = n (x) u.
    w.nu = Matrix(f, w.gfn.dim(), n.dim());
    for (std::size_t j = 0; j < n.dim(); ++j) {
        Matrix uj(f, w.fn.dim(), sigma.dim());
        for (std::size_t l = 0; l < sigma.dim(); ++l)
            uj.set_col(l, w.n_sigma.pure(n.basis(j), sigma.carrier.basis(l)));
        w.nu.set_col(j, w.gfn.coords_of(uj));
    }

    // zeta_M(phi (x) u) = phi(u).
    w.gm = colinear_hom(sigma, m);
    Bimodule gm_mod = hom_as_right_module(w.gm, b, sigma.carrier);
    w.gm_sigma = TensorSpace(b, gm_mod, sigma.carrier);
    Matrix zeta_amb(f, m.dim(), w.gm.dim() * sigma.dim());
    for (std::size_t k = 0; k < w.gm.dim(); ++k)
        for (std::size_t l = 0; l < sigma.dim(); ++l)
            zeta_amb.set_col(k * sigma.dim() + l, w.gm.basis[k] * sigma.carrier.basis(l));
    w.zeta = zeta_amb * w.gm_sigma.section();

    // Triangle 1: zeta_{F(N)} o (nu_N (x) Sigma) = id on N (x)_B Sigma.
    Bimodule gfn_mod = hom_as_right_module(w.gfn, b, sigma.carrier);
    TensorSpace gfn_sigma(b, gfn_mod, sigma.carrier);
    Matrix zeta_fn_amb(f, w.fn.dim(), w.gfn.dim() * sigma.dim());
    for (std::size_t k = 0; k < w.gfn.dim(); ++k)
        for (std::size_t l = 0; l < sigma.dim(); ++l)
            zeta_fn_amb.set_col(k * sigma.dim() + l, w.gfn.basis[k] * sigma.carrier.basis(l));
    Matrix zeta_fn = zeta_fn_amb * gfn_sigma.section();
    Matrix f_nu = tensor_map(w.n_sigma, gfn_sigma, w.nu, Matrix::identity(f, sigma.dim()));
    w.triangle_f = (zeta_fn * f_nu == Matrix::identity(f, w.fn.dim()));

    // Triangle 2: G(zeta_M) o nu_{G(M)} = id on G(M).
    TensorSpace gmn_sigma(b, gm_mod, sigma.carrier); // same as gm_sigma
    Comodule f_gm = comodule_from_tensor(c, gmn_sigma, sigma);
    HomSpace g_fgm = colinear_hom(sigma, f_gm);
    Matrix nu_gm(f, g_fgm.dim(), w.gm.dim());
    for (std::size_t j = 0; j < w.gm.dim(); ++j) {
        Matrix uj(f, f_gm.dim(), sigma.dim());
        for (std::size_t l = 0; l < sigma.dim(); ++l)
            uj.set_col(l, gmn_sigma.pure(Matrix::basis_vector(f, w.gm.dim(), j),
                                         sigma.carrier.basis(l)));
        nu_gm.set_col(j, g_fgm.coords_of(uj));
    }
    Matrix g_zeta(f, w.gm.dim(), g_fgm.dim());
    for (std::size_t k = 0; k < g_fgm.dim(); ++k)
        g_zeta.set_col(k, w.gm.coords_of(w.zeta * g_fgm.basis[k]));
    w.triangle_g = (g_zeta * nu_gm == Matrix::identity(f, w.gm.dim()));
    return w;
}

/// ev_M: Hom^C(Sigma, M) (x)_T Sigma -> M with a bijectivity verdict.
struct EvaluationMap {
    HomSpace homs;
    TensorSpace homs_sigma;
    Matrix mat;
    bool bijective = false;
};

inline EvaluationMap evaluation_map(const EndData& end, const Comodule& sigma, const Comodule& m) {
    const FieldSpec& f = sigma.field();
    HomSpace h = colinear_hom(sigma, m);
    Bimodule h_mod = hom_as_right_module(h, end.algebra, end.sigma_t);
    TensorSpace hs(end.algebra, h_mod, end.sigma_t);
    Matrix ev_amb(f, m.dim(), h.dim() * sigma.dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
        for (std::size_t l = 0; l < sigma.dim(); ++l)
            ev_amb.set_col(k * sigma.dim() + l, h.basis[k] * sigma.carrier.basis(l));
    Matrix ev = ev_amb * hs.section();
    bool bij = ev.is_bijective();
    return {std::move(h), std::move(hs), std::move(ev), bij};
}

/// Right *C-module structure on a right C-comodule: u . f = u_[0] f(u_[1]).
inline std::vector<Matrix> star_c_right_actions(const Comodule& m, const HomSpace& star_c) {
    const FieldSpec& f = m.field();
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < star_c.dim(); ++k) {
        Matrix act(f, m.dim(), m.dim());
        for (std::size_t j = 0; j < m.dim(); ++j) {
            Vec amb = m.mc.section() * m.rho.col(j);
            Vec acc(f, m.dim(), 1);
            for (std::size_t mi = 0; mi < m.dim(); ++mi)
                for (std::size_t ci = 0; ci < m.coring.dim(); ++ci) {
                    const Scalar& coef = amb.at(mi * m.coring.dim() + ci, 0);
                    if (coef.is_zero()) continue;
                    Vec fa = star_c.basis[k] * m.coring.carrier.basis(ci); // f(c) in A
                    acc = acc + (m.carrier.ract(fa) * m.carrier.basis(mi)) * coef;
                }
            act.set_col(j, acc);
        }
        acts.push_back(std::move(act));
    }
    return acts;
}

} // namespace coringlab
