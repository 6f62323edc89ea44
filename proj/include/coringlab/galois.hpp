#pragma once

#include "morita.hpp"

namespace coringlab {

/// Sigma as a (k, *C)-bimodule through its coaction.
inline Bimodule sigma_as_star_c_module(const Comodule& sigma, const DualRing& star) {
    const FieldSpec& k = sigma.field();
    return Bimodule(Algebra::ground(k), star.algebra, sigma.dim(),
                    {Matrix::identity(k, sigma.dim())},
                    star_c_right_actions(sigma, star.maps), sigma.carrier.label(), false);
}

/// Generator test through the trace ideal over *C; requires C f.g.
/// projective as a left A-module so that comodules are *C-modules.
inline bool is_generator(const Comodule& sigma, const DualRing& star) {
    if (!is_fg_projective_left(star.coring.carrier))
        throw UnsupportedInstance("generator test needs C f.g. projective as a left A-module");
    Bimodule s = sigma_as_star_c_module(sigma, star);
    Matrix ideal = trace_ideal(s.flip(), star.algebra.opposite());
    return ideal.rows() == star.algebra.dim();
}

inline bool is_progenerator(const Comodule& sigma, const DualRing& star) {
    if (!is_generator(sigma, star)) return false;
    Bimodule s = sigma_as_star_c_module(sigma, star);
    return is_fg_projective_right(s);
}

/// The full Galois report: the Def-3.4 canonical map over T = End^C(Sigma),
/// the l: B -> T comparison, faithful flatness, generator/progenerator,
/// Morita strictness, the dual canonical maps, and the theorem-consistency
/// flags for the structure theorems.
struct GaloisReport {
    EndData end;                    // T
    Matrix l_map;                   // T-coords x dim B
    bool l_iso = false;
    CoringMorphism can;             // Sigma^* (x)_T Sigma -> C
    bool can_bijective = false;
    CoringMorphism can_b;           // Sigma^* (x)_B Sigma -> C (declared base)
    bool can_b_bijective = false;
    bool faithfully_flat_t = false; // Sigma over T
    bool faithfully_flat_b = false; // Sigma over B
    std::optional<bool> generator;      // over *C; empty = unsupported instance
    std::optional<bool> progenerator;
    bool progenerator_b = false;    // Sigma as a left B-module progenerator
    DualCanResult duals;
    MoritaContext context;
    Strictness strict;
    bool c_left_fgp = false;
    bool c_right_fgp = false;

    // Thm-4.11 condition bundles (1)-(4).
    bool bundle_can_ff = false;
    bool bundle_starcan_progen = false;
    bool bundle_l_strict = false;
    bool bundle_equivalence = false;
    std::size_t equivalence_objects = 0;

    struct Flag {
        std::string name;
        bool ok;
        bool applicable;
    };
    std::vector<Flag> consistency; // theorem flags; any false is a paper contradiction

    bool consistency_ok() const {
        for (const auto& f : consistency)
            if (f.applicable && !f.ok) return false;
        return true;
    }
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDC071ULL;

/// Deterministic comodule test family for naturality-style checks: the
/// regular comodule, Sigma, and cofree comodules on A and seeded modules.
inline std::vector<Comodule> test_comodules(const Coring& c, const Comodule& sigma,
                                            std::uint64_t seed, std::size_t count) {
    std::vector<Comodule> ms;
    ms.push_back(regular_comodule(c));
    if (ms.size() < count) ms.push_back(sigma);
    if (ms.size() < count) ms.push_back(cofree_comodule(c, Bimodule::right_regular(c.base)));
    std::size_t need = count > ms.size() ? count - ms.size() : 0;
    if (need > 0) {
        auto mods = test_right_modules(c.base, seed ^ 0xA5A5, need + 1);
        for (std::size_t i = 0; i < need; ++i)
            ms.push_back(cofree_comodule(c, mods[i % mods.size()]));
    }
    return ms;
}

inline GaloisReport is_galois(const Coring& c, const Comodule& sigma,
                              std::uint64_t seed = kDefaultSeed) {
    const FieldSpec& k = c.field();
    const Algebra& b = sigma.carrier.left_algebra();
    GaloisReport r;

    ComoduleVerdict cv = check_comodule(sigma);
    if (!cv.ok)
        throw InputError("is_galois: Sigma is not a comodule (" + cv.failing.front() + ")");

    r.end = end_comodule_algebra(sigma);

    // l: B -> T, l(b) = left multiplication by b.
    r.l_map = Matrix(k, r.end.algebra.dim(), b.dim());
    bool l_lands_in_t = true;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (!r.end.homs.contains(sigma.carrier.lact_basis(i))) { l_lands_in_t = false; break; }
        r.l_map.set_col(i, r.end.homs.coords_of(sigma.carrier.lact_basis(i)));
    }
    if (!l_lands_in_t)
        throw InputError("is_galois: the B-action on Sigma is not colinear");
    r.l_iso = r.l_map.is_bijective();

    // can over T (Def-3.4 form) and over the declared base B.
    ComatrixData cm_t = comatrix_coring(r.end.sigma_t);
    Comodule sigma_t_comod = make_comodule(c, r.end.sigma_t, sigma.rho);
    r.can = canonical_map(c, sigma_t_comod, cm_t);
    r.can_bijective = r.can.bijective();
    ComatrixData cm_b = comatrix_coring(sigma.carrier);
    r.can_b = canonical_map(c, sigma, cm_b);
    r.can_b_bijective = r.can_b.bijective();

    r.faithfully_flat_t = is_faithfully_flat(r.end.sigma_t, r.end.algebra);
    r.faithfully_flat_b = is_faithfully_flat(sigma.carrier, b);

    r.c_left_fgp = is_fg_projective_left(c.carrier);
    r.c_right_fgp = is_fg_projective_right(c.carrier);

    r.context = build_context(c, sigma);
    r.strict = strictness(r.context);
    r.duals = dual_can(c, sigma, r.context.dual);

    if (r.c_left_fgp) {
        r.generator = is_generator(sigma, r.context.star_c);
        r.progenerator = *r.generator && is_fg_projective_right(
                                             sigma_as_star_c_module(sigma, r.context.star_c));
    }

    // Sigma as a left B-module progenerator (module-theoretic side).
    r.progenerator_b = is_fg_projective_left(sigma.carrier) &&
                       trace_ideal(sigma.carrier, b).rows() == b.dim() && sigma.dim() > 0;

    // Thm-4.11 bundles.
    r.bundle_can_ff = r.can_b_bijective && r.faithfully_flat_b;
    r.bundle_starcan_progen = r.duals.star_can_bijective && r.progenerator_b;
    r.bundle_l_strict = r.l_iso && r.strict.strict();
    {
        bool equiv = true;
        std::size_t n_objects = 0;
        auto ns = test_right_modules(b, seed, 3);
        auto ms = test_comodules(c, sigma, seed, 3);
        for (const auto& n : ns)
            for (const auto& m : ms) {
                AdjunctionWitness w = adjunction_witnesses(c, sigma, b, n, m);
                equiv = equiv && w.nu.is_bijective() && w.zeta.is_bijective();
                ++n_objects;
                if (!equiv) break;
            }
        r.bundle_equivalence = equiv;
        r.equivalence_objects = n_objects;
    }

    auto flag = [&](std::string name, bool ok, bool applicable = true) {
        r.consistency.push_back({std::move(name), ok, applicable});
    };
    flag("lemma-3.1-coring-morphism", r.can.is_morphism() && r.can_b.is_morphism());
    flag("lemma-4.3-bilinearity", r.context.bilinearity_ok);
    flag("thm-4.4-associativity", r.context.associativity_ok);
    flag("prop-4.1-can-implies-duals",
         !r.can_bijective || (r.duals.star_can_bijective && r.duals.can_star_bijective));
    flag("dual-can-ring-morphisms",
         r.duals.star_can_ring_morphism && r.duals.can_star_ring_morphism);
    bool thm38 = !(r.can_bijective && r.faithfully_flat_t) || (r.generator && *r.generator);
    flag("thm-3.8-generator", thm38, r.generator.has_value());
    bool thm39 = r.generator.has_value() &&
                 ((r.can_bijective && r.faithfully_flat_t) == *r.progenerator);
    flag("thm-3.9-progenerator", thm39, r.generator.has_value());
    bool bundles_agree = r.bundle_can_ff == r.bundle_starcan_progen &&
                         r.bundle_can_ff == r.bundle_l_strict &&
                         r.bundle_can_ff == r.bundle_equivalence;
    flag("thm-4.11-bundle-agreement", bundles_agree, r.c_left_fgp);
    flag("cor-4.10b-mu-forces-fgp", !r.strict.mu_surjective || r.c_left_fgp);
    flag("morita-surjective-implies-bijective", r.strict.surjective_implies_bijective_ok);
    return r;
}

} // namespace coringlab
