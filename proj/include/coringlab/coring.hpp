#pragma once

#include "module_ops.hpp"

#include <cstdint>

namespace coringlab {

/// An A-coring: an (A,A)-bimodule carrier with comultiplication into the
/// (x)_A square and a counit into A. Delta and counit are stored on the
/// deterministic quotient coordinates of carrier (x)_A carrier.
struct Coring {
    Algebra base;       // A
    Bimodule carrier;   // (A,A)
    TensorSpace cc;     // C (x)_A C
    Matrix delta;       // cc.dim x dim C
    Matrix counit;      // dim A x dim C
    std::string label;

    std::size_t dim() const { return carrier.dim(); }
    const FieldSpec& field() const { return base.field(); }

    bool operator==(const Coring& o) const {
        return base == o.base && carrier == o.carrier && delta == o.delta && counit == o.counit;
    }
    bool operator!=(const Coring& o) const { return !(*this == o); }
};

/// Axioms in the order they are checked and named.
struct CoringVerdict {
    bool ok = true;
    std::vector<std::string> failing; // named failing axioms, fixed order

    std::string first_failing() const { return failing.empty() ? "" : failing.front(); }
};

inline Coring make_coring(const Algebra& a, const Bimodule& carrier, Matrix delta,
                          Matrix counit, std::string label) {
    if (carrier.left_algebra() != a || carrier.right_algebra() != a)
        throw InputError(label + ": coring carrier is not an (A,A)-bimodule over the base");
    TensorSpace cc(a, carrier, carrier);
    if (delta.rows() != cc.dim() || delta.cols() != carrier.dim())
        throw InputError(label + ": comultiplication has wrong shape");
    if (counit.rows() != a.dim() || counit.cols() != carrier.dim())
        throw InputError(label + ": counit has wrong shape");
    return Coring{a, carrier, std::move(cc), std::move(delta), std::move(counit), std::move(label)};
}

/// Ingest a comultiplication given as a k-linear map into the k-tensor
/// square (dim^2 rows) by composing with the canonical surjection.
inline Coring make_coring_from_ambient(const Algebra& a, const Bimodule& carrier,
                                       const Matrix& delta_ambient, Matrix counit,
                                       std::string label) {
    TensorSpace cc(a, carrier, carrier);
    if (delta_ambient.rows() != carrier.dim() * carrier.dim() || delta_ambient.cols() != carrier.dim())
        throw InputError(label + ": ambient comultiplication has wrong shape");
    Matrix delta = cc.projection() * delta_ambient;
    return Coring{a, carrier, std::move(cc), std::move(delta), std::move(counit), std::move(label)};
}

inline CoringVerdict check_coring(const Coring& c) {
    CoringVerdict v;
    const FieldSpec& f = c.field();
    const Bimodule& ccs = c.cc.space();
    auto fail = [&](const std::string& name) { v.ok = false; v.failing.push_back(name); };

    for (std::size_t i = 0; i < c.base.dim(); ++i)
        if (c.delta * c.carrier.lact_basis(i) != ccs.lact_basis(i) * c.delta) {
            fail("comultiplication-left-A-linearity");
            break;
        }
    for (std::size_t i = 0; i < c.base.dim(); ++i)
        if (c.delta * c.carrier.ract_basis(i) != ccs.ract_basis(i) * c.delta) {
            fail("comultiplication-right-A-linearity");
            break;
        }
    for (std::size_t i = 0; i < c.base.dim(); ++i)
        if (c.counit * c.carrier.lact_basis(i) != c.base.lmul_basis(i) * c.counit) {
            fail("counit-left-A-linearity");
            break;
        }
    for (std::size_t i = 0; i < c.base.dim(); ++i)
        if (c.counit * c.carrier.ract_basis(i) != c.base.rmul_basis(i) * c.counit) {
            fail("counit-right-A-linearity");
            break;
        }

    // Coassociativity via the two iterated tensor squares and the associator.
    TensorSpace ccc_l(c.base, ccs, c.carrier);
    TensorSpace ccc_r(c.base, c.carrier, ccs);
    Matrix delta_x_id = tensor_map(c.cc, ccc_l, c.delta, Matrix::identity(f, c.dim()));
    Matrix id_x_delta = tensor_map(c.cc, ccc_r, Matrix::identity(f, c.dim()), c.delta);
    Matrix assoc = associator_left_to_right(c.cc, ccc_l, c.cc, ccc_r);
    if (assoc * (delta_x_id * c.delta) != id_x_delta * c.delta)
        fail("coassociativity");

    // Counit laws: (eps (x) C) o Delta = id = (C (x) eps) o Delta.
    Matrix eps_x_id = Matrix::kron(c.counit, Matrix::identity(f, c.dim()));
    Matrix left_law = contract_left(c.base, c.carrier) * eps_x_id * c.cc.section() * c.delta;
    if (left_law != Matrix::identity(f, c.dim())) fail("counit-law-left");
    Matrix id_x_eps = Matrix::kron(Matrix::identity(f, c.dim()), c.counit);
    Matrix right_law = contract_right(c.carrier, c.base) * id_x_eps * c.cc.section() * c.delta;
    if (right_law != Matrix::identity(f, c.dim())) fail("counit-law-right");

    return v;
}

/// The trivial coring C = A: Delta the canonical iso A ~ A (x)_A A, eps = id.
inline Coring trivial_coring(const Algebra& a) {
    Bimodule carrier = Bimodule::regular(a);
    TensorSpace cc(a, carrier, carrier);
    Matrix delta(a.field(), cc.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        delta.set_col(j, cc.pure(a.basis(j), a.unit()));
    return Coring{a, carrier, std::move(cc), std::move(delta),
                  Matrix::identity(a.field(), a.dim()), "trivial(" + a.label() + ")"};
}

/// Sweedler canonical coring D = A (x)_B A of a unital morphism i: B -> A,
/// together with its presentation as a tensor quotient.
/// Delta(a (x) a') = (a (x) 1) (x) (1 (x) a'), eps(a (x) a') = a a'.
struct SweedlerData {
    Coring coring;
    TensorSpace presentation; // A (x)_B A

    /// Carrier coordinates of the pure tensor a (x) a'.
    Vec pure(const Vec& a, const Vec& a2) const { return presentation.pure(a, a2); }
};

inline SweedlerData sweedler_coring_data(const AlgebraMorphism& i, std::string label = "") {
    const Algebra& b = i.source;
    const Algebra& a = i.target;
    const FieldSpec& f = a.field();

    std::vector<Matrix> la, ra_via_b, la_via_b, ra;
    for (std::size_t s = 0; s < a.dim(); ++s) {
        la.push_back(a.lmul_basis(s));
        ra.push_back(a.rmul_basis(s));
    }
    for (std::size_t s = 0; s < b.dim(); ++s) {
        ra_via_b.push_back(a.rmul(i.apply(b.basis(s))));
        la_via_b.push_back(a.lmul(i.apply(b.basis(s))));
    }
    Bimodule left_fac(a, b, a.dim(), la, ra_via_b, a.label() + "_(A,B)");
    Bimodule right_fac(b, a, a.dim(), la_via_b, ra, a.label() + "_(B,A)");
    TensorSpace d(b, left_fac, right_fac);
    Bimodule carrier = d.space().relabel(label.empty() ? a.label() + "(x)_" + b.label() + a.label() : label);
    TensorSpace dd(a, carrier, carrier);

    Matrix delta_amb(f, dd.dim(), a.dim() * a.dim());
    Matrix eps_amb(f, a.dim(), a.dim() * a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t l = 0; l < a.dim(); ++l) {
            Vec d1 = d.pure(a.basis(j), a.unit());
            Vec d2 = d.pure(a.unit(), a.basis(l));
            delta_amb.set_col(j * a.dim() + l, dd.pure(d1, d2));
            eps_amb.set_col(j * a.dim() + l, a.mul(a.basis(j), a.basis(l)));
        }
    Matrix delta = delta_amb * d.section();
    Matrix counit = eps_amb * d.section();
    Coring c{a, carrier, std::move(dd), std::move(delta), std::move(counit),
             "sweedler(" + a.label() + "/" + b.label() + ")"};
    return SweedlerData{std::move(c), std::move(d)};
}

inline Coring sweedler_coring(const AlgebraMorphism& i, std::string label = "") {
    return sweedler_coring_data(i, std::move(label)).coring;
}

/// Opposite coring: flipped carrier over A^op, comultiplication composed
/// with the tensor flip. Realizes left comodules as right ones.
inline Coring opposite_coring(const Coring& c) {
    Algebra aop = c.base.opposite();
    Bimodule carrier = c.carrier.flip().relabel(c.label + "^op");
    TensorSpace cc_op(aop, carrier, carrier);
    Matrix swap = kron_swap(c.field(), c.dim(), c.dim());
    Matrix delta_op = cc_op.projection() * swap * c.cc.section() * c.delta;
    return Coring{aop, carrier, std::move(cc_op), std::move(delta_op), c.counit, c.label + "^op"};
}

/// A right C-comodule: a (B,A)-bimodule with coaction into M (x)_A C.
struct Comodule {
    Coring coring;
    Bimodule carrier;  // (B,A)
    TensorSpace mc;    // M (x)_A C
    Matrix rho;        // mc.dim x dim M

    std::size_t dim() const { return carrier.dim(); }
    const FieldSpec& field() const { return carrier.field(); }
};

inline Comodule make_comodule(const Coring& c, const Bimodule& carrier, Matrix rho) {
    if (carrier.right_algebra() != c.base)
        throw InputError(carrier.label() + ": comodule carrier is not a right module over the coring base");
    TensorSpace mc(c.base, carrier, c.carrier);
    if (rho.rows() != mc.dim() || rho.cols() != carrier.dim())
        throw InputError(carrier.label() + ": coaction has wrong shape");
    return Comodule{c, carrier, std::move(mc), std::move(rho)};
}

/// Ingest a coaction given as a k-linear map into the k-tensor square
/// M (x)_k C (dim M * dim C rows).
inline Comodule make_comodule_from_ambient(const Coring& c, const Bimodule& carrier,
                                           const Matrix& rho_ambient) {
    TensorSpace mc(c.base, carrier, c.carrier);
    if (rho_ambient.rows() != carrier.dim() * c.dim() || rho_ambient.cols() != carrier.dim())
        throw InputError(carrier.label() + ": ambient coaction has wrong shape");
    Matrix rho = mc.projection() * rho_ambient;
    return Comodule{c, carrier, std::move(mc), std::move(rho)};
}

struct ComoduleVerdict {
    bool ok = true;
    std::vector<std::string> failing;
};

inline ComoduleVerdict check_comodule(const Comodule& m) {
    ComoduleVerdict v;
    const FieldSpec& f = m.field();
    const Coring& c = m.coring;
    const Bimodule& mcs = m.mc.space();
    auto fail = [&](const std::string& name) { v.ok = false; v.failing.push_back(name); };

    for (std::size_t i = 0; i < c.base.dim(); ++i)
        if (m.rho * m.carrier.ract_basis(i) != mcs.ract_basis(i) * m.rho) {
            fail("coaction-right-A-linearity");
            break;
        }
    for (std::size_t i = 0; i < m.carrier.left_algebra().dim(); ++i)
        if (m.rho * m.carrier.lact_basis(i) != mcs.lact_basis(i) * m.rho) {
            fail("coaction-left-B-linearity");
            break;
        }

    TensorSpace mcc_l(c.base, mcs, c.carrier);
    TensorSpace mcc_r(c.base, m.carrier, c.cc.space());
    Matrix rho_x_id = tensor_map(m.mc, mcc_l, m.rho, Matrix::identity(f, c.dim()));
    Matrix id_x_delta = tensor_map(m.mc, mcc_r, Matrix::identity(f, m.dim()), c.delta);
    Matrix assoc = associator_left_to_right(m.mc, mcc_l, c.cc, mcc_r);
    if (assoc * (rho_x_id * m.rho) != id_x_delta * m.rho)
        fail("coaction-coassociativity");

    Matrix id_x_eps = Matrix::kron(Matrix::identity(f, m.dim()), c.counit);
    Matrix law = contract_right(m.carrier, c.base) * id_x_eps * m.mc.section() * m.rho;
    if (law != Matrix::identity(f, m.dim())) fail("counit-law");

    return v;
}

/// C as a right comodule over itself, rho = Delta.
inline Comodule regular_comodule(const Coring& c) {
    return Comodule{c, c.carrier, c.cc, c.delta};
}

/// A as a right C-comodule through a grouplike element: rho(a) = x a.
inline Comodule grouplike_comodule(const Coring& c, const Vec& x) {
    Bimodule carrier = Bimodule::right_regular(c.base);
    TensorSpace mc(c.base, carrier, c.carrier);
    Matrix rho(c.field(), mc.dim(), c.base.dim());
    for (std::size_t j = 0; j < c.base.dim(); ++j)
        rho.set_col(j, mc.pure(c.base.unit(), c.carrier.ract(c.base.basis(j)) * x));
    return Comodule{c, carrier, std::move(mc), std::move(rho)};
}

/// The cofree comodule M0 (x)_A C with coaction M0 (x) Delta.
inline Comodule cofree_comodule(const Coring& c, const Bimodule& m0) {
    const FieldSpec& f = c.field();
    TensorSpace t1(c.base, m0, c.carrier);
    Bimodule carrier = t1.space();
    TensorSpace t2(c.base, carrier, c.carrier);
    Matrix rho = t2.projection() *
                 Matrix::kron(t1.projection(), Matrix::identity(f, c.dim())) *
                 Matrix::kron(Matrix::identity(f, m0.dim()), c.cc.section()) *
                 Matrix::kron(Matrix::identity(f, m0.dim()), c.delta) * t1.section();
    return Comodule{c, carrier, std::move(t2), std::move(rho)};
}

/// Direct sum of two right comodules over the same coring.
inline Comodule direct_sum_comodule(const Comodule& x, const Comodule& y) {
    if (x.coring != y.coring) throw InputError("direct sum of comodules over different corings");
    const FieldSpec& f = x.field();
    const Algebra& k = x.carrier.left_algebra();
    if (k != y.carrier.left_algebra()) throw InputError("direct sum with mismatched left algebras");
    std::size_t d = x.dim() + y.dim();
    auto block = [&](const Matrix& a, const Matrix& b) {
        Matrix m(f, d, d);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(x.dim() + i, x.dim() + j) = b.at(i, j);
        return m;
    };
    std::vector<Matrix> la, ra;
    for (std::size_t i = 0; i < k.dim(); ++i)
        la.push_back(block(x.carrier.lact_basis(i), y.carrier.lact_basis(i)));
    for (std::size_t i = 0; i < x.coring.base.dim(); ++i)
        ra.push_back(block(x.carrier.ract_basis(i), y.carrier.ract_basis(i)));
    Bimodule carrier(k, x.coring.base, d, std::move(la), std::move(ra),
                     x.carrier.label() + "+" + y.carrier.label(), false);
    TensorSpace mc(x.coring.base, carrier, x.coring.carrier);
    Matrix rho(f, mc.dim(), d);
    // Embed each summand's coaction through the ambient tensor square.
    for (std::size_t j = 0; j < x.dim(); ++j) {
        Vec amb = x.mc.section() * x.rho.col(j);
        Vec big(f, d * x.coring.dim(), 1);
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t cidx = 0; cidx < x.coring.dim(); ++cidx)
                big.at(i * x.coring.dim() + cidx, 0) = amb.at(i * x.coring.dim() + cidx, 0);
        rho.set_col(j, mc.projection() * big);
    }
    for (std::size_t j = 0; j < y.dim(); ++j) {
        Vec amb = y.mc.section() * y.rho.col(j);
        Vec big(f, d * y.coring.dim(), 1);
        for (std::size_t i = 0; i < y.dim(); ++i)
            for (std::size_t cidx = 0; cidx < y.coring.dim(); ++cidx)
                big.at((x.dim() + i) * y.coring.dim() + cidx, 0) = amb.at(i * y.coring.dim() + cidx, 0);
        rho.set_col(x.dim() + j, mc.projection() * big);
    }
    return Comodule{x.coring, carrier, std::move(mc), std::move(rho)};
}

/// Grouplike verification: Delta(x) = x (x) x and eps(x) = 1.
inline bool is_grouplike(const Coring& c, const Vec& x) {
    return c.delta * x == c.cc.pure(x, x) && c.counit * x == c.base.unit();
}

inline constexpr std::size_t kGrouplikeDimBound = 8;
inline constexpr std::uint64_t kGrouplikeCandidateBound = std::uint64_t(1) << 20;

/// Exhaustive grouplike enumeration over a prime field, lexicographic in
/// the coordinates (last coordinate fastest). Unsupported over Q.
inline std::vector<Vec> enumerate_grouplikes(const Coring& c, std::size_t dim_bound = kGrouplikeDimBound) {
    const FieldSpec& f = c.field();
    if (!f.is_prime_field())
        throw UnsupportedInstance("grouplike enumeration is only available over prime fields");
    if (c.dim() > dim_bound)
        throw UnsupportedInstance("grouplike enumeration bound exceeded: dim " +
                                  std::to_string(c.dim()) + " > " + std::to_string(dim_bound));
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        total *= std::uint64_t(f.p());
        if (total > kGrouplikeCandidateBound)
            throw UnsupportedInstance("grouplike enumeration candidate bound exceeded");
    }
    std::vector<Vec> found;
    std::vector<std::int64_t> digits(c.dim(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::uint64_t rem = n;
        for (std::size_t i = c.dim(); i-- > 0;) {
            digits[i] = std::int64_t(rem % std::uint64_t(f.p()));
            rem /= std::uint64_t(f.p());
        }
        Vec x(f, c.dim(), 1);
        for (std::size_t i = 0; i < c.dim(); ++i) x.at(i, 0) = Scalar::from_int(f, digits[i]);
        if (is_grouplike(c, x)) found.push_back(x);
    }
    return found;
}

} // namespace coringlab
