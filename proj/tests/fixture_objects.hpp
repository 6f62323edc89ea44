// Shared engine-level constructions of the bundled fixtures.
#pragma once

#include "coringlab/coring.hpp"

namespace coringlab::testfix {

inline Algebra f4_algebra() {
    FieldSpec f = FieldSpec::prime(2);
    // F4 = F2[t]/(t^2+t+1), basis {1, t}: t*t = 1 + t.
    std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2, Vec(f, 2, 1)));
    mult[0][0] = Matrix::from_int_rows(f, {{1}, {0}});
    mult[0][1] = Matrix::from_int_rows(f, {{0}, {1}});
    mult[1][0] = Matrix::from_int_rows(f, {{0}, {1}});
    mult[1][1] = Matrix::from_int_rows(f, {{1}, {1}});
    return Algebra(f, 2, mult, Matrix::from_int_rows(f, {{1}, {0}}), "F4");
}

inline Algebra dual_numbers_f2() {
    FieldSpec f = FieldSpec::prime(2);
    // F2[x]/(x^2), basis {1, x}: x*x = 0.
    std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2, Vec(f, 2, 1)));
    mult[0][0] = Matrix::from_int_rows(f, {{1}, {0}});
    mult[0][1] = Matrix::from_int_rows(f, {{0}, {1}});
    mult[1][0] = Matrix::from_int_rows(f, {{0}, {1}});
    mult[1][1] = Matrix::from_int_rows(f, {{0}, {0}});
    return Algebra(f, 2, mult, Matrix::from_int_rows(f, {{1}, {0}}), "F2[x]/(x^2)");
}

inline Algebra gaussian_rationals() {
    FieldSpec f = FieldSpec::rationals();
    // Q[x]/(x^2+1), basis {1, i}: i*i = -1.
    std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2, Vec(f, 2, 1)));
    mult[0][0] = Matrix::from_int_rows(f, {{1}, {0}});
    mult[0][1] = Matrix::from_int_rows(f, {{0}, {1}});
    mult[1][0] = Matrix::from_int_rows(f, {{0}, {1}});
    mult[1][1] = Matrix::from_int_rows(f, {{-1}, {0}});
    return Algebra(f, 2, mult, Matrix::from_int_rows(f, {{1}, {0}}), "Q(i)");
}

inline Algebra f2_x_f2() {
    FieldSpec f = FieldSpec::prime(2);
    // F2 x F2 with idempotent basis {e0, e1}.
    std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2, Vec(f, 2, 1)));
    mult[0][0] = Matrix::from_int_rows(f, {{1}, {0}});
    mult[0][1] = Matrix::from_int_rows(f, {{0}, {0}});
    mult[1][0] = Matrix::from_int_rows(f, {{0}, {0}});
    mult[1][1] = Matrix::from_int_rows(f, {{0}, {1}});
    return Algebra(f, 2, mult, Matrix::from_int_rows(f, {{1}, {1}}), "F2xF2");
}

inline AlgebraMorphism ground_into(const Algebra& a) {
    Algebra k = Algebra::ground(a.field());
    Matrix m(a.field(), a.dim(), 1);
    m.set_col(0, a.unit());
    return AlgebraMorphism(k, a, m);
}

// FIX-T: k = A = B = F2, Sigma = k, C = trivial coring.
struct FixT {
    Algebra a;
    Coring c;
    Comodule sigma;
    FixT()
        : a(Algebra::ground(FieldSpec::prime(2), "F2")),
          c(trivial_coring(a)),
          sigma(grouplike_comodule(c, a.unit())) {}
};

// FIX-G: k = B = F2, A = F4, Sigma = A, C = Sweedler coring A (x)_B A.
struct FixG {
    SweedlerData sw;
    Algebra a;
    Coring c;
    Vec one_tensor_one;
    Comodule sigma;
    FixG()
        : sw(sweedler_coring_data(ground_into(f4_algebra()))),
          a(f4_algebra()),
          c(sw.coring),
          one_tensor_one(sw.pure(a.unit(), a.unit())),
          sigma(grouplike_comodule(c, one_tensor_one)) {}
};

// FIX-N: k = B = F2, A = F2[x]/(x^2), Sigma = A, C = Sweedler coring.
struct FixN {
    SweedlerData sw;
    Algebra a;
    Coring c;
    Vec one_tensor_one;
    Comodule sigma;
    FixN()
        : sw(sweedler_coring_data(ground_into(dual_numbers_f2()))),
          a(dual_numbers_f2()),
          c(sw.coring),
          one_tensor_one(sw.pure(a.unit(), a.unit())),
          sigma(grouplike_comodule(c, one_tensor_one)) {}
};

// FIX-Q: k = B = Q, A = Q(i), Sigma = A, C = Sweedler coring.
struct FixQ {
    SweedlerData sw;
    Algebra a;
    Coring c;
    Vec one_tensor_one;
    Comodule sigma;
    FixQ()
        : sw(sweedler_coring_data(ground_into(gaussian_rationals()))),
          a(gaussian_rationals()),
          c(sw.coring),
          one_tensor_one(sw.pure(a.unit(), a.unit())),
          sigma(grouplike_comodule(c, one_tensor_one)) {}
};

// FIX-M: k = A = B = F2, Sigma = k^2 as (k,k)-bimodule.
inline Bimodule k2_bimodule() {
    FieldSpec f = FieldSpec::prime(2);
    Algebra k = Algebra::ground(f, "F2");
    return Bimodule(k, k, 2, {Matrix::identity(f, 2)}, {Matrix::identity(f, 2)}, "k^2");
}

} // namespace coringlab::testfix
