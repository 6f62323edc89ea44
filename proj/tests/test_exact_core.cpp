#include "coringlab/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace coringlab;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec QQ = FieldSpec::rationals();

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            std::int64_t v = f.is_prime_field() ? std::int64_t(rng() % std::uint64_t(f.p()))
                                                : std::int64_t(rng() % 7) - 3;
            m.at(i, j) = Scalar::from_int(f, v);
        }
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic is exact") {
    Scalar a = Scalar::from_int(F5, 3), b = Scalar::from_int(F5, 4);
    REQUIRE((a * b).residue() == 2);
    REQUIRE((a + b).residue() == 2);
    REQUIRE((a / b).residue() == 2); // 3 * 4^{-1} = 3 * 4 = 12 = 2 mod 5

    Scalar x = Scalar::from_rational(QQ, Rational(1, 3));
    Scalar y = Scalar::from_rational(QQ, Rational(1, 6));
    REQUIRE((x + y).rational() == Rational(1, 2));
    REQUIRE((x * y).rational() == Rational(1, 18));
    REQUIRE((x / y).rational() == Rational(2));
}

TEST_CASE("rref examples") {
    SECTION("2x2 identity over F2 is its own rref") {
        Matrix id = Matrix::identity(F2, 2);
        auto r = id.rref();
        REQUIRE(r.mat == id);
        REQUIRE(r.pivots == std::vector<std::size_t>{0, 1});
    }
    SECTION("zero 3x3") {
        Matrix z(QQ, 3, 3);
        auto r = z.rref();
        REQUIRE(r.mat == z);
        REQUIRE(r.pivots.empty());
    }
    SECTION("[[1,2],[2,4]] over Q") {
        Matrix m = Matrix::from_int_rows(QQ, {{1, 2}, {2, 4}});
        auto r = m.rref();
        REQUIRE(r.mat == Matrix::from_int_rows(QQ, {{1, 2}, {0, 0}}));
        REQUIRE(r.pivots == std::vector<std::size_t>{0});
    }
}

TEST_CASE("kernel examples") {
    SECTION("identity has empty kernel") {
        REQUIRE(Matrix::identity(QQ, 3).kernel().cols() == 0);
    }
    SECTION("zero 2x3 has full kernel") {
        Matrix z(F2, 2, 3);
        REQUIRE(z.kernel().cols() == 3);
    }
    SECTION("[[1,1]] over F2, against the enumeration oracle") {
        Matrix m = Matrix::from_int_rows(F2, {{1, 1}});
        Matrix k = m.kernel();
        // Enumerate all 4 vectors of F2^2.
        std::vector<Vec> null;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Vec v = Matrix::from_int_rows(F2, {{a}, {b}});
                if ((m * v).is_zero() && !(a == 0 && b == 0)) null.push_back(v);
            }
        REQUIRE(null.size() == 1);
        REQUIRE(k.cols() == 1);
        REQUIRE(k.col(0) == null[0]);
        REQUIRE(k.col(0) == Matrix::from_int_rows(F2, {{1}, {1}}));
    }
}

TEST_CASE("solve examples") {
    SECTION("identity") {
        Matrix b = Matrix::from_int_rows(QQ, {{3}, {-1}});
        auto x = Matrix::identity(QQ, 2).solve(b);
        REQUIRE(x);
        REQUIRE(*x == b);
    }
    SECTION("[[1,1]] x = (1) over F2 picks free vars zero, matching enumeration") {
        Matrix m = Matrix::from_int_rows(F2, {{1, 1}});
        auto x = m.solve(Matrix::from_int_rows(F2, {{1}}));
        REQUIRE(x);
        REQUIRE(*x == Matrix::from_int_rows(F2, {{1}, {0}}));
        // Oracle: enumerate solutions; the solver's answer must be one of them.
        bool found = false;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Vec v = Matrix::from_int_rows(F2, {{a}, {b}});
                if (m * v == Matrix::from_int_rows(F2, {{1}}) && v == *x) found = true;
            }
        REQUIRE(found);
    }
    SECTION("inconsistent system") {
        Matrix m = Matrix::from_int_rows(QQ, {{0}});
        REQUIRE(!m.solve(Matrix::from_int_rows(QQ, {{1}})));
    }
}

TEST_CASE("rank-nullity and solve exactness on random matrices") {
    std::mt19937_64 rng(0xC0817);
    for (const FieldSpec& f : {F2, F5, QQ}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Matrix m = random_matrix(f, r, c, rng);
            REQUIRE(m.rank() + m.kernel().cols() == c);
            Matrix k = m.kernel();
            for (std::size_t j = 0; j < k.cols(); ++j)
                REQUIRE((m * k.col(j)).is_zero());
            // Consistent rhs: m * y for random y.
            Matrix y = random_matrix(f, c, 1, rng);
            auto x = m.solve(m * y);
            REQUIRE(x);
            REQUIRE(m * *x == m * y);
            // Absence means rank([m|b]) > rank(m).
            Matrix b = random_matrix(f, r, 1, rng);
            auto xb = m.solve(b);
            if (!xb) REQUIRE(Matrix::hcat(m, b).rank() == m.rank() + 1);
        }
    }
}

TEST_CASE("determinism: same bytes in, same bytes out") {
    std::mt19937_64 rng(0xDE7);
    Matrix m = random_matrix(F5, 4, 6, rng);
    auto r1 = m.rref(), r2 = m.rref();
    REQUIRE(r1.mat == r2.mat);
    REQUIRE(r1.pivots == r2.pivots);
    REQUIRE(m.kernel() == m.kernel());
    REQUIRE(m.to_string() == m.to_string());
}

TEST_CASE("left inverse and kron conventions") {
    Matrix m = Matrix::from_int_rows(QQ, {{1, 0}, {2, 1}, {0, 3}});
    auto li = m.left_inverse();
    REQUIRE(li);
    REQUIRE(*li * m == Matrix::identity(QQ, 2));

    Matrix a = Matrix::from_int_rows(QQ, {{1, 2}});
    Matrix b = Matrix::from_int_rows(QQ, {{3}, {5}});
    Matrix k = Matrix::kron(a, b);
    REQUIRE(k.rows() == 2);
    REQUIRE(k.cols() == 2);
    // kron(u, v) of columns matches flat index i*dim(v)+k.
    Vec u = Matrix::from_int_rows(QQ, {{1}, {2}});
    Vec v = Matrix::from_int_rows(QQ, {{3}, {5}});
    Matrix uv = Matrix::kron(u, v);
    REQUIRE(uv.at(0, 0).rational() == 3);
    REQUIRE(uv.at(1, 0).rational() == 5);
    REQUIRE(uv.at(2, 0).rational() == 6);
    REQUIRE(uv.at(3, 0).rational() == 10);
}

TEST_CASE("operator_matrix reproduces left/right multiplication") {
    Matrix p = Matrix::from_int_rows(QQ, {{1, 1}, {0, 1}});
    Matrix om = operator_matrix(QQ, 2, 2, [&](const Matrix& x) { return p * x - x * p; });
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        Matrix x = random_matrix(QQ, 2, 2, rng);
        REQUIRE(om * x.vec() == (p * x - x * p).vec());
    }
}
