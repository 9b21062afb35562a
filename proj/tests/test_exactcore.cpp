#include <doctest.h>

#include <random>

#include "cohid/linalg.hpp"
#include "helpers.hpp"

using namespace cohid;
using testing::mat;

TEST_SUITE_BEGIN("exactcore");

TEST_CASE("normalize") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(0, -7).str() == "0");
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK(Rational(-7, -2).str() == "7/2");
    CHECK_THROWS_WITH(Rational(1, 0), "zero denominator");
}

TEST_CASE("rational parsing and serialization") {
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("5").str() == "5");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK(ExtendedRational::parse("inf").is_infinite());
    CHECK(ExtendedRational::infinity().str() == "inf");
}

TEST_CASE("large intermediate values stay exact") {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x = x * Rational(1000003, 3);
    for (int i = 0; i < 40; ++i) x = x / Rational(1000003, 3);
    CHECK(x == Rational(1));
}

TEST_CASE("extended rationals") {
    auto inf = ExtendedRational::infinity();
    CHECK(inf > ExtendedRational(Rational(1000000)));
    CHECK((inf + ExtendedRational(Rational(-5))).is_infinite());
    CHECK(max(ExtendedRational(Rational(1)), ExtendedRational(Rational(1, 2))) == ExtendedRational(Rational(1)));
    CHECK_THROWS(inf.value());
}

TEST_CASE("prime field elements") {
    Field f = Field::prime(7);
    FieldElement a(f, Rational(-1));
    CHECK(a.residue() == 6);
    CHECK((a * a).is_one());
    CHECK((FieldElement(f, 3L) * FieldElement(f, 3L).inverse()).is_one());
    CHECK(FieldElement(f, Rational(1, 2)) * FieldElement(f, 2L) == FieldElement::one(f));
    CHECK_THROWS(FieldElement(Field::prime(5), 1L) + FieldElement(f, 1L));
    CHECK_THROWS(Field::prime(8));
    CHECK(Field::parse("fp:11") == Field::prime(11));
}

TEST_CASE("rref") {
    Field f = Field::rationals();
    auto r = rref(Matrix::identity(f, 3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    auto z = rref(Matrix(f, 2, 5));
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());
    CHECK(rank(mat(f, 2, 2, {1, 2, 2, 4})) == 1);
    Matrix mixed(f, 1, 2);
    mixed(0, 1) = FieldElement(Field::prime(3), 1L);
    CHECK_THROWS(rref(mixed));
}

TEST_CASE("kernel basis") {
    Field f = Field::rationals();
    CHECK(kernel_basis(Matrix(f, 2, 3)).size() == 3);
    CHECK(kernel_basis(Matrix::identity(f, 3)).empty());

    // Over F_2 the kernel of [1 1] is found by listing all four vectors.
    Field f2 = Field::prime(2);
    Matrix m = mat(f2, 1, 2, {1, 1});
    std::vector<Vector> nonzero_kernel;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b) {
            Vector v{FieldElement(f2, a), FieldElement(f2, b)};
            if (!is_zero(v) && is_zero(m * v)) nonzero_kernel.push_back(v);
        }
    REQUIRE(nonzero_kernel.size() == 1);
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == nonzero_kernel[0]);
}

TEST_CASE("solve") {
    Field f = Field::rationals();
    Vector b{FieldElement(f, 3L), FieldElement(f, -1L), FieldElement(f, Rational(1, 2))};
    CHECK(*solve(Matrix::identity(f, 3), b) == b);
    CHECK_FALSE(solve(Matrix(f, 3, 2), b).has_value());
    Matrix m = mat(f, 2, 2, {1, 2, 2, 4});
    Vector rhs{FieldElement(f, 1L), FieldElement(f, 2L)};
    auto x = solve(m, rhs);
    REQUIRE(x.has_value());
    CHECK(m * *x == rhs);
    CHECK_THROWS(solve(m, b));
}

TEST_CASE("randomized rank identities") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-2, 2);
    std::uniform_int_distribution<std::size_t> size(0, 5);
    for (Field f : {Field::rationals(), Field::prime(3)})
        for (int trial = 0; trial < 100; ++trial) {
            Matrix m(f, size(rng), size(rng));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = FieldElement(f, entry(rng));
            CHECK(rank(m) == rank(m.transpose()));
            CHECK(kernel_basis(m).size() + rank(m) == m.cols());
            auto inv = inverse(m);
            if (inv) CHECK((m * *inv).is_identity());
        }
}

TEST_CASE("subquotient coordinates") {
    Field f = Field::rationals();
    auto e = [&](long a, long b, long c) { return Vector{FieldElement(f, a), FieldElement(f, b), FieldElement(f, c)}; };
    // Z = span(e0, e1), B = span(e0 + e1): the quotient is one-dimensional.
    Subquotient s(f, 3, {e(1, 0, 0), e(0, 1, 0)}, {e(1, 1, 0)});
    CHECK(s.dim() == 1);
    // e0 and -e1 are the same class.
    CHECK(s.coords(e(1, 0, 0)) == s.coords(e(0, -1, 0)));
    CHECK_FALSE(is_zero(s.coords(e(1, 0, 0))));
    CHECK(is_zero(s.coords(e(2, 2, 0))));
    CHECK_THROWS_AS(s.coords(e(0, 0, 1)), std::domain_error);
}

TEST_SUITE_END();
