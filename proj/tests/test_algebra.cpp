#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jointkit/generate.hpp"
#include "jointkit/matrix.hpp"

using namespace jointkit;

TEST_CASE("prime field construction") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(7));
    CHECK_NOTHROW(PrimeField(104729));
    CHECK_THROWS_AS(PrimeField(1), NotPrime);
    CHECK_THROWS_AS(PrimeField(4), NotPrime);
    CHECK_THROWS_AS(PrimeField(91), NotPrime); // 7 * 13
}

TEST_CASE("field inverse") {
    PrimeField f7(7);
    CHECK(field_inverse(Fp(f7, 1)).value() == 1);
    Fp three(f7, 3);
    Fp inv = field_inverse(three);
    CHECK(inv.value() == 5);
    CHECK((three * inv).value() == 1);
    CHECK_THROWS_AS(field_inverse(Fp(f7, 0)), ZeroInverse);
}

TEST_CASE("elements of different moduli do not mix") {
    PrimeField f5(5), f7(7);
    Fp a(f5, 2), b(f7, 2);
    CHECK_THROWS_AS(a + b, ModulusMismatch);
    CHECK_THROWS_AS(a * b, ModulusMismatch);
}

TEST_CASE("field axioms on random triples") {
    PrimeField f(11);
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        u64 a = rng.field_value(f), b = rng.field_value(f), c = rng.field_value(f);
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("rank") {
    PrimeField f5(5);
    CHECK(rank(Matrix::identity(f5, 3)) == 3);
    CHECK(rank(Matrix(f5, 2, 2)) == 0);
    // Second row is twice the first.
    Matrix m = Matrix::from_rows(f5, {{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
}

TEST_CASE("nullspace vector: worked examples") {
    PrimeField f5(5);
    SUBCASE("single pivot, lowest free variable set to one") {
        Matrix m = Matrix::from_rows(f5, {{1, 0, 0}});
        CHECK(nullspace_vector(m) == Vec{0, 1, 0});
    }
    SUBCASE("full rank rejects") {
        CHECK_THROWS_AS(nullspace_vector(Matrix::identity(f5, 2)), TrivialNullspace);
    }
    SUBCASE("zero matrix picks the first coordinate") {
        CHECK(nullspace_vector(Matrix(f5, 1, 2)) == Vec{1, 0});
    }
}

TEST_CASE("nullspace vector on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        PrimeField f(trial % 2 ? 5 : 11);
        std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        Matrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.field_value(f);
        std::size_t rk = rank(m);
        if (rk == cols) {
            CHECK_THROWS_AS(nullspace_vector(m), TrivialNullspace);
            continue;
        }
        Vec v = nullspace_vector(m);
        CHECK_FALSE(is_zero_vec(v));
        CHECK(is_zero_vec(m.apply(v)));
    }
}

TEST_CASE("rank plus nullity equals the column count") {
    Rng rng(99);
    PrimeField f(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        Matrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.field_value(f);
        Elimination e = Elimination::run(m);
        std::size_t free_count = cols - e.rank();
        std::vector<bool> pivot(cols, false);
        for (std::size_t c : e.pivot_cols) pivot[c] = true;
        std::size_t counted = 0;
        for (std::size_t c = 0; c < cols; ++c)
            if (!pivot[c]) ++counted;
        CHECK(counted == free_count);
    }
}

TEST_CASE("inverse and solve") {
    PrimeField f(7);
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        AffineMap t = random_affine(f, 3, rng);
        auto inv = inverse(t.linear());
        REQUIRE(inv.has_value());
        CHECK(matmul(t.linear(), *inv) == Matrix::identity(f, 3));
    }
    Matrix singular = Matrix::from_rows(f, {{1, 2}, {2, 4}});
    CHECK_FALSE(inverse(singular).has_value());
    Matrix m = Matrix::from_rows(f, {{1, 0}, {1, 0}});
    CHECK_FALSE(solve(m, Vec{1, 2}).has_value()); // inconsistent
    auto sol = solve(m, Vec{3, 3});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 3);
}

TEST_CASE("large moduli use the generic reduction path") {
    PrimeField f(1299709); // the 100000th prime
    CHECK(f.mul(1299708, 1299708) == 1);
    CHECK(f.inv(2) == 649855);
    Matrix m = Matrix::from_rows(f, {{1299708, 1, 0}, {2, 1299707, 3}});
    CHECK(rank(m) == 2);
    Vec v = nullspace_vector(m);
    CHECK_FALSE(is_zero_vec(v));
    CHECK(is_zero_vec(m.apply(v)));
}

TEST_CASE("nullspace of a matrix with no columns is rejected") {
    PrimeField f(5);
    CHECK_THROWS_AS(nullspace_vector(Matrix(f, 2, 0)), BadParams);
}
