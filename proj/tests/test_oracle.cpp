#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jointkit/generate.hpp"
#include "jointkit/oracle.hpp"

using namespace jointkit;
using namespace jointkit::oracle;

namespace {

Vec unit(std::size_t d, std::size_t i) {
    Vec e(d, 0);
    e[i] = 1;
    return e;
}

} // namespace

TEST_CASE("oracle_minima") {
    PrimeField f5(5);
    LineSystem axes = generate_axes(f5, 3);
    Point origin(f5, {0, 0, 0});
    CHECK(oracle_minima(axes, origin, 2) == 2);
    CHECK(oracle_minima(axes, origin, 1) == 3); // V = {0}: plain incidence count
    CHECK(oracle_minima(axes, origin, 3) == 1);
    std::vector<LineEntry> none;
    LineSystem empty(f5, 3, none);
    CHECK(oracle_minima(empty, origin, 2) == 0);
    SUBCASE("guard") {
        PrimeField f7(7);
        LineSystem big = generate_axes(f7, 3);
        CHECK_THROWS_AS(oracle_minima(big, Point(f7, {0, 0, 0}), 2), TooLarge);
    }
}

TEST_CASE("oracle_classical_multiplicity") {
    PrimeField f5(5);
    Point origin(f5, {0, 0, 0});
    Line axis = canonicalize_line(origin, unit(3, 2));
    SUBCASE("x3(x3-1) restricts to t(t-1)") {
        SparsePoly x3 = SparsePoly::variable(f5, 3, 2);
        SparsePoly t1 = x3;
        t1.add_term(Monomial(3), f5.neg(1));
        auto m = oracle_classical_multiplicity(x3 * t1, origin, axis);
        REQUIRE(m.has_value());
        CHECK(*m == 1);
    }
    SUBCASE("x1 restricts to the zero function: undefined") {
        CHECK_FALSE(
            oracle_classical_multiplicity(SparsePoly::variable(f5, 3, 0), origin, axis)
                .has_value());
    }
    SUBCASE("nonzero constants have multiplicity zero everywhere") {
        for (u64 t = 0; t < 5; ++t) {
            auto m = oracle_classical_multiplicity(SparsePoly::constant(f5, 3, 2), axis.at(t),
                                                   axis);
            REQUIRE(m.has_value());
            CHECK(*m == 0);
        }
    }
}

TEST_CASE("oracle_joint_tuples") {
    PrimeField f5(5);
    Point origin(f5, {0, 0, 0});
    CHECK(oracle_joint_tuples(generate_axes(f5, 3), origin) == 6);
    SUBCASE("axes plus the main diagonal: every 3-of-4 is independent") {
        std::vector<LineEntry> entries;
        for (std::size_t i = 0; i < 3; ++i)
            entries.push_back(LineEntry{canonicalize_line(origin, unit(3, i)), 1, std::nullopt});
        entries.push_back(LineEntry{canonicalize_line(origin, Vec{1, 1, 1}), 1, std::nullopt});
        CHECK(oracle_joint_tuples(LineSystem(f5, 3, entries), origin) == 24);
    }
    SUBCASE("non-joint points count zero") {
        CHECK(oracle_joint_tuples(generate_axes(f5, 3), Point(f5, {1, 2, 0})) == 0);
    }
    SUBCASE("bound guard") {
        std::vector<LineEntry> entries{
            {canonicalize_line(origin, unit(3, 0)), 70, std::nullopt},
            {canonicalize_line(origin, unit(3, 1)), 1, std::nullopt}};
        CHECK_THROWS_AS(oracle_joint_tuples(LineSystem(f5, 3, entries), origin), TooLarge);
    }
}

TEST_CASE("oracle_multijoint_tuples") {
    PrimeField f5(5);
    Point origin(f5, {0, 0, 0});
    std::vector<LineEntry> entries{{canonicalize_line(origin, unit(3, 0)), 1, 1u},
                                   {canonicalize_line(origin, Vec{1, 1, 0}), 1, 1u},
                                   {canonicalize_line(origin, unit(3, 1)), 1, 2u},
                                   {canonicalize_line(origin, unit(3, 2)), 1, 3u}};
    LineSystem sys(f5, 3, entries);
    CHECK(oracle_multijoint_tuples(sys, origin) == 2);
    CHECK(oracle_multijoint_tuples(sys, Point(f5, {1, 1, 1})) == 0);
}

TEST_CASE("oracle_invariance") {
    PrimeField f7(7);
    Rng rng(606);
    SUBCASE("agrees with the direct computation") {
        for (int trial = 0; trial < 30; ++trial) {
            Line l = random_line(f7, 3, rng);
            Point p = l.at(rng.below(7));
            SparsePoly q = random_poly(f7, 3, 5, 6, rng);
            u64 direct = pl_multiplicity(q, p, l).value;
            CHECK(oracle_invariance(q, p, l, 10, 1234 + trial) == direct);
        }
    }
    SUBCASE("rejects the zero polynomial and tiny k") {
        Line l = random_line(f7, 3, rng);
        Point p = l.at(0);
        CHECK_THROWS_AS(oracle_invariance(SparsePoly(f7, 3), p, l, 5, 1), ZeroPolynomial);
        SparsePoly q = random_poly(f7, 3, 3, 4, rng);
        CHECK_THROWS_AS(oracle_invariance(q, p, l, 1, 1), BadParams);
    }
}

TEST_CASE("subspace sets count gaussian binomials") {
    PrimeField f3(3);
    std::vector<Vec> basis{unit(3, 0), unit(3, 1), unit(3, 2)};
    std::vector<Vec> whole = space_vectors(f3, 3, basis);
    CHECK(whole.size() == 27);
    CHECK(subspace_sets(f3, 3, whole, 0).size() == 1);
    CHECK(subspace_sets(f3, 3, whole, 1).size() == 13);
    CHECK(subspace_sets(f3, 3, whole, 2).size() == 13);
    for (const auto& s : subspace_sets(f3, 3, whole, 1)) CHECK(s.size() == 3);
    for (const auto& s : subspace_sets(f3, 3, whole, 2)) CHECK(s.size() == 9);
}
