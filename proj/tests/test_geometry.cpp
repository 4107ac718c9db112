#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "jointkit/generate.hpp"
#include "jointkit/geometry.hpp"

using namespace jointkit;

namespace {

Vec unit(std::size_t d, std::size_t i) {
    Vec e(d, 0);
    e[i] = 1;
    return e;
}

} // namespace

TEST_CASE("canonicalize_line") {
    PrimeField f5(5);
    SUBCASE("already canonical stays put") {
        Line l = canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 2));
        CHECK(l.base().coords == Vec{0, 0, 0});
        CHECK(l.dir().vec() == Vec{0, 0, 1});
    }
    SUBCASE("scaling and sliding") {
        Line l = canonicalize_line(Point(f5, {1, 2, 3}), Vec{2, 4, 0});
        CHECK(l.dir().vec() == Vec{1, 2, 0});
        CHECK(l.base().coords == Vec{0, 0, 3});
        // Both defining points lie on the produced line.
        CHECK(line_contains(l, Point(f5, {1, 2, 3})));
        CHECK(line_contains(l, Point(f5, {3, 6 % 5, 3})));
    }
    SUBCASE("zero direction rejected") {
        CHECK_THROWS_AS(canonicalize_line(Point(f5, {1, 1, 1}), Vec{0, 0, 0}), ZeroDirection);
    }
}

TEST_CASE("canonicalization is reparameterization invariant") {
    PrimeField f(7);
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Line l = random_line(f, 3, rng);
        u64 t = rng.below(7);
        u64 s = 1 + rng.below(6);
        Vec scaled(3);
        for (std::size_t i = 0; i < 3; ++i) scaled[i] = f.mul(s, l.dir().vec()[i]);
        Line l2 = canonicalize_line(l.at(t), scaled);
        CHECK(l == l2);
        // Idempotence.
        Line l3 = canonicalize_line(l.base(), l.dir().vec());
        CHECK(l == l3);
    }
}

TEST_CASE("line_contains") {
    PrimeField f5(5);
    Line axis3 = canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 2));
    CHECK(line_contains(axis3, Point(f5, {0, 0, 0})));
    CHECK_FALSE(line_contains(axis3, Point(f5, {1, 0, 0})));
    CHECK(line_contains(axis3, Point(f5, {0, 0, 4})));
}

TEST_CASE("parallel_to") {
    PrimeField f5(5);
    Line axis3 = canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 2));
    CHECK(parallel_to(axis3, Subspace(f5, 3, {unit(3, 2)})));
    CHECK_FALSE(parallel_to(axis3, Subspace(f5, 3, {unit(3, 0)})));
    Line diag = canonicalize_line(Point(f5, {0, 0, 0}), Vec{1, 1, 0});
    Subspace xy(f5, 3, {unit(3, 0), unit(3, 1)});
    CHECK(parallel_to(diag, xy));
    CHECK(xy.dim() == 2);
}

TEST_CASE("frame_transform") {
    PrimeField f5(5);
    SUBCASE("coordinate axes at the origin give the identity") {
        std::vector<Line> axes;
        for (std::size_t i = 0; i < 3; ++i)
            axes.push_back(canonicalize_line(Point(f5, {0, 0, 0}), unit(3, i)));
        AffineMap t = frame_transform(Point(f5, {0, 0, 0}), axes);
        CHECK(t.linear() == Matrix::identity(f5, 3));
        CHECK(t.shift() == Vec{0, 0, 0});
    }
    SUBCASE("axes through (1,1,1) give a pure translation") {
        Point p(f5, {1, 1, 1});
        std::vector<Line> axes;
        for (std::size_t i = 0; i < 3; ++i) axes.push_back(canonicalize_line(p, unit(3, i)));
        AffineMap t = frame_transform(p, axes);
        CHECK(t.linear() == Matrix::identity(f5, 3));
        CHECK(t.shift() == Vec{4, 4, 4}); // -(1,1,1) mod 5
        CHECK(is_zero_vec(t.apply(p.coords)));
    }
    SUBCASE("dependent directions rejected") {
        Point p(f5, {0, 0, 0});
        std::vector<Line> lines{canonicalize_line(p, unit(3, 0)),
                                canonicalize_line(p, unit(3, 0)),
                                canonicalize_line(p, unit(3, 1))};
        CHECK_THROWS_AS(frame_transform(p, lines), DependentDirections);
    }
    SUBCASE("postconditions by evaluation on random frames") {
        PrimeField f(7);
        Rng rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            Point p = random_point(f, 3, rng);
            std::vector<Line> lines;
            std::vector<Vec> dirs;
            while (lines.size() < 3) {
                Direction d = random_direction(f, 3, rng);
                std::vector<Vec> probe = dirs;
                probe.push_back(d.vec());
                if (rank(Matrix::from_rows(f, probe)) != probe.size()) continue;
                dirs.push_back(d.vec());
                lines.push_back(canonicalize_line(p, d.vec()));
            }
            AffineMap t = frame_transform(p, lines);
            CHECK(is_zero_vec(t.apply(p.coords)));
            for (std::size_t i = 0; i < 3; ++i) {
                // Two distinct points of line i land on the i-th axis.
                for (u64 tpar : {u64{1}, u64{2}}) {
                    Vec img = t.apply(lines[i].at(tpar).coords);
                    for (std::size_t j = 0; j < 3; ++j)
                        if (j != i) CHECK(img[j] == 0);
                }
            }
        }
    }
}

TEST_CASE("axis_transform") {
    PrimeField f5(5);
    SUBCASE("x3-axis through the origin is already in position") {
        Line l = canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 2));
        auto [t, pt] = axis_transform(Point(f5, {0, 0, 0}), l);
        CHECK(t.linear() == Matrix::identity(f5, 3));
        CHECK(pt == 0);
    }
    SUBCASE("x1-axis maps onto the x3-axis") {
        Line l = canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 0));
        auto [t, pt] = axis_transform(Point(f5, {0, 0, 0}), l);
        CHECK(pt == 0);
        // Two axis points land on the x3-axis.
        Vec img1 = t.apply(Vec{1, 0, 0});
        Vec img2 = t.apply(Vec{3, 0, 0});
        CHECK(img1[0] == 0);
        CHECK(img1[1] == 0);
        CHECK(img1[2] != 0);
        CHECK(img2[0] == 0);
        CHECK(img2[1] == 0);
    }
    SUBCASE("point off the line rejected") {
        Line l = canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 0));
        CHECK_THROWS_AS(axis_transform(Point(f5, {0, 1, 0}), l), NotIncident);
    }
    SUBCASE("composing with the inverse is the identity") {
        PrimeField f(7);
        Rng rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            Line l = random_line(f, 3, rng);
            Point p = l.at(rng.below(7));
            auto [t, pt] = axis_transform(p, l);
            Vec img = t.apply(p.coords);
            CHECK(img == Vec{0, 0, pt});
            AffineMap inv = t.inverse();
            for (int k = 0; k < 20; ++k) {
                Point q = random_point(f, 3, rng);
                CHECK(inv.apply(t.apply(q.coords)) == q.coords);
            }
        }
    }
}

TEST_CASE("enumerate_line_points") {
    PrimeField f5(5);
    Line axis3 = canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 2));
    auto pts = enumerate_line_points(axis3);
    REQUIRE(pts.size() == 5);
    for (u64 t = 0; t < 5; ++t) CHECK(pts[t].coords == Vec{0, 0, t});

    PrimeField f2(2);
    Line l2 = canonicalize_line(Point(f2, {1, 0, 1}), Vec{1, 1, 1});
    CHECK(enumerate_line_points(l2).size() == 2);

    PrimeField f7(7);
    Rng rng(23);
    Line l = random_line(f7, 4, rng);
    auto pts7 = enumerate_line_points(l);
    REQUIRE(pts7.size() == 7);
    std::set<Vec> distinct;
    for (const Point& p : pts7) {
        CHECK(line_contains(l, p));
        distinct.insert(p.coords);
    }
    CHECK(distinct.size() == 7);
}

TEST_CASE("subspace echelon form is a canonical representative") {
    PrimeField f(5);
    Subspace a(f, 3, {Vec{1, 1, 0}, Vec{0, 0, 1}});
    Subspace b(f, 3, {Vec{2, 2, 1}, Vec{0, 0, 3}});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.contains(Vec{3, 3, 4}));
    CHECK_FALSE(a.contains(Vec{1, 0, 0}));
    Subspace zero(f, 3, {});
    CHECK(zero.dim() == 0);
    CHECK(zero.contains(Vec{0, 0, 0}));
    CHECK(a.contains(zero));
}
