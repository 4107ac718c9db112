#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jointkit/certify.hpp"
#include "jointkit/generate.hpp"

using namespace jointkit;

namespace {

Vec unit(std::size_t d, std::size_t i) {
    Vec e(d, 0);
    e[i] = 1;
    return e;
}

} // namespace

TEST_CASE("min_degree_for") {
    CHECK(min_degree_for(0, 3) == 0);
    CHECK(min_degree_for(3, 3) == 1);   // C(4,3) = 4 > 3
    CHECK(min_degree_for(125, 3) == 8); // C(11,3) = 165 > 125, C(10,3) = 120 fails
    CHECK(min_degree_for(0, 2) == 0);

    SUBCASE("least D with C(D+d,d) > count, for every count up to 10^6") {
        for (std::size_t d = 2; d <= 4; ++d) {
            u64 deg = 0;
            for (u64 count = 0; count <= 1000000; ++count) {
                while (binomial(deg + d, d) <= count) ++deg;
                if (count % 997 == 0 || count < 100) CHECK(min_degree_for(count, d) == deg);
            }
        }
    }
    SUBCASE("monotone in count") {
        for (u64 c = 1; c < 2000; ++c) CHECK(min_degree_for(c, 3) >= min_degree_for(c - 1, 3));
    }
}

TEST_CASE("monomial table ordering matches the sparse term order") {
    MonomialTable tab(3, 4);
    CHECK(tab.size() == binomial(7, 3));
    MonomialLess less;
    for (std::size_t i = 0; i + 1 < tab.size(); ++i) CHECK(less(tab.at(i), tab.at(i + 1)));
    for (std::size_t i = 0; i < tab.size(); ++i) CHECK(tab.index_of(tab.at(i).exps) == i);
    // Degree-1 block in descending lex order: x1, x2, x3.
    CHECK(tab.at(1).exps == std::vector<u32>{1, 0, 0});
    CHECK(tab.at(2).exps == std::vector<u32>{0, 1, 0});
    CHECK(tab.at(3).exps == std::vector<u32>{0, 0, 1});
}

TEST_CASE("dense pullback agrees with the substitution route") {
    PrimeField f(7);
    Rng rng(12);
    MonomialTable tab(3, 8);
    for (int trial = 0; trial < 30; ++trial) {
        SparsePoly q = random_poly(f, 3, 1 + rng.below(8), 1 + rng.below(10), rng);
        AffineMap t = random_affine(f, 3, rng);
        CHECK(pullback_dense(q, t, tab) == pullback(q, t));
    }
}

TEST_CASE("vanishing_constraints") {
    PrimeField f(5);
    SUBCASE("a single point at the origin pins the constant coefficient") {
        ConstraintSystem cs = vanishing_constraints(f, 3, {Point(f, {0, 0, 0})}, 1);
        REQUIRE(cs.rows.size() == 1);
        REQUIRE(cs.rows[0].entries.size() == 1);
        CHECK(cs.rows[0].entries[0].first == 0); // the constant monomial
        Certificate cert = solve_certificate(cs);
        // Determinism rule: lowest free variable, hence x1.
        CHECK(cert.q == SparsePoly::variable(f, 3, 0));
    }
    SUBCASE("empty system solves to the constant 1") {
        ConstraintSystem cs = vanishing_constraints(f, 3, {}, 0);
        Certificate cert = solve_certificate(cs);
        CHECK(cert.q == SparsePoly::constant(f, 3, 1));
    }
    SUBCASE("certificate vanishes at all constrained points") {
        Rng rng(77);
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(random_point(f, 3, rng));
        u64 deg = min_degree_for(pts.size(), 3);
        Certificate cert = solve_certificate(vanishing_constraints(f, 3, pts, deg));
        for (const Point& p : pts) CHECK(cert.q.eval(p) == 0);
        CHECK_FALSE(cert.q.is_zero());
    }
    SUBCASE("too many rows can exhaust the coefficient space") {
        // 5 points but degree 0: only the constant coefficient exists.
        Rng rng(78);
        std::vector<Point> pts;
        for (int i = 0; i < 5; ++i) pts.push_back(random_point(f, 3, rng));
        bool nonzero_somewhere = false;
        for (const Point& p : pts)
            if (!is_zero_vec(p.coords)) nonzero_somewhere = true;
        if (nonzero_somewhere)
            CHECK_THROWS_AS(solve_certificate(vanishing_constraints(f, 3, pts, 0)),
                            TrivialNullspace);
    }
}

TEST_CASE("box_kill_constraints") {
    PrimeField f(7);
    Point p(f, {1, 2, 3});
    std::vector<Line> axes;
    for (std::size_t i = 0; i < 3; ++i) axes.push_back(canonicalize_line(p, unit(3, i)));
    AffineMap t = frame_transform(p, axes);

    SUBCASE("bounds (1,1,1) produce the 8 rows of the 2x2x2 box") {
        ConstraintSystem cs = box_kill_constraints({PointFrame{p, t}}, {1, 1, 1}, 3);
        CHECK(cs.rows.size() == 8);
    }
    SUBCASE("bounds all zero reduce to a vanishing constraint") {
        ConstraintSystem cs = box_kill_constraints({PointFrame{p, t}}, {0, 0, 0}, 2);
        Certificate cert = solve_certificate(cs);
        CHECK(cert.q.eval(p) == 0);
        ConstraintSystem vcs = vanishing_constraints(f, 3, {p}, 2);
        Certificate vcert = solve_certificate(vcs);
        CHECK(cert.q == vcert.q);
    }
    SUBCASE("the solved certificate has an empty box, formally") {
        ConstraintSystem cs = box_kill_constraints({PointFrame{p, t}}, {1, 1, 1}, 3);
        Certificate cert = solve_certificate(cs);
        MonomialTable tab(3, 3);
        SparsePoly r = pullback_dense(cert.q, t, tab);
        for (u32 a = 0; a <= 1; ++a)
            for (u32 b = 0; b <= 1; ++b)
                for (u32 c = 0; c <= 1; ++c) CHECK(r.coeff(Monomial({a, b, c})) == 0);
    }
    SUBCASE("degree too small is reported") {
        CHECK_THROWS_AS(box_kill_constraints({PointFrame{p, t}}, {1, 1, 1}, 1), DegreeTooSmall);
    }
}

TEST_CASE("threshold_compare against the full-strength thresholds") {
    std::vector<u64> ones{1, 1, 1};
    CHECK(threshold_compare(100, 1, 1, ones));        // 100^2 <= 100^2
    CHECK_FALSE(threshold_compare(101, 1, 1, ones));  // 10201 > 10000
    CHECK(threshold_compare(0, 3, 1, ones));
    CHECK(threshold_compare(10000, 2, 1, ones));
    CHECK_FALSE(threshold_compare(10001, 2, 1, ones));
    CHECK_THROWS_AS(threshold_compare(1, 1, 1, std::vector<u64>{1, 0, 1}), BadParams);
}

TEST_CASE("axis_kill_limit") {
    SUBCASE("full-strength growth blows the desk budget") {
        ThresholdOptions opt;
        opt.growth = 100;
        opt.row_budget = 2000;
        CHECK(axis_kill_limit(1, {1, 1, 1}, opt) == 100);
        CHECK_THROWS_AS(axis_kill_limit(2, {1, 1, 1}, opt), InfeasibleThresholds);
        // With a huge budget the box sizes are exactly 101 * 10001 * 1000001 rows.
        opt.row_budget = u64{2000000};
        CHECK(axis_kill_limit(1, {1, 1, 1}, opt) + 1 == 101);
        CHECK(axis_kill_limit(2, {1, 1, 1}, opt) + 1 == 10001);
        CHECK(axis_kill_limit(3, {1, 1, 1}, opt) + 1 == 1000001);
    }
    SUBCASE("desk-scale defaults on the grid minima") {
        ThresholdOptions opt; // B = 1, floor = 1, growth = 1
        std::vector<u64> r{3, 2, 1};
        CHECK(axis_kill_limit(1, r, opt) == 1); // floored
        CHECK(axis_kill_limit(2, r, opt) == 1);
        CHECK(axis_kill_limit(3, r, opt) == 2);
    }
    SUBCASE("scaling B widens the box") {
        ThresholdOptions opt;
        opt.b = 5;
        std::vector<u64> r{1, 1, 1};
        CHECK(axis_kill_limit(1, r, opt) == 5);
    }
}

TEST_CASE("joints proof trace") {
    PrimeField f5(5);
    SUBCASE("three axes") {
        ProofTrace tr = joints_proof_trace(generate_axes(f5, 3));
        CHECK(tr.joint_count == 1);
        CHECK(tr.passed());
    }
    SUBCASE("grid stays within degree 8") {
        ProofTrace tr = joints_proof_trace(generate_grid(f5, 3));
        CHECK(tr.joint_count == 125);
        CHECK(tr.degree_bound == 8);
        CHECK(tr.certificate_degree <= 8);
        CHECK(tr.passed());
    }
    SUBCASE("no joints passes vacuously") {
        std::vector<LineEntry> entries{
            {canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 2)), 1, std::nullopt}};
        ProofTrace tr = joints_proof_trace(LineSystem(f5, 3, entries));
        CHECK(tr.joint_count == 0);
        CHECK(tr.passed());
    }
}

TEST_CASE("multijoints proof trace") {
    PrimeField f7(7);
    SUBCASE("three singleton families (the axes)") {
        std::vector<LineEntry> entries;
        for (std::size_t i = 0; i < 3; ++i)
            entries.push_back(
                LineEntry{canonicalize_line(Point(f7, Vec(3, 0)), unit(3, i)), 1,
                          static_cast<u32>(i + 1)});
        ProofTrace tr = multijoints_proof_trace(LineSystem(f7, 3, entries));
        CHECK(tr.joint_count == 1);
        CHECK(tr.passed());
        // The type comes with a multiplicity strictly above the family size 1.
        bool typed = false;
        for (const PointVerdict& v : tr.verdicts)
            if (v.note.find("type") != std::string::npos) typed = true;
        CHECK(typed);
    }
    SUBCASE("families of two lines each") {
        LineSystem sys = generate_families(f7, 3, {2, 2, 2}, 1, 424);
        ProofTrace tr = multijoints_proof_trace(sys);
        CHECK(tr.joint_count >= 1);
        CHECK(tr.passed());
    }
    SUBCASE("no multijoints passes vacuously") {
        std::vector<LineEntry> entries{
            {canonicalize_line(Point(f7, {0, 0, 0}), unit(3, 0)), 1, 1u},
            {canonicalize_line(Point(f7, {0, 1, 1}), unit(3, 1)), 1, 2u},
            {canonicalize_line(Point(f7, {1, 0, 3}), unit(3, 2)), 1, 3u}};
        LineSystem sys(f7, 3, entries);
        ProofTrace tr = multijoints_proof_trace(sys);
        CHECK(tr.joint_count == 0);
        CHECK(tr.passed());
    }
    SUBCASE("missing labels are rejected") {
        CHECK_THROWS_AS(multijoints_proof_trace(generate_axes(f7, 3)), MissingFamilies);
    }
}

TEST_CASE("carbery audit") {
    PrimeField f5(5);
    SUBCASE("axes configuration with defaults") {
        CarberyAudit audit = carbery_audit(generate_axes(f5, 3), ThresholdOptions{});
        CHECK(audit.trace.passed());
        REQUIRE(audit.points.size() == 1);
        CHECK(audit.points[0].joint_mult == 6);
        CHECK(audit.points[0].minima == std::vector<u64>{3, 2, 1});
    }
    SUBCASE("invalid B") {
        ThresholdOptions opt;
        opt.b = 0;
        CHECK_THROWS_AS(carbery_audit(generate_axes(f5, 3), opt), BadParams);
    }
    SUBCASE("full-strength growth triggers the budget guard") {
        ThresholdOptions opt;
        opt.growth = 100;
        CHECK_THROWS_AS(carbery_audit(generate_axes(f5, 3), opt), InfeasibleThresholds);
    }
    SUBCASE("no joints is vacuous") {
        std::vector<LineEntry> entries{
            {canonicalize_line(Point(f5, {0, 0, 0}), unit(3, 2)), 1, std::nullopt}};
        CarberyAudit audit = carbery_audit(LineSystem(f5, 3, entries), ThresholdOptions{});
        CHECK(audit.trace.passed());
        CHECK(audit.points.empty());
    }
}

TEST_CASE("certificates always satisfy their systems") {
    PrimeField f(7);
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> pts;
        for (u64 i = 0; i < 3 + rng.below(8); ++i) pts.push_back(random_point(f, 3, rng));
        ConstraintSystem cs = vanishing_constraints(f, 3, pts, min_degree_for(pts.size(), 3));
        Certificate cert = solve_certificate(cs);
        MonomialTable tab(3, cert.system.degree_bound);
        for (const ConstraintRow& row : cert.system.rows) {
            u64 acc = 0;
            for (const auto& [col, val] : row.entries)
                acc = f.add(acc, f.mul(val, cert.q.coeff(tab.at(col))));
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("traces in other dimensions") {
    SUBCASE("joints trace for d = 2") {
        PrimeField f5(5);
        ProofTrace tr = joints_proof_trace(generate_grid(f5, 2));
        CHECK(tr.joint_count == 25);
        CHECK(tr.passed());
    }
    SUBCASE("joints trace for d = 4") {
        PrimeField f3(3);
        ProofTrace tr = joints_proof_trace(generate_axes(f3, 4));
        CHECK(tr.joint_count == 1);
        CHECK(tr.passed());
    }
    SUBCASE("multijoints trace for d = 2") {
        PrimeField f7(7);
        LineSystem sys = generate_families(f7, 2, {2, 2}, 1, 31);
        ProofTrace tr = multijoints_proof_trace(sys);
        CHECK(tr.joint_count >= 1);
        CHECK(tr.passed());
    }
    SUBCASE("carbery audit for d = 2 and d = 4") {
        PrimeField f5(5);
        CarberyAudit a2 = carbery_audit(generate_axes(f5, 2), ThresholdOptions{});
        CHECK(a2.trace.passed());
        PrimeField f3(3);
        CarberyAudit a4 = carbery_audit(generate_axes(f3, 4), ThresholdOptions{});
        CHECK(a4.trace.passed());
        REQUIRE(a4.points.size() == 1);
        CHECK(a4.points[0].joint_mult == 24);
    }
}

TEST_CASE("weighted_kill_constraints") {
    PrimeField f5(5);
    SUBCASE("no records give an empty system") {
        ConstraintSystem cs = weighted_kill_constraints({}, ThresholdOptions{}, 0);
        CHECK(cs.rows.empty());
    }
    SUBCASE("axes record produces the floored box and a valid certificate") {
        LineSystem axes = generate_axes(f5, 3);
        Point origin(f5, {0, 0, 0});
        JointRecord rec = analyze_point(axes, origin);
        REQUIRE(rec.joint_mult == 6);
        std::vector<KillBox> boxes;
        u64 deg = min_degree_for(12, 3); // the 2*2*3 box
        ConstraintSystem cs = weighted_kill_constraints({rec}, ThresholdOptions{}, deg, &boxes);
        REQUIRE(boxes.size() == 1);
        CHECK(boxes[0].limits == std::vector<u64>{1, 1, 2});
        CHECK(cs.rows.size() == 12);
        Certificate cert = solve_certificate(cs);
        MonomialTable tab(3, deg);
        SparsePoly r = pullback_dense(cert.q, boxes[0].transform, tab);
        for (u32 a = 0; a <= 1; ++a)
            for (u32 b = 0; b <= 1; ++b)
                for (u32 c = 0; c <= 2; ++c) CHECK(r.coeff(Monomial({a, b, c})) == 0);
    }
}

TEST_CASE("traces tolerate repeated lines") {
    PrimeField f5(5);
    std::vector<LineEntry> entries;
    for (std::size_t i = 0; i < 3; ++i) {
        Vec dir(3, 0);
        dir[i] = 1;
        entries.push_back(LineEntry{canonicalize_line(Point(f5, Vec(3, 0)), dir),
                                    i == 0 ? u64{2} : u64{1}, std::nullopt});
    }
    LineSystem sys(f5, 3, entries);
    CHECK(sys.total_multiplicity() == 4);
    ProofTrace tr = joints_proof_trace(sys);
    CHECK(tr.joint_count == 1);
    CHECK(tr.passed());
    CarberyAudit audit = carbery_audit(sys, ThresholdOptions{});
    CHECK(audit.trace.passed());
    REQUIRE(audit.points.size() == 1);
    CHECK(audit.points[0].joint_mult == 12); // the doubled axis doubles the tuples
}

TEST_CASE("multijoints trace with a line shared across families") {
    PrimeField f7(7);
    Point origin(f7, Vec(3, 0));
    auto mk = [&](std::size_t i) {
        Vec dir(3, 0);
        dir[i] = 1;
        return canonicalize_line(origin, dir);
    };
    std::vector<LineEntry> entries{{mk(0), 1, 1u},
                                   {mk(0), 1, 2u}, // the x-axis again, in family 2
                                   {mk(1), 1, 2u},
                                   {mk(2), 1, 3u}};
    LineSystem sys(f7, 3, entries);
    CHECK(multijoint_multiplicity(sys, origin) == 1); // picking it twice is dependent
    ProofTrace tr = multijoints_proof_trace(sys);
    CHECK(tr.joint_count == 1);
    CHECK(tr.passed());
}

TEST_CASE("grids over the smallest fields certify end to end") {
    PrimeField f2(2);
    LineSystem g2 = generate_grid(f2, 3); // 12 lines, every point a joint
    CHECK(find_joints(g2).size() == 8);
    CHECK(joints_proof_trace(g2).passed());
    CHECK(carbery_audit(g2, ThresholdOptions{}).trace.passed());

    PrimeField f3(3);
    LineSystem g3 = generate_grid(f3, 3);
    CHECK(find_joints(g3).size() == 27);
    ProofTrace tr = joints_proof_trace(g3);
    CHECK(tr.passed());
    CarberyAudit audit = carbery_audit(g3, ThresholdOptions{});
    CHECK(audit.trace.passed());
    CHECK(audit.points.size() == 27);
    for (const CarberyPointReport& pr : audit.points) {
        CHECK(pr.joint_mult == 6);
        CHECK(pr.minima == std::vector<u64>{3, 2, 1});
    }
}
