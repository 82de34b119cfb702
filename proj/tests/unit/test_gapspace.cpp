#include "stringcx/gap_space.hpp"
#include "stringcx/generators.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace stringcx;
using namespace testutil;

namespace {

std::vector<std::vector<Scalar>> exact_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Scalar>> m;
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        for (long long v : row) r.push_back(Scalar::exact(v));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

TEST_CASE("validate accepts the single point and the discrete metric") {
    CHECK(validate_gaps(exact_matrix({{0}})).ok);
    const GapSpace u4 = uniform_metric(4);
    CHECK(validate_gaps(u4.gaps()).ok);
    CHECK(u4.metric());
}

TEST_CASE("validate reports the violating triple") {
    const auto m = exact_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    const ValidationReport report = validate_gaps(m);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const Violation& v : report.violations)
        if (v.x == 0 && v.y == 1 && v.z == 2) {
            found = true;
            CHECK(v.lhs == Scalar::exact(2));
            CHECK(v.rhs == Scalar::exact(3));
        }
    CHECK(found);
    CHECK_THROWS_AS((void)GapSpace{m}, std::invalid_argument);
}

TEST_CASE("validate rejects malformed input") {
    auto ragged = exact_matrix({{0, 1}, {1}});
    CHECK_THROWS_AS(validate_gaps(ragged), std::invalid_argument);
    CHECK_THROWS_AS(validate_gaps(exact_matrix({{0}}), -1.0), std::invalid_argument);
    std::vector<std::vector<Scalar>> mixed = {{Scalar::exact(0), Scalar::real(1.0)},
                                              {Scalar::real(1.0), Scalar::exact(0)}};
    CHECK_THROWS_AS(validate_gaps(mixed), std::invalid_argument);
}

TEST_CASE("is_metric distinguishes metric from gap spaces") {
    CHECK(is_metric(uniform_metric(3)));
    CHECK_FALSE(is_metric(one_way_shortcut_space()));  // d(0,2)=1 but d(2,0)=2
    const GapSpace zeros(exact_matrix({{0, 0}, {0, 0}}));
    CHECK_FALSE(is_metric(zeros));  // off-diagonal zero
    CHECK(zeros.symmetric());
}

TEST_CASE("negative gaps are allowed when every ordered triangle holds") {
    const GapSpace s = negative_gap_space();
    CHECK(validate_gaps(s.gaps()).ok);
    CHECK_FALSE(s.symmetric());
    CHECK_FALSE(s.metric());
}

TEST_CASE("uniform_metric") {
    const GapSpace s = uniform_metric(3);
    CHECK(s.size() == 3);
    CHECK(s.gap(0, 1) == Scalar::exact(1));
    CHECK(s.gap(1, 1) == Scalar::exact(0));
    CHECK(uniform_metric(1).size() == 1);
    CHECK_THROWS_AS(uniform_metric(0), std::invalid_argument);
}

TEST_CASE("collinear_points") {
    const GapSpace s = collinear_points(exact_values({0, 5, 7, 12}));
    CHECK(s.gap(0, 1) == Scalar::exact(5));
    CHECK(s.gap(0, 2) == Scalar::exact(7));
    CHECK(s.gap(0, 3) == Scalar::exact(12));
    CHECK(s.gap(0, 2) + s.gap(2, 3) == s.gap(0, 3));
    CHECK(s.metric());
    CHECK(s.mode() == ScalarMode::exact);
    CHECK_THROWS_AS(collinear_points(exact_values({0, 1, 1})), std::invalid_argument);
}

TEST_CASE("two_parallel_lines") {
    const GapSpace s = two_parallel_lines(3, 3, Scalar::exact(1), Scalar::exact(1));
    CHECK(s.size() == 6);
    CHECK(s.mode() == ScalarMode::real);
    CHECK(s.gap(0, 1).as_double() == doctest::Approx(1.0));
    CHECK(s.gap(0, 2).as_double() == doctest::Approx(2.0));
    CHECK(s.gap(0, 4).as_double() == doctest::Approx(std::sqrt(2.0)));  // cross distance
    CHECK(s.metric());
    CHECK(two_parallel_lines(3, 4, Scalar::exact(2), Scalar::exact(1)).size() == 7);
    CHECK_THROWS_AS(two_parallel_lines(2, 3, Scalar::exact(1), Scalar::exact(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(two_parallel_lines(3, 3, Scalar::exact(0), Scalar::exact(1)),
                    std::invalid_argument);
}

TEST_CASE("polygon_points") {
    const GapSpace s = triangle_with_midpoints();
    CHECK(s.size() == 6);
    CHECK(s.metric());
    // Rejects a reflex quadrilateral.
    CHECK_THROWS_AS(polygon_points({3, 3, 3, 3},
                                   {{0.0, 0.0}, {2.0, 0.0}, {0.5, 0.5}, {0.0, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(polygon_points({3, 2, 3}, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}),
                    std::invalid_argument);
}

TEST_CASE("circle_arc_metric") {
    const GapSpace s = circle_arc_metric(exact_values({0, 2, 6, 8}), Scalar::exact(12));
    CHECK(s.gap(0, 1) == Scalar::exact(2));
    CHECK(s.gap(0, 2) == Scalar::exact(6));
    CHECK(s.gap(1, 2) == Scalar::exact(4));
    CHECK(s.gap(0, 3) == Scalar::exact(4));
    CHECK(s.metric());

    const GapSpace antipodal = circle_arc_metric(exact_values({0, 1}), Scalar::exact(2));
    CHECK(antipodal.gap(0, 1) == Scalar::exact(1));
    CHECK(antipodal.gap(1, 0) == Scalar::exact(1));

    CHECK_THROWS_AS(circle_arc_metric(exact_values({0, 12}), Scalar::exact(12)),
                    std::invalid_argument);
}

TEST_CASE("digraph_gaps shortest paths") {
    const GapSpace cyc = directed_three_cycle();
    CHECK(cyc.gap(0, 1) == Scalar::exact(1));
    CHECK(cyc.gap(1, 0) == Scalar::exact(2));
    CHECK_FALSE(cyc.symmetric());
    CHECK(validate_gaps(cyc.gaps()).ok);

    // A symmetric graph yields a symmetric space.
    std::mt19937 rng(7);
    CHECK(random_path_metric(5, rng).symmetric());

    CHECK_THROWS_AS(digraph_gaps(2, {{0, 1, Scalar::exact(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(digraph_gaps(2, {{0, 1, Scalar::exact(-1)}, {1, 0, Scalar::exact(1)}}),
                    std::invalid_argument);
}

TEST_CASE("float tolerance forgives representation noise") {
    // 0.1 + 0.2 lands on 0.30000000000000004 in doubles; a gap slightly
    // above that would fail a zero-tolerance scan.
    std::vector<std::vector<Scalar>> gaps(3, std::vector<Scalar>(3, Scalar::real(0.0)));
    gaps[0][1] = gaps[1][0] = Scalar::real(0.1);
    gaps[1][2] = gaps[2][1] = Scalar::real(0.2);
    gaps[0][2] = gaps[2][0] = Scalar::real(0.3000000000000001);
    CHECK_FALSE(validate_gaps(gaps, 0.0).ok);
    CHECK(validate_gaps(gaps, 1e-9).ok);
    const GapSpace s(gaps, {}, 1e-9);
    CHECK(s.metric());
}
