#include "stringcx/persistence.hpp"

#include "stringcx/generators.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <set>

using namespace stringcx;
using namespace testutil;

namespace {

/// Multisets of (degree, birth, death) agree.
bool same_intervals(const Barcode& a, const Barcode& b) {
    auto key = [](const Interval& iv) {
        return std::make_tuple(iv.degree, iv.birth.str(),
                               iv.death ? iv.death->str() : std::string("inf"));
    };
    std::multiset<std::tuple<int, std::string, std::string>> ka, kb;
    for (const auto& iv : a.intervals) ka.insert(key(iv));
    for (const auto& iv : b.intervals) kb.insert(key(iv));
    return ka == kb;
}

}  // namespace

TEST_CASE("filtration of collinear points is born at zero") {
    const Filtration f = build_filtration(collinear_points(exact_values({0, 1, 2})));
    CHECK(f.size() == 7);
    for (const auto& e : f.entries()) CHECK(e.birth == Scalar::exact(0));
}

TEST_CASE("filtration of the discrete triple is born at one") {
    const Filtration f = build_filtration(uniform_metric(3));
    CHECK(f.size() == 7);
    for (const auto& e : f.entries()) CHECK(e.birth == Scalar::exact(1));
    // Faces precede cofaces within the equal-birth batch.
    for (std::size_t i = 1; i < f.entries().size(); ++i)
        CHECK(f.entries()[i - 1].dim() <= f.entries()[i].dim());
}

TEST_CASE("beyond the maximal excess the full simplex is present") {
    for (const GapSpace& s : {uniform_metric(4), ex5_circle_space(), negative_gap_space()}) {
        const Filtration f = build_filtration(s);
        CHECK(f.size() == (std::size_t(1) << s.size()) - 1);
    }
    // Fewer than 3 points: no simplex is ever born.
    CHECK(build_filtration(uniform_metric(2)).size() == 0);
}

TEST_CASE("barcode of the discrete triple") {
    const Barcode bc = barcode(build_filtration(uniform_metric(3)));
    REQUIRE(bc.intervals.size() == 1);
    CHECK(bc.intervals[0].degree == 0);
    CHECK(bc.intervals[0].birth == Scalar::exact(1));
    CHECK_FALSE(bc.intervals[0].death.has_value());
    CHECK(bc.suppressed_zero_length > 0);

    const Barcode with_zero =
        barcode(build_filtration(uniform_metric(3)), {.keep_zero_length = true});
    CHECK(with_zero.intervals.size() == 1 + bc.suppressed_zero_length);
}

TEST_CASE("barcode of collinear points is a single infinite bar") {
    const Barcode bc = barcode(build_filtration(collinear_points(exact_values({0, 1, 2, 3}))));
    REQUIRE(bc.intervals.size() == 1);
    CHECK(bc.intervals[0].degree == 0);
    CHECK(bc.intervals[0].birth == Scalar::exact(0));
    CHECK_FALSE(bc.intervals[0].death.has_value());
}

TEST_CASE("barcode of the circle-arc rectangle has a degree-2 bar") {
    const Barcode bc = barcode(build_filtration(ex5_circle_space()));
    REQUIRE(bc.intervals.size() == 2);
    CHECK(bc.intervals[0].degree == 0);
    CHECK_FALSE(bc.intervals[0].death.has_value());
    CHECK(bc.intervals[1].degree == 2);
    CHECK(bc.intervals[1].birth == Scalar::exact(0));
    REQUIRE(bc.intervals[1].death.has_value());
    CHECK(*bc.intervals[1].death == Scalar::exact(4));  // the 4-set's birth
}

TEST_CASE("betti curve slices the barcode") {
    const Barcode bc = barcode(build_filtration(ex5_circle_space()));
    const auto curve = betti_curve(
        bc, 2, {Scalar::exact(0), Scalar::exact(7, 2), Scalar::exact(4)});
    REQUIRE(curve.size() == 3);
    CHECK(curve[0].second == 1);
    CHECK(curve[1].second == 1);
    CHECK(curve[2].second == 0);

    const auto deg0 = betti_curve(bc, 0, {Scalar::exact(100)});
    CHECK(deg0[0].second == 1);

    const auto below = betti_curve(barcode(build_filtration(uniform_metric(3))), 0,
                                   {Scalar::exact(0), Scalar::exact(1, 2)});
    CHECK(below[0].second == 0);
    CHECK(below[1].second == 0);
}

TEST_CASE("barcode does not depend on the tie-break among equal births") {
    for (const GapSpace& s : {uniform_metric(4), ex5_circle_space(),
                              collinear_points(exact_values({0, 1, 3, 7})), negative_gap_space()}) {
        const Filtration f = build_filtration(s);
        const Barcode lex = barcode(f, {.tie_break = TieBreak::lex});
        const Barcode rev = barcode(f, {.tie_break = TieBreak::revlex});
        CHECK(same_intervals(lex, rev));
    }
}

TEST_CASE("interval counts match the level-complex Betti numbers") {
    std::mt19937 rng(20240811);
    const GapSpace s = random_path_metric(6, rng);
    const Filtration f = build_filtration(s);
    const Barcode bc = barcode(f);

    std::vector<Scalar> births;
    for (const auto& e : f.entries()) births.push_back(e.birth);
    births.push_back(births.back() + Scalar::exact(1));

    for (const Scalar& eps : births) {
        const StringComplex level = build_complex(enumerate_eps_strings(s, eps));
        const HomologyResult h = homology(level, Coefficients::mod2);
        for (int d = 0; d < 6; ++d) {
            const long expected =
                d < static_cast<int>(h.betti.size()) ? h.betti[d] : 0;
            const auto curve = betti_curve(bc, d, {eps});
            CHECK(curve[0].second == expected);
        }
    }
}

TEST_CASE("filtration prefixes equal the level complexes") {
    const GapSpace s = ex5_circle_space();
    const Filtration f = build_filtration(s);
    for (const Scalar& eps : {Scalar::exact(0), Scalar::exact(2), Scalar::exact(4)}) {
        std::set<std::vector<int>> from_filtration;
        for (const auto& e : f.entries())
            if (leq(e.birth, eps, f.tolerance())) from_filtration.insert(e.vertices);
        std::set<std::vector<int>> from_enumeration;
        for (const auto& [tuple, rec] : enumerate_eps_strings(s, eps))
            from_enumeration.insert(tuple);
        CHECK(from_filtration == from_enumeration);
    }
}

TEST_CASE("barcode rejects a face-order violation") {
    std::vector<FiltrationEntry> entries = {
        {{0, 1}, Scalar::exact(0)}, {{0}, Scalar::exact(0)}, {{1}, Scalar::exact(0)}};
    const Filtration bad(std::move(entries), ScalarMode::exact, 0.0, 2);
    CHECK_THROWS_AS(barcode(bad), std::invalid_argument);
}

TEST_CASE("max_dim caps the filtration") {
    const GapSpace line = collinear_points(exact_values({0, 1, 2, 3, 4}));
    const Filtration f = build_filtration(line, 1);
    CHECK(f.size() == 5 + 10);  // vertices and edges only
}
