#include <doctest.h>

#include <algorithm>

#include "rfhkit/mb/cascades2d.hpp"
#include "rfhkit/mb/datum.hpp"
#include "rfhkit/mb/rfh_complex.hpp"

using namespace rfh::mb;
using rfh::z2::DegreeDims;
using rfh::z2::Gf2Matrix;

TEST_CASE("teapot complex") {
    const MorseBottDatum d = teapot_datum();
    const auto c = build_complex(d);
    CHECK(c.lo() == 0);
    CHECK(c.hi() == 2);
    CHECK(c.boundary(2) == Gf2Matrix::from_rows({{1, 1}, {0, 0}}));
    CHECK(c.boundary(1) == Gf2Matrix::from_rows({{0, 1}, {0, 1}}));
    CHECK(rfh::z2::homology_dims(c) == DegreeDims{{0, 1}, {1, 0}, {2, 1}});
    CHECK(c.labels(1) == std::vector<std::string>{"saddle:pt", "ridge:min"});
}

TEST_CASE("sphere complexes") {
    for (int n = 1; n <= 5; ++n) {
        const auto c = build_complex(sphere_datum(n));
        for (int k = 1; k <= 2 * n - 1; ++k)
            CHECK(c.boundary(k) == (k % 2 == 0 ? Gf2Matrix::from_rows({{1}}) : Gf2Matrix(1, 1)));
        DegreeDims expected;
        for (int k = 0; k <= 2 * n - 1; ++k) expected[k] = (k == 0 || k == 2 * n - 1) ? 1 : 0;
        CHECK(rfh::z2::homology_dims(c) == expected);
    }
    CHECK_THROWS_AS(sphere_datum(0), std::invalid_argument);
}

TEST_CASE("datum validation") {
    MorseBottDatum d = teapot_datum();
    d.cascades.push_back({0, 4, 1});  // degree 2 -> 0
    CHECK_THROWS_WITH_AS(build_complex(d), doctest::Contains("degree"), std::invalid_argument);
    d = teapot_datum();
    d.cascades = {{4, 1, 1}};  // wrong direction
    CHECK_THROWS_AS(build_complex(d), std::invalid_argument);
    d = teapot_datum();
    d.cascades.push_back({0, 2, 1});  // top -> ridge:min would need a matching cascade to the basins
    CHECK_THROWS_WITH_AS(build_complex(d), doctest::Contains("d^2"), std::invalid_argument);
    CHECK_THROWS_AS(teapot_datum().find("min"), std::invalid_argument);
    CHECK(teapot_datum().find("pt") == 1);
    CHECK_THROWS_AS(teapot_datum().find("nothing"), std::invalid_argument);
    CHECK(build_complex(MorseBottDatum{}).empty());
}

TEST_CASE("datum json round trip") {
    const MorseBottDatum d = teapot_datum();
    const MorseBottDatum back = datum_from_json(to_json(d));
    CHECK(to_json(back) == to_json(d));
    CHECK(build_complex(back).boundary(2) == build_complex(d).boundary(2));
    CHECK_THROWS(datum_from_json(nlohmann::json{{"points", nlohmann::json::array()}}));
}

TEST_CASE("markdown") {
    CHECK(markdown_table({{0, 1}, {1, 0}}) == "| degree | dim |\n|---|---|\n| 0 | 1 |\n| 1 | 0 |\n");
}

TEST_CASE("fixed point contribution") {
    const FixedPointSpec circle = fixed_point_spec_from_datum(sphere_datum(1));
    CHECK(circle.betti == std::vector<std::size_t>{1, 1});
    const FixedPointRfh r = fixed_point_rfh(circle);
    CHECK(r.dims == DegreeDims{{0, 1}, {1, 1}});
    CHECK_FALSE(r.note.empty());
    CHECK(fixed_point_spec_from_datum(single_minimum_datum()).betti == std::vector<std::size_t>{1});
}

TEST_CASE("teapot cascades counted numerically match the datum") {
    const GradientModel2D model = teapot_profile();
    const MorseBottDatum d = teapot_datum();
    const auto c = build_complex(d);
    for (std::size_t src = 0; src < d.points.size(); ++src) {
        for (std::size_t dst = 0; dst < d.points.size(); ++dst) {
            if (d.degree(dst) != d.degree(src) - 1) continue;
            const std::string from = d.full_label(src), to = d.full_label(dst);
            CAPTURE(from);
            CAPTURE(to);
            CHECK(model.point(from).index == d.degree(src));
            const auto& rows = c.labels(d.degree(dst));
            const auto& cols = c.labels(d.degree(src));
            const auto r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), to) - rows.begin());
            const auto col = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), from) - cols.begin());
            CHECK(count_cascades_2d(model, from, to) == static_cast<int>(c.boundary(d.degree(src)).get(r, col)));
        }
    }
}

TEST_CASE("round sphere height function") {
    const GradientModel2D s = round_sphere_height();
    CHECK(count_cascades_2d(s, "north", "south") == 0);  // index gap 2
    CHECK(count_cascades_2d(s, "north", "north") == 0);
    CHECK_THROWS_AS(count_cascades_2d(s, "north", "east"), std::invalid_argument);
}
