#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "hull2d/datagen.hpp"
#include "hull2d/oracle.hpp"
#include "hull2d/pipeline.hpp"
#include "support.hpp"

namespace dg = hull2d::datagen;
using hull2d::EmptyInput;
using hull2d::IoError;
using hull2d::ParseError;
using hull2d::Point2;

TEST_CASE("generators are deterministic per (n, seed)", "[datagen]") {
    CHECK(dg::gen_square(500, 11) == dg::gen_square(500, 11));
    CHECK(dg::gen_disk(500, 11) == dg::gen_disk(500, 11));
    CHECK(dg::gen_circle(500, 11) == dg::gen_circle(500, 11));
    CHECK(dg::gen_collinear(500, 11) == dg::gen_collinear(500, 11));
    CHECK(dg::gen_square(500, 11) != dg::gen_square(500, 12));
}

TEST_CASE("gen_square stays in the unit square and spreads evenly", "[datagen]") {
    const auto pts = dg::gen_square(100000, 3);
    std::size_t left_half = 0;
    for (const Point2 p : pts) {
        REQUIRE((p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0));
        if (p.x <= 0.5) ++left_half;
    }
    const double frac = double(left_half) / double(pts.size());
    CHECK(frac > 0.49);  // binomial: |frac - 0.5| < 0.01 at ~6 sigma
    CHECK(frac < 0.51);
}

TEST_CASE("gen_disk stays in the unit disk with uniform area density", "[datagen]") {
    const auto pts = dg::gen_disk(100000, 4);
    std::size_t inner = 0;
    for (const Point2 p : pts) {
        const double r2 = p.x * p.x + p.y * p.y;
        REQUIRE(r2 <= 1.0);
        if (r2 <= 0.25) ++inner;  // quarter of the area
    }
    const double frac = double(inner) / double(pts.size());
    CHECK(frac > 0.24);
    CHECK(frac < 0.26);
}

TEST_CASE("gen_circle points sit on the circle and are all extreme", "[datagen]") {
    const auto pts = dg::gen_circle(200, 5);
    for (const Point2 p : pts) {
        CHECK(std::abs(p.x * p.x + p.y * p.y - 1.0) <= 1e-12);
    }
    CHECK(hull2d::oracle::monotone_chain(pts).size() == 200);
}

TEST_CASE("on-circle input defeats both discard rounds", "[datagen]") {
    const auto pts = dg::gen_circle(1000, 9);
    const auto r = hull2d::full_pipeline(pts);
    CHECK(r.stats.n_after_round1 == 1000);
    CHECK(r.stats.n_after_round2 == 1000);
}

TEST_CASE("load_points parses the plain-XY format", "[datagen]") {
    support::TempFile file("0 0\n1 2.5\n");
    CHECK(dg::load_points(file.path()) == std::vector<Point2>{{0, 0}, {1, 2.5}});

    support::TempFile comments("# header\n\n  3 4\n# trailer\n");
    CHECK(dg::load_points(comments.path()) == std::vector<Point2>{{3, 4}});

    support::TempFile dup("1 1\n1 1\n");
    CHECK(dg::load_points(dup.path()).size() == 2);  // duplicates preserved
}

TEST_CASE("load_points reports empty and malformed inputs", "[datagen]") {
    support::TempFile empty("");
    CHECK_THROWS_AS(dg::load_points(empty.path()), EmptyInput);

    support::TempFile bad("a b\n");
    try {
        dg::load_points(bad.path());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }

    support::TempFile half("1 2\n3\n");
    try {
        dg::load_points(half.path());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    support::TempFile junk("1 2 3\n");
    CHECK_THROWS_AS(dg::load_points(junk.path()), ParseError);

    support::TempFile inf_line("inf 0\n");
    CHECK_THROWS_AS(dg::load_points(inf_line.path()), ParseError);

    CHECK_THROWS_AS(dg::load_points("does_not_exist.xy"), IoError);
}

TEST_CASE("load_obj_projected keeps only vertex lines", "[datagen]") {
    support::TempFile obj("v 1 2 3\nf 1 2 3\nv 4 5 6\n");
    CHECK(dg::load_obj_projected(obj.path()) == std::vector<Point2>{{1, 2}, {4, 5}});

    support::TempFile flat("v 1 2\n");
    CHECK(dg::load_obj_projected(flat.path()) == std::vector<Point2>{{1, 2}});

    support::TempFile prefixed("vt 0 0\nvn 1 0 0\nv 7 8 9 1.0\n");
    CHECK(dg::load_obj_projected(prefixed.path()) == std::vector<Point2>{{7, 8}});

    support::TempFile none("f 1 2 3\n# comment\n");
    CHECK_THROWS_AS(dg::load_obj_projected(none.path()), EmptyInput);

    support::TempFile broken("v 1\n");
    CHECK_THROWS_AS(dg::load_obj_projected(broken.path()), ParseError);

    CHECK_THROWS_AS(dg::load_obj_projected("missing.obj"), IoError);
}

TEST_CASE("materialize dispatches on the dataset kind", "[datagen]") {
    dg::DatasetSpec square{dg::DatasetKind::square, 50, 2, "", false};
    CHECK(dg::materialize(square) == dg::gen_square(50, 2));
    CHECK(dg::dataset_label(square) == "square");

    support::TempFile file("1 1\n2 2\n");
    dg::DatasetSpec from_file{dg::DatasetKind::file, 0, 0, file.path(), false};
    CHECK(dg::materialize(from_file).size() == 2);
    CHECK(dg::dataset_label(from_file) == file.path());
}
