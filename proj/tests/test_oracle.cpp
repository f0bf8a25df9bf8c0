#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "hull2d/datagen.hpp"
#include "hull2d/oracle.hpp"
#include "support.hpp"

using hull2d::EmptyInput;
using hull2d::Hull;
using hull2d::Point2;
using hull2d::TooLarge;
using hull2d::oracle::brute_force_hull;
using hull2d::oracle::monotone_chain;
using hull2d::oracle::same_vertex_set;
using hull2d::oracle::strictly_inside_hull;

TEST_CASE("monotone_chain returns canonical CCW strict hulls", "[oracle]") {
    const Hull square = monotone_chain(
        std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(square.vertices == std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    const Hull line = monotone_chain(std::vector<Point2>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(line.vertices == std::vector<Point2>{{0, 0}, {2, 0}});

    CHECK(monotone_chain(std::vector<Point2>{{4, 2}}).vertices == std::vector<Point2>{{4, 2}});
    CHECK(monotone_chain(std::vector<Point2>(4, Point2{1, 2})).vertices ==
          std::vector<Point2>{{1, 2}});
    CHECK_THROWS_AS(monotone_chain(std::vector<Point2>{}), EmptyInput);
}

TEST_CASE("monotone_chain is permutation invariant", "[oracle]") {
    std::mt19937_64 rng(19);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto pts = support::gen_grid(60, seed);
        const Hull reference = monotone_chain(pts);
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(pts.begin(), pts.end(), rng);
            CHECK(monotone_chain(pts).vertices == reference.vertices);
        }
    }
}

TEST_CASE("brute_force_hull handles the documented cases", "[oracle]") {
    const Hull tri =
        brute_force_hull(std::vector<Point2>{{0, 0}, {4, 0}, {0, 4}, {1, 1}});
    CHECK(tri.vertices == std::vector<Point2>{{0, 0}, {4, 0}, {0, 4}});

    CHECK(brute_force_hull(std::vector<Point2>{{7, -2}}).vertices ==
          std::vector<Point2>{{7, -2}});

    CHECK_THROWS_AS(brute_force_hull(std::vector<Point2>(65, Point2{0, 0})), TooLarge);
}

TEST_CASE("the two oracles agree on small inputs", "[oracle]") {
    namespace dg = hull2d::datagen;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 30;
        std::vector<Point2> pts;
        switch (seed % 4) {
            case 0: pts = dg::gen_square(n, seed); break;
            case 1: pts = dg::gen_disk(n, seed); break;
            case 2: pts = dg::gen_circle(std::max<std::size_t>(n, 3), seed); break;
            default: pts = support::gen_grid(n, seed); break;
        }
        const Hull bf = brute_force_hull(pts);
        const Hull mc = monotone_chain(pts);
        CHECK(bf.vertices == mc.vertices);  // identical canonical sequences
    }
}

TEST_CASE("strictly_inside_hull is strict", "[oracle]") {
    const Hull square = monotone_chain(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(strictly_inside_hull(square, {0.5, 0.5}));
    CHECK_FALSE(strictly_inside_hull(square, {0, 0.5}));  // on an edge
    CHECK_FALSE(strictly_inside_hull(square, {2, 2}));
    for (const Point2 v : square.vertices) CHECK_FALSE(strictly_inside_hull(square, v));

    const Hull segment = monotone_chain(std::vector<Point2>{{0, 0}, {2, 2}});
    CHECK_FALSE(strictly_inside_hull(segment, {1, 1}));  // no interior below 3 vertices
    const Hull point = monotone_chain(std::vector<Point2>{{1, 1}});
    CHECK_FALSE(strictly_inside_hull(point, {1, 1}));
}
