#include <doctest.h>

#include "dilates/constructions.hpp"
#include "dilates/errors.hpp"
#include "dilates/structure.hpp"
#include "support.hpp"

using namespace dilates;
using namespace testsupport;

TEST_CASE("make_direction normalizes to a primitive representative") {
    CHECK(make_direction({2, 4}).v == Point{1, 2});
    CHECK(make_direction({-1, 2}).v == Point{1, -2});
    CHECK(make_direction({0, -3}).v == Point{0, 1});
    CHECK(make_direction({-6, -9}).v == Point{2, 3});
    CHECK_THROWS_AS(make_direction({0, 0}), std::invalid_argument);

    // idempotent and sign-canonical on random vectors
    SplitMix64 rng(31);
    for (int t = 0; t < 100; ++t) {
        Point v = random_point(rng, 3, -9, 9);
        if (v == Point{0, 0, 0}) continue;
        Direction d = make_direction(v);
        CHECK(make_direction(d.v) == d);
        Point neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        CHECK(make_direction(neg) == d);
    }
}

TEST_CASE("line_cover_number on known sets") {
    CHECK(line_cover_number(PointSet(2, {{0, 0}, {3, 6}, {1, 2}})).count == 1);

    PointSet a3(2, {{0, 1}, {1, 0}, {2, 0}});
    CoverReport r = line_cover_number(a3);
    CHECK(r.count == 2);
    CHECK(r.witness.v == Point{1, -1});  // lex-least of the tied directions
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0] == PointSet(2, {{0, 1}, {1, 0}}));
    CHECK(r.classes[1] == PointSet(2, {{2, 0}}));

    PointSet square(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CoverReport s = line_cover_number(square);
    CHECK(s.count == 2);
    CHECK(s.witness.v == Point{0, 1});

    CHECK_THROWS_AS(line_cover_number(PointSet(2, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("line cover classes are collinear and partition the set") {
    SplitMix64 rng(32);
    for (int t = 0; t < 80; ++t) {
        int d = 2 + static_cast<int>(rng.below(2));
        PointSet s = random_point_set(rng, d, 2 + rng.below(8), -4, 4);
        CoverReport r = line_cover_number(s);
        CHECK(r.count >= 1);
        CHECK(r.count <= s.size());
        CHECK(r.classes.size() == r.count);
        std::size_t total = 0;
        for (const PointSet& cls : r.classes) {
            total += cls.size();
            const Point& base = cls.points()[0];
            for (const Point& p : cls.points()) {
                if (p == base) continue;
                Point diff(p.size());
                for (std::size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - base[i];
                CHECK(make_direction(diff) == r.witness);
            }
        }
        CHECK(total == s.size());
        CHECK((r.count == 1) == (affine_rank(s) <= 1));
    }
}

TEST_CASE("hyperplane_cover_count counts distinct inner products") {
    PointSet a4(2, {{0, 1}, {1, 0}, {2, 0}, {3, 0}});
    CHECK(hyperplane_cover_count(a4, make_direction({0, 1})) == 2);
    CHECK(hyperplane_cover_count(a4, make_direction({1, 0})) == 4);
    CHECK(hyperplane_cover_count(a4, make_direction({1, 1})) == 3);
}

TEST_CASE("min_hyperplane_cover on known sets") {
    PointSet square(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CoverReport r = min_hyperplane_cover(square);
    CHECK(r.count == 2);
    CHECK(r.witness.v == Point{0, 1});

    PointSet a4_3 = construct_an(3, 4);  // {e1, e2, e3, 2e1, 3e1}
    CoverReport h = min_hyperplane_cover(a4_3);
    CHECK(h.count == 2);
    CHECK(h.witness.v == Point{0, 0, 1});
    REQUIRE(h.classes.size() == 2);
    CHECK(h.classes[0].size() + h.classes[1].size() == a4_3.size());

    // lines are weaker than hyperplanes in dimension three: the axis run of
    // A_N collapses onto one line but each basis point still needs its own
    CoverReport l = line_cover_number(construct_an(3, 5));
    CHECK(l.count == 3);
    CHECK(l.witness.v == Point{1, 0, 0});

    // dimension below two is a parameter error; rank below d a hypothesis one
    CHECK_THROWS_AS(min_hyperplane_cover(PointSet(1, {{0}, {1}})), std::invalid_argument);
    CHECK_THROWS_AS(min_hyperplane_cover(PointSet(2, {{0, 0}, {1, 1}})), HypothesisError);
}

TEST_CASE("min_hyperplane_cover is consistent and minimal among probes") {
    SplitMix64 rng(33);
    int done = 0;
    while (done < 60) {
        int d = 2 + static_cast<int>(rng.below(2));
        PointSet s = random_point_set(rng, d, static_cast<std::size_t>(d) + 1 + rng.below(6),
                                      -3, 3);
        if (affine_rank(s) != static_cast<std::size_t>(d)) continue;
        ++done;
        CoverReport r = min_hyperplane_cover(s);
        CHECK(r.count >= 2);  // one hyperplane cannot hold a full-rank set
        CHECK(hyperplane_cover_count(s, r.witness) == r.count);

        // no probed normal beats the reported minimum
        for (int probe = 0; probe < 20; ++probe) {
            Point v = random_point(rng, d, -5, 5);
            bool zero = true;
            for (Int x : v) zero = zero && x == 0;
            if (zero) continue;
            CHECK(hyperplane_cover_count(s, make_direction(v)) >= r.count);
        }

        // classes are the level sets of the witness normal
        std::size_t total = 0;
        for (const PointSet& cls : r.classes) {
            total += cls.size();
            Int level = 0;
            bool first = true;
            for (const Point& p : cls.points()) {
                Int dot = 0;
                for (std::size_t i = 0; i < p.size(); ++i)
                    dot = checked_add(dot, checked_mul(p[i], r.witness.v[i]));
                if (first) {
                    level = dot;
                    first = false;
                } else {
                    CHECK(dot == level);
                }
            }
        }
        CHECK(total == s.size());

        // in the plane, lines and hyperplanes are the same covers
        if (d == 2) CHECK(line_cover_number(s).count == r.count);
    }
}
