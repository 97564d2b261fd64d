#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "gridroute/geometry.hpp"
#include "helpers.hpp"

using namespace gridroute;
using testutil::Rng;

TEST_CASE("hull of a singleton is the single-vertex polygon") {
    Polygon h = hull({make_pt(0, 0)});
    REQUIRE(h.degenerate());
    REQUIRE(h.size() == 1);
    REQUIRE(h.vertices[0] == make_pt(0, 0));
}

TEST_CASE("hull drops interior points") {
    Polygon h = hull({make_pt(0, 0), make_pt(2, 0), make_pt(0, 2), make_pt(1, 1)});
    REQUIRE(h.size() == 3);
    for (const Pt& v : h.vertices) REQUIRE(v != make_pt(1, 1));
}

TEST_CASE("hull of collinear points keeps the endpoints") {
    Polygon h = hull({make_pt(0, 0), make_pt(1, 1), make_pt(2, 2), make_pt(3, 3)});
    REQUIRE(h.degenerate());
    REQUIRE(h.size() == 2);
    REQUIRE(h.vertices[0] == make_pt(0, 0));
    REQUIRE(h.vertices[1] == make_pt(3, 3));
}

TEST_CASE("hull contains every input point") {
    Rng rng(20240601);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Pt> pts;
        for (int i = 0; i < 100; ++i)
            pts.push_back(Pt{testutil::rand_rat(rng, 0, 50), testutil::rand_rat(rng, 0, 50)});
        Polygon h = hull(pts);
        for (const Pt& p : pts) REQUIRE(point_in_polygon(h, p));
    }
}

TEST_CASE("lattice points of the unit square") {
    Polygon sq = make_polygon({make_pt(0, 0), make_pt(1, 0), make_pt(1, 1), make_pt(0, 1)});
    auto pts = lattice_points(sq);
    REQUIRE(pts.size() == 4);
}

TEST_CASE("lattice points of the 3-3 right triangle") {
    Polygon tri = make_polygon({make_pt(0, 0), make_pt(3, 0), make_pt(0, 3)});
    auto pts = lattice_points(tri);
    REQUIRE(pts == testutil::lattice_points_bruteforce(tri));
    REQUIRE(pts.size() == 10);
}

TEST_CASE("lattice points of a half-integer triangle") {
    Polygon tri = make_polygon({Pt{Rat(1, 2), Rat(1, 2)}, Pt{Rat(5, 2), Rat(1, 2)},
                                Pt{Rat(1, 2), Rat(5, 2)}});
    auto pts = lattice_points(tri);
    std::vector<Cell> want = {Cell{1, 2}, Cell{1, 1}, Cell{2, 1}};
    REQUIRE(pts == want);
}

TEST_CASE("lattice membership agrees with the half-plane predicate") {
    Rng rng(7113);
    for (int trial = 0; trial < 40; ++trial) {
        Polygon poly = testutil::random_convex_polygon(rng, 12, 12, 10, 3);
        REQUIRE(lattice_points(poly) == testutil::lattice_points_bruteforce(poly));
        REQUIRE(lattice_points(poly, true) == testutil::strict_interior_bruteforce(poly));
    }
}

TEST_CASE("find_spine on the square uses the leftmost common x") {
    Polygon sq = make_polygon({make_pt(0, 0), make_pt(2, 0), make_pt(2, 2), make_pt(0, 2)});
    SpineInfo s = find_spine(sq);
    REQUIRE(s.orientation == SpineOrientation::vertical);
    REQUIRE(s.coordinate == Rat(0));
    REQUIRE(s.endpoints[0] == make_pt(0, 2));
    REQUIRE(s.endpoints[1] == make_pt(0, 0));
}

TEST_CASE("find_spine on a triangle with an apex") {
    Polygon tri = make_polygon({make_pt(0, 0), make_pt(4, 0), make_pt(2, 3)});
    SpineInfo s = find_spine(tri);
    REQUIRE(s.orientation == SpineOrientation::vertical);
    REQUIRE(s.coordinate == Rat(2));
}

TEST_CASE("find_spine by exact extreme-point scan") {
    // Extreme faces are single vertices whose intervals do not meet: no spine.
    Polygon tri = make_polygon({make_pt(0, 0), make_pt(4, 1), make_pt(1, 3)});
    REQUIRE(find_spine(tri).orientation == SpineOrientation::none);
    // A hexagon with matching top/bottom vertices.
    Polygon hex = make_polygon({make_pt(1, 0), make_pt(3, 1), make_pt(3, 3), make_pt(1, 4),
                                make_pt(0, 3), make_pt(0, 1)});
    SpineInfo s = find_spine(hex);
    REQUIRE(s.orientation == SpineOrientation::vertical);
    REQUIRE(s.coordinate == Rat(1));
}

TEST_CASE("shear factor from the extreme points") {
    Polygon p = make_polygon({make_pt(2, 0), make_pt(6, 5), make_pt(5, 10)});
    auto [shear, out] = shear_to_burger_bun(p);
    REQUIRE(shear.m == Rat(-3, 10));
    REQUIRE(find_spine(out).orientation == SpineOrientation::vertical);
    // sheared top x = 5 - (3/10)*10 = 2 = bottom x
    REQUIRE(shear.apply(make_pt(5, 10)).x == Rat(2));
}

TEST_CASE("axis-symmetric polygon shears with m = 0") {
    Polygon p = make_polygon({make_pt(0, 0), make_pt(1, 1), make_pt(0, 3), make_pt(-1, 1)});
    auto [shear, out] = shear_to_burger_bun(p);
    REQUIRE(shear.m == Rat(0));
    for (size_t i = 0; i < p.vertices.size(); ++i) REQUIRE(out.vertices[i] == p.vertices[i]);
}

TEST_CASE("shear yields a vertical spine and at most doubled width") {
    Rng rng(99182);
    int done = 0;
    while (done < 40) {
        Polygon poly = testutil::random_convex_polygon(rng, 10, 20, 10, 3);
        if (poly.width() > poly.height()) continue;
        if (poly.height() == 0) continue;
        ++done;
        auto [shear, out] = shear_to_burger_bun(poly);
        REQUIRE((shear.m <= 1 && shear.m >= -1));
        REQUIRE(find_spine(out).orientation == SpineOrientation::vertical);
        REQUIRE(out.width() <= 2 * poly.width());
        REQUIRE(out.height() == poly.height());
    }
}

TEST_CASE("triangle point bound is vacuous for small triangles") {
    Polygon t = make_polygon({make_pt(0, 0), make_pt(10, 0), make_pt(0, 10)});
    REQUIRE(triangle_point_bound(t) < 1);
}

TEST_CASE("triangle point bound on the 100-leg right triangle") {
    Polygon t = make_polygon({make_pt(0, 0), make_pt(100, 0), make_pt(0, 100)});
    int64_t bound = triangle_point_bound(t);
    REQUIRE(bound == 4319);
    auto interior = lattice_points(t, true);
    REQUIRE(interior.size() == 4851);
    REQUIRE(bound <= static_cast<int64_t>(interior.size()));
}

TEST_CASE("triangle point bound never exceeds the enumerated interior") {
    Rng rng(5150);
    int done = 0;
    while (done < 60) {
        int64_t legx = testutil::rand_range(rng, 1, 120);
        int64_t legy = testutil::rand_range(rng, 1, 120);
        Rat x0 = testutil::rand_rat(rng, 0, 3, 3), y0 = testutil::rand_rat(rng, 0, 3, 3);
        std::vector<Pt> v = {Pt{x0, y0}, Pt{x0 + Rat(legx), y0}, Pt{x0, y0 + Rat(legy)}};
        if (testutil::rand_below(rng, 2)) std::swap(v[1], v[2]);
        Polygon t;
        try {
            t = make_polygon(v);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++done;
        int64_t bound = triangle_point_bound(t);
        if (bound >= 1) {
            auto interior = lattice_points(t, true);
            REQUIRE(bound <= static_cast<int64_t>(interior.size()));
        }
    }
}

TEST_CASE("triangle point bound rejects inputs without an axis-parallel side") {
    Polygon t = make_polygon({make_pt(0, 0), make_pt(3, 1), make_pt(1, 3)});
    REQUIRE_THROWS_AS(triangle_point_bound(t), std::invalid_argument);
}

TEST_CASE("mirror axis rounding") {
    REQUIRE(mirror_axis(Rat(7)) == Rat(7));
    REQUIRE(mirror_axis(Rat(7, 2)) == Rat(7, 2));
    REQUIRE(mirror_axis(Rat(10, 3)) == Rat(7, 2));
    Rng rng(4242);
    for (int i = 0; i < 200; ++i) {
        Rat s = testutil::rand_rat(rng, -20, 20, 7);
        Rat a = mirror_axis(s);
        REQUIRE(is_integer(2 * a));
        // reflection maps integers to integers
        Rat reflected = 2 * a - Rat(testutil::rand_range(rng, -30, 30));
        REQUIRE(is_integer(reflected));
    }
}

namespace {

int64_t boundary_lattice_count(const Polygon& t) {
    int64_t b = 0;
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        const Pt& a = t.vertices[i];
        const Pt& c = t.vertices[(i + 1) % t.vertices.size()];
        int64_t dx = std::abs(to_i64(rat_num(c.x - a.x)));
        int64_t dy = std::abs(to_i64(rat_num(c.y - a.y)));
        b += std::gcd(dx, dy);
    }
    return b;
}

}  // namespace

TEST_CASE("Pick's theorem holds on lattice triangles") {
    Rng rng(31337);
    int done = 0;
    while (done < 100) {
        Pt a = make_pt(testutil::rand_range(rng, 0, 15), testutil::rand_range(rng, 0, 15));
        Pt b = make_pt(testutil::rand_range(rng, 0, 15), testutil::rand_range(rng, 0, 15));
        Pt c = make_pt(testutil::rand_range(rng, 0, 15), testutil::rand_range(rng, 0, 15));
        if (cross(a, b, c) < 0) std::swap(b, c);
        Polygon t;
        try {
            t = make_polygon({a, b, c});
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++done;
        int64_t interior = static_cast<int64_t>(lattice_points(t, true).size());
        int64_t boundary = boundary_lattice_count(t);
        REQUIRE(static_cast<int64_t>(lattice_points(t).size()) == interior + boundary);
        REQUIRE(polygon_area(t) == Rat(interior) + Rat(boundary, 2) - 1);
    }
}

TEST_CASE("decimal parsing is exact") {
    REQUIRE(parse_decimal("1.25") == Rat(5, 4));
    REQUIRE(parse_decimal("-3") == Rat(-3));
    REQUIRE(parse_decimal("0.1") == Rat(1, 10));
    REQUIRE(parse_decimal("+2.50") == Rat(5, 2));
    REQUIRE_THROWS_AS(parse_decimal("1.2.3"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_decimal(""), std::invalid_argument);
}

TEST_CASE("polygon constructor rejects collinear triples") {
    REQUIRE_THROWS_AS(make_polygon({make_pt(0, 0), make_pt(1, 0), make_pt(2, 0)}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(make_polygon({make_pt(0, 0), make_pt(0, 2), make_pt(2, 0)}),
                      std::invalid_argument);  // clockwise
}
