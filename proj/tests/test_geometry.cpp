#include <random>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "planecensus/geometry.hpp"

using namespace planecensus;

TEST_CASE("orient basic cases") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Orientation::CCW);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == Orientation::CW);
}

TEST_CASE("orient is antisymmetric under argument swaps") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    int o = static_cast<int>(orient(a, b, c));
    CHECK(static_cast<int>(orient(b, a, c)) == -o);
    CHECK(static_cast<int>(orient(a, c, b)) == -o);
    CHECK(static_cast<int>(orient(c, b, a)) == -o);
  }
}

TEST_CASE("segments_properly_cross") {
  CHECK(segments_properly_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_properly_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));
  CHECK_FALSE(segments_properly_cross({0, 0}, {1, 0}, {0, 2}, {1, 2}));
}

TEST_CASE("crossing is symmetric in segments and endpoints") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    Point c{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};
    bool x = segments_properly_cross(a, b, c, d);
    CHECK(segments_properly_cross(c, d, a, b) == x);
    CHECK(segments_properly_cross(b, a, c, d) == x);
    CHECK(segments_properly_cross(a, b, d, c) == x);
  }
}

TEST_CASE("make_point_set computes hull and h") {
  PointSet square = make_point_set({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}});
  CHECK(square.h == 4);
  CHECK(square.interior() == std::vector<int>{4});

  PointSet tri = make_point_set({{0, 0}, {6, 0}, {1, 5}, {2, 1}});
  CHECK(tri.h == 3);
}

TEST_CASE("make_point_set rejects degenerate input") {
  CHECK_THROWS_AS(make_point_set({{0, 0}, {1, 1}, {2, 2}, {5, 0}}), CollinearTripleError);
  CHECK_THROWS_AS(make_point_set({{0, 0}, {1, 2}, {0, 0}}), DuplicatePointError);
  try {
    make_point_set({{0, 0}, {9, 7}, {1, 1}, {2, 2}, {5, 0}});
    FAIL("expected CollinearTripleError");
  } catch (const CollinearTripleError& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 2);
    CHECK(e.c == 3);
  }
}

TEST_CASE("generators produce the documented hull sizes") {
  CHECK(generate(GeneratorKind::Convex, 8).h == 8);
  CHECK(generate(GeneratorKind::ConvexChain, 5).h == 3);
  PointSet r = generate(GeneratorKind::RandomTriangular, 7, 42);
  CHECK(r.h == 3);
  CHECK(r.n == 7);
}

TEST_CASE("generation is deterministic and re-validates") {
  for (GeneratorKind kind : {GeneratorKind::Convex, GeneratorKind::ConvexChain,
                             GeneratorKind::RandomTriangular}) {
    PointSet a = generate(kind, 7, 3);
    PointSet b = generate(kind, 7, 3);
    CHECK(a.points == b.points);
    PointSet again = make_point_set(a.points);
    CHECK(again.hull == a.hull);
  }
  CHECK(generate(GeneratorKind::RandomTriangular, 7, 3).points !=
        generate(GeneratorKind::RandomTriangular, 7, 4).points);
}

TEST_CASE("chain apex sees every chain point") {
  for (int n = 4; n <= 10; ++n) {
    PointSet s = generate(GeneratorKind::ConvexChain, n);
    const Point& apex = s.points.back();
    for (int q = 0; q + 1 < s.n; ++q)
      for (int i = 0; i + 1 < s.n; ++i)
        for (int j = i + 1; j + 1 < s.n; ++j)
          CHECK_FALSE(segments_properly_cross(apex, s.points[q], s.points[i], s.points[j]));
  }
}

TEST_CASE("point-set text format round trip") {
  PointSet s = generate(GeneratorKind::RandomTriangular, 6, 9);
  std::ostringstream out;
  write_point_set(out, s);
  std::istringstream in(out.str());
  PointSet back = read_point_set(in);
  CHECK(back.points == s.points);
  CHECK(back.hull == s.hull);
}

TEST_CASE("point-set parser accepts comments and CRLF") {
  std::istringstream in("# four points\r\n4\r\n0 0\r\n 7 0\n# mid\n7 7\n0 7\r\n");
  PointSet s = read_point_set(in);
  CHECK(s.n == 4);
  CHECK(s.h == 4);
}

TEST_CASE("point-set parser reports line numbers") {
  std::istringstream bad("2\n0 0\n1 2 3\n");
  try {
    read_point_set(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  std::istringstream collinear("4\n0 0\n1 1\n2 2\n5 0\n");
  CHECK_THROWS_AS(read_point_set(collinear), CollinearTripleError);
}
