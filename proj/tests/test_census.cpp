#include <catch_amalgamated.hpp>

#include "planecensus/census.hpp"
#include "planecensus/reports.hpp"

using namespace planecensus;

namespace {

PointSet triangle() { return make_point_set({{0, 0}, {4, 0}, {0, 4}}); }
PointSet triangle_center() { return make_point_set({{0, 0}, {6, 0}, {0, 6}, {1, 1}}); }
PointSet convex_gon(int n) { return generate(GeneratorKind::Convex, n); }

std::vector<BigInt> coeffs(const CensusPolynomial& p) { return p.coefficients; }

}  // namespace

TEST_CASE("conflict graph of the convex 4-gon") {
  ConflictGraph g = build_conflict_graph(convex_gon(4));
  CHECK(g.segment_count() == 6);
  CHECK(g.crossing_pair_count() == 1);
}

TEST_CASE("conflict graph of triangle plus center has no crossings") {
  ConflictGraph g = build_conflict_graph(triangle_center());
  CHECK(g.segment_count() == 6);
  CHECK(g.crossing_pair_count() == 0);
}

TEST_CASE("conflict graph of the convex 5-gon") {
  ConflictGraph g = build_conflict_graph(convex_gon(5));
  CHECK(g.segment_count() == 10);
  CHECK(g.crossing_pair_count() == 5);
}

TEST_CASE("crossing relation matches the predicate pairwise") {
  ConflictGraph g = build_conflict_graph(generate(GeneratorKind::RandomTriangular, 6, 5));
  for (int a = 0; a < g.segment_count(); ++a)
    for (int b = 0; b < g.segment_count(); ++b) {
      auto [p, q] = g.segments[a];
      auto [r, t] = g.segments[b];
      bool expected = segments_properly_cross(g.point_set.points[p], g.point_set.points[q],
                                              g.point_set.points[r], g.point_set.points[t]);
      CHECK(g.crossing[a].test(b) == expected);
    }
}

TEST_CASE("census of the triangle") {
  CensusPolynomial p = census_polynomial(build_conflict_graph(triangle()));
  CHECK(coeffs(p) == std::vector<BigInt>{1, 3, 3, 1});
  CHECK(p.total() == 8);
}

TEST_CASE("census of the convex 4-gon") {
  CensusPolynomial p = census_polynomial(build_conflict_graph(convex_gon(4)));
  CHECK(coeffs(p) == std::vector<BigInt>{1, 6, 14, 16, 9, 2});
  CHECK(p.total() == 48);
  CHECK(p.triangulation_count() == 2);
}

TEST_CASE("every single edge of a chain is plane") {
  CensusPolynomial p =
      census_polynomial(build_conflict_graph(generate(GeneratorKind::ConvexChain, 5)));
  CHECK(p.coefficients[1] == 10);
}

TEST_CASE("census agrees with the brute-force oracle") {
  std::vector<PointSet> instances;
  for (int n = 4; n <= 7; ++n) {
    instances.push_back(convex_gon(n));
    instances.push_back(generate(GeneratorKind::ConvexChain, n));
    instances.push_back(generate(GeneratorKind::RandomTriangular, n, 17 + n));
  }
  for (const PointSet& s : instances) {
    ConflictGraph g = build_conflict_graph(s);
    CHECK(coeffs(census_polynomial(g)) == coeffs(brute_force_census(g)));
  }
}

TEST_CASE("brute force refuses large instances") {
  CHECK_THROWS_AS(brute_force_census(build_conflict_graph(convex_gon(8))), TooLargeError);
}

TEST_CASE("census resource budget is honored") {
  CensusBudget tiny;
  tiny.max_nodes = 4;
  CHECK_THROWS_AS(census_polynomial(build_conflict_graph(convex_gon(6)), tiny),
                  ResourceLimitError);
}

TEST_CASE("enumeration visits each plane graph once") {
  CHECK(enumerate_plane_graphs(build_conflict_graph(triangle()), nullptr) == 8);
  CHECK(enumerate_plane_graphs(build_conflict_graph(convex_gon(4)), nullptr) == 48);
  CHECK(enumerate_plane_graphs(build_conflict_graph(triangle_center()), nullptr) == 64);

  ConflictGraph g = build_conflict_graph(convex_gon(5));
  std::uint64_t planar = 0;
  std::uint64_t visits = enumerate_plane_graphs(g, [&](const PlaneGraph& pg) {
    REQUIRE(pg.is_plane());
    ++planar;
  });
  CHECK(visits == planar);
  CHECK(BigInt(visits) == census_polynomial(g).total());
}

TEST_CASE("increase rate of the convex 4-gon") {
  CensusPolynomial p = census_polynomial(build_conflict_graph(convex_gon(4)));
  CHECK(increase_rate(p, 2) == BigRat(8, 7));
  CHECK(increase_rate(census_polynomial(build_conflict_graph(triangle())), 1) == 1);
  CHECK_THROWS_AS(increase_rate(p, 5), OutOfRangeError);
}

TEST_CASE("addable edges: examples and the completion lower bound") {
  ConflictGraph g = build_conflict_graph(convex_gon(4));
  PlaneGraph empty = empty_plane_graph(g);
  CHECK(addable_edge_count(empty) == 6);

  PlaneGraph diag = empty;
  diag.edges.set(g.segment_index(0, 2));
  diag.m = 1;
  CHECK(addable_edge_count(diag) == 4);

  // every plane graph can grow to a triangulation: addable >= 3N-3-h-m
  for (int n = 4; n <= 6; ++n) {
    ConflictGraph cg = build_conflict_graph(generate(GeneratorKind::RandomTriangular, n, n));
    int slack = cg.max_edges();
    enumerate_plane_graphs(cg, [&](const PlaneGraph& pg) {
      REQUIRE(addable_edge_count(pg) >= slack - pg.m);
    });
  }
}

TEST_CASE("maximal graphs are exactly the triangulations") {
  ConflictGraph g = build_conflict_graph(generate(GeneratorKind::RandomTriangular, 6, 2));
  CensusPolynomial p = census_polynomial(g);
  BigInt top_seen = 0;
  enumerate_plane_graphs(g, [&](const PlaneGraph& pg) {
    if (pg.m == g.max_edges()) {
      ++top_seen;
      CHECK(addable_edge_count(pg) == 0);
    }
  });
  CHECK(top_seen == p.triangulation_count());
}

TEST_CASE("census JSON serialization") {
  CensusPolynomial p = census_polynomial(build_conflict_graph(convex_gon(4)));
  json j = census_json(p);
  CHECK(j["n"] == 4);
  CHECK(j["h"] == 4);
  CHECK(j["coefficients"] == json::array({"1", "6", "14", "16", "9", "2"}));
}
