#pragma once

#include <algorithm>
#include <map>
#include <unordered_set>
#include <vector>

#include "planecensus/census.hpp"

namespace planecensus {

/// A ving is a pair (vertex, plane graph). Neighbors are stored in the
/// rotational order given by shooting a ray straight down from the vertex and
/// rotating it clockwise.
struct Ving {
  PlaneGraph graph;
  int vertex = -1;
  std::vector<int> neighbors;

  int degree() const { return static_cast<int>(neighbors.size()); }
};

namespace detail {

// Sweep class for the downward-ray clockwise enumeration: straight down is
// hit first, then the x<0 halfplane, straight up, then the x>0 halfplane.
inline int sweep_class(std::int64_t dx, std::int64_t dy) {
  if (dx == 0) return dy < 0 ? 0 : 2;
  return dx < 0 ? 1 : 3;
}

inline bool sweep_before(const Point& origin, const Point& a, const Point& b) {
  std::int64_t ax = a.x - origin.x, ay = a.y - origin.y;
  std::int64_t bx = b.x - origin.x, by = b.y - origin.y;
  int ca = sweep_class(ax, ay), cb = sweep_class(bx, by);
  if (ca != cb) return ca < cb;
  __int128 cross = __int128(ax) * by - __int128(ay) * bx;
  return cross < 0;
}

}  // namespace detail

inline Ving make_ving(const PlaneGraph& g, int p) {
  Ving v;
  v.graph = g;
  v.vertex = p;
  v.neighbors = g.graph_neighbors(p);
  const auto& pts = g.conflict->point_set.points;
  std::sort(v.neighbors.begin(), v.neighbors.end(), [&](int a, int b) {
    return detail::sweep_before(pts[p], pts[a], pts[b]);
  });
  return v;
}

/// p sees q iff segment pq properly crosses no edge of G. Edges incident to
/// p or q share an endpoint with pq, so they can never block.
inline bool sees(int p, int q, const PlaneGraph& g) {
  int seg = g.conflict->segment_index(p, q);
  return !g.conflict->crossing[seg].intersects(g.edges);
}

/// The unique x-ving obtained by connecting p to every vertex it sees and is
/// not yet connected to. Adding a p-edge never blocks another p-candidate,
/// so a single pass suffices and the map is idempotent.
inline Ving x_completion(int p, const PlaneGraph& g) {
  const PointSet& s = g.conflict->point_set;
  if (s.on_hull(p)) throw HullVertexError("x_completion requires an interior vertex");
  PlaneGraph completed = g;
  for (int q = 0; q < s.n; ++q) {
    if (q == p) continue;
    int seg = g.conflict->segment_index(p, q);
    if (!completed.edges.test(seg) && sees(p, q, g)) {
      completed.edges.set(seg);
      ++completed.m;
    }
  }
  return make_ving(completed, p);
}

/// True iff the vertex is interior and sees no vertex it is not connected to.
inline bool is_x_ving(const Ving& v) {
  const PointSet& s = v.graph.conflict->point_set;
  if (s.on_hull(v.vertex)) return false;
  for (int q = 0; q < s.n; ++q) {
    if (q == v.vertex) continue;
    if (v.graph.has_edge(v.vertex, q)) continue;
    if (sees(v.vertex, q, v.graph)) return false;
  }
  return true;
}

inline std::vector<int> neighborhood_hull(const Ving& v) {
  const auto& pts = v.graph.conflict->point_set.points;
  std::vector<Point> nb;
  for (int q : v.neighbors) nb.push_back(pts[q]);
  std::vector<int> local = detail::convex_hull_indices(nb);
  std::vector<int> out;
  for (int i : local) out.push_back(v.neighbors[i]);
  return out;
}

/// x-ving with its neighborhood hull H(v).
struct XVingInfo {
  Ving ving;
  std::vector<int> hull_of_neighborhood;
  bool neighborhood_convex = false;
};

inline XVingInfo classify_x_ving(const Ving& v) {
  if (!is_x_ving(v)) throw NotXVingError("not an x-ving");
  XVingInfo info;
  info.ving = v;
  info.hull_of_neighborhood = neighborhood_hull(v);
  info.neighborhood_convex =
      static_cast<int>(info.hull_of_neighborhood.size()) == v.degree();
  return info;
}

/// All x-vings of strictly larger degree obtained by removing one edge ab
/// with a, b neighbors of v and completing. Empty when no removal reveals a
/// newly visible vertex.
inline std::vector<Ving> reductions(const Ving& v) {
  if (!is_x_ving(v)) throw NotXVingError("reductions requires an x-ving");
  const ConflictGraph& cg = *v.graph.conflict;
  std::vector<Ving> out;
  for (std::size_t ai = 0; ai < v.neighbors.size(); ++ai)
    for (std::size_t bi = ai + 1; bi < v.neighbors.size(); ++bi) {
      int a = v.neighbors[ai], b = v.neighbors[bi];
      int seg = cg.segment_index(a, b);
      if (!v.graph.edges.test(seg)) continue;
      PlaneGraph reduced = v.graph;
      reduced.edges.reset(seg);
      --reduced.m;
      // does p gain at least one newly visible vertex?
      bool gained = false;
      for (int q = 0; q < cg.point_set.n && !gained; ++q) {
        if (q == v.vertex || reduced.has_edge(v.vertex, q)) continue;
        if (sees(v.vertex, q, reduced)) gained = true;
      }
      if (gained) out.push_back(x_completion(v.vertex, reduced));
    }
  return out;
}

/// Contributor counts for an x_5-ving: n4 = x_4-vings reducing to it, n3 =
/// x_3-vings reducing to it directly or through such an x_4-ving. Computed by
/// forward search over insertable edges between neighbors of the vertex.
struct ReducerCensus {
  int n4 = 0;
  int n3 = 0;
  int hull_size = 0;
};

namespace detail {

// Inserting edge ab into G is admissible when ab crosses only edges incident
// to p; those p-edges are removed, lowering p's degree by d(a,b).
// Returns false if ab is already present or crosses a non-p edge.
inline bool insert_between_neighbors(const PlaneGraph& g, int p, int a, int b,
                                     PlaneGraph& out, int& dist) {
  const ConflictGraph& cg = *g.conflict;
  int seg = cg.segment_index(a, b);
  if (g.edges.test(seg)) return false;
  SegBits crossed = cg.crossing[seg] & g.edges;
  out = g;
  dist = 0;
  while (crossed.any()) {
    int e = crossed.lowest();
    crossed.reset(e);
    auto [u, w] = cg.segments[e];
    if (u != p && w != p) return false;  // blocked by a non-p edge
    out.edges.reset(e);
    --out.m;
    ++dist;
  }
  out.edges.set(seg);
  ++out.m;
  return true;
}

// True iff removing edge ab from u's graph and completing yields exactly the
// target graph (i.e. u reduces to the target ving).
inline bool reduces_to(const Ving& u, int a, int b, const SegBits& target_edges) {
  PlaneGraph g = u.graph;
  g.edges.reset(g.conflict->segment_index(a, b));
  --g.m;
  Ving completed = x_completion(u.vertex, g);
  return completed.graph.edges == target_edges;
}

}  // namespace detail

inline ReducerCensus reducer_census(const Ving& v) {
  if (!is_x_ving(v) || v.degree() != 5)
    throw NotX5VingError("reducer_census requires an x_5-ving");
  const int p = v.vertex;
  ReducerCensus out;
  out.hull_size = static_cast<int>(neighborhood_hull(v).size());

  std::vector<Ving> x4_reducers;
  std::unordered_set<SegBits, SegBitsHash> x3_graphs;

  auto scan = [&](const Ving& target, int want_dist, auto&& accept) {
    for (std::size_t ai = 0; ai < target.neighbors.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < target.neighbors.size(); ++bi) {
        int a = target.neighbors[ai], b = target.neighbors[bi];
        PlaneGraph inserted;
        int dist = 0;
        if (!detail::insert_between_neighbors(target.graph, p, a, b, inserted, dist))
          continue;
        if (dist != want_dist) continue;
        Ving cand = make_ving(inserted, p);
        if (!is_x_ving(cand)) continue;
        if (!detail::reduces_to(cand, a, b, target.graph.edges)) continue;
        accept(cand);
      }
  };

  // x4-vings one insertion away, and x3-vings two p-edges away directly
  scan(v, 1, [&](const Ving& u) { x4_reducers.push_back(u); });
  scan(v, 2, [&](const Ving& u) { x3_graphs.insert(u.graph.edges); });
  out.n4 = static_cast<int>(x4_reducers.size());

  // x3-vings that reduce to an x4-ving that reduces to v
  for (const Ving& u : x4_reducers)
    scan(u, 1, [&](const Ving& w) { x3_graphs.insert(w.graph.edges); });
  out.n3 = static_cast<int>(x3_graphs.size());
  return out;
}

/// Enumeration-backed x-ving statistics across all plane graphs of S.
struct VingStatistics {
  int n = 0;
  int h = 0;
  BigInt pg = 0;
  BigInt sum_vx = 0;
  BigRat hat_vx = 0;
  std::map<int, BigInt> vi_histogram;  // degree -> total i-ving count over all graphs
  BigInt identity_rhs = 0;             // sum over interior q of pg(S minus q)
  bool identity_holds = false;
};

inline VingStatistics ving_statistics(const PointSet& s, int n_cap = 8) {
  if (s.n > n_cap) throw ResourceLimitError("ving_statistics refuses N above cap");
  ConflictGraph cg = build_conflict_graph(s);
  std::vector<int> interior = s.interior();
  VingStatistics st;
  st.n = s.n;
  st.h = s.h;
  std::uint64_t vx_total = 0;
  std::vector<std::uint64_t> deg_hist;
  std::uint64_t visits = enumerate_plane_graphs(cg, [&](const PlaneGraph& g) {
    for (int p = 0; p < s.n; ++p) {
      int d = g.degree_of(p);
      if (deg_hist.size() <= static_cast<std::size_t>(d)) deg_hist.resize(d + 1, 0);
      ++deg_hist[d];
    }
    for (int p : interior) {
      Ving v = make_ving(g, p);
      if (is_x_ving(v)) ++vx_total;
    }
  });
  st.pg = visits;
  st.sum_vx = vx_total;
  st.hat_vx = BigRat(st.sum_vx, st.pg);
  for (std::size_t d = 0; d < deg_hist.size(); ++d)
    if (deg_hist[d]) st.vi_histogram[static_cast<int>(d)] = deg_hist[d];
  for (int q : interior) {
    CensusPolynomial cp = census_polynomial(build_conflict_graph(s.without(q)));
    st.identity_rhs += cp.total();
  }
  st.identity_holds = st.sum_vx == st.identity_rhs;
  return st;
}

}  // namespace planecensus
