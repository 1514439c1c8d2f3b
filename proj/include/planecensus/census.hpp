#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "planecensus/geometry.hpp"

namespace planecensus {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Fixed-capacity bitset over segment indices (C(N,2) <= 256, i.e. N <= 23).
struct SegBits {
  static constexpr int kWords = 4;
  static constexpr int kCapacity = kWords * 64;
  std::array<std::uint64_t, kWords> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool intersects(const SegBits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  int lowest() const {  // -1 if empty
    for (int i = 0; i < kWords; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }

  SegBits& operator&=(const SegBits& o) {
    for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  SegBits& operator|=(const SegBits& o) {
    for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
    return *this;
  }
  friend SegBits operator&(SegBits a, const SegBits& b) { return a &= b; }
  friend SegBits operator|(SegBits a, const SegBits& b) { return a |= b; }
  SegBits and_not(const SegBits& o) const {
    SegBits r;
    for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  friend bool operator==(const SegBits&, const SegBits&) = default;
};

struct SegBitsHash {
  std::size_t operator()(const SegBits& b) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : b.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// All C(N,2) segments of a point set plus the proper-crossing relation.
/// Plane graphs are exactly the independent sets of the crossing relation.
struct ConflictGraph {
  PointSet point_set;
  std::vector<std::pair<int, int>> segments;  // (i<j), lexicographic
  std::vector<SegBits> crossing;              // symmetric, irreflexive

  int segment_count() const { return static_cast<int>(segments.size()); }

  int segment_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    // lexicographic position of (i, j) among all pairs of 0..n-1
    int n = point_set.n;
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  long long crossing_pair_count() const {
    long long c = 0;
    for (const auto& row : crossing) c += row.count();
    return c / 2;
  }

  /// Max plane-graph edge count 3N-3-h.
  int max_edges() const { return 3 * point_set.n - 3 - point_set.h; }
};

inline ConflictGraph build_conflict_graph(const PointSet& s) {
  ConflictGraph g;
  g.point_set = s;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) g.segments.push_back({i, j});
  int ns = g.segment_count();
  if (ns > SegBits::kCapacity) throw TooLargeError("too many segments");
  g.crossing.assign(ns, SegBits{});
  for (int a = 0; a < ns; ++a)
    for (int b = a + 1; b < ns; ++b) {
      auto [p, q] = g.segments[a];
      auto [r, t] = g.segments[b];
      if (segments_properly_cross(s.points[p], s.points[q], s.points[r],
                                  s.points[t])) {
        g.crossing[a].set(b);
        g.crossing[b].set(a);
      }
    }
  return g;
}

/// One crossing-free edge subset of a point set.
struct PlaneGraph {
  const ConflictGraph* conflict = nullptr;
  SegBits edges;
  int m = 0;

  bool has_edge(int seg) const { return edges.test(seg); }
  bool has_edge(int i, int j) const { return edges.test(conflict->segment_index(i, j)); }

  bool is_plane() const {
    for (int s = 0; s < conflict->segment_count(); ++s)
      if (edges.test(s) && conflict->crossing[s].intersects(edges)) return false;
    return true;
  }

  int degree_of(int p) const {
    int d = 0;
    for (int q = 0; q < conflict->point_set.n; ++q)
      if (q != p && has_edge(p, q)) ++d;
    return d;
  }

  std::vector<int> graph_neighbors(int p) const {
    std::vector<int> out;
    for (int q = 0; q < conflict->point_set.n; ++q)
      if (q != p && has_edge(p, q)) out.push_back(q);
    return out;
  }
};

inline PlaneGraph empty_plane_graph(const ConflictGraph& g) {
  return PlaneGraph{&g, SegBits{}, 0};
}

/// Exact per-edge-count census: coefficient[m] = pg_m(S).
struct CensusPolynomial {
  int n = 0;
  int h = 0;
  std::vector<BigInt> coefficients;  // length 3N-2-h

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : coefficients) t += c;
    return t;
  }
  const BigInt& triangulation_count() const { return coefficients.back(); }
};

struct CensusBudget {
  std::size_t max_nodes = std::size_t(1) << 28;
  std::size_t max_memo_entries = std::size_t(1) << 23;
};

namespace detail {

using Poly = std::vector<BigInt>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline void poly_add_shifted(Poly& dst, const Poly& src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += src[i];
}

class CensusCounter {
 public:
  CensusCounter(const ConflictGraph& g, const CensusBudget& budget)
      : g_(g), budget_(budget) {}

  Poly count(const SegBits& active) {
    if (++nodes_ > budget_.max_nodes)
      throw ResourceLimitError("census node budget exceeded");
    Poly result{BigInt(1)};
    SegBits remaining = active;
    while (remaining.any()) {
      SegBits comp = extract_component(remaining);
      result = poly_mul(result, component_poly(comp));
    }
    return result;
  }

 private:
  // Pops one connected component of the crossing subgraph induced by `from`.
  SegBits extract_component(SegBits& from) {
    SegBits comp;
    SegBits frontier;
    int s = from.lowest();
    frontier.set(s);
    while (frontier.any()) {
      int v = frontier.lowest();
      frontier.reset(v);
      comp.set(v);
      from.reset(v);
      SegBits nb = g_.crossing[v] & from;
      frontier |= nb;
      from = from.and_not(nb);
    }
    return comp;
  }

  Poly component_poly(const SegBits& comp) {
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    Poly result;
    int size = comp.count();
    if (size == 1) {
      result = {BigInt(1), BigInt(1)};  // free segment: absent or present
    } else {
      // branch on a maximum-crossing-degree segment, ties to lowest index
      int pivot = -1, best = -1;
      for (int i = 0; i < SegBits::kWords; ++i) {
        std::uint64_t word = comp.w[i];
        while (word) {
          int s = i * 64 + std::countr_zero(word);
          word &= word - 1;
          int d = (g_.crossing[s] & comp).count();
          if (d > best) {
            best = d;
            pivot = s;
          }
        }
      }
      SegBits without = comp;
      without.reset(pivot);
      Poly excl = count(without);
      SegBits closed = without.and_not(g_.crossing[pivot]);
      Poly incl = count(closed);
      result = std::move(excl);
      poly_add_shifted(result, incl, 1);
    }
    if (memo_.size() >= budget_.max_memo_entries)
      throw ResourceLimitError("census memo budget exceeded");
    memo_.emplace(comp, result);
    return result;
  }

  const ConflictGraph& g_;
  CensusBudget budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<SegBits, Poly, SegBitsHash> memo_;
};

}  // namespace detail

/// Exact pg_m(S) for every m via recursive branching with connected-component
/// factorization and memoization on the active segment subset. Deterministic.
inline CensusPolynomial census_polynomial(const ConflictGraph& g,
                                          const CensusBudget& budget = {}) {
  SegBits all;
  for (int s = 0; s < g.segment_count(); ++s) all.set(s);
  detail::CensusCounter counter(g, budget);
  detail::Poly poly = counter.count(all);
  CensusPolynomial out;
  out.n = g.point_set.n;
  out.h = g.point_set.h;
  out.coefficients.assign(g.max_edges() + 1, BigInt(0));
  for (std::size_t m = 0; m < poly.size(); ++m) {
    if (poly[m] != 0 && m >= out.coefficients.size())
      throw Error("census coefficient beyond 3N-3-h");
    if (m < out.coefficients.size()) out.coefficients[m] = poly[m];
  }
  return out;
}

/// Ground-truth oracle: enumerates all 2^|segments| subsets. N <= 7 only.
inline CensusPolynomial brute_force_census(const ConflictGraph& g) {
  int ns = g.segment_count();
  if (ns > 24) throw TooLargeError("brute force limited to C(N,2) <= 24");
  CensusPolynomial out;
  out.n = g.point_set.n;
  out.h = g.point_set.h;
  out.coefficients.assign(g.max_edges() + 1, BigInt(0));
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << ns); ++mask) {
    bool indep = true;
    for (int a = 0; a < ns && indep; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int b = a + 1; b < ns && indep; ++b)
        if (((mask >> b) & 1) && g.crossing[a].test(b)) indep = false;
    }
    if (indep) ++out.coefficients[std::popcount(mask)];
  }
  return out;
}

/// Visits every plane graph exactly once, in the deterministic order given by
/// backtracking over segments in canonical (lexicographic) order. Returns the
/// number of visits, which equals pg(S).
inline std::uint64_t enumerate_plane_graphs(
    const ConflictGraph& g, const std::function<void(const PlaneGraph&)>& visitor) {
  int ns = g.segment_count();
  PlaneGraph current = empty_plane_graph(g);
  SegBits blocked;
  std::uint64_t visits = 0;
  auto recurse = [&](auto&& self, int seg) -> void {
    if (seg == ns) {
      ++visits;
      if (visitor) visitor(current);
      return;
    }
    self(self, seg + 1);  // exclude
    if (!blocked.test(seg)) {
      current.edges.set(seg);
      ++current.m;
      SegBits newly = g.crossing[seg].and_not(blocked);
      blocked |= newly;
      self(self, seg + 1);
      blocked = blocked.and_not(newly);
      current.edges.reset(seg);
      --current.m;
    }
  };
  recurse(recurse, 0);
  return visits;
}

/// pg_{m+1}/pg_m as an exact rational (the increase rate r_c with c = m/N).
inline BigRat increase_rate(const CensusPolynomial& p, int m) {
  int top = static_cast<int>(p.coefficients.size()) - 1;
  if (m < 0 || m >= top) throw OutOfRangeError("m out of range for increase rate");
  if (p.coefficients[m] == 0) throw ZeroDenominatorError("pg_m is zero");
  return BigRat(p.coefficients[m + 1], p.coefficients[m]);
}

/// Number of segments e not in G with G + e still plane.
inline int addable_edge_count(const PlaneGraph& g) {
  int count = 0;
  for (int s = 0; s < g.conflict->segment_count(); ++s)
    if (!g.edges.test(s) && !g.conflict->crossing[s].intersects(g.edges)) ++count;
  return count;
}

}  // namespace planecensus
