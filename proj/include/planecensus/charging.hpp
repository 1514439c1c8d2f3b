#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "planecensus/simplex.hpp"
#include "planecensus/vings.hpp"

namespace planecensus {

enum class ChargeMode { Basic, Refined };

/// Transfer amounts c_3..c_{M-1} of the cross-graph charging scheme.
struct ChargeParams {
  int m_cap = 11;            // M
  std::vector<double> c;     // c[0] holds c_3

  /// c_i, with c_i = 0 outside 3 <= i < M (x-vings of degree >= M transfer
  /// nothing).
  double transfer(int i) const {
    if (i < 3 || i >= m_cap) return 0.0;
    return c[i - 3];
  }

  /// max{c_3, ..., c_j} with the same zero-extension.
  double running_max(int j) const {
    double m = 0.0;
    for (int k = 3; k <= j; ++k) m = std::max(m, transfer(k));
    return m;
  }

  static ChargeParams lemma4_published() {
    return {11, {0.333333, 0.333333, 0.387846, 0.544067, 0.83942, 1.15292,
                 1.04764, 1.34586}};
  }

  static ChargeParams lemma6_published() {
    return {11, {0.369874, 0.446263, 0.195332, 0.508932, 0.665472, 1.29213,
                 1.24496, 0.935081}};
  }
};

enum class ChargeCase {
  X3,
  X4NonReducing,
  X4Convex,
  Convex,               // 5 <= i, N(v) convex
  NonConvexReducing,    // 5 <= i < M
  NonConvexNonReducing  // 5 <= i
};

inline const char* charge_case_name(ChargeCase c) {
  switch (c) {
    case ChargeCase::X3: return "x3";
    case ChargeCase::X4NonReducing: return "x4_nonreducing";
    case ChargeCase::X4Convex: return "x4_convex";
    case ChargeCase::Convex: return "convex";
    case ChargeCase::NonConvexReducing: return "nonconvex_reducing";
    case ChargeCase::NonConvexNonReducing: return "nonconvex_nonreducing";
  }
  return "?";
}

/// Upper bound on ch(v) for one case row. Rows for i >= M carry no -c_i term
/// because transfer(i) is zero there.
inline double evaluate_case(ChargeCase cs, int i, const ChargeParams& p) {
  switch (cs) {
    case ChargeCase::X3:
      if (i != 3) throw InvalidCaseError("x3 case requires i = 3");
      return 1.0 - p.transfer(3);
    case ChargeCase::X4NonReducing:
      if (i != 4) throw InvalidCaseError("x4 case requires i = 4");
      return 1.0 + p.transfer(3);
    case ChargeCase::X4Convex:
      if (i != 4) throw InvalidCaseError("x4 case requires i = 4");
      return 1.0 + 2.0 * p.transfer(3) - p.transfer(4);
    case ChargeCase::Convex: {
      if (i < 5) throw InvalidCaseError("convex case requires i >= 5");
      double sum = 0.0;
      int top = (i % 2 ? i - 3 : i - 4) / 2;
      for (int l = 1; l <= top; ++l)
        sum += std::max(p.transfer(i - l), p.transfer(l + 2));
      double val = 1.0 + i * sum;
      if (i % 2 == 0) val += (i / 2.0) * p.transfer(i / 2 + 1);
      return val - p.transfer(i);
    }
    case ChargeCase::NonConvexReducing:
      if (i < 5) throw InvalidCaseError("nonconvex case requires i >= 5");
      return 1.0 + (i * (i - 3) / 2.0) * p.running_max(i - 1) - p.transfer(i);
    case ChargeCase::NonConvexNonReducing:
      if (i < 5) throw InvalidCaseError("nonconvex case requires i >= 5");
      return 1.0 + (i * (i - 3) / 2.0) * p.running_max(i - 1);
  }
  throw InvalidCaseError("unknown case");
}

/// Contributor-count rows for x_5-vings, with each "or" entry resolved to its
/// larger value (the pool charge is increasing in n3).
struct X5PoolRow {
  int hull_size;
  int n4;
  int n3;
};

inline const std::vector<X5PoolRow>& x5_pool_table() {
  static const std::vector<X5PoolRow> rows = {
      {5, 5, 5}, {5, 4, 6}, {5, 3, 7},
      {4, 4, 3}, {4, 3, 4}, {4, 3, 3}, {4, 2, 4}, {4, 2, 5}, {4, 2, 2},
      {3, 3, 2}, {3, 2, 3}, {3, 2, 1}, {3, 1, 2}, {3, 1, 4}};
  return rows;
}

/// Per-ving charge after pooled redistribution over an x_5-ving, its n4 + n3
/// contributors, and all their corresponding vings.
inline double x5_pool_charge(int n4, int n3) {
  return (1.0 + n4 + n3) / (32.0 + n4 * 16.0 + n3 * 8.0);
}

struct CaseCharge {
  std::string id;
  int degree;
  double ch;
  double redistributed;
};

struct ChargeReport {
  ChargeMode mode = ChargeMode::Basic;
  ChargeParams params;
  std::vector<CaseCharge> per_case;
  double max_charge = 0.0;
  std::string binding_case;
  double growth_constant = 0.0;
  bool tail_decreasing = false;  // per-i maxima strictly decreasing for i >= 13
};

/// Maximum post-redistribution charge over all case rows for degrees up to
/// i_eval_cap. Refined mode replaces the i = 5 rows by the x_5 pool table and
/// drops the x_3 transfer into non-reducing x_4-vings (their row is ch = 1).
inline ChargeReport max_charge(const ChargeParams& p, ChargeMode mode,
                               int i_eval_cap = 40) {
  if (i_eval_cap < 13) throw InvalidCaseError("i_eval_cap must be >= 13");
  if (static_cast<int>(p.c.size()) != p.m_cap - 3 || p.m_cap < 4)
    throw InfeasibleParamsError("params must provide c_3..c_{M-1} with M >= 4");
  for (double ci : p.c)
    if (ci < 0.0) throw InfeasibleParamsError("transfer amounts must be nonnegative");
  // no x-ving may give away more charge than it holds
  if (evaluate_case(ChargeCase::X3, 3, p) < 0.0 ||
      (p.m_cap > 4 && evaluate_case(ChargeCase::X4Convex, 4, p) < 0.0))
    throw InfeasibleParamsError("transfer exceeds held charge");
  for (int i = 5; i < p.m_cap; ++i)
    if (evaluate_case(ChargeCase::Convex, i, p) < 0.0 ||
        evaluate_case(ChargeCase::NonConvexReducing, i, p) < 0.0)
      throw InfeasibleParamsError("transfer exceeds held charge");

  ChargeReport report;
  report.mode = mode;
  report.params = p;

  auto add = [&](std::string id, int degree, double ch, double red) {
    report.per_case.push_back({std::move(id), degree, ch, red});
  };

  add("x3", 3, evaluate_case(ChargeCase::X3, 3, p),
      evaluate_case(ChargeCase::X3, 3, p) / 8.0);
  double x4nr = mode == ChargeMode::Basic
                    ? evaluate_case(ChargeCase::X4NonReducing, 4, p)
                    : 1.0;
  add("x4_nonreducing", 4, x4nr, x4nr / 16.0);
  double x4cv = evaluate_case(ChargeCase::X4Convex, 4, p);
  add("x4_convex", 4, x4cv, x4cv / 16.0);

  for (int i = 5; i <= i_eval_cap; ++i) {
    if (i == 5 && mode == ChargeMode::Refined) {
      for (const X5PoolRow& row : x5_pool_table()) {
        std::ostringstream id;
        id << "x5_pool_h" << row.hull_size << "_(" << row.n4 << "," << row.n3 << ")";
        add(id.str(), 5, 1.0 + row.n4 + row.n3, x5_pool_charge(row.n4, row.n3));
      }
      continue;
    }
    double scale = std::ldexp(1.0, i);  // 2^i
    double cv = evaluate_case(ChargeCase::Convex, i, p);
    add("convex_" + std::to_string(i), i, cv, cv / scale);
    if (i < p.m_cap) {
      double ncr = evaluate_case(ChargeCase::NonConvexReducing, i, p);
      add("nonconvex_reducing_" + std::to_string(i), i, ncr, ncr / scale);
    }
    double ncn = evaluate_case(ChargeCase::NonConvexNonReducing, i, p);
    add("nonconvex_nonreducing_" + std::to_string(i), i, ncn, ncn / scale);
  }

  report.max_charge = -1.0;
  for (const CaseCharge& row : report.per_case) {
    if (row.redistributed > report.max_charge) {
      report.max_charge = row.redistributed;
      report.binding_case = row.id;
    }
  }
  report.growth_constant = 1.0 / report.max_charge;

  // the i > 12 tail must be vanishing: per-i maxima strictly decreasing
  std::map<int, double> per_i_max;
  for (const CaseCharge& row : report.per_case)
    if (row.degree >= 13)
      per_i_max[row.degree] = std::max(per_i_max.count(row.degree)
                                           ? per_i_max[row.degree]
                                           : -1.0,
                                       row.redistributed);
  report.tail_decreasing = true;
  double prev = -1.0;
  for (auto it = per_i_max.begin(); it != per_i_max.end(); ++it) {
    if (prev >= 0.0 && it->second >= prev) report.tail_decreasing = false;
    prev = it->second;
  }
  return report;
}

namespace detail {

// Builds and solves the parameter-choice LP exactly: each max(c_a, c_b)
// becomes an auxiliary variable with two lower-bounding constraints (exact
// because every max appears with positive sign in a minimized upper bound).
class ChargeLp {
 public:
  using Rat = SimplexSolver::Rat;

  ChargeLp(ChargeMode mode, int m_cap, int lp_cap)
      : mode_(mode), m_cap_(m_cap), lp_cap_(lp_cap) {
    // variables: t, c_3..c_{M-1}, running maxes m_3..m_{M-1}, pair maxes
    n_vars_ = 1 + (m_cap_ - 3) + (m_cap_ - 3);
  }

  SimplexSolver::Solution solve(std::vector<Rat>& c_out, Rat& t_out) {
    build();
    std::vector<Rat> obj(n_vars_, 0);
    obj[0] = 1;  // minimize t
    SimplexSolver solver(rows_, rhs_, obj);
    auto sol = solver.solve();
    c_out.assign(m_cap_ - 3, 0);
    for (int i = 3; i < m_cap_; ++i) c_out[i - 3] = sol.x[var_c(i)];
    t_out = sol.objective;
    return sol;
  }

 private:
  int var_t() const { return 0; }
  int var_c(int i) const { return 1 + (i - 3); }            // 3 <= i < M
  int var_runmax(int j) const { return 1 + (m_cap_ - 3) + (j - 3); }

  int var_pairmax(int a, int b) {
    if (a > b) std::swap(a, b);
    auto key = std::make_pair(a, b);
    auto it = pair_vars_.find(key);
    if (it != pair_vars_.end()) return it->second;
    int v = n_vars_++;
    pair_vars_[key] = v;
    for (auto& row : rows_) row.resize(n_vars_, 0);
    // u >= c_a, u >= c_b
    for (int idx : {a, b}) {
      std::vector<Rat> row(n_vars_, 0);
      row[var_c(idx)] = 1;
      row[v] = -1;
      rows_.push_back(std::move(row));
      rhs_.push_back(0);
    }
    return v;
  }

  // coefficient map for "max(c_a, c_b)" with zero-extension outside 3..M-1
  void add_max_term(std::vector<std::pair<int, Rat>>& terms, int a, int b,
                    const Rat& coeff) {
    bool a_in = a >= 3 && a < m_cap_;
    bool b_in = b >= 3 && b < m_cap_;
    if (!a_in && !b_in) return;
    if (a_in && b_in && a != b)
      terms.push_back({var_pairmax(a, b), coeff});
    else
      terms.push_back({var_c(a_in ? a : b), coeff});
  }

  void push_row(const std::vector<std::pair<int, Rat>>& terms, const Rat& rhs) {
    std::vector<Rat> row(n_vars_, 0);
    for (auto& [v, coeff] : terms) row[v] += coeff;
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
  }

  void build() {
    // running maxes: m_3 >= c_3; m_j >= m_{j-1}, m_j >= c_j
    for (int j = 3; j < m_cap_; ++j) {
      push_row({{var_c(j), 1}, {var_runmax(j), -1}}, 0);
      if (j > 3) push_row({{var_runmax(j - 1), 1}, {var_runmax(j), -1}}, 0);
    }

    auto pow2 = [](int i) { return Rat(boost::multiprecision::cpp_int(1) << i); };

    // x3: 1 - c3 <= 8t, and c3 <= 1
    push_row({{var_c(3), -1}, {var_t(), -8}}, -1);
    push_row({{var_c(3), 1}}, 1);

    // x4 non-reducing
    if (mode_ == ChargeMode::Basic)
      push_row({{var_c(3), 1}, {var_t(), -16}}, -1);
    else
      push_row({{var_t(), -16}}, -1);

    // x4 convex: 1 + 2c3 - c4 <= 16t; feasibility c4 <= 1 + 2c3
    if (m_cap_ > 4) {
      push_row({{var_c(3), 2}, {var_c(4), -1}, {var_t(), -16}}, -1);
      push_row({{var_c(4), 1}, {var_c(3), -2}}, 1);
    } else {
      push_row({{var_c(3), 2}, {var_t(), -16}}, -1);
    }

    for (int i = 5; i <= lp_cap_; ++i) {
      if (i == 5 && mode_ == ChargeMode::Refined) {
        for (const X5PoolRow& row : x5_pool_table()) {
          Rat val(1 + row.n4 + row.n3, 32 + 16 * row.n4 + 8 * row.n3);
          push_row({{var_t(), -1}}, -val);
        }
        // feasibility of the onward c5 transfer against the convex row
        if (m_cap_ > 5) {
          std::vector<std::pair<int, Rat>> terms;
          add_max_term(terms, 4, 3, -5);
          terms.push_back({var_c(5), 1});
          push_row(terms, 1);
        }
        continue;
      }
      // convex row
      std::vector<std::pair<int, Rat>> terms;
      int top = (i % 2 ? i - 3 : i - 4) / 2;
      for (int l = 1; l <= top; ++l) add_max_term(terms, i - l, l + 2, Rat(i));
      if (i % 2 == 0 && i / 2 + 1 >= 3 && i / 2 + 1 < m_cap_)
        terms.push_back({var_c(i / 2 + 1), Rat(i, 2)});
      std::vector<std::pair<int, Rat>> convex_positive = terms;
      if (i < m_cap_) terms.push_back({var_c(i), -1});
      auto charge_terms = terms;
      charge_terms.push_back({var_t(), -pow2(i)});
      push_row(charge_terms, -1);
      if (i < m_cap_) {
        // feasibility: c_i <= 1 + (positive part)
        std::vector<std::pair<int, Rat>> feas{{var_c(i), 1}};
        for (auto& [v, coeff] : convex_positive) feas.push_back({v, -coeff});
        push_row(feas, 1);
      }
      // nonconvex rows
      Rat pairs(i * (i - 3), 2);
      int jmax = std::min(i, m_cap_) - 1;
      if (i < m_cap_) {
        push_row({{var_runmax(jmax), pairs}, {var_c(i), -1}, {var_t(), -pow2(i)}}, -1);
        push_row({{var_c(i), 1}, {var_runmax(jmax), -pairs}}, 1);
      }
      push_row({{var_runmax(jmax), pairs}, {var_t(), -pow2(i)}}, -1);
    }

    for (auto& row : rows_) row.resize(n_vars_, 0);
  }

  ChargeMode mode_;
  int m_cap_;
  int lp_cap_;
  int n_vars_;
  std::map<std::pair<int, int>, int> pair_vars_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
};

}  // namespace detail

/// Chooses transfer amounts minimizing the maximum redistributed charge by
/// solving the linear program exactly, then re-evaluates through max_charge.
inline ChargeReport optimize_params(ChargeMode mode, int m_cap,
                                    int i_eval_cap = 40) {
  if (m_cap < 4) throw InfeasibleModelError("M must be at least 4");
  const int lp_cap = std::max(2 * m_cap, 26);
  detail::ChargeLp lp(mode, m_cap, lp_cap);
  std::vector<SimplexSolver::Rat> c_exact;
  SimplexSolver::Rat t_exact;
  lp.solve(c_exact, t_exact);
  ChargeParams params;
  params.m_cap = m_cap;
  for (const auto& ci : c_exact)
    params.c.push_back(static_cast<double>(ci));
  ChargeReport report = max_charge(params, mode, i_eval_cap);
  double lp_opt = static_cast<double>(t_exact);
  if (std::abs(report.max_charge - lp_opt) > 1e-9)
    throw InfeasibleModelError("LP optimum disagrees with direct evaluation");
  return report;
}

/// Exact per-instance report of hat v_x against (N-3) * max_charge for both
/// modes, using the published parameters. Reported, never asserted: the
/// bounds are known to fail at very small N.
struct EmpiricalChargeReport {
  VingStatistics stats;
  double bound_basic = 0.0;    // (N-3) * 0.0833333...
  double bound_refined = 0.0;  // (N-3) * 0.0808824...
  bool exceeds_basic = false;
  bool exceeds_refined = false;
};

inline EmpiricalChargeReport empirical_report(const PointSet& s, int n_cap = 8) {
  if (s.h != 3)
    throw NotTriangularHullError("empirical_report requires a triangular hull");
  EmpiricalChargeReport out;
  out.stats = ving_statistics(s, n_cap);
  double basic =
      max_charge(ChargeParams::lemma4_published(), ChargeMode::Basic).max_charge;
  double refined =
      max_charge(ChargeParams::lemma6_published(), ChargeMode::Refined).max_charge;
  out.bound_basic = (s.n - 3) * basic;
  out.bound_refined = (s.n - 3) * refined;
  double hat = static_cast<double>(out.stats.hat_vx);
  out.exceeds_basic = hat > out.bound_basic;
  out.exceeds_refined = hat > out.bound_refined;
  return out;
}

/// Parameter files: one real per line for c_3..c_{M-1}; '#' starts a comment.
inline ChargeParams read_charge_params(std::istream& in) {
  ChargeParams p;
  p.c.clear();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    double v;
    if (ls >> v) {
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "expected one value per line");
      p.c.push_back(v);
    }
  }
  p.m_cap = static_cast<int>(p.c.size()) + 3;
  if (p.m_cap < 4) throw ParseError(line_no, "no transfer amounts found");
  return p;
}

}  // namespace planecensus
