#include <catch_amalgamated.hpp>

#include "planecensus/formulas.hpp"
#include "planecensus/reports.hpp"

using namespace planecensus;
using Catch::Approx;

namespace {

// Independent oracle: counts size-M sets of pairwise non-crossing diagonals
// of a convex n-gon by backtracking. Diagonals (i,j) cross iff their
// endpoints strictly interleave around the polygon.
struct DiagonalOracle {
  int n;
  std::vector<std::pair<int, int>> diagonals;
  std::vector<BigInt> by_size;

  explicit DiagonalOracle(int n_) : n(n_) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (!(i == 0 && j == n - 1)) diagonals.push_back({i, j});
    by_size.assign(n - 2, 0);
    std::vector<std::pair<int, int>> chosen;
    recurse(0, chosen);
  }

  static bool crosses(std::pair<int, int> a, std::pair<int, int> b) {
    auto [i, j] = a;
    auto [k, l] = b;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
  }

  void recurse(std::size_t idx, std::vector<std::pair<int, int>>& chosen) {
    if (idx == diagonals.size()) {
      ++by_size[chosen.size()];
      return;
    }
    recurse(idx + 1, chosen);
    for (const auto& d : chosen)
      if (crosses(d, diagonals[idx])) return;
    chosen.push_back(diagonals[idx]);
    recurse(idx + 1, chosen);
    chosen.pop_back();
  }
};

}  // namespace

TEST_CASE("pak_count examples") {
  CHECK(pak_count(5, 1) == 5);
  CHECK(pak_count(6, 0) == 1);
  CHECK(pak_count(6, 3) == 14);  // hexagon triangulations, Catalan C_4
  CHECK_THROWS_AS(pak_count(5, 3), OutOfRangeError);
}

TEST_CASE("pak_count equals the diagonal-subset oracle") {
  for (int n = 4; n <= 9; ++n) {
    DiagonalOracle oracle(n);
    for (int m = 0; m <= n - 3; ++m) CHECK(pak_count(n, m) == oracle.by_size[m]);
  }
}

TEST_CASE("chain_count_exact examples") {
  CHECK(chain_count_exact(5, 1) == 10);
  CHECK(chain_count_exact(5, 8) == 17);
}

TEST_CASE("chain_count_exact matches the census of the generated chain") {
  for (int n = 5; n <= 8; ++n) {
    CensusPolynomial p =
        census_polynomial(build_conflict_graph(generate(GeneratorKind::ConvexChain, n)));
    for (std::size_t m = 0; m < p.coefficients.size(); ++m)
      CHECK(chain_count_exact(n, static_cast<int>(m)) == p.coefficients[m]);
    for (int m = static_cast<int>(p.coefficients.size()); m <= 3 * n - 6; ++m)
      CHECK(chain_count_exact(n, m) == 0);
  }
}

TEST_CASE("chain_f_paper is the published expression, off by an index shift") {
  CHECK(chain_f_paper(5, 1, 0) == 8);
  CHECK(chain_f_paper(7, 6, 5) == 0);  // k > n-3
  // the per-point ratio of matching terms tends to 1 at fixed densities
  auto term_exact = [](int n, int m, int k) {
    return pak_count(n - 1, k) * binomial(2 * n - 2, m - k);
  };
  double prev = 1e9;
  for (int n : {20, 40, 80, 160}) {
    int m = n, k = n / 2 - 2;
    double ratio = static_cast<double>(BigRat(chain_f_paper(n, m, k), term_exact(n, m, k)));
    double per_point = std::pow(ratio, 1.0 / n);
    CHECK(std::abs(per_point - 1.0) < std::abs(prev - 1.0));
    prev = per_point;
  }
  CHECK(std::abs(prev - 1.0) < 0.01);
}

TEST_CASE("d_star trivial values") {
  CHECK(d_star(1.0) == Approx(0.5));
  CHECK(d_star(0.0) == Approx(0.0));
  CHECK(d_star(3.0) == Approx(1.0));
}

TEST_CASE("tilde_f closed-form point and domain") {
  CHECK(tilde_f(1.0, 0.5) == Approx(16.0));
  CHECK_THROWS_AS(tilde_f(0.5, 0.9), DomainError);
}

TEST_CASE("tilde_f peaks at d_star") {
  // the derivative factor log((1-d)(1+d)(c-d) / (d^2 (2-c+d))) changes sign at d_star
  for (double c : {0.5, 1.0, 1.7, 2.4}) {
    double d = d_star(c);
    auto logfactor = [&](double dd) {
      return std::log((1 - dd) * (1 + dd) * (c - dd) / (dd * dd * (2 - c + dd)));
    };
    CHECK(logfactor(d - 1e-6) > 0.0);
    CHECK(logfactor(d + 1e-6) < 0.0);
    CHECK(std::abs(logfactor(d)) < 1e-9);
    CHECK(tilde_f(c, d) > tilde_f(c, d - 1e-4));
    CHECK(tilde_f(c, d) > tilde_f(c, d + 1e-4));
  }
}

TEST_CASE("chain growth peaks near 23.3") {
  GrowthEstimate peak =
      maximize_unimodal([](double c) { return tilde_f(c, d_star(c)); }, 0.1, 2.9);
  CHECK(peak.base == Approx(23.3).margin(0.05));
  CHECK(peak.argmax == Approx(1.7).margin(0.05));
}

TEST_CASE("thm2_bound reproduces the quoted bound bases") {
  CHECK(thm2_bound(3.0 / 4.0).bound_base == Approx(127.5).margin(0.1));
  CHECK(thm2_bound(2.0 / 3.0).bound_base == Approx(114.4).margin(0.1));
  CHECK(thm2_bound(1.0 / 4.0).bound_base == Approx(52.1).margin(0.1));
  CHECK(thm2_bound(1.0 / 6.0).bound_base == Approx(41.4).margin(0.1));
}

TEST_CASE("thm2_bound is maximized at c = 19/12") {
  GrowthEstimate peak =
      maximize_unimodal([](double c) { return thm2_bound(c).B; }, 0.05, 2.9);
  CHECK(peak.argmax == Approx(19.0 / 12.0).margin(0.01));
}

TEST_CASE("rc_lower values") {
  CHECK(rc_lower(1.0, kInfiniteN, 0, RateMode::Thm1) == Approx(2.0));
  CHECK(rc_lower(4.0 / 3.0, kInfiniteN, 0, RateMode::Thm1) == Approx(1.25));
  CHECK(rc_lower(5.0 / 3.0, kInfiniteN, 0, RateMode::Thm1) == Approx(0.8));
  CHECK(rc_lower(0.25, kInfiniteN, 0, RateMode::Flippable) == Approx(12.0));
  CHECK(rc_lower(0.5, 4, 4, RateMode::Thm1) == Approx(1.0));
  CHECK_THROWS_AS(rc_lower(0.6, kInfiniteN, 0, RateMode::Flippable), DomainError);
}

TEST_CASE("chain_rate closed form and finite-n limits") {
  CHECK(chain_rate(1.0).closed_form == Approx(3.0));
  CHECK(chain_rate(2.0 / 3.0).closed_form == Approx(5.96).margin(0.01));
  CHECK(chain_rate(5.0 / 3.0).closed_form == Approx(1.06).margin(0.01));
  ChainRate lim = chain_rate(1.2);
  CHECK(lim.type2_rate == Approx(lim.closed_form).epsilon(1e-9));
  CHECK(lim.type13_rate == Approx(lim.closed_form).epsilon(1e-9));
  ChainRate fin = chain_rate(1.2, 100000);
  CHECK(fin.type2_rate == Approx(lim.closed_form).margin(0.01));
  CHECK(fin.type13_rate == Approx(lim.closed_form).margin(0.01));
}

TEST_CASE("apply_eq1 reproduces the quoted recursive bounds") {
  CHECK(apply_eq1(127.5, 0.75, 1.0 / 12.0, RateMode::Thm1) == Approx(116.4).margin(0.1));
  CHECK(apply_eq1(52.1, 0.25, 1.0 / 12.0, RateMode::Flippable) == Approx(42.3).margin(0.1));
  CHECK(apply_eq1(99.0, 1.0, 0.0, RateMode::Thm1) == Approx(99.0));
}

TEST_CASE("table1 reproduction has positive margins") {
  std::string csv = table1_csv();
  CHECK(csv.rfind("c,chain_rate,thm1_bound,margin\n", 0) == 0);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    auto last = line.rfind(',');
    CHECK(std::stod(line.substr(last + 1)) > 0.0);
    ++rows;
  }
  CHECK(rows == 4);
}
