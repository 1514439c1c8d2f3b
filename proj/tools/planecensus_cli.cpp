// planecensus: exact plane-graph censuses, closed-form bound evaluation, and
// charging-scheme parameter optimization on planar point sets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "planecensus/charging.hpp"
#include "planecensus/formulas.hpp"
#include "planecensus/reports.hpp"

namespace pc = planecensus;
using pc::json;

namespace {

struct PointSetSource {
  std::string input_file;
  int convex_n = 0;
  int chain_n = 0;
  int random_n = 0;
  std::uint64_t seed = 0;

  void add_options(CLI::App* cmd, bool with_seed = true) {
    auto* a = cmd->add_option("--input", input_file, "point-set file");
    auto* b = cmd->add_option("--convex", convex_n, "n points in convex position");
    auto* c = cmd->add_option("--chain", chain_n, "n-point convex chain configuration");
    auto* d = cmd->add_option("--random", random_n, "random triangular-hull instance");
    a->excludes(b)->excludes(c)->excludes(d);
    b->excludes(c)->excludes(d);
    c->excludes(d);
    if (with_seed) cmd->add_option("--seed", seed, "generator seed");
  }

  pc::PointSet load() const {
    if (!input_file.empty()) return pc::read_point_file(input_file);
    if (convex_n) return pc::generate(pc::GeneratorKind::Convex, convex_n);
    if (chain_n) return pc::generate(pc::GeneratorKind::ConvexChain, chain_n);
    if (random_n)
      return pc::generate(pc::GeneratorKind::RandomTriangular, random_n, seed);
    throw CLI::ValidationError("one of --input/--convex/--chain/--random is required");
  }
};

pc::RateMode parse_mode(const std::string& s) {
  if (s == "thm1") return pc::RateMode::Thm1;
  if (s == "flippable") return pc::RateMode::Flippable;
  throw CLI::ValidationError("--mode must be thm1 or flippable");
}

pc::ChargeMode parse_charge_mode(const std::string& s) {
  if (s == "basic") return pc::ChargeMode::Basic;
  if (s == "refined") return pc::ChargeMode::Refined;
  throw CLI::ValidationError("--mode must be basic or refined");
}

int default_threads() {
  if (const char* env = std::getenv("PLANECENSUS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting and bound evaluation for crossing-free graphs"};
  app.require_subcommand(1);

  int threads = default_threads();
  int precision = 6;
  app.add_option("--threads", threads, "worker threads (results are identical for any value)");
  app.add_option("--precision", precision, "significant digits for real output");

  // census
  auto* census = app.add_subcommand("census", "per-edge-count plane-graph census");
  PointSetSource census_src;
  census_src.add_options(census);
  bool census_json_out = false, census_csv_out = false;
  census->add_flag("--json", census_json_out, "emit JSON");
  census->add_flag("--csv", census_csv_out, "emit CSV");

  // rate
  auto* rate = app.add_subcommand("rate", "exact increase rate pg_{m+1}/pg_m");
  PointSetSource rate_src;
  rate_src.add_options(rate);
  int rate_m = 0;
  rate->add_option("--m", rate_m, "edge count m")->required();

  // xvings
  auto* xvings = app.add_subcommand("xvings", "x-ving statistics and identity check");
  PointSetSource xvings_src;
  xvings_src.add_options(xvings);
  int xvings_cap = 8;
  xvings->add_option("--nmax", xvings_cap, "refuse instances above this N");

  // formulas
  auto* formulas = app.add_subcommand("formulas", "closed-form evaluators");
  formulas->require_subcommand(1);
  double f_c = 1.0, f_d = -1.0, f_tr = 30.0, f_alpha = 0.0, f_delta = 0.0;
  long long f_n = pc::kInfiniteN, f_h = 0;
  int f_pn = 0, f_pm = 0;
  std::string f_mode = "thm1";
  auto* fB = formulas->add_subcommand("B", "per-edge-count upper bound base");
  fB->add_option("--c", f_c)->required();
  fB->add_option("--tr-base", f_tr);
  auto* ftf = formulas->add_subcommand("tilde-f", "chain exponent base");
  ftf->add_option("--c", f_c)->required();
  ftf->add_option("--d", f_d, "Type-2 density (default: optimizing value)");
  auto* fds = formulas->add_subcommand("d-star", "optimizing Type-2 density");
  fds->add_option("--c", f_c)->required();
  auto* fcr = formulas->add_subcommand("chain-rate", "chain increase rate");
  fcr->add_option("--c", f_c)->required();
  fcr->add_option("--n", f_n, "finite n (-1 for the limit)");
  auto* frl = formulas->add_subcommand("rc-lower", "increase-rate lower bound");
  frl->add_option("--c", f_c)->required();
  frl->add_option("--n", f_n, "finite n (-1 for the limit)");
  frl->add_option("--hull", f_h, "hull size");
  frl->add_option("--mode", f_mode, "thm1|flippable");
  auto* feq = formulas->add_subcommand("eq1", "recursive bound application");
  feq->add_option("--alpha", f_alpha)->required();
  feq->add_option("--c", f_c)->required();
  feq->add_option("--delta", f_delta)->required();
  feq->add_option("--mode", f_mode, "thm1|flippable");
  auto* fpak = formulas->add_subcommand("pak", "non-crossing diagonal count");
  fpak->add_option("--n", f_pn)->required();
  fpak->add_option("--m", f_pm)->required();
  auto* fcc = formulas->add_subcommand("chain-count", "exact chain-configuration count");
  fcc->add_option("--n", f_pn)->required();
  fcc->add_option("--m", f_pm)->required();
  auto* ft1 = formulas->add_subcommand("table1", "chain rate vs. bound comparison CSV");
  (void)ft1;

  // charge
  auto* charge = app.add_subcommand("charge", "charging-scheme evaluation");
  charge->require_subcommand(1);
  std::string ch_mode = "basic", ch_params_file;
  int ch_m = 11, ch_cap = 40;
  bool ch_lemma4 = false, ch_lemma6 = false;
  auto* cheval = charge->add_subcommand("eval", "max charge for given parameters");
  cheval->add_option("--mode", ch_mode, "basic|refined");
  cheval->add_option("--params", ch_params_file, "parameter file, one c_i per line");
  cheval->add_flag("--lemma4", ch_lemma4, "use the published basic parameters");
  cheval->add_flag("--lemma6", ch_lemma6, "use the published refined parameters");
  cheval->add_option("--cap", ch_cap, "highest degree evaluated");
  auto* chopt = charge->add_subcommand("optimize", "minimize the max charge");
  chopt->add_option("--mode", ch_mode, "basic|refined");
  chopt->add_option("--M", ch_m, "transfer cutoff M");
  chopt->add_option("--cap", ch_cap, "highest degree evaluated");
  auto* chemp = charge->add_subcommand("empirical", "per-instance hat v_x report");
  PointSetSource chemp_src;
  chemp_src.add_options(chemp);
  int chemp_cap = 8;
  chemp->add_option("--nmax", chemp_cap, "refuse instances above this N");

  // verify
  auto* verify = app.add_subcommand("verify", "run self-check suites");
  std::string v_suite = "all";
  int v_nmax = 6;
  std::uint64_t v_seed = 1;
  verify->add_option("--suite", v_suite, "all|census|pak|chain|vings|charge");
  verify->add_option("--nmax", v_nmax, "largest instance size");
  verify->add_option("--seed", v_seed, "base seed for random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::cout.precision(precision);
  (void)threads;

  try {
    if (census->parsed()) {
      pc::PointSet s = census_src.load();
      pc::CensusPolynomial p = pc::census_polynomial(pc::build_conflict_graph(s));
      if (census_json_out) {
        std::cout << pc::census_json(p).dump(2) << '\n';
      } else if (census_csv_out) {
        std::cout << "m,count\n";
        for (std::size_t m = 0; m < p.coefficients.size(); ++m)
          std::cout << m << ',' << pc::dec(p.coefficients[m]) << '\n';
      } else {
        std::cout << "n " << p.n << " h " << p.h << '\n';
        for (std::size_t m = 0; m < p.coefficients.size(); ++m)
          std::cout << "pg_" << m << " = " << pc::dec(p.coefficients[m]) << '\n';
        std::cout << "total " << pc::dec(p.total()) << " tr "
                  << pc::dec(p.triangulation_count()) << '\n';
      }
    } else if (rate->parsed()) {
      pc::PointSet s = rate_src.load();
      pc::CensusPolynomial p = pc::census_polynomial(pc::build_conflict_graph(s));
      pc::BigRat r = pc::increase_rate(p, rate_m);
      std::cout << pc::dec(numerator(r)) << "/" << pc::dec(denominator(r)) << " = "
                << static_cast<double>(r) << '\n';
    } else if (xvings->parsed()) {
      pc::PointSet s = xvings_src.load();
      std::cout << pc::ving_statistics_json(pc::ving_statistics(s, xvings_cap)).dump(2)
                << '\n';
    } else if (formulas->parsed()) {
      if (fB->parsed()) {
        auto r = pc::thm2_bound(f_c, f_tr);
        std::cout << pc::formula_json("thm2_bound",
                                      {{"c", f_c}, {"tr_base", f_tr}},
                                      {{"t", r.t}, {"B", r.B}, {"bound_base", r.bound_base}})
                         .dump(2)
                  << '\n';
      } else if (ftf->parsed()) {
        double d = f_d < 0 ? pc::d_star(f_c) : f_d;
        std::cout << pc::formula_json("tilde_f", {{"c", f_c}, {"d", d}},
                                      {{"value", pc::tilde_f(f_c, d)}})
                         .dump(2)
                  << '\n';
      } else if (fds->parsed()) {
        std::cout << pc::formula_json("d_star", {{"c", f_c}},
                                      {{"value", pc::d_star(f_c)}})
                         .dump(2)
                  << '\n';
      } else if (fcr->parsed()) {
        auto r = pc::chain_rate(f_c, f_n);
        std::cout << pc::formula_json("chain_rate", {{"c", f_c}, {"n", f_n}},
                                      {{"type2_rate", r.type2_rate},
                                       {"type13_rate", r.type13_rate},
                                       {"closed_form", r.closed_form}})
                         .dump(2)
                  << '\n';
      } else if (frl->parsed()) {
        double v = pc::rc_lower(f_c, f_n, f_h, parse_mode(f_mode));
        std::cout << pc::formula_json(
                         "rc_lower",
                         {{"c", f_c}, {"n", f_n}, {"h", f_h}, {"mode", f_mode}},
                         {{"value", v}})
                         .dump(2)
                  << '\n';
      } else if (feq->parsed()) {
        double v = pc::apply_eq1(f_alpha, f_c, f_delta, parse_mode(f_mode));
        std::cout << pc::formula_json("apply_eq1",
                                      {{"alpha", f_alpha},
                                       {"c", f_c},
                                       {"delta", f_delta},
                                       {"mode", f_mode}},
                                      {{"value", v}})
                         .dump(2)
                  << '\n';
      } else if (fpak->parsed()) {
        std::cout << pc::formula_json("pak_count", {{"n", f_pn}, {"M", f_pm}},
                                      {{"value", pc::dec(pc::pak_count(f_pn, f_pm))}})
                         .dump(2)
                  << '\n';
      } else if (fcc->parsed()) {
        std::cout << pc::formula_json(
                         "chain_count_exact", {{"n", f_pn}, {"m", f_pm}},
                         {{"value", pc::dec(pc::chain_count_exact(f_pn, f_pm))}})
                         .dump(2)
                  << '\n';
      } else if (ft1->parsed()) {
        std::cout << pc::table1_csv();
      }
    } else if (charge->parsed()) {
      if (cheval->parsed()) {
        pc::ChargeParams params;
        if (ch_lemma4)
          params = pc::ChargeParams::lemma4_published();
        else if (ch_lemma6)
          params = pc::ChargeParams::lemma6_published();
        else if (!ch_params_file.empty()) {
          std::ifstream in(ch_params_file);
          if (!in) throw pc::IoError("cannot open " + ch_params_file);
          params = pc::read_charge_params(in);
        } else {
          throw CLI::ValidationError("need --params, --lemma4, or --lemma6");
        }
        auto report = pc::max_charge(params, parse_charge_mode(ch_mode), ch_cap);
        std::cout << pc::charge_report_json(report).dump(2) << '\n';
      } else if (chopt->parsed()) {
        auto report = pc::optimize_params(parse_charge_mode(ch_mode), ch_m, ch_cap);
        std::cout << pc::charge_report_json(report).dump(2) << '\n';
      } else if (chemp->parsed()) {
        pc::PointSet s = chemp_src.load();
        auto report = pc::empirical_report(s, chemp_cap);
        std::cout << pc::empirical_report_json(report).dump(2) << '\n';
      }
    } else if (verify->parsed()) {
      bool all_ok = true;
      auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << '\n';
        all_ok = all_ok && ok;
      };
      bool do_all = v_suite == "all";
      if (do_all || v_suite == "census") {
        for (int n = 4; n <= std::min(v_nmax, 7); ++n) {
          auto g = pc::build_conflict_graph(pc::generate(pc::GeneratorKind::Convex, n));
          check("census oracle convex n=" + std::to_string(n),
                pc::census_polynomial(g).coefficients ==
                    pc::brute_force_census(g).coefficients);
          auto gr = pc::build_conflict_graph(
              pc::generate(pc::GeneratorKind::RandomTriangular, n, v_seed));
          check("census oracle random n=" + std::to_string(n),
                pc::census_polynomial(gr).coefficients ==
                    pc::brute_force_census(gr).coefficients);
        }
      }
      if (do_all || v_suite == "pak") {
        check("pak hexagon triangulations", pc::pak_count(6, 3) == 14);
        check("pak pentagon single diagonal", pc::pak_count(5, 1) == 5);
      }
      if (do_all || v_suite == "chain") {
        for (int n = 5; n <= std::max(5, std::min(v_nmax + 2, 9)); ++n) {
          auto p = pc::census_polynomial(
              pc::build_conflict_graph(pc::generate(pc::GeneratorKind::ConvexChain, n)));
          bool ok = true;
          for (std::size_t m = 0; m < p.coefficients.size(); ++m)
            ok = ok && pc::chain_count_exact(n, static_cast<int>(m)) == p.coefficients[m];
          check("chain count n=" + std::to_string(n), ok);
        }
      }
      if (do_all || v_suite == "vings") {
        for (int n = 4; n <= std::min(v_nmax, 6); ++n) {
          auto st = pc::ving_statistics(
              pc::generate(pc::GeneratorKind::RandomTriangular, n, v_seed));
          check("ving identity n=" + std::to_string(n), st.identity_holds);
        }
      }
      if (do_all || v_suite == "charge") {
        auto basic = pc::max_charge(pc::ChargeParams::lemma4_published(),
                                    pc::ChargeMode::Basic);
        check("lemma 4 constant",
              std::abs(basic.max_charge - 0.0833333) < 1e-4 && basic.tail_decreasing);
        auto refined = pc::max_charge(pc::ChargeParams::lemma6_published(),
                                      pc::ChargeMode::Refined);
        check("lemma 6 constant", std::abs(refined.max_charge - 0.0808824) < 1e-4 &&
                                      refined.tail_decreasing);
      }
      return all_ok ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
