#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "planecensus/charging.hpp"
#include "planecensus/formulas.hpp"
#include "planecensus/vings.hpp"

namespace planecensus {

using json = nlohmann::json;

inline std::string dec(const BigInt& v) { return v.str(); }

/// { "n": int, "h": int, "coefficients": [decimal strings] }
inline json census_json(const CensusPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients) coeffs.push_back(dec(c));
  return json{{"n", p.n}, {"h", p.h}, {"coefficients", coeffs}};
}

inline json ving_statistics_json(const VingStatistics& st) {
  json hist = json::object();
  for (const auto& [deg, count] : st.vi_histogram)
    hist[std::to_string(deg)] = dec(count);
  return json{
      {"n", st.n},
      {"h", st.h},
      {"pg", dec(st.pg)},
      {"sum_vx", dec(st.sum_vx)},
      {"hat_vx",
       {{"num", dec(numerator(st.hat_vx))}, {"den", dec(denominator(st.hat_vx))}}},
      {"vi_histogram", hist},
      {"identity_check",
       {{"lhs", dec(st.sum_vx)},
        {"rhs", dec(st.identity_rhs)},
        {"equal", st.identity_holds}}}};
}

inline json charge_report_json(const ChargeReport& r) {
  json per_case = json::array();
  for (const CaseCharge& row : r.per_case)
    per_case.push_back({{"case", row.id},
                        {"i", row.degree},
                        {"ch", row.ch},
                        {"redistributed", row.redistributed}});
  return json{{"mode", r.mode == ChargeMode::Basic ? "basic" : "refined"},
              {"M", r.params.m_cap},
              {"params", r.params.c},
              {"max_charge", r.max_charge},
              {"binding_case", r.binding_case},
              {"growth_constant", r.growth_constant},
              {"tail_decreasing", r.tail_decreasing},
              {"per_case", per_case}};
}

inline json empirical_report_json(const EmpiricalChargeReport& r) {
  json out = ving_statistics_json(r.stats);
  out["bound_basic"] = r.bound_basic;
  out["bound_refined"] = r.bound_refined;
  out["exceeds_basic"] = r.exceeds_basic;
  out["exceeds_refined"] = r.exceeds_refined;
  return out;
}

inline json formula_json(const std::string& formula, json inputs, json outputs) {
  return json{{"formula", formula}, {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)}};
}

/// Table-1 reproduction: columns c, chain_rate, thm1_bound, margin.
inline std::string table1_csv() {
  std::ostringstream out;
  out << "c,chain_rate,thm1_bound,margin\n";
  const double cs[] = {2.0 / 3.0, 1.0, 4.0 / 3.0, 5.0 / 3.0};
  for (double c : cs) {
    double rate = chain_rate(c).closed_form;
    double bound = rc_lower(c, kInfiniteN, 0, RateMode::Thm1);
    out << c << ',' << rate << ',' << bound << ',' << rate - bound << '\n';
  }
  return out.str();
}

}  // namespace planecensus
