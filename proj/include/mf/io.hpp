#pragma once
// Stable text serialization: sequence line files, CSV sweeps (floats at 12
// significant digits, integers as integers), and JSON reports with fixed key
// order so identical runs produce identical bytes.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mf/seq.hpp"
#include "mf/sets.hpp"
#include "mf/spectral.hpp"

namespace mf {

using ordered_json = nlohmann::ordered_json;

inline std::string fmt_g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::string(buf);
}

// Single line of '+'/'-' characters, newline-terminated.
inline std::string seq_line(const LittlewoodSeq& f) {
  std::string s;
  s.reserve(f.coeffs.size() + 1);
  for (std::int8_t a : f.coeffs) s.push_back(a > 0 ? '+' : '-');
  s.push_back('\n');
  return s;
}

inline ordered_json set_json(const SubsetOfGroup& D) {
  ordered_json j;
  j["family"] = D.family;
  j["group"] = (D.group == GroupKind::Multiplicative) ? "multiplicative"
                                                      : "additive";
  j["q"] = D.q;
  j["n"] = D.n;
  if (D.m > 0) {
    j["m"] = D.m;
    j["classes"] = D.classes;
  }
  if (D.s > 0) {
    j["s"] = D.s;
    j["inner"] = D.inner;
  }
  j["generator"] = D.generator;
  j["k"] = D.size();
  j["members"] = D.member_positions();
  return j;
}

inline ordered_json merit_json(const MeritReport& rep) {
  ordered_json j;
  j["family"] = rep.family;
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["r"] = rep.r;
  j["t"] = rep.t;
  j["sum_sq_acf"] = rep.sum_sq_acf;
  j["merit_factor"] = rep.merit_factor;
  if (!rep.acf.empty()) j["acf"] = rep.acf;
  return j;
}

inline ordered_json spectral_json(const SpectralReport& rep) {
  ordered_json j;
  j["family"] = rep.family;
  j["n"] = rep.n;
  j["model"] = rep.model;
  j["nu"] = rep.nu;
  j["max_dev"] = rep.max_dev;
  j["argmax"] = rep.argmax;
  if (rep.bound) {
    j["bound"] = *rep.bound;
  } else {
    j["bound"] = nullptr;
  }
  j["condition_value"] = rep.condition_value;
  return j;
}

inline ordered_json periodic_json(const PeriodicAcfReport& rep) {
  ordered_json j;
  j["family"] = rep.family;
  j["p"] = rep.p;
  j["m"] = rep.m;
  j["classes"] = rep.classes;
  j["values"] = rep.values;
  j["intersections"] = rep.intersections;
  j["constant_on_classes"] = rep.constant_on_classes;
  j["hadamard"] = rep.hadamard;
  j["condition_sum_num"] = rep.condition_sum_num;
  j["condition_sum"] = rep.condition_sum;
  j["scaled"] = rep.scaled;
  return j;
}

inline ordered_json table_json(const TableCheckReport& rep) {
  ordered_json j;
  j["p"] = rep.p;
  j["m"] = rep.m;
  j["x"] = rep.x;
  j["y_abs"] = rep.y_abs;
  j["y_sign"] = rep.y_sign;
  j["parity_even"] = rep.parity_even;
  ordered_json rows = ordered_json::array();
  for (const TableUnionResult& u : rep.unions) {
    ordered_json r;
    r["classes"] = u.classes;
    r["predicted"] = u.predicted;
    r["computed"] = u.computed;
    r["match"] = u.match;
    rows.push_back(std::move(r));
  }
  j["unions"] = std::move(rows);
  j["pass"] = rep.pass;
  return j;
}

// CSV rows `R,T,r,t,F` plus, when predictions are attached,
// `,phi_pred,abs_err`. Cells with a degenerate denominator leave F (and
// abs_err) empty.
inline std::string sweep_csv(const std::vector<SweepCell>& rows,
                             const std::vector<double>* phi_pred) {
  std::string out = phi_pred ? "R,T,r,t,F,phi_pred,abs_err\n" : "R,T,r,t,F\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepCell& c = rows[i];
    out += fmt_g12(c.R);
    out += ',';
    out += fmt_g12(c.T);
    out += ',';
    out += std::to_string(c.r);
    out += ',';
    out += std::to_string(c.t);
    out += ',';
    if (c.F) out += fmt_g12(*c.F);
    if (phi_pred) {
      double pred = (*phi_pred)[i];
      out += ',';
      out += fmt_g12(pred);
      out += ',';
      if (c.F) out += fmt_g12(std::abs(*c.F - pred));
    }
    out += '\n';
  }
  return out;
}

}  // namespace mf
