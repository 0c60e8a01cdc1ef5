#include "tincell/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace tincell {

namespace {

Json finite_or_neg_inf(double v) {
  return v == kNegInf ? Json("-inf") : Json(v);
}

const char* row_tag_name(RowTag t) {
  switch (t) {
    case RowTag::nonneg:
      return "nonneg";
    case RowTag::percell:
      return "percell";
    default:
      return "cyclic";
  }
}

const char* condition_name(TinCondition c) {
  return c == TinCondition::direct_dominance ? "direct_dominance"
                                             : "interference_budget";
}

Json one_based(const std::vector<int>& xs) {
  Json a = Json::array();
  for (int x : xs) a.push_back(x + 1);
  return a;
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

[[noreturn]] void fail(const std::string& msg) {
  throw ParseError("profile parse error: " + msg);
}

std::string triple(int cell, int user, int from_cell) {
  return "(cell=" + std::to_string(cell + 1) + ", user=" + std::to_string(user + 1) +
         ", from_cell=" + std::to_string(from_cell + 1) + ")";
}

double strength_entry(const Json& v, int cell, int user, int from_cell) {
  if (!v.is_number()) fail("channel strength " + triple(cell, user, from_cell) + " is not a number");
  double x = v.get<double>();
  if (!std::isfinite(x) || x < 0.0)
    fail("channel strength " + triple(cell, user, from_cell) + " must be finite and nonnegative");
  return x;
}

}  // namespace

std::string serialize_profile(const NetworkProfile& p) {
  p.require_valid();
  Json doc;
  doc["K"] = p.cells();
  Json cells = Json::array();
  for (int k = 0; k < p.cells(); ++k) {
    Json cell;
    cell["direct"] = Json::array({p.direct(k, 0), p.direct(k, 1)});
    Json cross = Json::array();
    for (int j = 0; j < p.cells(); ++j) {
      if (j == k) continue;
      Json e;
      e["to_cell"] = j + 1;
      e["a1"] = p.alpha(k, 0, j);
      e["a2"] = p.alpha(k, 1, j);
      cross.push_back(e);
    }
    cell["cross"] = cross;
    cells.push_back(cell);
  }
  doc["alpha"] = cells;
  return doc.dump(2) + "\n";
}

NetworkProfile parse_profile(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document must be a JSON object");
  for (const auto& item : j.items())
    if (item.key() != "K" && item.key() != "alpha")
      fail("unknown key '" + item.key() + "'");
  if (!j.contains("K") || !j["K"].is_number_integer())
    fail("'K' must be an integer cell count");
  int K = j["K"].get<int>();
  if (K < 1 || K > 64) fail("cell count K must be in 1..64");
  if (!j.contains("alpha") || !j["alpha"].is_array() ||
      j["alpha"].size() != static_cast<std::size_t>(K))
    fail("'alpha' must be an array with one entry per cell");

  NetworkProfile p(K);
  for (int k = 0; k < K; ++k) {
    const Json& cell = j["alpha"][k];
    std::string at = "cell " + std::to_string(k + 1);
    if (!cell.is_object()) fail(at + ": entry must be an object");
    for (const auto& item : cell.items())
      if (item.key() != "direct" && item.key() != "cross")
        fail(at + ": unknown key '" + item.key() + "'");
    if (!cell.contains("direct") || !cell["direct"].is_array() ||
        cell["direct"].size() != 2)
      fail(at + ": 'direct' must be an array of two numbers");
    for (int u = 0; u < 2; ++u)
      p.alpha(k, u, k) = strength_entry(cell["direct"][u], k, u, k);
    if (!cell.contains("cross") || !cell["cross"].is_array())
      fail(at + ": 'cross' must be an array");
    std::vector<bool> seen(K, false);
    for (const Json& e : cell["cross"]) {
      if (!e.is_object()) fail(at + ": cross entries must be objects");
      for (const auto& item : e.items())
        if (item.key() != "to_cell" && item.key() != "a1" && item.key() != "a2")
          fail(at + ": unknown cross key '" + item.key() + "'");
      if (!e.contains("to_cell") || !e["to_cell"].is_number_integer())
        fail(at + ": cross 'to_cell' must be an integer");
      int src = e["to_cell"].get<int>();
      if (src < 1 || src > K) fail(at + ": cross 'to_cell' out of range");
      if (src == k + 1) fail(at + ": cross 'to_cell' must name another cell");
      if (seen[src - 1]) fail(at + ": duplicate cross entry for cell " + std::to_string(src));
      seen[src - 1] = true;
      if (!e.contains("a1")) fail("missing channel strength " + triple(k, 0, src - 1));
      if (!e.contains("a2")) fail("missing channel strength " + triple(k, 1, src - 1));
      p.alpha(k, 0, src - 1) = strength_entry(e["a1"], k, 0, src - 1);
      p.alpha(k, 1, src - 1) = strength_entry(e["a2"], k, 1, src - 1);
    }
    for (int j2 = 0; j2 < K; ++j2)
      if (j2 != k && !seen[j2])
        fail("missing channel strengths " + triple(k, 0, j2) + " and " + triple(k, 1, j2));
  }
  return p;
}

std::string profile_hash(const NetworkProfile& p) {
  std::string doc = serialize_profile(p);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : doc) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json order_to_json(const DecodingOrder& o) {
  Json a = Json::array();
  for (int k = 0; k < o.cells(); ++k)
    a.push_back(Json::array({o.user_at(k, 0) + 1, o.user_at(k, 1) + 1}));
  return a;
}

Json power_to_json(const Vector& r) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) a.push_back(finite_or_neg_inf(r[i]));
  return a;
}

Json region_to_json(const HalfSpaceRegion& reg, const std::string& profile_hash,
                    const OptimalityCheck& check) {
  Json doc;
  doc["cells"] = reg.cells;
  doc["dim"] = reg.dim();
  doc["profile_hash"] = profile_hash;
  doc["verdict"] = check.optimal ? "optimal" : "unknown";
  Json viols = Json::array();
  for (const OptimalityViolation& v : check.violations) {
    Json e;
    e["condition"] = condition_name(v.condition);
    e["cell"] = v.cell + 1;
    e["user"] = v.user < 0 ? Json(nullptr) : Json(v.user + 1);
    e["lhs"] = v.lhs;
    e["rhs"] = v.rhs;
    viols.push_back(e);
  }
  doc["violations"] = viols;
  Json rows = Json::array();
  for (const RegionRow& row : reg.rows) {
    Json e;
    e["tag"] = row_tag_name(row.tag);
    e["coeffs"] = vector_to_json(row.coeffs);
    e["rhs"] = row.rhs;
    e["cells"] = one_based(row.cells);
    e["users"] = one_based(row.users);
    rows.push_back(e);
  }
  doc["rows"] = rows;
  return doc;
}

Json duality_report_to_json(const DualityReport& rep) {
  Json doc;
  doc["direction"] =
      rep.direction == DualDirection::ibc_to_imac ? "ibc_to_imac" : "imac_to_ibc";
  doc["input_order"] = order_to_json(rep.input_order);
  doc["mapped_order"] = order_to_json(rep.mapped_order);
  doc["input_power"] = power_to_json(rep.input_power);
  doc["mapped_power"] = power_to_json(rep.mapped_power);
  doc["normalization_applied"] = rep.normalization_applied;
  doc["exponents"] = Json{{"kind", rep.exponents.kind == ExponentKind::beta ? "beta" : "gamma"},
                          {"values", vector_to_json(rep.exponents.values)}};
  doc["input_bounds"] = vector_to_json(rep.input_bounds);
  doc["mapped_bounds"] = vector_to_json(rep.mapped_bounds);
  doc["max_deficit"] = rep.max_deficit;
  return doc;
}

Json cross_validation_report_to_json(const CrossValidationReport& rep,
                                     const std::string& profile_hash) {
  Json doc;
  doc["profile_hash"] = profile_hash;
  doc["grid"] = Json{{"min_exponent", rep.grid.min_exponent},
                     {"steps", rep.grid.steps},
                     {"include_neg_infinity", rep.grid.include_neg_infinity}};
  doc["samples"] = rep.samples;
  doc["containment_violations"] = rep.containment_violations;
  doc["worst_violation"] = rep.worst_violation;
  if (rep.containment_violations > 0)
    doc["worst_offender"] = Json{{"order", order_to_json(rep.worst_offender.order)},
                                 {"power", power_to_json(rep.worst_offender.power)},
                                 {"bounds", vector_to_json(rep.worst_offender.bounds)}};
  else
    doc["worst_offender"] = nullptr;
  Json verts = Json::array();
  for (const GdofTuple& v : rep.vertices) verts.push_back(vector_to_json(v));
  doc["vertices"] = verts;
  Json falls = Json::array();
  for (double s : rep.vertex_shortfall) falls.push_back(s);
  doc["vertex_shortfall"] = falls;
  doc["eps_cov"] = rep.eps_cov;
  doc["containment_ok"] = rep.containment_ok();
  doc["coverage_ok"] = rep.coverage_ok();
  return doc;
}

Json convergence_report_to_json(const ConvergenceReport& rep) {
  Json doc;
  Json ps = Json::array();
  for (double P : rep.P) ps.push_back(P);
  doc["P"] = ps;
  doc["bounds"] = vector_to_json(rep.bounds);
  Json gaps = Json::array();
  for (Eigen::Index i = 0; i < rep.gaps.rows(); ++i)
    gaps.push_back(vector_to_json(rep.gaps.row(i).transpose()));
  doc["gaps"] = gaps;
  doc["threshold"] = rep.threshold;
  doc["final_below_threshold"] = rep.final_below_threshold;
  return doc;
}

}  // namespace tincell
