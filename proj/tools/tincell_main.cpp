// Command-line front end: profile generation, region export, optimality
// checking, membership queries, duality verification runs, and plot data.
//
// Exit codes (stable contract for scripting):
//   0  success / point inside / all certificates pass
//   1  input error (bad flags, malformed or invalid files)
//   2  region emitted but optimality unknown (conditions not satisfied)
//   3  point outside / verification failure

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tincell/gdof.hpp"
#include "tincell/io.hpp"
#include "tincell/model.hpp"
#include "tincell/random.hpp"
#include "tincell/region.hpp"
#include "tincell/verify.hpp"

using namespace tincell;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

NetworkProfile load_profile(const std::string& path) {
  return parse_profile(read_file(path));
}

// Shortest round-trip decimal form; -inf spelled out.
std::string num(double v) {
  if (v == kNegInf) return "-inf";
  return Json(v).dump();
}

Interval parse_range(const std::string& text, const char* flag) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument(std::string(flag) + " expects 'lo:hi'");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + " expects numeric 'lo:hi'");
  }
}

// 1-based "cell:user" axis label -> flat coordinate.
int parse_axis(const std::string& text, const char* flag, int cells) {
  auto colon = text.find(':');
  int k = 0, u = 0;
  try {
    k = std::stoi(text.substr(0, colon));
    u = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    k = 0;
  }
  if (colon == std::string::npos || k < 1 || k > cells || u < 1 || u > 2)
    throw std::invalid_argument(std::string(flag) +
                                " expects 'cell:user' with 1-based labels");
  return coord(k - 1, u - 1);
}

std::string describe_row(const RegionRow& row) {
  std::string tag = row.tag == RowTag::nonneg    ? "nonneg"
                    : row.tag == RowTag::percell ? "percell"
                                                 : "cyclic";
  std::string lhs;
  for (int c = 0; c < row.coeffs.size(); ++c) {
    if (row.coeffs[c] == 0.0) continue;
    if (!lhs.empty()) lhs += row.coeffs[c] < 0.0 ? " - " : " + ";
    else if (row.coeffs[c] < 0.0) lhs += "-";
    lhs += "d(" + std::to_string(c / 2 + 1) + "," + std::to_string(c % 2 + 1) + ")";
  }
  return tag + " row: " + lhs + " <= " + num(row.rhs);
}

int run_gen(int cells, std::uint64_t seed, const std::string& direct,
            const std::string& cross, const std::string& out) {
  NetworkProfile p = random_profile(cells, parse_range(direct, "--direct"),
                                    parse_range(cross, "--cross"), seed);
  std::string text = serialize_profile(p);
  std::string hash = profile_hash(p);
  if (!out.empty()) {
    write_file(out, text);
    std::cout << "wrote " << out << "\n";
    std::cout << "profile_hash: " << hash << "\n";
  } else {
    std::cout << text;
    std::cerr << "profile_hash: " << hash << "\n";
  }
  return 0;
}

int run_region(const std::string& path, const std::string& out) {
  NetworkProfile p = load_profile(path);
  OptimalityCheck check = check_tin_optimality(p);
  HalfSpaceRegion reg = tin_optimal_region(p);
  Json doc = region_to_json(reg, profile_hash(p), check);
  std::string verdict =
      check.optimal
          ? "verdict: optimal"
          : "verdict: unknown (outer structure only; the sufficient "
            "optimality conditions do not hold)";
  if (!out.empty()) {
    write_file(out, doc.dump(2) + "\n");
    std::cout << "wrote " << out << "\n" << verdict << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
    std::cerr << verdict << "\n";
  }
  return check.optimal ? 0 : 2;
}

int run_check(const std::string& path, const std::vector<double>& point,
              double tol) {
  NetworkProfile p = load_profile(path);
  if (static_cast<int>(point.size()) != 2 * p.cells())
    throw std::invalid_argument(
        "--point needs " + std::to_string(2 * p.cells()) +
        " coordinates for this profile, got " + std::to_string(point.size()));
  HalfSpaceRegion reg = tin_optimal_region(p);
  GdofTuple d(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) d[i] = point[i];
  Membership m = contains(reg, d, tol);
  if (m.inside) {
    std::cout << "inside\n";
    return 0;
  }
  std::cout << "outside: violates " << describe_row(reg.rows[m.violated_row])
            << " by " << num(m.violation) << " (row " << m.violated_row << ")\n";
  return 3;
}

int run_duality(const std::string& path, int samples, std::uint64_t seed,
                double tol, const std::string& out, const std::string& format) {
  NetworkProfile p = load_profile(path);
  const int users = p.users();
  auto orders = DecodingOrder::all(p.cells());
  Rng rng(seed);

  int failures = 0;
  double worst = kNegInf;
  DualityReport worst_rep;
  for (int s = 0; s < samples; ++s) {
    const DecodingOrder& order = orders[rng.below(static_cast<int>(orders.size()))];
    PowerAllocation r(users);
    for (int i = 0; i < users; ++i) {
      double u = rng.uniform01();
      r[i] = u < 0.2 ? kNegInf : -rng.uniform(0.0, 4.0);
    }
    for (DualDirection dir :
         {DualDirection::ibc_to_imac, DualDirection::imac_to_ibc}) {
      DualityReport rep = duality_certificate(p, order, r, dir);
      if (rep.max_deficit > worst) {
        worst = rep.max_deficit;
        worst_rep = rep;
      }
      if (rep.max_deficit > tol) ++failures;
    }
  }
  bool pass = failures == 0;

  Json doc;
  doc["command"] = "duality";
  doc["profile_hash"] = profile_hash(p);
  doc["seed"] = seed;
  doc["samples"] = samples;
  doc["tolerance"] = tol;
  doc["worst_deficit"] = worst;
  doc["worst_case"] = duality_report_to_json(worst_rep);
  doc["failures"] = failures;
  doc["pass"] = pass;

  std::ostringstream text;
  text << "profile_hash: " << profile_hash(p) << "\n"
       << "seed: " << seed << "\n"
       << "samples: " << samples << " (both directions each)\n"
       << "worst_deficit: " << num(worst) << "\n"
       << "result: " << (pass ? "PASS" : "FAIL") << " (tolerance "
       << num(tol) << ")\n";

  if (!out.empty()) write_file(out, doc.dump(2) + "\n");
  if (format == "structured")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text.str();
  return pass ? 0 : 3;
}

int run_plotdata(const std::string& path, const std::string& xspec,
                 const std::string& yspec, std::vector<double> fixed,
                 int steps, double axis_max, const std::string& out,
                 const std::string& format) {
  NetworkProfile p = load_profile(path);
  const int dim = 2 * p.cells();
  int xc = parse_axis(xspec, "--x", p.cells());
  int yc = parse_axis(yspec, "--y", p.cells());
  if (xc == yc) throw std::invalid_argument("--x and --y must differ");
  if (steps < 2) throw std::invalid_argument("--steps must be at least 2");
  if (fixed.empty()) fixed.assign(dim - 2, 0.0);
  if (static_cast<int>(fixed.size()) != dim - 2)
    throw std::invalid_argument("--fixed needs " + std::to_string(dim - 2) +
                                " values (all coordinates except the axes)");

  HalfSpaceRegion reg = tin_optimal_region(p);
  GdofTuple base = GdofTuple::Zero(dim);
  for (int c = 0, i = 0; c < dim; ++c)
    if (c != xc && c != yc) base[c] = fixed[i++];

  double xmax = axis_max > 0.0 ? axis_max : p.direct(xc / 2, xc % 2);
  double ymax = axis_max > 0.0 ? axis_max : p.direct(yc / 2, yc % 2);
  auto tick = [steps](double mx, int i) {
    return i + 1 == steps ? mx : mx * i / (steps - 1);
  };

  // exact upper boundary of the slice: y*(x) = min over rows containing y
  // of rhs minus the rest of the row; empty when a row without y already
  // fails at (x, fixed)
  std::vector<std::array<double, 2>> boundary;
  for (int i = 0; i < steps; ++i) {
    GdofTuple pt = base;
    pt[xc] = tick(xmax, i);
    pt[yc] = 0.0;
    double ystar = std::numeric_limits<double>::infinity();
    bool feasible = true;
    for (const RegionRow& row : reg.rows) {
      double rest = row.coeffs.dot(pt);
      if (row.coeffs[yc] == 1.0)
        ystar = std::min(ystar, row.rhs - rest);
      else if (rest > row.rhs + kDefaultTol)
        feasible = false;
    }
    if (feasible && ystar >= -kDefaultTol)
      boundary.push_back({pt[xc], std::max(ystar, 0.0)});
  }
  if (boundary.empty())
    std::cerr << "warning: the slice is empty at the given fixed coordinates\n";

  Json raster = Json::array();
  for (int i = 0; i < steps; ++i) {
    Json col = Json::array();
    for (int j = 0; j < steps; ++j) {
      GdofTuple pt = base;
      pt[xc] = tick(xmax, i);
      pt[yc] = tick(ymax, j);
      col.push_back(contains(reg, pt).inside);
    }
    raster.push_back(col);
  }

  Json doc;
  doc["command"] = "plotdata";
  doc["profile_hash"] = profile_hash(p);
  doc["x"] = Json{{"cell", xc / 2 + 1}, {"user", xc % 2 + 1}, {"max", xmax}};
  doc["y"] = Json{{"cell", yc / 2 + 1}, {"user", yc % 2 + 1}, {"max", ymax}};
  Json fx = Json::array();
  for (double v : fixed) fx.push_back(v);
  doc["fixed"] = fx;
  doc["steps"] = steps;
  doc["inside"] = raster;  // inside[i][j] at (x_i, y_j)
  Json bnd = Json::array();
  for (const auto& b : boundary) bnd.push_back(Json::array({b[0], b[1]}));
  doc["boundary"] = bnd;

  std::ostringstream text;
  text << "# raster: x y inside\n";
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j)
      text << num(tick(xmax, i)) << " " << num(tick(ymax, j)) << " "
           << (raster[i][j].get<bool>() ? 1 : 0) << "\n";
  text << "# boundary: x y\n";
  for (const auto& b : boundary)
    text << num(b[0]) << " " << num(b[1]) << "\n";

  if (!out.empty()) write_file(out, doc.dump(2) + "\n");
  if (format == "structured")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TIN-achievable GDoF regions for cellular networks"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a random normalized profile");
  int cells = 0;
  std::uint64_t seed = 1;
  std::string direct = "1:2", cross = "0:0.5", out;
  gen->add_option("--cells", cells, "number of cells")
      ->required()
      ->check(CLI::Range(1, 64));
  gen->add_option("--seed", seed, "random seed (default 1)");
  gen->add_option("--direct", direct, "direct strength range lo:hi (default 1:2)");
  gen->add_option("--cross", cross, "cross strength range lo:hi (default 0:0.5)");
  gen->add_option("--out", out, "output path (default: profile to stdout)");

  auto* region = app.add_subcommand(
      "region", "export the polyhedral region with an optimality verdict");
  std::string region_path, region_out;
  region->add_option("profile", region_path, "profile JSON file")->required();
  region->add_option("--out", region_out, "region JSON path (default: stdout)");

  auto* check = app.add_subcommand("check", "test a GDoF tuple for membership");
  std::string check_path;
  std::vector<double> point;
  double check_tol = kDefaultTol;
  check->add_option("profile", check_path, "profile JSON file")->required();
  check->add_option("--point", point, "tuple, one value per user")
      ->required()
      ->expected(-1);
  check->add_option("--tol", check_tol, "row tolerance (default 1e-9)");

  auto* duality = app.add_subcommand(
      "duality", "verify uplink-downlink duality on random schemes");
  std::string dual_path, dual_out, dual_format = "text";
  int dual_samples = 1000;
  std::uint64_t dual_seed = 1;
  double dual_tol = kDefaultTol;
  duality->add_option("profile", dual_path, "profile JSON file")->required();
  duality->add_option("--samples", dual_samples, "random schemes per direction (default 1000)")
      ->check(CLI::PositiveNumber);
  duality->add_option("--seed", dual_seed, "random seed (default 1)");
  duality->add_option("--tol", dual_tol,
                      "max allowed deficit (default 1e-9; 0 can fail on "
                      "benign float rounding)");
  duality->add_option("--out", dual_out, "write the structured report here");
  duality->add_option("--format", dual_format, "stdout format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* plot = app.add_subcommand(
      "plotdata", "raster and exact boundary of a 2D slice of the region");
  std::string plot_path, plot_x, plot_y, plot_out, plot_format = "text";
  std::vector<double> plot_fixed;
  int plot_steps = 41;
  double plot_max = 0.0;
  plot->add_option("profile", plot_path, "profile JSON file")->required();
  plot->add_option("--x", plot_x, "x axis as cell:user (1-based)")->required();
  plot->add_option("--y", plot_y, "y axis as cell:user (1-based)")->required();
  plot->add_option("--fixed", plot_fixed,
                   "values for the remaining coordinates (default all 0)")
      ->expected(-1);
  plot->add_option("--steps", plot_steps, "raster points per axis (default 41)");
  plot->add_option("--max", plot_max, "axis maximum (default: per-user cap)");
  plot->add_option("--out", plot_out, "write the structured data here");
  plot->add_option("--format", plot_format, "stdout format")
      ->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
    if (*gen) return run_gen(cells, seed, direct, cross, out);
    if (*region) return run_region(region_path, region_out);
    if (*check) return run_check(check_path, point, check_tol);
    if (*duality)
      return run_duality(dual_path, dual_samples, dual_seed, dual_tol,
                         dual_out, dual_format);
    if (*plot)
      return run_plotdata(plot_path, plot_x, plot_y, plot_fixed, plot_steps,
                          plot_max, plot_out, plot_format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
