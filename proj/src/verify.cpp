#include "tincell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tincell {

std::vector<double> GridSpec::values() const {
  validate();
  std::vector<double> v;
  v.reserve(steps + (include_neg_infinity ? 1 : 0));
  if (include_neg_infinity) v.push_back(kNegInf);
  double h = spacing();
  for (int i = 0; i < steps; ++i)
    v.push_back(i + 1 == steps ? 0.0 : min_exponent + h * i);
  return v;
}

void GridSpec::validate() const {
  if (!(std::isfinite(min_exponent) && min_exponent < 0.0))
    throw std::invalid_argument("grid floor must be a finite negative exponent");
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
}

GridSpec GridSpec::for_profile(const NetworkProfile& p) {
  p.require_valid();
  double m = p.max_alpha();
  GridSpec g;
  g.min_exponent = m > 0.0 ? -1.5 * m : -1.0;
  return g;
}

double sweep_size(const NetworkProfile& p, const GridSpec& grid) {
  p.require_valid();
  double v = static_cast<double>(grid.values().size());
  return std::ldexp(std::pow(v, 2 * p.cells()), p.cells());
}

namespace {

// Odometer over grid values for every power coordinate; the last
// coordinate moves fastest.
struct PowerCursor {
  const std::vector<double>& vals;
  std::vector<int> digit;
  Vector r;

  PowerCursor(const std::vector<double>& values, int coords)
      : vals(values), digit(coords, 0), r(Vector::Constant(coords, values[0])) {}

  bool advance() {
    for (int c = static_cast<int>(digit.size()) - 1; c >= 0; --c) {
      if (++digit[c] < static_cast<int>(vals.size())) {
        r[c] = vals[digit[c]];
        return true;
      }
      digit[c] = 0;
      r[c] = vals[0];
    }
    return false;
  }
};

void require_budget(const NetworkProfile& p, const GridSpec& grid,
                    double budget) {
  double total = sweep_size(p, grid);
  if (total > budget)
    throw std::invalid_argument(
        "sweep of " + std::to_string(total) + " combinations exceeds the budget of " +
        std::to_string(budget) + "; coarsen the grid or raise the budget");
}

}  // namespace

std::vector<SampledPoint> sample_tin_region(const NetworkProfile& p, Side side,
                                            const GridSpec& grid,
                                            double budget) {
  require_budget(p, grid, budget);
  const auto values = grid.values();
  std::vector<SampledPoint> out;
  out.reserve(static_cast<std::size_t>(sweep_size(p, grid)));
  Vector bounds(p.users());
  for (const DecodingOrder& order : DecodingOrder::all(p.cells())) {
    PowerCursor cur(values, p.users());
    do {
      if (side == Side::ibc)
        ibc_gdof_bounds_into(p, order, cur.r, bounds);
      else
        imac_gdof_bounds_into(p, order, cur.r, bounds);
      out.push_back({order, cur.r, bounds});
    } while (cur.advance());
  }
  return out;
}

DualityReport duality_certificate(const NetworkProfile& p,
                                  const DecodingOrder& order,
                                  const PowerAllocation& power,
                                  DualDirection direction) {
  DualityReport rep;
  rep.direction = direction;
  rep.input_order = order;
  rep.input_power = power;
  if (direction == DualDirection::ibc_to_imac) {
    rep.input_bounds = ibc_gdof_bounds(p, order, power);
    rep.exponents = beta_exponents(p, order, power);
    rep.mapped_order = order;
    rep.mapped_power = dual_power_to_imac(p, order, power);
    rep.mapped_bounds = imac_gdof_bounds(p, order, rep.mapped_power);
  } else {
    rep.input_bounds = imac_gdof_bounds(p, order, power);
    NormalizedImacScheme norm = normalize_imac_power(p, order, power);
    rep.normalization_applied =
        std::any_of(norm.swapped.begin(), norm.swapped.end(), [](bool b) { return b; });
    rep.mapped_order = norm.order;
    rep.exponents = gamma_exponents(p, norm.order, norm.power);
    rep.mapped_power = dual_power_to_ibc(p, norm.order, norm.power);
    rep.mapped_bounds = ibc_gdof_bounds(p, norm.order, rep.mapped_power);
  }
  rep.max_deficit = (rep.input_bounds - rep.mapped_bounds).maxCoeff();
  return rep;
}

bool CrossValidationReport::coverage_ok() const {
  for (double s : vertex_shortfall)
    if (!(s <= eps_cov + kDefaultTol)) return false;
  return true;
}

CrossValidationReport region_cross_validation(const NetworkProfile& p,
                                              const GridSpec& grid,
                                              double budget) {
  OptimalityCheck check = check_tin_optimality(p);
  if (!check.optimal)
    throw std::invalid_argument(
        "profile does not satisfy the TIN optimality conditions; "
        "cross-validation compares against the optimal region only");
  require_budget(p, grid, budget);

  HalfSpaceRegion region = tin_optimal_region(p);
  CrossValidationReport rep;
  rep.grid = grid;
  rep.vertices = extreme_points(region);
  rep.eps_cov = grid.spacing() * 2 * p.cells();
  rep.vertex_shortfall.assign(rep.vertices.size(),
                              std::numeric_limits<double>::infinity());

  // Sampled corners are nonnegative by construction, so nonneg rows cannot
  // be violated; check the math rows only. Their coefficients are all 0/1,
  // so each row is a plain sum over an index list (with a dense fallback
  // should that ever change). With 0/1 coefficients a row sum never exceeds
  // the sample's coordinate sum, so rows sorted by rhs let each sample check
  // just the prefix with rhs below that sum.
  const int dim = region.dim();
  std::vector<const RegionRow*> math_rows;
  bool zero_one = true;
  for (const RegionRow& row : region.rows) {
    if (row.tag == RowTag::nonneg) continue;
    math_rows.push_back(&row);
    for (int c = 0; c < dim; ++c)
      if (row.coeffs[c] != 0.0 && row.coeffs[c] != 1.0) zero_one = false;
  }
  if (zero_one)
    std::sort(math_rows.begin(), math_rows.end(),
              [](const RegionRow* a, const RegionRow* b) {
                return a->rhs < b->rhs;
              });
  std::vector<double> mrows, mrhs;
  std::vector<int> midx, moff{0};
  for (const RegionRow* row : math_rows) {
    for (int c = 0; c < dim; ++c) {
      mrows.push_back(row->coeffs[c]);
      if (row->coeffs[c] == 1.0) midx.push_back(c);
    }
    moff.push_back(static_cast<int>(midx.size()));
    mrhs.push_back(row->rhs);
  }
  const int nm = static_cast<int>(mrhs.size());

  const auto values = grid.values();
  const std::size_t nv = rep.vertices.size();
  std::vector<double> vert_sum(nv);
  for (std::size_t i = 0; i < nv; ++i) vert_sum[i] = rep.vertices[i].sum();
  // A sample with coordinate sum s can push vertex v's shortfall below its
  // current best only when s > vert_sum[v] - dim * best[v]. Keeping the
  // vertices sorted by that requirement lets each sample scan just the
  // prefix it could possibly improve; covered vertices drop out.
  std::vector<int> covlist(nv);
  std::vector<double> req(nv, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < nv; ++i) covlist[i] = static_cast<int>(i);
  auto resort_covlist = [&] {
    for (std::size_t i = 0; i < covlist.size();) {
      int v = covlist[i];
      if (rep.vertex_shortfall[v] <= 0.0) {
        covlist[i] = covlist.back();
        covlist.pop_back();
        continue;
      }
      req[v] = vert_sum[v] - dim * rep.vertex_shortfall[v];
      ++i;
    }
    std::sort(covlist.begin(), covlist.end(),
              [&](int a, int b) { return req[a] < req[b]; });
  };

  Vector bounds(p.users());
  for (const DecodingOrder& order : DecodingOrder::all(p.cells())) {
    PowerCursor cur(values, p.users());
    do {
      ibc_gdof_bounds_into(p, order, cur.r, bounds);
      ++rep.samples;
      const double* b = bounds.data();
      double s_sum = 0.0;
      for (int c = 0; c < dim; ++c) s_sum += b[c];

      double excess = -std::numeric_limits<double>::infinity();
      if (zero_one) {
        const int* ip = midx.data();
        for (int i = 0; i < nm; ++i) {
          if (mrhs[i] >= s_sum - kDefaultTol) break;
          double s = 0.0;
          for (int t = moff[i]; t < moff[i + 1]; ++t) s += b[ip[t]];
          double e = s - mrhs[i];
          if (e > excess) excess = e;
        }
      } else {
        const double* mp = mrows.data();
        for (int i = 0; i < nm; ++i, mp += dim) {
          double s = 0.0;
          for (int c = 0; c < dim; ++c) s += mp[c] * b[c];
          double e = s - mrhs[i];
          if (e > excess) excess = e;
        }
      }
      if (excess > kDefaultTol) {
        ++rep.containment_violations;
        if (excess > rep.worst_violation) {
          rep.worst_violation = excess;
          rep.worst_offender = {order, cur.r, bounds};
        }
      }
      bool changed = false;
      for (std::size_t a = 0; a < covlist.size(); ++a) {
        int v = covlist[a];
        if (req[v] >= s_sum) break;
        double best = rep.vertex_shortfall[v];
        const double* vert = rep.vertices[v].data();
        double fall = -std::numeric_limits<double>::infinity();
        for (int c = 0; c < dim; ++c) {
          double gap = vert[c] - b[c];
          if (gap > fall) fall = gap;
          if (fall >= best) break;
        }
        if (fall < best) {
          rep.vertex_shortfall[v] = fall;
          changed = true;
        }
      }
      if (changed) resort_covlist();
    } while (cur.advance());
  }
  return rep;
}

double gaussian_sinr_gap(const GaussianGapPair& g) {
  double A1 = g.a1 * g.a1, A2 = g.a2 * g.a2;
  double B1 = g.b1 * g.b1, B2 = g.b2 * g.b2;
  if (!(A2 >= 1.0) || !(B2 >= A2) || !(B1 / B2 >= A1))
    throw std::invalid_argument(
        "gap bound requires |b1/b2| >= |a1| and |b2| >= |a2| >= 1");
  return std::log2(1.0 + A1 / (1.0 + A2)) - std::log2(1.0 + B1 / (1.0 + B2));
}

ConvergenceReport finite_p_convergence(const NetworkProfile& p,
                                       const DecodingOrder& order,
                                       const PowerAllocation& r,
                                       std::vector<double> P_list,
                                       double threshold) {
  if (P_list.empty()) throw std::invalid_argument("P list must not be empty");
  for (std::size_t i = 0; i < P_list.size(); ++i) {
    if (!(std::isfinite(P_list[i]) && P_list[i] > 1.0))
      throw std::invalid_argument("P values must be finite and > 1");
    if (i > 0 && P_list[i] <= P_list[i - 1])
      throw std::invalid_argument("P values must be strictly increasing");
  }
  if (!(std::isfinite(threshold) && threshold >= 0.0))
    throw std::invalid_argument("threshold must be finite and nonnegative");

  ConvergenceReport rep;
  rep.P = std::move(P_list);
  rep.threshold = threshold;
  rep.bounds = ibc_gdof_bounds(p, order, r);
  rep.gaps.resize(rep.P.size(), p.users());
  for (std::size_t i = 0; i < rep.P.size(); ++i) {
    double P = rep.P[i];
    FinitePConfig cfg;
    cfg.P = P;
    cfg.q.resize(p.users());
    for (int c = 0; c < p.users(); ++c)
      cfg.q[c] = r[c] == kNegInf ? 0.0 : std::pow(P, r[c]);
    for (int k = 0; k < p.cells(); ++k) {
      double s = cfg.q[coord(k, 0)] + cfg.q[coord(k, 1)];
      if (s > 1.0) {
        cfg.q[coord(k, 0)] /= s;
        cfg.q[coord(k, 1)] /= s;
      }
    }
    Vector rates = ibc_finite_p_rates(p, order, cfg);
    for (int c = 0; c < p.users(); ++c)
      rep.gaps(i, c) = std::abs(rates[c] / std::log2(P) - rep.bounds[c]);
  }
  rep.final_below_threshold =
      (rep.gaps.row(rep.P.size() - 1).array() <= threshold).all();
  return rep;
}

}  // namespace tincell
