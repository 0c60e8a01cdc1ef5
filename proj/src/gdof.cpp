#include "tincell/gdof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tincell {

namespace {

inline double pos(double x) { return x > 0.0 ? x : 0.0; }

void require_scheme(const NetworkProfile& p, const DecodingOrder& o,
                    const Vector& power) {
  p.require_valid();
  if (o.cells() != p.cells())
    throw std::invalid_argument("decoding order and profile disagree on the cell count");
  require_power_exponents(p, power);
}

// Strongest inter-cell level reaching user m of cell k in the downlink:
// max over other cells j of alpha(k, m, j) + the peak power exponent of
// BS j. Empty (single cell) = -inf.
inline double inter_level_dl(const NetworkProfile& p, const Vector& r, int k,
                             int m) {
  double lev = kNegInf;
  for (int j = 0; j < p.cells(); ++j) {
    if (j == k) continue;
    double rj = std::max(r[coord(j, 0)], r[coord(j, 1)]);
    lev = std::max(lev, p.alpha(k, m, j) + rj);
  }
  return lev;
}

// Strongest inter-cell level reaching base station k in the uplink.
inline double inter_level_ul(const NetworkProfile& p, const Vector& rbar,
                             int k) {
  double lev = kNegInf;
  for (int j = 0; j < p.cells(); ++j) {
    if (j == k) continue;
    lev = std::max(lev, std::max(p.alpha(j, 0, k) + rbar[coord(j, 0)],
                                 p.alpha(j, 1, k) + rbar[coord(j, 1)]));
  }
  return lev;
}

}  // namespace

void ibc_gdof_bounds_into(const NetworkProfile& p, const DecodingOrder& o,
                          const PowerAllocation& r, Vector& out) {
  if (r.size() != p.users())
    throw std::invalid_argument("power exponent vector needs one entry per user");
  out.resize(p.users());
  for (int k = 0; k < p.cells(); ++k) {
    int u1 = o.user_at(k, 0), u2 = o.user_at(k, 1);
    double r1 = r[coord(k, u1)], r2 = r[coord(k, u2)];
    double lev[2] = {inter_level_dl(p, r, k, 0), inter_level_dl(p, r, k, 1)};
    double worst = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 2; ++m) {
      double a = p.alpha(k, m, k);
      worst = std::min(worst, a + r1 - pos(std::max(a + r2, lev[m])));
    }
    out[coord(k, u1)] = pos(worst);
    double a2 = p.alpha(k, u2, k);
    out[coord(k, u2)] = pos(a2 + r2 - pos(lev[u2]));
  }
}

GdofTuple ibc_gdof_bounds(const NetworkProfile& p, const DecodingOrder& o,
                          const PowerAllocation& r) {
  require_scheme(p, o, r);
  Vector out;
  ibc_gdof_bounds_into(p, o, r, out);
  return out;
}

void imac_gdof_bounds_into(const NetworkProfile& p, const DecodingOrder& o,
                           const PowerAllocation& rbar, Vector& out) {
  if (rbar.size() != p.users())
    throw std::invalid_argument("power exponent vector needs one entry per user");
  out.resize(p.users());
  for (int k = 0; k < p.cells(); ++k) {
    int u1 = o.user_at(k, 0), u2 = o.user_at(k, 1);
    double a1 = p.alpha(k, u1, k), a2 = p.alpha(k, u2, k);
    double lev = inter_level_ul(p, rbar, k);
    out[coord(k, u1)] = pos(a1 + rbar[coord(k, u1)] - pos(lev));
    out[coord(k, u2)] = pos(a2 + rbar[coord(k, u2)] -
                            pos(std::max(a1 + rbar[coord(k, u1)], lev)));
  }
}

GdofTuple imac_gdof_bounds(const NetworkProfile& p, const DecodingOrder& o,
                           const PowerAllocation& rbar) {
  require_scheme(p, o, rbar);
  Vector out;
  imac_gdof_bounds_into(p, o, rbar, out);
  return out;
}

DualExponents beta_exponents(const NetworkProfile& p, const DecodingOrder& o,
                             const PowerAllocation& r) {
  require_scheme(p, o, r);
  DualExponents res{ExponentKind::beta, Vector(p.users())};
  for (int k = 0; k < p.cells(); ++k) {
    int u1 = o.user_at(k, 0), u2 = o.user_at(k, 1);
    double r2 = r[coord(k, u2)];
    double b1 = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 2; ++m) {
      double a = p.alpha(k, m, k);
      double lev = inter_level_dl(p, r, k, m);
      b1 = std::min(b1, std::min(a, std::min(-r2, a - lev)));
    }
    res.values[coord(k, u1)] = b1;
    double a2 = p.alpha(k, u2, k);
    res.values[coord(k, u2)] = std::min(a2, a2 - inter_level_dl(p, r, k, u2));
  }
  return res;
}

DualExponents gamma_exponents(const NetworkProfile& p, const DecodingOrder& o,
                              const PowerAllocation& rbar) {
  require_scheme(p, o, rbar);
  DualExponents res{ExponentKind::gamma, Vector(p.users())};
  for (int k = 0; k < p.cells(); ++k) {
    int u1 = o.user_at(k, 0), u2 = o.user_at(k, 1);
    double a1 = p.alpha(k, u1, k);
    double lev = inter_level_ul(p, rbar, k);
    res.values[coord(k, u1)] = pos(lev);
    res.values[coord(k, u2)] = pos(std::max(a1 + rbar[coord(k, u1)], lev));
  }
  return res;
}

PowerAllocation dual_power_to_imac(const NetworkProfile& p,
                                   const DecodingOrder& o,
                                   const PowerAllocation& r) {
  DualExponents beta = beta_exponents(p, o, r);
  Vector rbar(p.users());
  for (int k = 0; k < p.cells(); ++k)
    for (int u = 0; u < 2; ++u) {
      int c = coord(k, u);
      rbar[c] = beta.values[c] - p.alpha(k, u, k);
    }
  return rbar;
}

bool uplink_power_order_holds(const NetworkProfile& p, const DecodingOrder& o,
                              const PowerAllocation& rbar) {
  require_scheme(p, o, rbar);
  for (int k = 0; k < p.cells(); ++k) {
    int u1 = o.user_at(k, 0), u2 = o.user_at(k, 1);
    if (rbar[coord(k, u2)] + p.alpha(k, u2, k) <
        rbar[coord(k, u1)] + p.alpha(k, u1, k))
      return false;
  }
  return true;
}

NormalizedImacScheme normalize_imac_power(const NetworkProfile& p,
                                          const DecodingOrder& o,
                                          const PowerAllocation& rbar) {
  require_scheme(p, o, rbar);
  NormalizedImacScheme s{o, rbar, std::vector<bool>(p.cells(), false)};
  for (int k = 0; k < p.cells(); ++k) {
    int u1 = o.user_at(k, 0), u2 = o.user_at(k, 1);
    if (rbar[coord(k, u2)] + p.alpha(k, u2, k) >=
        rbar[coord(k, u1)] + p.alpha(k, u1, k))
      continue;
    // The old slot-2 user moves into slot 1 and is silenced; the other
    // user keeps its power. Its bound can only grow (one interferer and
    // one noise term gone), and the silenced user's bound was already 0.
    s.order = s.order.with_cell_swapped(k);
    s.power[coord(k, u2)] = kNegInf;
    s.swapped[k] = true;
  }
  return s;
}

PowerAllocation dual_power_to_ibc(const NetworkProfile& p,
                                  const DecodingOrder& o,
                                  const PowerAllocation& rbar) {
  if (!uplink_power_order_holds(p, o, rbar))
    throw std::invalid_argument(
        "uplink slot ordering violated (slot-2 received level below slot-1); "
        "normalize_imac_power first");
  DualExponents gamma = gamma_exponents(p, o, rbar);
  Vector r(p.users());
  for (Eigen::Index i = 0; i < r.size(); ++i)
    r[i] = gamma.values[i] == 0.0 ? 0.0 : -gamma.values[i];
  return r;
}

Vector ibc_finite_p_rates(const NetworkProfile& p, const DecodingOrder& o,
                          const FinitePConfig& cfg) {
  p.require_valid();
  if (o.cells() != p.cells())
    throw std::invalid_argument("decoding order and profile disagree on the cell count");
  if (!(std::isfinite(cfg.P) && cfg.P > 1.0))
    throw std::invalid_argument("P must be finite and > 1");
  if (cfg.q.size() != p.users())
    throw std::invalid_argument("power fraction vector needs one entry per user");
  for (Eigen::Index i = 0; i < cfg.q.size(); ++i)
    if (!(cfg.q[i] >= 0.0 && cfg.q[i] <= 1.0))
      throw std::invalid_argument("power fractions must lie in [0, 1]");
  for (int k = 0; k < p.cells(); ++k)
    if (cfg.q[coord(k, 0)] + cfg.q[coord(k, 1)] > 1.0 + 1e-12)
      throw std::invalid_argument("in-cell power fractions must sum to at most 1");
  if (!cfg.theta.empty() &&
      cfg.theta.size() != static_cast<std::size_t>(p.users()) * p.cells())
    throw std::invalid_argument("phase vector must hold one entry per link");

  Vector out(p.users());
  for (int k = 0; k < p.cells(); ++k) {
    int u1 = o.user_at(k, 0), u2 = o.user_at(k, 1);
    double q1 = cfg.q[coord(k, u1)], q2 = cfg.q[coord(k, u2)];
    double inter[2];
    for (int m = 0; m < 2; ++m) {
      double s = 0.0;
      for (int j = 0; j < p.cells(); ++j) {
        if (j == k) continue;
        s += std::pow(cfg.P, p.alpha(k, m, j)) *
             (cfg.q[coord(j, 0)] + cfg.q[coord(j, 1)]);
      }
      inter[m] = s;
    }
    double sinr1 = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 2; ++m) {
      double g = std::pow(cfg.P, p.alpha(k, m, k));
      sinr1 = std::min(sinr1, g * q1 / (1.0 + g * q2 + inter[m]));
    }
    out[coord(k, u1)] = std::log2(1.0 + sinr1);
    double g2 = std::pow(cfg.P, p.alpha(k, u2, k));
    out[coord(k, u2)] = std::log2(1.0 + g2 * q2 / (1.0 + inter[u2]));
  }
  return out;
}

}  // namespace tincell
