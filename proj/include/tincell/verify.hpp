#pragma once

#include <cstdint>
#include <vector>

#include "tincell/gdof.hpp"
#include "tincell/model.hpp"
#include "tincell/region.hpp"

namespace tincell {

// Power-exponent grid: `steps` evenly spaced values from min_exponent up to
// 0, optionally preceded by -inf.
struct GridSpec {
  double min_exponent = -3.0;
  int steps = 13;
  bool include_neg_infinity = true;

  double spacing() const { return -min_exponent / (steps - 1); }
  std::vector<double> values() const;  // ascending, -inf first when included
  void validate() const;

  // Floor at -1.5 x the largest strength level (power below that is
  // indistinguishable from silence in every bound), 13 steps, -inf included.
  static GridSpec for_profile(const NetworkProfile&);
};

enum class Side { ibc, imac };

// Number of (order, power) combinations a full sweep visits.
double sweep_size(const NetworkProfile&, const GridSpec&);

struct SampledPoint {
  DecodingOrder order;
  PowerAllocation power;
  GdofTuple bounds;
};

// Exhaustive sweep over all decoding orders and grid power vectors,
// materialized. Refuses (std::invalid_argument) when sweep_size exceeds
// `budget`. Enumeration order is fixed: orders as DecodingOrder::all, then
// an odometer over ascending grid values with the last coordinate moving
// fastest.
std::vector<SampledPoint> sample_tin_region(const NetworkProfile&, Side,
                                            const GridSpec&,
                                            double budget = 2e6);

// ===== Duality certificates =====

enum class DualDirection { ibc_to_imac, imac_to_ibc };

// Evidence that the mapped scheme on the opposite side achieves at least
// the input scheme's box. max_deficit <= 0 certifies containment exactly;
// tiny positive values are float noise.
struct DualityReport {
  DualDirection direction = DualDirection::ibc_to_imac;
  DecodingOrder input_order, mapped_order;
  PowerAllocation input_power, mapped_power;
  bool normalization_applied = false;  // uplink input had slots reordered
  DualExponents exponents;             // beta (downlink input) or gamma (uplink)
  GdofTuple input_bounds, mapped_bounds;
  double max_deficit = 0.0;  // max over users of input - mapped
};

DualityReport duality_certificate(const NetworkProfile&, const DecodingOrder&,
                                  const PowerAllocation&, DualDirection);

// ===== Region cross-validation =====

// Grid-samples the downlink TIN region and checks it against the
// polyhedral region from two independent directions: no sampled corner may
// leave the polyhedron, and every polyhedron vertex must be dominated by
// some sampled corner up to eps_cov = grid spacing x 2K.
struct CrossValidationReport {
  GridSpec grid;
  std::uint64_t samples = 0;
  std::uint64_t containment_violations = 0;  // samples outside the polyhedron
  double worst_violation = 0.0;              // largest row excess among them
  SampledPoint worst_offender;               // set when violations > 0
  std::vector<GdofTuple> vertices;
  // Per vertex: smallest observed max-coordinate shortfall against sampled
  // corners; the search stops early once a dominating sample is found
  // (shortfall <= 0).
  std::vector<double> vertex_shortfall;
  double eps_cov = 0.0;

  bool containment_ok() const { return containment_violations == 0; }
  bool coverage_ok() const;
};

// Requires a profile passing check_tin_optimality and at most 3 cells.
CrossValidationReport region_cross_validation(const NetworkProfile&,
                                              const GridSpec&,
                                              double budget = 2e8);

// ===== Gaussian SINR gap desk-check =====

// Two Gaussian point-to-point rate terms log2(1 + S/(1 + N)) built from
// amplitudes: side a with S = |a1|^2, N = |a2|^2, side b likewise.
struct GaussianGapPair {
  double a1 = 0.0, a2 = 0.0, b1 = 0.0, b2 = 0.0;
};

// Rate gap (bits) between side a and side b, valid under the dominance
// conditions |b1/b2| >= |a1| and |b2| >= |a2| >= 1; the gap is then at most
// one bit. Throws std::invalid_argument when the conditions fail.
double gaussian_sinr_gap(const GaussianGapPair&);

// ===== Finite-P convergence =====

struct ConvergenceReport {
  std::vector<double> P;  // ascending, each > 1
  GdofTuple bounds;       // box corner being approached
  Matrix gaps;            // one row per P: |rate / log2(P) - bound| per user
  double threshold = 0.0;
  bool final_below_threshold = false;  // last row entirely <= threshold
};

// Normalized finite-P rates against the GDoF box corner, with power
// fractions q = P^r (silenced users get 0; in-cell fractions are rescaled
// onto the simplex when their sum exceeds 1).
ConvergenceReport finite_p_convergence(const NetworkProfile&,
                                       const DecodingOrder&,
                                       const PowerAllocation& r,
                                       std::vector<double> P_list,
                                       double threshold);

}  // namespace tincell
