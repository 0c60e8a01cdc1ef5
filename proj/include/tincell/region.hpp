#pragma once

#include <vector>

#include "tincell/model.hpp"

namespace tincell {

// Distinct cells, smallest first (the canonical rotation).
using CyclicSequence = std::vector<int>;

// Canonical cyclic sequences over 2..K cells: one representative per
// rotation class, reflections kept as distinct sequences, ordered by length
// and then lexicographically. For each length m there are C(K,m)*(m-1)!
// of them.
std::vector<CyclicSequence> enumerate_cyclic_sequences(int cells);

enum class RowTag { nonneg, percell, cyclic };

// One half-space d : coeffs . d <= rhs of the polyhedral region, with the
// indices that generated it.
struct RegionRow {
  Vector coeffs;
  double rhs = 0.0;
  RowTag tag = RowTag::nonneg;
  std::vector<int> cells;  // nonneg/percell: the single cell; cyclic: the sequence
  std::vector<int> users;  // nonneg/percell: the single user; cyclic: slot choice per cell
};

struct HalfSpaceRegion {
  int cells = 0;
  std::vector<RegionRow> rows;
  int dim() const { return 2 * cells; }
};

// Sufficient conditions on the strength levels under which treating
// inter-cell interference as noise achieves the entire GDoF region.
enum class TinCondition {
  direct_dominance,     // per cell: the stronger direct link exceeds the weaker
                        // one plus the strongest cross link into the strong user
  interference_budget,  // per user: the direct link exceeds the strongest
                        // incoming plus the strongest outgoing cross level
};

struct OptimalityViolation {
  TinCondition condition;
  int cell = 0;
  int user = -1;  // -1 for the per-cell direct_dominance condition
  double lhs = 0.0;
  double rhs = 0.0;
};

struct OptimalityCheck {
  bool optimal = false;
  std::vector<OptimalityViolation> violations;
};

// Check the sufficient conditions. Verdict is "optimal" when all hold;
// otherwise the region below is merely an outer bound candidate and the
// verdict stays unknown. Requires a normalized profile. Empty maxima (a
// single-cell network) count as 0 here.
OptimalityCheck check_tin_optimality(const NetworkProfile&);

// The polyhedral region: nonnegativity rows, per-cell rows
// (d_1 <= alpha_direct_1 and d_1 + d_2 <= alpha_direct_2), and one row per
// canonical cyclic sequence and slot selector. Row order is fixed: nonneg,
// percell, then cyclic by sequence with selectors in descending
// lexicographic order (the all-slot-2 selector first). Requires a
// normalized profile.
HalfSpaceRegion tin_optimal_region(const NetworkProfile&);

struct Membership {
  bool inside = false;
  int violated_row = -1;   // first row exceeded by more than tol
  double violation = 0.0;  // its excess
};

Membership contains(const HalfSpaceRegion&, const GdofTuple&,
                    double tol = kDefaultTol);

// All vertices of the region, sorted lexicographically. Supported for up
// to 3 cells (the basis enumeration grows too fast beyond that).
std::vector<GdofTuple> extreme_points(const HalfSpaceRegion&,
                                      double tol = kDefaultTol);

}  // namespace tincell
