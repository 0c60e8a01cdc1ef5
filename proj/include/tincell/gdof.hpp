#pragma once

#include <vector>

#include "tincell/model.hpp"

namespace tincell {

// ===== Achievable GDoF boxes =====
//
// For a fixed decoding order and power exponent vector, treating inter-cell
// interference as noise yields a box of achievable GDoF tuples; the
// functions below return the box corner. Power exponents are <= 0, with
// -inf silencing a user. Extended-real arithmetic rides on IEEE doubles:
// -inf + finite = -inf, max(-inf, x) = x, and an empty max over interfering
// cells is -inf (single-cell networks see no inter-cell interference).

// Downlink corner: the slot-1 stream is decoded by both receivers of the
// cell under the in-cell slot-2 stream plus inter-cell interference; the
// slot-2 stream sees inter-cell interference only.
//
// The _into variants are the preallocated fast path for sweeps: they check
// dimensions only. The allocating wrappers validate the full scheme.
GdofTuple ibc_gdof_bounds(const NetworkProfile&, const DecodingOrder&,
                          const PowerAllocation& r);
void ibc_gdof_bounds_into(const NetworkProfile&, const DecodingOrder&,
                          const PowerAllocation& r, Vector& out);

// Uplink corner: the base station decodes the slot-2 stream first (under
// the slot-1 stream plus inter-cell interference), then the slot-1 stream.
GdofTuple imac_gdof_bounds(const NetworkProfile&, const DecodingOrder&,
                           const PowerAllocation& rbar);
void imac_gdof_bounds_into(const NetworkProfile&, const DecodingOrder&,
                           const PowerAllocation& rbar, Vector& out);

enum class ExponentKind { beta, gamma };

struct DualExponents {
  ExponentKind kind = ExponentKind::beta;
  Vector values;  // one entry per user
};

// Downlink scheme summary: the downlink corner equals max{0, r + beta}
// entrywise. beta is always finite.
DualExponents beta_exponents(const NetworkProfile&, const DecodingOrder&,
                             const PowerAllocation& r);

// Uplink noise-plus-interference level: the uplink corner equals
// max{0, alpha_direct + rbar - gamma} entrywise. gamma is finite and >= 0.
DualExponents gamma_exponents(const NetworkProfile&, const DecodingOrder&,
                              const PowerAllocation& rbar);

// Downlink-to-uplink power mapping rbar = -alpha_direct + beta. With the
// same decoding order, the mapped uplink scheme achieves at least the
// downlink box. The result is always finite.
PowerAllocation dual_power_to_imac(const NetworkProfile&, const DecodingOrder&,
                                   const PowerAllocation& r);

// Slot ordering required before mapping uplink power back to the downlink:
// in every cell the slot-2 received power level must be at least slot-1's,
// i.e. rbar_2 + alpha_2 >= rbar_1 + alpha_1.
bool uplink_power_order_holds(const NetworkProfile&, const DecodingOrder&,
                              const PowerAllocation& rbar);

struct NormalizedImacScheme {
  DecodingOrder order;
  PowerAllocation power;
  std::vector<bool> swapped;  // per cell: slots exchanged
};

// Enforce the slot ordering: in each violating cell the slots are swapped
// and the user moved into slot 1 is silenced. The achievable box never
// shrinks (per user).
NormalizedImacScheme normalize_imac_power(const NetworkProfile&,
                                          const DecodingOrder&,
                                          const PowerAllocation& rbar);

// Uplink-to-downlink power mapping r = -gamma. Throws std::invalid_argument
// when the slot ordering does not hold (normalize first).
PowerAllocation dual_power_to_ibc(const NetworkProfile&, const DecodingOrder&,
                                  const PowerAllocation& rbar);

// ===== Finite-P rates =====

struct FinitePConfig {
  double P = 0.0;             // transmit SNR scale, > 1
  Vector q;                   // per-user power fractions in [0, 1]
  std::vector<double> theta;  // optional per-link phases (cell, user, from_cell
                              // flattened); carried for completeness, the rate
                              // formulas depend on magnitudes only
};

// Exact downlink rates (bits per channel use) at finite P under two-layer
// superposition with interference treated as noise. The slot-1 stream's
// rate is set by the weaker of the two in-cell receivers. In-cell power
// fractions must sum to at most 1 per cell.
Vector ibc_finite_p_rates(const NetworkProfile&, const DecodingOrder&,
                          const FinitePConfig&);

}  // namespace tincell
