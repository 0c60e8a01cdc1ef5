#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tincell/model.hpp"
#include "tincell/region.hpp"
#include "tincell/verify.hpp"

namespace tincell {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical profile document: sorted object keys, cross entries sorted by
// source cell, two-space indent, trailing newline. Canonical means
// serialize(parse(serialize(p))) is byte-identical to serialize(p).
std::string serialize_profile(const NetworkProfile&);

// Strict parse of a profile document; throws ParseError naming the offending
// entry. Accepts non-normalized profiles (direct pair out of order).
NetworkProfile parse_profile(const std::string& text);

// FNV-1a 64-bit hash of the canonical document, 16 hex digits.
std::string profile_hash(const NetworkProfile&);

// 1-based users by slot, one [first, second] pair per cell.
Json order_to_json(const DecodingOrder&);

// Power/exponent vector; -inf is encoded as the string "-inf".
Json power_to_json(const Vector&);

Json region_to_json(const HalfSpaceRegion&, const std::string& profile_hash,
                    const OptimalityCheck&);
Json duality_report_to_json(const DualityReport&);
Json cross_validation_report_to_json(const CrossValidationReport&,
                                     const std::string& profile_hash);
Json convergence_report_to_json(const ConvergenceReport&);

}  // namespace tincell
