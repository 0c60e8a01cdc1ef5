#pragma once

#include <Eigen/Core>

#include <array>
#include <limits>
#include <string>
#include <vector>

namespace tincell {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Per-user quantities (power exponents, GDoF tuples) over the 2K users of a
// K-cell network are stacked as flat vectors.
using PowerAllocation = Vector;
using GdofTuple = Vector;

// Flat index of user u (0 or 1) of cell k.
inline int coord(int cell, int user) { return 2 * cell + user; }

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kDefaultTol = 1e-9;

// Channel strength exponents of a K-cell network with two users per cell.
// alpha(k, u, i) is the strength level of the link between base station i
// and user u of cell k: the downlink gain from BS i to that user scales as
// P^alpha, and by reciprocity so does the uplink gain from that user to
// BS i. Cells and users are 0-based internally; all text and JSON
// interfaces use 1-based labels.
class NetworkProfile {
 public:
  NetworkProfile() = default;
  explicit NetworkProfile(int cells);

  int cells() const { return cells_; }
  int users() const { return 2 * cells_; }

  double alpha(int cell, int user, int from_cell) const {
    return alpha_[(static_cast<std::size_t>(cell) * 2 + user) * cells_ + from_cell];
  }
  double& alpha(int cell, int user, int from_cell) {
    return alpha_[(static_cast<std::size_t>(cell) * 2 + user) * cells_ + from_cell];
  }
  double direct(int cell, int user) const { return alpha(cell, user, cell); }

  double max_alpha() const;

  // True when the weaker direct link is listed as user 1 in every cell.
  bool is_normalized() const;

  // Throws std::invalid_argument unless every entry is finite and >= 0.
  void require_valid() const;

  bool operator==(const NetworkProfile&) const = default;

 private:
  int cells_ = 0;
  std::vector<double> alpha_;
};

struct NormalizeResult {
  NetworkProfile profile;
  std::vector<bool> swapped;  // per cell: user labels were exchanged
};

// Relabel users so the weaker direct link comes first in every cell. A
// swap exchanges the two users' entire strength rows (direct and cross).
NormalizeResult normalize_profile(const NetworkProfile&);

// Per-cell decoding slots. The slot-1 user's stream is decoded first at
// both downlink receivers of the cell (and treated as the outer
// superposition layer); at the uplink base station the same user is
// decoded last.
class DecodingOrder {
 public:
  DecodingOrder() = default;
  explicit DecodingOrder(std::vector<std::array<int, 2>> slots);

  static DecodingOrder identity(int cells);
  // All 2^cells orders; index bit k set = cell k swapped, identity first.
  static std::vector<DecodingOrder> all(int cells);

  int cells() const { return static_cast<int>(slots_.size()); }
  int user_at(int cell, int slot) const { return slots_[cell][slot]; }
  int slot_of(int cell, int user) const { return slots_[cell][0] == user ? 0 : 1; }
  bool swapped(int cell) const { return slots_[cell][0] == 1; }
  DecodingOrder with_cell_swapped(int cell) const;

  // Users by slot, 1-based, cells separated by '|': e.g. "12|21".
  std::string to_string() const;

  bool operator==(const DecodingOrder&) const = default;

 private:
  std::vector<std::array<int, 2>> slots_;
};

// Throws std::invalid_argument unless r has one entry per user, each entry
// either -inf (silenced) or finite and <= 0.
void require_power_exponents(const NetworkProfile&, const Vector& r);

}  // namespace tincell
