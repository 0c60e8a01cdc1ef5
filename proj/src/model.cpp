#include "tincell/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tincell {

NetworkProfile::NetworkProfile(int cells) : cells_(cells) {
  if (cells < 1) throw std::invalid_argument("cell count must be at least 1");
  alpha_.assign(static_cast<std::size_t>(cells) * 2 * cells, 0.0);
}

double NetworkProfile::max_alpha() const {
  double m = 0.0;
  for (double a : alpha_) m = std::max(m, a);
  return m;
}

bool NetworkProfile::is_normalized() const {
  for (int k = 0; k < cells_; ++k)
    if (direct(k, 0) > direct(k, 1)) return false;
  return true;
}

void NetworkProfile::require_valid() const {
  if (cells_ < 1) throw std::invalid_argument("profile has no cells");
  for (double a : alpha_)
    if (!std::isfinite(a) || a < 0.0)
      throw std::invalid_argument("channel strength levels must be finite and nonnegative");
}

NormalizeResult normalize_profile(const NetworkProfile& p) {
  p.require_valid();
  NormalizeResult res{p, std::vector<bool>(p.cells(), false)};
  for (int k = 0; k < p.cells(); ++k) {
    if (p.direct(k, 0) <= p.direct(k, 1)) continue;
    res.swapped[k] = true;
    for (int i = 0; i < p.cells(); ++i)
      std::swap(res.profile.alpha(k, 0, i), res.profile.alpha(k, 1, i));
  }
  return res;
}

DecodingOrder::DecodingOrder(std::vector<std::array<int, 2>> slots)
    : slots_(std::move(slots)) {
  for (const auto& s : slots_)
    if (!((s[0] == 0 && s[1] == 1) || (s[0] == 1 && s[1] == 0)))
      throw std::invalid_argument("decoding order must assign both users of a cell to distinct slots");
}

DecodingOrder DecodingOrder::identity(int cells) {
  if (cells < 1) throw std::invalid_argument("cell count must be at least 1");
  return DecodingOrder(std::vector<std::array<int, 2>>(cells, {0, 1}));
}

std::vector<DecodingOrder> DecodingOrder::all(int cells) {
  if (cells < 1 || cells > 20)
    throw std::invalid_argument("order enumeration supported for 1..20 cells");
  std::vector<DecodingOrder> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells); ++mask) {
    std::vector<std::array<int, 2>> slots(cells, {0, 1});
    for (int k = 0; k < cells; ++k)
      if ((mask >> k) & 1) slots[k] = {1, 0};
    out.push_back(DecodingOrder(std::move(slots)));
  }
  return out;
}

DecodingOrder DecodingOrder::with_cell_swapped(int cell) const {
  auto slots = slots_;
  std::swap(slots[cell][0], slots[cell][1]);
  return DecodingOrder(std::move(slots));
}

std::string DecodingOrder::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (k) s += '|';
    s += static_cast<char>('1' + slots_[k][0]);
    s += static_cast<char>('1' + slots_[k][1]);
  }
  return s;
}

void require_power_exponents(const NetworkProfile& p, const Vector& r) {
  if (r.size() != p.users())
    throw std::invalid_argument("power exponent vector needs one entry per user");
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    double v = r[i];
    if (v == kNegInf) continue;
    if (!std::isfinite(v) || v > 0.0)
      throw std::invalid_argument("power exponents must be <= 0 or -inf");
  }
}

}  // namespace tincell
