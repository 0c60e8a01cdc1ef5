#include "tincell/region.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tincell {

namespace {

void require_normalized(const NetworkProfile& p) {
  p.require_valid();
  if (!p.is_normalized())
    throw std::invalid_argument(
        "profile must be normalized (weaker direct link listed as user 1); "
        "apply normalize_profile");
}

void dfs_sequences(int cells, int want, std::vector<int>& seq,
                   std::vector<bool>& used, std::vector<CyclicSequence>& out) {
  if (static_cast<int>(seq.size()) == want) {
    out.push_back(seq);
    return;
  }
  // elements after the leading (minimal) one may appear in any order
  for (int c = seq[0] + 1; c < cells; ++c) {
    if (used[c]) continue;
    used[c] = true;
    seq.push_back(c);
    dfs_sequences(cells, want, seq, used, out);
    seq.pop_back();
    used[c] = false;
  }
}

}  // namespace

std::vector<CyclicSequence> enumerate_cyclic_sequences(int cells) {
  if (cells < 1 || cells > 8)
    throw std::invalid_argument("cyclic enumeration supported for 1..8 cells");
  std::vector<CyclicSequence> out;
  std::vector<int> seq;
  std::vector<bool> used(cells, false);
  for (int m = 2; m <= cells; ++m)
    for (int first = 0; first < cells; ++first) {
      used.assign(cells, false);
      used[first] = true;
      seq.assign(1, first);
      dfs_sequences(cells, m, seq, used, out);
    }
  return out;
}

OptimalityCheck check_tin_optimality(const NetworkProfile& p) {
  require_normalized(p);
  const int K = p.cells();
  OptimalityCheck res;
  for (int i = 0; i < K; ++i) {
    // strongest cross link into user u of cell i; empty max counts as 0
    auto in_max = [&](int u) {
      double m = 0.0;
      for (int j = 0; j < K; ++j)
        if (j != i) m = std::max(m, p.alpha(i, u, j));
      return m;
    };
    // strongest cross link BS i creates at other cells' users
    double out_max = 0.0;
    for (int k = 0; k < K; ++k) {
      if (k == i) continue;
      out_max = std::max(out_max, std::max(p.alpha(k, 0, i), p.alpha(k, 1, i)));
    }
    double lhs = p.direct(i, 1);
    double rhs = p.direct(i, 0) + in_max(1);
    if (lhs < rhs)
      res.violations.push_back({TinCondition::direct_dominance, i, -1, lhs, rhs});
    for (int u = 0; u < 2; ++u) {
      lhs = p.direct(i, u);
      rhs = in_max(u) + out_max;
      if (lhs < rhs)
        res.violations.push_back({TinCondition::interference_budget, i, u, lhs, rhs});
    }
  }
  res.optimal = res.violations.empty();
  return res;
}

HalfSpaceRegion tin_optimal_region(const NetworkProfile& p) {
  require_normalized(p);
  const int K = p.cells();
  HalfSpaceRegion reg{K, {}};
  const int dim = reg.dim();

  for (int k = 0; k < K; ++k)
    for (int u = 0; u < 2; ++u) {
      RegionRow row{Vector::Zero(dim), 0.0, RowTag::nonneg, {k}, {u}};
      row.coeffs[coord(k, u)] = -1.0;
      reg.rows.push_back(std::move(row));
    }

  for (int k = 0; k < K; ++k) {
    RegionRow r1{Vector::Zero(dim), p.direct(k, 0), RowTag::percell, {k}, {0}};
    r1.coeffs[coord(k, 0)] = 1.0;
    reg.rows.push_back(std::move(r1));
    RegionRow r2{Vector::Zero(dim), p.direct(k, 1), RowTag::percell, {k}, {1}};
    r2.coeffs[coord(k, 0)] = 1.0;
    r2.coeffs[coord(k, 1)] = 1.0;
    reg.rows.push_back(std::move(r2));
  }

  for (const CyclicSequence& seq : enumerate_cyclic_sequences(K)) {
    const int m = static_cast<int>(seq.size());
    // slot selectors in descending lexicographic order: all-slot-2 first
    for (int sel = (1 << m) - 1; sel >= 0; --sel) {
      RegionRow row{Vector::Zero(dim), 0.0, RowTag::cyclic, seq, {}};
      row.users.resize(m);
      for (int j = 0; j < m; ++j) {
        int k = seq[j];
        int u = (sel >> (m - 1 - j)) & 1;
        row.users[j] = u;
        row.coeffs[coord(k, 0)] += 1.0;
        if (u == 1) row.coeffs[coord(k, 1)] += 1.0;
        int prev = seq[(j + m - 1) % m];
        row.rhs += p.alpha(k, u, k) - p.alpha(k, u, prev);
      }
      reg.rows.push_back(std::move(row));
    }
  }
  return reg;
}

Membership contains(const HalfSpaceRegion& reg, const GdofTuple& d, double tol) {
  if (d.size() != reg.dim())
    throw std::invalid_argument("tuple dimension does not match the region");
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (std::isnan(d[i]))
      throw std::invalid_argument("tuple entries must not be NaN");
  for (std::size_t i = 0; i < reg.rows.size(); ++i) {
    double excess = reg.rows[i].coeffs.dot(d) - reg.rows[i].rhs;
    if (excess > tol) return {false, static_cast<int>(i), excess};
  }
  return {true, -1, 0.0};
}

namespace {

template <int DIM>
std::vector<GdofTuple> extreme_points_impl(const HalfSpaceRegion& reg,
                                           double tol) {
  using Mat = Eigen::Matrix<double, DIM, DIM>;
  using Vec = Eigen::Matrix<double, DIM, 1>;
  const int n = static_cast<int>(reg.rows.size());
  std::vector<GdofTuple> verts;
  std::array<int, DIM> idx;
  for (int i = 0; i < DIM; ++i) idx[i] = i;
  Mat A;
  Vec b;
  GdofTuple x(DIM);
  while (true) {
    for (int i = 0; i < DIM; ++i) {
      for (int c = 0; c < DIM; ++c) A(i, c) = reg.rows[idx[i]].coeffs[c];
      b[i] = reg.rows[idx[i]].rhs;
    }
    Eigen::FullPivLU<Mat> lu(A);
    if (lu.isInvertible()) {
      Vec sol = lu.solve(b);
      double resid = (A * sol - b).template lpNorm<Eigen::Infinity>();
      if (sol.allFinite() &&
          resid <= 1e-8 * (1.0 + b.template lpNorm<Eigen::Infinity>())) {
        for (int c = 0; c < DIM; ++c) x[c] = sol[c];
        if (contains(reg, x, tol).inside) {
          bool dup = false;
          for (const GdofTuple& v : verts)
            if ((v - x).template lpNorm<Eigen::Infinity>() <= 1e-7) {
              dup = true;
              break;
            }
          if (!dup) verts.push_back(x);
        }
      }
    }
    int i = DIM - 1;
    while (i >= 0 && idx[i] == n - DIM + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < DIM; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(verts.begin(), verts.end(), [](const GdofTuple& a, const GdofTuple& b) {
    for (Eigen::Index c = 0; c < a.size(); ++c) {
      if (a[c] < b[c]) return true;
      if (a[c] > b[c]) return false;
    }
    return false;
  });
  return verts;
}

}  // namespace

std::vector<GdofTuple> extreme_points(const HalfSpaceRegion& reg, double tol) {
  switch (reg.dim()) {
    case 2:
      return extreme_points_impl<2>(reg, tol);
    case 4:
      return extreme_points_impl<4>(reg, tol);
    case 6:
      return extreme_points_impl<6>(reg, tol);
    default:
      throw std::invalid_argument("vertex enumeration supported for up to 3 cells");
  }
}

}  // namespace tincell
