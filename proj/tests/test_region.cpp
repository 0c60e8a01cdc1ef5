#include <doctest.h>

#include <set>

#include "draws.hpp"
#include "oracles.hpp"
#include "tincell/random.hpp"
#include "tincell/region.hpp"

using namespace tincell;

namespace {

std::vector<double> tuple_of(const GdofTuple& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

TEST_CASE("cyclic sequences: exact small cases") {
  CHECK(enumerate_cyclic_sequences(1).empty());

  auto two = enumerate_cyclic_sequences(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == CyclicSequence{0, 1});

  auto three = enumerate_cyclic_sequences(3);
  REQUIRE(three.size() == 5);
  CHECK(three[0] == CyclicSequence{0, 1});
  CHECK(three[1] == CyclicSequence{0, 2});
  CHECK(three[2] == CyclicSequence{1, 2});
  CHECK(three[3] == CyclicSequence{0, 1, 2});
  CHECK(three[4] == CyclicSequence{0, 2, 1});  // reflections are distinct

  CHECK(enumerate_cyclic_sequences(4).size() == 20);
  CHECK_THROWS_AS(enumerate_cyclic_sequences(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cyclic_sequences(9), std::invalid_argument);
}

TEST_CASE("cyclic sequences match the brute-force oracle") {
  for (int K = 1; K <= 6; ++K) {
    auto got = enumerate_cyclic_sequences(K);
    auto want = oracle::cyclic_sequences(K);
    REQUIRE(got.size() == want.size());
    // same set; both are (length, lex) ordered
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
    // per-length count: C(K, m) * (m-1)!
    for (int m = 2; m <= K; ++m) {
      auto len = static_cast<std::size_t>(
          std::count_if(got.begin(), got.end(),
                        [m](const CyclicSequence& s) {
                          return static_cast<int>(s.size()) == m;
                        }));
      CHECK(len == static_cast<std::size_t>(
                       oracle::binomial(K, m) * oracle::factorial(m - 1)));
    }
  }
}

TEST_CASE("region row count follows the formula") {
  Rng rng(71);
  for (int K = 1; K <= 5; ++K) {
    NetworkProfile p = draws::profile(rng, K);
    HalfSpaceRegion reg = tin_optimal_region(p);
    CHECK(reg.rows.size() == static_cast<std::size_t>(oracle::region_row_count(K)));
  }
  CHECK(oracle::region_row_count(5) == 1468.0);
}

TEST_CASE("two-cell example region: rows in fixed order") {
  NetworkProfile p = draws::example_pair();
  HalfSpaceRegion reg = tin_optimal_region(p);
  REQUIRE(reg.rows.size() == 12);
  REQUIRE(reg.dim() == 4);

  for (int i = 0; i < 4; ++i) {
    CHECK(reg.rows[i].tag == RowTag::nonneg);
    CHECK(reg.rows[i].rhs == 0.0);
    CHECK(reg.rows[i].coeffs[i] == -1.0);
  }
  // d_k1 <= 1 and d_k1 + d_k2 <= 2 per cell
  CHECK(reg.rows[4].tag == RowTag::percell);
  CHECK(tuple_of(reg.rows[4].coeffs) == std::vector<double>{1, 0, 0, 0});
  CHECK(reg.rows[4].rhs == 1.0);
  CHECK(tuple_of(reg.rows[5].coeffs) == std::vector<double>{1, 1, 0, 0});
  CHECK(reg.rows[5].rhs == 2.0);
  CHECK(tuple_of(reg.rows[6].coeffs) == std::vector<double>{0, 0, 1, 0});
  CHECK(tuple_of(reg.rows[7].coeffs) == std::vector<double>{0, 0, 1, 1});

  // cyclic rows, slot selectors descending: (2,2), (2,1), (1,2), (1,1)
  CHECK(reg.rows[8].tag == RowTag::cyclic);
  CHECK(reg.rows[8].cells == std::vector<int>{0, 1});
  CHECK(reg.rows[8].users == std::vector<int>{1, 1});
  CHECK(tuple_of(reg.rows[8].coeffs) == std::vector<double>{1, 1, 1, 1});
  CHECK(reg.rows[8].rhs == 3.0);
  CHECK(reg.rows[9].users == std::vector<int>{1, 0});
  CHECK(tuple_of(reg.rows[9].coeffs) == std::vector<double>{1, 1, 1, 0});
  CHECK(reg.rows[9].rhs == 2.0);
  CHECK(reg.rows[10].users == std::vector<int>{0, 1});
  CHECK(tuple_of(reg.rows[10].coeffs) == std::vector<double>{1, 0, 1, 1});
  CHECK(reg.rows[10].rhs == 2.0);
  CHECK(reg.rows[11].users == std::vector<int>{0, 0});
  CHECK(tuple_of(reg.rows[11].coeffs) == std::vector<double>{1, 0, 1, 0});
  CHECK(reg.rows[11].rhs == 1.0);
}

TEST_CASE("cyclic row data matches its metadata") {
  Rng rng(72);
  for (int t = 0; t < 20; ++t) {
    int K = 2 + rng.below(3);
    NetworkProfile p = draws::profile(rng, K);
    HalfSpaceRegion reg = tin_optimal_region(p);
    for (const RegionRow& row : reg.rows) {
      if (row.tag != RowTag::cyclic) continue;
      const int m = static_cast<int>(row.cells.size());
      REQUIRE(row.users.size() == row.cells.size());
      Vector coeffs = Vector::Zero(reg.dim());
      double rhs = 0.0;
      for (int j = 0; j < m; ++j) {
        int k = row.cells[j], u = row.users[j];
        int prev = row.cells[(j + m - 1) % m];
        coeffs[coord(k, 0)] += 1.0;
        if (u == 1) coeffs[coord(k, 1)] += 1.0;
        rhs += p.alpha(k, u, k) - p.alpha(k, u, prev);
      }
      CHECK(coeffs == row.coeffs);
      CHECK(rhs == doctest::Approx(row.rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("optimality check: the example passes, perturbations name the failure") {
  NetworkProfile p = draws::example_pair();
  OptimalityCheck ok = check_tin_optimality(p);
  CHECK(ok.optimal);
  CHECK(ok.violations.empty());

  SUBCASE("strong cross into the strong user breaks dominance") {
    p.alpha(0, 1, 1) = 1.2;
    OptimalityCheck bad = check_tin_optimality(p);
    REQUIRE_FALSE(bad.optimal);
    REQUIRE(bad.violations.size() == 2);
    CHECK(bad.violations[0].condition == TinCondition::direct_dominance);
    CHECK(bad.violations[0].cell == 0);
    CHECK(bad.violations[0].user == -1);
    CHECK(bad.violations[0].lhs == 2.0);
    CHECK(bad.violations[0].rhs == doctest::Approx(2.2));
    // the same raised level is BS 1's outgoing maximum, so it also blows
    // the other cell's weak-user budget: 1 < 0.5 + 1.2
    CHECK(bad.violations[1].condition == TinCondition::interference_budget);
    CHECK(bad.violations[1].cell == 1);
    CHECK(bad.violations[1].user == 0);
    CHECK(bad.violations[1].lhs == 1.0);
    CHECK(bad.violations[1].rhs == doctest::Approx(1.7));
  }

  SUBCASE("single cells are always optimal") {
    NetworkProfile one(1);
    one.alpha(0, 0, 0) = 0.0;
    one.alpha(0, 1, 0) = 0.0;
    CHECK(check_tin_optimality(one).optimal);
  }

  SUBCASE("non-normalized input is rejected with guidance") {
    NetworkProfile rev(1);
    rev.alpha(0, 0, 0) = 2.0;
    rev.alpha(0, 1, 0) = 1.0;
    CHECK_THROWS_WITH_AS(check_tin_optimality(rev),
                         doctest::Contains("normalize_profile"),
                         std::invalid_argument);
    CHECK_THROWS_AS(tin_optimal_region(rev), std::invalid_argument);
  }
}

TEST_CASE("membership reports the first violated row") {
  NetworkProfile p = draws::example_pair();
  HalfSpaceRegion reg = tin_optimal_region(p);

  GdofTuple in(4);
  in << 0.5, 1.0, 0.5, 1.0;
  CHECK(contains(reg, in).inside);

  GdofTuple corner(4);
  corner << 1.0, 1.0, 0.0, 1.0;  // a vertex: on the boundary counts as inside
  CHECK(contains(reg, corner).inside);

  GdofTuple out(4);
  out << 1.0, 1.0, 1.0, 1.0;
  Membership m = contains(reg, out);
  CHECK_FALSE(m.inside);
  CHECK(m.violated_row == 8);  // the all-slot-2 cyclic row, sum <= 3
  CHECK(m.violation == doctest::Approx(1.0));

  // tolerance boundary, probing just past a vertex
  GdofTuple near = corner;
  near[0] = 1.0 + 0.5e-9;
  CHECK(contains(reg, near).inside);
  near[0] = 1.0 + 1e-6;
  Membership past = contains(reg, near);
  CHECK_FALSE(past.inside);
  CHECK(past.violated_row == 4);  // d_11 <= 1 is the first row exceeded

  GdofTuple wrong(2);
  wrong << 0.0, 0.0;
  CHECK_THROWS_AS(contains(reg, wrong), std::invalid_argument);
  GdofTuple nan = in;
  nan[2] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(contains(reg, nan), std::invalid_argument);
}

TEST_CASE("single-cell region is the staircase over (1, 2)") {
  NetworkProfile p(1);
  p.alpha(0, 0, 0) = 1.0;
  p.alpha(0, 1, 0) = 2.0;
  HalfSpaceRegion reg = tin_optimal_region(p);
  REQUIRE(reg.rows.size() == 4);  // two nonneg, two percell, no cycles

  auto verts = extreme_points(reg);
  REQUIRE(verts.size() == 4);
  CHECK(tuple_of(verts[0]) == std::vector<double>{0, 0});
  CHECK(tuple_of(verts[1]) == std::vector<double>{0, 2});
  CHECK(tuple_of(verts[2]) == std::vector<double>{1, 0});
  CHECK(tuple_of(verts[3]) == std::vector<double>{1, 1});
}

TEST_CASE("two-cell example: the thirteen vertices") {
  NetworkProfile p = draws::example_pair();
  HalfSpaceRegion reg = tin_optimal_region(p);
  auto verts = extreme_points(reg);
  REQUIRE(verts.size() == 13);

  const double expect[13][4] = {
      {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 2},
      {0, 1, 1, 0}, {0, 1, 1, 1}, {0, 2, 0, 0}, {0, 2, 0, 1}, {1, 0, 0, 0},
      {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 0, 1}};
  for (int i = 0; i < 13; ++i)
    for (int c = 0; c < 4; ++c)
      CHECK(verts[i][c] == doctest::Approx(expect[i][c]).epsilon(1e-9));

  // the vertex set is symmetric in the two cells
  std::set<std::vector<double>> seen;
  for (const auto& v : verts) seen.insert(tuple_of(v));
  for (const auto& v : verts) {
    std::vector<double> sw{v[2], v[3], v[0], v[1]};
    CHECK(seen.count(sw) == 1);
  }
}

TEST_CASE("vertices are feasible, distinct, and sufficiently tight") {
  Rng rng(73);
  for (int t = 0; t < 10; ++t) {
    int K = 1 + rng.below(3);
    NetworkProfile p = draws::optimal_profile(rng, K);
    HalfSpaceRegion reg = tin_optimal_region(p);
    auto verts = extreme_points(reg);
    REQUIRE(!verts.empty());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      CHECK(contains(reg, verts[i]).inside);
      int tight = 0;
      for (const RegionRow& row : reg.rows)
        if (std::abs(row.coeffs.dot(verts[i]) - row.rhs) <= 1e-7) ++tight;
      CHECK(tight >= reg.dim());  // a vertex pins down all coordinates
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        CHECK((verts[i] - verts[j]).lpNorm<Eigen::Infinity>() > 1e-7);
    }
  }
}

TEST_CASE("zero strengths collapse the region to the origin") {
  NetworkProfile p(2);  // all levels zero
  auto verts = extreme_points(tin_optimal_region(p));
  REQUIRE(verts.size() == 1);
  CHECK(verts[0].isZero(0.0));
}

TEST_CASE("vertex enumeration rejects more than three cells") {
  Rng rng(74);
  NetworkProfile p = draws::profile(rng, 4);
  CHECK_THROWS_AS(extreme_points(tin_optimal_region(p)),
                  std::invalid_argument);
}

TEST_CASE("raising a direct level only enlarges the region") {
  Rng rng(75);
  for (int t = 0; t < 10; ++t) {
    int K = 2 + rng.below(2);
    NetworkProfile p = draws::optimal_profile(rng, K);
    auto verts = extreme_points(tin_optimal_region(p));
    NetworkProfile up = p;
    up.alpha(1, 1, 1) += 0.3;  // still normalized
    HalfSpaceRegion bigger = tin_optimal_region(up);
    for (const auto& v : verts) CHECK(contains(bigger, v).inside);
  }
}
