#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "floer/errors.hpp"
#include "floer/h1.hpp"
#include "support.hpp"

using namespace floer;

namespace {

long long leibniz(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long det = 0;
  do {
    long long term = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= m[i][perm[i]];
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// gcd of all k x k minors.
long long determinantal_divisor(const IntMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  long long g = 0;
  std::vector<bool> rows(n, false), cols(n, false);
  std::fill(rows.begin(), rows.begin() + static_cast<long>(k), true);
  do {
    std::fill(cols.begin(), cols.end(), false);
    std::fill(cols.begin(), cols.begin() + static_cast<long>(k), true);
    do {
      IntMatrix sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i]) continue;
        std::vector<long long> r;
        for (std::size_t j = 0; j < n; ++j) {
          if (cols[j]) r.push_back(m[i][j]);
        }
        sub.push_back(r);
      }
      g = std::gcd(g, std::abs(leibniz(sub)));
    } while (std::prev_permutation(cols.begin(), cols.end()));
  } while (std::prev_permutation(rows.begin(), rows.end()));
  return g;
}

/// Invariant factors from determinantal divisors d_k / d_{k-1}.
AbelianGroup oracle_group(const IntMatrix& m) {
  AbelianGroup g;
  long long prev = 1;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    const long long dk = determinantal_divisor(m, k);
    if (dk == 0) {
      g.free_rank = static_cast<int>(m.size() - k + 1);
      break;
    }
    const long long factor = dk / prev;
    if (factor >= 2) g.invariant_factors.push_back(factor);
    prev = dk;
  }
  return g;
}

}  // namespace

TEST_CASE("basic presentations") {
  CHECK(h1_group({{2}}) == AbelianGroup{{2}, 0});
  CHECK(h1_group({{2}}).to_string() == "Z/2");
  CHECK(h1_group({{1}}) == AbelianGroup{{}, 0});
  CHECK(h1_group({{1}}).to_string() == "0");
  CHECK(h1_group({{0}}) == AbelianGroup{{}, 1});
  CHECK(h1_group({{6, 1}, {0, 2}}) == AbelianGroup{{12}, 0});
  CHECK(h1_group({{2, 0}, {0, 4}}) == AbelianGroup{{2, 4}, 0});
  CHECK(h1_group({{2, 0}, {0, 4}}).to_string() == "Z/2 + Z/4");
  CHECK(h1_group({{0, 0}, {0, 3}}).to_string() == "Z + Z/3");
  CHECK(h1_group({}) == AbelianGroup{});
  for (long long p = 2; p <= 20; ++p) CHECK(h1_group({{p}}) == AbelianGroup{{p}, 0});
  CHECK(h1_group({{-5}}) == AbelianGroup{{5}, 0});
}

TEST_CASE("stabilization") {
  CHECK(stabilize({{2}}) == IntMatrix{{2, 0}, {0, 1}});
  CHECK(stabilize({}) == IntMatrix{{1}});
  CHECK_THROWS_AS(stabilize({{1, 2}}), SchemaError);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_matrix(rng, testing::uniform(rng, 1, 4), 6);
    CHECK(h1_group(stabilize(m)) == h1_group(m));
    CHECK(h1_group(stabilize(stabilize(m))) == h1_group(m));
  }
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = testing::random_matrix(rng, testing::uniform(rng, 1, 4), trial < 150 ? 3 : 12);
    const auto g = h1_group(m);
    CHECK(g == oracle_group(m));
    CHECK(determinant(m) == leibniz(m));
    CHECK((determinant(m) == 0) == (g.free_rank > 0));
    if (g.is_finite()) CHECK(g.order() == std::abs(determinant(m)));
    for (std::size_t i = 1; i < g.invariant_factors.size(); ++i) {
      CHECK(g.invariant_factors[i] % g.invariant_factors[i - 1] == 0);
    }
  }
}

TEST_CASE("invariance under unimodular row and column operations") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform(rng, 2, 4);
    auto m = testing::random_matrix(rng, n, 5);
    const auto g = h1_group(m);
    for (int step = 0; step < 10; ++step) {
      const auto i = static_cast<std::size_t>(testing::uniform(rng, 0, n - 1));
      const auto j = static_cast<std::size_t>(testing::uniform(rng, 0, n - 1));
      if (i == j) continue;
      const int k = testing::uniform(rng, -2, 2);
      if (step % 2) {
        for (std::size_t c = 0; c < m.size(); ++c) m[i][c] += k * m[j][c];
      } else {
        for (auto& row : m) row[i] += k * row[j];
      }
    }
    CHECK(h1_group(m) == g);
  }
}

TEST_CASE("dimension checks against Floer data") {
  const auto lens = hf_dimension_check({{5}}, {1, 1, 1, 1, 1});
  CHECK(lens.equality);
  CHECK(lens.all_classes_minimal);
  CHECK(lens.consistent);
  const auto p1 = hf_dimension_check({{1}}, {3});
  CHECK(p1.bound_holds);
  CHECK_FALSE(p1.equality);
  CHECK(p1.consistent);
  const auto p3 = hf_dimension_check({{3}}, {3, 1, 1});
  CHECK(p3.total_dimension == 5);
  CHECK(p3.order == 3);
  CHECK(p3.consistent);
  CHECK_FALSE(hf_dimension_check({{5}}, {1, 1}).consistent);
  CHECK_THROWS_AS(hf_dimension_check({{0}}, {1}), DomainError);
}
