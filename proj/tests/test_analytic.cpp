#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <netshare/analytic.hpp>

#include "helpers.hpp"

using namespace netshare;

namespace {

// Classical bound by brute force: maximize sum_i |row_i . a| over all
// deterministic sign assignments a in {-1, +1}^m.
long long alpha_oracle(int m) {
  const auto sm = rac_sign_matrix(m);
  long long best = 0;
  for (int a = 0; a < (1 << m); ++a) {
    long long total = 0;
    for (Eigen::Index i = 0; i < sm.signs.rows(); ++i) {
      long long dot = 0;
      for (int x = 0; x < m; ++x)
        dot += sm.signs(i, x) * (((a >> x) & 1) ? -1 : 1);
      total += std::llabs(dot);
    }
    best = std::max(best, total);
  }
  return best;
}

// Simulated critical sharpness at the next position via bisection on the
// engine's functional.
double simulated_critical(int n, int m, SharingMode mode,
                          const std::vector<double>& earlier) {
  auto s_at = [&](double lam) {
    std::vector<double> schedule = earlier;
    schedule.push_back(lam);
    Scenario sc;
    sc.n = n;
    sc.m = m;
    sc.mode = mode;
    if (mode == SharingMode::symmetric) {
      sc.schedules.assign(n, schedule);
    } else {
      sc.schedules.assign(n, {1.0});
      sc.schedules[0] = schedule;
    }
    return run_sequence(sc).back().s_value;
  };
  const double bound = double(alpha(m));
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = (lo + hi) / 2.0;
    (s_at(mid) < bound ? lo : hi) = mid;
  }
  return (lo + hi) / 2.0;
}

}  // namespace

TEST_CASE("alpha matches the enumeration oracle and the known values") {
  CHECK(alpha(2) == 2);
  CHECK(alpha(3) == 6);
  CHECK(alpha(4) == 12);
  CHECK(alpha(5) == 30);
  CHECK(alpha(6) == 60);
  CHECK(alpha(7) == 140);
  for (int m = 2; m <= 7; ++m) CHECK(alpha(m) == alpha_oracle(m));
  CHECK_THROWS_AS(alpha(1), InvalidInputCount);
}

TEST_CASE("optimal_s values") {
  CHECK(std::abs(optimal_s(2) - 2.0 * std::sqrt(2.0)) < kAlgebraTol);
  CHECK(std::abs(optimal_s(3) - 4.0 * std::sqrt(3.0)) < kAlgebraTol);
  CHECK(std::abs(optimal_s(4) - 16.0) < kAlgebraTol);
  CHECK(optimal_s(2) > double(alpha(2)));
}

TEST_CASE("optimal-to-bound ratio exceeds one and approaches sqrt(pi/2) by parity") {
  const double limit = std::sqrt(M_PI / 2.0);
  auto ratio = [](int m) { return optimal_s(m) / double(alpha(m)); };
  for (int m = 2; m <= 12; ++m) CHECK(ratio(m) > 1.0);
  for (int m = 2; m <= 10; ++m)
    CHECK(std::abs(ratio(m + 2) - limit) < std::abs(ratio(m) - limit));
}

TEST_CASE("predicted_s equals the simulation on random scenarios") {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = 2 + static_cast<int>(rng() % 3);
    const auto mode = (rng() % 2) ? SharingMode::symmetric : SharingMode::asymmetric;
    const Scenario sc = testutil::random_scenario(n, m, mode, 3, rng);
    const auto reports = run_sequence(sc);
    for (const auto& rep_k : reports)
      CHECK(std::abs(rep_k.s_value - predicted_s(sc, rep_k.k)) < 1e-10);
  }
}

TEST_CASE("predicted_s at the critical seed sits exactly on the bound") {
  for (int n = 1; n <= 10; ++n) {
    for (int m : {2, 3, 4}) {
      for (SharingMode mode : {SharingMode::symmetric, SharingMode::asymmetric}) {
        const double seed = critical_seed(n, m, mode);
        Scenario sc;
        sc.n = n;
        sc.m = m;
        sc.mode = mode;
        if (mode == SharingMode::symmetric) {
          sc.schedules.assign(n, {seed});
        } else {
          sc.schedules.assign(n, {1.0});
          sc.schedules[0] = {seed};
        }
        CHECK(std::abs(predicted_s(sc, 1) - double(alpha(m))) < 1e-10);
      }
    }
  }
}

TEST_CASE("predicted_s validates the position") {
  const Scenario sc = sharp_scenario(2, 2);
  CHECK_THROWS_AS(predicted_s(sc, 0), IndexOutOfRange);
  CHECK_THROWS_AS(predicted_s(sc, 2), ScheduleTooShort);
}

TEST_CASE("critical_recursion_step closed-form values") {
  const double from_sym = critical_recursion_step(1.0 / std::sqrt(2.0), 2);
  CHECK(std::abs(from_sym - 2.0 / (std::sqrt(2.0) + 1.0)) < kAlgebraTol);
  CHECK(std::abs(from_sym - 0.8284271247) < 1e-9);
  CHECK(std::abs(critical_recursion_step(0.5, 2) - 1.0 / (1.0 + std::sqrt(0.75))) <
        kAlgebraTol);
  for (double lam : {0.2, 0.5, 0.9})
    CHECK(critical_recursion_step(lam, 3) > lam);
  CHECK_THROWS_AS(critical_recursion_step(0.0, 2), LambdaOutOfRange);
  CHECK_THROWS_AS(critical_recursion_step(1.2, 2), LambdaOutOfRange);
  CHECK_THROWS_AS(critical_recursion_step(0.5, 1), InvalidInputCount);
}

TEST_CASE("critical_schedule reproduces the known sequences") {
  const auto sym22 = critical_schedule(2, 2, SharingMode::symmetric);
  REQUIRE(sym22.criticals.size() == 3);
  CHECK(std::abs(sym22.criticals[0] - 1.0 / std::sqrt(2.0)) < kAlgebraTol);
  CHECK(std::abs(sym22.criticals[1] - 0.8284271247) < 1e-9);
  CHECK(std::abs(sym22.criticals[2] - 1.0619) < 5e-4);
  CHECK(sym22.max_observers == 2);

  const auto asym22 = critical_schedule(2, 2, SharingMode::asymmetric);
  CHECK(asym22.max_observers == 6);
  CHECK(std::abs(asym22.criticals[0] - 0.5) < kAlgebraTol);
  const double expected[6] = {0.50, 0.53, 0.58, 0.64, 0.72, 0.85};
  for (int k = 0; k < 6; ++k)
    CHECK(std::abs(asym22.criticals[k] - expected[k]) < 0.01);
  CHECK(std::abs(asym22.criticals[6] - 1.13) < 0.01);

  CHECK(critical_schedule(3, 2, SharingMode::asymmetric).max_observers == 14);
  CHECK(critical_schedule(3, 2, SharingMode::symmetric).max_observers == 2);
  CHECK(critical_schedule(2, 3, SharingMode::asymmetric).max_observers == 2);
  CHECK(critical_schedule(2, 3, SharingMode::symmetric).max_observers == 1);
}

TEST_CASE("critical_schedule entries are strictly increasing and feasibility-counted") {
  for (int n : {1, 2, 3, 5}) {
    for (int m : {2, 3, 4}) {
      for (SharingMode mode : {SharingMode::symmetric, SharingMode::asymmetric}) {
        const auto cs = critical_schedule(n, m, mode);
        REQUIRE(!cs.criticals.empty());
        CHECK(std::abs(cs.criticals.front() - critical_seed(n, m, mode)) < kAlgebraTol);
        for (std::size_t k = 1; k < cs.criticals.size(); ++k)
          CHECK(cs.criticals[k] > cs.criticals[k - 1]);
        int feasible = 0;
        for (double lam : cs.criticals) feasible += lam <= 1.0;
        CHECK(cs.max_observers == feasible);
        CHECK(cs.criticals.back() > 1.0);
      }
    }
  }
}

TEST_CASE("symmetric critical schedules do not depend on the edge count") {
  for (int m : {2, 3}) {
    const auto two = critical_schedule(2, m, SharingMode::symmetric);
    const auto seven = critical_schedule(7, m, SharingMode::symmetric);
    REQUIRE(two.criticals.size() == seven.criticals.size());
    for (std::size_t k = 0; k < two.criticals.size(); ++k)
      CHECK(std::abs(two.criticals[k] - seven.criticals[k]) < kAlgebraTol);
  }
}

TEST_CASE("recursion criticals match engine bisection") {
  for (const auto& [n, m, mode] :
       std::vector<std::tuple<int, int, SharingMode>>{
           {2, 2, SharingMode::asymmetric},
           {2, 2, SharingMode::symmetric},
           {2, 3, SharingMode::asymmetric}}) {
    const auto cs = critical_schedule(n, m, mode);
    std::vector<double> earlier;
    const int depth = std::min(cs.max_observers, 3);
    for (int k = 0; k < depth; ++k) {
      const double sim = simulated_critical(n, m, mode, earlier);
      CHECK(std::abs(sim - cs.criticals[k]) < 1e-9);
      earlier.push_back(cs.criticals[k]);
    }
  }
}

TEST_CASE("approx_lower_bound formula, monotonicity, and domain") {
  const double seed = critical_seed(2, 2, SharingMode::asymmetric);
  CHECK(std::abs(approx_lower_bound(2, 2, 1) - seed) < kAlgebraTol);
  CHECK(std::abs(approx_lower_bound(2, 2, 2) - 1.0 / std::sqrt(3.0)) < kAlgebraTol);
  for (int k = 1; k < 4; ++k)
    CHECK(approx_lower_bound(2, 2, k + 1) > approx_lower_bound(2, 2, k));
  CHECK_THROWS_AS(approx_lower_bound(2, 2, 5), BoundDomainExceeded);
  CHECK_THROWS_AS(approx_lower_bound(2, 2, 0), IndexOutOfRange);

  // The approximate chain grows at least as fast as the exact recursion.
  for (int n : {2, 3}) {
    const auto cs = critical_schedule(n, 2, SharingMode::asymmetric);
    for (int k = 1; k <= cs.max_observers; ++k) {
      double approx = 0.0;
      try {
        approx = approx_lower_bound(n, 2, k);
      } catch (const BoundDomainExceeded&) {
        break;
      }
      CHECK(approx >= cs.criticals[k - 1] - kAlgebraTol);
    }
  }
}

TEST_CASE("min_edges closed form and sufficiency") {
  CHECK(std::abs(min_edges(1, 2)) < kAlgebraTol);
  CHECK(std::abs(min_edges(4, 2) - 2.0) < kAlgebraTol);
  CHECK(std::abs(min_edges(8, 2) - 3.0) < kAlgebraTol);
  CHECK_THROWS_AS(min_edges(0, 2), IndexOutOfRange);

  for (int m : {2, 3}) {
    for (int k : {2, 4, 8}) {
      const int n = static_cast<int>(std::ceil(min_edges(k, m)));
      if (n < 1) continue;
      CHECK(critical_schedule(n, m, SharingMode::asymmetric).max_observers >= k);
    }
  }
}
