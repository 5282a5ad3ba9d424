#include <netshare/analytic.hpp>

#include <algorithm>
#include <cmath>

namespace netshare {

namespace {

long long binomial(int n, int k) {
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

long long alpha(int m) {
  if (m < 2) throw InvalidInputCount("alpha: at least two settings required");
  if (m > 32) throw ResourceLimitExceeded("alpha: binomial sum overflows past m = 32");
  long long sum = 0;
  for (int j = 0; j <= m / 2; ++j) sum += binomial(m, j) * (m - 2 * j);
  return sum;
}

double optimal_s(int m) {
  if (m < 2) throw InvalidInputCount("optimal_s: at least two settings required");
  return std::pow(2.0, m - 1) * std::sqrt(double(m));
}

double predicted_s(const Scenario& sc, int k) {
  const auto schedules = effective_schedules(sc);
  int positions = 0;
  for (const auto& schedule : schedules)
    positions = std::max(positions, static_cast<int>(schedule.size()));
  if (k < 1) throw IndexOutOfRange("predicted_s: positions are 1-based");
  if (k > positions) throw ScheduleTooShort("predicted_s: position past the sequence end");

  double product = 1.0;
  for (const auto& schedule : schedules) {
    const int k_edge = std::min<int>(k, static_cast<int>(schedule.size()));
    double factor = schedule[k_edge - 1];
    for (int j = 0; j < k_edge - 1; ++j)
      factor *= correlator_factor(schedule[j], sc.m);
    product *= std::pow(factor, 1.0 / double(sc.n));
  }
  return optimal_s(sc.m) * product;
}

double critical_recursion_step(double lambda_prev, int m) {
  if (!(lambda_prev > 0.0 && lambda_prev <= 1.0))
    throw LambdaOutOfRange("critical_recursion_step: previous critical must lie in (0, 1]");
  if (m < 2) throw InvalidInputCount("critical_recursion_step: at least two settings required");
  return m * lambda_prev /
         (1.0 + (m - 1) * std::sqrt(1.0 - lambda_prev * lambda_prev));
}

double critical_seed(int n, int m, SharingMode mode) {
  if (n < 1) throw InvalidInputCount("critical_seed: at least one edge required");
  const double ratio = double(alpha(m)) / optimal_s(m);
  return mode == SharingMode::asymmetric ? std::pow(ratio, n) : ratio;
}

CriticalSchedule critical_schedule(int n, int m, SharingMode mode) {
  CriticalSchedule out;
  out.n = n;
  out.m = m;
  out.mode = mode;
  double lam = critical_seed(n, m, mode);
  out.criticals.push_back(lam);
  while (lam <= 1.0) {
    lam = critical_recursion_step(lam, m);
    out.criticals.push_back(lam);
  }
  out.max_observers = static_cast<int>(out.criticals.size()) - 1;
  return out;
}

double approx_lower_bound(int n, int m, int k) {
  if (k < 1) throw IndexOutOfRange("approx_lower_bound: positions are 1-based");
  const double seed = critical_seed(n, m, SharingMode::asymmetric);
  const double denom = 1.0 / (seed * seed) - double(k - 1);
  // kAlgebraTol absorbs rounding when 1/seed^2 lands on an integer, e.g.
  // (n, m) = (2, 2) at k = 5 where the denominator is exactly zero.
  if (denom < kAlgebraTol)
    throw BoundDomainExceeded("approx_lower_bound: position past the bound's domain");
  return 1.0 / std::sqrt(denom);
}

double min_edges(int k, int m) {
  if (k < 1) throw IndexOutOfRange("min_edges: observer counts start at 1");
  const double ratio = optimal_s(m) / double(alpha(m));
  return std::log2(double(k)) / (2.0 * std::log2(ratio));
}

}  // namespace netshare
