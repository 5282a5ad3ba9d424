#pragma once

#include <netshare/network.hpp>

namespace netshare {

// Classical network bound of the m-setting star functional:
//   alpha_m = sum_{j=0}^{floor(m/2)} C(m, j) (m - 2j).
// Exact integer arithmetic; alpha_2 = 2, alpha_3 = 6, alpha_4 = 12.
long long alpha(int m);

// Quantum optimum 2^(m-1) sqrt(m), reached by maximally entangled edges
// with pairwise anticommuting settings.
double optimal_s(int m);

// Closed form for the functional value at (1-based) position k of a
// scenario, matching run_sequence exactly:
//   optimal_s(m) * prod_l [lambda_{l,k_l} prod_{j<k_l} correlator_factor(lambda_{l,j}, m)]^(1/n)
// with k_l the position clamped to edge l's effective schedule length.
double predicted_s(const Scenario& sc, int k);

// Smallest sharpness the next observer needs when the previous one measured
// at their own critical value: m lambda / (1 + (m-1) sqrt(1 - lambda^2)).
double critical_recursion_step(double lambda_prev, int m);

// Seed of the recursion: the sharpness at which position 1 sits exactly on
// the bound. (alpha_m / optimal_s(m))^n when one edge carries the sequence,
// alpha_m / optimal_s(m) when all edges share it equally.
double critical_seed(int n, int m, SharingMode mode);

struct CriticalSchedule {
  int n = 0;
  int m = 0;
  SharingMode mode = SharingMode::symmetric;
  // Strictly increasing; entry k is the minimal sharpness observer k needs
  // for a violation at position k given all predecessors at their own
  // critical values. The first entry above 1 terminates the list.
  std::vector<double> criticals;
  // Number of entries that are feasible sharpness values (<= 1).
  int max_observers = 0;
};

CriticalSchedule critical_schedule(int n, int m, SharingMode mode);

// Closed-form tangent-line chain for asymmetric mode,
//   1 / sqrt(seed^-2 - (k-1)),
// which dominates the exact position-k requirement for every m >= 2: a
// chain value <= 1 certifies that position k is feasible, giving a lower
// bound on the observer count without running the recursion.
double approx_lower_bound(int n, int m, int k);

// Smallest edge count n for which an asymmetric sequence can host k
// observers: log2(k) / (2 log2(optimal_s(m)/alpha_m)), not rounded.
double min_edges(int k, int m);

}  // namespace netshare
