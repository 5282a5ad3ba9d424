#pragma once

#include <vector>

#include <netshare/measurement.hpp>

namespace netshare {

enum class SharingMode { symmetric, asymmetric };

// A star network of n independent edges meeting at a hub, with m settings
// per party and a sequence of unsharp observers on the sequenced edges.
// schedules[l] lists the sharpness of each successive observer on edge l.
// Symmetric mode sequences every edge (schedules must share one length);
// asymmetric mode sequences edge 0 only, all other edges carry the single
// sharp entry [1.0]. final_sharp appends a sharp observer to each sequenced
// edge.
struct Scenario {
  int n = 2;
  int m = 2;
  SharingMode mode = SharingMode::symmetric;
  std::vector<std::vector<double>> schedules;
  bool final_sharp = false;
};

// Every edge measured once, sharply.
Scenario sharp_scenario(int n, int m);

void validate_scenario(const Scenario& sc);

bool edge_is_sequenced(const Scenario& sc, int edge);

// Schedules with the final_sharp observer spliced in. The sequence length K
// is the longest effective schedule; an edge whose schedule is exhausted
// keeps its last observer's statistics and is never relayed further.
std::vector<std::vector<double>> effective_schedules(const Scenario& sc);

struct SequenceReport {
  int k = 0;  // 1-based position in the sequence
  std::vector<double> j_values;
  double s_value = 0.0;
  double bound = 0.0;
  bool violated = false;
};

// tr((edge_obs ⊗ bob_comp) edge_state) for one edge's pair state.
double edge_correlator(const Matrix& edge_state, const Matrix& edge_obs,
                       const Matrix& bob_comp);

// Product over edges of the signed, sharpness-scaled correlator sum
//   prod_l lambda_{l,k} sum_x signs(row, x) <A_x ⊗ b_row>_{rho_l}
// for sign row `row` of the m-setting sign matrix, with the edge states as
// they stand at (1-based) position k.
double j_value(const Scenario& sc, const ObservableSet& set,
               const SignMatrix& signs, const std::vector<Matrix>& edge_states,
               int row, int k);

// Exact sequential simulation in the edge-factorized representation: the
// global state stays a product of per-edge pair states, each relay acts on
// its own edge. One report per sequence position.
std::vector<SequenceReport> run_sequence(const Scenario& sc);

// Independent cross-check carrying the full 2n-party state and applying the
// position-k relays as one joint setting/outcome-averaged channel. Memory
// grows as dim^(2n), so inputs are capped at n <= 3, m <= 3.
std::vector<SequenceReport> full_tensor_check(const Scenario& sc);

}  // namespace netshare
