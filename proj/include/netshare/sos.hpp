#pragma once

#include <array>
#include <random>
#include <utility>

#include <netshare/observables.hpp>

namespace netshare {

// One bilocal configuration: dichotomic observables for the two edge
// parties (a, c), the hub (b, acting on both hub shares), and a state on
// the four factors ordered (edge-A party, hub share 1, hub share 2, edge-C
// party). Factorized-source states are kron(edge_ab, edge_bc).
struct SosConfig {
  Matrix a0, a1;
  Matrix b0, b1;
  Matrix c0, c1;
  Matrix state;
  std::array<Index, 4> dims{};  // {dA, dB1, dB2, dC}
};

// Assembles the four-factor state from per-edge density matrices
// (edge_ab on A ⊗ B1, edge_bc on B2 ⊗ C) and validates every observable.
SosConfig make_sos_config(Matrix a0, Matrix a1, Matrix b0, Matrix b1,
                          Matrix c0, Matrix c1, const Matrix& edge_ab,
                          const Matrix& edge_bc);

// Normalization weights of the certificate's two directions. Per side,
//   omega_1 = sqrt(2 + <{X0, X1}>),  omega_2 = sqrt(2 - <{X0, X1}>)
// on the reduced single-party state; omega_i = omega_i_A * omega_i_C.
struct OmegaValues {
  double w1_a = 0.0, w2_a = 0.0;
  double w1_c = 0.0, w2_c = 0.0;

  double omega1() const { return w1_a * w1_c; }
  double omega2() const { return w2_a * w2_c; }
};

// Computed as reduced-state vector norms and cross-checked against the
// anticommutator form on the squared weights; throws DegenerateDirection
// when any side weight falls below 1e-8 (parallel or antiparallel setting
// pairs make the certificate's normalization singular).
OmegaValues omega(const SosConfig& config);

// Anticommutator route only, no cross-check and no degeneracy guard.
OmegaValues omega_via_anticommutator(const SosConfig& config);

// Expectation of the certificate operator
//   gamma = (sqrt(omega1)/2) L1†L1 + (sqrt(omega2)/2) L2†L2,
//   L_i = (A0 ± A1)/w_i_A ⊗ I_hub ⊗ (C0 ± C1)/w_i_C - I ⊗ B_{i-1} ⊗ I.
// Nonnegative by construction; zero exactly on optimal configurations.
double gamma_expectation(const SosConfig& config);

struct SosEvaluation {
  OmegaValues om;
  double gamma = 0.0;
  double i_corr = 0.0;      // <(A0+A1) B0 (C0+C1)>
  double j_corr = 0.0;      // <(A0-A1) B1 (C0-C1)>
  double s_linear = 0.0;     // I/sqrt(omega1) + J/sqrt(omega2)
  double s_functional = 0.0; // sqrt|I| + sqrt|J|
  double residual = 0.0;     // |gamma - (sqrt(omega1)+sqrt(omega2) - s_linear)|
  double cert_value = 0.0;   // sqrt(omega1) + sqrt(omega2)
};

SosEvaluation evaluate_sos(const SosConfig& config);

// |gamma - (sqrt(omega1) + sqrt(omega2) - S2)| with S2 the linearized
// functional I/sqrt(omega1) + J/sqrt(omega2) taken from the simulated
// correlators. Zero (to rounding) on every factorized-source state; the
// root-form functional sqrt|I| + sqrt|J| coincides with S2 wherever gamma
// vanishes but not elsewhere, so it is not the quantity this identity
// balances.
double sos_identity_check(const SosConfig& config);

// The certificate's difference terms read as vector-norm differences
//   sqrt(||X_i psi||) - sqrt(||B psi||)
// instead of operator differences. Returns the two branch values; on
// normalized product states both collapse to zero regardless of the
// configuration, which is why this reading certifies nothing. Diagnostic
// only.
std::pair<double, double> literal_norm_reading(const SosConfig& config);

// Tilted-observable optimum with maximally entangled edges; gamma vanishes
// and the functional reaches 2 sqrt(2).
SosConfig optimal_sos_config();

// Random dichotomic observables (unit combinations of an anticommuting
// basis: Pauli vectors on the edges, a five-element basis on the hub's two
// qubits) and independent random pure edge states.
SosConfig random_sos_config(std::mt19937_64& rng);

Matrix random_dichotomic(Index dim, std::mt19937_64& rng);
Matrix random_pure_state(Index dim, std::mt19937_64& rng);

}  // namespace netshare
