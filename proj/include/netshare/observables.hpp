#pragma once

#include <vector>

#include <netshare/tensor.hpp>

namespace netshare {

inline Matrix pauli_x() {
  return (Matrix(2, 2) << 0, 1, 1, 0).finished();
}

inline Matrix pauli_y() {
  return (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
}

inline Matrix pauli_z() {
  return (Matrix(2, 2) << 1, 0, 0, -1).finished();
}

// A family of dichotomic observables sharing one local Hilbert space, one
// per measurement setting.
struct ObservableSet {
  int m = 0;
  Index dim = 0;
  std::vector<Matrix> observables;
};

// m pairwise anticommuting dichotomic observables on ceil((m-1)/2) qubits,
// built from the standard gamma-matrix ladder. m = 2 gives {sigma_x,
// sigma_y}; m = 3 the Pauli triple.
ObservableSet anticommuting_set(int m);

// Element-wise transpose. A maximally entangled pair correlates an edge
// observable with the transposed copy on the partner side (tr(A B^T)/d), so
// hub components are assembled from this mirrored family.
ObservableSet transposed(const ObservableSet& set);

// Sign patterns of the random-access-code combinations: 2^(m-1) rows, one
// per length-m sign vector with a fixed leading +1, in ascending binary
// order (+1 before -1).
struct SignMatrix {
  int m = 0;
  Eigen::MatrixXi signs;  // 2^(m-1) x m, entries +1 / -1
};

SignMatrix rac_sign_matrix(int m);

// (sum_x signs[x] A_x) / sqrt(m). With pairwise anticommuting inputs the
// result squares to the identity; anything else fails the dichotomic check.
Matrix bob_component(const Eigen::VectorXi& signs, const ObservableSet& set);

// |Phi_d><Phi_d| with |Phi_d> = sum_i |ii>/sqrt(d), on a d*d-dimensional
// pair space.
Matrix max_entangled_state(Index d);

// The textbook two-setting configuration reaching the quantum optimum of
// the bilocal functional: tilted qubit observables on the edges, product
// Pauli observables on the hub.
struct BilocalPreset {
  Matrix a0, a1;  // first edge
  Matrix b0, b1;  // hub, acting on both hub qubits
  Matrix c0, c1;  // second edge
};

BilocalPreset bilocal_qubit_preset();

}  // namespace netshare
