#include <netshare/observables.hpp>

#include <cmath>

namespace netshare {

namespace {

Matrix chain_kron(const std::vector<Matrix>& factors) {
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

}  // namespace

ObservableSet anticommuting_set(int m) {
  if (m < 2) throw InvalidInputCount("anticommuting_set: at least two settings required");
  const int qubits = m / 2;  // ceil((m-1)/2)
  const Index dim = Index(1) << qubits;

  // Gamma ladder: sigma_z^(k) ⊗ sigma_x ⊗ I..., sigma_z^(k) ⊗ sigma_y ⊗ I...,
  // closed by sigma_z on every qubit. 2*qubits + 1 generators in total.
  std::vector<Matrix> generators;
  for (int q = 0; q < qubits; ++q) {
    std::vector<Matrix> x_factors, y_factors;
    for (int j = 0; j < q; ++j) {
      x_factors.push_back(pauli_z());
      y_factors.push_back(pauli_z());
    }
    x_factors.push_back(pauli_x());
    y_factors.push_back(pauli_y());
    for (int j = q + 1; j < qubits; ++j) {
      x_factors.push_back(Matrix::Identity(2, 2));
      y_factors.push_back(Matrix::Identity(2, 2));
    }
    generators.push_back(chain_kron(x_factors));
    generators.push_back(chain_kron(y_factors));
  }
  generators.push_back(chain_kron(std::vector<Matrix>(qubits, pauli_z())));

  ObservableSet set;
  set.m = m;
  set.dim = dim;
  set.observables.assign(generators.begin(), generators.begin() + m);
  return set;
}

ObservableSet transposed(const ObservableSet& set) {
  ObservableSet out;
  out.m = set.m;
  out.dim = set.dim;
  out.observables.reserve(set.observables.size());
  for (const Matrix& a : set.observables) out.observables.push_back(a.transpose());
  return out;
}

SignMatrix rac_sign_matrix(int m) {
  if (m < 2) throw InvalidInputCount("rac_sign_matrix: at least two settings required");
  if (m > 30) throw ResourceLimitExceeded("rac_sign_matrix: 2^(m-1) rows would not fit");
  const int rows = 1 << (m - 1);
  SignMatrix sm;
  sm.m = m;
  sm.signs.resize(rows, m);
  for (int i = 0; i < rows; ++i) {
    sm.signs(i, 0) = 1;
    for (int x = 1; x < m; ++x) {
      const int bit = (i >> (m - 1 - x)) & 1;
      sm.signs(i, x) = bit ? -1 : 1;
    }
  }
  return sm;
}

Matrix bob_component(const Eigen::VectorXi& signs, const ObservableSet& set) {
  if (signs.size() != set.m || set.m != static_cast<int>(set.observables.size()))
    throw DimensionMismatch("bob_component: sign vector length must equal the setting count");
  Matrix acc = Matrix::Zero(set.dim, set.dim);
  for (int x = 0; x < set.m; ++x) {
    if (signs(x) != 1 && signs(x) != -1)
      throw InvalidInputCount("bob_component: signs must be +1 or -1");
    acc += double(signs(x)) * set.observables[x];
  }
  acc /= std::sqrt(double(set.m));
  if (!is_dichotomic(acc))
    throw NonUnitalComponent("bob_component: combination does not square to the identity");
  return acc;
}

Matrix max_entangled_state(Index d) {
  if (d < 2) throw InvalidDimension("max_entangled_state: local dimension must be at least 2");
  Vector psi = Vector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(double(d));
  for (Index i = 0; i < d; ++i) psi(i * d + i) = amp;
  return psi * psi.adjoint();
}

BilocalPreset bilocal_qubit_preset() {
  const double s = 1.0 / std::sqrt(2.0);
  BilocalPreset p;
  p.a0 = s * (pauli_z() + pauli_x());
  p.a1 = s * (pauli_z() - pauli_x());
  p.c0 = p.a0;
  p.c1 = p.a1;
  p.b0 = kron(pauli_z(), pauli_z());
  p.b1 = kron(pauli_x(), pauli_x());
  return p;
}

}  // namespace netshare
