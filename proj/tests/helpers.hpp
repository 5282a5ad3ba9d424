#pragma once

// Test-only utilities. The oracle implementations are deliberately
// independent of the library code paths they cross-check: plain index
// loops, no shared helpers.

#include <random>
#include <vector>

#include <netshare/network.hpp>

namespace oracle {

using netshare::Complex;
using netshare::Index;
using netshare::Matrix;

inline Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Complex trace_product(const Matrix& a, const Matrix& b) {
  Complex acc(0.0, 0.0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
  return acc;
}

// Bipartite partial trace, keep = 0 for the first factor, 1 for the second.
inline Matrix bipartite_trace(const Matrix& rho, Index da, Index db, int keep) {
  if (keep == 0) {
    Matrix out = Matrix::Zero(da, da);
    for (Index i = 0; i < da; ++i)
      for (Index j = 0; j < da; ++j)
        for (Index t = 0; t < db; ++t) out(i, j) += rho(i * db + t, j * db + t);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j)
      for (Index t = 0; t < da; ++t) out(i, j) += rho(t * db + i, t * db + j);
  return out;
}

}  // namespace oracle

namespace testutil {

using netshare::Complex;
using netshare::Index;
using netshare::Matrix;

inline Matrix random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = Complex(gauss(rng), gauss(rng));
  return out;
}

inline Matrix random_hermitian(Index dim, std::mt19937_64& rng) {
  const Matrix g = random_complex(dim, dim, rng);
  return (g + g.adjoint()) / 2.0;
}

inline Matrix random_density(Index dim, std::mt19937_64& rng) {
  const Matrix g = random_complex(dim, dim, rng);
  const Matrix p = g * g.adjoint();
  return p / p.trace().real();
}

inline Matrix random_unitary(Index dim, std::mt19937_64& rng) {
  const Matrix g = random_complex(dim, dim, rng);
  const Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

inline std::vector<double> random_schedule(int len, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> out(len);
  for (double& v : out) v = uni(rng);
  return out;
}

inline netshare::Scenario random_scenario(int n, int m, netshare::SharingMode mode,
                                          int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  netshare::Scenario sc;
  sc.n = n;
  sc.m = m;
  sc.mode = mode;
  if (mode == netshare::SharingMode::symmetric) {
    const int len = len_dist(rng);
    for (int l = 0; l < n; ++l) sc.schedules.push_back(random_schedule(len, rng));
  } else {
    sc.schedules.assign(n, {1.0});
    sc.schedules[0] = random_schedule(len_dist(rng), rng);
  }
  return sc;
}

}  // namespace testutil
