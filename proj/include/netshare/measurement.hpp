#pragma once

#include <utility>
#include <vector>

#include <netshare/observables.hpp>

namespace netshare {

// A dichotomic observable measured at sharpness lambda in [0, 1]. lambda = 1
// is the projective limit, lambda = 0 reads nothing and disturbs nothing.
struct UnsharpMeasurement {
  Matrix observable;
  double lambda;

  UnsharpMeasurement(Matrix obs, double lam);
};

struct KrausPair {
  Matrix m_plus;
  Matrix m_minus;
};

// Spectral projectors (I + A)/2 and (I - A)/2. Requires both outcomes to be
// present: A = +I or A = -I has a one-point spectrum and is rejected.
std::pair<Matrix, Matrix> projectors(const Matrix& observable);

// Square-root (minimally disturbing) Kraus operators
//   M_pm = sqrt((1 pm lambda)/2) P_plus + sqrt((1 mp lambda)/2) P_minus.
// Both are Hermitian and positive; M_plus^2 + M_minus^2 = I.
KrausPair kraus(const UnsharpMeasurement& meas);

// POVM effects E_pm = M_pm^2 = (I pm lambda A)/2.
std::pair<Matrix, Matrix> effects(const UnsharpMeasurement& meas);

// Unnormalized branch M rho M for outcome +1 or -1.
Matrix luders_branch(const Matrix& rho, const KrausPair& kp, int outcome);

// Normalized post-measurement state and the branch probability.
std::pair<Matrix, double> luders_update(const Matrix& rho, const KrausPair& kp,
                                        int outcome);

// Outcome- and setting-averaged measurement channel on one factor of a
// composite state: rho -> (1/m) sum_x sum_pm K rho K with K the embedded
// Kraus operator of setting x at sharpness lambda. Trace preserving.
Matrix relay_channel(const Matrix& rho, const ObservableSet& settings,
                     double lambda, int site, const std::vector<Index>& site_dims);

// Shrink factor the relay channel applies to correlators of observables in
// the same pairwise anticommuting family: (1 + (m-1) sqrt(1-lambda^2)) / m.
double correlator_factor(double lambda, int m);

}  // namespace netshare
