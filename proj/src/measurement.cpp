#include <netshare/measurement.hpp>

#include <cmath>

namespace netshare {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw LambdaOutOfRange("sharpness must lie in [0, 1]");
}

}  // namespace

UnsharpMeasurement::UnsharpMeasurement(Matrix obs, double lam)
    : observable(std::move(obs)), lambda(lam) {
  check_lambda(lambda);
  if (!is_dichotomic(observable))
    throw NonDichotomicObservable("unsharp measurement needs a dichotomic observable");
}

std::pair<Matrix, Matrix> projectors(const Matrix& observable) {
  if (!is_dichotomic(observable))
    throw NonDichotomicObservable("projectors: observable is not dichotomic");
  const Index d = observable.rows();
  const Matrix id = Matrix::Identity(d, d);
  if ((observable - id).norm() < kPhysTol || (observable + id).norm() < kPhysTol)
    throw NonDichotomicObservable("projectors: spectrum of +/-I has a single outcome");
  return {(id + observable) / 2.0, (id - observable) / 2.0};
}

KrausPair kraus(const UnsharpMeasurement& meas) {
  const auto [p_plus, p_minus] = projectors(meas.observable);
  const double hi = std::sqrt((1.0 + meas.lambda) / 2.0);
  const double lo = std::sqrt((1.0 - meas.lambda) / 2.0);
  return {hi * p_plus + lo * p_minus, lo * p_plus + hi * p_minus};
}

std::pair<Matrix, Matrix> effects(const UnsharpMeasurement& meas) {
  const auto kp = kraus(meas);
  return {kp.m_plus * kp.m_plus, kp.m_minus * kp.m_minus};
}

Matrix luders_branch(const Matrix& rho, const KrausPair& kp, int outcome) {
  if (outcome != 1 && outcome != -1)
    throw InvalidInputCount("luders_branch: outcome must be +1 or -1");
  const Matrix& k = outcome == 1 ? kp.m_plus : kp.m_minus;
  if (k.rows() != rho.rows() || rho.rows() != rho.cols())
    throw DimensionMismatch("luders_branch: state/Kraus shape mismatch");
  return k * rho * k;  // Kraus operators are Hermitian
}

std::pair<Matrix, double> luders_update(const Matrix& rho, const KrausPair& kp,
                                        int outcome) {
  Matrix branch = luders_branch(rho, kp, outcome);
  const double p = branch.trace().real();
  if (p < kZeroProbabilityTol)
    throw ZeroProbabilityBranch("luders_update: branch probability vanishes");
  return {branch / p, p};
}

Matrix relay_channel(const Matrix& rho, const ObservableSet& settings,
                     double lambda, int site, const std::vector<Index>& site_dims) {
  check_lambda(lambda);
  if (settings.m < 1 || settings.observables.empty())
    throw InvalidInputCount("relay_channel: empty setting family");
  if (site < 0 || site >= static_cast<int>(site_dims.size()))
    throw IndexOutOfRange("relay_channel: site index out of range");
  if (settings.dim != site_dims[site])
    throw DimensionMismatch("relay_channel: settings do not match the site dimension");

  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& a : settings.observables) {
    const auto kp = kraus(UnsharpMeasurement(a, lambda));
    const Matrix k_plus = embed_at(kp.m_plus, site_dims, site);
    const Matrix k_minus = embed_at(kp.m_minus, site_dims, site);
    out += k_plus * rho * k_plus + k_minus * rho * k_minus;
  }
  return out / double(settings.m);
}

double correlator_factor(double lambda, int m) {
  check_lambda(lambda);
  if (m < 2) throw InvalidInputCount("correlator_factor: at least two settings required");
  return (1.0 + (m - 1) * std::sqrt(1.0 - lambda * lambda)) / double(m);
}

}  // namespace netshare
