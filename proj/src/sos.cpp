#include <netshare/sos.hpp>

#include <cmath>

#include <netshare/measurement.hpp>

namespace netshare {

namespace {

void check_dichotomic(const Matrix& a, Index dim, const char* where) {
  if (a.rows() != dim || a.cols() != dim)
    throw DimensionMismatch(std::string(where) + ": observable dimension mismatch");
  if (!is_dichotomic(a))
    throw NonDichotomicObservable(std::string(where) + ": observable is not dichotomic");
}

std::vector<Index> dims_of(const SosConfig& c) {
  return {c.dims[0], c.dims[1], c.dims[2], c.dims[3]};
}

// L_i as an operator on the full four-factor space.
Matrix branch_operator(const SosConfig& c, const Matrix& edge_a,
                       const Matrix& edge_c, const Matrix& hub, double w_a,
                       double w_c) {
  const Index hub_dim = c.dims[1] * c.dims[2];
  const Matrix x = kron(kron(edge_a / w_a, Matrix::Identity(hub_dim, hub_dim)),
                        edge_c / w_c);
  const Matrix b = kron(kron(Matrix::Identity(c.dims[0], c.dims[0]), hub),
                        Matrix::Identity(c.dims[3], c.dims[3]));
  return x - b;
}

struct GammaParts {
  OmegaValues om;
  double gamma;
};

GammaParts gamma_parts(const SosConfig& c) {
  GammaParts parts;
  parts.om = omega(c);
  const Matrix l1 = branch_operator(c, c.a0 + c.a1, c.c0 + c.c1, c.b0,
                                    parts.om.w1_a, parts.om.w1_c);
  const Matrix l2 = branch_operator(c, c.a0 - c.a1, c.c0 - c.c1, c.b1,
                                    parts.om.w2_a, parts.om.w2_c);
  parts.gamma =
      std::sqrt(parts.om.omega1()) / 2.0 *
          expectation((l1.adjoint() * l1).eval(), c.state) +
      std::sqrt(parts.om.omega2()) / 2.0 *
          expectation((l2.adjoint() * l2).eval(), c.state);
  return parts;
}

}  // namespace

SosConfig make_sos_config(Matrix a0, Matrix a1, Matrix b0, Matrix b1,
                          Matrix c0, Matrix c1, const Matrix& edge_ab,
                          const Matrix& edge_bc) {
  SosConfig c;
  const Index d_a = a0.rows();
  const Index d_c = c0.rows();
  if (d_a < 2 || d_c < 2) throw InvalidDimension("make_sos_config: edge dimension too small");
  if (edge_ab.rows() % d_a != 0 || edge_bc.rows() % d_c != 0)
    throw DimensionMismatch("make_sos_config: edge state does not factor over the edge party");
  const Index d_b1 = edge_ab.rows() / d_a;
  const Index d_b2 = edge_bc.rows() / d_c;
  c.dims = {d_a, d_b1, d_b2, d_c};

  check_dichotomic(a0, d_a, "make_sos_config[a0]");
  check_dichotomic(a1, d_a, "make_sos_config[a1]");
  check_dichotomic(b0, d_b1 * d_b2, "make_sos_config[b0]");
  check_dichotomic(b1, d_b1 * d_b2, "make_sos_config[b1]");
  check_dichotomic(c0, d_c, "make_sos_config[c0]");
  check_dichotomic(c1, d_c, "make_sos_config[c1]");
  if (!is_density_matrix(edge_ab) || !is_density_matrix(edge_bc))
    throw DimensionMismatch("make_sos_config: edge states must be density matrices");

  c.a0 = std::move(a0);
  c.a1 = std::move(a1);
  c.b0 = std::move(b0);
  c.b1 = std::move(b1);
  c.c0 = std::move(c0);
  c.c1 = std::move(c1);
  c.state = kron(edge_ab, edge_bc);
  return c;
}

OmegaValues omega_via_anticommutator(const SosConfig& c) {
  const auto dims = dims_of(c);
  const Matrix rho_a = partial_trace(c.state, dims, {0});
  const Matrix rho_c = partial_trace(c.state, dims, {3});
  const double cross_a = expectation(anticommutator(c.a0, c.a1), rho_a);
  const double cross_c = expectation(anticommutator(c.c0, c.c1), rho_c);
  OmegaValues om;
  om.w1_a = std::sqrt(std::max(0.0, 2.0 + cross_a));
  om.w2_a = std::sqrt(std::max(0.0, 2.0 - cross_a));
  om.w1_c = std::sqrt(std::max(0.0, 2.0 + cross_c));
  om.w2_c = std::sqrt(std::max(0.0, 2.0 - cross_c));
  return om;
}

OmegaValues omega(const SosConfig& c) {
  const auto dims = dims_of(c);
  auto norm_route = [&](const Matrix& x, int site) {
    const Matrix sq = x * x;
    return std::sqrt(std::max(0.0, expectation(embed_at(sq, dims, site), c.state)));
  };
  OmegaValues om;
  om.w1_a = norm_route(c.a0 + c.a1, 0);
  om.w2_a = norm_route(c.a0 - c.a1, 0);
  om.w1_c = norm_route(c.c0 + c.c1, 3);
  om.w2_c = norm_route(c.c0 - c.c1, 3);

  // Cross-check on the squared weights: near a degenerate direction the
  // square root turns rounding noise of ~1e-16 into ~1e-8, so the weights
  // themselves cannot be compared at kPhysTol.
  const OmegaValues ref = omega_via_anticommutator(c);
  const double drift = std::max(
      {std::abs(om.w1_a * om.w1_a - ref.w1_a * ref.w1_a),
       std::abs(om.w2_a * om.w2_a - ref.w2_a * ref.w2_a),
       std::abs(om.w1_c * om.w1_c - ref.w1_c * ref.w1_c),
       std::abs(om.w2_c * om.w2_c - ref.w2_c * ref.w2_c)});
  if (drift > kPhysTol)
    throw ImaginaryResidualExceeded("omega: norm and anticommutator routes disagree");

  for (double w : {om.w1_a, om.w2_a, om.w1_c, om.w2_c})
    if (w < kDegenerateTol)
      throw DegenerateDirection("omega: a certificate direction is singular");
  return om;
}

double gamma_expectation(const SosConfig& c) { return gamma_parts(c).gamma; }

SosEvaluation evaluate_sos(const SosConfig& c) {
  SosEvaluation ev;
  const auto parts = gamma_parts(c);
  ev.om = parts.om;
  ev.gamma = parts.gamma;
  ev.i_corr = expectation(
      kron(kron(c.a0 + c.a1, c.b0), c.c0 + c.c1).eval(), c.state);
  ev.j_corr = expectation(
      kron(kron(c.a0 - c.a1, c.b1), c.c0 - c.c1).eval(), c.state);
  const double sw1 = std::sqrt(ev.om.omega1());
  const double sw2 = std::sqrt(ev.om.omega2());
  ev.s_linear = ev.i_corr / sw1 + ev.j_corr / sw2;
  ev.s_functional = std::sqrt(std::abs(ev.i_corr)) + std::sqrt(std::abs(ev.j_corr));
  ev.cert_value = sw1 + sw2;
  ev.residual = std::abs(ev.gamma - (ev.cert_value - ev.s_linear));
  return ev;
}

double sos_identity_check(const SosConfig& c) { return evaluate_sos(c).residual; }

std::pair<double, double> literal_norm_reading(const SosConfig& c) {
  const auto om = omega(c);
  const auto dims = dims_of(c);
  const Index hub_dim = c.dims[1] * c.dims[2];
  auto branch = [&](const Matrix& edge_a, const Matrix& edge_c,
                    const Matrix& hub, double w_a, double w_c) {
    const Matrix x = kron(kron(edge_a / w_a, Matrix::Identity(hub_dim, hub_dim)),
                          edge_c / w_c);
    const double x_norm =
        std::sqrt(std::max(0.0, expectation((x.adjoint() * x).eval(), c.state)));
    const Matrix b = kron(kron(Matrix::Identity(c.dims[0], c.dims[0]), hub),
                          Matrix::Identity(c.dims[3], c.dims[3]));
    const double b_norm =
        std::sqrt(std::max(0.0, expectation((b.adjoint() * b).eval(), c.state)));
    return std::sqrt(x_norm) - std::sqrt(b_norm);
  };
  return {branch(c.a0 + c.a1, c.c0 + c.c1, c.b0, om.w1_a, om.w1_c),
          branch(c.a0 - c.a1, c.c0 - c.c1, c.b1, om.w2_a, om.w2_c)};
}

SosConfig optimal_sos_config() {
  const auto preset = bilocal_qubit_preset();
  const Matrix edge = max_entangled_state(2);
  return make_sos_config(preset.a0, preset.a1, preset.b0, preset.b1, preset.c0,
                         preset.c1, edge, edge);
}

Matrix random_dichotomic(Index dim, std::mt19937_64& rng) {
  std::vector<Matrix> basis;
  if (dim == 2) {
    basis = {pauli_x(), pauli_y(), pauli_z()};
  } else if (dim == 4) {
    basis = anticommuting_set(5).observables;
  } else {
    throw InvalidDimension("random_dichotomic: supported dimensions are 2 and 4");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd u(basis.size());
  do {
    for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = gauss(rng);
  } while (u.norm() < 1e-6);
  u.normalize();
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < basis.size(); ++i) out += u(Eigen::Index(i)) * basis[i];
  return out;
}

Matrix random_pure_state(Index dim, std::mt19937_64& rng) {
  if (dim < 1) throw InvalidDimension("random_pure_state: dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector psi(dim);
  do {
    for (Index i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
  } while (psi.norm() < 1e-6);
  psi.normalize();
  return psi * psi.adjoint();
}

SosConfig random_sos_config(std::mt19937_64& rng) {
  const Matrix a0 = random_dichotomic(2, rng);
  const Matrix a1 = random_dichotomic(2, rng);
  const Matrix b0 = random_dichotomic(4, rng);
  const Matrix b1 = random_dichotomic(4, rng);
  const Matrix c0 = random_dichotomic(2, rng);
  const Matrix c1 = random_dichotomic(2, rng);
  return make_sos_config(a0, a1, b0, b1, c0, c1, random_pure_state(4, rng),
                         random_pure_state(4, rng));
}

}  // namespace netshare
