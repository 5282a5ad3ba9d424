#include <netshare/network.hpp>

#include <algorithm>
#include <cmath>

#include <netshare/analytic.hpp>

namespace netshare {

namespace {

double lambda_at(const std::vector<double>& schedule, int k) {
  const int last = static_cast<int>(schedule.size()) - 1;
  return schedule[std::min(k - 1, last)];
}

std::vector<Matrix> hub_components(const ObservableSet& set, const SignMatrix& signs) {
  const ObservableSet mirrored = transposed(set);
  std::vector<Matrix> comps;
  comps.reserve(signs.signs.rows());
  for (Eigen::Index i = 0; i < signs.signs.rows(); ++i)
    comps.push_back(bob_component(signs.signs.row(i).transpose(), mirrored));
  return comps;
}

}  // namespace

Scenario sharp_scenario(int n, int m) {
  Scenario sc;
  sc.n = n;
  sc.m = m;
  sc.mode = SharingMode::symmetric;
  sc.schedules.assign(std::max(n, 0), {1.0});
  return sc;
}

void validate_scenario(const Scenario& sc) {
  if (sc.n < 1) throw InvalidScenario("scenario: at least one edge required");
  if (sc.m < 2) throw InvalidScenario("scenario: at least two settings required");
  if (static_cast<int>(sc.schedules.size()) != sc.n)
    throw InvalidScenario("scenario: one schedule per edge required");
  for (const auto& schedule : sc.schedules) {
    if (schedule.empty()) throw EmptySchedule("scenario: empty schedule");
    for (double lam : schedule)
      if (!(lam >= 0.0 && lam <= 1.0))
        throw LambdaOutOfRange("scenario: sharpness outside [0, 1]");
  }
  if (sc.mode == SharingMode::symmetric) {
    const std::size_t len = sc.schedules.front().size();
    for (const auto& schedule : sc.schedules)
      if (schedule.size() != len)
        throw InvalidScenario("scenario: symmetric mode needs equal schedule lengths");
  } else {
    for (int l = 1; l < sc.n; ++l)
      if (sc.schedules[l] != std::vector<double>{1.0})
        throw InvalidScenario("scenario: asymmetric mode keeps edges past the first at [1.0]");
  }
}

bool edge_is_sequenced(const Scenario& sc, int edge) {
  if (edge < 0 || edge >= sc.n) throw IndexOutOfRange("edge index out of range");
  return sc.mode == SharingMode::symmetric || edge == 0;
}

std::vector<std::vector<double>> effective_schedules(const Scenario& sc) {
  validate_scenario(sc);
  auto schedules = sc.schedules;
  if (sc.final_sharp)
    for (int l = 0; l < sc.n; ++l)
      if (edge_is_sequenced(sc, l)) schedules[l].push_back(1.0);
  return schedules;
}

double edge_correlator(const Matrix& edge_state, const Matrix& edge_obs,
                       const Matrix& bob_comp) {
  return expectation(kron(edge_obs, bob_comp), edge_state);
}

double j_value(const Scenario& sc, const ObservableSet& set,
               const SignMatrix& signs, const std::vector<Matrix>& edge_states,
               int row, int k) {
  if (row < 0 || row >= signs.signs.rows())
    throw IndexOutOfRange("j_value: sign row out of range");
  if (static_cast<int>(edge_states.size()) != sc.n)
    throw DimensionMismatch("j_value: one edge state per edge required");
  const auto schedules = effective_schedules(sc);
  int max_len = 0;
  for (const auto& schedule : schedules)
    max_len = std::max(max_len, static_cast<int>(schedule.size()));
  if (k < 1 || k > max_len) throw IndexOutOfRange("j_value: position out of range");

  const Matrix bob = bob_component(signs.signs.row(row).transpose(), transposed(set));
  double product = 1.0;
  for (int l = 0; l < sc.n; ++l) {
    double sum = 0.0;
    for (int x = 0; x < sc.m; ++x)
      sum += signs.signs(row, x) *
             edge_correlator(edge_states[l], set.observables[x], bob);
    product *= lambda_at(schedules[l], k) * sum;
  }
  return product;
}

std::vector<SequenceReport> run_sequence(const Scenario& sc) {
  const auto schedules = effective_schedules(sc);
  const auto set = anticommuting_set(sc.m);
  const auto signs = rac_sign_matrix(sc.m);
  const double bound = double(alpha(sc.m));

  int positions = 0;
  for (const auto& schedule : schedules)
    positions = std::max(positions, static_cast<int>(schedule.size()));

  std::vector<Matrix> states(sc.n, max_entangled_state(set.dim));
  const std::vector<Index> pair_dims{set.dim, set.dim};

  std::vector<SequenceReport> reports;
  reports.reserve(positions);
  for (int k = 1; k <= positions; ++k) {
    SequenceReport rep;
    rep.k = k;
    rep.bound = bound;
    for (Eigen::Index i = 0; i < signs.signs.rows(); ++i)
      rep.j_values.push_back(j_value(sc, set, signs, states, int(i), k));
    rep.s_value = 0.0;
    for (double j : rep.j_values)
      rep.s_value += std::pow(std::abs(j), 1.0 / double(sc.n));
    rep.violated = rep.s_value > bound + kAlgebraTol;
    reports.push_back(std::move(rep));

    for (int l = 0; l < sc.n; ++l)
      if (k < static_cast<int>(schedules[l].size()))
        states[l] = relay_channel(states[l], set, schedules[l][k - 1], 0, pair_dims);
  }
  return reports;
}

std::vector<SequenceReport> full_tensor_check(const Scenario& sc) {
  validate_scenario(sc);
  if (sc.n > 3 || sc.m > 3)
    throw ResourceLimitExceeded("full_tensor_check: capped at n <= 3, m <= 3");
  const auto schedules = effective_schedules(sc);
  const auto set = anticommuting_set(sc.m);
  const auto signs = rac_sign_matrix(sc.m);
  const auto bobs = hub_components(set, signs);
  const double bound = double(alpha(sc.m));
  const Index d = set.dim;

  int positions = 0;
  for (const auto& schedule : schedules)
    positions = std::max(positions, static_cast<int>(schedule.size()));

  // Site order: edge-0 outer party, edge-0 hub share, edge-1 outer party, ...
  std::vector<Index> site_dims(2 * sc.n, d);
  Matrix rho = max_entangled_state(d);
  for (int l = 1; l < sc.n; ++l) rho = kron(rho, max_entangled_state(d)).eval();

  std::vector<SequenceReport> reports;
  reports.reserve(positions);
  for (int k = 1; k <= positions; ++k) {
    SequenceReport rep;
    rep.k = k;
    rep.bound = bound;
    for (std::size_t i = 0; i < bobs.size(); ++i) {
      Matrix op = Matrix::Identity(1, 1);
      double scale = 1.0;
      for (int l = 0; l < sc.n; ++l) {
        Matrix edge_sum = Matrix::Zero(d, d);
        for (int x = 0; x < sc.m; ++x)
          edge_sum += double(signs.signs(int(i), x)) * set.observables[x];
        op = kron(op, kron(edge_sum, bobs[i])).eval();
        scale *= lambda_at(schedules[l], k);
      }
      rep.j_values.push_back(scale * expectation(op, rho));
    }
    rep.s_value = 0.0;
    for (double j : rep.j_values)
      rep.s_value += std::pow(std::abs(j), 1.0 / double(sc.n));
    rep.violated = rep.s_value > bound + kAlgebraTol;
    reports.push_back(std::move(rep));

    std::vector<int> relayed;
    for (int l = 0; l < sc.n; ++l)
      if (k < static_cast<int>(schedules[l].size())) relayed.push_back(l);
    if (relayed.empty()) continue;

    // Joint setting/outcome-averaged channel over all relayed edges at once.
    const int edges = static_cast<int>(relayed.size());
    int setting_combos = 1;
    for (int e = 0; e < edges; ++e) setting_combos *= sc.m;
    Matrix next = Matrix::Zero(rho.rows(), rho.cols());
    for (int combo = 0; combo < setting_combos; ++combo) {
      std::vector<KrausPair> pairs;
      int rest = combo;
      for (int e = 0; e < edges; ++e) {
        const int x = rest % sc.m;
        rest /= sc.m;
        pairs.push_back(kraus(UnsharpMeasurement(set.observables[x],
                                                 schedules[relayed[e]][k - 1])));
      }
      for (int outcomes = 0; outcomes < (1 << edges); ++outcomes) {
        Matrix joint = Matrix::Identity(rho.rows(), rho.cols());
        for (int e = 0; e < edges; ++e) {
          const Matrix& f = (outcomes >> e) & 1 ? pairs[e].m_minus : pairs[e].m_plus;
          joint = (joint * embed_at(f, site_dims, 2 * relayed[e])).eval();
        }
        next += joint * rho * joint;
      }
    }
    rho = next / double(setting_combos);
  }
  return reports;
}

}  // namespace netshare
