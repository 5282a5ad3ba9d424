// netshare: simulate and analyze sequential sharing of nonlocality in
// star-network Bell experiments.
//
// Exit codes: 0 success, 2 configuration error, 3 resource cap exceeded,
// 4 invariant failure.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <netshare/analytic.hpp>
#include <netshare/network.hpp>
#include <netshare/sos.hpp>

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvariant = 4;

struct RunConfig {
  std::string command;
  int n = 2;
  int m = 2;
  std::string mode = "symmetric";
  std::vector<std::vector<double>> schedules;
  bool sharp = false;
  bool critical = false;
  bool final_sharp = false;
  bool optimal = false;
  int count = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string output = "-";
  std::string format = "csv";
  std::string sweep_n;
  std::string sweep_m;
};

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

netshare::SharingMode parse_mode(const std::string& mode) {
  if (mode == "symmetric" || mode == "sym") return netshare::SharingMode::symmetric;
  if (mode == "asymmetric" || mode == "asym") return netshare::SharingMode::asymmetric;
  throw std::invalid_argument("mode must be symmetric or asymmetric");
}

std::string mode_name(netshare::SharingMode mode) {
  return mode == netshare::SharingMode::symmetric ? "symmetric" : "asymmetric";
}

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad schedule entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty schedule");
  return out;
}

// "3", "2,4,6" or "2..5" (inclusive).
std::vector<int> parse_int_spec(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("descending range: " + text);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty range: " + text);
  return out;
}

unsigned thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("NETSHARE_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  const long v = std::strtol(env, nullptr, 10);
  if (v < 1) throw std::invalid_argument("NETSHARE_THREADS must be a positive integer");
  return static_cast<unsigned>(std::min<long>(v, 1024));
}

// Runs fn(i) for i in [0, count) on up to thread_cap() workers. Callers
// store results by index, so output order never depends on scheduling.
// The first exception a worker raises is rethrown after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, Fn fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_cap(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& target) {
    if (target != "-") {
      file_.open(target, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file: " + target);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "  " : "") << row[c]
         << std::string(width[c] - row[c].size(), ' ');
    os << '\n';
  }
}

void emit(const RunConfig& cfg, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows,
          const std::vector<std::string>& notes = {}) {
  OutputSink sink(cfg.output);
  std::ostream& os = sink.stream();
  if (cfg.format == "csv") {
    write_csv_row(os, header);
    for (const auto& row : rows) write_csv_row(os, row);
    for (const auto& note : notes) std::cerr << note << '\n';
  } else {
    std::vector<std::vector<std::string>> all{header};
    all.insert(all.end(), rows.begin(), rows.end());
    write_table(os, all);
    for (const auto& note : notes) os << note << '\n';
  }
}

netshare::Scenario scenario_from(const RunConfig& cfg) {
  netshare::Scenario sc;
  sc.n = cfg.n;
  sc.m = cfg.m;
  sc.mode = parse_mode(cfg.mode);
  sc.final_sharp = cfg.final_sharp;

  if (cfg.sharp + cfg.critical + !cfg.schedules.empty() > 1)
    throw std::invalid_argument("choose one of --sharp, --critical, --schedule");

  if (cfg.sharp) {
    sc.schedules.assign(cfg.n, {1.0});
  } else if (cfg.critical) {
    const auto cs = netshare::critical_schedule(cfg.n, cfg.m, sc.mode);
    const std::vector<double> feasible(cs.criticals.begin(),
                                       cs.criticals.begin() + cs.max_observers);
    if (feasible.empty())
      throw std::invalid_argument("critical schedule has no feasible entries");
    if (sc.mode == netshare::SharingMode::symmetric) {
      sc.schedules.assign(cfg.n, feasible);
    } else {
      sc.schedules.assign(cfg.n, {1.0});
      sc.schedules[0] = feasible;
    }
  } else if (!cfg.schedules.empty()) {
    if (sc.mode == netshare::SharingMode::asymmetric) {
      if (cfg.schedules.size() != 1 && static_cast<int>(cfg.schedules.size()) != cfg.n)
        throw std::invalid_argument("asymmetric mode takes one schedule for the sequenced edge");
      sc.schedules.assign(cfg.n, {1.0});
      sc.schedules[0] = cfg.schedules.front();
      for (std::size_t l = 1; l < cfg.schedules.size(); ++l)
        if (cfg.schedules[l] != std::vector<double>{1.0})
          throw std::invalid_argument("asymmetric mode keeps edges past the first at [1.0]");
    } else if (cfg.schedules.size() == 1) {
      sc.schedules.assign(cfg.n, cfg.schedules.front());
    } else if (static_cast<int>(cfg.schedules.size()) == cfg.n) {
      sc.schedules = cfg.schedules;
    } else {
      throw std::invalid_argument("give one schedule or one per edge");
    }
  } else {
    throw std::invalid_argument("simulate needs --sharp, --critical, or --schedule");
  }
  netshare::validate_scenario(sc);
  return sc;
}

int cmd_simulate(const RunConfig& cfg) {
  const auto sc = scenario_from(cfg);
  const auto reports = netshare::run_sequence(sc);

  std::vector<std::string> header{"k"};
  for (std::size_t i = 0; i < reports.front().j_values.size(); ++i)
    header.push_back("j_" + std::to_string(i + 1));
  header.insert(header.end(), {"s_value", "bound", "violated", "predicted_s"});

  std::vector<std::vector<std::string>> rows;
  for (const auto& rep : reports) {
    std::vector<std::string> row{std::to_string(rep.k)};
    for (double j : rep.j_values) row.push_back(fmt9(j));
    row.push_back(fmt9(rep.s_value));
    row.push_back(fmt9(rep.bound));
    row.push_back(rep.violated ? "true" : "false");
    row.push_back(fmt9(netshare::predicted_s(sc, rep.k)));
    rows.push_back(std::move(row));
  }
  emit(cfg, header, rows);
  return 0;
}

int cmd_critical(const RunConfig& cfg) {
  const auto cs = netshare::critical_schedule(cfg.n, cfg.m, parse_mode(cfg.mode));
  std::vector<std::string> header{"k", "lambda_critical", "feasible"};
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < cs.criticals.size(); ++k)
    rows.push_back({std::to_string(k + 1), fmt9(cs.criticals[k]),
                    cs.criticals[k] <= 1.0 ? "true" : "false"});
  emit(cfg, header, rows,
       {"max_observers " + std::to_string(cs.max_observers)});
  return 0;
}

int cmd_max_observers(const RunConfig& cfg) {
  const auto cs = netshare::critical_schedule(cfg.n, cfg.m, parse_mode(cfg.mode));
  emit(cfg, {"n", "m", "mode", "max_observers"},
       {{std::to_string(cfg.n), std::to_string(cfg.m), mode_name(cs.mode),
         std::to_string(cs.max_observers)}});
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto ns = cfg.sweep_n.empty() ? std::vector<int>{cfg.n}
                                      : parse_int_spec(cfg.sweep_n);
  const auto ms = cfg.sweep_m.empty() ? std::vector<int>{cfg.m}
                                      : parse_int_spec(cfg.sweep_m);
  const auto mode = parse_mode(cfg.mode);

  struct Cell {
    int n, m;
    netshare::CriticalSchedule cs;
  };
  std::vector<Cell> cells(ns.size() * ms.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const int n = ns[i / ms.size()];
    const int m = ms[i % ms.size()];
    cells[i] = {n, m, netshare::critical_schedule(n, m, mode)};
  });

  std::vector<std::vector<std::string>> rows;
  for (const auto& cell : cells) {
    const auto& c = cell.cs.criticals;
    const int max = cell.cs.max_observers;
    rows.push_back({std::to_string(cell.n), std::to_string(cell.m),
                    mode_name(mode), std::to_string(max), fmt9(c.front()),
                    max > 0 ? fmt9(c[max - 1]) : "", fmt9(c.back())});
  }
  emit(cfg, {"n", "m", "mode", "max_observers", "critical_first",
             "critical_last_feasible", "critical_next"},
       rows);
  return 0;
}

int cmd_sos_check(const RunConfig& cfg) {
  if (cfg.count < 1) throw std::invalid_argument("sos-check needs --count >= 1");
  const double root8 = 2.0 * std::sqrt(2.0);

  if (cfg.optimal) {
    const auto ev = netshare::evaluate_sos(netshare::optimal_sos_config());
    emit(cfg, {"gamma", "s_functional", "s_linear", "cert_value", "residual"},
         {{fmt9(ev.gamma), fmt9(ev.s_functional), fmt9(ev.s_linear),
           fmt9(ev.cert_value), fmt9(ev.residual)}});
    return ev.gamma < 1e-10 && std::abs(ev.s_functional - root8) < 1e-10
               ? 0
               : kExitInvariant;
  }

  struct Row {
    std::uint64_t config_seed;
    netshare::SosEvaluation ev;
  };
  std::vector<Row> results(static_cast<std::size_t>(cfg.count));
  parallel_for(results.size(), [&](std::size_t i) {
    const std::uint64_t cseed = splitmix64(cfg.seed + i);
    std::mt19937_64 rng(cseed);
    results[i] = {cseed, netshare::evaluate_sos(netshare::random_sos_config(rng))};
  });

  std::vector<std::vector<std::string>> rows;
  double min_gamma = 0.0, max_residual = 0.0, max_cert_excess = -root8,
         max_func_excess = 0.0;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& ev = results[i].ev;
    rows.push_back({std::to_string(i), fmt9(ev.gamma), fmt9(ev.residual),
                    fmt9(ev.cert_value), fmt9(ev.s_functional),
                    fmt9(ev.s_linear), fmt9(ev.i_corr), fmt9(ev.j_corr)});
    if (ev.gamma < min_gamma) {
      min_gamma = ev.gamma;
      worst = i;
    }
    max_residual = std::max(max_residual, ev.residual);
    max_cert_excess = std::max(max_cert_excess, ev.cert_value - root8);
    max_func_excess =
        std::max(max_func_excess, ev.s_functional - ev.cert_value);
  }

  const bool ok = min_gamma >= -1e-12 && max_residual < 1e-10 &&
                  max_cert_excess <= 1e-10 && max_func_excess <= 1e-10;
  std::vector<std::string> notes{
      "configs " + std::to_string(cfg.count) + " seed " + std::to_string(cfg.seed),
      "min_gamma " + fmt9(min_gamma) + (min_gamma >= -1e-12 ? " PASS" : " FAIL") +
          " (threshold -1e-12)",
      "max_identity_residual " + fmt9(max_residual) +
          (max_residual < 1e-10 ? " PASS" : " FAIL") + " (threshold 1e-10)",
      "max_cert_excess_over_2sqrt2 " + fmt9(max_cert_excess) +
          (max_cert_excess <= 1e-10 ? " PASS" : " FAIL"),
      "max_functional_excess_over_cert " + fmt9(max_func_excess) +
          (max_func_excess <= 1e-10 ? " PASS" : " FAIL")};
  if (!ok)
    notes.push_back("worst config index " + std::to_string(worst) + " seed " +
                    std::to_string(results[worst].config_seed));
  emit(cfg, {"index", "gamma", "residual", "cert_value", "s_functional",
             "s_linear", "i_value", "j_value"},
       rows, notes);
  return ok ? 0 : kExitInvariant;
}

struct ReferenceEntry {
  std::map<int, double> criticals;  // 1-based position -> reported value
  std::optional<int> max_observers;
};

// Reported reference values for the scenarios the original study tabulates.
ReferenceEntry reference_for(int n, int m, netshare::SharingMode mode) {
  const bool sym = mode == netshare::SharingMode::symmetric;
  if (n == 2 && m == 2 && sym)
    return {{{1, 1.0 / std::sqrt(2.0)}, {2, 0.8284}, {3, 1.0619}}, 2};
  if (n == 2 && m == 2 && !sym)
    return {{{1, 0.50}, {2, 0.53}, {3, 0.58}, {4, 0.64}, {5, 0.72}, {6, 0.85}, {7, 1.13}},
            6};
  if (n == 3 && m == 2 && sym) return {{{2, 0.8284}, {3, 1.0619}}, 2};
  if (n == 3 && m == 2 && !sym) return {{}, 14};
  if (n == 2 && m == 3 && sym) return {{{1, 0.96}, {2, 1.94}}, 1};
  if (n == 2 && m == 3 && !sym) return {{{1, 0.65}, {2, 0.77}, {3, 1.02}}, 2};
  return {};
}

// Smallest lambda for the next observer that still violates the bound,
// found by bisecting the simulated functional at position k with all
// earlier observers fixed at their (simulated) criticals.
std::optional<double> bisect_critical(int n, int m, netshare::SharingMode mode,
                                      const std::vector<double>& earlier) {
  const int k = static_cast<int>(earlier.size()) + 1;
  auto functional = [&](double lam) {
    std::vector<double> schedule = earlier;
    schedule.push_back(lam);
    netshare::Scenario sc;
    sc.n = n;
    sc.m = m;
    sc.mode = mode;
    if (mode == netshare::SharingMode::symmetric) {
      sc.schedules.assign(n, schedule);
    } else {
      sc.schedules.assign(n, {1.0});
      sc.schedules[0] = schedule;
    }
    return netshare::run_sequence(sc)[k - 1].s_value;
  };

  const double bound = double(netshare::alpha(m));
  if (functional(1.0) < bound - 1e-8) return std::nullopt;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = (lo + hi) / 2.0;
    const double s = functional(mid);
    if (std::abs(s - bound) < 1e-8) return mid;
    (s < bound ? lo : hi) = mid;
  }
  return (lo + hi) / 2.0;
}

int cmd_compare(const RunConfig& cfg) {
  if (cfg.n > 3 || cfg.m > 3)
    throw netshare::ResourceLimitExceeded("compare: simulated column is capped at n <= 3, m <= 3");
  const auto mode = parse_mode(cfg.mode);
  const auto cs = netshare::critical_schedule(cfg.n, cfg.m, mode);
  const auto ref = reference_for(cfg.n, cfg.m, mode);

  std::vector<double> simulated;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < cs.criticals.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    const double analytic = cs.criticals[i];
    std::string sim_cell, delta_sim;
    if (static_cast<int>(simulated.size()) == k - 1) {
      if (const auto sim = bisect_critical(cfg.n, cfg.m, mode, simulated)) {
        simulated.push_back(*sim);
        sim_cell = fmt9(*sim);
        delta_sim = fmt9(std::abs(*sim - analytic));
      }
    }
    std::string ref_cell, delta_ref, flag;
    if (const auto it = ref.criticals.find(k); it != ref.criticals.end()) {
      ref_cell = fmt9(it->second);
      const double delta = std::abs(analytic - it->second);
      delta_ref = fmt9(delta);
      flag = delta > 0.01 ? "DISCREPANCY" : "ok";
    }
    rows.push_back({std::to_string(k), fmt9(analytic), sim_cell, delta_sim,
                    ref_cell, delta_ref, flag});
  }

  std::vector<std::string> notes;
  notes.push_back("scenario n=" + std::to_string(cfg.n) + " m=" +
                  std::to_string(cfg.m) + " mode=" + mode_name(mode) +
                  " bound=" + fmt9(double(netshare::alpha(cfg.m))) +
                  " optimal=" + fmt9(netshare::optimal_s(cfg.m)));
  if (ref.max_observers) {
    const bool match = *ref.max_observers == cs.max_observers;
    notes.push_back("max_observers computed " + std::to_string(cs.max_observers) +
                    " reported " + std::to_string(*ref.max_observers) +
                    (match ? " ok" : " DISCREPANCY"));
  } else {
    notes.push_back("max_observers computed " + std::to_string(cs.max_observers));
  }
  const double ratio = netshare::optimal_s(cfg.m) / double(netshare::alpha(cfg.m));
  notes.push_back("ratio optimal/bound " + fmt9(ratio) +
                  "; large-m limit sqrt(pi/2) " + fmt9(std::sqrt(M_PI / 2.0)) +
                  " (reported plateau 5/4)");
  emit(cfg, {"k", "analytic", "simulated", "delta_sim", "reference",
             "delta_reference", "flag"},
       rows, notes);
  return 0;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "simulate") return cmd_simulate(cfg);
  if (cfg.command == "critical") return cmd_critical(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  if (cfg.command == "max-observers") return cmd_max_observers(cfg);
  if (cfg.command == "sos-check") return cmd_sos_check(cfg);
  if (cfg.command == "compare") return cmd_compare(cfg);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

RunConfig config_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  RunConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  cfg.n = j.value("n", cfg.n);
  cfg.m = j.value("m", cfg.m);
  cfg.mode = j.value("mode", cfg.mode);
  if (j.contains("schedules"))
    cfg.schedules = j["schedules"].get<std::vector<std::vector<double>>>();
  cfg.sharp = j.value("sharp", cfg.sharp);
  cfg.critical = j.value("critical", cfg.critical);
  cfg.final_sharp = j.value("final_sharp", cfg.final_sharp);
  cfg.optimal = j.value("optimal", cfg.optimal);
  cfg.count = j.value("count", cfg.count);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.output = j.value("output", cfg.output);
  cfg.format = j.value("format", cfg.format);
  cfg.sweep_n = j.value("sweep_n", cfg.sweep_n);
  cfg.sweep_m = j.value("sweep_m", cfg.sweep_m);
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"sequential sharing of nonlocality in star-network Bell experiments"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON file mirroring the run configuration");

  RunConfig cfg;
  std::vector<std::string> schedule_args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "output path, - for stdout");
    sub->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"csv", "table"}));
  };
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "edge count")->check(CLI::PositiveNumber);
    sub->add_option("--m", cfg.m, "settings per party")->check(CLI::PositiveNumber);
    sub->add_option("--mode", cfg.mode)
        ->check(CLI::IsMember({"symmetric", "asymmetric", "sym", "asym"}));
  };

  auto* sim = app.add_subcommand("simulate", "run the sequential simulation");
  add_scenario(sim);
  add_common(sim);
  sim->add_option("--schedule", schedule_args,
                  "comma-separated sharpness list; repeat for per-edge schedules");
  sim->add_flag("--sharp", cfg.sharp, "single sharp observer everywhere");
  sim->add_flag("--critical", cfg.critical, "use the feasible critical schedule");
  sim->add_flag("--final-sharp", cfg.final_sharp,
                "append a sharp observer to each sequenced edge");

  auto* crit = app.add_subcommand("critical", "closed-form critical schedule");
  add_scenario(crit);
  add_common(crit);

  auto* sweep = app.add_subcommand("sweep", "critical schedules over an (n, m) grid");
  add_scenario(sweep);
  add_common(sweep);
  sweep->add_option("--sweep-n", cfg.sweep_n, "n values: '3', '2,4', or '2..6'");
  sweep->add_option("--sweep-m", cfg.sweep_m, "m values, same syntax");

  auto* maxobs = app.add_subcommand("max-observers", "observer count supported by a scenario");
  add_scenario(maxobs);
  add_common(maxobs);

  auto* sos = app.add_subcommand("sos-check", "certificate invariants on random configurations");
  add_common(sos);
  sos->add_option("--count", cfg.count, "number of random configurations")
      ->check(CLI::PositiveNumber);
  sos->add_option("--seed", cfg.seed, "base seed for the configuration stream");
  sos->add_flag("--optimal", cfg.optimal, "evaluate the known optimal configuration instead");

  auto* cmp = app.add_subcommand("compare",
                                 "analytic vs simulated criticals vs reported reference values");
  add_scenario(cmp);
  add_common(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (!config_path.empty()) {
    if (app.get_subcommands().size() > 0)
      throw std::invalid_argument("--config replaces the subcommand and its flags");
    return dispatch(config_from_json(config_path));
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitConfig;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  for (const auto& text : schedule_args) cfg.schedules.push_back(parse_schedule(text));
  return dispatch(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const netshare::ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  }
}
