// Copyright 2026 The delaynet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// delaynet command-line front end.
//
// Exit codes: 0 success, 2 bad arguments, 3 input validation,
// 4 numerical failure (including reproduce pipelines whose checks fail).

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "delaynet/delaynet.hpp"
#include "delaynet/io.hpp"

namespace {

using namespace delaynet;
using io::json;

bool g_quiet = false;

void info(const std::string& line) {
  if (!g_quiet) std::cout << line << "\n";
}

Vector parse_x0(const std::string& text, int n) {
  const std::string prefix = "uniform-seed:";
  Vector x0(n);
  if (text.rfind(prefix, 0) == 0) {
    const auto seed = static_cast<std::uint64_t>(std::stoull(text.substr(prefix.size())));
    rng::Stream st(seed, 0);
    for (int i = 0; i < n; ++i) x0(i) = st.uniform(-1.0, 1.0);
    return x0;
  }
  std::vector<double> vals;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      vals.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw ValidationError("--x0: cannot parse '" + token + "' as a real number");
    }
  }
  if (static_cast<int>(vals.size()) != n) {
    throw ValidationError("--x0: expected " + std::to_string(n) + " values, got " +
                          std::to_string(vals.size()));
  }
  for (int i = 0; i < n; ++i) x0(i) = vals[static_cast<std::size_t>(i)];
  return x0;
}

MixtureSpec build_spec(int n, double p, double sigma, const std::string& mode,
                       const std::vector<double>& proportions, std::uint64_t seed) {
  MixtureSpec spec;
  spec.n = n;
  spec.p_connect = p;
  spec.sigma = sigma;
  spec.seed = seed;
  if (mode == "random") {
    spec.kind = MixtureKind::kRandom;
  } else if (mode == "complex") {
    spec.kind = MixtureKind::kComplex;
    if (proportions.size() != 5) {
      throw ValidationError("--proportions: complex mode needs five values a,b,c,d,e");
    }
    for (int k = 0; k < 5; ++k) spec.proportions[k] = proportions[static_cast<std::size_t>(k)];
  } else {
    throw ValidationError("--mode must be 'random' or 'complex'");
  }
  spec.validate();
  return spec;
}

json delay_report_to_json(const DelayReport& rep) {
  json per = json::array();
  for (const auto& [eig, tau] : rep.per_eig_boundary) {
    per.push_back({{"re", eig.real()}, {"im", eig.imag()}, {"tau", tau}});
  }
  json doc{{"tau_star", rep.tau_star},
           {"r0", rep.r0},
           {"accel_possible", rep.accel_possible},
           {"per_eig_boundary", std::move(per)}};
  doc["tau_tilde"] = rep.tau_tilde ? json(*rep.tau_tilde) : json(nullptr);
  if (!rep.rate_curve.empty()) {
    json curve = json::array();
    for (const auto& [tau, r] : rep.rate_curve) curve.push_back({{"tau_c", tau}, {"rate", r}});
    doc["rate_curve"] = std::move(curve);
  }
  return doc;
}

void write_trajectory_csv(const std::string& path, const std::vector<double>& times,
                          const std::vector<Vector>& states, const std::string& index_name) {
  const int n = static_cast<int>(states.front().size());
  std::vector<std::string> header{index_name};
  for (int i = 0; i < n; ++i) header.push_back("x_" + std::to_string(i));
  io::CsvWriter csv(header);
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::vector<double> row{times.empty() ? static_cast<double>(k) : times[k]};
    for (int i = 0; i < n; ++i) row.push_back(states[k](i));
    csv.row(row);
  }
  csv.save(path);
}

// ---------------------------------------------------------------------------
// subcommand payloads

struct GenerateArgs {
  int n = 100;
  double p = 0.5;
  double sigma = 1.0;
  std::string mode = "random";
  std::vector<double> proportions;
  std::uint64_t seed = 0;
  std::string out = "matrix.json";
  std::string spec_out;
  bool raw = false;
};

int run_generate(const GenerateArgs& a) {
  const auto spec = build_spec(a.n, a.p, a.sigma, a.mode, a.proportions, a.seed);
  SignedMatrix m = generate(spec);
  if (!a.raw) m = normalize_rows(m);
  io::write_matrix(a.out, m);
  info("wrote " + a.out + (a.raw ? " (raw strengths)" : " (row-normalized)"));
  if (!a.spec_out.empty()) {
    io::write_file(a.spec_out, io::spec_to_json(spec).dump(2) + "\n");
    info("wrote " + a.spec_out);
  }
  return 0;
}

struct SpectrumArgs {
  std::string in;
  std::string predict;  // "", "circular", "ellipse"
  std::string stats_path;
  std::string out = "summary.json";
  double slack = 1.15;
};

int run_spectrum(const SpectrumArgs& a) {
  const auto m = io::read_matrix(a.in);
  const auto s = eigenvalues(m);
  json ev = json::array();
  for (const auto& l : s.eigenvalues) ev.push_back({l.real(), l.imag()});
  json doc{{"eigenvalues", std::move(ev)},
           {"spectral_radius", s.spectral_radius},
           {"rightmost_real", s.rightmost_real}};

  if (!a.predict.empty()) {
    if (a.stats_path.empty()) {
      throw ValidationError("--predict needs --stats <spec.json>");
    }
    const auto spec = io::read_spec(a.stats_path);
    const auto stats = mixture_stats(spec);
    if (a.predict == "circular") {
      const double radius = predict_circular(stats, spec.n);
      doc["prediction"] = {{"kind", "circular"},
                           {"radius", radius},
                           {"empirical_radius", s.spectral_radius}};
    } else if (a.predict == "ellipse") {
      const auto pred = predict_ellipse(stats, spec.n);
      const auto rep = containment_check(s, pred, a.slack);
      json p{{"kind", "ellipse"},
             {"center_shift", pred.center_shift},
             {"v", pred.v},
             {"t", pred.t},
             {"zeta", pred.zeta},
             {"a", pred.a},
             {"b", pred.b},
             {"q_rightmost", {pred.q_rightmost.real(), pred.q_rightmost.imag()}},
             {"q_leftmost", {pred.q_leftmost.real(), pred.q_leftmost.imag()}},
             {"q_uppermost", {pred.q_uppermost.real(), pred.q_uppermost.imag()}}};
      p["outlier"] = pred.outlier ? json(*pred.outlier) : json(nullptr);
      json c{{"fraction_inside", rep.fraction_inside},
             {"n_inside", rep.n_inside},
             {"n_total", rep.n_total},
             {"slack", a.slack}};
      if (rep.outlier_error) {
        c["outlier_error"] = *rep.outlier_error;
        c["outlier_matched"] = {rep.outlier_matched->real(), rep.outlier_matched->imag()};
      }
      doc["prediction"] = std::move(p);
      doc["containment"] = std::move(c);
    } else {
      throw ValidationError("--predict must be 'circular' or 'ellipse'");
    }
  }
  io::write_file(a.out, doc.dump(2) + "\n");
  info("wrote " + a.out);
  return 0;
}

struct SimDiscreteArgs {
  std::string in;
  int tau_d = 0;
  std::string x0 = "uniform-seed:0";
  int steps = 0;  // 0 = size from the spectral rate estimate
  double tol = 1e-6;
  std::string out = "traj.csv";
};

int run_simulate_discrete(const SimDiscreteArgs& a) {
  const auto w = io::read_matrix(a.in);
  const auto sys = DiscreteSystem::from_matrix(w, a.tau_d,
                                               parse_x0(a.x0, static_cast<int>(w.rows())));
  const int steps = a.steps > 0 ? a.steps : default_max_steps(sys);
  const auto traj = simulate(sys, steps, a.tol);
  write_trajectory_csv(a.out, {}, traj.states, "step");

  json doc{{"classification", to_string(traj.outcome)}, {"steps_run", traj.steps_run}};
  if (traj.outcome == DiscreteOutcome::kBipartiteConsensus) {
    doc["alpha"] = traj.consensus_alpha;
    doc["bipartition"] = {traj.bipartition.first, traj.bipartition.second};
  }
  std::cout << doc.dump() << "\n";
  return 0;
}

struct SimContinuousArgs {
  std::string in;
  double tau_c = 0.0;
  double dt = 0.0;  // 0 = default tau_c/64 (or 1/128)
  double horizon = 0.0;  // 0 = default max(10 tau, 40)
  std::string x0 = "uniform-seed:0";
  std::string out = "traj.csv";
};

int run_simulate_continuous(const SimContinuousArgs& a) {
  const auto w = io::read_matrix(a.in);
  const auto neg_l = build_laplacian(w);
  const double dt = a.dt > 0.0 ? a.dt : ContinuousSystem::default_dt(a.tau_c);
  const double horizon = a.horizon > 0.0 ? a.horizon : std::max(10.0 * a.tau_c, 40.0);
  const auto sys = ContinuousSystem::make(neg_l, a.tau_c,
                                          parse_x0(a.x0, static_cast<int>(w.rows())), dt,
                                          horizon);
  const auto traj = integrate(sys);
  write_trajectory_csv(a.out, traj.times, traj.states, "t");

  json doc{{"classification", to_string(traj.outcome)},
           {"t_end", traj.times.back()},
           {"dt", sys.dt}};
  doc["measured_rate"] = traj.measured_rate ? json(*traj.measured_rate) : json(nullptr);
  std::cout << doc.dump() << "\n";
  return 0;
}

struct ThresholdsArgs {
  std::string in;
  std::string out;  // empty = stdout
};

int run_thresholds(const ThresholdsArgs& a) {
  const auto w = io::read_matrix(a.in);
  const auto alpha = eigenvalues(build_laplacian(w), EigenOrder::kAbsRealAscending);
  DelayReport rep = tau_star(alpha);
  try {
    rep.accel_possible = accel_condition(alpha);
    rep.tau_tilde = tau_tilde(alpha);
  } catch (const Error&) {
    // rate theory does not apply (zero eigenvalue or no crossover);
    // thresholds alone are still the answer
  }
  const auto doc = delay_report_to_json(rep);
  if (a.out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    io::write_file(a.out, doc.dump(2) + "\n");
    info("wrote " + a.out);
  }
  return 0;
}

struct RateSweepArgs {
  std::string in;
  int samples = 64;
  std::string out = "curve.csv";
  std::string format = "csv";
};

int run_rate_sweep(const RateSweepArgs& a) {
  const auto w = io::read_matrix(a.in);
  const auto alpha = eigenvalues(build_laplacian(w), EigenOrder::kAbsRealAscending);
  const auto rep = rate_sweep(alpha, a.samples);
  if (a.format == "json") {
    io::write_file(a.out, delay_report_to_json(rep).dump(2) + "\n");
  } else {
    io::CsvWriter csv({"tau_c", "rate_predicted"});
    for (const auto& [tau, r] : rep.rate_curve) csv.row({tau, r});
    csv.save(a.out);
  }
  info("wrote " + a.out);
  json doc{{"tau_star", rep.tau_star},
           {"r0", rep.r0},
           {"accel_possible", rep.accel_possible}};
  doc["tau_tilde"] = rep.tau_tilde ? json(*rep.tau_tilde) : json(nullptr);
  std::cout << doc.dump() << "\n";
  return 0;
}

struct BoundaryArgs {
  double tau = 1.0;
  int points = 256;
  std::string out;  // empty = stdout
  std::string format = "csv";
};

int run_boundary_curve(const BoundaryArgs& a) {
  const auto curve = boundary_curve(a.tau, a.points);
  if (a.format == "json") {
    json doc = json::array();
    for (const auto& [theta, r] : curve) {
      doc.push_back({{"theta", theta},
                     {"r", r},
                     {"x", r * std::cos(theta)},
                     {"y", r * std::sin(theta)}});
    }
    if (a.out.empty()) {
      std::cout << doc.dump(2) << "\n";
    } else {
      io::write_file(a.out, doc.dump(2) + "\n");
    }
    return 0;
  }
  io::CsvWriter csv({"theta", "r", "x", "y"});
  for (const auto& [theta, r] : curve) {
    csv.row({theta, r, r * std::cos(theta), r * std::sin(theta)});
  }
  if (a.out.empty()) {
    std::cout << csv.text();
  } else {
    csv.save(a.out);
    info("wrote " + a.out);
  }
  return 0;
}

struct VerifyArgs {
  int n = 6;
  int tau_d = 3;
  int trials = 100;
  std::uint64_t seed = 7;
};

// Property harness for the augmented-graph equivalences: compressed-arc
// correspondence, CSCC-count equality, and balance equivalence.
int run_verify_lemmas(const VerifyArgs& a) {
  if (a.n < 2 || a.trials < 1 || a.tau_d < 0) {
    throw ValidationError("verify-lemmas: need --n >= 2, --trials >= 1, --tau-d >= 0");
  }
  int pass_arcs = 0, pass_cscc = 0, pass_balance = 0;
  for (int trial = 0; trial < a.trials; ++trial) {
    rng::Stream pick(a.seed, static_cast<std::uint64_t>(trial));
    const int n = 2 + static_cast<int>(pick.below(static_cast<std::uint64_t>(a.n - 1)));
    const int tau = static_cast<int>(pick.below(static_cast<std::uint64_t>(a.tau_d + 1)));
    const double p_arc = pick.uniform(0.1, 0.6);
    const double p_loop = pick.uniform(0.0, 0.4);

    SignedMatrix w = SignedMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          if (pick.bernoulli(p_loop)) w(i, i) = pick.uniform(0.1, 1.0);
        } else if (pick.bernoulli(p_arc)) {
          const double mag = pick.uniform(0.1, 1.0);
          w(i, j) = pick.bernoulli(0.5) ? mag : -mag;
        }
      }
    }

    const auto sys = DiscreteSystem::from_matrix(w, tau, Vector::Zero(n));
    const auto aug = build_augmented(sys);
    const auto comp = compress(aug, layer_partition(n, tau));

    bool arcs_ok = true;
    for (int i = 0; i < n && arcs_ok; ++i) {
      for (int j = 0; j < n && arcs_ok; ++j) {
        if (i == j) continue;
        if ((comp.exists(i, j) == 1) != (w(i, j) != 0.0)) arcs_ok = false;
      }
    }
    const bool cscc_ok = scc_decompose(w).cscc_count() == scc_decompose(aug).cscc_count();
    const bool balance_ok =
        is_structurally_balanced(w).balanced == is_structurally_balanced(aug).balanced;
    pass_arcs += arcs_ok;
    pass_cscc += cscc_ok;
    pass_balance += balance_ok;
    if (!(arcs_ok && cscc_ok && balance_ok)) {
      std::cerr << "trial " << trial << " failed (n=" << n << ", tau_d=" << tau << ")\n";
    }
  }
  std::cout << "arc correspondence: " << pass_arcs << "/" << a.trials << "\n"
            << "cscc-count equality: " << pass_cscc << "/" << a.trials << "\n"
            << "balance equivalence: " << pass_balance << "/" << a.trials << "\n";
  const bool all = pass_arcs == a.trials && pass_cscc == a.trials && pass_balance == a.trials;
  if (!all) std::cerr << "verify-lemmas: property violations found\n";
  return all ? 0 : 4;
}

// ---------------------------------------------------------------------------
// reproduce pipelines

struct ReproduceArgs {
  std::string id;
  std::string out_dir;
  std::uint64_t seed = 1;
  int n = 500;        // network size for the spectral pipelines
  int n_rate = 100;   // network size for the rate pipeline
};

int reproduce_example2(const std::filesystem::path& dir) {
  const auto w = trust_mistrust_network();
  const auto x0 = trust_mistrust_x0();
  bool ok = true;
  for (int tau : {0, 1, 4}) {
    const auto traj = simulate(DiscreteSystem::from_matrix(w, tau, x0), 500);
    write_trajectory_csv((dir / ("trust_mistrust_tau" + std::to_string(tau) + ".csv")).string(),
                         {}, traj.states, "step");
    std::cout << "W_tm tau_d=" << tau << ": " << to_string(traj.outcome)
              << " (steps=" << traj.steps_run << ")\n";
    ok = ok && traj.outcome == DiscreteOutcome::kConvergedZero;
  }
  DiscreteSystem trust;
  trust.self_weights = Vector::Zero(5);
  trust.coupling = w.cwiseAbs();
  trust.tau_d = 0;
  trust.x0 = x0;
  DiscreteSystem mistrust = trust;
  mistrust.coupling = -w.cwiseAbs();
  for (auto* sys : {&trust, &mistrust}) {
    const auto traj = simulate(*sys, 5000);
    const char* name = sys == &trust ? "W_t" : "W_m";
    write_trajectory_csv((dir / (std::string(name) + ".csv")).string(), {}, traj.states,
                         "step");
    std::cout << name << ": " << to_string(traj.outcome) << "\n";
    ok = ok && traj.outcome == DiscreteOutcome::kNotConverged;
  }
  return ok ? 0 : 4;
}

int reproduce_example4(const std::filesystem::path& dir) {
  const auto neg_l = build_laplacian(trust_mistrust_network());
  const auto x0 = trust_mistrust_x0();
  bool ok = true;
  std::optional<double> rate0, rate024;
  struct Run {
    double tau;
    double horizon;
    ContinuousOutcome want;
  };
  for (const auto& run : {Run{0.0, 130.0, ContinuousOutcome::kConvergedZero},
                          Run{0.2, 130.0, ContinuousOutcome::kConvergedZero},
                          Run{0.24, 130.0, ContinuousOutcome::kConvergedZero},
                          Run{1.0, 250.0, ContinuousOutcome::kDiverged}}) {
    const auto sys = ContinuousSystem::make(neg_l, run.tau, x0,
                                            ContinuousSystem::default_dt(run.tau), run.horizon);
    const auto traj = integrate(sys);
    std::ostringstream name;
    name << "continuous_tau" << run.tau << ".csv";
    write_trajectory_csv((dir / name.str()).string(), traj.times, traj.states, "t");
    std::cout << "tau_c=" << run.tau << ": " << to_string(traj.outcome);
    if (traj.measured_rate) {
      std::cout << " (measured rate " << *traj.measured_rate << ")";
      if (run.tau == 0.0) rate0 = traj.measured_rate;
      if (run.tau == 0.24) rate024 = traj.measured_rate;
    }
    std::cout << "\n";
    ok = ok && traj.outcome == run.want;
  }
  if (rate0 && rate024) {
    std::cout << "delay 0.24 vs 0: " << *rate024 << " > " << *rate0 << " -> "
              << (*rate024 > *rate0 ? "faster with delay" : "NOT faster") << "\n";
    ok = ok && *rate024 > *rate0;
  } else {
    ok = false;
  }
  return ok ? 0 : 4;
}

int reproduce_example3(const std::filesystem::path& dir, std::uint64_t seed, int n_rate) {
  // Teardrop boundary at several delays, overlaid with a random-mixture
  // spectrum: the convergence region shrinks as 1/tau.
  MixtureSpec spec;
  spec.n = n_rate;
  spec.p_connect = 0.5;
  spec.kind = MixtureKind::kRandom;
  spec.seed = seed;
  const auto w = normalize_rows(generate(spec));
  const auto alpha = eigenvalues(build_laplacian(w), EigenOrder::kAbsRealAscending);
  io::CsvWriter ev({"re", "im"});
  for (const auto& l : alpha.eigenvalues) ev.row({l.real(), l.imag()});
  ev.save((dir / "alpha_eigenvalues.csv").string());

  const auto rep = tau_star(alpha);
  for (double tau : {0.5 * rep.tau_star, rep.tau_star, 1.5 * rep.tau_star}) {
    const auto curve = boundary_curve(tau, 512);
    std::ostringstream name;
    name << "boundary_tau" << tau << ".csv";
    io::CsvWriter csv({"theta", "r", "x", "y"});
    for (const auto& [theta, r] : curve) {
      csv.row({theta, r, r * std::cos(theta), r * std::sin(theta)});
    }
    csv.save((dir / name.str()).string());
  }
  std::cout << "tau_star=" << rep.tau_star << " (boundaries written for 0.5x, 1x, 1.5x)\n";
  return 0;
}

int reproduce_example5(const std::filesystem::path& dir, std::uint64_t seed, int n) {
  bool ok = true;

  MixtureSpec rnd;
  rnd.n = n;
  rnd.p_connect = 0.5;
  rnd.kind = MixtureKind::kRandom;
  rnd.seed = seed;
  const auto w = normalize_rows(generate(rnd));
  const auto s = eigenvalues(w);
  io::CsvWriter ev({"re", "im"});
  for (const auto& l : s.eigenvalues) ev.row({l.real(), l.imag()});
  ev.save((dir / "random_eigenvalues.csv").string());
  const double pred = predict_circular(mixture_stats(rnd), n);
  std::cout << "random: rho_emp=" << s.spectral_radius << " rho_pred=" << pred << "\n";
  ok = ok && std::abs(s.spectral_radius - pred) / pred < 0.10;

  for (char key : {'a', 'b', 'c', 'd'}) {
    MixtureSpec spec = rnd;
    spec.kind = MixtureKind::kComplex;
    spec.proportions = scenario_proportions(key);
    spec.seed = seed + static_cast<std::uint64_t>(key);
    const auto wc = normalize_rows(generate(spec));
    const auto sc = eigenvalues(wc);
    io::CsvWriter evc({"re", "im"});
    for (const auto& l : sc.eigenvalues) evc.row({l.real(), l.imag()});
    evc.save((dir / (std::string("case_") + key + "_eigenvalues.csv")).string());

    const auto pd = predict_ellipse(mixture_stats(spec), n);
    const auto rep = containment_check(sc, pd, 1.15);
    json doc{{"case", std::string(1, key)},
             {"a", pd.a},
             {"b", pd.b},
             {"zeta", pd.zeta},
             {"center_shift", pd.center_shift},
             {"fraction_inside", rep.fraction_inside}};
    doc["outlier"] = pd.outlier ? json(*pd.outlier) : json(nullptr);
    if (rep.outlier_error) doc["outlier_error"] = *rep.outlier_error;
    io::write_file((dir / (std::string("case_") + key + "_prediction.json")).string(),
                   doc.dump(2) + "\n");
    std::cout << "case " << key << ": fraction_inside=" << rep.fraction_inside;
    if (rep.outlier_error) std::cout << " outlier_err=" << *rep.outlier_error;
    std::cout << "\n";
    ok = ok && rep.fraction_inside >= 0.99;
    if (key == 'b' || key == 'c') {
      ok = ok && rep.outlier_error && *rep.outlier_error < 0.10;
    }
  }
  return ok ? 0 : 4;
}

int reproduce_example6(const std::filesystem::path& dir, std::uint64_t seed, int n, int n_rate) {
  bool ok = true;

  // thresholds per scenario: closed form vs empirical spectrum
  for (char key : {'a', 'b', 'c', 'd'}) {
    MixtureSpec spec;
    spec.n = n;
    spec.p_connect = 0.5;
    spec.kind = MixtureKind::kComplex;
    spec.proportions = scenario_proportions(key);
    spec.seed = seed + static_cast<std::uint64_t>(key);
    const auto pred = predict_ellipse(mixture_stats(spec), n);
    const double theory = tau_star_complex(pred, n);
    const auto wc = normalize_rows(generate(spec));
    const double empirical =
        tau_star(eigenvalues(build_laplacian(wc), EigenOrder::kAbsRealAscending)).tau_star;
    const double target = key == 'c' ? 5.0 * kPi / 16.0 : kPi / 2.0;
    std::cout << "case " << key << ": tau*_theory=" << theory
              << " tau*_empirical=" << empirical << " target=" << target << "\n";
    ok = ok && std::abs(theory - target) / target < 0.10;
    ok = ok && std::abs(theory - empirical) / empirical < 0.10;
  }

  // rate-vs-delay curve for the random mixture
  MixtureSpec rnd;
  rnd.n = n_rate;
  rnd.p_connect = 0.5;
  rnd.kind = MixtureKind::kRandom;
  rnd.seed = seed;
  const auto w = normalize_rows(generate(rnd));
  const auto alpha = eigenvalues(build_laplacian(w), EigenOrder::kAbsRealAscending);
  const auto rep = rate_sweep(alpha, 96);
  io::CsvWriter csv({"tau_c", "rate_predicted"});
  for (const auto& [tau, r] : rep.rate_curve) csv.row({tau, r});
  csv.save((dir / "rate_curve.csv").string());
  double peak = 0.0;
  for (const auto& [tau, r] : rep.rate_curve) peak = std::max(peak, r);
  std::cout << "random mixture: R0=" << rep.r0 << " peak=" << peak
            << " tau_tilde=" << (rep.tau_tilde ? *rep.tau_tilde : -1.0)
            << " tau_star=" << rep.tau_star << "\n";
  ok = ok && rep.accel_possible && rep.tau_tilde.has_value() && peak > rep.r0;
  return ok ? 0 : 4;
}

int run_reproduce(const ReproduceArgs& a) {
  const std::filesystem::path dir = a.out_dir.empty()
                                        ? std::filesystem::path("reproduce-" + a.id)
                                        : std::filesystem::path(a.out_dir);
  std::filesystem::create_directories(dir);
  if (a.id == "example-2") return reproduce_example2(dir);
  if (a.id == "example-3") return reproduce_example3(dir, a.seed, a.n_rate);
  if (a.id == "example-4") return reproduce_example4(dir);
  if (a.id == "example-5") return reproduce_example5(dir, a.seed, a.n);
  if (a.id == "example-6") return reproduce_example6(dir, a.seed, a.n, a.n_rate);
  throw ValidationError("unknown example id '" + a.id +
                        "' (expected example-2 .. example-6)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-network opinion dynamics with delays: generators, simulators, "
               "spectral laws, and delay-margin analysis"};
  app.require_subcommand(1);

  std::uint64_t global_seed = 0;
  app.add_option("--seed", global_seed, "default seed for subcommands that draw randomness");
  app.add_flag("--quiet", g_quiet, "suppress informational messages");
  std::string global_format = "csv";
  app.add_option("--format", global_format, "output format for curve data (csv|json)")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string global_out;
  app.add_option("--out", global_out,
                 "default output path for commands that write a single artifact");

  GenerateArgs gen;
  auto* cgen = app.add_subcommand("generate", "draw a random signed interaction network");
  cgen->fallthrough();
  cgen->add_option("--n", gen.n, "node count")->required();
  cgen->add_option("--p", gen.p, "connection probability")->required();
  cgen->add_option("--sigma", gen.sigma, "strength scale sigma");
  cgen->add_option("--mode", gen.mode, "random|complex")->required();
  cgen->add_option("--proportions", gen.proportions,
                   "five pair-type proportions a,b,c,d,e (complex mode)")
      ->delimiter(',');
  cgen->add_option("--seed", gen.seed, "generator seed");
  cgen->add_option("--out", gen.out, "output matrix JSON path");
  cgen->add_option("--spec-out", gen.spec_out, "also write the mixture spec JSON");
  cgen->add_flag("--raw", gen.raw, "emit raw strengths instead of the normalized matrix");

  SpectrumArgs sp;
  auto* csp = app.add_subcommand("spectrum", "eigenvalues plus spectral-law predictions");
  csp->fallthrough();
  csp->add_option("--in", sp.in, "matrix JSON input")->required();
  csp->add_option("--predict", sp.predict, "circular|ellipse");
  csp->add_option("--stats", sp.stats_path, "mixture spec JSON for the prediction");
  csp->add_option("--out", sp.out, "output summary JSON path");
  csp->add_option("--slack", sp.slack, "containment slack factor");

  SimDiscreteArgs sd;
  auto* csd = app.add_subcommand("simulate-discrete", "run the delayed discrete dynamics");
  csd->fallthrough();
  csd->add_option("--in", sd.in, "matrix JSON input")->required();
  csd->add_option("--tau-d", sd.tau_d, "integer delay")->required();
  csd->add_option("--x0", sd.x0, "comma-separated opinions or uniform-seed:N");
  csd->add_option("--steps", sd.steps,
                  "maximum steps (default: sized from the spectral rate estimate)");
  csd->add_option("--tol", sd.tol, "convergence tolerance");
  csd->add_option("--out", sd.out, "trajectory CSV path");

  SimContinuousArgs sc;
  auto* csc = app.add_subcommand("simulate-continuous", "integrate the delayed flow");
  csc->fallthrough();
  csc->add_option("--in", sc.in, "matrix JSON input (the Laplacian is built internally)")
      ->required();
  csc->add_option("--tau-c", sc.tau_c, "real delay")->required();
  csc->add_option("--dt", sc.dt, "step request (snapped to tau_c/m)");
  csc->add_option("--horizon", sc.horizon, "final time");
  csc->add_option("--x0", sc.x0, "comma-separated opinions or uniform-seed:N");
  csc->add_option("--out", sc.out, "trajectory CSV path");

  ThresholdsArgs th;
  auto* cth = app.add_subcommand("thresholds", "per-eigenvalue delay margins and tau*");
  cth->fallthrough();
  cth->add_option("--in", th.in, "matrix JSON input")->required();
  cth->add_option("--out", th.out, "report JSON path (default: stdout)");

  RateSweepArgs rs;
  auto* crs = app.add_subcommand("rate-sweep", "predicted rate across [0, tau*)");
  crs->fallthrough();
  crs->add_option("--in", rs.in, "matrix JSON input")->required();
  crs->add_option("--samples", rs.samples, "grid size (>= 8)");
  crs->add_option("--out", rs.out, "curve output path");

  BoundaryArgs bc;
  auto* cbc = app.add_subcommand("boundary-curve", "teardrop stability boundary in polar form");
  cbc->fallthrough();
  cbc->add_option("--tau", bc.tau, "delay")->required();
  cbc->add_option("--points", bc.points, "sample count");
  cbc->add_option("--out", bc.out, "output path (default: stdout)");

  VerifyArgs vf;
  auto* cvf = app.add_subcommand("verify-lemmas",
                                 "property harness for the augmented-graph equivalences");
  cvf->fallthrough();
  cvf->add_option("--n", vf.n, "max node count");
  cvf->add_option("--tau-d", vf.tau_d, "max delay");
  cvf->add_option("--trials", vf.trials, "number of random graphs");
  cvf->add_option("--seed", vf.seed, "harness seed");

  ReproduceArgs rp;
  auto* crp = app.add_subcommand("reproduce", "run a named benchmark pipeline");
  crp->fallthrough();
  crp->add_option("id", rp.id, "example-2 | example-3 | example-4 | example-5 | example-6")
      ->required();
  crp->add_option("--out-dir", rp.out_dir, "artifact directory");
  crp->add_option("--seed", rp.seed, "pipeline seed");
  crp->add_option("--n", rp.n, "network size for spectral pipelines");
  crp->add_option("--n-rate", rp.n_rate, "network size for the rate pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // app-level --seed/--out act as defaults when the subcommand left its own unset
  if (app.count("--seed") && !cgen->count("--seed")) gen.seed = global_seed;
  if (app.count("--seed") && !cvf->count("--seed")) vf.seed = global_seed;
  if (app.count("--seed") && !crp->count("--seed")) rp.seed = global_seed;
  if (app.count("--out")) {
    if (!cgen->count("--out")) gen.out = global_out;
    if (!csp->count("--out")) sp.out = global_out;
    if (!csd->count("--out")) sd.out = global_out;
    if (!csc->count("--out")) sc.out = global_out;
    if (!cth->count("--out")) th.out = global_out;
    if (!crs->count("--out")) rs.out = global_out;
    if (!cbc->count("--out")) bc.out = global_out;
  }
  rs.format = global_format;
  bc.format = global_format;

  try {
    if (*cgen) return run_generate(gen);
    if (*csp) return run_spectrum(sp);
    if (*csd) return run_simulate_discrete(sd);
    if (*csc) return run_simulate_continuous(sc);
    if (*cth) return run_thresholds(th);
    if (*crs) return run_rate_sweep(rs);
    if (*cbc) return run_boundary_curve(bc);
    if (*cvf) return run_verify_lemmas(vf);
    if (*crp) return run_reproduce(rp);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidProportions& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const StepTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
