// Copyright 2026 The QTK Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qtk/composite.hpp"
#include "qtk/dynamics.hpp"
#include "qtk/error.hpp"
#include "qtk/io.hpp"
#include "qtk/lindblad.hpp"
#include "qtk/pme.hpp"
#include "qtk/qtfit.hpp"
#include "qtk/relaxation.hpp"

namespace qtk::cli {
namespace {

using io::json;
namespace fs = std::filesystem;

constexpr const char* kCommonKeys[] = {"seed", "out", "precision"};

// Schema-checked view of a command's JSON config.
class Config {
 public:
  Config(const fs::path& path, const std::string& command, std::set<std::string> keys) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config " + path.string());
    try {
      doc_ = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
    if (!doc_.is_object()) throw InputError("config must be a JSON object");
    for (const char* k : kCommonKeys) keys.insert(k);
    for (const auto& [key, value] : doc_.items()) {
      if (!keys.count(key)) {
        throw InputError("unknown key '" + key + "' in " + command + " config");
      }
    }
  }

  bool has(const std::string& key) const { return doc_.contains(key); }

  const json& at(const std::string& key) const {
    if (!has(key)) throw InputError("missing required key '" + key + "'");
    return doc_.at(key);
  }

  double number(const std::string& key) const { return as_number(at(key), key); }
  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  std::int64_t integer_or(const std::string& key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_integer()) throw InputError("'" + key + "' must be an integer");
    return v.get<std::int64_t>();
  }

  bool boolean_or(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_boolean()) throw InputError("'" + key + "' must be true or false");
    return v.get<bool>();
  }

  std::string string_or(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_string()) throw InputError("'" + key + "' must be a string");
    return v.get<std::string>();
  }

  std::vector<double> vector(const std::string& key) const { return as_vector(at(key), key); }

  Eigen::MatrixXd matrix(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_array() || v.empty()) throw InputError("'" + key + "' must be a non-empty matrix");
    const auto rows = static_cast<Eigen::Index>(v.size());
    Eigen::MatrixXd m;
    for (Eigen::Index i = 0; i < rows; ++i) {
      const auto row = as_vector(v[static_cast<std::size_t>(i)], key);
      if (i == 0) m.resize(rows, static_cast<Eigen::Index>(row.size()));
      if (static_cast<Eigen::Index>(row.size()) != m.cols()) {
        throw InputError("'" + key + "' rows have different lengths");
      }
      for (Eigen::Index k = 0; k < m.cols(); ++k) m(i, k) = row[static_cast<std::size_t>(k)];
    }
    return m;
  }

  static double as_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw InputError("'" + key + "' must be a number");
    return v.get<double>();
  }

  static std::vector<double> as_vector(const json& v, const std::string& key) {
    if (!v.is_array()) throw InputError("'" + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) out.push_back(as_number(x, key));
    return out;
  }

  static Eigen::Vector3d as_vec3(const json& v, const std::string& key) {
    const auto xs = as_vector(v, key);
    if (xs.size() != 3) throw InputError("'" + key + "' must have 3 components");
    return {xs[0], xs[1], xs[2]};
  }

 private:
  json doc_;
};

struct Common {
  std::uint64_t seed = 0;
  int precision = 17;
  std::optional<fs::path> stem;
};

Common common(const Config& cfg, const std::string& out_flag) {
  Common c;
  const auto seed = cfg.integer_or("seed", 0);
  if (seed < 0) throw InputError("'seed' must be non-negative");
  c.seed = static_cast<std::uint64_t>(seed);
  c.precision = static_cast<int>(cfg.integer_or("precision", 17));
  if (c.precision < 1 || c.precision > 17) throw InputError("'precision' must be in 1..17");
  const std::string out = out_flag.empty() ? cfg.string_or("out", "") : out_flag;
  if (!out.empty()) c.stem = fs::path(out);
  return c;
}

json vec_json(const Eigen::VectorXd& v, int precision) {
  json a = json::array();
  for (double x : v) a.push_back(io::number(x, precision));
  return a;
}

fs::path with_ext(const fs::path& stem, const char* ext) {
  fs::path p = stem;
  p += ext;
  return p;
}

// Emits the report on stdout, or to <stem>.json.
void emit_report(const Common& c, const json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (c.stem) {
    io::write_atomic(with_ext(*c.stem, ".json"), text);
  } else {
    out << text;
  }
}

void emit_csv(const Common& c, const std::string& csv) {
  if (c.stem) io::write_atomic(with_ext(*c.stem, ".csv"), csv);
}

std::size_t stride_of(const Config& cfg, std::size_t flag) {
  if (flag > 0) return flag;
  const auto s = cfg.integer_or("stride", 10);
  if (s <= 0) throw InputError("'stride' must be positive");
  return static_cast<std::size_t>(s);
}

double step_of(const Config& cfg, double max_rate) {
  if (cfg.has("dt")) return cfg.number("dt");
  return dynamics::default_step(max_rate > 0.0 ? max_rate : 1.0);
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QTK_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

// pme-solve -----------------------------------------------------------------

int cmd_pme_solve(const fs::path& path, const std::string& out_flag, std::size_t stride_flag,
                  std::ostream& out) {
  const Config cfg(path, "pme-solve", {"W", "p0", "t_end", "dt", "stride"});
  const Common c = common(cfg, out_flag);
  const pme::TransitionMatrix w(cfg.matrix("W"));
  const auto p0v = cfg.vector("p0");
  const Eigen::VectorXd p0 = Eigen::Map<const Eigen::VectorXd>(
      p0v.data(), static_cast<Eigen::Index>(p0v.size()));
  pme::check_probability(p0, w.n());
  const double t_end = cfg.number("t_end");
  const Eigen::MatrixXd l = pme::build_generator(w);
  const double dt = step_of(cfg, l.diagonal().cwiseAbs().maxCoeff());
  const std::size_t stride = stride_of(cfg, stride_flag);

  const Eigen::VectorXd stationary = pme::stationary_state(w);
  const pme::Spectrum spec = pme::spectrum(w);
  const pme::SymmetryFlags flags = pme::classify_w(w);
  const auto traj = dynamics::integrate([&l](const Eigen::VectorXd& p) { return Eigen::VectorXd(l * p); },
                                        p0, t_end, dt, pme::bs_entropy);

  json eig = json::array();
  for (const auto& z : spec.eigenvalues) {
    eig.push_back({io::number(z.real(), c.precision), io::number(z.imag(), c.precision)});
  }
  double drift = 0.0;
  for (const auto& m : traj.monitors) drift = std::max(drift, std::abs(m.sum_drift));
  json report{{"n", w.n()},
              {"stationary", vec_json(stationary, c.precision)},
              {"eigenvalues", eig},
              {"flags", {{"symmetric", flags.symmetric},
                         {"doubly_stochastic", flags.doubly_stochastic}}},
              {"t_end", io::number(t_end, c.precision)},
              {"dt", io::number(dt, c.precision)},
              {"final_state", vec_json(traj.final_state(), c.precision)},
              {"max_sum_drift", io::number(drift, c.precision)}};

  std::ostringstream csv;
  dynamics::write_trajectory_csv(csv, traj, stride, c.precision);
  emit_csv(c, csv.str());
  emit_report(c, report, out);
  return kExitOk;
}

// qt-fit --------------------------------------------------------------------

int cmd_qt_fit(const fs::path& path, const std::string& out_flag, std::ostream& out) {
  const Config cfg(path, "qt-fit", {"W", "max_restarts", "warm_start", "tolerance"});
  const Common c = common(cfg, out_flag);
  const pme::TransitionMatrix w(cfg.matrix("W"));
  qtfit::FitOptions opts;
  opts.seed = c.seed;
  opts.max_restarts = static_cast<int>(cfg.integer_or("max_restarts", 50));
  if (opts.max_restarts < 0) throw InputError("'max_restarts' must be non-negative");
  opts.warm_start = cfg.boolean_or("warm_start", true);
  opts.tolerance = cfg.number_or("tolerance", opts.tolerance);
  if (!(opts.tolerance > 0.0)) throw InputError("'tolerance' must be positive");

  int code = kExitOk;
  qtfit::QTRepresentation rep;
  try {
    rep = qtfit::fit(w, opts);
  } catch (const qtfit::FitNonConvergence& e) {
    rep = e.best();
    code = kExitNonConvergence;
  }
  json report = io::to_json(rep, c.precision);
  report["converged"] = code == kExitOk;
  report["parameter_count"] = rep.parameter_count();
  emit_report(c, report, out);
  return code;
}

// relax-classify / relax-scan ---------------------------------------------------

json report_json(const relaxation::RelaxationReport& r, int p) {
  auto num = [p](double x) { return io::number(x, p); };
  json eig = json::array();
  for (const auto& z : r.eigenvalues) eig.push_back({num(z.real()), num(z.imag())});
  return json{{"xi", num(r.xi)},       {"eta", num(r.eta)},   {"disc", num(r.disc)},
              {"k", num(r.k)},         {"l", num(r.l)},       {"m", num(r.m)},
              {"omega", num(r.omega)}, {"u", num(r.u)},       {"v", num(r.v)},
              {"ellipse", num(r.ellipse)},
              {"eigenvalues", eig},
              {"monotonic", r.monotonic},
              {"boundary", r.boundary}};
}

int cmd_relax_classify(const fs::path& path, const std::string& out_flag, std::ostream& out) {
  const Config cfg(path, "relax-classify", {"rates"});
  const Common c = common(cfg, out_flag);
  const auto v = cfg.vector("rates");
  if (v.size() != 6) throw InputError("'rates' must hold six rates a..f");
  const auto rates = ThreeStateRates::from_array({v[0], v[1], v[2], v[3], v[4], v[5]});
  const auto rep = relaxation::classify(rates);
  json report = report_json(rep, c.precision);
  report["rates"] = vec_json(Eigen::Map<const Eigen::VectorXd>(v.data(), 6), c.precision);
  const auto kr = rates.a + rates.b + rates.c + rates.d + rates.e + rates.f > 0.0
                      ? std::optional(qtfit::three_state_kappa_r(rates))
                      : std::nullopt;
  report["kappa"] = kr ? io::number(kr->kappa, c.precision) : json(nullptr);
  report["r"] = kr ? io::number(kr->r, c.precision) : json(nullptr);
  emit_report(c, report, out);
  return kExitOk;
}

int cmd_relax_scan(const fs::path& path, const std::string& out_flag, std::ostream& out) {
  const Config cfg(path, "relax-scan", {"samples", "range", "constraint", "bins"});
  const Common c = common(cfg, out_flag);
  if (!cfg.has("seed")) throw InputError("relax-scan requires 'seed'");
  relaxation::ScanSpec spec;
  const auto samples = cfg.integer_or("samples", -1);
  if (samples <= 0) throw InputError("'samples' must be a positive integer");
  spec.samples = static_cast<std::size_t>(samples);
  if (cfg.has("range")) {
    const auto r = cfg.vector("range");
    if (r.size() != 2) throw InputError("'range' must be [lo, hi]");
    spec.lo = r[0];
    spec.hi = r[1];
  }
  const std::string constraint = cfg.string_or("constraint", "none");
  if (constraint != "none" && constraint != "omega_zero") {
    throw InputError("'constraint' must be \"none\" or \"omega_zero\"");
  }
  spec.omega_zero = constraint == "omega_zero";
  const auto bins = cfg.integer_or("bins", 10);
  if (bins <= 0) throw InputError("'bins' must be positive");
  spec.bins = static_cast<std::size_t>(bins);
  spec.threads = thread_cap();

  const auto result = relaxation::scan(spec, c.seed);
  json jb = json::array();
  for (const auto& b : result.bins) {
    jb.push_back({{"omega_lo", io::number(b.lo, c.precision)},
                  {"omega_hi", io::number(b.hi, c.precision)},
                  {"count", b.count},
                  {"oscillatory", b.oscillatory},
                  {"fraction", io::number(b.fraction(), c.precision)}});
  }
  json report{{"samples", spec.samples},
              {"constraint", constraint},
              {"oscillatory_fraction", io::number(result.oscillatory_fraction, c.precision)},
              {"bins", jb}};
  std::ostringstream csv;
  relaxation::write_scan_csv(csv, result, c.precision);
  emit_csv(c, csv.str());
  emit_report(c, report, out);
  return kExitOk;
}

// lindblad ------------------------------------------------------------------

int cmd_lindblad(const fs::path& path, const std::string& out_flag, std::size_t stride_flag,
                 std::ostream& out) {
  const Config cfg(path, "lindblad",
                   {"h", "dissipators", "P0", "t_end", "dt", "stride", "gradient_checks"});
  const Common c = common(cfg, out_flag);
  lindblad::LindbladChannel ch;
  if (cfg.has("h")) ch.h = Config::as_vec3(cfg.at("h"), "h");
  const json& ds = cfg.at("dissipators");
  if (!ds.is_array()) throw InputError("'dissipators' must be an array");
  for (const auto& d : ds) {
    if (!d.is_object()) throw InputError("each dissipator must be an object {\"A\", \"B\"}");
    for (const auto& [key, value] : d.items()) {
      if (key != "A" && key != "B") throw InputError("unknown dissipator key '" + key + "'");
    }
    lindblad::Dissipator one;
    if (d.contains("A")) one.a = Config::as_vec3(d.at("A"), "A");
    if (d.contains("B")) one.b = Config::as_vec3(d.at("B"), "B");
    ch.dissipators.push_back(one);
  }
  ch.validate();
  const Eigen::Vector3d p0 = Config::as_vec3(cfg.at("P0"), "P0");
  if (p0.norm() > 1.0 + 1e-9) throw InputError("'P0' lies outside the Bloch ball");
  const bool checks = cfg.boolean_or("gradient_checks", true);
  const lindblad::Dissipator* grad = checks ? &lindblad::gradient_dissipator(ch) : nullptr;

  double rate = ch.h.norm();
  for (const auto& d : ch.dissipators) rate += d.a.squaredNorm() + d.b.squaredNorm();
  const double t_end = cfg.number("t_end");
  const double dt = step_of(cfg, rate);
  const std::size_t stride = stride_of(cfg, stride_flag);

  const Eigen::Vector3d p_st = grad ? lindblad::stationary_bloch(grad->a, grad->b)
                                    : lindblad::stationary_bloch(ch);
  dynamics::EntropyFn entropy;
  if (grad) {
    entropy = [grad](const Eigen::VectorXd& p) {
      return lindblad::bloch_entropy(grad->a, grad->b, Eigen::Vector3d(p));
    };
  }
  const auto traj = dynamics::integrate(
      [&ch](const Eigen::VectorXd& p) {
        return Eigen::VectorXd(lindblad::bloch_rhs(ch, Eigen::Vector3d(p)));
      },
      Eigen::VectorXd(p0), t_end, dt, entropy);

  double max_norm = 0.0;
  double grad_residual = 0.0;
  double six_residual = 0.0;
  for (std::size_t k = 0; k < traj.size(); k += stride) {
    const Eigen::Vector3d p = traj.states[k];
    max_norm = std::max(max_norm, p.norm());
    if (!grad) continue;
    const Eigen::Vector3d flow = lindblad::bloch_rhs(ch, p);
    const Eigen::Vector3d g = lindblad::gradient_rhs(grad->a, grad->b, p);
    grad_residual = std::max(grad_residual, (flow - g).cwiseAbs().maxCoeff());
    const auto six = lindblad::qt_six_rhs(grad->a, grad->b, lindblad::embed_six(p));
    const Eigen::Vector3d six_p(six[0] - six[1], six[2] - six[3], six[4] - six[5]);
    six_residual = std::max(six_residual, (six_p - g).cwiseAbs().maxCoeff());
  }
  max_norm = std::max(max_norm, traj.final_state().norm());

  json report{{"P_st", vec_json(p_st, c.precision)},
              {"P_st_norm", io::number(p_st.norm(), c.precision)},
              {"final_P", vec_json(traj.final_state(), c.precision)},
              {"max_norm", io::number(max_norm, c.precision)},
              {"t_end", io::number(t_end, c.precision)},
              {"dt", io::number(dt, c.precision)}};
  if (grad) {
    report["gradient_residual"] = io::number(grad_residual, c.precision);
    report["six_residual"] = io::number(six_residual, c.precision);
    report["six_norm"] = io::number(lindblad::kSixSlotNorm, c.precision);
  }
  std::ostringstream csv;
  dynamics::write_trajectory_csv(csv, traj, stride, c.precision);
  emit_csv(c, csv.str());
  emit_report(c, report, out);
  return kExitOk;
}

// composite -----------------------------------------------------------------

int cmd_composite(const fs::path& path, const std::string& out_flag, std::ostream& out) {
  const Config cfg(path, "composite", {"a", "c", "k", "samples"});
  const Common c = common(cfg, out_flag);
  const double a = cfg.number("a");
  const double rc = cfg.number("c");
  if (!(a > 0.0) || !(rc > 0.0)) throw InputError("'a' and 'c' must be positive");
  const auto sys = composite::CompositeSystem::make(a, rc, cfg.number_or("k", 1.0));
  const auto samples = cfg.integer_or("samples", 20);
  if (samples <= 0) throw InputError("'samples' must be positive");

  std::mt19937_64 rng(c.seed);
  std::exponential_distribution<double> expo(1.0);
  double residual = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    Eigen::Vector4d wv(expo(rng), expo(rng), expo(rng), expo(rng));
    wv /= wv.sum();
    residual = std::max(residual, composite::gradient_residual(sys, wv));
  }
  const Eigen::Matrix4d l = composite::composite_generator(sys);
  Eigen::Matrix4d rates = l;
  rates.diagonal().setZero();
  const Eigen::VectorXd stationary = pme::stationary_state(pme::TransitionMatrix(rates));
  const double q = composite::q_parameter(sys);

  json report{{"a", io::number(sys.a, c.precision)},
              {"c", io::number(sys.c, c.precision)},
              {"k", io::number(sys.boltzmann_k, c.precision)},
              {"lambda", io::number(sys.lambda, c.precision)},
              {"q", io::number(q, c.precision)},
              {"tsallis_coupling", io::number(composite::tsallis_coupling(sys), c.precision)},
              {"coupling_mismatch",
               io::number(composite::tsallis_coupling(sys) + sys.lambda, c.precision)},
              {"gradient_residual", io::number(residual, c.precision)},
              {"samples", samples},
              {"stationary", vec_json(stationary, c.precision)}};
  emit_report(c, report, out);
  return kExitOk;
}

constexpr const char* kSchemas = R"(Config schemas (JSON objects; unknown keys are rejected).
Common optional keys: "seed" (int >= 0, default 0), "out" (output path stem:
writes <out>.json and, where produced, <out>.csv; without it the report goes
to stdout), "precision" (significant digits 1..17, default 17).

  pme-solve       {"W": [[...]], "p0": [...], "t_end": x, "dt": x?, "stride": n?}
                  W[i][k] is the rate of |k> -> |i>; diagonal ignored.
                  CSV t,y1..yN,entropy,sum_drift; report: stationary,
                  eigenvalues [[re,im]...], flags, final_state, max_sum_drift.
  qt-fit          {"W": [[...]], "max_restarts": n?, "warm_start": bool?,
                   "tolerance": x? (default 1e-8)}
                  report: n, q, r, subsets, norm, residual, converged,
                  parameter_count. Exit 3 when the fit does not converge.
  relax-classify  {"rates": [a, b, c, d, e, f]}
                  a=W21 b=W31 c=W12 d=W32 e=W13 f=W23.
  relax-scan      {"samples": n, "seed": s, "range": [lo, hi]?,
                   "constraint": "none" | "omega_zero", "bins": n?}
                  CSV a,b,c,d,e,f,xi,disc,omega,u,v,monotonic; QTK_THREADS
                  caps the worker count.
  lindblad        {"h": [x,y,z]?, "dissipators": [{"A": [..], "B": [..]}],
                   "P0": [..], "t_end": x, "dt": x?, "stride": n?,
                   "gradient_checks": bool? (default true)}
                  Gradient checks need h = 0 and exactly one dissipator.
  composite       {"a": x, "c": x, "k": x? (default 1), "samples": n?}

Exit codes: 0 success, 1 runtime failure, 2 invalid input, 3 fit non-convergence.)";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qtk: quasithermodynamic representation of Markov master equations"};
  app.footer(kSchemas);
  app.require_subcommand(1);

  std::string config;
  std::string out_flag;
  std::size_t stride = 0;
  std::map<std::string, CLI::App*> subs;
  const std::pair<const char*, const char*> commands[] = {
      {"pme-solve", "Integrate a Pauli master equation; stationary state and spectrum"},
      {"qt-fit", "Fit the quasithermodynamic representation of a rate matrix"},
      {"relax-classify", "Monotone vs oscillatory relaxation of a three-state chain"},
      {"relax-scan", "Seeded scan of three-state rate space"},
      {"lindblad", "Two-state Lindblad dynamics and its gradient/QT forms"},
      {"composite", "Composite two-qubit chain and its subextensive entropy"}};
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("config", config, "JSON config file")->required();
    sub->add_option("-o,--out", out_flag, "Output path stem (overrides \"out\")");
    if (std::string(name) == "pme-solve" || std::string(name) == "lindblad") {
      sub->add_option("--stride", stride, "Trajectory CSV row stride")->check(CLI::PositiveNumber);
    }
    sub->footer(kSchemas);
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (subs["pme-solve"]->parsed()) return cmd_pme_solve(config, out_flag, stride, out);
    if (subs["qt-fit"]->parsed()) return cmd_qt_fit(config, out_flag, out);
    if (subs["relax-classify"]->parsed()) return cmd_relax_classify(config, out_flag, out);
    if (subs["relax-scan"]->parsed()) return cmd_relax_scan(config, out_flag, out);
    if (subs["lindblad"]->parsed()) return cmd_lindblad(config, out_flag, stride, out);
    if (subs["composite"]->parsed()) return cmd_composite(config, out_flag, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const GradientFormUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInvalidInput;
}

}  // namespace qtk::cli
