#include "tpsi/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <vector>

#include "CLI11.hpp"
#include "tpsi/bbm.hpp"
#include "tpsi/fermat.hpp"
#include "tpsi/geometry.hpp"
#include "tpsi/planar.hpp"
#include "tpsi/random.hpp"
#include "tpsi/verify.hpp"

namespace tpsi::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

// Negative controls must move the residual at least this far.
constexpr double kControlFloor = 1e-2;

constexpr std::size_t kFermatPoints = 200;

constexpr double kGramTolerance = 1e-6;

struct Suites {
  static constexpr std::array<std::pair<const char*, Suite>, 9> names{{
      {"fermat", Suite::fermat},
      {"geometry", Suite::geometry},
      {"vertex-te", Suite::vertex_te},
      {"irc-te", Suite::irc_te},
      {"psi", Suite::psi},
      {"psibar", Suite::psibar},
      {"planar-dual", Suite::planar_dual},
      {"planar-decompose", Suite::planar_decompose},
      {"all", Suite::all},
  }};
};

json to_json(const ResidualReport& r) {
  return {{"max_abs_diff", r.max_abs_diff},
          {"rel_diff", r.rel_diff},
          {"ratio_mean", {r.ratio_mean.real(), r.ratio_mean.imag()}},
          {"ratio_spread", r.ratio_spread},
          {"ratio_entries", r.ratio_entries},
          {"entries_checked", r.entries_checked},
          {"mode", to_string(r.mode)}};
}

json to_json(const Trihedron& t) {
  return {{"theta", t.theta}, {"a", t.a}, {"beta", t.beta}};
}

// Accumulates identity records and the overall verdict.
class Report {
 public:
  explicit Report(double tolerance) : tolerance_(tolerance) {}

  void identity(const std::string& name, double residual, std::optional<ResidualReport> detail = {}) {
    const bool ok = residual <= tolerance_;
    pass_ = pass_ && ok;
    json entry{{"name", name}, {"residual", residual}, {"pass", ok}};
    if (detail) entry["report"] = to_json(*detail);
    identities_.push_back(std::move(entry));
  }

  void identity(const std::string& name, const ResidualReport& r) { identity(name, r.rel_diff, r); }

  void control(const std::string& name, const ResidualReport& r) {
    const bool detected = r.rel_diff > kControlFloor;
    pass_ = pass_ && detected;
    controls_.push_back({{"name", name}, {"residual", r.rel_diff}, {"detected", detected}, {"report", to_json(r)}});
  }

  bool pass() const noexcept { return pass_; }
  json identities() const { return identities_; }
  json controls() const { return controls_; }

 private:
  double tolerance_;
  bool pass_ = true;
  json identities_ = json::array();
  json controls_ = json::array();
};

SweepOptions sweep_options(const RunConfig& c, Modulus n) {
  SweepOptions o;
  o.mode = c.mode.value_or(n.value() == 2 ? SweepMode::full : SweepMode::sampled);
  o.samples = c.samples;
  o.seed = c.seed;
  o.threads = c.threads;
  return o;
}

FermatPoint random_region_point(const CounterRng& rng, std::uint64_t index, Modulus n) {
  const int N = n.value();
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t key = index * 64 + attempt;
    const double arg = rng.uniform(key, 0, -2 * kPi / N, 0.0);
    const double r = std::exp(rng.uniform(key, 1, -2.0, 2.0));
    const complex x = std::polar(r, arg);
    const complex y = std::exp(std::log(1.0 - std::pow(x, N)) / static_cast<double>(N));
    const complex scale = std::exp(complex(rng.uniform(key, 2, -1.0, 1.0), rng.uniform(key, 3, -kPi, kPi)));
    const FermatPoint p{scale * x, scale * y, scale, n};
    if (in_region(p)) return p;
  }
}

void fermat_suite(const RunConfig& c, Modulus n, Report& report) {
  const int N = n.value();
  const CounterRng rng(c.seed);
  double normalization = 0, inversion = 0, closed_forms = 0, curve = 0, image_outside = 0;
  for (std::size_t k = 0; k < kFermatPoints; ++k) {
    const FermatPoint p = random_region_point(rng, k, n);
    const FermatPoint op = apply_O(p);
    curve = std::max({curve, p.curve_residual(), op.curve_residual()});
    if (!in_region(op)) image_outside += 1;
    const WTable w(p);
    complex prod = 1.0;
    for (int a = 0; a < N; ++a) prod *= w(a);
    normalization = std::max(normalization, std::abs(prod - 1.0));
    const WTable wo(op);
    for (int a = 0; a < N; ++a)
      inversion = std::max(inversion, std::abs(w(a) * wo(-a) * phi_tilde(CyclicSpin(a, n)) - 1.0));
    const complex w0 = w_zero(p);
    closed_forms = std::max(closed_forms, std::abs(w0 - w_zero_dual(p)) / std::abs(w0));
  }
  complex phi_prod = 1.0;
  for (int a = 0; a < N; ++a) phi_prod *= phi_tilde(CyclicSpin(a, n));
  report.identity("w_normalization", normalization);
  report.identity("w_inversion", inversion);
  report.identity("w_zero_closed_forms", closed_forms);
  report.identity("phi_tilde_product", std::abs(phi_prod - 1.0));
  report.identity("curve_residual", curve);
  report.identity("apply_O_leaves_region", image_outside);
}

void geometry_suite(const std::array<Trihedron, 4>& weights, std::uint64_t seed, Report& report) {
  double beta_sum = 0, round_trip = 0;
  auto check = [&](const Trihedron& t) {
    double s = 0;
    for (double b : t.beta) s += b;
    beta_sum = std::max(beta_sum, std::abs(s - kPi));
    const Angle3 back = dihedral_from_planar(t.a);
    for (int i = 0; i < 3; ++i) round_trip = std::max(round_trip, std::abs(back[i] - t.theta[i]));
  };
  for (const auto& t : weights) check(t);
  for (std::uint64_t k = 0; k < 20; ++k)
    for (const auto& t : te_weight_angles(sample_tetrahedron(seed * 1000 + k + 1))) check(t);

  const std::array<Vec3, 4> regular{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  const TetrahedronAngles reg = tetrahedron_from_vertices(regular);
  double regular_err = 0;
  for (double th : reg.theta) regular_err = std::max(regular_err, std::abs(th - std::acos(1.0 / 3.0)));
  report.identity("beta_sum", beta_sum);
  report.identity("dihedral_planar_round_trip", round_trip);
  report.identity("regular_tetrahedron", regular_err);
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  for (const auto& [key, suite] : Suites::names)
    if (name == key) return suite;
  return std::nullopt;
}

const char* to_string(Suite suite) noexcept {
  for (const auto& [key, s] : Suites::names)
    if (s == suite) return key;
  return "unknown";
}

namespace {

TetrahedronAngles resolve_tetrahedron(const RunConfig& c) {
  if (!c.angles) return sample_tetrahedron(c.seed);
  TetrahedronAngles t;
  for (int k = 0; k < 6; ++k) t.theta[k] = c.degrees ? (*c.angles)[k] * kPi / 180.0 : (*c.angles)[k];
  for (double th : t.theta)
    if (!(th > 0.0 && th < kPi)) throw Error(ErrorCode::degenerate_angles, "dihedral angle outside (0, pi)");
  // Six dihedral angles of a Euclidean tetrahedron have a singular Gram matrix.
  if (std::abs(gram_determinant(t)) > kGramTolerance) {
    throw Error(ErrorCode::degenerate_angles, "angles are not the dihedral angles of a Euclidean tetrahedron");
  }
  return t;
}

bool wants(Suite selected, Suite s) { return selected == Suite::all || selected == s; }

bool uses_tetrahedron(Suite s) {
  return s == Suite::all || s == Suite::geometry || s == Suite::vertex_te || s == Suite::irc_te ||
         s == Suite::psi || s == Suite::psibar;
}

bool uses_planar(Suite s) {
  return s == Suite::all || s == Suite::psi || s == Suite::psibar || s == Suite::planar_dual ||
         s == Suite::planar_decompose;
}

}  // namespace

RunResult run(const RunConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  json& out = result.report;
  out["schema"] = kSchemaVersion;
  out["suite"] = to_string(c.suite);
  out["N"] = c.n;
  out["seed"] = c.seed;
  out["tolerance"] = c.tolerance;

  if (c.n < 2 || c.n > 7 || !(c.tolerance > 0) || c.samples < 1) {
    out["error"] = "invalid configuration: need 2 <= N <= 7, tolerance > 0, samples >= 1";
    result.exit_code = kUsageError;
    return result;
  }
  const Modulus n(c.n);
  const SweepOptions options = sweep_options(c, n);
  Report report(c.tolerance);

  try {
    std::optional<std::array<Trihedron, 4>> weights;
    if (uses_tetrahedron(c.suite)) {
      const TetrahedronAngles t = resolve_tetrahedron(c);
      weights = te_weight_angles(t);
      for (const auto& w : *weights) (void)p_points(w, n);  // rejects nonpositive excesses
      json geo{{"theta", t.theta},
               {"orientation_flips", {4, 5}},
               {"gram_determinant", gram_determinant(t)},
               {"trihedra", json::array()}};
      if (t.vertices) geo["vertices"] = *t.vertices;
      for (const auto& w : *weights) geo["trihedra"].push_back(to_json(w));
      out["geometry"] = geo;
    }
    std::optional<std::array<Trihedron, 4>> planar;
    if (uses_planar(c.suite)) {
      const auto quad = sample_planar_quad(c.seed);
      planar = planar_weight_angles(quad);
      json geo{{"quad", quad}, {"trihedra", json::array()}};
      for (const auto& w : *planar) geo["trihedra"].push_back(to_json(w));
      out["planar_geometry"] = geo;
    }

    if (wants(c.suite, Suite::fermat)) fermat_suite(c, n, report);
    if (wants(c.suite, Suite::geometry)) geometry_suite(*weights, c.seed, report);
    if (wants(c.suite, Suite::vertex_te)) {
      report.identity("vertex_te", te_vertex_residual(*weights, n, options));
      report.control("vertex_te_random_factor", te_vertex_control(*weights, n, options, c.seed + 1));
    }
    if (wants(c.suite, Suite::irc_te)) {
      report.identity("irc_te", te_irc_residual(*weights, n, options));
      report.control("irc_te_swapped_wiring", te_irc_control(*weights, n, options));
    }
    if (wants(c.suite, Suite::psi)) {
      report.identity("psi_eq_bbm", psi_eq_residual(*weights, n, Model::bbm, options));
      report.identity("psi_eq_planar", psi_eq_residual(*planar, n, Model::planar, options));
      report.control("psi_eq_bbm_wrong_angles", psi_eq_control(*weights, n, Model::bbm, options));
    }
    if (wants(c.suite, Suite::psibar)) {
      report.identity("psibar_eq_bbm", psibar_eq_residual(*weights, n, Model::bbm, options));
      report.identity("psibar_eq_planar", psibar_eq_residual(*planar, n, Model::planar, options));
      report.control("psibar_eq_bbm_wrong_angles", psibar_eq_control(*weights, n, Model::bbm, options));
    }
    if (wants(c.suite, Suite::planar_dual)) {
      for (int k = 0; k < 4; ++k)
        report.identity("planar_self_duality_" + std::to_string(k), self_duality_check((*planar)[k], n, c.threads));
    }
    if (wants(c.suite, Suite::planar_decompose)) {
      SweepOptions dec = options;
      dec.mode = c.mode.value_or(n.value() <= 3 ? SweepMode::full : SweepMode::sampled);
      for (int k = 0; k < 4; ++k)
        report.identity("planar_decompose_" + std::to_string(k),
                        decompose_check((*planar)[k], n, PhaseChoice::second, dec));
    }
  } catch (const Error& e) {
    const bool geometric = e.code() == ErrorCode::degenerate_trihedron || e.code() == ErrorCode::degenerate_angles ||
                           e.code() == ErrorCode::sampling_failure;
    out["error"] = e.what();
    result.exit_code = geometric ? kDegenerateGeometry : kResidualFailure;
    return result;
  }

  out["identities"] = report.identities();
  out["controls"] = report.controls();
  out["pass"] = report.pass();
  out["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.exit_code = report.pass() ? kPass : kResidualFailure;
  return result;
}

WeightTensor select_tensor(const RunConfig& c, const std::string& selector) {
  const Modulus n(c.n);
  if (selector == "planar-R") return r_planar_vertex(planar_weight_angles(sample_planar_quad(c.seed))[0], n);
  static const std::vector<std::pair<std::vector<std::string>, int>> names{
      {{"R"}, 0}, {{"R'", "R1"}, 1}, {{"R''", "R2"}, 2}, {{"R'''", "R3"}, 3}};
  for (const auto& [aliases, index] : names)
    for (const auto& alias : aliases)
      if (selector == alias) return r_vertex(te_weight_angles(resolve_tetrahedron(c))[index], n);
  throw CLI::ValidationError("--tensor", "unknown tensor selector " + selector);
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tetrahedron-equation and psi-vector verification for the BBM and Planar models"};
  app.fallthrough();
  RunConfig config;
  std::string suite = "all";
  std::string mode = "auto";
  std::string output;
  std::vector<double> angles;
  unsigned threads = default_threads();

  app.add_option("--suite", suite, "fermat|geometry|vertex-te|irc-te|psi|psibar|planar-dual|planar-decompose|all")
      ->check(CLI::IsMember({"fermat", "geometry", "vertex-te", "irc-te", "psi", "psibar", "planar-dual",
                             "planar-decompose", "all"}));
  app.add_option("--n", config.n, "Spin modulus N")->check(CLI::Range(2, 7));
  app.add_option("--seed", config.seed, "Seed for geometry sampling and sampled sweeps");
  app.add_option("--angles", angles, "Six dihedral angles theta1..theta6")->expected(6);
  app.add_flag("--degrees", config.degrees, "Read --angles in degrees");
  app.add_option("--tolerance", config.tolerance, "Largest accepted residual")->check(CLI::PositiveNumber);
  app.add_option("--samples", config.samples, "Assignments per sampled sweep")->check(CLI::Range(1, 100000000));
  app.add_option("--mode", mode, "auto|full|sampled")->check(CLI::IsMember({"auto", "full", "sampled"}));
  app.add_option("--out", output, "Write the JSON report (or the dump) here instead of stdout");
  app.add_option("--threads", threads, "Worker threads (default: TPSI_THREADS or 1)")->check(CLI::Range(1, 1024));

  auto* dump = app.add_subcommand("dump", "Write one weight tensor in the binary TPSI format");
  std::string selector;
  dump->add_option("--tensor", selector, "R, R', R'', R''' (or R1, R2, R3), planar-R")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  config.suite = *parse_suite(suite);
  config.threads = threads;
  if (mode != "auto") config.mode = mode == "full" ? SweepMode::full : SweepMode::sampled;
  if (!angles.empty()) {
    config.angles.emplace();
    std::copy(angles.begin(), angles.end(), config.angles->begin());
  }

  if (dump->parsed()) {
    if (output.empty()) {
      err << "dump needs --out\n";
      return kUsageError;
    }
    try {
      const WeightTensor t = select_tensor(config, selector);
      std::ofstream file(output, std::ios::binary);
      if (!file) throw Error(ErrorCode::format_error, "cannot open " + output);
      write_tensor(file, t);
    } catch (const CLI::ValidationError& e) {
      err << e.what() << "\n";
      return kUsageError;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return e.code() == ErrorCode::format_error ? kResidualFailure : kDegenerateGeometry;
    }
    return kPass;
  }

  const RunResult result = run(config);
  const std::string text = result.report.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    file << text;
    if (!file) {
      err << "cannot write " << output << "\n";
      return kResidualFailure;
    }
  }
  return result.exit_code;
}

}  // namespace tpsi::cli
