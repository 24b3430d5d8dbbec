// tensordirac: verification suites and small demonstrations.
//
//   tensordirac verify <suite|all> [--backend exact|float] [--tolerance x]
//                      [--fd-step h] [--seed n] [--samples n]
//                      [--out file] [--format json|markdown]
//   tensordirac demo gamma-matrices | plane-wave | boost | gauge
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tensordirac/dirac.hpp"
#include "tensordirac/gamma.hpp"
#include "tensordirac/literal.hpp"
#include "tensordirac/solution_spec.hpp"
#include "tensordirac/spin.hpp"
#include "tensordirac/suites.hpp"

using namespace tensordirac;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

double tidy(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

MultiVectorF tidy(const MultiVectorF& u) {
  MultiVectorF w;
  for (unsigned a = 0; a < kBladeCount; ++a) w[a] = Cplx(tidy(u[a].real()), tidy(u[a].imag()));
  return w;
}

std::string entry(const Cplx& z) {
  char buf[64];
  double re = tidy(z.real()), im = tidy(z.imag());
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%g", re);
  else if (re == 0.0)
    std::snprintf(buf, sizeof buf, "%gi", im);
  else
    std::snprintf(buf, sizeof buf, "%g%+gi", re, im);
  return buf;
}

std::string matrix_text(const Mat4<Cplx>& m) {
  std::ostringstream os;
  for (int n = 0; n < 4; ++n) {
    os << "  [";
    for (int k = 0; k < 4; ++k) {
      std::string e = entry(m(n, k));
      os << std::string(e.size() < 6 ? 6 - e.size() : 0, ' ') << e;
    }
    os << " ]\n";
  }
  return os.str();
}

std::string matrix_text(const Mat4R& m) {
  std::ostringstream os;
  char buf[32];
  for (const auto& r : m) {
    os << "  [";
    for (double x : r) {
      std::snprintf(buf, sizeof buf, " %10.6f", tidy(x));
      os << buf;
    }
    os << " ]\n";
  }
  return os.str();
}

std::vector<SpacetimePoint> demo_points() {
  return {SpacetimePoint{{0.0, 0.0, 0.0, 0.0}}, SpacetimePoint{{0.3, -0.7, 1.1, 0.2}},
          SpacetimePoint{{-1.5, 0.4, 0.0, -0.9}}, SpacetimePoint{{2.0, 1.0, -1.0, 0.5}}};
}

struct DemoResult {
  json data;
  std::string text;
  bool pass = true;
};

DemoResult demo_gamma() {
  DemoResult r;
  auto g = gamma_matrices(default_generators<Cplx>());
  auto dirac = standard_dirac_matrices<Cplx>();
  std::ostringstream os;
  for (int mu = 0; mu < kDim; ++mu) {
    os << "gamma^" << mu << " = gamma(e^" << mu << ")\n" << matrix_text(g[mu]);
    r.data["gamma"].push_back(matrix_json(g[mu]));
    r.pass = r.pass && distance(g[mu], dirac[mu]) == 0.0;
  }
  os << "matches the standard Dirac representation: " << (r.pass ? "yes" : "no") << "\n";
  r.data["matches_dirac"] = r.pass;
  r.text = os.str();
  return r;
}

DemoResult demo_plane_wave(const SolutionSpec& spec) {
  DemoResult r;
  const IdealBasisF basis = idempotent(default_generators<Cplx>());
  QEDConfig cfg;
  cfg.mass = spec.mass;
  Solution sol = build_solution(spec, basis);
  auto pts = demo_points();
  double tensor = 0.0, dirac = 0.0;
  const GammaSet gam = gamma_matrices(basis);
  const SpinorField column = column_field(sol.psi, basis);
  for (const auto& p : pts) {
    tensor = std::max(tensor, max_abs(tensor_residual(sol.psi, sol.a, cfg, basis.gen, p)));
    dirac = std::max(dirac, max_abs(dirac_residual(column, sol.a, cfg, gam, p)));
  }
  r.pass = tensor <= 1e-10 && dirac <= 1e-10;
  const Vec4& k = sol.wave.momentum();
  std::ostringstream os;
  os << "branch " << spec.branch << ", m = " << spec.mass << ", p_mu = (" << k[0] << ", " << k[1] << ", "
     << k[2] << ", " << k[3] << ")\n";
  os << "Psi(0) = " << format_multivector(tidy(sol.psi(pts[0]))) << "\n";
  os << "A(0)   = " << format_multivector(tidy(sol.a(pts[0]))) << "\n";
  os << "max |tensor residual| = " << tensor << "\n";
  os << "max |Dirac residual|  = " << dirac << "\n";
  r.text = os.str();
  r.data = {{"spec", spec.to_json()},
            {"momentum", k},
            {"psi_at_origin", format_multivector(tidy(sol.psi(pts[0])))},
            {"tensor_residual", tensor},
            {"dirac_residual", dirac},
            {"pass", r.pass}};
  return r;
}

DemoResult demo_boost(double rapidity, double mass, int branch) {
  DemoResult r;
  const IdealBasisF basis = idempotent(default_generators<Cplx>());
  SpinElement s = exp_bivector(MultiVectorF::blade(0b0011), rapidity);
  LorentzMatrix p = vector_rep(s);
  QEDConfig cfg;
  cfg.mass = mass;
  cfg.tolerance = 1e-8;
  auto pts = demo_points();
  PlaneWave rest = rest_frame_solution(branch, mass);
  PlaneWave moved = boost_plane_wave(rest, s, basis);
  EquivalenceReport before = equivalence_check(rest.field(), EMPotential::zero(), cfg, basis, pts);
  EquivalenceReport after = equivalence_check(moved.field(), EMPotential::zero(), cfg, basis, pts);
  CovarianceReport cov = covariance_check(s, even_from_column(rest.field(), basis), EMPotential::zero(), cfg,
                                          basis, pts);
  r.pass = before.ok() && after.ok() && cov.ok() && after.max_dirac() <= 1e-8;

  std::ostringstream os;
  os << "S = exp(e01, " << rapidity << ") = " << format_multivector(tidy(s.value())) << "\n";
  os << "P (row mu = components of S* e^mu S):\n" << matrix_text(p.P());
  os << "p^0_0 = " << p(0, 0) << ", cosh(" << rapidity << ") = " << std::cosh(rapidity) << "\n";
  os << "boosted momentum p'_mu = (" << moved.momentum()[0] << ", " << moved.momentum()[1] << ", "
     << moved.momentum()[2] << ", " << moved.momentum()[3] << ")\n";
  os << "rest frame residuals: tensor " << before.max_tensor() << ", Dirac " << before.max_dirac() << "\n";
  os << "boosted residuals:    tensor " << after.max_tensor() << ", Dirac " << after.max_dirac() << "\n";
  for (const auto& c : cov.claims)
    os << "covariance (" << c.id << "): identity " << c.identity_residual << ", equation "
       << c.equation_residual << "\n";
  r.text = os.str();
  r.data = {{"S", format_multivector(tidy(s.value()))},
            {"P", matrix_json(p.P())},
            {"p00", p(0, 0)},
            {"momentum", moved.momentum()},
            {"residual_before", {{"tensor", before.max_tensor()}, {"dirac", before.max_dirac()}}},
            {"residual_after", {{"tensor", after.max_tensor()}, {"dirac", after.max_dirac()}}},
            {"pass", r.pass}};
  for (const auto& c : cov.claims)
    r.data["covariance"][c.id] = {{"identity", c.identity_residual}, {"equation", c.equation_residual}};
  return r;
}

DemoResult demo_gauge(double slope, double mass, int branch) {
  DemoResult r;
  const GeneratorSetF gen = default_generators<Cplx>();
  const IdealBasisF basis = idempotent(gen);
  QEDConfig cfg;
  cfg.mass = mass;
  FormField psi = even_from_column(rest_frame_solution(branch, mass).field(), basis);
  ScalarFunction lambda = ScalarFunction::affine(0.25, Vec4{slope, -0.5 * slope, 0.0, slope});
  GaugedPair g = gauge_transform(psi, EMPotential::zero(), lambda, gen);
  const SpacetimePoint x{{0.3, -0.7, 1.1, 0.2}};
  double before = max_abs(tensor_residual(psi, EMPotential::zero(), cfg, gen, x));
  double after = max_abs(tensor_residual(g.psi, g.a, cfg, gen, x));
  double dj = distance(current(g.psi(x), gen.H()), current(psi(x), gen.H()));
  r.pass = before <= 1e-9 && after <= 1e-9 && dj <= 1e-12;

  std::ostringstream os;
  os << "lambda(x) = 0.25 + " << slope << " (x0 - x1/2 + x3)\n";
  os << "at x = (0.3, -0.7, 1.1, 0.2):\n";
  os << "  exp(lambda I) = " << format_multivector(tidy(gauge_factor(lambda.value(x), gen.I()))) << "\n";
  os << "  Psi  = " << format_multivector(tidy(psi(x))) << "\n";
  os << "  Psi' = " << format_multivector(tidy(g.psi(x))) << "\n";
  os << "  A'   = " << format_multivector(tidy(g.a(x))) << "\n";
  os << "  |residual| before " << before << ", after " << after << "\n";
  os << "  |J' - J| = " << dj << "\n";
  r.text = os.str();
  r.data = {{"psi", format_multivector(tidy(psi(x)))},
            {"psi_gauged", format_multivector(tidy(g.psi(x)))},
            {"potential_gauged", format_multivector(tidy(g.a(x)))},
            {"residual_before", before},
            {"residual_after", after},
            {"current_change", dj},
            {"pass", r.pass}};
  return r;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "tensordirac: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exterior-form Dirac equation toolkit: verification suites and demos"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string backend;
  std::string format = "json";
  std::string out_path;
  app.add_option("--backend", backend, "exact or float (default: per suite)")
      ->check(CLI::IsMember({"exact", "float"}))
      ->envname("TENSORDIRAC_BACKEND");
  app.add_option("--tolerance", cfg.tolerance, "algebraic tolerance")
      ->envname("TENSORDIRAC_TOLERANCE")
      ->capture_default_str();
  app.add_option("--fd-step", cfg.fd_step, "central-difference step")
      ->envname("TENSORDIRAC_FD_STEP")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->envname("TENSORDIRAC_SEED")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random samples per check")
      ->envname("TENSORDIRAC_SAMPLES")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout")->envname("TENSORDIRAC_OUT");
  auto* format_opt = app.add_option("--format", format, "json or markdown")
                         ->check(CLI::IsMember({"json", "markdown"}))
                         ->envname("TENSORDIRAC_FORMAT")
                         ->capture_default_str();

  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));

  std::string what;
  double mass = 1.0;
  int branch = 1;
  double rapidity = 0.5;
  double slope = 0.7;
  auto* demo = app.add_subcommand("demo", "print a worked example");
  demo->add_option("what", what, "demo name")
      ->required()
      ->check(CLI::IsMember({"gamma-matrices", "plane-wave", "boost", "gauge"}));
  demo->add_option("--mass", mass, "particle mass")->check(CLI::NonNegativeNumber)->capture_default_str();
  demo->add_option("--branch", branch, "rest-frame solution 1..4")->check(CLI::Range(1, 4))->capture_default_str();
  demo->add_option("--rapidity", rapidity, "boost rapidity along x^1")->capture_default_str();
  demo->add_option("--lambda-slope", slope, "gradient scale of the gauge function")->capture_default_str();
  std::string spec_path;
  demo->add_option("--spec", spec_path, "plane-wave: JSON solution spec (mass, branch, momentum, gauge)")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!backend.empty()) cfg.backend = backend_from_string(backend);
    cfg.format = format == "markdown" ? ReportFormat::markdown : ReportFormat::json;
    cfg.validate();

    if (verify->parsed()) {
      Report rep = run_verify(suite, cfg);
      std::string text = cfg.format == ReportFormat::json ? rep.to_json().dump(2) + "\n" : rep.to_markdown();
      int io = emit(text, out_path);
      if (io != 0) return io;
      return rep.pass() ? 0 : kExitFail;
    }

    DemoResult r;
    if (what == "gamma-matrices")
      r = demo_gamma();
    else if (what == "plane-wave") {
      SolutionSpec spec;
      spec.mass = mass;
      spec.branch = branch;
      if (!spec_path.empty()) {
        std::ifstream f(spec_path);
        json j = json::parse(f, nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("cannot parse " + spec_path + " as JSON");
        spec = SolutionSpec::from_json(j);
      }
      r = demo_plane_wave(spec);
    }
    else if (what == "boost")
      r = demo_boost(rapidity, mass, branch);
    else
      r = demo_gauge(slope, mass, branch);
    bool as_json = format_opt->count() > 0 && format == "json";
    int io = emit(as_json ? r.data.dump(2) + "\n" : r.text, out_path);
    if (io != 0) return io;
    return r.pass ? 0 : kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tensordirac: " << e.what() << "\n";
    return kExitUsage;
  }
}
