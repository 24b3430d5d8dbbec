#include "tensordirac/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numbers>
#include <cmath>
#include <random>
#include <stdexcept>

#include "tensordirac/dirac.hpp"
#include "tensordirac/gamma.hpp"
#include "tensordirac/generators.hpp"
#include "tensordirac/multivector.hpp"
#include "tensordirac/spin.hpp"

namespace tensordirac {

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend backend_from_string(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "float") return Backend::floating;
  throw std::invalid_argument("backend must be exact or float, got '" + s + "'");
}

void RunConfig::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd-step must be positive");
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
}

double RunConfig::analytic_tolerance() const { return std::max(tolerance, 1e-9); }
double RunConfig::fd_tolerance() const { return std::max(tolerance, 1e-7); }

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"backend", cfg.backend ? to_string(*cfg.backend) : "auto"},
          {"tolerance", cfg.tolerance},
          {"fd_step", cfg.fd_step},
          {"seed", cfg.seed},
          {"samples", cfg.samples},
          {"format", cfg.format == ReportFormat::json ? "json" : "markdown"}};
}

nlohmann::json matrix_json(const Mat4<Cplx>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n < 4; ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) row.push_back({m(n, k).real(), m(n, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json matrix_json(const Mat4R& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m) rows.push_back({r[0], r[1], r[2], r[3]});
  return rows;
}

namespace {

using MF = MultiVectorF;
using MQ = MultiVectorQ;

// Each suite draws from its own stream so that a suite gives the same
// numbers alone and inside "all".
std::mt19937_64 stream_for(const std::string& suite, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

template <class S>
double exact_or(double tol) {
  return ScalarTraits<S>::exact ? 0.0 : tol;
}

// ---------------------------------------------------------------------------

template <class S>
void algebra_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  using MV = MultiVector<S>;
  using T = ScalarTraits<S>;
  const double tol = exact_or<S>(cfg.tolerance);
  const int n = cfg.samples;

  double clifford = 0.0;
  for (int mu = 0; mu < kDim; ++mu)
    for (int nu = 0; nu < kDim; ++nu) {
      MV g = mu == nu ? MV::scalar(T::from_int(kMetric[mu])) : MV();
      clifford = std::max(clifford, distance(anticommutator(MV::basis(mu), MV::basis(nu)),
                                             T::from_int(2) * g));
    }
  out.add("algebra.clifford", "e^mu e^nu + e^nu e^mu = 2 g^{mu nu}", clifford, tol);

  double hodge = 0.0;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    MV u = MV::blade(a);
    int k = std::popcount(a);
    MV expected = (k % 2 == 1) ? u : MV(-u);
    hodge = std::max(hodge, distance(hodge_star(hodge_star(u)), expected));
  }
  out.add("algebra.hodge_involution", "star star U = (-1)^{k+1} U, U in Lambda_k", hodge, tol);

  double uv = 0.0;
  for (int j = 0; j < n; ++j) {
    MV u = random_real_grade<S>(rng, 1);
    for (unsigned a = 0; a < kBladeCount; ++a) {
      MV v = MV::blade(a);
      uv = std::max(uv, distance(u * v, wedge(u, v) - hodge_star(wedge(u, hodge_star(v)))));
    }
    MV v = random_multivector<S>(rng);
    uv = std::max(uv, distance(u * v, wedge(u, v) - hodge_star(wedge(u, hodge_star(v)))));
  }
  out.add("algebra.one_form_product", "UV = U ^ V - star(U ^ star V), U in Lambda_1", uv, tol);

  double assoc = 0.0, antiauto = 0.0, cyclic = 0.0, volume = 0.0, graded = 0.0;
  const MV ell = MV::volume();
  for (int j = 0; j < n; ++j) {
    MV u = random_multivector<S>(rng);
    MV v = random_multivector<S>(rng);
    MV w = random_multivector<S>(rng);
    assoc = std::max(assoc, distance((u * v) * w, u * (v * w)));
    antiauto = std::max(antiauto, distance(star_conj(u * v), star_conj(v) * star_conj(u)));
    cyclic = std::max(cyclic, T::magnitude(trace(u * v) - trace(v * u)));
    volume = std::max(volume, max_abs(commutator(ell, even_part(u))));
    volume = std::max(volume, max_abs(anticommutator(ell, odd_part(u))));
    std::uniform_int_distribution<int> grade(0, kDim);
    int k = grade(rng), l = grade(rng);
    MV a = random_real_grade<S>(rng, k);
    MV b = random_real_grade<S>(rng, l);
    MV swapped = ((k * l) % 2) ? MV(-wedge(b, a)) : wedge(b, a);
    graded = std::max(graded, distance(wedge(a, b), swapped));
  }
  out.add("algebra.associativity", "(UV)W = U(VW)", assoc, tol);
  out.add("algebra.star_antiautomorphism", "(UV)* = V* U*", antiauto, tol);
  out.add("algebra.trace_cyclic", "Tr(UV) = Tr(VU)", cyclic, tol);
  out.add("algebra.volume_commutation", "l U_even = U_even l, l U_odd = -U_odd l", volume, tol);
  out.add("algebra.wedge_graded", "U ^ V = (-1)^{kl} V ^ U", graded, tol);
}

// ---------------------------------------------------------------------------

template <class S>
MultiVector<S> suite_spin(std::mt19937_64& rng) {
  if constexpr (ScalarTraits<S>::exact)
    return random_rational_spin(rng);
  else
    return random_spin(rng).value();
}

template <class S>
void generators_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  using MV = MultiVector<S>;
  using T = ScalarTraits<S>;
  const double tol = exact_or<S>(cfg.tolerance);
  const GeneratorSet<S> gen = default_generators<S>();

  auto worst = [](const ValidationReport& r) {
    double m = 0.0;
    for (const auto& c : r.conditions) m = std::max(m, c.residual);
    return m;
  };
  ValidationReport def = validate_generators(gen.H(), gen.I(), gen.K(), cfg.tolerance);
  out.add("generators.default_conditions", "H^2 = 1, I^2 = K^2 = -1, [H,I] = [H,K] = {I,K} = 0",
          def.ok() ? worst(def) : 1.0, cfg.tolerance, def.failures());

  const int conj_count = std::min(cfg.samples, 100);
  double conj_worst = 0.0;
  std::string conj_fail;
  for (int j = 0; j < conj_count; ++j) {
    MV s = suite_spin<S>(rng);
    MV sc = star_conj(s);
    ValidationReport r = validate_generators(sc * gen.H() * s, sc * gen.I() * s, sc * gen.K() * s,
                                             cfg.tolerance);
    conj_worst = std::max(conj_worst, r.ok() ? worst(r) : 1.0);
    if (!r.ok() && conj_fail.empty()) conj_fail = r.failures();
  }
  out.add("generators.conjugated_conditions", "S* H S, S* I S, S* K S satisfy the generator relations",
          conj_worst, cfg.tolerance, conj_fail);

  out.add("generators.basis16_rank", "16 products of l, H, I, K span Lambda",
          std::abs(coefficient_rank(basis16(gen)) - 16), 0.0);

  const IdealBasis<S> b = idempotent(gen);
  double idem = std::max({distance(b.t * b.t, b.t), distance(gen.H() * b.t, b.t),
                          distance(gen.I() * b.t, T::i() * b.t)});
  out.add("generators.idempotent", "t^2 = t, H t = t, I t = i t", idem, tol);

  double ortho = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int m = 0; m < 4; ++m)
      ortho = std::max(ortho, T::magnitude(inner(b.tk[k], b.tk[m], gen) - (k == m ? T::one() : T::zero())));
  out.add("generators.orthonormal", "(t_k, t_n) = delta_kn", ortho, tol);

  out.add("generators.ideal_dimension", "dim_C I(t) = 4", std::abs(ideal_dimension(b) - 4), 0.0);
  out.add("generators.even_map_rank", "Psi -> Psi t injective on real even forms",
          std::abs(even_map_rank(b) - 8), 0.0);

  double round = 0.0, herm = 0.0;
  for (int j = 0; j < cfg.samples; ++j) {
    MV psi = random_real_even<S>(rng);
    round = std::max(round, distance(solve_ideal_equation(psi * b.t, b), psi));
    MV phi = random_multivector<S>(rng) * b.t;
    MV chi = random_multivector<S>(rng) * b.t;
    herm = std::max(herm, T::magnitude(inner(phi, chi, gen) - T::conj(inner(chi, phi, gen))));
  }
  out.add("generators.even_roundtrip", "Psi t = Phi has the unique even real solution Psi", round, tol);
  out.add("generators.inner_hermitian", "(U, V) = conj (V, U) on I(t)", herm, tol);
}

// ---------------------------------------------------------------------------

template <class S>
void gamma_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  using MV = MultiVector<S>;
  using T = ScalarTraits<S>;
  const double tol = exact_or<S>(cfg.tolerance);
  const IdealBasis<S> b = idempotent(default_generators<S>());
  const auto g = gamma_matrices(b);
  const auto dirac = standard_dirac_matrices<S>();

  double disp = 0.0;
  for (int mu = 0; mu < kDim; ++mu) disp = std::max(disp, distance(g[mu], dirac[mu]));
  Check& shown = out.add("gamma.dirac_matrices", "gamma(e^mu) = standard Dirac gamma^mu", disp, tol);
  for (int mu = 0; mu < kDim; ++mu) {
    Mat4<Cplx> m;
    for (int n = 0; n < 4; ++n)
      for (int k = 0; k < 4; ++k) m(n, k) = T::to_cplx(g[mu](n, k));
    shown.data.push_back(matrix_json(m));
  }

  std::vector<std::vector<S>> rows;
  for (unsigned a = 0; a < kBladeCount; ++a) rows.push_back(gamma(MV::blade(a), b).flatten());
  out.add("gamma.faithful", "gamma of the 16 basis blades: rank 16", std::abs(matrix_rank(rows) - 16), 0.0);

  double cliff = 0.0;
  for (int mu = 0; mu < kDim; ++mu)
    for (int nu = 0; nu < kDim; ++nu) {
      Mat4<S> expect = mu == nu ? T::from_int(2 * kMetric[mu]) * Mat4<S>::identity() : Mat4<S>();
      cliff = std::max(cliff, distance(g[mu] * g[nu] + g[nu] * g[mu], expect));
    }
  out.add("gamma.clifford", "gamma^mu gamma^nu + gamma^nu gamma^mu = 2 g^{mu nu}", cliff, tol);

  double hom = 0.0, adj = 0.0;
  const MV h = b.gen.H();
  for (int j = 0; j < cfg.samples; ++j) {
    MV u = random_multivector<S>(rng);
    MV v = random_multivector<S>(rng);
    hom = std::max(hom, distance(gamma(u * v, b), gamma(u, b) * gamma(v, b)));
    adj = std::max(adj, distance(gamma(dagger_unchecked(u, h), b), gamma(u, b).conj_transpose()));
  }
  out.add("gamma.homomorphism", "gamma(UV) = gamma(U) gamma(V)", hom, tol);
  out.add("gamma.adjoint", "gamma(H U* H) = gamma(U)^dagger", adj, tol);
}

// ---------------------------------------------------------------------------

MF random_complex_coefficient(std::mt19937_64& rng) { return random_multivector<Cplx>(rng); }
MF random_even_coefficient(std::mt19937_64& rng) { return random_real_even<Cplx>(rng); }
MF random_one_form(std::mt19937_64& rng) { return random_real_grade<Cplx>(rng, 1); }

void fields_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  const double tol = cfg.analytic_tolerance();
  double split = 0.0, hodge = 0.0, dd = 0.0, deldel = 0.0;
  for (int j = 0; j < cfg.samples; ++j) {
    FormField f = random_form_field(rng, random_complex_coefficient);
    FormField df = differential_field(f);
    FormField delf = codifferential_field(f);
    for (int k = 0; k < 5; ++k) {
      SpacetimePoint p = random_point(rng);
      MF lhs = dirac_operator(f, p);
      MF del = codifferential(f, p);
      split = std::max(split, distance(lhs, differential(f, p) - del));
      hodge = std::max(hodge, distance(del, codifferential_via_hodge(f, p)));
      dd = std::max(dd, max_abs(differential(df, p)));
      deldel = std::max(deldel, max_abs(codifferential(delf, p)));
    }
  }
  out.add("fields.dirac_split", "e^mu d_mu F = dF - delta F", split, tol);
  out.add("fields.codifferential_hodge", "delta F = star d star F", hodge, tol);
  out.add("fields.d_squared", "d d F = 0", dd, tol);
  out.add("fields.delta_squared", "delta delta F = 0", deldel, tol);
}

// ---------------------------------------------------------------------------

struct SolutionFamily {
  std::vector<PlaneWave> waves;
};

SolutionFamily solution_family(std::mt19937_64& rng, const IdealBasisF& basis, double mass, int boosted) {
  SolutionFamily fam;
  for (int branch = 1; branch <= 4; ++branch) fam.waves.push_back(rest_frame_solution(branch, mass));
  std::uniform_int_distribution<int> pick(1, 4);
  for (int j = 0; j < boosted; ++j)
    fam.waves.push_back(boost_plane_wave(rest_frame_solution(pick(rng), mass), random_spin(rng), basis));
  return fam;
}

std::vector<SpacetimePoint> points(std::mt19937_64& rng, int n, double scale = 2.0) {
  std::vector<SpacetimePoint> out;
  for (int j = 0; j < n; ++j) out.push_back(random_point(rng, scale));
  return out;
}

void equivalence_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  const double tol = cfg.analytic_tolerance();
  const IdealBasisF basis = idempotent(default_generators<Cplx>());
  QEDConfig qed;
  qed.tolerance = tol;
  qed.fd_step = cfg.fd_step;
  std::uniform_real_distribution<double> mass(0.0, 2.0);

  double inter = 0.0;
  bool agree = true;
  for (int j = 0; j < cfg.samples; ++j) {
    qed.mass = mass(rng);
    FormField psi = random_form_field(rng, random_even_coefficient);
    EMPotential a = EMPotential::from_field(random_form_field(rng, random_one_form, 2));
    auto pts = points(rng, 3);
    EquivalenceReport r = equivalence_check(psi, a, qed, basis, pts);
    inter = std::max(inter, r.max_intertwining());
    agree = agree && r.solutions_agree;
  }
  out.add("equivalence.intertwining", "components of (tensor residual) H t = Dirac residual", inter, tol);
  out.add_flag("equivalence.solutions_agree", "tensor residual = 0 iff Dirac residual = 0", agree);

  qed.mass = 1.0;
  SolutionFamily fam = solution_family(rng, basis, qed.mass, 20);
  double rest = 0.0, boosted = 0.0;
  for (std::size_t w = 0; w < fam.waves.size(); ++w) {
    auto pts = points(rng, 5);
    EquivalenceReport r = equivalence_check(fam.waves[w].field(), EMPotential::zero(), qed, basis, pts);
    double worst = std::max({r.max_tensor(), r.max_dirac(), r.max_intertwining()});
    (w < 4 ? rest : boosted) = std::max(w < 4 ? rest : boosted, worst);
  }
  out.add("equivalence.rest_frame", "both equations vanish on the four rest-frame solutions", rest, tol);
  out.add("equivalence.boosted", "both equations vanish on boosted solutions", boosted, tol);
}

// ---------------------------------------------------------------------------

QComplex q(const Rational& r) { return QComplex(r); }

// (c, s) on the rational unit circle from the half-angle tangent u.
std::pair<Rational, Rational> unit_circle(const Rational& u) {
  Rational d = 1 + u * u;
  return {(1 - u * u) / d, 2 * u / d};
}

void gauge_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  const double tol = cfg.analytic_tolerance();
  const GeneratorSetF gen = default_generators<Cplx>();
  const IdealBasisF basis = idempotent(gen);
  QEDConfig qed;
  qed.tolerance = tol;
  std::uniform_real_distribution<double> mass(0.0, 2.0);

  double cov = 0.0, lag = 0.0;
  for (int j = 0; j < cfg.samples; ++j) {
    qed.mass = mass(rng);
    FormField psi = random_form_field(rng, random_even_coefficient);
    EMPotential a = EMPotential::from_field(random_form_field(rng, random_one_form, 2));
    ScalarFunction lambda = random_scalar_function(rng);
    GaugedPair g = gauge_transform(psi, a, lambda, gen);
    for (int k = 0; k < 3; ++k) {
      SpacetimePoint p = random_point(rng);
      MF e = gauge_factor(lambda.value(p), gen.I());
      cov = std::max(cov, distance(tensor_residual(g.psi, g.a, qed, gen, p),
                                   tensor_residual(psi, a, qed, gen, p) * e));
      lag = std::max(lag, std::abs(lagrangian(g.psi, g.a, qed, gen, p) - lagrangian(psi, a, qed, gen, p)));
    }
  }
  out.add("gauge.residual_covariance", "residual(Psi exp(lambda I), A - d lambda) = residual(Psi, A) exp(lambda I)",
          cov, tol);
  out.add("gauge.lagrangian_invariance", "L(Psi exp(lambda I), A - d lambda) = L(Psi, A)", lag, tol);

  // A rest-frame solution with A = 0, gauged by a linear lambda, still solves.
  qed.mass = 1.0;
  double sol = 0.0;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int branch = 1; branch <= 4; ++branch) {
    FormField psi = even_from_column(rest_frame_solution(branch, 1.0).field(), basis);
    Vec4 k{u(rng), u(rng), u(rng), u(rng)};
    GaugedPair g = gauge_transform(psi, EMPotential::zero(), ScalarFunction::affine(u(rng), k), gen);
    for (const auto& p : points(rng, 5)) sol = std::max(sol, max_abs(tensor_residual(g.psi, g.a, qed, gen, p)));
  }
  out.add("gauge.solutions_map_to_solutions", "gauged rest-frame solutions solve the gauged equation", sol, tol);

  // Exact part: rational points of the unit circle.
  const GeneratorSet<QComplex> gq = default_generators<QComplex>();
  const MQ one = MQ::one();
  double cur = 0.0, u1 = 0.0;
  for (int j = 0; j < cfg.samples; ++j) {
    auto [c1, s1] = unit_circle(ScalarTraits<QComplex>::random_rational(rng));
    auto [c2, s2] = unit_circle(ScalarTraits<QComplex>::random_rational(rng));
    MQ e1 = gauge_factor(q(c1), q(s1), gq.I());
    MQ e2 = gauge_factor(q(c2), q(s2), gq.I());
    MQ psi = random_real_even<QComplex>(rng);
    cur = std::max(cur, distance(current(MQ(psi * e1), gq.H()), current(psi, gq.H())));
    u1 = std::max(u1, distance(star_conj(e1) * e1, one));
    u1 = std::max(u1, distance(e1 * e2, gauge_factor(q(c1 * c2 - s1 * s2), q(s1 * c2 + c1 * s2), gq.I())));
    u1 = std::max(u1, max_abs(commutator(e1, gq.H())));
    u1 = std::max(u1, distance(e1 * gauge_factor(q(c1), q(-s1), gq.I()), one));
  }
  out.add("gauge.current_invariance", "J(Psi exp(lambda I)) = J(Psi), exact", cur, 0.0);
  out.add("gauge.u1_identities", "E* E = 1, E(a) E(b) = E(a+b), [E, H] = 0, exact", u1, 0.0);
}

// ---------------------------------------------------------------------------

void conservation_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  const GeneratorSetF gen = default_generators<Cplx>();
  const IdealBasisF basis = idempotent(gen);
  QEDConfig qed;
  qed.fd_step = cfg.fd_step;
  qed.tolerance = cfg.analytic_tolerance();

  SolutionFamily fam = solution_family(rng, basis, qed.mass, 20);
  double cons = 0.0, onshell = 0.0;
  for (const auto& w : fam.waves) {
    FormField psi = even_from_column(w.field(), basis);
    for (const auto& p : points(rng, 5)) {
      cons = std::max(cons, charge_conservation_residual(psi, qed, gen, p));
      onshell = std::max(onshell, std::abs(lagrangian_complex(psi, EMPotential::zero(), qed, gen, p)));
    }
  }
  out.add("conservation.current", "delta J = 0 on solutions, J = Psi H Psi*", cons, cfg.fd_tolerance(),
          "central differences, step " + std::to_string(cfg.fd_step));
  out.add("conservation.lagrangian_on_shell", "L = 0 on solutions", onshell, cfg.analytic_tolerance());

  double imag = 0.0;
  for (int j = 0; j < cfg.samples; ++j) {
    FormField psi = random_form_field(rng, random_even_coefficient);
    EMPotential a = EMPotential::from_field(random_form_field(rng, random_one_form, 2));
    SpacetimePoint p = random_point(rng);
    imag = std::max(imag, std::abs(lagrangian_complex(psi, a, qed, gen, p).imag()));
  }
  out.add("conservation.lagrangian_real", "Im L = 0", imag, cfg.tolerance);
}

// ---------------------------------------------------------------------------

void spin_suite(SuiteResult& out, const RunConfig& cfg, std::mt19937_64& rng) {
  const double tol = cfg.tolerance;
  double metric = 0.0, det = 0.0, hom = 0.0, recon = 0.0, closure = 0.0;
  bool orthochronous = true;
  for (int j = 0; j < cfg.samples; ++j) {
    SpinElement s1 = random_spin(rng);
    SpinElement s2 = random_spin(rng);
    LorentzMatrix p1 = vector_rep(s1);
    LorentzMatrix p2 = vector_rep(s2);
    metric = std::max(metric, LorentzMatrix::metric_defect(p1.P()));
    det = std::max(det, std::abs(LorentzMatrix::det(p1.P()) - 1.0));
    orthochronous = orthochronous && p1(0, 0) > 0.0;
    MF prod = s1.value() * s2.value();
    closure = std::max(closure, distance(star_conj(prod) * prod, MF::one()));
    hom = std::max(hom, max_abs_diff(vector_rep(s1 * s2).P(), matmul(p1.P(), p2.P())));
    auto [a, b] = spin_from_lorentz(p1);
    recon = std::max(recon, std::min(distance(a.value(), s1.value()), distance(b.value(), s1.value())));
  }
  out.add("spin.lorentz_metric", "P^T g P = g", metric, tol);
  out.add("spin.lorentz_det", "det P = 1", det, tol);
  out.add_flag("spin.orthochronous", "p^0_0 > 0", orthochronous);
  out.add("spin.closure", "(S1 S2)* (S1 S2) = 1", closure, tol);
  out.add("spin.homomorphism", "P(S1 S2) = P(S1) P(S2)", hom, tol);
  out.add("spin.reconstruction", "P -> {S, -S}", recon, std::max(tol, 1e-10));

  double leak = 0.0;
  for (int j = 0; j < std::min(cfg.samples, 100); ++j) leak = std::max(leak, grade_leakage(random_rational_spin(rng)));
  out.add("spin.grade_preservation", "S* U S in Lambda_k for U in Lambda_k, exact", leak, 0.0);

  DoubleCover dc = double_cover_demo();
  Check& cover = out.add("spin.double_cover", "rotation by 2 pi in the 1-2 plane: S = -1 while P = Id",
                         std::max({dc.full_turn_plus_one, dc.matrix_identity_error, dc.half_turn_matrix_error}),
                         tol);
  cover.data = {{"S_full_turn_scalar", dc.full_turn[0].real()},
                {"P_full_turn", matrix_json(vector_rep(exp_bivector(MF::blade(0b0110), 2.0 * std::numbers::pi)).P())}};

  const IdealBasisF basis = idempotent(default_generators<Cplx>());
  QEDConfig qed;
  qed.tolerance = cfg.analytic_tolerance();
  std::array<double, 3> on{}, off{};
  std::string where;
  SolutionFamily fam = solution_family(rng, basis, qed.mass, 20);
  for (const auto& w : fam.waves) {
    FormField psi = even_from_column(w.field(), basis);
    CovarianceReport r = covariance_check(random_spin(rng), psi, EMPotential::zero(), qed, basis, points(rng, 3));
    for (int c = 0; c < 3; ++c)
      on[c] = std::max({on[c], r.claims[c].identity_residual, r.claims[c].equation_residual});
    if (!r.ok() && where.empty()) where = r.failures();
  }
  std::uniform_real_distribution<double> mass(0.0, 2.0);
  for (int j = 0; j < std::min(cfg.samples, 50); ++j) {
    qed.mass = mass(rng);
    FormField psi = random_form_field(rng, random_even_coefficient);
    EMPotential a = EMPotential::from_field(random_form_field(rng, random_one_form, 2));
    CovarianceReport r = covariance_check(random_spin(rng), psi, a, qed, basis, points(rng, 2), false);
    for (int c = 0; c < 3; ++c) off[c] = std::max(off[c], r.claims[c].identity_residual);
  }
  const char* refs[3] = {
      "gamma'^mu (d'_mu psi + i a'_mu psi) + i m psi = 0, gamma'^mu = R^-1 gamma^mu R, psi invariant",
      "gamma^mu (d'_mu (R psi) + i a'_mu R psi) + i m R psi = 0, R = gamma(S)",
      "(d - delta) Psi + A Psi I + m Psi H I has the same form in x' = P x"};
  const char* ids[3] = {"a", "b", "c"};
  for (int c = 0; c < 3; ++c) {
    out.add(std::string("spin.covariance_") + ids[c], refs[c], on[c], qed.tolerance);
    out.add(std::string("spin.covariance_offshell_") + ids[c], refs[c], off[c], qed.tolerance);
  }
}

template <class Fn>
SuiteResult timed(const std::string& name, const std::string& backend, Fn&& body) {
  SuiteResult r;
  r.suite = name;
  r.backend = backend;
  auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "generators",   "gamma", "fields",
                                              "equivalence", "gauge", "conservation", "spin"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  cfg.validate();
  std::mt19937_64 rng = stream_for(name, cfg.seed);
  const bool algebraic = name == "algebra" || name == "generators" || name == "gamma";
  const Backend backend = algebraic ? cfg.backend.value_or(Backend::exact) : Backend::floating;

  auto dispatch = [&](auto&& exact_fn, auto&& float_fn) {
    return timed(name, to_string(backend), [&](SuiteResult& r) {
      if (backend == Backend::exact)
        exact_fn(r);
      else
        float_fn(r);
    });
  };
  if (name == "algebra")
    return dispatch([&](SuiteResult& r) { algebra_suite<QComplex>(r, cfg, rng); },
                    [&](SuiteResult& r) { algebra_suite<Cplx>(r, cfg, rng); });
  if (name == "generators")
    return dispatch([&](SuiteResult& r) { generators_suite<QComplex>(r, cfg, rng); },
                    [&](SuiteResult& r) { generators_suite<Cplx>(r, cfg, rng); });
  if (name == "gamma")
    return dispatch([&](SuiteResult& r) { gamma_suite<QComplex>(r, cfg, rng); },
                    [&](SuiteResult& r) { gamma_suite<Cplx>(r, cfg, rng); });

  using Body = void (*)(SuiteResult&, const RunConfig&, std::mt19937_64&);
  Body body = name == "fields"        ? fields_suite
              : name == "equivalence" ? equivalence_suite
              : name == "gauge"       ? gauge_suite
              : name == "conservation" ? conservation_suite
                                       : spin_suite;
  return timed(name, to_string(backend), [&](SuiteResult& r) { body(r, cfg, rng); });
}

Report run_verify(const std::string& name, const RunConfig& cfg) {
  if (name != "all" && !is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  cfg.validate();
  Report rep;
  rep.config = config_json(cfg);
  rep.config["suite"] = name;
  auto start = std::chrono::steady_clock::now();
  if (name == "all") {
    for (const auto& s : suite_names()) rep.suites.push_back(run_suite(s, cfg));
  } else {
    rep.suites.push_back(run_suite(name, cfg));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace tensordirac
