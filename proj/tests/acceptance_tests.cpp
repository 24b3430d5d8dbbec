// Runs the thirteen acceptance criteria at their stated sample counts and
// tolerances, one PASS/FAIL line each. Exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tensordirac/dirac.hpp"
#include "tensordirac/spin.hpp"

using namespace tensordirac;

namespace {

using MQ = MultiVectorQ;
using MF = MultiVectorF;
using TQ = ScalarTraits<QComplex>;

int failures = 0;

void report(int n, const std::string& what, double residual, double tol) {
  bool ok = residual <= tol;
  if (!ok) ++failures;
  std::printf("criterion %2d: %s  %-62s residual %.3e  tolerance %.1e\n", n, ok ? "PASS" : "FAIL", what.c_str(),
              residual, tol);
}

void report_flag(int n, const std::string& what, bool ok) { report(n, what, ok ? 0.0 : 1.0, 0.0); }

double qdist(const MQ& a, const MQ& b) { return a == b ? 0.0 : distance(a, b) + 1e-300; }

FormField even_field(std::mt19937_64& rng) {
  return random_form_field(rng, [](std::mt19937_64& r) { return random_real_even<Cplx>(r); });
}

EMPotential random_potential(std::mt19937_64& rng) {
  return EMPotential::from_field(
      random_form_field(rng, [](std::mt19937_64& r) { return random_real_grade<Cplx>(r, 1); }, 2));
}

std::vector<PlaneWave> solution_family(std::mt19937_64& rng, const IdealBasisF& basis, double mass) {
  std::vector<PlaneWave> waves;
  for (int branch = 1; branch <= 4; ++branch) waves.push_back(rest_frame_solution(branch, mass));
  for (int j = 0; j < 20; ++j)
    waves.push_back(boost_plane_wave(rest_frame_solution(1 + j % 4, mass), random_spin(rng), basis));
  return waves;
}

void clifford() {
  double worst = 0.0;
  for (int mu = 0; mu < kDim; ++mu)
    for (int nu = 0; nu < kDim; ++nu) {
      MQ a = MQ::basis(mu), b = MQ::basis(nu);
      MQ want = mu == nu ? MQ::scalar(TQ::from_int(2 * kMetric[mu])) : MQ();
      worst = std::max({worst, qdist(a * b + b * a, want), qdist(oracle::symbolic_product(a, b), a * b)});
    }
  report(1, "e^mu e^nu + e^nu e^mu = 2 g^{mu nu}, 16 pairs, exact", worst, 0.0);
}

void hodge() {
  double worst = 0.0;
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    MQ b = MQ::blade(mask);
    int k = std::popcount(mask);
    MQ sign = MQ::scalar(TQ::from_int(k % 2 == 1 ? 1 : -1));
    worst = std::max({worst, qdist(hodge_star(hodge_star(b)), sign * b), qdist(hodge_star(b), oracle::hodge_definition(b, k))});
  }
  report(2, "star star U = (-1)^{k+1} U, 16 blades, exact", worst, 0.0);
}

void one_form_product(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    MQ u = random_real_grade<QComplex>(rng, 1);
    for (unsigned mask = 0; mask < kBladeCount; ++mask) {
      MQ v = MQ::blade(mask);
      int k = std::popcount(mask);
      MQ star_v = oracle::hodge_definition(v, k);
      MQ rhs = wedge(u, v);
      if (k > 0) rhs -= oracle::hodge_definition(wedge(u, star_v), 5 - k);
      worst = std::max({worst, qdist(oracle::symbolic_product(u, v), rhs), qdist(u * v, rhs)});
    }
  }
  report(3, "UV = U^V - star(U ^ star V), 1000 U x 16 V, exact", worst, 0.0);
}

void generator_conditions(std::mt19937_64& rng) {
  auto gen = default_generators<QComplex>();
  bool ok = validate_generators(gen.H(), gen.I(), gen.K()).ok();
  int moved = 0;
  for (int n = 0; n < 100; ++n) {
    auto conj = conjugate_generators(gen, random_rational_spin(rng));
    ok = ok && validate_generators(conj.H(), conj.I(), conj.K(), 0.0).ok();
    moved += conj.H() != gen.H();
  }
  report_flag(4, "generator conditions, default + 100 conjugated sets", ok && moved == 100);
}

void idempotent_checks() {
  auto gen = default_generators<QComplex>();
  auto b = idempotent(gen);
  double worst = std::max({qdist(b.t * b.t, b.t), qdist(gen.H() * b.t, b.t), qdist(gen.I() * b.t, TQ::i() * b.t)});
  for (int k = 0; k < 4; ++k)
    for (int n = 0; n < 4; ++n) {
      QComplex want = TQ::from_int(k == n ? 1 : 0);
      if (!(inner(b.tk[k], b.tk[n], gen) == want)) worst = std::max(worst, 1.0);
    }
  report(5, "t^2 = t, Ht = t, It = it, (t_k, t_n) = delta_kn, exact", worst, 0.0);
}

void roundtrip(std::mt19937_64& rng) {
  auto bq = idempotent(default_generators<QComplex>());
  auto bf = idempotent(default_generators<Cplx>());
  double exact = 0.0, flt = 0.0;
  for (int n = 0; n < 1000; ++n) {
    MQ psi = random_real_even<QComplex>(rng);
    exact = std::max(exact, qdist(solve_ideal_equation(MQ(psi * bq.t), bq), psi));
    MF pf = random_real_even<Cplx>(rng);
    flt = std::max(flt, distance(solve_ideal_equation(MF(pf * bf.t), bf), pf));
  }
  report(6, "solve(Psi t) = Psi, 1000 even Psi, exact", exact, 0.0);
  report(6, "solve(Psi t) = Psi, 1000 even Psi, float", flt, 1e-12);
}

void gamma_representation(std::mt19937_64& rng) {
  // The four matrices as displayed, entry by entry.
  const int re[4][4][4] = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
                           {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}},
                           {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
                           {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}};
  const int im2[4][4] = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}};
  auto g = gamma_matrices(default_generators<QComplex>());
  bool equal = true;
  for (int mu = 0; mu < 4; ++mu)
    for (int n = 0; n < 4; ++n)
      for (int k = 0; k < 4; ++k) {
        QComplex want(Rational(re[mu][n][k]), Rational(mu == 2 ? im2[n][k] : 0));
        equal = equal && g[mu](n, k) == want;
      }
  report_flag(7, "gamma(e^mu) equals the displayed Dirac matrices, exact", equal);

  auto b = idempotent(default_generators<Cplx>());
  double hom = 0.0;
  for (int n = 0; n < 500; ++n) {
    MF u = random_multivector<Cplx>(rng), v = random_multivector<Cplx>(rng);
    hom = std::max(hom, distance(gamma(u * v, b), gamma(u, b) * gamma(v, b)));
  }
  report(7, "gamma(UV) = gamma(U) gamma(V), 500 pairs", hom, 1e-12);
}

void operator_identity(std::mt19937_64& rng) {
  double split = 0.0, dd = 0.0, deldel = 0.0;
  for (int n = 0; n < 200; ++n) {
    FormField f = random_form_field(rng, [](std::mt19937_64& r) { return random_multivector<Cplx>(r); });
    FormField df = differential_field(f), delf = codifferential_field(f);
    for (int k = 0; k < 10; ++k) {
      SpacetimePoint p = random_point(rng, 2.0);
      split = std::max(split, distance(dirac_operator(f, p), differential(f, p) - codifferential(f, p)));
      dd = std::max(dd, max_abs(differential(df, p)));
      deldel = std::max(deldel, max_abs(codifferential(delf, p)));
    }
  }
  report(8, "e^mu d_mu F = dF - delta F, 200 fields x 10 points", split, 1e-9);
  report(8, "d d F = 0", dd, 1e-9);
  report(8, "delta delta F = 0", deldel, 1e-9);
}

void equivalence(std::mt19937_64& rng) {
  auto basis = idempotent(default_generators<Cplx>());
  std::uniform_real_distribution<double> mass(0.0, 2.0);
  QEDConfig cfg;
  double inter = 0.0;
  for (int n = 0; n < 200; ++n) {
    cfg.mass = mass(rng);
    FormField psi = even_field(rng);
    EMPotential a = random_potential(rng);
    std::vector<SpacetimePoint> pts{random_point(rng, 2.0), random_point(rng, 2.0), random_point(rng, 2.0)};
    inter = std::max(inter, equivalence_check(psi, a, cfg, basis, pts).max_intertwining());
  }
  report(9, "components of (tensor residual) H t = Dirac residual, 200 fields", inter, 1e-9);

  cfg.mass = 1.0;
  double rest = 0.0, boosted = 0.0;
  auto waves = solution_family(rng, basis, cfg.mass);
  for (std::size_t w = 0; w < waves.size(); ++w) {
    std::vector<SpacetimePoint> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(random_point(rng, 2.0));
    EquivalenceReport r = equivalence_check(waves[w].field(), EMPotential::zero(), cfg, basis, pts);
    double worst = std::max(r.max_tensor(), r.max_dirac());
    (w < 4 ? rest : boosted) = std::max(w < 4 ? rest : boosted, worst);
  }
  report(9, "both residuals on the 4 rest-frame solutions", rest, 1e-8);
  report(9, "both residuals on 20 boosted solutions", boosted, 1e-8);
}

void gauge(std::mt19937_64& rng) {
  auto gen = default_generators<Cplx>();
  QEDConfig cfg;
  std::uniform_real_distribution<double> mass(0.0, 2.0);
  double cov = 0.0;
  for (int n = 0; n < 200; ++n) {
    cfg.mass = mass(rng);
    FormField psi = even_field(rng);
    EMPotential a = random_potential(rng);
    ScalarFunction lambda = random_scalar_function(rng);
    GaugedPair g = gauge_transform(psi, a, lambda, gen);
    SpacetimePoint p = random_point(rng);
    cov = std::max(cov, distance(tensor_residual(g.psi, g.a, cfg, gen, p),
                                 tensor_residual(psi, a, cfg, gen, p) * gauge_factor(lambda.value(p), gen.I())));
  }
  report(10, "residual(Psi E, A - d lambda) = residual(Psi, A) E, 200 fields", cov, 1e-9);

  auto gq = default_generators<QComplex>();
  auto circle = [&](std::mt19937_64& r) {
    Rational u = TQ::random_rational(r), d = 1 + u * u;
    return std::pair<Rational, Rational>{(1 - u * u) / d, 2 * u / d};
  };
  double cur = 0.0, u1 = 0.0;
  for (int n = 0; n < 200; ++n) {
    auto [c1, s1] = circle(rng);
    auto [c2, s2] = circle(rng);
    MQ e1 = gauge_factor(QComplex(c1), QComplex(s1), gq.I());
    MQ e2 = gauge_factor(QComplex(c2), QComplex(s2), gq.I());
    MQ psi = random_real_even<QComplex>(rng);
    cur = std::max(cur, qdist(current(MQ(psi * e1), gq.H()), current(psi, gq.H())));
    u1 = std::max({u1, qdist(star_conj(e1) * e1, MQ::one()),
                   qdist(e1 * e2, gauge_factor(QComplex(c1 * c2 - s1 * s2), QComplex(s1 * c2 + c1 * s2), gq.I())),
                   qdist(e1 * gq.H(), gq.H() * e1)});
  }
  report(10, "J(Psi E) = J(Psi) pointwise, exact", cur, 0.0);
  report(10, "E* E = 1, E(a) E(b) = E(a + b), EH = HE, exact", u1, 0.0);
}

std::vector<FormField> family_fields(std::mt19937_64& rng, const IdealBasisF& basis, double mass) {
  std::vector<FormField> out;
  for (const auto& w : solution_family(rng, basis, mass)) out.push_back(even_from_column(w.field(), basis));
  return out;
}

void conservation(std::mt19937_64& rng) {
  auto gen = default_generators<Cplx>();
  QEDConfig cfg;
  cfg.fd_step = 1e-3;
  double cons = 0.0;
  for (const auto& psi : family_fields(rng, idempotent(gen), cfg.mass))
    for (int k = 0; k < 5; ++k) cons = std::max(cons, charge_conservation_residual(psi, cfg, gen, random_point(rng, 2.0)));
  report(11, "|delta J| on the 24-member solution family, step 1e-3", cons, 1e-7);
}

void lagrangian_checks(std::mt19937_64& rng) {
  auto gen = default_generators<Cplx>();
  QEDConfig cfg;
  double onshell = 0.0;
  for (const auto& psi : family_fields(rng, idempotent(gen), cfg.mass))
    for (int k = 0; k < 5; ++k)
      onshell = std::max(onshell, std::abs(lagrangian_complex(psi, EMPotential::zero(), cfg, gen, random_point(rng, 2.0))));
  double imag = 0.0;
  for (int n = 0; n < 200; ++n)
    imag = std::max(imag, std::abs(lagrangian_complex(even_field(rng), random_potential(rng), cfg, gen,
                                                      random_point(rng)).imag()));
  report(13, "|L| on the 24-member solution family", onshell, 1e-9);
  report(13, "|Im L| on 200 random fields", imag, 1e-12);
}

void spin_lorentz(std::mt19937_64& rng) {
  double metric = 0.0, det = 0.0, recon = 0.0;
  bool ortho = true;
  for (int n = 0; n < 500; ++n) {
    SpinElement s = random_spin(rng);
    LorentzMatrix p = vector_rep(s);
    metric = std::max(metric, LorentzMatrix::metric_defect(p.P()));
    det = std::max(det, std::abs(LorentzMatrix::det(p.P()) - 1.0));
    ortho = ortho && p(0, 0) > 0.0;
    auto [a, b] = spin_from_lorentz(p);
    recon = std::max(recon, std::min(distance(a.value(), s.value()), distance(b.value(), s.value())));
  }
  report(12, "|P^T g P - g|, 500 Spin elements", metric, 1e-12);
  report(12, "|det P - 1|", det, 1e-12);
  report_flag(12, "p^0_0 > 0", ortho);
  report(12, "reconstruction returns S or -S", recon, 1e-10);

  MF full = exp_bivector(MF::blade(0b0110), 2 * std::numbers::pi).value();
  double flip = distance(full, -MF::one());
  double matrix = max_abs_diff(vector_rep(SpinElement::create(full)).P(), identity4());
  report(12, "2 pi rotation: S = -1 while P = Id", std::max(flip, matrix), 1e-12);
}

}  // namespace

int main() {
  std::mt19937_64 rng(20261016);
  clifford();
  hodge();
  one_form_product(rng);
  generator_conditions(rng);
  idempotent_checks();
  roundtrip(rng);
  gamma_representation(rng);
  operator_identity(rng);
  equivalence(rng);
  gauge(rng);
  conservation(rng);
  spin_lorentz(rng);
  lagrangian_checks(rng);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
