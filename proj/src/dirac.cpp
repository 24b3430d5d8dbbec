#include "tensordirac/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace tensordirac {

namespace {

constexpr Cplx kI{0.0, 1.0};

MultiVectorF e(int mu) { return MultiVectorF::basis(mu); }

}  // namespace

double max_abs(const SpinorColumn& c) {
  double m = 0.0;
  for (const auto& z : c) m = std::max(m, std::abs(z));
  return m;
}

SpinorColumn operator+(const SpinorColumn& a, const SpinorColumn& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

SpinorColumn operator-(const SpinorColumn& a, const SpinorColumn& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

SpinorColumn operator*(const Cplx& s, const SpinorColumn& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

// ---------------------------------------------------------------------------
// SpinorField

SpinorField::SpinorField(Value value, Partial partial, Partial2 partial2)
    : value_(std::move(value)), partial_(std::move(partial)), partial2_(std::move(partial2)) {}

SpinorField SpinorField::sampled(Value value, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  SpinorField f;
  f.value_ = std::move(value);
  f.kind_ = FieldKind::finite_difference;
  f.h_ = h;
  return f;
}

SpinorColumn SpinorField::partial(int mu, const SpacetimePoint& p) const {
  if (kind_ == FieldKind::analytic) return partial_(mu, p);
  return Cplx(1.0 / (2.0 * h_), 0.0) * (value_(p.shifted(mu, h_)) - value_(p.shifted(mu, -h_)));
}

SpinorColumn SpinorField::partial2(int mu, int nu, const SpacetimePoint& p) const {
  if (partial2_) return partial2_(mu, nu, p);
  return Cplx(1.0 / (2.0 * h_), 0.0) * (partial(mu, p.shifted(nu, h_)) - partial(mu, p.shifted(nu, -h_)));
}

// ---------------------------------------------------------------------------
// Plane waves

PlaneWave PlaneWave::create(const SpinorColumn& amplitude, const Vec4& momentum, double mass,
                            double tol) {
  if (mass < 0.0) throw std::invalid_argument("mass must be nonnegative");
  double pp = 0.0;
  for (int mu = 0; mu < kDim; ++mu) pp += kMetric[mu] * momentum[mu] * momentum[mu];
  if (std::abs(pp - mass * mass) > tol * std::max(1.0, mass * mass))
    throw std::invalid_argument("plane wave violates p_mu p^mu = m^2: p^2 = " + std::to_string(pp));
  return PlaneWave(amplitude, momentum, mass);
}

SpinorField PlaneWave::field() const {
  const SpinorColumn a = amplitude_;
  const Vec4 k = momentum_;
  auto phase = [k](const SpacetimePoint& p) {
    double s = k[0] * p[0] + k[1] * p[1] + k[2] * p[2] + k[3] * p[3];
    return std::exp(Cplx(0.0, -s));
  };
  return SpinorField(
      [a, phase](const SpacetimePoint& p) { return phase(p) * a; },
      [a, k, phase](int mu, const SpacetimePoint& p) { return Cplx(0.0, -k[mu]) * phase(p) * a; },
      [a, k, phase](int mu, int nu, const SpacetimePoint& p) {
        return Cplx(-k[mu] * k[nu], 0.0) * phase(p) * a;
      });
}

PlaneWave rest_frame_solution(int branch, double mass) {
  if (branch < 1 || branch > 4) throw std::out_of_range("branch must be 1..4");
  SpinorColumn a{};
  a[branch - 1] = 1.0;
  Vec4 p{branch <= 2 ? mass : -mass, 0.0, 0.0, 0.0};
  return PlaneWave::create(a, p, mass);
}

void QEDConfig::validate() const {
  if (mass < 0.0) throw std::invalid_argument("mass must be nonnegative");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(fd_step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
}

// ---------------------------------------------------------------------------
// Potential

EMPotential EMPotential::zero() { return EMPotential(FormField::constant(MultiVectorF())); }

EMPotential EMPotential::constant(const Vec4& a) {
  MultiVectorF m;
  for (int mu = 0; mu < kDim; ++mu) m += e(mu) * Cplx(a[mu], 0.0);
  return EMPotential(FormField::constant(m));
}

EMPotential EMPotential::from_field(FormField field) { return EMPotential(std::move(field)); }

MultiVectorF EMPotential::operator()(const SpacetimePoint& p) const {
  MultiVectorF a = field_(p);
  if (off_grade(a, 1) > 1e-12 || max_imag(a) > 1e-12)
    throw std::domain_error("potential must be a real 1-form");
  return a;
}

Vec4 EMPotential::components(const SpacetimePoint& p) const {
  MultiVectorF a = (*this)(p);
  return {a[0b0001].real(), a[0b0010].real(), a[0b0100].real(), a[0b1000].real()};
}

// ---------------------------------------------------------------------------
// Residuals

MultiVectorF tensor_residual(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                             const GeneratorSetF& gen, const SpacetimePoint& p,
                             ResidualDiagnostics* diag) {
  MultiVectorF value = psi(p);
  if (diag) {
    diag->odd_contamination = max_abs(odd_part(value));
    diag->warned = diag->odd_contamination > kAlgebraTolerance;
  }
  return dirac_operator(psi, p) + a(p) * value * gen.I() +
         Cplx(cfg.mass, 0.0) * (value * gen.H() * gen.I());
}

SpinorColumn dirac_residual(const SpinorField& psi, const EMPotential& a, const QEDConfig& cfg,
                            const GammaSet& gamma, const SpacetimePoint& p) {
  const SpinorColumn value = psi(p);
  const Vec4 am = a.components(p);
  SpinorColumn out = Cplx(0.0, cfg.mass) * value;
  for (int mu = 0; mu < kDim; ++mu) {
    SpinorColumn inner = psi.partial(mu, p) + Cplx(0.0, am[mu]) * value;
    out = out + gamma[mu] * inner;
  }
  return out;
}

SpinorColumn column_from_even(const MultiVectorF& psi, const IdealBasisF& basis) {
  return project_on_ideal(psi * basis.t, basis);
}

SpinorField column_field(const FormField& psi, const IdealBasisF& basis) {
  return SpinorField(
      [psi, basis](const SpacetimePoint& p) { return column_from_even(psi(p), basis); },
      [psi, basis](int mu, const SpacetimePoint& p) {
        return column_from_even(psi.partial(mu, p), basis);
      },
      [psi, basis](int mu, int nu, const SpacetimePoint& p) {
        return column_from_even(psi.partial2(mu, nu, p), basis);
      });
}

MultiVectorF even_from_column(const SpinorColumn& psi, const IdealBasisF& basis) {
  return even_from_components(psi, basis);
}

FormField even_from_column(const SpinorField& psi, const IdealBasisF& basis) {
  return FormField(
      [psi, basis](const SpacetimePoint& p) { return even_from_components(psi(p), basis); },
      [psi, basis](int mu, const SpacetimePoint& p) {
        return even_from_components(psi.partial(mu, p), basis);
      },
      [psi, basis](int mu, int nu, const SpacetimePoint& p) {
        return even_from_components(psi.partial2(mu, nu, p), basis);
      });
}

// ---------------------------------------------------------------------------
// Equivalence of the two equations

double EquivalenceReport::max_tensor() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.tensor_norm);
  return m;
}

double EquivalenceReport::max_dirac() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.dirac_norm);
  return m;
}

double EquivalenceReport::max_intertwining() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.intertwining_error);
  return m;
}

EquivalenceReport equivalence_check(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                                    const IdealBasisF& basis, std::span<const SpacetimePoint> points) {
  const GammaSet gamma = gamma_matrices(basis);
  const SpinorField column = column_field(psi, basis);
  const MultiVectorF ht = basis.gen.H() * basis.t;
  EquivalenceReport report;
  report.tolerance = cfg.tolerance;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const SpacetimePoint& x = points[j];
    MultiVectorF tensor = tensor_residual(psi, a, cfg, basis.gen, x);
    SpinorColumn dirac = dirac_residual(column, a, cfg, gamma, x);
    SpinorColumn linked = project_on_ideal(tensor * ht, basis);
    EquivalencePoint pt{x, max_abs(tensor), max_abs(dirac), max_abs(linked - dirac)};
    bool agree = (pt.tensor_norm <= cfg.tolerance) == (pt.dirac_norm <= cfg.tolerance);
    bool linked_ok = pt.intertwining_error <= cfg.tolerance;
    if ((!agree || !linked_ok) && report.first_failure < 0) report.first_failure = static_cast<long>(j);
    report.solutions_agree = report.solutions_agree && agree;
    report.intertwining_holds = report.intertwining_holds && linked_ok;
    report.points.push_back(pt);
  }
  return report;
}

EquivalenceReport equivalence_check(const SpinorField& psi, const EMPotential& a, const QEDConfig& cfg,
                                    const IdealBasisF& basis, std::span<const SpacetimePoint> points) {
  return equivalence_check(even_from_column(psi, basis), a, cfg, basis, points);
}

// ---------------------------------------------------------------------------
// Current, Maxwell equations, gauge, Lagrangian

FormField current_field(const FormField& psi, const GeneratorSetF& gen, double h) {
  const MultiVectorF hh = gen.H();
  return FormField::sampled([psi, hh](const SpacetimePoint& p) { return current(psi(p), hh); }, h);
}

double charge_conservation_residual(const FormField& psi, const QEDConfig& cfg,
                                    const GeneratorSetF& gen, const SpacetimePoint& p) {
  return max_abs(codifferential(current_field(psi, gen, cfg.fd_step), p));
}

std::pair<MultiVectorF, MultiVectorF> maxwell_residuals(const EMPotential& a, const FormField& f,
                                                        const FormField& psi, const QEDConfig& cfg,
                                                        const GeneratorSetF& gen,
                                                        const SpacetimePoint& p) {
  MultiVectorF first = differential(a.field(), p) - f(p);
  MultiVectorF second = codifferential(f, p) - Cplx(cfg.alpha, 0.0) * current(psi(p), gen.H());
  return {first, second};
}

MultiVectorF gauge_factor(double lambda, const MultiVectorF& i) {
  return gauge_factor(Cplx(std::cos(lambda), 0.0), Cplx(std::sin(lambda), 0.0), i);
}

GaugedPair gauge_transform(const FormField& psi, const EMPotential& a, const ScalarFunction& lambda,
                           const GeneratorSetF& gen) {
  const MultiVectorF i = gen.I();
  // d_mu exp(lambda I) = exp(lambda I) I d_mu lambda
  FormField psi2(
      [psi, lambda, i](const SpacetimePoint& p) { return psi(p) * gauge_factor(lambda.value(p), i); },
      [psi, lambda, i](int mu, const SpacetimePoint& p) {
        MultiVectorF g = gauge_factor(lambda.value(p), i);
        double dl = lambda.gradient(p)[mu];
        return psi.partial(mu, p) * g + psi(p) * g * i * Cplx(dl, 0.0);
      });
  const FormField af = a.field();
  FormField a2(
      [af, lambda](const SpacetimePoint& p) {
        Vec4 g = lambda.gradient(p);
        MultiVectorF out = af(p);
        for (int mu = 0; mu < kDim; ++mu) out -= e(mu) * Cplx(g[mu], 0.0);
        return out;
      },
      [af, lambda](int nu, const SpacetimePoint& p) {
        Mat4R h = lambda.hessian(p);
        MultiVectorF out = af.partial(nu, p);
        for (int mu = 0; mu < kDim; ++mu) out -= e(mu) * Cplx(h[mu][nu], 0.0);
        return out;
      },
      [af, lambda](int nu, int rho, const SpacetimePoint& p) {
        // lambda has no closed-form third derivatives; FD on the Hessian.
        const double h = kDefaultFdStep;
        Mat4R hp = lambda.hessian(p.shifted(rho, h));
        Mat4R hm = lambda.hessian(p.shifted(rho, -h));
        MultiVectorF out = af.partial2(nu, rho, p);
        for (int mu = 0; mu < kDim; ++mu)
          out -= e(mu) * Cplx((hp[mu][nu] - hm[mu][nu]) / (2.0 * h), 0.0);
        return out;
      });
  return {psi2, EMPotential::from_field(a2)};
}

Cplx lagrangian_complex(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                        const GeneratorSetF& gen, const SpacetimePoint& p) {
  const MultiVectorF value = psi(p);
  MultiVectorF q = dirac_operator(psi, p) * gen.I() - a(p) * value -
                   Cplx(cfg.mass, 0.0) * (value * gen.H());
  MultiVectorF inner = star_conj(value) * q + star_conj(q) * value;
  return 0.25 * trace(gen.H() * inner);
}

double lagrangian(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                  const GeneratorSetF& gen, const SpacetimePoint& p) {
  return lagrangian_complex(psi, a, cfg, gen, p).real();
}

}  // namespace tensordirac
