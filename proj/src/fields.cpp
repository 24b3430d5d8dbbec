#include "tensordirac/fields.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace tensordirac {

namespace {

double dot(const Vec4& k, const SpacetimePoint& p) {
  return k[0] * p[0] + k[1] * p[1] + k[2] * p[2] + k[3] * p[3];
}

MultiVectorF e(int mu) { return MultiVectorF::basis(mu); }

}  // namespace

ScalarFunction ScalarFunction::constant(double c) { return quadratic(c, Vec4{}, Mat4R{}); }

ScalarFunction ScalarFunction::linear(double c, int mu) {
  if (mu < 0 || mu >= kDim) throw std::out_of_range("coordinate index outside [0,3]");
  Vec4 b{};
  b[mu] = c;
  return affine(0.0, b);
}

ScalarFunction ScalarFunction::affine(double c, const Vec4& b) { return quadratic(c, b, Mat4R{}); }

ScalarFunction ScalarFunction::quadratic(double c, const Vec4& b, const Mat4R& q) {
  ScalarFunction f;
  Mat4R sym{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sym[i][j] = 0.5 * (q[i][j] + q[j][i]);
  f.polys_.push_back({c, b, sym});
  return f;
}

ScalarFunction ScalarFunction::cosine(double amplitude, const Vec4& k, double phase) {
  ScalarFunction f;
  f.waves_.push_back({amplitude, k, phase});
  return f;
}

ScalarFunction& ScalarFunction::operator+=(const ScalarFunction& o) {
  polys_.insert(polys_.end(), o.polys_.begin(), o.polys_.end());
  waves_.insert(waves_.end(), o.waves_.begin(), o.waves_.end());
  return *this;
}

double ScalarFunction::value(const SpacetimePoint& p) const {
  double v = 0.0;
  for (const auto& poly : polys_) {
    v += poly.c + dot(poly.b, p);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v += poly.q[i][j] * p[i] * p[j];
  }
  for (const auto& w : waves_) v += w.amplitude * std::cos(dot(w.k, p) + w.phase);
  return v;
}

Vec4 ScalarFunction::gradient(const SpacetimePoint& p) const {
  Vec4 g{};
  for (const auto& poly : polys_)
    for (int i = 0; i < 4; ++i) {
      g[i] += poly.b[i];
      for (int j = 0; j < 4; ++j) g[i] += 2.0 * poly.q[i][j] * p[j];
    }
  for (const auto& w : waves_) {
    double s = -w.amplitude * std::sin(dot(w.k, p) + w.phase);
    for (int i = 0; i < 4; ++i) g[i] += s * w.k[i];
  }
  return g;
}

Mat4R ScalarFunction::hessian(const SpacetimePoint& p) const {
  Mat4R h{};
  for (const auto& poly : polys_)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h[i][j] += 2.0 * poly.q[i][j];
  for (const auto& w : waves_) {
    double c = -w.amplitude * std::cos(dot(w.k, p) + w.phase);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h[i][j] += c * w.k[i] * w.k[j];
  }
  return h;
}

FormField::FormField(Value value, Partial partial, Partial2 partial2)
    : value_(std::move(value)),
      partial_(std::move(partial)),
      partial2_(std::move(partial2)),
      kind_(FieldKind::analytic) {}

FormField FormField::sampled(Value value, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  FormField f;
  f.value_ = std::move(value);
  f.kind_ = FieldKind::finite_difference;
  f.h_ = h;
  return f;
}

FormField FormField::constant(const MultiVectorF& m) {
  return FormField([m](const SpacetimePoint&) { return m; },
                   [](int, const SpacetimePoint&) { return MultiVectorF(); },
                   [](int, int, const SpacetimePoint&) { return MultiVectorF(); });
}

FormField FormField::from_terms(std::vector<std::pair<MultiVectorF, ScalarFunction>> terms) {
  auto shared = std::make_shared<const std::vector<std::pair<MultiVectorF, ScalarFunction>>>(
      std::move(terms));
  auto value = [shared](const SpacetimePoint& p) {
    MultiVectorF out;
    for (const auto& [m, f] : *shared) out += m * Cplx(f.value(p), 0.0);
    return out;
  };
  auto partial = [shared](int mu, const SpacetimePoint& p) {
    MultiVectorF out;
    for (const auto& [m, f] : *shared) out += m * Cplx(f.gradient(p)[mu], 0.0);
    return out;
  };
  auto partial2 = [shared](int mu, int nu, const SpacetimePoint& p) {
    MultiVectorF out;
    for (const auto& [m, f] : *shared) out += m * Cplx(f.hessian(p)[mu][nu], 0.0);
    return out;
  };
  return FormField(value, partial, partial2);
}

MultiVectorF FormField::partial(int mu, const SpacetimePoint& p) const {
  if (kind_ == FieldKind::analytic) return partial_(mu, p);
  return finite_difference_partial(*this, mu, p, h_);
}

MultiVectorF FormField::partial2(int mu, int nu, const SpacetimePoint& p) const {
  if (partial2_) return partial2_(mu, nu, p);
  const double h = h_;
  MultiVectorF diff = partial(mu, p.shifted(nu, h)) - partial(mu, p.shifted(nu, -h));
  return diff * Cplx(1.0 / (2.0 * h), 0.0);
}

MultiVectorF finite_difference_partial(const FormField& f, int mu, const SpacetimePoint& p,
                                       double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  MultiVectorF diff = f(p.shifted(mu, h)) - f(p.shifted(mu, -h));
  return diff * Cplx(1.0 / (2.0 * h), 0.0);
}

MultiVectorF differential(const FormField& f, const SpacetimePoint& p) {
  MultiVectorF out;
  for (int mu = 0; mu < kDim; ++mu) out += wedge(e(mu), f.partial(mu, p));
  return out;
}

namespace {

// e^mu d_mu F - e^mu ^ d_mu F, given the four partials.
MultiVectorF contraction(const std::array<MultiVectorF, 4>& partials) {
  MultiVectorF out;
  for (int mu = 0; mu < kDim; ++mu) out += e(mu) * partials[mu] - wedge(e(mu), partials[mu]);
  return out;
}

std::array<MultiVectorF, 4> partials_at(const FormField& f, const SpacetimePoint& p) {
  return {f.partial(0, p), f.partial(1, p), f.partial(2, p), f.partial(3, p)};
}

std::array<MultiVectorF, 4> second_partials_at(const FormField& f, int nu, const SpacetimePoint& p) {
  return {f.partial2(0, nu, p), f.partial2(1, nu, p), f.partial2(2, nu, p), f.partial2(3, nu, p)};
}

}  // namespace

MultiVectorF codifferential(const FormField& f, const SpacetimePoint& p) {
  return -contraction(partials_at(f, p));
}

MultiVectorF codifferential_via_hodge(const FormField& f, const SpacetimePoint& p) {
  // d_mu commutes with the constant-coefficient star.
  MultiVectorF inner;
  for (int mu = 0; mu < kDim; ++mu) inner += wedge(e(mu), hodge_star(f.partial(mu, p)));
  return hodge_star(inner);
}

MultiVectorF dirac_operator(const FormField& f, const SpacetimePoint& p) {
  MultiVectorF out;
  for (int mu = 0; mu < kDim; ++mu) out += e(mu) * f.partial(mu, p);
  return out;
}

FormField differential_field(const FormField& f) {
  return FormField([f](const SpacetimePoint& p) { return differential(f, p); },
                   [f](int nu, const SpacetimePoint& p) {
                     MultiVectorF out;
                     for (int mu = 0; mu < kDim; ++mu) out += wedge(e(mu), f.partial2(mu, nu, p));
                     return out;
                   });
}

FormField codifferential_field(const FormField& f) {
  return FormField([f](const SpacetimePoint& p) { return codifferential(f, p); },
                   [f](int nu, const SpacetimePoint& p) {
                     return -contraction(second_partials_at(f, nu, p));
                   });
}

FormField dirac_operator_field(const FormField& f) {
  return FormField([f](const SpacetimePoint& p) { return dirac_operator(f, p); },
                   [f](int nu, const SpacetimePoint& p) {
                     MultiVectorF out;
                     for (int mu = 0; mu < kDim; ++mu) out += e(mu) * f.partial2(mu, nu, p);
                     return out;
                   });
}

ScalarFunction random_scalar_function(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec4 k{};
  for (auto& ki : k) ki = 2.0 * u(rng);
  double amplitude = u(rng);
  double phase = 3.0 * u(rng);
  Vec4 b{};
  for (auto& bi : b) bi = u(rng);
  Mat4R q{};
  for (auto& row : q)
    for (auto& x : row) x = 0.5 * u(rng);
  return ScalarFunction::cosine(amplitude, k, phase) + ScalarFunction::quadratic(u(rng), b, q);
}

FormField random_form_field(std::mt19937_64& rng,
                            const std::function<MultiVectorF(std::mt19937_64&)>& make_coefficient,
                            int terms) {
  std::vector<std::pair<MultiVectorF, ScalarFunction>> list;
  for (int j = 0; j < terms; ++j) {
    MultiVectorF m = make_coefficient(rng);
    list.emplace_back(m, random_scalar_function(rng));
  }
  return FormField::from_terms(std::move(list));
}

SpacetimePoint random_point(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  SpacetimePoint p;
  for (auto& xi : p.x) xi = u(rng);
  return p;
}

}  // namespace tensordirac
