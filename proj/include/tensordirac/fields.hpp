#pragma once

#include <array>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "tensordirac/multivector.hpp"

namespace tensordirac {

inline constexpr double kDefaultFdStep = 1e-3;

using Vec4 = std::array<double, 4>;
using Mat4R = std::array<std::array<double, 4>, 4>;

/// A point of Minkowski space with coordinates x^0..x^3.
struct SpacetimePoint {
  Vec4 x{};

  double operator[](int mu) const { return x[mu]; }
  SpacetimePoint shifted(int mu, double h) const {
    SpacetimePoint p = *this;
    p.x[mu] += h;
    return p;
  }
};

/// Smooth real function of x with closed-form first and second derivatives:
/// a sum of quadratic polynomials c + b_mu x^mu + q_{mu nu} x^mu x^nu and
/// waves A cos(k_mu x^mu + phase).
class ScalarFunction {
 public:
  ScalarFunction() = default;

  static ScalarFunction constant(double c);
  /// c x^mu
  static ScalarFunction linear(double c, int mu);
  static ScalarFunction affine(double c, const Vec4& b);
  static ScalarFunction quadratic(double c, const Vec4& b, const Mat4R& q);
  static ScalarFunction cosine(double amplitude, const Vec4& k, double phase);

  ScalarFunction& operator+=(const ScalarFunction& o);
  friend ScalarFunction operator+(ScalarFunction a, const ScalarFunction& b) { return a += b; }

  double value(const SpacetimePoint& p) const;
  Vec4 gradient(const SpacetimePoint& p) const;
  Mat4R hessian(const SpacetimePoint& p) const;

 private:
  struct Poly {
    double c;
    Vec4 b;
    Mat4R q;  // symmetric
  };
  struct Wave {
    double amplitude;
    Vec4 k;
    double phase;
  };
  std::vector<Poly> polys_;
  std::vector<Wave> waves_;
};

enum class FieldKind { analytic, finite_difference };

/// Multivector-valued field on R^{1,3} with a partial-derivative oracle.
/// Analytic fields carry closed-form partials; sampled fields use central
/// differences with a fixed step. Evaluation has no side effects, so a field
/// may be evaluated from several threads at once.
class FormField {
 public:
  using Value = std::function<MultiVectorF(const SpacetimePoint&)>;
  using Partial = std::function<MultiVectorF(int, const SpacetimePoint&)>;
  using Partial2 = std::function<MultiVectorF(int, int, const SpacetimePoint&)>;

  /// Analytic field. Without a second-derivative oracle, second partials
  /// fall back to central differences of the analytic first partials.
  FormField(Value value, Partial partial, Partial2 partial2 = {});

  static FormField sampled(Value value, double h = kDefaultFdStep);
  static FormField constant(const MultiVectorF& m);
  /// sum_j M_j f_j(x)
  static FormField from_terms(std::vector<std::pair<MultiVectorF, ScalarFunction>> terms);

  MultiVectorF operator()(const SpacetimePoint& p) const { return value_(p); }
  MultiVectorF partial(int mu, const SpacetimePoint& p) const;
  MultiVectorF partial2(int mu, int nu, const SpacetimePoint& p) const;

  FieldKind kind() const { return kind_; }
  bool has_analytic_second() const { return static_cast<bool>(partial2_); }
  double fd_step() const { return h_; }

 private:
  FormField() = default;

  Value value_;
  Partial partial_;
  Partial2 partial2_;
  FieldKind kind_ = FieldKind::analytic;
  double h_ = kDefaultFdStep;
};

/// (F(x + h e_mu) - F(x - h e_mu)) / 2h. Throws std::invalid_argument for
/// h <= 0.
MultiVectorF finite_difference_partial(const FormField& f, int mu, const SpacetimePoint& p,
                                       double h);

/// dF = e^mu ^ d_mu F.
MultiVectorF differential(const FormField& f, const SpacetimePoint& p);

/// delta F, the negated contraction part of e^mu d_mu F, so that
/// e^mu d_mu = d - delta.
MultiVectorF codifferential(const FormField& f, const SpacetimePoint& p);

/// star d star F, computed through the Hodge star. Must agree with
/// codifferential().
MultiVectorF codifferential_via_hodge(const FormField& f, const SpacetimePoint& p);

/// e^mu d_mu F (central product).
MultiVectorF dirac_operator(const FormField& f, const SpacetimePoint& p);

/// The same operators lifted to fields, with partials taken from the second
/// partials of f.
FormField differential_field(const FormField& f);
FormField codifferential_field(const FormField& f);
FormField dirac_operator_field(const FormField& f);

/// Random smooth scalar: one wave plus a quadratic polynomial with modest
/// coefficients.
ScalarFunction random_scalar_function(std::mt19937_64& rng);

/// sum_{j<terms} M_j f_j(x) with M_j drawn by make_coefficient.
FormField random_form_field(std::mt19937_64& rng,
                            const std::function<MultiVectorF(std::mt19937_64&)>& make_coefficient,
                            int terms = 3);

SpacetimePoint random_point(std::mt19937_64& rng, double scale = 1.0);

}  // namespace tensordirac
