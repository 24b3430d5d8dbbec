#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tensordirac/fields.hpp"
#include "tensordirac/gamma.hpp"
#include "tensordirac/generators.hpp"

namespace tensordirac {

using SpinorColumn = std::array<Cplx, 4>;
using GammaSet = std::array<Mat4<Cplx>, 4>;
using IdealBasisF = IdealBasis<Cplx>;
using GeneratorSetF = GeneratorSet<Cplx>;

double max_abs(const SpinorColumn& c);
SpinorColumn operator+(const SpinorColumn& a, const SpinorColumn& b);
SpinorColumn operator-(const SpinorColumn& a, const SpinorColumn& b);
SpinorColumn operator*(const Cplx& s, const SpinorColumn& a);

/// Column-valued field x -> (psi^1 .. psi^4) with a partial-derivative oracle.
class SpinorField {
 public:
  using Value = std::function<SpinorColumn(const SpacetimePoint&)>;
  using Partial = std::function<SpinorColumn(int, const SpacetimePoint&)>;
  using Partial2 = std::function<SpinorColumn(int, int, const SpacetimePoint&)>;

  SpinorField(Value value, Partial partial, Partial2 partial2 = {});
  static SpinorField sampled(Value value, double h = kDefaultFdStep);

  SpinorColumn operator()(const SpacetimePoint& p) const { return value_(p); }
  SpinorColumn partial(int mu, const SpacetimePoint& p) const;
  SpinorColumn partial2(int mu, int nu, const SpacetimePoint& p) const;
  FieldKind kind() const { return kind_; }

 private:
  SpinorField() = default;

  Value value_;
  Partial partial_;
  Partial2 partial2_;
  FieldKind kind_ = FieldKind::analytic;
  double h_ = kDefaultFdStep;
};

/// psi(x) = amplitude * exp(-i p_mu x^mu), with p_mu p^mu = m^2 enforced at
/// construction.
class PlaneWave {
 public:
  static PlaneWave create(const SpinorColumn& amplitude, const Vec4& momentum, double mass,
                          double tol = 1e-9);

  const SpinorColumn& amplitude() const { return amplitude_; }
  /// Covariant components p_mu.
  const Vec4& momentum() const { return momentum_; }
  double mass() const { return mass_; }
  SpinorField field() const;

 private:
  PlaneWave(const SpinorColumn& a, const Vec4& p, double m) : amplitude_(a), momentum_(p), mass_(m) {}

  SpinorColumn amplitude_;
  Vec4 momentum_;
  double mass_;
};

/// Rest-frame solution for branch 1..4: unit column k times exp(-i m x^0)
/// for the two upper components and exp(+i m x^0) for the two lower ones.
PlaneWave rest_frame_solution(int branch, double mass);

struct QEDConfig {
  double mass = 1.0;
  double alpha = 1.0;
  double tolerance = 1e-9;
  double fd_step = kDefaultFdStep;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for a negative mass or a nonpositive
  /// tolerance or step.
  void validate() const;
};

/// Real 1-form potential A = a_mu e^mu.
class EMPotential {
 public:
  static EMPotential zero();
  static EMPotential constant(const Vec4& a);
  /// Built from a form field whose values are real and of grade 1; the
  /// grade and reality are checked on evaluation.
  static EMPotential from_field(FormField field);

  MultiVectorF operator()(const SpacetimePoint& p) const;
  MultiVectorF partial(int mu, const SpacetimePoint& p) const { return field_.partial(mu, p); }
  /// Covariant components a_mu(x).
  Vec4 components(const SpacetimePoint& p) const;
  const FormField& field() const { return field_; }

 private:
  explicit EMPotential(FormField f) : field_(std::move(f)) {}
  FormField field_;
};

struct ResidualDiagnostics {
  double odd_contamination = 0.0;
  bool warned = false;
};

/// (d - delta) Psi + A Psi I + m Psi H I at x.
MultiVectorF tensor_residual(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                             const GeneratorSetF& gen, const SpacetimePoint& p,
                             ResidualDiagnostics* diag = nullptr);

/// gamma^mu (d_mu psi + i a_mu psi) + i m psi at x.
SpinorColumn dirac_residual(const SpinorField& psi, const EMPotential& a, const QEDConfig& cfg,
                            const GammaSet& gamma, const SpacetimePoint& p);

/// psi^k with Psi t = psi^k t_k.
SpinorColumn column_from_even(const MultiVectorF& psi, const IdealBasisF& basis);
SpinorField column_field(const FormField& psi, const IdealBasisF& basis);

/// Psi = F_k (alpha^k + beta^k I) for psi^k = alpha^k + i beta^k.
MultiVectorF even_from_column(const SpinorColumn& psi, const IdealBasisF& basis);
FormField even_from_column(const SpinorField& psi, const IdealBasisF& basis);

struct EquivalencePoint {
  SpacetimePoint x;
  double tensor_norm = 0.0;
  double dirac_norm = 0.0;
  /// |components of (tensor residual) H t - dirac residual|
  double intertwining_error = 0.0;
};

struct EquivalenceReport {
  std::vector<EquivalencePoint> points;
  double tolerance = 0.0;
  bool solutions_agree = true;  // tensor <= tol iff dirac <= tol at each point
  bool intertwining_holds = true;
  long first_failure = -1;

  bool ok() const { return solutions_agree && intertwining_holds; }
  double max_tensor() const;
  double max_dirac() const;
  double max_intertwining() const;
};

EquivalenceReport equivalence_check(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                                    const IdealBasisF& basis, std::span<const SpacetimePoint> points);
EquivalenceReport equivalence_check(const SpinorField& psi, const EMPotential& a, const QEDConfig& cfg,
                                    const IdealBasisF& basis, std::span<const SpacetimePoint> points);

/// J = Psi H Psi*, pointwise.
template <class S>
MultiVector<S> current(const MultiVector<S>& psi, const MultiVector<S>& h) {
  return psi * h * star_conj(psi);
}

/// J as a sampled field (central differences with step h).
FormField current_field(const FormField& psi, const GeneratorSetF& gen, double h);

/// |delta J| at x, J = Psi H Psi*, derivatives by central differences with
/// cfg.fd_step.
double charge_conservation_residual(const FormField& psi, const QEDConfig& cfg,
                                    const GeneratorSetF& gen, const SpacetimePoint& p);

/// (dA - F, delta F - alpha J) at x.
std::pair<MultiVectorF, MultiVectorF> maxwell_residuals(const EMPotential& a, const FormField& f,
                                                        const FormField& psi, const QEDConfig& cfg,
                                                        const GeneratorSetF& gen,
                                                        const SpacetimePoint& p);

/// exp(lambda I) = cos(lambda) + I sin(lambda), given the cosine and sine.
template <class S>
MultiVector<S> gauge_factor(const S& cos_l, const S& sin_l, const MultiVector<S>& i) {
  return MultiVector<S>::scalar(cos_l) + sin_l * i;
}

MultiVectorF gauge_factor(double lambda, const MultiVectorF& i);

struct GaugedPair {
  FormField psi;
  EMPotential a;
};

/// Psi' = Psi exp(lambda I), A' = A - d lambda.
GaugedPair gauge_transform(const FormField& psi, const EMPotential& a, const ScalarFunction& lambda,
                           const GeneratorSetF& gen);

/// 1/4 Tr(H (Psi* Q + Q* Psi)) with Q = (d - delta) Psi I - A Psi - m Psi H,
/// before discarding the imaginary part.
Cplx lagrangian_complex(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                        const GeneratorSetF& gen, const SpacetimePoint& p);
double lagrangian(const FormField& psi, const EMPotential& a, const QEDConfig& cfg,
                  const GeneratorSetF& gen, const SpacetimePoint& p);

}  // namespace tensordirac
