#pragma once

#include <array>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tensordirac/dirac.hpp"
#include "tensordirac/generators.hpp"
#include "tensordirac/multivector.hpp"

namespace tensordirac {

/// S* U S.
template <class S>
MultiVector<S> spin_conjugate(const MultiVector<S>& s, const MultiVector<S>& u) {
  return star_conj(s) * u * s;
}

/// Even, real and S*S = 1 within tol.
template <class S>
bool is_spin(const MultiVector<S>& s, double tol = kAlgebraTolerance) {
  if (!is_even(s, tol) || !is_real(s, tol)) return false;
  return close(star_conj(s) * s, MultiVector<S>::one(), tol);
}

/// Largest off-grade coefficient of S* U S over all 16 basis blades U.
template <class S>
double grade_leakage(const MultiVector<S>& s) {
  double worst = 0.0;
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    MultiVector<S> image = spin_conjugate(s, MultiVector<S>::blade(mask));
    worst = std::max(worst, off_grade(image, std::popcount(mask)));
  }
  return worst;
}

/// A constant Spin(1,3) element. Construction checks is_spin.
class SpinElement {
 public:
  static SpinElement create(const MultiVectorF& s, double tol = kAlgebraTolerance);

  const MultiVectorF& value() const { return s_; }
  SpinElement operator-() const { return SpinElement(-s_); }
  friend SpinElement operator*(const SpinElement& a, const SpinElement& b) {
    return SpinElement(a.s_ * b.s_);
  }

 private:
  explicit SpinElement(MultiVectorF s) : s_(std::move(s)) {}
  MultiVectorF s_;
};

class LorentzError : public std::invalid_argument {
 public:
  LorentzError(const std::string& condition, double residual)
      : std::invalid_argument("not a proper orthochronous Lorentz matrix: " + condition + " fails (" +
                              std::to_string(residual) + ")"),
        condition_(condition),
        residual_(residual) {}
  const std::string& condition() const { return condition_; }
  double residual() const { return residual_; }

 private:
  std::string condition_;
  double residual_;
};

/// P(n, k) = p^n_k; row mu holds the components of S* e^mu S.
/// Q = P^{-1} = g P^T g.
class LorentzMatrix {
 public:
  /// Checks "P^T g P = g", "det P = 1", "p^0_0 > 0" in that order and throws
  /// LorentzError naming the first failure.
  static LorentzMatrix create(const Mat4R& p, double tol = kAlgebraTolerance);
  static LorentzMatrix identity();

  const Mat4R& P() const { return p_; }
  const Mat4R& Q() const { return q_; }
  double operator()(int n, int k) const { return p_[n][k]; }

  /// ||P^T g P - g||, |det P - 1|.
  static double metric_defect(const Mat4R& p);
  static double det(const Mat4R& p);

 private:
  LorentzMatrix(const Mat4R& p, const Mat4R& q) : p_(p), q_(q) {}
  Mat4R p_;
  Mat4R q_;
};

Mat4R matmul(const Mat4R& a, const Mat4R& b);
double max_abs_diff(const Mat4R& a, const Mat4R& b);
Mat4R identity4();

/// B^2 = -1: cos(theta/2) + sin(theta/2) B. B^2 = +1: cosh(theta/2) + sinh(theta/2) B.
/// A real bivector with B^2 = c, c != 0, is first scaled to B^2 = sign(c).
/// Other bivectors (B^2 with a 4-form part, or null) are rejected with
/// std::invalid_argument; use exp_bivector_series for those.
SpinElement exp_bivector(const MultiVectorF& b, double theta);

/// exp(B) for any real bivector B: 24-term Taylor series of the central
/// product after scaling B by 2^-j, then j squarings. Throws
/// std::runtime_error if the truncation bound exceeds 1e-15.
SpinElement exp_bivector_series(const MultiVectorF& b);

/// The pure boost whose S* e^0 S has components u^nu (u^0 >= 1,
/// u_mu u^mu = 1 checked to 1e-9).
SpinElement pure_boost(const Vec4& u);

/// Throws std::invalid_argument if S leaks out of its grade on any blade.
LorentzMatrix vector_rep(const SpinElement& s, double tol = kAlgebraTolerance);

/// The pair (S, -S) with vector_rep(S) = P. The first member has its first
/// nonzero coefficient positive.
std::pair<SpinElement, SpinElement> spin_from_lorentz(const LorentzMatrix& p);

/// Product of 1..max_factors exponentials in random coordinate planes.
SpinElement random_spin(std::mt19937_64& rng, int max_factors = 4);

/// Exact Spin element c + s e^{mask} with rational half-angle parameter u:
/// rotation planes c = (1-u^2)/(1+u^2), s = 2u/(1+u^2); boost planes
/// c = (1+u^2)/(1-u^2), s = 2u/(1-u^2) for |u| < 1.
MultiVectorQ rational_rotor(unsigned plane_mask, const Rational& u);

/// A boost with nonzero rapidity times two rotations, all exact.
MultiVectorQ random_rational_spin(std::mt19937_64& rng);

/// The solution x -> R psi(Q x), R = gamma(S), written as a plane wave with
/// amplitude R a and momentum p'_nu = p_mu q^mu_nu.
PlaneWave boost_plane_wave(const PlaneWave& wave, const SpinElement& s, const IdealBasisF& basis);

struct CovarianceClaim {
  std::string id;
  /// Primed-frame expression minus its unprimed counterpart.
  double identity_residual = 0.0;
  /// Norm of the primed-frame equation itself (zero on solutions).
  double equation_residual = 0.0;
  long first_failure = -1;
};

/// (a) invariant column with gamma'^mu = gamma(S* e^mu S) = R^-1 gamma^mu R;
/// (b) invariant gamma with column R psi;
/// (c) tensor residual in primed coordinates against the unprimed one.
struct CovarianceReport {
  std::array<CovarianceClaim, 3> claims{{{"a"}, {"b"}, {"c"}}};
  double gamma_intertwining = 0.0;
  double tolerance = 0.0;
  bool expect_solution = true;

  bool ok() const;
  /// Ids of failing claims, comma-separated.
  std::string failures() const;
};

/// Sample points are primed coordinates x' = P x.
CovarianceReport covariance_check(const SpinElement& s, const FormField& psi, const EMPotential& a,
                                  const QEDConfig& cfg, const IdealBasisF& basis,
                                  std::span<const SpacetimePoint> primed_points,
                                  bool expect_solution = true);

struct DoubleCover {
  MultiVectorF half_turn;  // exp(e12, pi)
  MultiVectorF full_turn;  // exp(e12, 2 pi)
  double full_turn_plus_one = 0.0;   // ||S_2pi + 1||
  double half_turn_squared_error = 0.0;  // ||S_pi^2 - S_2pi||
  double matrix_identity_error = 0.0;   // ||P(S_2pi) - Id||
  double half_turn_matrix_error = 0.0;  // ||P(S_pi)^2 - P(S_2pi)||
};

DoubleCover double_cover_demo();

}  // namespace tensordirac
