#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensordirac/linalg.hpp"
#include "tensordirac/multivector.hpp"

namespace tensordirac {

inline constexpr double kAlgebraTolerance = 1e-12;

struct GeneratorCondition {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

/// Outcome of checking a candidate (H, I, K) against the generator relations.
struct ValidationReport {
  std::vector<GeneratorCondition> conditions;

  bool ok() const {
    for (const auto& c : conditions)
      if (!c.passed) return false;
    return true;
  }
  std::string failures() const {
    std::string out;
    for (const auto& c : conditions)
      if (!c.passed) out += (out.empty() ? "" : ", ") + c.name;
    return out;
  }
};

/// Checks H^2 = 1, I^2 = K^2 = -1, [H,I] = [H,K] = {I,K} = 0, plus the grade
/// and reality requirements (H in Lambda_1, I and K in Lambda_2, all real).
template <class S>
ValidationReport validate_generators(const MultiVector<S>& h, const MultiVector<S>& i,
                                     const MultiVector<S>& k,
                                     double tol = kAlgebraTolerance) {
  using MV = MultiVector<S>;
  const MV one = MV::one();
  const MV zero;
  ValidationReport r;
  auto add = [&](std::string name, const MV& lhs, const MV& rhs) {
    r.conditions.push_back({std::move(name), close(lhs, rhs, tol), distance(lhs, rhs)});
  };
  auto add_flag = [&](std::string name, bool ok, double residual) {
    r.conditions.push_back({std::move(name), ok, residual});
  };
  add("H^2 = 1", h * h, one);
  add("I^2 = -1", i * i, -one);
  add("K^2 = -1", k * k, -one);
  add("[H,I] = 0", commutator(h, i), zero);
  add("[H,K] = 0", commutator(h, k), zero);
  add("{I,K} = 0", anticommutator(i, k), zero);
  add_flag("H in Lambda_1", is_homogeneous(h, 1, tol), off_grade(h, 1));
  add_flag("I in Lambda_2", is_homogeneous(i, 2, tol), off_grade(i, 2));
  add_flag("K in Lambda_2", is_homogeneous(k, 2, tol), off_grade(k, 2));
  double imag = std::max({max_imag(h), max_imag(i), max_imag(k)});
  add_flag("H, I, K real", is_real(h, tol) && is_real(i, tol) && is_real(k, tol), imag);
  return r;
}

/// A validated set of invariant generators (ell, H, I, K). Only constructible
/// from a triple that passes every condition of validate_generators.
template <class S>
class GeneratorSet {
 public:
  using MV = MultiVector<S>;

  static GeneratorSet create(const MV& h, const MV& i, const MV& k, double tol = kAlgebraTolerance) {
    ValidationReport report = validate_generators(h, i, k, tol);
    if (!report.ok())
      throw std::invalid_argument("invalid generators: " + report.failures());
    return GeneratorSet(h, i, k);
  }

  const MV& H() const { return h_; }
  const MV& I() const { return i_; }
  const MV& K() const { return k_; }
  const MV& ell() const { return ell_; }

 private:
  GeneratorSet(const MV& h, const MV& i, const MV& k)
      : h_(h), i_(i), k_(k), ell_(MV::volume()) {}

  MV h_, i_, k_, ell_;
};

/// H = e^0, I = -e^1^e^2, K = -e^1^e^3.
template <class S>
GeneratorSet<S> default_generators() {
  using MV = MultiVector<S>;
  using T = ScalarTraits<S>;
  MV h = MV::basis(0);
  MV i = MV::blade(0b0110, T::from_int(-1));
  MV k = MV::blade(0b1010, T::from_int(-1));
  return GeneratorSet<S>::create(h, i, k);
}

/// Conjugates every generator by a Spin element: X -> S* X S.
template <class S>
GeneratorSet<S> conjugate_generators(const GeneratorSet<S>& gen, const MultiVector<S>& s,
                                     double tol = kAlgebraTolerance) {
  MultiVector<S> sc = star_conj(s);
  return GeneratorSet<S>::create(sc * gen.H() * s, sc * gen.I() * s, sc * gen.K() * s, tol);
}

struct BasisElement16 {
  const char* label;
  int grade;
};

/// Labels and grades of the 16-element basis built from the generators.
inline constexpr std::array<BasisElement16, 16> kBasis16Layout{{
    {"1", 0},
    {"H", 1},   {"ell H I", 1}, {"ell H K", 1}, {"ell H I K", 1},
    {"I", 2},   {"K", 2},       {"I K", 2},     {"ell I", 2},     {"ell K", 2}, {"ell I K", 2},
    {"H I", 3}, {"H K", 3},     {"H I K", 3},   {"ell H", 3},
    {"ell", 4},
}};

template <class S>
std::array<MultiVector<S>, 16> basis16(const GeneratorSet<S>& gen) {
  const auto& h = gen.H();
  const auto& i = gen.I();
  const auto& k = gen.K();
  const auto& l = gen.ell();
  return {MultiVector<S>::one(),
          h, l * h * i, l * h * k, l * h * i * k,
          i, k, i * k, l * i, l * k, l * i * k,
          h * i, h * k, h * i * k, l * h,
          l};
}

/// Rank of the 16x16 coefficient matrix of a list of multivectors.
template <class S, std::size_t N>
int coefficient_rank(const std::array<MultiVector<S>, N>& list, double tol = 1e-10) {
  std::vector<std::vector<S>> rows;
  for (const auto& u : list) rows.emplace_back(u.coeffs().begin(), u.coeffs().end());
  return matrix_rank(std::move(rows), tol);
}

/// The idempotent t = 1/4 (1 + H)(1 - iI), the generators F_k of the left
/// ideal I(t), and its orthonormal basis t_k = F_k t.
template <class S>
struct IdealBasis {
  GeneratorSet<S> gen;
  MultiVector<S> t;
  std::array<MultiVector<S>, 4> F;
  std::array<MultiVector<S>, 4> tk;
};

template <class S>
IdealBasis<S> idempotent(const GeneratorSet<S>& gen) {
  using MV = MultiVector<S>;
  using T = ScalarTraits<S>;
  const MV one = MV::one();
  MV t = (one + gen.H()) * (one - T::i() * gen.I());
  t *= T::from_ratio(1, 4);
  std::array<MV, 4> f{one, gen.K(), -(gen.I() * gen.ell()), -(gen.K() * gen.I() * gen.ell())};
  std::array<MV, 4> tk;
  for (int k = 0; k < 4; ++k) tk[k] = f[k] * t;
  return {gen, t, f, tk};
}

/// (U, V) = 4 Tr(U V^dagger), with V^dagger = H V* H.
template <class S>
S inner(const MultiVector<S>& u, const MultiVector<S>& v, const MultiVector<S>& h,
        double tol = kAlgebraTolerance) {
  return ScalarTraits<S>::from_int(4) * trace(u * dagger(v, h, tol));
}

template <class S>
S inner(const MultiVector<S>& u, const MultiVector<S>& v, const GeneratorSet<S>& gen) {
  return ScalarTraits<S>::from_int(4) * trace(u * dagger_unchecked(v, gen.H()));
}

class NotInIdeal : public std::domain_error {
 public:
  explicit NotInIdeal(double residual)
      : std::domain_error("form is not in the left ideal I(t): |Phi t - Phi| = " +
                          std::to_string(residual)),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Membership in I(t): Phi t = Phi.
template <class S>
bool in_ideal(const MultiVector<S>& phi, const IdealBasis<S>& basis, double tol = kAlgebraTolerance) {
  return close(phi * basis.t, phi, tol);
}

/// Components of an element of the ideal, without the membership check.
template <class S>
std::array<S, 4> project_on_ideal(const MultiVector<S>& phi, const IdealBasis<S>& basis) {
  std::array<S, 4> psi;
  for (int k = 0; k < 4; ++k) psi[k] = inner(phi, basis.tk[k], basis.gen);
  return psi;
}

/// psi^k = (Phi, t_k), so that Phi = psi^k t_k.
template <class S>
std::array<S, 4> ideal_components(const MultiVector<S>& phi, const IdealBasis<S>& basis,
                                  double tol = kAlgebraTolerance) {
  if (!in_ideal(phi, basis, tol)) throw NotInIdeal(distance(phi * basis.t, phi));
  return project_on_ideal(phi, basis);
}

template <class S>
MultiVector<S> from_ideal_components(const std::array<S, 4>& psi, const IdealBasis<S>& basis) {
  MultiVector<S> phi;
  for (int k = 0; k < 4; ++k) phi += psi[k] * basis.tk[k];
  return phi;
}

/// Real even form Psi = F_k (alpha^k + beta^k I) for psi^k = alpha^k + i beta^k.
template <class S>
MultiVector<S> even_from_components(const std::array<S, 4>& psi, const IdealBasis<S>& basis) {
  using MV = MultiVector<S>;
  using T = ScalarTraits<S>;
  MV out;
  for (int k = 0; k < 4; ++k) {
    MV factor = MV::scalar(T::real_part(psi[k])) + T::imag_part(psi[k]) * basis.gen.I();
    out += basis.F[k] * factor;
  }
  return out;
}

/// Unique even solution Psi of Psi t = Phi for Phi in I(t).
template <class S>
MultiVector<S> solve_ideal_equation(const MultiVector<S>& phi, const IdealBasis<S>& basis,
                                    double tol = kAlgebraTolerance) {
  return even_from_components(ideal_components(phi, basis, tol), basis);
}

/// Rank of the complex-linear map U -> U t on Lambda^C (the complex dimension
/// of I(t)).
template <class S>
int ideal_dimension(const IdealBasis<S>& basis, double tol = 1e-10) {
  std::vector<std::vector<S>> rows;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    MultiVector<S> image = MultiVector<S>::blade(a) * basis.t;
    rows.emplace_back(image.coeffs().begin(), image.coeffs().end());
  }
  return matrix_rank(std::move(rows), tol);
}

/// Rank of the real-linear map Psi -> Psi t from the 8 real even blades into
/// Lambda^C viewed as R^32. Injectivity means rank 8.
template <class S>
int even_map_rank(const IdealBasis<S>& basis, double tol = 1e-10) {
  using T = ScalarTraits<S>;
  std::vector<std::vector<S>> rows;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    if (std::popcount(a) % 2) continue;
    MultiVector<S> image = MultiVector<S>::blade(a) * basis.t;
    std::vector<S> row;
    for (const auto& c : image.coeffs()) {
      row.push_back(T::real_part(c));
      row.push_back(T::imag_part(c));
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows), tol);
}

}  // namespace tensordirac
