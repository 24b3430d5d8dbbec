#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

#include "tensordirac/scalar.hpp"

namespace tensordirac {

inline constexpr int kDim = 4;
inline constexpr int kBladeCount = 16;
inline constexpr unsigned kVolumeMask = 0b1111;

// g^{mu mu} for diag(1,-1,-1,-1).
inline constexpr std::array<int, kDim> kMetric{1, -1, -1, -1};

/// A basis blade e^{mu1} ^ ... ^ e^{muk}, mu1 < ... < muk, as a bit mask:
/// bit mu is set iff e^mu is a factor. Mask 0 is the scalar 1, mask 15 is
/// the volume form.
struct BladeIndex {
  unsigned mask = 0;

  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(unsigned m) : mask(m) {
    if (m >= kBladeCount) throw std::out_of_range("blade mask outside [0,15]");
  }
  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool operator==(const BladeIndex&) const = default;
};

namespace detail {

// Sign of sorting the concatenated factor list (a, b) into ascending order
// when a and b are each already ascending.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned j = 0; j < kDim; ++j) {
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// Product of g^{mu mu} over the bits of mask.
constexpr int metric_sign(unsigned mask) {
  int s = 1;
  for (unsigned j = 0; j < kDim; ++j) {
    if (mask & (1u << j)) s *= kMetric[j];
  }
  return s;
}

struct SignedBlade {
  int sign;
  unsigned mask;
};

using ProductTable = std::array<std::array<SignedBlade, kBladeCount>, kBladeCount>;

constexpr ProductTable make_central_table() {
  ProductTable t{};
  for (unsigned a = 0; a < kBladeCount; ++a)
    for (unsigned b = 0; b < kBladeCount; ++b)
      t[a][b] = {reorder_sign(a, b) * metric_sign(a & b), a ^ b};
  return t;
}

constexpr ProductTable make_wedge_table() {
  ProductTable t{};
  for (unsigned a = 0; a < kBladeCount; ++a)
    for (unsigned b = 0; b < kBladeCount; ++b)
      t[a][b] = {(a & b) ? 0 : reorder_sign(a, b), a | b};
  return t;
}

// star e^I = (prod_{mu in I} g^{mu mu}) eps_{I J} e^J, J the ascending
// complement of I, eps_{0123} = 1.
constexpr std::array<SignedBlade, kBladeCount> make_hodge_table() {
  std::array<SignedBlade, kBladeCount> t{};
  for (unsigned a = 0; a < kBladeCount; ++a) {
    unsigned comp = a ^ kVolumeMask;
    t[a] = {metric_sign(a) * reorder_sign(a, comp), comp};
  }
  return t;
}

inline constexpr ProductTable kCentralTable = make_central_table();
inline constexpr ProductTable kWedgeTable = make_wedge_table();
inline constexpr auto kHodgeTable = make_hodge_table();

}  // namespace detail

/// Sign and resulting mask of the central product of two basis blades.
constexpr detail::SignedBlade blade_product(unsigned a, unsigned b) {
  return detail::kCentralTable[a][b];
}

/// Complex exterior form on R^{1,3}: 16 coefficients over the blade basis.
/// Blade coefficients coincide with the tensor components u_{mu1..muk} for
/// ascending indices.
template <class S>
class MultiVector {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;

  MultiVector() { coeffs_.fill(Traits::zero()); }

  static MultiVector scalar(const S& s) {
    MultiVector m;
    m.coeffs_[0] = s;
    return m;
  }
  static MultiVector blade(unsigned mask, const S& s = Traits::one()) {
    MultiVector m;
    m.coeffs_.at(mask) = s;
    return m;
  }
  /// e^mu
  static MultiVector basis(int mu) {
    if (mu < 0 || mu >= kDim) throw std::out_of_range("basis index outside [0,3]");
    return blade(1u << mu);
  }
  static MultiVector one() { return scalar(Traits::one()); }
  /// The volume form e^0 ^ e^1 ^ e^2 ^ e^3.
  static MultiVector volume() { return blade(kVolumeMask); }

  const S& operator[](unsigned mask) const { return coeffs_[mask]; }
  S& operator[](unsigned mask) { return coeffs_[mask]; }
  std::span<const S, kBladeCount> coeffs() const { return coeffs_; }

  MultiVector& operator+=(const MultiVector& o) {
    for (int k = 0; k < kBladeCount; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  MultiVector& operator-=(const MultiVector& o) {
    for (int k = 0; k < kBladeCount; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  MultiVector& operator*=(const S& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator-(MultiVector a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend MultiVector operator*(MultiVector a, const S& s) { return a *= s; }
  friend MultiVector operator*(const S& s, MultiVector a) { return a *= s; }

  /// Central (Clifford) product.
  friend MultiVector operator*(const MultiVector& u, const MultiVector& v) {
    MultiVector w;
    for (unsigned a = 0; a < kBladeCount; ++a) {
      if (Traits::is_zero(u.coeffs_[a])) continue;
      for (unsigned b = 0; b < kBladeCount; ++b) {
        if (Traits::is_zero(v.coeffs_[b])) continue;
        auto [sign, mask] = detail::kCentralTable[a][b];
        S term = u.coeffs_[a] * v.coeffs_[b];
        if (sign > 0)
          w.coeffs_[mask] += term;
        else
          w.coeffs_[mask] -= term;
      }
    }
    return w;
  }

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

 private:
  std::array<S, kBladeCount> coeffs_;
};

using MultiVectorF = MultiVector<Cplx>;
using MultiVectorQ = MultiVector<QComplex>;

template <class S>
MultiVector<S> wedge(const MultiVector<S>& u, const MultiVector<S>& v) {
  using Traits = ScalarTraits<S>;
  MultiVector<S> w;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    if (Traits::is_zero(u[a])) continue;
    for (unsigned b = 0; b < kBladeCount; ++b) {
      auto [sign, mask] = detail::kWedgeTable[a][b];
      if (sign == 0 || Traits::is_zero(v[b])) continue;
      S term = u[a] * v[b];
      if (sign > 0)
        w[mask] += term;
      else
        w[mask] -= term;
    }
  }
  return w;
}

/// Hodge star, applied blade by blade: Lambda_k -> Lambda_{4-k}.
template <class S>
MultiVector<S> hodge_star(const MultiVector<S>& u) {
  MultiVector<S> w;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    auto [sign, mask] = detail::kHodgeTable[a];
    w[mask] = sign > 0 ? u[a] : -u[a];
  }
  return w;
}

/// Componentwise complex conjugate.
template <class S>
MultiVector<S> bar(const MultiVector<S>& u) {
  MultiVector<S> w;
  for (unsigned a = 0; a < kBladeCount; ++a) w[a] = ScalarTraits<S>::conj(u[a]);
  return w;
}

/// U* = (-1)^{k(k-1)/2} conj(U) on grade k. An antiautomorphism.
template <class S>
MultiVector<S> star_conj(const MultiVector<S>& u) {
  MultiVector<S> w;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    int k = std::popcount(a);
    S c = ScalarTraits<S>::conj(u[a]);
    w[a] = ((k * (k - 1) / 2) % 2) ? -c : c;
  }
  return w;
}

/// U^dagger = H U* H without checking H^2 = 1.
template <class S>
MultiVector<S> dagger_unchecked(const MultiVector<S>& u, const MultiVector<S>& h) {
  return h * star_conj(u) * h;
}

template <class S>
MultiVector<S> grade_project(const MultiVector<S>& u, int k) {
  if (k < 0 || k > kDim) throw std::out_of_range("grade outside [0,4]");
  MultiVector<S> w;
  for (unsigned a = 0; a < kBladeCount; ++a)
    if (std::popcount(a) == k) w[a] = u[a];
  return w;
}

template <class S>
MultiVector<S> even_part(const MultiVector<S>& u) {
  MultiVector<S> w;
  for (unsigned a = 0; a < kBladeCount; ++a)
    if (std::popcount(a) % 2 == 0) w[a] = u[a];
  return w;
}

template <class S>
MultiVector<S> odd_part(const MultiVector<S>& u) {
  return u - even_part(u);
}

/// Tr(1) = 1, Tr of every other blade 0.
template <class S>
S trace(const MultiVector<S>& u) {
  return u[0];
}

template <class S>
MultiVector<S> commutator(const MultiVector<S>& u, const MultiVector<S>& v) {
  return u * v - v * u;
}

template <class S>
MultiVector<S> anticommutator(const MultiVector<S>& u, const MultiVector<S>& v) {
  return u * v + v * u;
}

/// Largest coefficient magnitude.
template <class S>
double max_abs(const MultiVector<S>& u) {
  double m = 0.0;
  for (const auto& c : u.coeffs()) m = std::max(m, ScalarTraits<S>::magnitude(c));
  return m;
}

template <class S>
double distance(const MultiVector<S>& u, const MultiVector<S>& v) {
  return max_abs(u - v);
}

/// Exact backend: equality. Float backend: max-norm distance within tol.
template <class S>
bool close(const MultiVector<S>& u, const MultiVector<S>& v, double tol) {
  if constexpr (ScalarTraits<S>::exact)
    return u == v;
  else
    return distance(u, v) <= tol;
}

/// Largest imaginary part among the coefficients.
template <class S>
double max_imag(const MultiVector<S>& u) {
  double m = 0.0;
  for (const auto& c : u.coeffs()) m = std::max(m, std::abs(ScalarTraits<S>::im(c)));
  return m;
}

template <class S>
bool is_real(const MultiVector<S>& u, double tol = 0.0) {
  if constexpr (ScalarTraits<S>::exact) {
    for (const auto& c : u.coeffs())
      if (sgn(c.im) != 0) return false;
    return true;
  } else {
    return max_imag(u) <= tol;
  }
}

/// Largest coefficient outside grade k.
template <class S>
double off_grade(const MultiVector<S>& u, int k) {
  return max_abs(u - grade_project(u, k));
}

template <class S>
bool is_homogeneous(const MultiVector<S>& u, int k, double tol = 0.0) {
  if constexpr (ScalarTraits<S>::exact)
    return u == grade_project(u, k);
  else
    return off_grade(u, k) <= tol;
}

template <class S>
bool is_even(const MultiVector<S>& u, double tol = 0.0) {
  if constexpr (ScalarTraits<S>::exact)
    return u == even_part(u);
  else
    return max_abs(odd_part(u)) <= tol;
}

/// Bitmask of grades with a nonzero coefficient (bit k for grade k).
template <class S>
unsigned grades_present(const MultiVector<S>& u, double tol = 0.0) {
  unsigned g = 0;
  for (unsigned a = 0; a < kBladeCount; ++a)
    if (ScalarTraits<S>::magnitude(u[a]) > tol) g |= 1u << std::popcount(a);
  return g;
}

template <class S>
MultiVector<S> pow(MultiVector<S> u, unsigned n) {
  MultiVector<S> r = MultiVector<S>::one();
  while (n) {
    if (n & 1u) r = r * u;
    u = u * u;
    n >>= 1u;
  }
  return r;
}

inline MultiVectorF to_float(const MultiVectorQ& u) {
  MultiVectorF w;
  for (unsigned a = 0; a < kBladeCount; ++a) w[a] = ScalarTraits<QComplex>::to_cplx(u[a]);
  return w;
}

inline MultiVectorQ to_exact(const MultiVectorF& u) {
  MultiVectorQ w;
  for (unsigned a = 0; a < kBladeCount; ++a)
    w[a] = ScalarTraits<QComplex>::from_double(u[a].real(), u[a].imag());
  return w;
}

/// U^dagger = H U* H. Rejects H with H^2 != 1 (exactly, or within tol on
/// the float backend).
template <class S>
MultiVector<S> dagger(const MultiVector<S>& u, const MultiVector<S>& h, double tol = 1e-12) {
  if (!close(h * h, MultiVector<S>::one(), tol))
    throw std::invalid_argument("dagger: H^2 != 1");
  return dagger_unchecked(u, h);
}

// Random sampling used by the property batteries.

template <class S>
MultiVector<S> random_multivector(std::mt19937_64& rng) {
  MultiVector<S> u;
  for (unsigned a = 0; a < kBladeCount; ++a) u[a] = ScalarTraits<S>::random(rng);
  return u;
}

template <class S>
MultiVector<S> random_real_multivector(std::mt19937_64& rng) {
  MultiVector<S> u;
  for (unsigned a = 0; a < kBladeCount; ++a) u[a] = ScalarTraits<S>::random_real(rng);
  return u;
}

template <class S>
MultiVector<S> random_real_even(std::mt19937_64& rng) {
  MultiVector<S> u;
  for (unsigned a = 0; a < kBladeCount; ++a)
    if (std::popcount(a) % 2 == 0) u[a] = ScalarTraits<S>::random_real(rng);
  return u;
}

template <class S>
MultiVector<S> random_real_grade(std::mt19937_64& rng, int k) {
  MultiVector<S> u;
  for (unsigned a = 0; a < kBladeCount; ++a)
    if (std::popcount(a) == k) u[a] = ScalarTraits<S>::random_real(rng);
  return u;
}

}  // namespace tensordirac
