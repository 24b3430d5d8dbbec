#pragma once

#include <array>

#include "tensordirac/generators.hpp"
#include "tensordirac/linalg.hpp"

namespace tensordirac {

/// gamma(U)^n_k defined by U t_k = gamma(U)^n_k t_n. Column k holds the
/// components of U t_k, read off with the scalar product (U t_k, t_n).
template <class S>
Mat4<S> gamma(const MultiVector<S>& u, const IdealBasis<S>& basis) {
  Mat4<S> m;
  for (int k = 0; k < 4; ++k) {
    MultiVector<S> image = u * basis.tk[k];
    for (int n = 0; n < 4; ++n) m(n, k) = inner(image, basis.tk[n], basis.gen);
  }
  return m;
}

/// gamma^mu = gamma(e^mu) for mu = 0..3.
template <class S>
std::array<Mat4<S>, 4> gamma_matrices(const IdealBasis<S>& basis) {
  std::array<Mat4<S>, 4> g;
  for (int mu = 0; mu < kDim; ++mu) g[mu] = gamma(MultiVector<S>::basis(mu), basis);
  return g;
}

template <class S>
std::array<Mat4<S>, 4> gamma_matrices(const GeneratorSet<S>& gen) {
  return gamma_matrices(idempotent(gen));
}

/// The standard Dirac representation, entered by hand.
template <class S>
std::array<Mat4<S>, 4> standard_dirac_matrices() {
  using T = ScalarTraits<S>;
  const S one = T::one();
  const S mone = T::from_int(-1);
  const S i = T::i();
  const S mi = -T::i();
  std::array<Mat4<S>, 4> g;
  g[0](0, 0) = one;
  g[0](1, 1) = one;
  g[0](2, 2) = mone;
  g[0](3, 3) = mone;

  g[1](0, 3) = mone;
  g[1](1, 2) = mone;
  g[1](2, 1) = one;
  g[1](3, 0) = one;

  g[2](0, 3) = i;
  g[2](1, 2) = mi;
  g[2](2, 1) = mi;
  g[2](3, 0) = i;

  g[3](0, 2) = mone;
  g[3](1, 3) = one;
  g[3](2, 0) = one;
  g[3](3, 1) = mone;
  return g;
}

}  // namespace tensordirac
