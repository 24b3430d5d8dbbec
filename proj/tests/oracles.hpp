#pragma once

// Reference computations that share no code path with the library's
// precomputed blade tables.

#include <algorithm>
#include <array>
#include <vector>

#include "tensordirac/multivector.hpp"

namespace oracle {

using tensordirac::QComplex;
using tensordirac::MultiVectorQ;

struct Word {
  int sign = 1;
  std::vector<int> factors;
};

// Rewrites a product of basis covectors e^{i1} e^{i2} ... into canonical
// form using only e^mu e^mu = g^{mu mu} and e^mu e^nu = -e^nu e^mu (mu != nu).
inline Word rewrite(std::vector<int> factors) {
  static constexpr int g[4] = {1, -1, -1, -1};
  Word w{1, std::move(factors)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.factors.size(); ++i) {
      if (w.factors[i] == w.factors[i + 1]) {
        w.sign *= g[w.factors[i]];
        w.factors.erase(w.factors.begin() + i, w.factors.begin() + i + 2);
        changed = true;
        break;
      }
      if (w.factors[i] > w.factors[i + 1]) {
        std::swap(w.factors[i], w.factors[i + 1]);
        w.sign = -w.sign;
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::vector<int> factors_of(unsigned mask) {
  std::vector<int> f;
  for (int mu = 0; mu < 4; ++mu)
    if (mask & (1u << mu)) f.push_back(mu);
  return f;
}

inline unsigned mask_of(const std::vector<int>& f) {
  unsigned m = 0;
  for (int mu : f) m |= 1u << mu;
  return m;
}

// Sign of the permutation sorting a list of distinct indices; 0 if repeated.
inline int permutation_sign(std::vector<int> idx) {
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] == idx[j]) return 0;
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  return sign;
}

// Central product by expanding every blade into its word of basis covectors.
inline MultiVectorQ symbolic_product(const MultiVectorQ& u, const MultiVectorQ& v) {
  MultiVectorQ w;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) {
      auto fa = factors_of(a);
      auto fb = factors_of(b);
      fa.insert(fa.end(), fb.begin(), fb.end());
      Word word = rewrite(fa);
      QComplex term = u[a] * v[b];
      if (word.sign > 0)
        w[mask_of(word.factors)] += term;
      else
        w[mask_of(word.factors)] -= term;
    }
  return w;
}

// Hodge star by the defining sum
//   1/(k!(4-k)!) eps_{m1..m4} u^{m1..mk} e^{m(k+1)} ^ ... ^ e^{m4}
// over all index tuples, for a homogeneous grade-k form whose blade
// coefficients are the ascending tensor components.
inline MultiVectorQ hodge_definition(const MultiVectorQ& u, int k) {
  static constexpr int g[4] = {1, -1, -1, -1};
  long fact[5] = {1, 1, 2, 6, 24};
  MultiVectorQ w;
  for (int m0 = 0; m0 < 4; ++m0)
    for (int m1 = 0; m1 < 4; ++m1)
      for (int m2 = 0; m2 < 4; ++m2)
        for (int m3 = 0; m3 < 4; ++m3) {
          std::vector<int> all{m0, m1, m2, m3};
          int eps = permutation_sign(all);
          if (eps == 0) continue;
          std::vector<int> head(all.begin(), all.begin() + k);
          std::vector<int> tail(all.begin() + k, all.end());
          // u_{head} from the ascending component
          int sh = permutation_sign(head);
          std::vector<int> sorted = head;
          std::sort(sorted.begin(), sorted.end());
          int raise = 1;
          for (int mu : head) raise *= g[mu];
          int st = permutation_sign(tail);
          std::vector<int> tsorted = tail;
          std::sort(tsorted.begin(), tsorted.end());
          int sign = eps * sh * raise * st;
          QComplex c = u[mask_of(sorted)];
          if (sign > 0)
            w[mask_of(tsorted)] += c;
          else
            w[mask_of(tsorted)] -= c;
        }
  QComplex scale(tensordirac::Rational(1, fact[k] * fact[4 - k]));
  w *= scale;
  return w;
}

}  // namespace oracle
