#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tensordirac/spin.hpp"
#include "tensordirac/generators.hpp"

using namespace tensordirac;

namespace {

using MQ = MultiVectorQ;
using MF = MultiVectorF;
using TQ = ScalarTraits<QComplex>;

MQ blade(unsigned mask, long c = 1) { return MQ::blade(mask, TQ::from_int(c)); }

// Even real Psi with random rational coefficients, and Phi = Psi t.
template <class S>
void check_even_roundtrip(const IdealBasis<S>& basis, std::mt19937_64& rng, int samples) {
  for (int n = 0; n < samples; ++n) {
    MultiVector<S> psi = random_real_even<S>(rng);
    MultiVector<S> phi = psi * basis.t;
    MultiVector<S> back = solve_ideal_equation(phi, basis);
    if constexpr (ScalarTraits<S>::exact)
      CHECK(back == psi);
    else
      CHECK(distance(back, psi) <= 1e-12);
  }
}

template <class S>
void check_ideal_properties(const GeneratorSet<S>& gen, std::mt19937_64& rng) {
  using MV = MultiVector<S>;
  using T = ScalarTraits<S>;
  IdealBasis<S> b = idempotent(gen);
  CHECK(b.t * b.t == b.t);
  CHECK(gen.H() * b.t == b.t);
  CHECK(gen.I() * b.t == T::i() * b.t);
  for (int k = 0; k < 4; ++k)
    for (int n = 0; n < 4; ++n)
      CHECK(inner(b.tk[k], b.tk[n], gen) == (k == n ? T::one() : T::zero()));
  CHECK(ideal_dimension(b) == 4);
  CHECK(even_map_rank(b) == 8);
  check_even_roundtrip(b, rng, 100);

  for (int n = 0; n < 100; ++n) {
    MV phi = random_multivector<S>(rng) * b.t;
    CHECK(in_ideal(phi, b));
    MV psi = solve_ideal_equation(phi, b);
    CHECK(is_even(psi));
    CHECK(is_real(psi));
    CHECK(psi * b.t == phi);
    S norm = inner(phi, phi, gen);
    CHECK(norm.im == 0);
    CHECK(norm.re > 0);
    MV chi = random_multivector<S>(rng) * b.t;
    S a = T::random(rng);
    CHECK(inner(phi, chi, gen) == T::conj(inner(chi, phi, gen)));
    CHECK(inner(a * phi, chi, gen) == a * inner(phi, chi, gen));
    CHECK(inner(phi + chi, phi, gen) == inner(phi, phi, gen) + inner(chi, phi, gen));
  }
}

}  // namespace

TEST_CASE("default generators") {
  auto gen = default_generators<QComplex>();
  CHECK(gen.H() == MQ::basis(0));
  CHECK(gen.I() == blade(0b0110, -1));
  CHECK(gen.K() == blade(0b1010, -1));
  CHECK(gen.ell() == MQ::volume());
  CHECK(validate_generators(gen.H(), gen.I(), gen.K()).ok());
}

TEST_CASE("validate_generators flags each failing condition") {
  auto r1 = validate_generators(MQ::basis(1), blade(0b0110, -1), blade(0b1010, -1));
  CHECK_FALSE(r1.ok());
  // e^1 also fails to commute with e^1 e^2 and e^1 e^3.
  CHECK(r1.failures() == "H^2 = 1, [H,I] = 0, [H,K] = 0");

  // e12 and e23 share one index, so they anticommute: a valid triple.
  auto r2 = validate_generators(MQ::basis(0), blade(0b0110, -1), blade(0b1100, -1));
  CHECK(r2.ok());

  auto r3 = validate_generators(MQ::basis(0), blade(0b0110, -1), blade(0b0110, -1));
  CHECK(r3.failures() == "{I,K} = 0");

  auto r4 = validate_generators(MQ::basis(0), blade(0b0011), blade(0b1010, -1));
  CHECK_FALSE(r4.ok());

  auto r5 = validate_generators(MQ::basis(0) * TQ::i(), blade(0b0110, -1), blade(0b1010, -1));
  CHECK_FALSE(r5.ok());

  CHECK_THROWS_AS(GeneratorSet<QComplex>::create(MQ::basis(1), blade(0b0110, -1), blade(0b1010, -1)),
                  std::invalid_argument);
}

TEST_CASE("16-element basis has the stated grades and full rank") {
  auto gen = default_generators<QComplex>();
  auto list = basis16(gen);
  for (std::size_t j = 0; j < list.size(); ++j) {
    INFO(kBasis16Layout[j].label);
    CHECK(is_homogeneous(list[j], kBasis16Layout[j].grade));
  }
  CHECK(coefficient_rank(list) == 16);
}

TEST_CASE("idempotent for the default generators") {
  auto gen = default_generators<QComplex>();
  auto b = idempotent(gen);
  MQ expected = MQ::one() + MQ::basis(0) + TQ::i() * blade(0b0110) + TQ::i() * blade(0b0111);
  expected *= TQ::from_ratio(1, 4);
  CHECK(b.t == expected);
  CHECK(b.F[0] == MQ::one());
  CHECK(b.F[1] == gen.K());
  CHECK(b.F[2] == -(gen.I() * gen.ell()));
  CHECK(b.F[3] == -(gen.K() * gen.I() * gen.ell()));
  CHECK(trace(b.t) == TQ::from_ratio(1, 4));
  CHECK(dagger(b.t, gen.H()) == b.t);
}

TEST_CASE("scalar product examples") {
  auto gen = default_generators<QComplex>();
  auto b = idempotent(gen);
  CHECK(inner(b.tk[0], b.tk[0], gen.H()) == TQ::one());
  CHECK(inner(b.tk[0], b.tk[1], gen.H()) == TQ::zero());
  CHECK(inner(TQ::i() * b.tk[2], b.tk[2], gen.H()) == TQ::i());
}

TEST_CASE("ideal components") {
  auto gen = default_generators<QComplex>();
  auto b = idempotent(gen);
  auto c1 = ideal_components(b.t, b);
  CHECK(c1 == std::array<QComplex, 4>{TQ::one(), TQ::zero(), TQ::zero(), TQ::zero()});
  MQ phi = TQ::from_int(2) * b.tk[1] + TQ::i() * b.tk[3];
  auto c2 = ideal_components(phi, b);
  CHECK(c2 == std::array<QComplex, 4>{TQ::zero(), TQ::from_int(2), TQ::zero(), TQ::i()});
  CHECK(from_ideal_components(c2, b) == phi);
  CHECK_THROWS_AS(ideal_components(MQ::basis(1), b), NotInIdeal);
  CHECK_THROWS_AS(solve_ideal_equation(MQ::one(), b), NotInIdeal);
}

TEST_CASE("solve_ideal_equation examples") {
  auto gen = default_generators<QComplex>();
  auto b = idempotent(gen);
  CHECK(solve_ideal_equation(b.t, b) == MQ::one());
  CHECK(solve_ideal_equation(TQ::i() * b.t, b) == gen.I());
  CHECK(solve_ideal_equation(b.tk[1], b) == gen.K());
}

TEST_CASE("ideal properties under default and Spin-conjugated generators (exact)") {
  std::mt19937_64 rng(31);
  auto gen = default_generators<QComplex>();
  check_ideal_properties(gen, rng);
  for (int n = 0; n < 3; ++n) {
    MQ s = random_rational_spin(rng);
    auto moved = conjugate_generators(gen, s);
    CHECK(moved.H() != gen.H());
    check_ideal_properties(moved, rng);
  }
}

TEST_CASE("even form round trip through the ideal on the float backend") {
  std::mt19937_64 rng(37);
  auto b = idempotent(default_generators<Cplx>());
  check_even_roundtrip(b, rng, 1000);
  CHECK(ideal_dimension(b) == 4);
  CHECK(even_map_rank(b) == 8);
}
