#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tensordirac/literal.hpp"

using namespace tensordirac;

namespace {
using MQ = MultiVectorQ;
using TQ = ScalarTraits<QComplex>;
}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_multivector<QComplex>("1 + e0") == MQ::one() + MQ::basis(0));
  CHECK(parse_multivector<QComplex>("(0,1) e12") == MQ::blade(0b0110, TQ::i()));
  CHECK(parse_multivector<QComplex>("e0^e1 + 2 e23") ==
        MQ::blade(0b0011) + MQ::blade(0b1100, TQ::from_int(2)));
  CHECK(parse_multivector<QComplex>("e0 ^ e1") == MQ::blade(0b0011));
  CHECK(parse_multivector<QComplex>("1+e0") == parse_multivector<QComplex>("  1 +  e0 "));
  CHECK(parse_multivector<QComplex>("-e0 - 0.25 e013") ==
        -MQ::basis(0) - MQ::blade(0b1011, TQ::from_ratio(1, 4)));
  CHECK(parse_multivector<QComplex>("3/4 e2") == MQ::blade(0b0100, TQ::from_ratio(3, 4)));
  CHECK(parse_multivector<QComplex>("2 1") == MQ::scalar(TQ::from_int(2)));
  CHECK(parse_multivector<QComplex>("2e0") == MQ::basis(0) * TQ::from_int(2));
  CHECK(parse_multivector<QComplex>("1.5e+2") == MQ::scalar(TQ::from_int(150)));
  CHECK(parse_multivector<QComplex>("e1 + e1") == MQ::basis(1) * TQ::from_int(2));
  auto f = parse_multivector<Cplx>("(1.5,-2) e0123");
  CHECK(f[15] == Cplx(1.5, -2));
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](const char* text) -> long {
    try {
      parse_multivector<QComplex>(text);
    } catch (const ParseError& err) {
      return static_cast<long>(err.position());
    }
    return -1;
  };
  CHECK(position_of("e10") == 2);
  CHECK(position_of("e4") == 1);
  CHECK(position_of("1 + ") == 4);
  CHECK(position_of("(1,2 e0") == 5);
  CHECK(position_of("") == 0);
  CHECK(position_of("1 e0 e1") == 5);
  CHECK(position_of("x") == 0);
  CHECK(position_of("e0^e0") == 4);
}

TEST_CASE("format is canonical") {
  CHECK(format_multivector(MQ()) == "0");
  CHECK(format_multivector(parse_multivector<QComplex>("e0^e1 + 2 e23")) == "e01 + 2 e23");
  CHECK(format_multivector(parse_multivector<QComplex>("e1 - 1 + (0,1) e12")) == "-1 + e1 + (0,1) e12");
  CHECK(format_multivector(parse_multivector<QComplex>("0.25")) == "1/4");
  CHECK(format_multivector(parse_multivector<Cplx>("0.25 e3")) == "0.25 e3");
  CHECK(format_multivector(parse_multivector<Cplx>("1e-05 e3")) == "1e-05 e3");
}

TEST_CASE("parse inverts format on random multivectors") {
  std::mt19937_64 rng(29);
  for (int n = 0; n < 200; ++n) {
    MQ u = random_multivector<QComplex>(rng);
    CHECK(parse_multivector<QComplex>(format_multivector(u)) == u);
    MultiVectorF f = random_multivector<Cplx>(rng);
    CHECK(parse_multivector<Cplx>(format_multivector(f)) == f);
    std::string s = format_multivector(u);
    CHECK(format_multivector(parse_multivector<QComplex>(s)) == s);
  }
}
