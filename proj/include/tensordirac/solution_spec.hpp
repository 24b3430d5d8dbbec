#pragma once

#include <optional>

#include "json.hpp"
#include "tensordirac/dirac.hpp"

namespace tensordirac {

/// Gauge function catalog: zero, a constant c, or c x^mu.
struct GaugeChoice {
  enum class Kind { zero, constant, linear };
  Kind kind = Kind::zero;
  double c = 0.0;
  int mu = 0;

  ScalarFunction lambda() const;
};

/// A member of the plane-wave solution family, e.g.
///   {"mass": 1, "branch": 2, "momentum": [1.25, 0.75, 0, 0],
///    "gauge": {"kind": "linear", "c": 0.3, "mu": 1}}
/// Without "momentum" the solution is at rest. A momentum must be on shell
/// with p_0 of the branch's sign (positive for branches 1, 2).
struct SolutionSpec {
  double mass = 1.0;
  int branch = 1;
  std::optional<Vec4> momentum;
  GaugeChoice gauge;

  /// Throws std::invalid_argument on unknown keys, bad types or values.
  static SolutionSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct Solution {
  PlaneWave wave;
  FormField psi;
  EMPotential a;
};

/// The boosted rest-frame wave with the requested momentum, converted to an
/// even form and gauge transformed.
Solution build_solution(const SolutionSpec& spec, const IdealBasisF& basis);

}  // namespace tensordirac
