#include "tensordirac/solution_spec.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "tensordirac/spin.hpp"

namespace tensordirac {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
  if (!j.is_number()) throw std::invalid_argument(std::string("'") + key + "' must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* key) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string("'") + key + "' must be an integer");
  return j.get<int>();
}

void only_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw std::invalid_argument("unknown key '" + key + "' in " + what);
}

}  // namespace

ScalarFunction GaugeChoice::lambda() const {
  switch (kind) {
    case Kind::zero:
      return ScalarFunction::constant(0.0);
    case Kind::constant:
      return ScalarFunction::constant(c);
    case Kind::linear:
      return ScalarFunction::linear(c, mu);
  }
  return {};
}

SolutionSpec SolutionSpec::from_json(const json& j) {
  only_keys(j, {"mass", "branch", "momentum", "gauge"}, "solution spec");
  SolutionSpec s;
  if (j.contains("mass")) s.mass = number(j["mass"], "mass");
  if (j.contains("branch")) s.branch = integer(j["branch"], "branch");
  if (!(s.mass >= 0.0)) throw std::invalid_argument("mass must be nonnegative");
  if (s.branch < 1 || s.branch > 4) throw std::invalid_argument("branch must be 1..4");
  if (j.contains("momentum")) {
    const json& p = j["momentum"];
    if (!p.is_array() || p.size() != 4) throw std::invalid_argument("'momentum' must be an array of 4 numbers");
    Vec4 k{};
    for (int mu = 0; mu < kDim; ++mu) k[mu] = number(p[mu], "momentum");
    s.momentum = k;
  }
  if (j.contains("gauge")) {
    const json& g = j["gauge"];
    only_keys(g, {"kind", "c", "mu"}, "gauge");
    std::string kind = g.value("kind", "zero");
    if (kind == "zero")
      s.gauge.kind = GaugeChoice::Kind::zero;
    else if (kind == "constant")
      s.gauge.kind = GaugeChoice::Kind::constant;
    else if (kind == "linear")
      s.gauge.kind = GaugeChoice::Kind::linear;
    else
      throw std::invalid_argument("gauge kind must be zero, constant or linear");
    if (g.contains("c")) s.gauge.c = number(g["c"], "c");
    if (g.contains("mu")) s.gauge.mu = integer(g["mu"], "mu");
    if (s.gauge.mu < 0 || s.gauge.mu >= kDim) throw std::invalid_argument("gauge mu must be 0..3");
  }
  return s;
}

json SolutionSpec::to_json() const {
  json j{{"mass", mass}, {"branch", branch}};
  if (momentum) j["momentum"] = *momentum;
  static const char* names[] = {"zero", "constant", "linear"};
  j["gauge"] = {{"kind", names[static_cast<int>(gauge.kind)]}, {"c", gauge.c}, {"mu", gauge.mu}};
  return j;
}

Solution build_solution(const SolutionSpec& spec, const IdealBasisF& basis) {
  PlaneWave wave = rest_frame_solution(spec.branch, spec.mass);
  if (spec.momentum) {
    const Vec4& k = *spec.momentum;
    const double kk = k[0] * k[0] - k[1] * k[1] - k[2] * k[2] - k[3] * k[3];
    if (std::abs(kk - spec.mass * spec.mass) > 1e-9 * std::max(1.0, spec.mass * spec.mass))
      throw std::invalid_argument("momentum is off shell: p_mu p^mu = " + std::to_string(kk));
    const double rest0 = wave.momentum()[0];
    if (rest0 == 0.0) {
      if (std::abs(k[0]) + std::abs(k[1]) + std::abs(k[2]) + std::abs(k[3]) > 0.0)
        throw std::invalid_argument("a massless member of the family has zero momentum");
    } else {
      if (k[0] * rest0 <= 0.0) throw std::invalid_argument("p_0 has the wrong sign for this branch");
      // p'_nu = p0 q^0_nu = p0 g_nu P[0][nu] for a pure boost.
      Vec4 u{};
      for (int nu = 0; nu < kDim; ++nu) u[nu] = kMetric[nu] * k[nu] / rest0;
      wave = boost_plane_wave(wave, pure_boost(u), basis);
      for (int nu = 0; nu < kDim; ++nu)
        if (std::abs(wave.momentum()[nu] - k[nu]) > 1e-9 * std::max(1.0, std::abs(k[nu])))
          throw std::invalid_argument("momentum could not be reached by a boost");
    }
  }
  FormField psi = even_from_column(wave.field(), basis);
  GaugedPair g = gauge_transform(psi, EMPotential::zero(), spec.gauge.lambda(), basis.gen);
  return {wave, g.psi, g.a};
}

}  // namespace tensordirac
