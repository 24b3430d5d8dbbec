#include "tensordirac/spin.hpp"

#include <cmath>
#include <numbers>

#include "tensordirac/gamma.hpp"

namespace tensordirac {

namespace {

constexpr std::array<unsigned, 6> kPlanes{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};

MultiVectorF e(int mu) { return MultiVectorF::basis(mu); }

Cplx real(double x) { return {x, 0.0}; }

double scale_of(const Mat4R& p) {
  double m = 1.0;
  for (const auto& row : p)
    for (double x : row) m = std::max(m, std::abs(x));
  return m;
}

Mat4R inverse_lorentz(const Mat4R& p) {
  Mat4R q{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q[i][j] = kMetric[i] * p[j][i] * kMetric[j];
  return q;
}

Mat4R rows_of_conjugates(const MultiVectorF& s) {
  Mat4R p{};
  for (int mu = 0; mu < kDim; ++mu) {
    MultiVectorF image = spin_conjugate(s, e(mu));
    for (int nu = 0; nu < kDim; ++nu) p[mu][nu] = image[1u << nu].real();
  }
  return p;
}

// Unit quaternion (w, x, y, z) of a 3x3 rotation, Shepperd's branch choice.
std::array<double, 4> quaternion_of(const std::array<std::array<double, 3>, 3>& m) {
  const double tr = m[0][0] + m[1][1] + m[2][2];
  double w, x, y, z;
  if (tr >= m[0][0] && tr >= m[1][1] && tr >= m[2][2]) {
    double r = 2.0 * std::sqrt(std::max(0.0, 1.0 + tr));
    w = 0.25 * r;
    x = (m[2][1] - m[1][2]) / r;
    y = (m[0][2] - m[2][0]) / r;
    z = (m[1][0] - m[0][1]) / r;
  } else if (m[0][0] >= m[1][1] && m[0][0] >= m[2][2]) {
    double r = 2.0 * std::sqrt(std::max(0.0, 1.0 + m[0][0] - m[1][1] - m[2][2]));
    w = (m[2][1] - m[1][2]) / r;
    x = 0.25 * r;
    y = (m[0][1] + m[1][0]) / r;
    z = (m[0][2] + m[2][0]) / r;
  } else if (m[1][1] >= m[2][2]) {
    double r = 2.0 * std::sqrt(std::max(0.0, 1.0 + m[1][1] - m[0][0] - m[2][2]));
    w = (m[0][2] - m[2][0]) / r;
    x = (m[0][1] + m[1][0]) / r;
    y = 0.25 * r;
    z = (m[1][2] + m[2][1]) / r;
  } else {
    double r = 2.0 * std::sqrt(std::max(0.0, 1.0 + m[2][2] - m[0][0] - m[1][1]));
    w = (m[1][0] - m[0][1]) / r;
    x = (m[0][2] + m[2][0]) / r;
    y = (m[1][2] + m[2][1]) / r;
    z = 0.25 * r;
  }
  double n = std::sqrt(w * w + x * x + y * y + z * z);
  return {w / n, x / n, y / n, z / n};
}

SpinElement normalized_sign(const MultiVectorF& s) {
  for (unsigned a = 0; a < kBladeCount; ++a) {
    double c = s[a].real();
    if (std::abs(c) > 1e-12) return SpinElement::create(c > 0 ? s : MultiVectorF(-s));
  }
  return SpinElement::create(s);
}

// cosh(phi/2) + sinh(phi/2) n_i e^0 e^i with cosh(phi) = u^0, n along u^i.
MultiVectorF boost_towards(const std::array<double, 4>& u) {
  const double us = std::sqrt(u[1] * u[1] + u[2] * u[2] + u[3] * u[3]);
  if (us <= 1e-15) return MultiVectorF::one();
  const double phi = std::acosh(std::max(1.0, u[0]));
  MultiVectorF plane;
  for (int i = 1; i < kDim; ++i) plane += wedge(e(0), e(i)) * real(u[i] / us);
  return MultiVectorF::scalar(real(std::cosh(0.5 * phi))) + plane * real(std::sinh(0.5 * phi));
}

}  // namespace

Mat4R identity4() {
  Mat4R m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4R matmul(const Mat4R& a, const Mat4R& b) {
  Mat4R c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

double max_abs_diff(const Mat4R& a, const Mat4R& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

SpinElement SpinElement::create(const MultiVectorF& s, double tol) {
  if (!is_spin(s, tol)) throw std::invalid_argument("not a Spin(1,3) element: need S even, real, S*S = 1");
  return SpinElement(s);
}

// ---------------------------------------------------------------------------
// Lorentz matrices

double LorentzMatrix::metric_defect(const Mat4R& p) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += p[k][i] * kMetric[k] * p[k][j];
      m = std::max(m, std::abs(acc - (i == j ? kMetric[i] : 0.0)));
    }
  return m;
}

double LorentzMatrix::det(const Mat4R& p) {
  Mat4R a = p;
  double d = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

LorentzMatrix LorentzMatrix::create(const Mat4R& p, double tol) {
  const double s = scale_of(p);
  const double scaled = tol * s * s;
  double defect = metric_defect(p);
  if (!(defect <= scaled)) throw LorentzError("P^T g P = g", defect);
  double d = det(p);
  if (!(std::abs(d - 1.0) <= scaled)) throw LorentzError("det P = 1", std::abs(d - 1.0));
  if (!(p[0][0] > 0.0)) throw LorentzError("p^0_0 > 0", p[0][0]);
  return LorentzMatrix(p, inverse_lorentz(p));
}

LorentzMatrix LorentzMatrix::identity() { return LorentzMatrix(identity4(), identity4()); }

// ---------------------------------------------------------------------------
// Exponentials

SpinElement exp_bivector(const MultiVectorF& b, double theta) {
  if (!is_homogeneous(b, 2, kAlgebraTolerance) || !is_real(b, kAlgebraTolerance))
    throw std::invalid_argument("exp_bivector needs a real 2-form");
  MultiVectorF b2 = b * b;
  const double c = b2[0].real();
  MultiVectorF rest = b2 - MultiVectorF::scalar(real(c));
  if (std::abs(c) <= kAlgebraTolerance || max_abs(rest) > kAlgebraTolerance * std::max(1.0, std::abs(c)))
    throw std::invalid_argument("bivector is not simple with B^2 = +-1 up to scale; use exp_bivector_series");
  MultiVectorF unit = b * real(1.0 / std::sqrt(std::abs(c)));
  const double h = 0.5 * theta;
  MultiVectorF s = c < 0 ? MultiVectorF::scalar(real(std::cos(h))) + unit * real(std::sin(h))
                         : MultiVectorF::scalar(real(std::cosh(h))) + unit * real(std::sinh(h));
  return SpinElement::create(s);
}

SpinElement exp_bivector_series(const MultiVectorF& b) {
  if (!is_homogeneous(b, 2, kAlgebraTolerance) || !is_real(b, kAlgebraTolerance))
    throw std::invalid_argument("exp_bivector_series needs a real 2-form");
  double norm1 = 0.0;
  for (const auto& c : b.coeffs()) norm1 += std::abs(c);
  int squarings = 0;
  while (norm1 / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const double scaled_norm = norm1 / std::ldexp(1.0, squarings);
  MultiVectorF x = b * real(std::ldexp(1.0, -squarings));

  constexpr int kTerms = 24;
  MultiVectorF sum = MultiVectorF::one();
  MultiVectorF term = MultiVectorF::one();
  for (int n = 1; n < kTerms; ++n) {
    term = term * x * real(1.0 / n);
    sum += term;
  }
  // |sum_{n>=24} x^n/n!| <= b^24/24! e^b in the submultiplicative l1 norm.
  double bound = std::exp(scaled_norm);
  for (int n = 1; n <= kTerms; ++n) bound *= scaled_norm / n;
  if (bound > 1e-15) throw std::runtime_error("exponential series truncation bound too large");
  for (int j = 0; j < squarings; ++j) sum = sum * sum;
  // The series leaves roundoff in the 4-form part; keep the even real part.
  MultiVectorF clean;
  for (unsigned a = 0; a < kBladeCount; ++a)
    if (std::popcount(a) % 2 == 0) clean[a] = real(sum[a].real());
  return SpinElement::create(clean, 1e-10);
}

// ---------------------------------------------------------------------------
// Vector representation and its inverse

SpinElement pure_boost(const Vec4& u) {
  const double norm = u[0] * u[0] - u[1] * u[1] - u[2] * u[2] - u[3] * u[3];
  if (!(u[0] >= 1.0 - 1e-12) || std::abs(norm - 1.0) > 1e-9 * std::max(1.0, u[0] * u[0]))
    throw std::invalid_argument("boost target must be a future unit timelike vector");
  return SpinElement::create(boost_towards(u), 1e-10);
}

LorentzMatrix vector_rep(const SpinElement& s, double tol) {
  const MultiVectorF& v = s.value();
  double leak = grade_leakage(v);
  double scale = std::max(1.0, max_abs(v) * max_abs(v));
  if (leak > tol * scale) throw std::invalid_argument("S* U S leaves the grade of U");
  for (int mu = 0; mu < kDim; ++mu)
    if (max_imag(spin_conjugate(v, e(mu))) > tol * scale)
      throw std::invalid_argument("S* e^mu S has complex coefficients");
  return LorentzMatrix::create(rows_of_conjugates(v), tol);
}

std::pair<SpinElement, SpinElement> spin_from_lorentz(const LorentzMatrix& lm) {
  const Mat4R& p = lm.P();
  // Boost part: the pure boost carrying e^0 to the image row u = S* e^0 S.
  const MultiVectorF sb = boost_towards(p[0]);
  // P = P_R P_B, so P_R = P P_B^{-1} fixes e^0.
  const Mat4R pr = matmul(p, inverse_lorentz(rows_of_conjugates(sb)));
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = pr[i + 1][j + 1];
  const auto [w, x, y, z] = quaternion_of(m);
  // i, j, k -> e23, e31, e12
  MultiVectorF sr = MultiVectorF::scalar(real(w)) + MultiVectorF::blade(0b1100, real(x)) +
                    MultiVectorF::blade(0b1010, real(-y)) + MultiVectorF::blade(0b0110, real(z));
  MultiVectorF s = sr * sb;

  SpinElement first = normalized_sign(s);
  const Mat4R back = rows_of_conjugates(first.value());
  const double err = max_abs_diff(back, p);
  if (err > 1e-9 * scale_of(p) * scale_of(p))
    throw std::runtime_error("spin_from_lorentz round trip failed: " + std::to_string(err));
  return {first, -first};
}

// ---------------------------------------------------------------------------
// Samplers

SpinElement random_spin(std::mt19937_64& rng, int max_factors) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_factors));
  std::uniform_int_distribution<int> plane(0, static_cast<int>(kPlanes.size()) - 1);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> rapidity(-0.75, 0.75);
  MultiVectorF s = MultiVectorF::one();
  const int n = count(rng);
  for (int j = 0; j < n; ++j) {
    unsigned mask = kPlanes[plane(rng)];
    double theta = (mask & 1u) ? rapidity(rng) : angle(rng);
    s = s * exp_bivector(MultiVectorF::blade(mask), theta).value();
  }
  return SpinElement::create(s);
}

MultiVectorQ rational_rotor(unsigned plane_mask, const Rational& u) {
  if (std::popcount(plane_mask) != 2 || plane_mask >= kBladeCount)
    throw std::invalid_argument("rotor plane must be a 2-blade mask");
  const Rational u2 = u * u;
  Rational c, s;
  if (plane_mask & 1u) {
    if (u2 >= 1) throw std::invalid_argument("boost parameter needs |u| < 1");
    c = (1 + u2) / (1 - u2);
    s = 2 * u / (1 - u2);
  } else {
    c = (1 - u2) / (1 + u2);
    s = 2 * u / (1 + u2);
  }
  return MultiVectorQ::scalar(QComplex(c)) + MultiVectorQ::blade(plane_mask, QComplex(s));
}

MultiVectorQ random_rational_spin(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> boost_plane(0, 2);
  std::uniform_int_distribution<int> rot_plane(3, 5);
  std::uniform_int_distribution<long> rnum(-4, 4);
  std::uniform_int_distribution<long> rden(1, 5);

  long p = num(rng);
  std::uniform_int_distribution<long> den(p + 1, 6);
  Rational ub(sign(rng) ? p : -p, den(rng));
  ub.canonicalize();
  MultiVectorQ s = rational_rotor(kPlanes[boost_plane(rng)], ub);
  for (int j = 0; j < 2; ++j) {
    long rp = rnum(rng);
    Rational ur(rp, rden(rng));
    ur.canonicalize();
    s = s * rational_rotor(kPlanes[rot_plane(rng)], ur);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Covariance

PlaneWave boost_plane_wave(const PlaneWave& wave, const SpinElement& s, const IdealBasisF& basis) {
  const Mat4<Cplx> r = gamma(s.value(), basis);
  const Mat4R q = vector_rep(s).Q();
  Vec4 k{};
  for (int nu = 0; nu < kDim; ++nu)
    for (int mu = 0; mu < kDim; ++mu) k[nu] += wave.momentum()[mu] * q[mu][nu];
  return PlaneWave::create(r * wave.amplitude(), k, wave.mass());
}

bool CovarianceReport::ok() const { return failures().empty(); }

std::string CovarianceReport::failures() const {
  std::string out;
  for (const auto& c : claims) {
    bool bad = !(c.identity_residual <= tolerance) ||
               (expect_solution && !(c.equation_residual <= tolerance));
    if (bad) out += (out.empty() ? "" : ",") + c.id;
  }
  return out;
}

CovarianceReport covariance_check(const SpinElement& s, const FormField& psi, const EMPotential& a,
                                  const QEDConfig& cfg, const IdealBasisF& basis,
                                  std::span<const SpacetimePoint> primed_points,
                                  bool expect_solution) {
  const MultiVectorF& sv = s.value();
  const Mat4R q = vector_rep(s).Q();
  const GammaSet gam = gamma_matrices(basis);
  const Mat4<Cplx> r = gamma(sv, basis);
  const Mat4<Cplx> rinv = gamma(star_conj(sv), basis);
  const SpinorField column = column_field(psi, basis);
  const GeneratorSetF& gen = basis.gen;
  const Cplx im_mass(0.0, cfg.mass);

  CovarianceReport rep;
  rep.tolerance = cfg.tolerance;
  rep.expect_solution = expect_solution;

  std::array<MultiVectorF, 4> eprime;
  GammaSet gprime;
  for (int mu = 0; mu < kDim; ++mu) {
    eprime[mu] = spin_conjugate(sv, e(mu));
    gprime[mu] = gamma(eprime[mu], basis);
    rep.gamma_intertwining = std::max(rep.gamma_intertwining, distance(gprime[mu], rinv * gam[mu] * r));
  }

  auto note = [&](CovarianceClaim& c, double identity, double equation, long j) {
    c.identity_residual = std::max(c.identity_residual, identity);
    c.equation_residual = std::max(c.equation_residual, equation);
    bool bad = identity > cfg.tolerance || (expect_solution && equation > cfg.tolerance);
    if (bad && c.first_failure < 0) c.first_failure = j;
  };

  for (std::size_t j = 0; j < primed_points.size(); ++j) {
    const SpacetimePoint& xp = primed_points[j];
    SpacetimePoint x;
    for (int nu = 0; nu < kDim; ++nu)
      for (int l = 0; l < kDim; ++l) x.x[nu] += q[nu][l] * xp[l];

    const Vec4 av = a.components(x);
    Vec4 ap{};
    std::array<SpinorColumn, 4> dcol{};
    std::array<MultiVectorF, 4> dform;
    for (int mu = 0; mu < kDim; ++mu)
      for (int nu = 0; nu < kDim; ++nu) {
        ap[mu] += q[nu][mu] * av[nu];
        dcol[mu] = dcol[mu] + Cplx(q[nu][mu], 0.0) * column.partial(nu, x);
        dform[mu] += psi.partial(nu, x) * real(q[nu][mu]);
      }

    const SpinorColumn col = column(x);
    const SpinorColumn rcol = r * col;
    SpinorColumn res_a = im_mass * col;
    SpinorColumn res_b = im_mass * rcol;
    for (int mu = 0; mu < kDim; ++mu) {
      res_a = res_a + gprime[mu] * (dcol[mu] + Cplx(0.0, ap[mu]) * col);
      res_b = res_b + gam[mu] * (r * dcol[mu] + Cplx(0.0, ap[mu]) * rcol);
    }
    const SpinorColumn unprimed = dirac_residual(column, a, cfg, gam, x);
    note(rep.claims[0], std::max(max_abs(res_a - unprimed), rep.gamma_intertwining), max_abs(res_a),
         static_cast<long>(j));
    note(rep.claims[1], max_abs(res_b - r * res_a), max_abs(res_b), static_cast<long>(j));

    const MultiVectorF value = psi(x);
    MultiVectorF aprime;
    MultiVectorF res_c = real(cfg.mass) * (value * gen.H() * gen.I());
    for (int mu = 0; mu < kDim; ++mu) {
      aprime += eprime[mu] * real(ap[mu]);
      res_c += eprime[mu] * dform[mu];
    }
    res_c += aprime * value * gen.I();
    note(rep.claims[2], max_abs(res_c - tensor_residual(psi, a, cfg, gen, x)), max_abs(res_c),
         static_cast<long>(j));
  }
  return rep;
}

DoubleCover double_cover_demo() {
  const MultiVectorF plane = MultiVectorF::blade(0b0110);
  SpinElement half = exp_bivector(plane, std::numbers::pi);
  SpinElement full = exp_bivector(plane, 2.0 * std::numbers::pi);
  DoubleCover d;
  d.half_turn = half.value();
  d.full_turn = full.value();
  d.full_turn_plus_one = max_abs(full.value() + MultiVectorF::one());
  d.half_turn_squared_error = distance(half.value() * half.value(), full.value());
  const Mat4R pf = vector_rep(full).P();
  const Mat4R ph = vector_rep(half).P();
  d.matrix_identity_error = max_abs_diff(pf, identity4());
  d.half_turn_matrix_error = max_abs_diff(matmul(ph, ph), pf);
  return d;
}

}  // namespace tensordirac
