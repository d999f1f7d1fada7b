#include "qdirac/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qdirac {

namespace {

bool finite3(const Vec3& v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

double euclid(const FourVector& v) { return std::sqrt(v.t * v.t + v.x * v.x + v.y * v.y + v.z * v.z); }

std::array<Complex, 2> mat2_apply(const std::array<Complex, 4>& m, const std::array<Complex, 2>& v) {
  return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

std::string format_sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

char to_char(Spin s) { return s == Spin::up ? 'u' : 'd'; }
char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
char to_char(Chirality c) { return c == Chirality::R ? 'R' : 'L'; }

double mass_shell_energy(const Vec3& kvec, double m, Sign sign) {
  if (!std::isfinite(m) || m < 0.0) throw std::invalid_argument("mass_shell_energy: mass must be finite and >= 0");
  if (!finite3(kvec)) throw std::invalid_argument("mass_shell_energy: non-finite momentum");
  const double k2 = dot3(kvec, kvec);
  if (m == 0.0 && k2 == 0.0) throw std::invalid_argument("mass_shell_energy: massless particle at rest");
  return value(sign) * std::sqrt(k2 + m * m);
}

double dispersion_defect(const FourVector& k, double m) {
  const double defect = std::abs(minkowski_dot(k, k) - m * m);
  const double scale = k.t * k.t + m * m;
  return scale > 0.0 ? defect / scale : defect;
}

std::array<Complex, 2> spin_state(Spin s, SpinBasis basis, const Vec3& axis) {
  if (basis == SpinBasis::z) {
    return s == Spin::up ? std::array<Complex, 2>{1.0, 0.0} : std::array<Complex, 2>{0.0, 1.0};
  }
  const double len = length3(axis);
  if (!(len > 0.0)) throw std::invalid_argument("spin_state: helicity basis needs a nonzero axis");
  const double cos_t = std::clamp(axis[2] / len, -1.0, 1.0);
  const double half = 0.5 * std::acos(cos_t);
  const double phi = std::atan2(axis[1], axis[0]);
  if (s == Spin::up) return {std::cos(half), std::polar(std::sin(half), phi)};
  return {-std::polar(std::sin(half), -phi), std::cos(half)};
}

double norm_target(const FourVector& k, double m, NormChoice norm) {
  if (norm == NormChoice::E) return std::abs(k.t);
  if (!(m > 0.0)) throw std::invalid_argument("norm_target: E_over_m needs m > 0");
  return std::abs(k.t) / m;
}

CSpinor4 fix_phase(const CSpinor4& u) {
  const double threshold = 1e-14 * norm(u);
  for (std::size_t i = 0; i < 4; ++i) {
    const double mag = std::abs(u[i]);
    if (mag > threshold && mag > 0.0) {
      CSpinor4 out = (std::conj(u[i]) / mag) * u;
      out[i] = Complex(mag, 0.0);
      return out;
    }
  }
  return u;
}

namespace {

CSpinor4 rescale(const CSpinor4& u, double target_norm2) {
  return Complex(std::sqrt(target_norm2 / norm2(u)), 0.0) * u;
}

}  // namespace

CSpinor4 build_u_spinor(const FourVector& k, double m, Sign mass_sign, Spin s, NormChoice norm,
                        SpinBasis basis) {
  if (!std::isfinite(m) || !(m > 0.0)) throw std::invalid_argument("build_u_spinor: mass must be > 0");
  if (!std::isfinite(k.t) || !finite3(k.spatial())) throw std::invalid_argument("build_u_spinor: non-finite momentum");
  if (dispersion_defect(k, m) > 1e-12) {
    throw OffShellError("build_u_spinor: k.k - m^2 = " + format_sci(minkowski_dot(k, k) - m * m));
  }

  // ker(kslash - s m) = ker(qslash - m) with q = s k, the physical momentum.
  const FourVector q = value(mass_sign) * k;
  const auto chi = spin_state(s, basis, k.spatial());
  const auto sq = mat2_apply(sigma_dot(q.spatial()), chi);
  const double denom = std::abs(q.t) + m;

  CSpinor4 u;
  if (q.t > 0.0) {
    u = {{chi[0], chi[1], sq[0] / denom, sq[1] / denom}};
  } else {
    u = {{-sq[0] / denom, -sq[1] / denom, chi[0], chi[1]}};
  }
  u = fix_phase(rescale(u, norm_target(k, m, norm)));

  const CMatrix4 op = slashed(k) - Complex(value(mass_sign) * m, 0.0) * CMatrix4::identity();
  const double residual = qdirac::norm(op * u);
  if (residual > 1e-12 * (euclid(k) + m) * qdirac::norm(u)) {
    throw CertificationError("build_u_spinor: closed form misses the null space, residual " + format_sci(residual));
  }
  return u;
}

CSpinor4 build_chiral_spinor(const FourVector& n, Chirality c, double target_norm2) {
  if (!(target_norm2 > 0.0)) throw std::invalid_argument("build_chiral_spinor: target norm must be > 0");
  const Vec3 nvec = n.spatial();
  if (!(length3(nvec) > 0.0) || n.t == 0.0) throw std::invalid_argument("build_chiral_spinor: direction must be a nonzero null vector");
  const double eta = value(c);
  // sigma.n chi = eta n^0 chi.
  const Spin along = eta * n.t > 0.0 ? Spin::up : Spin::down;
  const auto chi = spin_state(along, SpinBasis::helicity, nvec);
  CSpinor4 u{{chi[0], chi[1], eta * chi[0], eta * chi[1]}};
  u = fix_phase(rescale(u, target_norm2));

  const double residual = qdirac::norm(slashed(n) * u);
  if (residual > 1e-12 * euclid(n) * qdirac::norm(u)) {
    throw CertificationError("build_chiral_spinor: spinor not in ker(nslash), residual " + format_sci(residual));
  }
  return u;
}

PlaneWaveSolution::PlaneWaveSolution(std::string label, double theta0, FourVector k0, FourVector k1,
                                     CSpinor4 u0, CSpinor4 u1, double mass, FourVector theta,
                                     SolutionTags tags)
    : label_(std::move(label)),
      theta0_(theta0),
      k0_(k0),
      k1_(k1),
      u0_(u0),
      u1_(u1),
      mass_(mass),
      theta_(theta),
      tags_(tags) {}

double PlaneWaveSolution::phase(const FourVector& x) const { return minkowski_dot(theta_, x) + theta0_; }

QSpinor4 PlaneWaveSolution::evaluate(const FourVector& x) const {
  const double th = phase(x);
  const Complex a0 = std::cos(th) * std::polar(1.0, minkowski_dot(k0_, x));
  const Complex a1 = std::sin(th) * std::polar(1.0, minkowski_dot(k1_, x));
  return symplectic_join(a0 * u0_, a1 * u1_);
}

QSpinor4 PlaneWaveSolution::derivative(std::size_t mu, const FourVector& x) const {
  const double th = phase(x);
  const double c = std::cos(th);
  const double s = std::sin(th);
  const double dth = theta_.lower(mu);
  const Complex e0 = std::polar(1.0, minkowski_dot(k0_, x));
  const Complex e1 = std::polar(1.0, minkowski_dot(k1_, x));
  const Complex a0 = (Complex(-s * dth, 0.0) + Complex(0.0, c * k0_.lower(mu))) * e0;
  const Complex a1 = (Complex(c * dth, 0.0) + Complex(0.0, s * k1_.lower(mu))) * e1;
  return symplectic_join(a0 * u0_, a1 * u1_);
}

PlaneWaveSolution PlaneWaveSolution::with_momentum_shift(const FourVector& a) const {
  PlaneWaveSolution out = *this;
  out.k0_ = k0_ + a;
  out.k1_ = k1_ + a;
  return out;
}

PlaneWaveSolution PlaneWaveSolution::with_spinors(const CSpinor4& u0, const CSpinor4& u1) const {
  PlaneWaveSolution out = *this;
  out.u0_ = u0;
  out.u1_ = u1;
  return out;
}

std::vector<FourVector> certification_points(std::size_t count, double extent, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-extent, extent);
  std::vector<FourVector> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = dist(rng);
    const double x = dist(rng);
    const double y = dist(rng);
    const double z = dist(rng);
    pts.push_back({t, x, y, z});
  }
  return pts;
}

double residual_scale(const PlaneWaveSolution& sol) {
  const double k = std::max({euclid(sol.k0()), euclid(sol.k1()), euclid(sol.theta())});
  const double u = std::max({1.0, norm(sol.u0()), norm(sol.u1())});
  return (k + sol.mass() + 1.0) * u;
}

void certify(const PlaneWaveSolution& sol, double tol) {
  static const std::vector<FourVector> points = certification_points();
  const double r = max_residual(sol, points);
  if (!(r <= tol * residual_scale(sol))) {
    throw CertificationError("solution " + sol.label() + " fails the Dirac residual check: " + format_sci(r));
  }
}

std::string massive_label(Spin s0, Spin s1, Sign e0, Sign e1) {
  return {to_char(s0), to_char(s1), to_char(e0), to_char(e1)};
}

PlaneWaveSolution build_massive_solution(const MassiveSpec& spec) {
  if (!std::isfinite(spec.m) || !(spec.m > 0.0)) throw std::invalid_argument("massive spec: m must be > 0");
  if (!std::isfinite(spec.theta0)) throw std::invalid_argument("massive spec: theta0 must be finite");
  if (!finite3(spec.kvec0) || !finite3(spec.kvec1)) throw std::invalid_argument("massive spec: non-finite momentum");
  if (spec.esign1 != flip(spec.esign0)) {
    throw std::invalid_argument("massive spec: energy labels of the two components must be opposed");
  }

  const double e0 = mass_shell_energy(spec.kvec0, spec.m, Sign::plus);
  const double e1 = mass_shell_energy(spec.kvec1, spec.m, Sign::plus);
  // Physical momentum is -k for the complex component, +k for the j component.
  const FourVector k0 = FourVector::from(-value(spec.esign0) * e0, spec.kvec0);
  const FourVector k1 = FourVector::from(value(spec.esign1) * e1, spec.kvec1);
  const CSpinor4 u0 = build_u_spinor(k0, spec.m, Sign::minus, spec.s0, spec.norm_choice, spec.spin_basis);
  const CSpinor4 u1 = build_u_spinor(k1, spec.m, Sign::plus, spec.s1, spec.norm_choice, spec.spin_basis);

  SolutionTags tags;
  tags.s0 = spec.s0;
  tags.s1 = spec.s1;
  tags.e0 = spec.esign0;
  tags.e1 = spec.esign1;
  PlaneWaveSolution sol(massive_label(spec.s0, spec.s1, spec.esign0, spec.esign1), spec.theta0, k0, k1, u0,
                        u1, spec.m, {}, tags);
  certify(sol);
  return sol;
}

std::vector<PlaneWaveSolution> enumerate_massive_set(double m, const Vec3& kvec0, const Vec3& kvec1,
                                                     double theta0, NormChoice norm, SpinBasis basis) {
  static constexpr std::array<std::pair<Spin, Spin>, 4> kSpins{{
      {Spin::up, Spin::up},
      {Spin::down, Spin::down},
      {Spin::up, Spin::down},
      {Spin::down, Spin::up},
  }};
  std::vector<PlaneWaveSolution> out;
  out.reserve(8);
  for (const auto& [s0, s1] : kSpins) {
    for (const Sign e0 : {Sign::plus, Sign::minus}) {
      MassiveSpec spec;
      spec.m = m;
      spec.theta0 = theta0;
      spec.kvec0 = kvec0;
      spec.kvec1 = kvec1;
      spec.s0 = s0;
      spec.s1 = s1;
      spec.esign0 = e0;
      spec.esign1 = flip(e0);
      spec.norm_choice = norm;
      spec.spin_basis = basis;
      out.push_back(build_massive_solution(spec));
    }
  }
  return out;
}

ConstraintReport check_constraints(const ConstraintQuery& query, double tol) {
  ConstraintReport r;
  const FourVector& th = query.theta;
  const std::array<FourVector, 2> ks{query.k0, query.k1};
  const double m2 = query.m * query.m;

  for (std::size_t a = 0; a < 2; ++a) {
    const FourVector& k = ks[a];
    r.dispersion[a] = std::abs(minkowski_dot(k, k) - m2);
    r.on_shell = r.on_shell && r.dispersion[a] <= tol * (euclid(k) * euclid(k) + m2);
  }

  const double th_e = euclid(th);
  if (th_e == 0.0) {
    r.vacuous = true;
    r.accepted = r.on_shell;
    return r;
  }

  r.theta_null_residual = std::abs(minkowski_dot(th, th));
  r.theta_null = r.theta_null_residual <= tol * th_e * th_e;
  r.massless = std::abs(query.m) <= tol;

  for (std::size_t a = 0; a < 2; ++a) {
    const FourVector& k = ks[a];
    const double k_e = euclid(k);
    r.k_dot_theta[a] = std::abs(minkowski_dot(k, th));
    r.k_orthogonal = r.k_orthogonal && r.k_dot_theta[a] <= tol * std::max(k_e * th_e, th_e * th_e);

    for (const double sgn : {1.0, -1.0}) {
      const FourVector p = k + sgn * th;
      const double d = std::abs(minkowski_dot(p, p) - m2);
      r.effective_dispersion[a] = std::max(r.effective_dispersion[a], d);
      r.effective_on_shell = r.effective_on_shell && d <= tol * (euclid(p) * euclid(p) + m2 + th_e * th_e);
    }

    r.kappa[a] = (k.t * th.t + k.x * th.x + k.y * th.y + k.z * th.z) / (th_e * th_e);
    r.proportionality[a] = euclid(k - r.kappa[a] * th);
    r.proportional = r.proportional && r.proportionality[a] <= tol * std::max(k_e, th_e);
  }

  r.accepted = r.theta_null && r.k_orthogonal && r.on_shell && r.effective_on_shell && r.proportional &&
               r.massless;
  return r;
}

PlaneWaveSolution build_massless_theta_solution(const MasslessThetaSpec& spec) {
  const FourVector& th = spec.theta;
  if (!std::isfinite(th.t) || !finite3(th.spatial()) || !std::isfinite(spec.kappa0) ||
      !std::isfinite(spec.kappa1) || !std::isfinite(spec.theta0)) {
    throw std::invalid_argument("massless theta spec: non-finite input");
  }
  if (euclid(th) == 0.0) throw std::invalid_argument("massless theta spec: theta must be nonzero");
  if (std::abs(minkowski_dot(th, th)) > 1e-12 * th.t * th.t || th.t == 0.0) {
    throw std::invalid_argument("massless theta spec: theta is not a null vector");
  }
  if (spec.kappa0 == 0.0 || spec.kappa1 == 0.0) {
    throw std::invalid_argument("massless theta spec: kappa must be nonzero");
  }

  const FourVector k0 = spec.kappa0 * th;
  const FourVector k1 = spec.kappa1 * th;
  // ker(kslash) = ker(thetaslash) because k is a multiple of theta.
  const CSpinor4 u0 = build_chiral_spinor(th, spec.c0, std::abs(k0.t));
  const CSpinor4 u1 = build_chiral_spinor(th, spec.c1, std::abs(k1.t));

  SolutionTags tags;
  tags.c0 = spec.c0;
  tags.c1 = spec.c1;
  std::string label = "theta:";
  label += to_char(spec.c0);
  label += to_char(spec.c1);
  PlaneWaveSolution sol(label, spec.theta0, k0, k1, u0, u1, 0.0, th, tags);
  certify(sol);
  return sol;
}

std::vector<PlaneWaveSolution> enumerate_massless_theta0_set(const Vec3& kvec0, const Vec3& kvec1,
                                                             double theta0) {
  if (!finite3(kvec0) || !finite3(kvec1) || !std::isfinite(theta0)) {
    throw std::invalid_argument("massless set: non-finite input");
  }
  if (!(length3(kvec0) > 0.0) || !(length3(kvec1) > 0.0)) {
    throw std::invalid_argument("massless set: spatial momenta must be nonzero");
  }
  // Positive energy label on both components: k0 = -|k| for the complex one.
  const FourVector k0 = FourVector::from(-length3(kvec0), kvec0);
  const FourVector k1 = FourVector::from(length3(kvec1), kvec1);

  std::vector<PlaneWaveSolution> out;
  out.reserve(4);
  for (const Chirality c0 : {Chirality::L, Chirality::R}) {
    for (const Chirality c1 : {Chirality::L, Chirality::R}) {
      SolutionTags tags;
      tags.c0 = c0;
      tags.c1 = c1;
      tags.e0 = Sign::plus;
      tags.e1 = Sign::plus;
      std::string label{to_char(c0), to_char(c1)};
      PlaneWaveSolution sol(label, theta0, k0, k1, build_chiral_spinor(k0, c0, std::abs(k0.t)),
                            build_chiral_spinor(k1, c1, std::abs(k1.t)), 0.0, {}, tags);
      certify(sol);
      out.push_back(std::move(sol));
    }
  }
  return out;
}

WavePacket::WavePacket(double mass, double theta0, std::vector<Term> terms)
    : mass_(mass), theta0_(theta0), terms_(std::move(terms)) {}

QSpinor4 WavePacket::evaluate(const FourVector& x) const {
  std::array<CSpinor4, 2> psi{};
  for (const auto& t : terms_) {
    const Complex a = t.amplitude * std::polar(1.0, minkowski_dot(t.k, x));
    psi[t.alpha] = psi[t.alpha] + a * t.u;
  }
  return symplectic_join(Complex(std::cos(theta0_), 0.0) * psi[0], Complex(std::sin(theta0_), 0.0) * psi[1]);
}

QSpinor4 WavePacket::derivative(std::size_t mu, const FourVector& x) const {
  std::array<CSpinor4, 2> psi{};
  for (const auto& t : terms_) {
    const Complex a = Complex(0.0, t.amplitude * t.k.lower(mu)) * std::polar(1.0, minkowski_dot(t.k, x));
    psi[t.alpha] = psi[t.alpha] + a * t.u;
  }
  return symplectic_join(Complex(std::cos(theta0_), 0.0) * psi[0], Complex(std::sin(theta0_), 0.0) * psi[1]);
}

WavePacket WavePacket::scaled(double s) const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.amplitude *= s;
  return WavePacket(mass_, theta0_, std::move(terms));
}

WavePacket build_wave_packet(const WavePacketSpec& spec) {
  if (!std::isfinite(spec.m) || !(spec.m > 0.0)) throw std::invalid_argument("wave packet: m must be > 0");
  if (!std::isfinite(spec.theta0)) throw std::invalid_argument("wave packet: theta0 must be finite");
  if (spec.samples.empty()) throw std::invalid_argument("wave packet: no samples");

  std::vector<WavePacket::Term> terms;
  terms.reserve(spec.samples.size());
  for (std::size_t n = 0; n < spec.samples.size(); ++n) {
    const PacketSample& s = spec.samples[n];
    if (s.alpha != 0 && s.alpha != 1) throw std::invalid_argument("wave packet: alpha must be 0 or 1");
    if (!std::isfinite(s.amplitude)) throw std::invalid_argument("wave packet: non-finite amplitude");
    const Sign mass_sign = s.alpha == 0 ? Sign::minus : Sign::plus;
    const double branch = value(mass_sign) * value(s.esign);
    double k0 = branch * mass_shell_energy(s.kvec, spec.m, Sign::plus);
    if (s.k0) {
      const FourVector k = FourVector::from(*s.k0, s.kvec);
      if (!std::isfinite(*s.k0) || dispersion_defect(k, spec.m) > 1e-12) {
        throw OffShellError("wave packet: sample " + std::to_string(n) + " is off the mass shell");
      }
      if (*s.k0 * branch < 0.0) {
        throw std::invalid_argument("wave packet: sample " + std::to_string(n) + " k0 sign disagrees with its energy label");
      }
      k0 = *s.k0;
    }
    const FourVector k = FourVector::from(k0, s.kvec);
    terms.push_back({s.alpha, k, build_u_spinor(k, spec.m, mass_sign, s.spin, spec.norm_choice, spec.spin_basis),
                     s.amplitude});
  }
  return WavePacket(spec.m, spec.theta0, std::move(terms));
}

}  // namespace qdirac
