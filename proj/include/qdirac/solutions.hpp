#pragma once

// Free-particle solutions of the quaternionic Dirac equation
//
//   gamma^mu (d_mu Psi) i - m Psi = 0,   Psi = cos(Theta) psi0 + sin(Theta) psi1 j,
//
// with psi_alpha = exp(i k_alpha . x) u_alpha. The complex component obeys
// (kslash_0 + m) u0 = 0 and the j component (kslash_1 - m) u1 = 0.
//
// Energy labels. The momentum operator acts as d_mu(.) i, so on the complex
// component exp(i k.x) it returns -k and on the j component it returns +k.
// A component labelled with energy sign e therefore carries the physical
// four-momentum p = e * (E, ...) with p = -k0 for alpha = 0 and p = +k1 for
// alpha = 1. The closed-form spinors (upper block u_S for e = +, lower block
// u_S for e = -) are evaluated at that physical momentum.

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdirac/errors.hpp"
#include "qdirac/spinor.hpp"

namespace qdirac {

enum class Spin { up, down };
enum class Sign { plus, minus };
enum class NormChoice { E, E_over_m };
enum class SpinBasis { z, helicity };
enum class Chirality { L, R };

constexpr double value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr double value(Spin s) { return s == Spin::up ? 1.0 : -1.0; }
constexpr double value(Chirality c) { return c == Chirality::R ? 1.0 : -1.0; }

char to_char(Spin s);
char to_char(Sign s);
char to_char(Chirality c);

/// sign * sqrt(|k|^2 + m^2). Throws std::invalid_argument for m < 0 or m = 0 with k = 0.
double mass_shell_energy(const Vec3& kvec, double m, Sign sign);

/// Relative dispersion defect |k.k - m^2| / (k0^2 + m^2).
double dispersion_defect(const FourVector& k, double m);

/// Two-component spin state: the sigma_z basis, or the sigma.n eigenbasis
/// (up = +1) when basis is helicity. Throws std::invalid_argument on a zero axis
/// in the helicity basis.
std::array<Complex, 2> spin_state(Spin s, SpinBasis basis, const Vec3& axis);

/// Normalisation target u^dagger u for the given wave vector and mass.
double norm_target(const FourVector& k, double m, NormChoice norm);

/// Spinor in the null space of (kslash - mass_sign * m), normalised to
/// u^dagger u = |k0| (E) or |k0| / m (E_over_m), first non-negligible
/// component real positive. For the helicity basis the spin axis is the
/// spatial part of k.
///
/// Throws std::invalid_argument for m <= 0, OffShellError when k is off the
/// mass shell, CertificationError when the closed form misses the null space.
CSpinor4 build_u_spinor(const FourVector& k, double m, Sign mass_sign, Spin s, NormChoice norm,
                        SpinBasis basis = SpinBasis::z);

/// Element of ker(slashed(n)) for a null n != 0 with gamma5 eigenvalue +1 (R)
/// or -1 (L), normalised to u^dagger u = target_norm2.
CSpinor4 build_chiral_spinor(const FourVector& n, Chirality c, double target_norm2);

/// Multiplies u by a unit phase so the first component above 1e-14 ||u|| is real positive.
CSpinor4 fix_phase(const CSpinor4& u);

struct SolutionTags {
  std::optional<Spin> s0, s1;
  std::optional<Sign> e0, e1;
  std::optional<Chirality> c0, c1;
  bool operator==(const SolutionTags&) const = default;
};

/// Closed-form solution, immutable once built.
class PlaneWaveSolution {
 public:
  PlaneWaveSolution(std::string label, double theta0, FourVector k0, FourVector k1, CSpinor4 u0,
                    CSpinor4 u1, double mass, FourVector theta = {}, SolutionTags tags = {});

  const std::string& label() const { return label_; }
  double theta0() const { return theta0_; }
  const FourVector& k0() const { return k0_; }
  const FourVector& k1() const { return k1_; }
  const CSpinor4& u0() const { return u0_; }
  const CSpinor4& u1() const { return u1_; }
  double mass() const { return mass_; }
  const FourVector& theta() const { return theta_; }
  const SolutionTags& tags() const { return tags_; }

  /// Theta(x) = theta_mu x^mu + Theta0.
  double phase(const FourVector& x) const;
  QSpinor4 evaluate(const FourVector& x) const;
  /// Analytic d Psi / d x^mu.
  QSpinor4 derivative(std::size_t mu, const FourVector& x) const;

  /// Same spinors with both wave vectors shifted k -> k + a.
  PlaneWaveSolution with_momentum_shift(const FourVector& a) const;
  PlaneWaveSolution with_spinors(const CSpinor4& u0, const CSpinor4& u1) const;

 private:
  std::string label_;
  double theta0_;
  FourVector k0_, k1_;
  CSpinor4 u0_, u1_;
  double mass_;
  FourVector theta_;
  SolutionTags tags_;
};

template <class F>
concept SpinorField = requires(const F& f, const FourVector& x, std::size_t mu) {
  { f.evaluate(x) } -> std::same_as<QSpinor4>;
  { f.derivative(mu, x) } -> std::same_as<QSpinor4>;
  { f.mass() } -> std::convertible_to<double>;
};

/// gamma^mu ((d_mu - a_mu i) Psi) i - m Psi at x, with a acting by left multiplication.
template <SpinorField F>
QSpinor4 dirac_operator(const F& field, const FourVector& x, const FourVector& a = {}) {
  const QSpinor4 psi = field.evaluate(x);
  const QSpinor4 ipsi = left_mul_i_spinor(psi);
  QSpinor4 out = -field.mass() * psi;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    QSpinor4 d = field.derivative(mu, x);
    const double a_mu = a.lower(mu);
    if (a_mu != 0.0) d = d - a_mu * ipsi;
    out += apply_left(gamma(mu), right_mul_i_spinor(d));
  }
  return out;
}

/// Deterministic certification points in [-extent, extent]^4.
std::vector<FourVector> certification_points(std::size_t count = 32, double extent = 10.0,
                                             unsigned long long seed = 0x51ed2701ULL);

/// Largest |dirac_operator| over the points.
template <SpinorField F>
double max_residual(const F& field, const std::vector<FourVector>& points, const FourVector& a = {}) {
  double worst = 0.0;
  for (const auto& x : points) {
    const double r = norm(dirac_operator(field, x, a));
    if (!(r <= worst)) worst = r;
  }
  return worst;
}

/// Residual scale for a certified solution: (|k| + m + 1) * max(1, ||u||).
double residual_scale(const PlaneWaveSolution& sol);

/// Throws CertificationError when the residual exceeds tol * residual_scale.
void certify(const PlaneWaveSolution& sol, double tol = 1e-12);

struct MassiveSpec {
  double m = 1.0;
  double theta0 = 0.0;
  Vec3 kvec0{};
  Vec3 kvec1{};
  Spin s0 = Spin::up;
  Spin s1 = Spin::up;
  Sign esign0 = Sign::plus;
  Sign esign1 = Sign::minus;
  NormChoice norm_choice = NormChoice::E_over_m;
  SpinBasis spin_basis = SpinBasis::z;
};

/// Label such as "ud+-": spins of the complex and j components, then energy labels.
std::string massive_label(Spin s0, Spin s1, Sign e0, Sign e1);

/// Throws std::invalid_argument when m <= 0, the energy labels are not
/// opposed, or an input is non-finite; CertificationError on residual failure.
PlaneWaveSolution build_massive_solution(const MassiveSpec& spec);

/// The eight solutions in the order
/// (uu,+-), (uu,-+), (dd,+-), (dd,-+), (ud,+-), (ud,-+), (du,+-), (du,-+).
std::vector<PlaneWaveSolution> enumerate_massive_set(double m, const Vec3& kvec0, const Vec3& kvec1,
                                                     double theta0,
                                                     NormChoice norm = NormChoice::E_over_m,
                                                     SpinBasis basis = SpinBasis::z);

struct ConstraintQuery {
  FourVector theta;
  FourVector k0;
  FourVector k1;
  double m = 0.0;
};

struct ConstraintReport {
  bool vacuous = false;  // theta = 0: no constraint applies
  double theta_null_residual = 0.0;
  std::array<double, 2> k_dot_theta{};
  std::array<double, 2> dispersion{};            // |k.k - m^2|
  std::array<double, 2> effective_dispersion{};  // max over +/- of |p.p - m^2|, p = k +/- theta
  std::array<double, 2> kappa{};
  std::array<double, 2> proportionality{};  // ||k - kappa theta||
  bool theta_null = true;
  bool k_orthogonal = true;
  bool on_shell = true;
  bool effective_on_shell = true;
  bool proportional = true;
  bool massless = true;  // theta != 0 requires m = 0
  bool accepted = true;
};

/// Evaluates every theta-family constraint; never throws.
ConstraintReport check_constraints(const ConstraintQuery& query, double tol = 1e-12);

struct MasslessThetaSpec {
  FourVector theta;
  double kappa0 = 1.0;
  double kappa1 = 1.0;
  double theta0 = 0.0;
  Chirality c0 = Chirality::R;
  Chirality c1 = Chirality::R;
};

/// Massless solution with Theta = theta.x + Theta0 and k_alpha = kappa_alpha theta.
/// Throws std::invalid_argument when theta is zero or not null (tolerance
/// 1e-12 theta0^2) or a kappa is zero.
PlaneWaveSolution build_massless_theta_solution(const MasslessThetaSpec& spec);

/// Four constant-Theta massless solutions, chiralities (LL, LR, RL, RR), both
/// components with positive energy label. Throws std::invalid_argument on a
/// zero momentum.
std::vector<PlaneWaveSolution> enumerate_massless_theta0_set(const Vec3& kvec0, const Vec3& kvec1,
                                                             double theta0);

struct PacketSample {
  int alpha = 0;
  Vec3 kvec{};
  double amplitude = 1.0;
  Spin spin = Spin::up;
  Sign esign = Sign::plus;
  /// Explicit k^0 of the wave vector; checked against the mass shell when set.
  std::optional<double> k0;
};

struct WavePacketSpec {
  double m = 1.0;
  double theta0 = 0.0;
  NormChoice norm_choice = NormChoice::E_over_m;
  SpinBasis spin_basis = SpinBasis::z;
  std::vector<PacketSample> samples;
};

/// Finite on-shell superposition per symplectic component.
class WavePacket {
 public:
  struct Term {
    int alpha;
    FourVector k;
    CSpinor4 u;
    double amplitude;
  };

  WavePacket(double mass, double theta0, std::vector<Term> terms);

  double mass() const { return mass_; }
  double theta0() const { return theta0_; }
  const std::vector<Term>& terms() const { return terms_; }

  QSpinor4 evaluate(const FourVector& x) const;
  QSpinor4 derivative(std::size_t mu, const FourVector& x) const;

  /// Same packet with every amplitude multiplied by s.
  WavePacket scaled(double s) const;

 private:
  double mass_;
  double theta0_;
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument for m <= 0, an empty sample list or alpha
/// outside {0, 1}; OffShellError for an explicit k0 off the mass shell.
WavePacket build_wave_packet(const WavePacketSpec& spec);

}  // namespace qdirac
