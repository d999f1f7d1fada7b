#pragma once

// Four-vectors, Dirac matrices (Dirac representation) and 4-component
// spinors with complex or quaternion entries.

#include <array>
#include <cstddef>
#include <utility>

#include "qdirac/quaternion.hpp"

namespace qdirac {

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& a, const Vec3& b);
double length3(const Vec3& a);

/// Contravariant four-vector (t, x, y, z), metric signature (+,-,-,-).
struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t mu) const {
    return mu == 0 ? t : mu == 1 ? x : mu == 2 ? y : z;
  }
  constexpr Vec3 spatial() const { return {x, y, z}; }
  /// Index-lowered component v_mu.
  constexpr double lower(std::size_t mu) const { return mu == 0 ? t : -(*this)[mu]; }

  constexpr bool operator==(const FourVector&) const = default;
  constexpr FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
  constexpr FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
  constexpr FourVector operator-() const { return {-t, -x, -y, -z}; }
  friend constexpr FourVector operator*(double s, const FourVector& v) {
    return {s * v.t, s * v.x, s * v.y, s * v.z};
  }

  static constexpr FourVector from(double t, const Vec3& v) { return {t, v[0], v[1], v[2]}; }
};

constexpr double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Complex 4-spinor (column).
struct CSpinor4 {
  std::array<Complex, 4> c{};

  Complex& operator[](std::size_t i) { return c[i]; }
  const Complex& operator[](std::size_t i) const { return c[i]; }
  bool operator==(const CSpinor4&) const = default;

  CSpinor4 operator+(const CSpinor4& o) const;
  CSpinor4 operator-(const CSpinor4& o) const;
  friend CSpinor4 operator*(Complex s, const CSpinor4& v);
};

/// u^dagger v.
Complex inner(const CSpinor4& u, const CSpinor4& v);
double norm2(const CSpinor4& u);
inline double norm(const CSpinor4& u) { return std::sqrt(norm2(u)); }

/// Quaternion-valued 4-spinor; splits as psi0 + psi1 j with complex psi0, psi1.
struct QSpinor4 {
  std::array<Quaternion, 4> q{};

  Quaternion& operator[](std::size_t i) { return q[i]; }
  const Quaternion& operator[](std::size_t i) const { return q[i]; }
  bool operator==(const QSpinor4&) const = default;

  QSpinor4 operator+(const QSpinor4& o) const;
  QSpinor4 operator-(const QSpinor4& o) const;
  QSpinor4& operator+=(const QSpinor4& o);
  friend QSpinor4 operator*(double s, const QSpinor4& v);
};

/// Quaternion row vector, the result of the Dirac adjoint.
struct QRow4 {
  std::array<Quaternion, 4> q{};

  Quaternion& operator[](std::size_t i) { return q[i]; }
  const Quaternion& operator[](std::size_t i) const { return q[i]; }
  bool operator==(const QRow4&) const = default;
};

double norm2(const QSpinor4& s);
inline double norm(const QSpinor4& s) { return std::sqrt(norm2(s)); }

std::pair<CSpinor4, CSpinor4> symplectic_split(const QSpinor4& s);
QSpinor4 symplectic_join(const CSpinor4& psi0, const CSpinor4& psi1);

class CMatrix4 {
 public:
  CMatrix4() = default;

  static CMatrix4 identity();

  Complex& operator()(std::size_t r, std::size_t c) { return m_[r * 4 + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_[r * 4 + c]; }
  bool operator==(const CMatrix4&) const = default;

  CMatrix4 operator+(const CMatrix4& o) const;
  CMatrix4 operator-(const CMatrix4& o) const;
  CMatrix4 operator*(const CMatrix4& o) const;
  CSpinor4 operator*(const CSpinor4& v) const;
  friend CMatrix4 operator*(Complex s, const CMatrix4& a);

  /// Entrywise complex conjugate.
  CMatrix4 conj() const;
  CMatrix4 adjoint() const;
  double max_abs() const;

 private:
  std::array<Complex, 16> m_{};
};

/// Dirac-representation gamma^mu; throws std::out_of_range for mu > 3.
const CMatrix4& gamma(std::size_t mu);
inline const CMatrix4& beta() { return gamma(0); }

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = [[0, 1], [1, 0]].
const CMatrix4& gamma5();

/// gamma_mu v^mu = v^0 gamma^0 - v^x gamma^1 - v^y gamma^2 - v^z gamma^3.
CMatrix4 slashed(const FourVector& v);

/// Sum_b M_ab q_b with each complex entry multiplying its quaternion from the left.
QSpinor4 apply_left(const CMatrix4& m, const QSpinor4& s);

QSpinor4 right_mul_i_spinor(const QSpinor4& s);
QSpinor4 left_mul_i_spinor(const QSpinor4& s);
QSpinor4 left_mul_j_spinor(const QSpinor4& s);

/// Dirac adjoint Psi^dagger beta as a row.
QRow4 adjoint(const QSpinor4& s);

/// Quaternion-conjugate transpose without beta.
QRow4 dagger(const QSpinor4& s);

/// row . s, a quaternion.
Quaternion contract(const QRow4& row, const QSpinor4& s);

/// 1/2 sigma.k/|k| in both diagonal blocks. Throws std::invalid_argument for k = 0.
CMatrix4 helicity_matrix(const Vec3& k);

/// sigma.n for a real 3-vector n, as a 2x2 block embedded top-left of a 4x4.
std::array<Complex, 4> sigma_dot(const Vec3& n);

}  // namespace qdirac
