#pragma once

// Real quaternions q = w + x i + y j + z k and their symplectic form
// q = z0 + z1 j with z0 = w + x i, z1 = y + z i.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qdirac {

using Complex = std::complex<double>;

class Quaternion {
 public:
  constexpr Quaternion() = default;

  /// Throws std::invalid_argument on non-finite components.
  Quaternion(double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {
    if (!std::isfinite(w) || !std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
      throw std::invalid_argument("Quaternion: non-finite component");
    }
  }

  explicit Quaternion(double real) : Quaternion(real, 0.0, 0.0, 0.0) {}

  /// Embeds a complex number as w + x i.
  static Quaternion from_complex(Complex c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  static constexpr Quaternion unchecked(double w, double x, double y, double z) {
    Quaternion q;
    q.w_ = w;
    q.x_ = x;
    q.y_ = y;
    q.z_ = z;
    return q;
  }

  static constexpr Quaternion one() { return unchecked(1, 0, 0, 0); }
  static constexpr Quaternion i() { return unchecked(0, 1, 0, 0); }
  static constexpr Quaternion j() { return unchecked(0, 0, 1, 0); }
  static constexpr Quaternion k() { return unchecked(0, 0, 0, 1); }

  constexpr double w() const { return w_; }
  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return unchecked(-w_, -x_, -y_, -z_); }
  constexpr Quaternion operator+(const Quaternion& o) const {
    return unchecked(w_ + o.w_, x_ + o.x_, y_ + o.y_, z_ + o.z_);
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return unchecked(w_ - o.w_, x_ - o.x_, y_ - o.y_, z_ - o.z_);
  }
  constexpr Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  constexpr Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

  friend constexpr Quaternion operator*(double s, const Quaternion& q) {
    return unchecked(s * q.w_, s * q.x_, s * q.y_, s * q.z_);
  }
  friend constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

 private:
  double w_ = 0.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

/// Symplectic components of q = z0 + z1 j.
struct ComplexPair {
  Complex z0;
  Complex z1;
  bool operator==(const ComplexPair&) const = default;
};

/// Hamilton product; e_a e_b = eps_abc e_c - delta_ab on the imaginary units.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return Quaternion::unchecked(p.w() * q.w() - p.x() * q.x() - p.y() * q.y() - p.z() * q.z(),
                               p.w() * q.x() + p.x() * q.w() + p.y() * q.z() - p.z() * q.y(),
                               p.w() * q.y() - p.x() * q.z() + p.y() * q.w() + p.z() * q.x(),
                               p.w() * q.z() + p.x() * q.y() - p.y() * q.x() + p.z() * q.w());
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conjugate(const Quaternion& q) {
  return Quaternion::unchecked(q.w(), -q.x(), -q.y(), -q.z());
}

constexpr double norm2(const Quaternion& q) {
  return q.w() * q.w() + q.x() * q.x() + q.y() * q.y() + q.z() * q.z();
}

inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// q * i without a general product: (w + xi + yj + zk) i = -x + w i + z j - y k.
constexpr Quaternion right_mul_i(const Quaternion& q) {
  return Quaternion::unchecked(-q.x(), q.w(), q.z(), -q.y());
}

/// i * q = -x + w i - z j + y k.
constexpr Quaternion left_mul_i(const Quaternion& q) {
  return Quaternion::unchecked(-q.x(), q.w(), -q.z(), q.y());
}

/// j * q = -y + z i + w j - x k.
constexpr Quaternion left_mul_j(const Quaternion& q) {
  return Quaternion::unchecked(-q.y(), q.z(), q.w(), -q.x());
}

/// Complex scalar c acting from the left: (c_r + c_i i) q.
inline Quaternion left_mul(Complex c, const Quaternion& q) {
  return mul(Quaternion::unchecked(c.real(), c.imag(), 0.0, 0.0), q);
}

/// Pointwise integrand of the real inner product, (p q* + p* q) / 2.
/// Equal to the Euclidean dot product of the component 4-vectors.
constexpr double real_inner_pointwise(const Quaternion& p, const Quaternion& q) {
  return p.w() * q.w() + p.x() * q.x() + p.y() * q.y() + p.z() * q.z();
}

/// True when Im(p q*) is within tol * |p| |q|; zero is parallel to everything.
bool is_parallel(const Quaternion& p, const Quaternion& q, double tol);

constexpr ComplexPair symplectic_split(const Quaternion& q) {
  return {Complex(q.w(), q.x()), Complex(q.y(), q.z())};
}

inline Quaternion from_symplectic(const ComplexPair& c) {
  return {c.z0.real(), c.z0.imag(), c.z1.real(), c.z1.imag()};
}

}  // namespace qdirac
