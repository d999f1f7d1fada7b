#pragma once

// Random generators for property tests and an Eigen-backed dense linear
// algebra oracle, independent of the closed-form code paths under test.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "qdirac/quaternion.hpp"
#include "qdirac/solutions.hpp"
#include "qdirac/spinor.hpp"

namespace qtest {

using qdirac::CMatrix4;
using qdirac::Complex;
using qdirac::CSpinor4;
using qdirac::FourVector;
using qdirac::QSpinor4;
using qdirac::Quaternion;
using qdirac::Vec3;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Quaternion quaternion(double scale = 1.0) {
    return {scale * normal(), scale * normal(), scale * normal(), scale * normal()};
  }
  Quaternion unit_quaternion() {
    const Quaternion q = quaternion();
    return (1.0 / qdirac::norm(q)) * q;
  }
  Complex complex() { return {normal(), normal()}; }
  Vec3 vec3(double scale = 1.0) { return {scale * normal(), scale * normal(), scale * normal()}; }
  Vec3 unit3() {
    const Vec3 v = vec3();
    const double n = qdirac::length3(v);
    return {v[0] / n, v[1] / n, v[2] / n};
  }
  FourVector four(double scale = 1.0) { return {scale * normal(), scale * normal(), scale * normal(), scale * normal()}; }
  /// Random null vector lambda (1, n) with lambda of either sign.
  FourVector null_four() {
    const double lambda = (integer(0, 1) ? 1.0 : -1.0) * uniform(0.2, 3.0);
    return lambda * FourVector::from(1.0, unit3());
  }
  CSpinor4 cspinor() { return {{complex(), complex(), complex(), complex()}}; }
  QSpinor4 qspinor() { return {{quaternion(), quaternion(), quaternion(), quaternion()}}; }
  CMatrix4 cmatrix() {
    CMatrix4 m;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = complex();
    return m;
  }
  qdirac::Spin spin() { return integer(0, 1) ? qdirac::Spin::up : qdirac::Spin::down; }
  qdirac::Sign sign() { return integer(0, 1) ? qdirac::Sign::plus : qdirac::Sign::minus; }

 private:
  std::mt19937_64 rng_;
};

namespace oracle {

using Mat4 = Eigen::Matrix<std::complex<double>, 4, 4>;
using Vec4 = Eigen::Matrix<std::complex<double>, 4, 1>;

inline Mat4 to_eigen(const CMatrix4& m) {
  Mat4 e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = m(r, c);
  return e;
}

inline Vec4 to_eigen(const CSpinor4& u) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = u[i];
  return v;
}

/// Dirac matrices typed in from the textbook Dirac representation.
inline Mat4 dirac_gamma(int mu) {
  const std::complex<double> I(0.0, 1.0);
  Eigen::Matrix2cd s[4];
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -I, I, 0;
  s[3] << 1, 0, 0, -1;
  Mat4 g = Mat4::Zero();
  if (mu == 0) {
    g.topLeftCorner<2, 2>() = s[0];
    g.bottomRightCorner<2, 2>() = -s[0];
  } else {
    g.topRightCorner<2, 2>() = s[mu];
    g.bottomLeftCorner<2, 2>() = -s[mu];
  }
  return g;
}

inline Mat4 slashed(const FourVector& v) {
  return v.t * dirac_gamma(0) - v.x * dirac_gamma(1) - v.y * dirac_gamma(2) - v.z * dirac_gamma(3);
}

/// Orthonormal basis of the numerical null space: right singular vectors whose
/// singular value is below rel_tol times the largest.
inline Eigen::MatrixXcd null_space(const Mat4& m, double rel_tol = 1e-10) {
  Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = rel_tol * std::max(1.0, s(0));
  int rank = 0;
  for (int i = 0; i < 4; ++i) rank += s(i) > cut ? 1 : 0;
  return svd.matrixV().rightCols(4 - rank);
}

inline int rank(const Mat4& m, double rel_tol = 1e-10) { return 4 - static_cast<int>(null_space(m, rel_tol).cols()); }

/// Ratio of the second to the first singular value of [u v]: zero iff u and v
/// are parallel up to a complex scale.
inline double rank_one_defect(const Vec4& u, const Vec4& v) {
  Eigen::Matrix<std::complex<double>, 4, 2> a;
  a.col(0) = u;
  a.col(1) = v;
  Eigen::JacobiSVD<decltype(a)> svd(a);
  return svd.singularValues()(1) / svd.singularValues()(0);
}

/// Projection of u onto the null space of m.
inline Vec4 project_null(const Mat4& m, const Vec4& u) {
  const Eigen::MatrixXcd n = null_space(m);
  return n * (n.adjoint() * u);
}

/// Hamilton product as the real 4x4 left-multiplication matrix of p.
inline Eigen::Vector4d hamilton(const Quaternion& p, const Quaternion& q) {
  Eigen::Matrix4d l;
  l << p.w(), -p.x(), -p.y(), -p.z(),
       p.x(),  p.w(), -p.z(),  p.y(),
       p.y(),  p.z(),  p.w(), -p.x(),
       p.z(), -p.y(),  p.x(),  p.w();
  return l * Eigen::Vector4d(q.w(), q.x(), q.y(), q.z());
}

}  // namespace oracle

inline double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w() - b.w()), std::abs(a.x() - b.x()), std::abs(a.y() - b.y()), std::abs(a.z() - b.z())});
}

inline double max_abs_diff(const QSpinor4& a, const QSpinor4& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, max_abs_diff(a[i], b[i]));
  return d;
}

}  // namespace qtest
