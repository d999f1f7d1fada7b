#include "qdirac/spinor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdirac {

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double length3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

CSpinor4 CSpinor4::operator+(const CSpinor4& o) const {
  CSpinor4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = c[i] + o[i];
  return r;
}

CSpinor4 CSpinor4::operator-(const CSpinor4& o) const {
  CSpinor4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = c[i] - o[i];
  return r;
}

CSpinor4 operator*(Complex s, const CSpinor4& v) {
  CSpinor4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = s * v[i];
  return r;
}

Complex inner(const CSpinor4& u, const CSpinor4& v) {
  Complex acc{};
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm2(const CSpinor4& u) {
  double acc = 0.0;
  for (const auto& c : u.c) acc += std::norm(c);
  return acc;
}

QSpinor4 QSpinor4::operator+(const QSpinor4& o) const {
  QSpinor4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = q[i] + o[i];
  return r;
}

QSpinor4 QSpinor4::operator-(const QSpinor4& o) const {
  QSpinor4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = q[i] - o[i];
  return r;
}

QSpinor4& QSpinor4::operator+=(const QSpinor4& o) {
  for (std::size_t i = 0; i < 4; ++i) q[i] += o[i];
  return *this;
}

QSpinor4 operator*(double s, const QSpinor4& v) {
  QSpinor4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = s * v[i];
  return r;
}

double norm2(const QSpinor4& s) {
  double acc = 0.0;
  for (const auto& q : s.q) acc += norm2(q);
  return acc;
}

std::pair<CSpinor4, CSpinor4> symplectic_split(const QSpinor4& s) {
  std::pair<CSpinor4, CSpinor4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const ComplexPair p = symplectic_split(s[i]);
    out.first[i] = p.z0;
    out.second[i] = p.z1;
  }
  return out;
}

QSpinor4 symplectic_join(const CSpinor4& psi0, const CSpinor4& psi1) {
  QSpinor4 s;
  for (std::size_t i = 0; i < 4; ++i) s[i] = from_symplectic({psi0[i], psi1[i]});
  return s;
}

CMatrix4 CMatrix4::identity() {
  CMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix4 CMatrix4::operator+(const CMatrix4& o) const {
  CMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m_[i] = m_[i] + o.m_[i];
  return r;
}

CMatrix4 CMatrix4::operator-(const CMatrix4& o) const {
  CMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m_[i] = m_[i] - o.m_[i];
  return r;
}

CMatrix4 CMatrix4::operator*(const CMatrix4& o) const {
  CMatrix4 r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < 4; ++k) acc += (*this)(i, k) * o(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

CSpinor4 CMatrix4::operator*(const CSpinor4& v) const {
  CSpinor4 r;
  for (std::size_t i = 0; i < 4; ++i) {
    Complex acc{};
    for (std::size_t k = 0; k < 4; ++k) acc += (*this)(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

CMatrix4 operator*(Complex s, const CMatrix4& a) {
  CMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m_[i] = s * a.m_[i];
  return r;
}

CMatrix4 CMatrix4::conj() const {
  CMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m_[i] = std::conj(m_[i]);
  return r;
}

CMatrix4 CMatrix4::adjoint() const {
  CMatrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

double CMatrix4::max_abs() const {
  double best = 0.0;
  for (const auto& c : m_) best = std::max(best, std::abs(c));
  return best;
}

namespace {

// Pauli matrices, row-major 2x2.
constexpr std::array<std::array<Complex, 4>, 3> kPauli{{
    {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)},
    {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)},
    {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)},
}};

std::array<CMatrix4, 4> make_gammas() {
  std::array<CMatrix4, 4> g;
  g[0](0, 0) = 1.0;
  g[0](1, 1) = 1.0;
  g[0](2, 2) = -1.0;
  g[0](3, 3) = -1.0;
  for (std::size_t l = 1; l <= 3; ++l) {
    const auto& s = kPauli[l - 1];
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        g[l](r, c + 2) = s[r * 2 + c];
        g[l](r + 2, c) = -s[r * 2 + c];
      }
    }
  }
  return g;
}

}  // namespace

const CMatrix4& gamma(std::size_t mu) {
  static const std::array<CMatrix4, 4> gammas = make_gammas();
  if (mu > 3) throw std::out_of_range("gamma: index must be 0..3");
  return gammas[mu];
}

const CMatrix4& gamma5() {
  static const CMatrix4 g5 = [] {
    CMatrix4 m;
    m(0, 2) = 1.0;
    m(1, 3) = 1.0;
    m(2, 0) = 1.0;
    m(3, 1) = 1.0;
    return m;
  }();
  return g5;
}

CMatrix4 slashed(const FourVector& v) {
  CMatrix4 r;
  for (std::size_t mu = 0; mu < 4; ++mu) r = r + Complex(v.lower(mu), 0.0) * gamma(mu);
  return r;
}

QSpinor4 apply_left(const CMatrix4& m, const QSpinor4& s) {
  QSpinor4 r;
  for (std::size_t a = 0; a < 4; ++a) {
    Quaternion acc;
    for (std::size_t b = 0; b < 4; ++b) {
      if (m(a, b) != Complex{}) acc += left_mul(m(a, b), s[b]);
    }
    r[a] = acc;
  }
  return r;
}

QSpinor4 right_mul_i_spinor(const QSpinor4& s) {
  QSpinor4 r;
  for (std::size_t a = 0; a < 4; ++a) r[a] = right_mul_i(s[a]);
  return r;
}

QSpinor4 left_mul_i_spinor(const QSpinor4& s) {
  QSpinor4 r;
  for (std::size_t a = 0; a < 4; ++a) r[a] = left_mul_i(s[a]);
  return r;
}

QSpinor4 left_mul_j_spinor(const QSpinor4& s) {
  QSpinor4 r;
  for (std::size_t a = 0; a < 4; ++a) r[a] = left_mul_j(s[a]);
  return r;
}

QRow4 dagger(const QSpinor4& s) {
  QRow4 r;
  for (std::size_t a = 0; a < 4; ++a) r[a] = conjugate(s[a]);
  return r;
}

QRow4 adjoint(const QSpinor4& s) {
  QRow4 r = dagger(s);
  // beta is diagonal with real entries, so right multiplication is a sign flip.
  r[2] = -r[2];
  r[3] = -r[3];
  return r;
}

Quaternion contract(const QRow4& row, const QSpinor4& s) {
  Quaternion acc;
  for (std::size_t a = 0; a < 4; ++a) acc += mul(row[a], s[a]);
  return acc;
}

std::array<Complex, 4> sigma_dot(const Vec3& n) {
  std::array<Complex, 4> r{};
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t e = 0; e < 4; ++e) r[e] += n[l] * kPauli[l][e];
  return r;
}

CMatrix4 helicity_matrix(const Vec3& k) {
  const double len = length3(k);
  if (!(len > 0.0)) throw std::invalid_argument("helicity_matrix: zero three-momentum");
  const Vec3 n{k[0] / len, k[1] / len, k[2] / len};
  const auto s = sigma_dot(n);
  CMatrix4 h;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      h(r, c) = 0.5 * s[r * 2 + c];
      h(r + 2, c + 2) = 0.5 * s[r * 2 + c];
    }
  }
  return h;
}

}  // namespace qdirac
