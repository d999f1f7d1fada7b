#include <doctest.h>

#include <stdexcept>

#include "qdirac/spinor.hpp"
#include "support.hpp"

using namespace qdirac;
using qtest::Gen;
namespace oracle = qtest::oracle;

namespace {

constexpr std::array<double, 4> kEta{1.0, -1.0, -1.0, -1.0};

double max_diff(const CMatrix4& a, const oracle::Mat4& b) { return (oracle::to_eigen(a) - b).cwiseAbs().maxCoeff(); }

QSpinor4 embed_complex(const CSpinor4& u) { return symplectic_join(u, CSpinor4{}); }

}  // namespace

TEST_CASE("gamma matrices match the Dirac representation") {
  for (int mu = 0; mu < 4; ++mu) CHECK(max_diff(qdirac::gamma(mu), oracle::dirac_gamma(mu)) == 0.0);
  CHECK(qdirac::gamma(0)(0, 0) == Complex(1));
  CHECK(qdirac::gamma(0)(2, 2) == Complex(-1));
  CHECK(&beta() == &qdirac::gamma(0));
  CHECK_THROWS_AS(qdirac::gamma(4), std::out_of_range);
}

TEST_CASE("Clifford algebra holds exactly") {
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const CMatrix4 anti = qdirac::gamma(mu) * qdirac::gamma(nu) + qdirac::gamma(nu) * qdirac::gamma(mu);
      const CMatrix4 expect = Complex(mu == nu ? 2.0 * kEta[mu] : 0.0) * CMatrix4::identity();
      CHECK(anti == expect);
    }
  }
  CHECK(qdirac::gamma(2) * qdirac::gamma(2) == Complex(-1) * CMatrix4::identity());
  CHECK(qdirac::gamma(1) * qdirac::gamma(3) + qdirac::gamma(3) * qdirac::gamma(1) == CMatrix4{});
}

TEST_CASE("gamma5") {
  const CMatrix4 g5 = Complex(0, 1) * (qdirac::gamma(0) * qdirac::gamma(1) * qdirac::gamma(2) * qdirac::gamma(3));
  CHECK((g5 - gamma5()).max_abs() == 0.0);
  CHECK(gamma5() * gamma5() == CMatrix4::identity());
  for (std::size_t mu = 0; mu < 4; ++mu) CHECK(gamma5() * qdirac::gamma(mu) + qdirac::gamma(mu) * gamma5() == CMatrix4{});
}

TEST_CASE("slashed vectors") {
  CHECK(slashed({1, 0, 0, 0}) == qdirac::gamma(0));
  CHECK(slashed({0, 1, 0, 0}) == Complex(-1) * qdirac::gamma(1));

  Gen g(11);
  double square = 0.0;
  double det = 0.0;
  double repr = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const FourVector v = g.four(2.0);
    const double vv = minkowski_dot(v, v);
    const CMatrix4 s = slashed(v);
    square = std::max(square, (s * s - Complex(vv) * CMatrix4::identity()).max_abs() / (1.0 + std::abs(vv)));
    const std::complex<double> d = oracle::to_eigen(s).determinant();
    det = std::max(det, std::abs(d - vv * vv) / (1.0 + vv * vv));
    repr = std::max(repr, max_diff(s, oracle::slashed(v)));
  }
  CHECK(square <= 1e-13);
  CHECK(det <= 1e-12);
  CHECK(repr <= 1e-15);
}

TEST_CASE("slashed null vectors are singular with a two-dimensional kernel") {
  Gen g(12);
  for (int n = 0; n < 200; ++n) {
    const FourVector theta = g.null_four();
    CHECK(oracle::rank(oracle::to_eigen(slashed(theta))) == 2);
  }
  CHECK(oracle::rank(oracle::to_eigen(slashed({1, 0, 0, 1}))) == 2);
  CHECK(oracle::rank(oracle::to_eigen(slashed({2, 0, 0, 1}))) == 4);
}

TEST_CASE("apply_left embeds complex matrix action") {
  Gen g(13);
  for (int n = 0; n < 200; ++n) {
    const QSpinor4 s = g.qspinor();
    CHECK(apply_left(CMatrix4::identity(), s) == s);

    const CMatrix4 m = g.cmatrix();
    const CSpinor4 u = g.cspinor();
    const auto [r0, r1] = symplectic_split(apply_left(m, embed_complex(u)));
    const CSpinor4 ref = m * u;
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(r0[i] - ref[i]) <= 1e-13);
      CHECK(r1[i] == Complex{});
    }
  }
}

TEST_CASE("apply_left on both symplectic components") {
  Gen g(14);
  for (int n = 0; n < 200; ++n) {
    const CMatrix4 m = g.cmatrix();
    const CSpinor4 p0 = g.cspinor(), p1 = g.cspinor();

    // right-j form psi0 + psi1 j: complex scalars commute past j on the left
    const auto [a0, a1] = symplectic_split(apply_left(m, symplectic_join(p0, p1)));
    const CSpinor4 m0 = m * p0, m1 = m * p1;
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(a0[i] - m0[i]) <= 1e-13);
      CHECK(std::abs(a1[i] - m1[i]) <= 1e-13);
    }

    // left-j form psi0 + j psi1 picks up M* on the j component, since c j = j conj(c)
    QSpinor4 left_form;
    for (std::size_t i = 0; i < 4; ++i) {
      left_form[i] = Quaternion::from_complex(p0[i]) + Quaternion::j() * Quaternion::from_complex(p1[i]);
    }
    const QSpinor4 out = apply_left(m, left_form);
    const CSpinor4 mc1 = m.conj() * p1;
    for (std::size_t i = 0; i < 4; ++i) {
      const Quaternion expect = Quaternion::from_complex(m0[i]) + Quaternion::j() * Quaternion::from_complex(mc1[i]);
      CHECK(qtest::max_abs_diff(out[i], expect) <= 1e-13);
    }
  }
}

TEST_CASE("apply_left composes") {
  Gen g(15);
  double worst = 0.0;
  for (int n = 0; n < 500; ++n) {
    const CMatrix4 a = g.cmatrix(), b = g.cmatrix();
    const QSpinor4 s = g.qspinor();
    worst = std::max(worst, qtest::max_abs_diff(apply_left(a * b, s), apply_left(a, apply_left(b, s))) /
                                (a.max_abs() * b.max_abs() * norm(s)));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("right multiplication by i against left multiplication by i") {
  Gen g(16);
  const CMatrix4 iI = Complex(0, 1) * CMatrix4::identity();
  for (int n = 0; n < 200; ++n) {
    const CSpinor4 u = g.cspinor();
    const QSpinor4 complex_part = symplectic_join(u, CSpinor4{});
    const QSpinor4 j_part = symplectic_join(CSpinor4{}, u);
    CHECK(qtest::max_abs_diff(right_mul_i_spinor(complex_part), apply_left(iI, complex_part)) == 0.0);
    CHECK(qtest::max_abs_diff(right_mul_i_spinor(j_part), -1.0 * apply_left(iI, j_part)) == 0.0);
    CHECK(left_mul_i_spinor(j_part) == apply_left(iI, j_part));
  }
}

TEST_CASE("symplectic split and join round trip") {
  Gen g(17);
  for (int n = 0; n < 1000; ++n) {
    const QSpinor4 s = g.qspinor();
    const auto [p0, p1] = symplectic_split(s);
    REQUIRE(symplectic_join(p0, p1) == s);
  }
}

TEST_CASE("Dirac adjoint") {
  QSpinor4 e0;
  e0[0] = Quaternion::one();
  const QRow4 a0 = adjoint(e0);
  CHECK(a0[0] == Quaternion::one());
  CHECK(a0[1] == Quaternion{});

  QSpinor4 e2;
  e2[2] = Quaternion::j();
  const QRow4 a2 = adjoint(e2);
  // (Psi^dagger beta)_2 = conj(j) * (-1) = j
  CHECK(a2[2] == Quaternion::j());
  CHECK(a2[0] == Quaternion{});

  Gen g(18);
  for (int n = 0; n < 500; ++n) {
    const QSpinor4 s = g.qspinor();
    const QRow4 bar = adjoint(s);
    const QRow4 dag = dagger(s);
    for (std::size_t c = 0; c < 4; ++c) {
      Quaternion direct;
      for (std::size_t r = 0; r < 4; ++r) direct += beta()(r, c).real() * dag[r];
      CHECK(bar[c] == direct);
    }
    const double density = contract(bar, apply_left(qdirac::gamma(0), s)).w();
    CHECK(density == doctest::Approx(norm2(s)).epsilon(1e-14));
  }
}

TEST_CASE("helicity matrix") {
  const CMatrix4 h = helicity_matrix({0, 0, 1});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(h(r, c) == Complex(r == c ? (r % 2 == 0 ? 0.5 : -0.5) : 0.0));

  Gen g(19);
  for (int n = 0; n < 200; ++n) {
    const Vec3 k = g.vec3(3.0);
    const CMatrix4 hk = helicity_matrix(k);
    CHECK((hk - helicity_matrix({2 * k[0], 2 * k[1], 2 * k[2]})).max_abs() <= 1e-15);
    CHECK((hk * hk - Complex(0.25) * CMatrix4::identity()).max_abs() <= 1e-15);
    Eigen::SelfAdjointEigenSolver<oracle::Mat4> es(oracle::to_eigen(hk));
    const auto ev = es.eigenvalues();
    CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(ev(1) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(ev(2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ev(3) == doctest::Approx(0.5).epsilon(1e-14));
  }
  CHECK_THROWS_AS(helicity_matrix({0, 0, 0}), std::invalid_argument);
}
