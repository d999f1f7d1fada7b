#include <doctest.h>

#include <stdexcept>

#include "qdirac/quaternion.hpp"
#include "support.hpp"

using namespace qdirac;
using qtest::Gen;

namespace {

// (z0, z1)(w0, w1) = (z0 w0 - z1 conj(w1), z0 w1 + z1 conj(w0))
Quaternion symplectic_product(const Quaternion& p, const Quaternion& q) {
  const auto [z0, z1] = symplectic_split(p);
  const auto [w0, w1] = symplectic_split(q);
  return from_symplectic({z0 * w0 - z1 * std::conj(w1), z0 * w1 + z1 * std::conj(w0)});
}

}  // namespace

TEST_CASE("unit product table") {
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(k * j == -i);
  CHECK(i * k == -j);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j * k == -one);
  CHECK(mul(i, j) == -mul(j, i));
}

TEST_CASE("identity element") {
  Gen g(1);
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = g.quaternion();
    CHECK(mul(Quaternion::one(), q) == q);
    CHECK(mul(q, Quaternion::one()) == q);
  }
}

TEST_CASE("component product agrees with the symplectic and matrix products") {
  Gen g(2);
  double worst_symplectic = 0.0;
  double worst_matrix = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Quaternion p = g.quaternion(), q = g.quaternion();
    const Quaternion pq = mul(p, q);
    const Eigen::Vector4d ref = qtest::oracle::hamilton(p, q);
    const double scale = norm(p) * norm(q);
    worst_symplectic = std::max(worst_symplectic, qtest::max_abs_diff(pq, symplectic_product(p, q)) / scale);
    worst_matrix = std::max(worst_matrix, qtest::max_abs_diff(pq, Quaternion(ref(0), ref(1), ref(2), ref(3))) / scale);
  }
  CHECK(worst_symplectic <= 1e-15);
  CHECK(worst_matrix <= 1e-15);
}

TEST_CASE("norm multiplicativity and associativity") {
  Gen g(3);
  double mult = 0.0;
  double assoc = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Quaternion p = g.quaternion(), q = g.quaternion(), r = g.quaternion();
    mult = std::max(mult, std::abs(norm(p * q) - norm(p) * norm(q)) / (norm(p) * norm(q)));
    assoc = std::max(assoc, qtest::max_abs_diff((p * q) * r, p * (q * r)) / (norm(p) * norm(q) * norm(r)));
  }
  CHECK(mult <= 1e-14);
  CHECK(assoc <= 1e-13);
}

TEST_CASE("conjugate") {
  const Quaternion q(1, 1, 1, 1);
  CHECK(conjugate(q) == Quaternion(1, -1, -1, -1));
  Gen g(4);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion p = g.quaternion();
    CHECK(conjugate(conjugate(p)) == p);
    const Quaternion pp = p * conjugate(p);
    CHECK(pp.w() == doctest::Approx(norm2(p)).epsilon(1e-14));
    CHECK(std::abs(pp.x()) + std::abs(pp.y()) + std::abs(pp.z()) <= 1e-14 * norm2(p));
  }
}

TEST_CASE("norm is zero only at zero") {
  CHECK(norm2(Quaternion{}) == 0.0);
  CHECK(norm2(Quaternion(0, 0, 1e-150, 0)) > 0.0);
  CHECK(norm2(Quaternion(1, 2, 3, 4)) == 30.0);
}

TEST_CASE("constructors reject non-finite components") {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Quaternion(inf, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Quaternion(0, 0, nan, 0), std::invalid_argument);
  CHECK_THROWS_AS(Quaternion{nan}, std::invalid_argument);
  CHECK_THROWS_AS(from_symplectic({Complex(0, inf), Complex()}), std::invalid_argument);
}

TEST_CASE("right and left multiplication by the units") {
  CHECK(right_mul_i(Quaternion::j()) == -Quaternion::k());
  CHECK(right_mul_i(Quaternion::one()) == Quaternion::i());
  Gen g(5);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion q = g.quaternion();
    CHECK(right_mul_i(q) == q * Quaternion::i());
    CHECK(left_mul_i(q) == Quaternion::i() * q);
    CHECK(left_mul_j(q) == Quaternion::j() * q);
    CHECK(right_mul_i(right_mul_i(q)) == -q);

    const auto [z0, z1] = symplectic_split(q);
    const auto [r0, r1] = symplectic_split(right_mul_i(q));
    const Complex I(0, 1);
    CHECK(std::abs(r0 - I * z0) <= 1e-15 * norm(q));
    CHECK(std::abs(r1 + I * z1) <= 1e-15 * norm(q));

    const Complex c = g.complex();
    CHECK(qtest::max_abs_diff(left_mul(c, q), Quaternion::from_complex(c) * q) <= 1e-15 * std::abs(c) * norm(q));
  }
}

TEST_CASE("real inner product on the unit table") {
  const std::array<Quaternion, 4> units{Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) CHECK(real_inner_pointwise(units[a], units[b]) == (a == b ? 1.0 : 0.0));

  Gen g(6);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion p = g.quaternion(), q = g.quaternion();
    CHECK(real_inner_pointwise(p, q) == real_inner_pointwise(q, p));
    CHECK(real_inner_pointwise(p, p) == doctest::Approx(norm2(p)).epsilon(1e-15));
    CHECK(real_inner_pointwise(p, p) > 0.0);
    // Re(p q*) equals the pointwise inner product
    CHECK(real_inner_pointwise(p, q) == doctest::Approx((p * conjugate(q)).w()).epsilon(1e-12));
  }
}

TEST_CASE("parallel quaternions") {
  Gen g(7);
  const Quaternion q = g.quaternion();
  CHECK(is_parallel(q, 3.0 * q, 1e-12));
  CHECK(is_parallel(q, -0.5 * q, 1e-12));
  CHECK_FALSE(is_parallel(Quaternion::one(), Quaternion::j(), 1e-12));
  CHECK_FALSE(is_parallel(Quaternion::i(), Quaternion::k(), 1e-12));
  CHECK(is_parallel(Quaternion{}, q, 1e-12));
  CHECK(is_parallel(q, Quaternion{}, 1e-12));
  CHECK_THROWS_AS(is_parallel(q, q, -1.0), std::invalid_argument);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion unit = g.unit_quaternion();
    const double lambda = g.uniform(-1e3, 1e3);
    const double mu = g.uniform(-1e-3, 1e-3);
    CHECK(is_parallel(lambda * unit, mu * unit, 1e-12));
    const Quaternion other = g.unit_quaternion();
    CHECK_FALSE(is_parallel(lambda * unit, mu * other, 1e-6));
  }
}

TEST_CASE("symplectic round trip is bit exact") {
  Gen g(8);
  for (int n = 0; n < 10000; ++n) {
    const Quaternion q = g.quaternion(g.uniform(1e-8, 1e8));
    REQUIRE(from_symplectic(symplectic_split(q)) == q);
  }
  const auto [z0, z1] = symplectic_split(Quaternion(1, 2, 3, 4));
  CHECK(z0 == Complex(1, 2));
  CHECK(z1 == Complex(3, 4));
  // z0 + z1 j with z1 j = (c + d i) j = c j + d k
  CHECK(from_symplectic({Complex(1, 2), Complex(3, 4)}) ==
        Quaternion::from_complex({1, 2}) + Quaternion::from_complex({3, 4}) * Quaternion::j());
}
