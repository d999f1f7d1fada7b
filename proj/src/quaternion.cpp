#include "qdirac/quaternion.hpp"

#include <stdexcept>

namespace qdirac {

bool is_parallel(const Quaternion& p, const Quaternion& q, double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("is_parallel: negative tolerance");
  }
  const Quaternion pq = mul(p, conjugate(q));
  const double imag = std::sqrt(pq.x() * pq.x() + pq.y() * pq.y() + pq.z() * pq.z());
  return imag <= tol * norm(p) * norm(q);
}

}  // namespace qdirac
