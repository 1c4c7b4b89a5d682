#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dade {

using i64 = std::int64_t;
using IMat = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<i64, Eigen::Dynamic, 1>;

/// Error for violated preconditions and out-of-domain inputs.  The CLI maps
/// these to exit code 1; anything else escaping is a bug.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exact integer arithmetic overflowed");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exact integer arithmetic overflowed");
  return r;
}

inline i64 ipow(i64 base, i64 exp) {
  i64 r = 1;
  for (i64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Largest power of p dividing n.
inline i64 p_part(i64 n, i64 p) {
  i64 r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// If n = q^r for the prime q, returns r; otherwise -1.
inline int prime_power_log(i64 n, i64 q) {
  int r = 0;
  while (n % q == 0) {
    n /= q;
    ++r;
  }
  return n == 1 ? r : -1;
}

inline bool int_equal(const IMat& a, const IMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().maxCoeff() == 0;
}

inline bool int_equal(const IVec& a, const IVec& b) {
  return a.size() == b.size() && (a.size() == 0 || (a - b).cwiseAbs().maxCoeff() == 0);
}

}  // namespace dade
