#include "dade/fpmat.hpp"

namespace dade::fp {

void check_prime(i64 p) {
  if (!is_prime(p) || p > max_prime)
    throw DomainError("field characteristic must be a prime <= " + std::to_string(max_prime));
}

i64 inv_mod(i64 a, i64 p) {
  a = norm(a, p);
  if (a == 0) throw DomainError("division by zero in F_p");
  i64 r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

IMat reduce(IMat a, i64 p) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = norm(a(i, j), p);
  return a;
}

IMat mul(const IMat& a, const IMat& b, i64 p) {
  // entries < p <= 97, inner dimension <= ~2^41 before overflow
  return reduce(a * b, p);
}

IMat kron(const IMat& a, const IMat& b, i64 p) {
  IMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = reduce(a(i, j) * b, p);
  return r;
}

std::vector<int> rref(IMat& a, i64 p) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    i64 s = inv_mod(a(r, c), p);
    for (int j = 0; j < a.cols(); ++j) a(r, j) = a(r, j) * s % p;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      i64 f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) = norm(a(i, j) - f * a(r, j), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(IMat a, i64 p) {
  a = reduce(std::move(a), p);
  return static_cast<int>(rref(a, p).size());
}

IMat nullspace(const IMat& a, i64 p) {
  IMat m = reduce(a, p);
  std::vector<int> pivots = rref(m, p);
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  int nfree = static_cast<int>(a.cols()) - static_cast<int>(pivots.size());
  IMat basis = IMat::Zero(a.cols(), nfree);
  int k = 0;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = norm(-m(static_cast<int>(r), c), p);
    ++k;
  }
  return basis;
}

std::optional<IMat> solve_any(const IMat& a, const IMat& b, i64 p) {
  if (a.rows() != b.rows()) throw DomainError("solve: dimension mismatch");
  IMat aug(a.rows(), a.cols() + b.cols());
  aug << reduce(a, p), reduce(b, p);
  std::vector<int> pivots = rref(aug, p);
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;
  IMat x = IMat::Zero(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    x.row(pivots[r]) = aug.block(static_cast<int>(r), a.cols(), 1, b.cols());
  return x;
}

IMat solve_unique(const IMat& a, const IMat& b, i64 p) {
  auto x = solve_any(a, b, p);
  if (!x) throw DomainError("solve: inconsistent system");
  if (rank(a, p) != a.cols()) throw DomainError("solve: matrix does not have full column rank");
  return *x;
}

IMat inverse(const IMat& a, i64 p) {
  if (a.rows() != a.cols()) throw DomainError("inverse: matrix not square");
  return solve_unique(a, IMat::Identity(a.rows(), a.cols()), p);
}

bool is_identity(const IMat& a) {
  if (a.rows() != a.cols()) return false;
  return int_equal(a, IMat::Identity(a.rows(), a.cols()));
}

}  // namespace dade::fp
