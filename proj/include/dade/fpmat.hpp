#pragma once

#include <optional>

#include "dade/common.hpp"

// Dense exact linear algebra over the prime field F_p.  Matrices are integer
// matrices with entries normalized into [0, p); p <= 97.

namespace dade::fp {

constexpr i64 max_prime = 97;

void check_prime(i64 p);

inline i64 norm(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 inv_mod(i64 a, i64 p);

IMat reduce(IMat a, i64 p);
IMat mul(const IMat& a, const IMat& b, i64 p);
IMat kron(const IMat& a, const IMat& b, i64 p);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(IMat& a, i64 p);

int rank(IMat a, i64 p);

/// Columns form a basis of { x : a x = 0 }.
IMat nullspace(const IMat& a, i64 p);

/// Unique solution of a x = b when a has full column rank (throws otherwise
/// or when inconsistent).
IMat solve_unique(const IMat& a, const IMat& b, i64 p);

/// Any solution of a x = b; nullopt when inconsistent.
std::optional<IMat> solve_any(const IMat& a, const IMat& b, i64 p);

IMat inverse(const IMat& a, i64 p);

bool is_identity(const IMat& a);

}  // namespace dade::fp
