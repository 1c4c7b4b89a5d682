#pragma once

#include <vector>

#include "dade/common.hpp"

namespace dade {

/// Row-style Hermite normal form: U * A = H with U unimodular, pivots
/// positive, entries below a pivot zero and entries above reduced into
/// [0, pivot).  All arithmetic is exact and overflow-checked.
struct HnfResult {
  IMat h;
  IMat u;
  int rank = 0;
};
HnfResult hnf(IMat a);

/// Smith normal form: U * A * V = D with U, V unimodular and the diagonal a
/// divisibility chain d1 | d2 | ... (non-negative).
struct SnfResult {
  IMat d;
  IMat u;
  IMat v;
  int rank = 0;
  std::vector<i64> diagonal() const;
};
SnfResult snf(IMat a);

/// Rows spanning { x : x * A = 0 }.
IMat left_kernel(const IMat& a);

/// A sublattice of Z^n, spanned by the rows of `basis` (kept in HNF).
struct IntegerLattice {
  int ambient = 0;
  IMat basis;  // rank x ambient, rows independent

  int rank() const { return static_cast<int>(basis.rows()); }
  bool contains(const IVec& v) const;
  bool contains_lattice(const IntegerLattice& other) const;
  /// Index in Z^n; 0 means infinite (rank deficient).
  i64 index() const;
};

IntegerLattice lattice_from_rows(int ambient, const IMat& rows);
IntegerLattice full_lattice(int ambient);

/// One congruence  functional . v == 0 (mod modulus); modulus 0 encodes an
/// exact equality.
struct Congruence {
  IVec functional;
  i64 modulus = 0;
};

IntegerLattice lattice_from_congruences(int ambient, const std::vector<Congruence>& cs);

/// Invariant factors d1 | d2 | ... of a finitely generated abelian group;
/// factors equal to 1 are dropped and 0 denotes a free summand.
struct FinAbStructure {
  std::vector<i64> factors;

  int free_rank() const;
  /// Torsion order (product of nonzero factors).
  i64 torsion_order() const;
  bool is_trivial() const { return factors.empty(); }
  std::string to_string() const;
  friend bool operator==(const FinAbStructure&, const FinAbStructure&) = default;
};

/// Structure of Z^ambient / L.
FinAbStructure quotient_structure(int ambient, const IntegerLattice& l);

/// True iff some surjection `from` ->> `onto` exists.
bool has_surjection(const FinAbStructure& from, const FinAbStructure& onto);

/// Coordinates for Z^n / L: coset(v) = (v^T V) reduced componentwise by the
/// moduli (0 = free coordinate).
struct QuotientMap {
  IMat v;        // n x n unimodular, columns aligned with moduli
  IVec moduli;   // d_i for i < rank, then 0s
  IVec coset(const IVec& x) const;
  bool is_zero(const IVec& x) const { return coset(x).isZero(0); }
};
QuotientMap quotient_map(int ambient, const IntegerLattice& l);

/// Solves A x = b over the integers; returns false when no solution exists,
/// in which case `residual` holds the irreducible remainder of b.
bool integer_solve(const IMat& a, const IVec& b, IVec& x, IVec* residual = nullptr);

}  // namespace dade
