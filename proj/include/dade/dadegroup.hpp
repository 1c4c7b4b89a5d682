#pragma once

#include "dade/conditions.hpp"

namespace dade {

/// Upper and lower quotient bounds for the group of relative syzygies:
/// lower = C(G,p)/C_b, upper = C(G,p)/C_{ba+}.  The true group sits between
/// them; the tag records when one side is known exact.
struct DadeBounds {
  FinAbStructure lower;
  FinAbStructure upper;
  enum Exactness { exact_lower, exact_upper, undetermined } exactness = undetermined;
  std::string justification;
  IntegerLattice cb;
  IntegerLattice cba_plus;
};

DadeBounds dade_omega_bounds(const GroupPtr& g, i64 p);

/// Expected structure Z/2q^(r-l) for C_p : C_{q^r} with action kernel q^l.
FinAbStructure semidirect_expected(i64 p, i64 q, int r, int l);

struct PsiCoset {
  IVec residues;
  IVec moduli;  // 0 = free coordinate
  bool is_zero() const { return residues.isZero(0); }
  std::string to_string() const;
};

/// Image of f in C(G,p)/C_{ba+}(G,p), in Smith coordinates.
PsiCoset psi_coset(const SuperclassFunction& f);
PsiCoset psi_coset(const QuotientMap& qm, const SuperclassFunction& f);

struct RelationReport {
  int trials = 0;
  int product_checks = 0;
  int roundtrip_checks = 0;
  int replacement_checks = 0;
  int spanning_checks = 0;
  bool ok = false;
  std::string detail;
};

/// Randomized verification of the identities the syzygy classes inherit from
/// C(G,p): the product/union relation, marks roundtrips, Sylow replacement,
/// and spanning by the transitive omegas.  Deterministic seed.
RelationReport relation_suite(const GroupPtr& g, i64 p, int trials);

}  // namespace dade
