#pragma once

#include "dade/cfun.hpp"

namespace dade {

/// One Borel-Smith section, tagged with the clause it instantiates:
///   kind 1: L <| K <= S with K/L = Z/p, p odd          (parity)
///   kind 2: L <| K <= S with K/L = Z/p x Z/p            (equality over mids)
///   kind 3: L <| K <| N <= N_S(L), K/L = Z/2, N/L = Z/4 or Q8 (p = 2)
struct BsSection {
  int kind = 1;
  Subgroup lower, upper;
  Subgroup witness_n;              // kind 3 only
  std::vector<Subgroup> mids;      // kind 2 only, the p+1 intermediates
  QuotientType n_type;             // kind 3 only
};

struct ArtinTriple {
  Subgroup lower;  // L
  Subgroup upper;  // K, a p-group with K/L = Z/p
  Subgroup outer;  // H with K <| H <= N_G(L) n N_G(K), H/K = Z/q^r
  i64 q = 2;
  int r = 1;
  int l = 0;  // kernel order of the H/K action on K/L is q^l
};

struct ConditionWitness {
  std::string kind;      // "BS-i" | "BS-ii" | "BS-iii" | "Artin" | "OrientedArtin"
  std::string subgroups; // canonical representatives involved
  i64 modulus = 0;       // 0 = equality
  i64 observed = 0;      // value that should be 0 (mod modulus)
};

std::vector<BsSection> enumerate_bs_sections(const GroupPtr& g, i64 p);

/// Empty result means pass.
std::vector<ConditionWitness> check_borel_smith(const SuperclassFunction& f);

std::vector<ArtinTriple> enumerate_artin_triples(const GroupPtr& g, i64 p, bool oriented);

std::vector<ConditionWitness> check_artin(const SuperclassFunction& f);
std::vector<ConditionWitness> check_oriented_artin(const SuperclassFunction& f);

enum class ConditionKind { borel_smith, artin_borel_smith_plus };

/// C_b(G,p) or C_{ba+}(G,p) as a sublattice of C(G,p); basis vectors are
/// re-validated through the checkers.
IntegerLattice condition_lattice(const GroupPtr& g, i64 p, ConditionKind kind);

}  // namespace dade
