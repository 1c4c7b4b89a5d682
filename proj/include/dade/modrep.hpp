#pragma once

#include <map>
#include <optional>

#include "dade/fpmat.hpp"
#include "dade/gset.hpp"

namespace dade {

constexpr i64 default_max_rep_dim = 4096;

/// A matrix representation of G over F_p: one invertible matrix per group
/// generator.  `trivial_source_known` records that the module was built from
/// permutation modules by constructions that preserve the p-permutation
/// property; it is consulted only when the Sylow subgroup is too complicated
/// for the exact restriction test.
struct Rep {
  GroupPtr group;
  i64 p = 2;
  i64 dim = 0;
  std::vector<IMat> gens;
  bool trivial_source_known = false;

  IMat element_matrix(int e) const;
};

/// Validates the generator matrices (invertibility plus consistency of the
/// induced map on all group elements).
Rep make_rep(const GroupPtr& g, i64 p, std::vector<IMat> gens,
             bool trivial_source_known = false);

Rep trivial_rep(const GroupPtr& g, i64 p);
/// One-dimensional representation with the given scalar per generator.
Rep one_dim_rep(const GroupPtr& g, i64 p, const std::vector<i64>& scalars);
/// All one-dimensional representations, deterministically ordered with the
/// trivial one first.
std::vector<Rep> all_one_dim_reps(const GroupPtr& g, i64 p);

Rep perm_module(const ConcreteGSet& x, i64 p);
/// Kernel of the augmentation map kX -> k, in the basis {x_i - x_0}.
Rep delta_module(const ConcreteGSet& x, i64 p);

enum class CombineKind { tensor, dsum };
Rep combine(const Rep& m, const Rep& n, CombineKind kind,
            i64 max_dim = default_max_rep_dim);
Rep dual(const Rep& m);
Rep end_rep(const Rep& m, i64 max_dim = default_max_rep_dim);
Rep restrict_rep(const Rep& m, const Subgroup& h);

struct HomSpace {
  const Rep* source = nullptr;
  const Rep* target = nullptr;
  std::vector<IMat> basis;  // target.dim x source.dim matrices
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// All G-equivariant matrices source -> target.
HomSpace hom_space(const Rep& m, const Rep& n);

/// Number of direct summands of m isomorphic to the one-dimensional chi
/// (rank of the composition pairing hom(chi,m) x hom(m,chi)).
i64 summand_multiplicity_1dim(const Rep& m, const Rep& chi);

/// True iff the equivariant surjection pi : e ->> m splits.
bool is_split_surjection(const IMat& pi, const Rep& e, const Rep& m);

/// True iff m is a summand of kX (x) m, i.e. the evaluation map splits.
bool is_x_projective(const Rep& m, const ConcreteGSet& x);

/// Brauer quotient M[P] = M^P / (traces from proper subgroups), with the
/// induced action of N_G(P)/P.
struct BrauerQuotient {
  GroupPtr nbar;  // N_G(P)/P as a permutation group on the cosets
  Rep rep;        // module over nbar
};
BrauerQuotient brauer_quotient(const Rep& m, const Subgroup& p_subgroup);

/// Dimension of the fixed subspace M^H.
i64 fixed_space_dim(const Rep& m, const Subgroup& h);

/// Jordan block sizes of the restriction to a cyclic subgroup of order p.
std::vector<int> jordan_profile(const Rep& m, const Subgroup& c);

/// Jordan profile of a tensor product computed blockwise, without forming
/// the big module.
std::vector<int> jordan_tensor(const std::vector<int>& a, const std::vector<int>& b, i64 p);

/// Whether m is a p-permutation (trivial source) module, decided exactly via
/// the Jordan criterion when the Sylow subgroup is cyclic of order p (or
/// trivial), otherwise from the construction provenance flag.
bool is_p_permutation(const Rep& m);

/// True iff every Sylow-vertex component of the p-permutation module w is
/// trivial: the normalizer quotient must act as the identity on the Brauer
/// quotient at a Sylow subgroup.
bool is_sylow_vertex_trivial(const Rep& w);

struct DadeVerdict {
  bool dade = false;
  bool capped = false;
  i64 trivial_multiplicity = 0;
};
DadeVerdict is_dade(const Rep& m, i64 max_dim = default_max_rep_dim);

bool is_compatible(const Rep& m, const Rep& n, i64 max_dim = default_max_rep_dim);
bool zero_in_dade(const Rep& m, i64 max_dim = default_max_rep_dim);

struct DadeOrder {
  bool found = false;
  int order = 0;
};
DadeOrder dade_order(const Rep& m, int bound, i64 max_dim = default_max_rep_dim);

/// Searches for an equivariant isomorphism (deterministic; exhaustive over
/// small coefficient spaces, randomized otherwise).
std::optional<IMat> find_isomorphism(const Rep& a, const Rep& b, int trials = 128);

/// True iff t is a direct summand of m (a split pair through m exists).
bool has_summand(const Rep& t, const Rep& m, int trials = 512);

/// Desk-scale invariant bundle standing in for isomorphism tests: dimension,
/// fixed-space dimensions per subgroup class, Jordan profiles at the cyclic
/// p-classes of order p, and one-dimensional summand multiplicities.
struct RepInvariants {
  i64 dim = 0;
  std::vector<i64> fixed_dims;
  std::vector<std::vector<int>> jordan;
  std::vector<i64> one_dim_mult;
  friend bool operator==(const RepInvariants&, const RepInvariants&) = default;
  std::string to_string() const;
};
RepInvariants invariants(const Rep& m);

}  // namespace dade
