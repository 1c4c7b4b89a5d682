#pragma once

#include "dade/group.hpp"

namespace dade {

/// A formal non-negative combination of transitive orbits [G/H], one
/// multiplicity per subgroup class of G.
struct GSet {
  GroupPtr group;
  IVec mult;  // indexed by subgroup class

  i64 size() const;
  bool empty() const { return size() == 0; }
};

GSet gset_orbit(const GroupPtr& g, int cls, i64 copies = 1);
GSet gset_zero(const GroupPtr& g);

/// Fixed-point counts of X against every subgroup class, in class order.
IVec marks_vector(const GSet& x);

i64 fixed_points(const GSet& x, const Subgroup& k);

/// Inverse of the marks map.  Throws DomainError naming the offending class
/// when v is not the marks vector of a genuine G-set.
GSet marks_to_gset(const GroupPtr& g, const IVec& v);

GSet disjoint_union(const GSet& x, const GSet& y);
GSet product(const GSet& x, const GSet& y);

/// Restriction to a subgroup, returned over the subgroup-as-group.
GSet restrict_gset(const GSet& x, const Subgroup& h);

/// Multiplicative induction: X an S-set for the subgroup S <= G whose
/// elements are x.group's permutations.  Fixed points multiply over the
/// double cosets K\G/S.
GSet mult_induction(const GSet& x, const GroupPtr& g);

/// Element-level realization.  Points are (orbit, copy, coset) triples
/// ordered by class; the action is by left translation on cosets.
struct ConcreteGSet {
  GroupPtr group;
  struct OrbitBlock {
    int cls = 0;
    i64 copies = 0;
    Group::CosetTable cosets;
    int offset = 0;  // index of first point
  };
  std::vector<OrbitBlock> blocks;
  int n_points = 0;

  int act(int g, int point) const;
  bool fixed_by(const std::vector<int>& subgroup_elems, int point) const;
  std::vector<Perm> generator_action() const;
  GSet abstract() const;
};

ConcreteGSet concretize(const GSet& x);

}  // namespace dade
