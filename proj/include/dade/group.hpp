#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dade/perm.hpp"

namespace dade {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct Bounds {
  int max_degree = 16;
  i64 max_order = 20160;
};

/// A subgroup, as a sorted list of element indices into its parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elems;

  i64 order() const { return static_cast<i64>(elems.size()); }
  bool contains(int e) const;
};

/// One conjugacy class of subgroups.  Classes are totally ordered by
/// (order, canonical representative), which refines the subconjugacy order.
struct SubgroupClass {
  Subgroup rep;  // canonical representative
  i64 order = 1;
  std::string name;
};

/// A section L <| K of a group, with L normal in K.
struct Section {
  Subgroup lower;  // L
  Subgroup upper;  // K
};

/// Structure descriptor for a finite quotient K/L (exact for the kinds the
/// condition checkers need; everything else is `other`).
struct QuotientType {
  enum Kind { cyclic, elem_abelian, quaternion8, other } kind = other;
  i64 order = 1;
  i64 m = 0;  // cyclic order, or p for elem_abelian(p, 2)
  std::string name;
};

/// Finite permutation group with full element enumeration.  Immutable after
/// construction; derived data (subgroup classes, marks) is cached lazily
/// behind a mutex, so concurrent reads are safe.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static GroupPtr from_generators(std::vector<Perm> gens, int degree,
                                  const Bounds& bounds = Bounds{});

  // Presets.  `dihedral` takes the group order (2n).
  static GroupPtr cyclic(i64 n);
  static GroupPtr dihedral(i64 order);
  static GroupPtr quaternion8();
  static GroupPtr symmetric(int n);
  static GroupPtr elem_abelian(i64 p, int k);
  // C_p : C_{q^r} with the generator of the cyclic part acting with kernel
  // of order q^l; requires q^{r-l} | p-1.
  static GroupPtr semidirect(i64 p, i64 q, int r, int l);

  /// The subgroup as a group in its own right (same permutation degree).
  static GroupPtr from_subgroup(const Subgroup& s);

  int degree() const { return degree_; }
  i64 order() const { return static_cast<i64>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  int identity() const { return identity_; }
  int index_of(const Perm& p) const;           // throws if absent
  std::optional<int> find(const Perm& p) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  i64 element_order(int a) const;

  /// Word data: element e != identity satisfies
  /// e = word_prev(e) * generators()[word_gen(e)].
  int word_prev(int e) const { return word_prev_[e]; }
  int word_gen(int e) const { return word_gen_[e]; }

  // --- element conjugacy ------------------------------------------------
  int n_elem_classes() const;
  int elem_class_of(int e) const;
  const std::vector<int>& elem_class_reps() const;

  // --- subgroups ----------------------------------------------------------
  const std::vector<std::vector<int>>& all_subgroups() const;
  const std::vector<SubgroupClass>& subgroup_classes() const;
  int n_classes() const { return static_cast<int>(subgroup_classes().size()); }
  /// Conjugacy class of the given subgroup (element index set).
  int class_of(const std::vector<int>& sub) const;
  int class_of(const Subgroup& s) const { return class_of(s.elems); }
  const std::string& class_name(int cls) const { return subgroup_classes()[cls].name; }

  /// Indices (into subgroup_classes) of the classes of p-groups, ascending;
  /// the trivial class is first and the Sylow class last.
  std::vector<int> p_classes(i64 p) const;

  Subgroup sylow(i64 p) const;
  Subgroup trivial_subgroup() const;
  Subgroup full_subgroup() const;
  Subgroup subgroup(std::vector<int> elems) const;

  std::vector<int> closure(const std::vector<int>& seed) const;
  std::vector<int> cyclic_subgroup(int e) const;
  std::vector<int> conjugate_subgroup(const std::vector<int>& sub, int g) const;
  std::vector<int> canonical_subgroup(const std::vector<int>& sub) const;
  std::vector<int> normalizer(const std::vector<int>& sub) const;
  std::vector<int> centralizer(const std::vector<int>& sub) const;
  std::vector<int> small_generating_set(const std::vector<int>& sub) const;
  bool is_subgroup_set(const std::vector<int>& sub) const;
  bool is_normal_in(const std::vector<int>& sub, const std::vector<int>& over) const;

  /// True iff some conjugate of a is contained in b.
  bool is_subconjugate(const std::vector<int>& a, const std::vector<int>& b) const;

  // --- cosets ---------------------------------------------------------------
  struct CosetTable {
    std::vector<int> reps;      // one representative per left coset
    std::vector<int> coset_of;  // element index -> coset index
  };
  CosetTable left_cosets(const std::vector<int>& sub) const;

  /// Table of marks: entry (h, k) = |(G/H_h)^{K_k}|, lower triangular in the
  /// class order.
  const IMat& marks() const;

 private:
  Group() = default;

  int degree_ = 1;
  std::vector<Perm> generators_;
  std::vector<int> gen_idx_;
  std::vector<Perm> elements_;  // sorted lexicographically
  int identity_ = 0;
  std::vector<int> word_prev_, word_gen_;
  std::vector<int> inverse_;

  // lazy caches
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::vector<int>> elem_classes_;
  mutable std::vector<int> elem_class_of_;
  mutable std::vector<int> elem_class_reps_;
  mutable std::vector<std::vector<int>> all_subgroups_;
  mutable std::vector<SubgroupClass> classes_;
  mutable std::map<std::vector<int>, int> class_lookup_;
  mutable IMat marks_;
  mutable bool have_elem_classes_ = false, have_subgroups_ = false,
               have_classes_ = false, have_marks_ = false;

  void ensure_elem_classes() const;
  void ensure_subgroups() const;
  void ensure_classes() const;
  void ensure_marks() const;
};

QuotientType recognize_quotient(const Section& s);

/// Structure name of a subgroup ("1", "C4", "C2xC2", "Q8", "S3", ...),
/// without disambiguation ticks.
std::string structure_name(const Group& g, const std::vector<int>& sub);

inline Section make_section(Subgroup lower, Subgroup upper) {
  Section s{std::move(lower), std::move(upper)};
  const Group& g = *s.lower.parent;
  if (!std::includes(s.upper.elems.begin(), s.upper.elems.end(),
                     s.lower.elems.begin(), s.lower.elems.end()))
    throw DomainError("section: lower subgroup not contained in upper");
  if (!g.is_normal_in(s.lower.elems, s.upper.elems))
    throw DomainError("section: lower subgroup not normal in upper");
  return s;
}

}  // namespace dade
