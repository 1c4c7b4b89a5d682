#include "dade/gset.hpp"

#include <algorithm>

namespace dade {

i64 GSet::size() const {
  const auto& cls = group->subgroup_classes();
  i64 s = 0;
  for (int c = 0; c < mult.size(); ++c)
    s = checked_add(s, checked_mul(mult[c], group->order() / cls[c].order));
  return s;
}

GSet gset_zero(const GroupPtr& g) {
  GSet x;
  x.group = g;
  x.mult = IVec::Zero(g->n_classes());
  return x;
}

GSet gset_orbit(const GroupPtr& g, int cls, i64 copies) {
  if (copies < 0) throw DomainError("orbit multiplicity must be non-negative");
  GSet x = gset_zero(g);
  x.mult[cls] = copies;
  return x;
}

IVec marks_vector(const GSet& x) {
  // column k of the table is the fixed-point column of class k
  return x.group->marks().transpose() * x.mult;
}

i64 fixed_points(const GSet& x, const Subgroup& k) {
  if (k.parent.get() != x.group.get())
    throw DomainError("fixed_points: subgroup belongs to a different group");
  int c = x.group->class_of(k.elems);
  i64 s = 0;
  const IMat& m = x.group->marks();
  for (int h = 0; h < x.mult.size(); ++h)
    s = checked_add(s, checked_mul(x.mult[h], m(h, c)));
  return s;
}

GSet marks_to_gset(const GroupPtr& g, const IVec& v) {
  const IMat& m = g->marks();
  const int n = g->n_classes();
  if (v.size() != n) throw DomainError("marks vector has wrong length");
  IVec mult = IVec::Zero(n);
  for (int c = n - 1; c >= 0; --c) {
    i64 rest = v[c];
    for (int h = c + 1; h < n; ++h) rest -= checked_mul(mult[h], m(h, c));
    if (rest % m(c, c) != 0 || rest / m(c, c) < 0)
      throw DomainError("not a genuine G-set: failure at class " + g->class_name(c));
    mult[c] = rest / m(c, c);
  }
  GSet x;
  x.group = g;
  x.mult = std::move(mult);
  return x;
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  if (x.group.get() != y.group.get())
    throw DomainError("disjoint_union: different parent groups");
  GSet r;
  r.group = x.group;
  r.mult = x.mult + y.mult;
  return r;
}

GSet product(const GSet& x, const GSet& y) {
  if (x.group.get() != y.group.get()) throw DomainError("product: different parent groups");
  IVec v = marks_vector(x).cwiseProduct(marks_vector(y));
  return marks_to_gset(x.group, v);
}

GSet restrict_gset(const GSet& x, const Subgroup& h) {
  const Group& g = *x.group;
  if (h.parent.get() != &g) throw DomainError("restrict: subgroup of a different group");
  GroupPtr hg = Group::from_subgroup(h);
  GSet r = gset_zero(hg);
  for (int c = 0; c < x.mult.size(); ++c) {
    if (x.mult[c] == 0) continue;
    const auto& h0 = g.subgroup_classes()[c].rep.elems;
    Group::CosetTable t = g.left_cosets(h0);
    std::vector<char> seen(t.reps.size(), 0);
    for (size_t j = 0; j < t.reps.size(); ++j) {
      if (seen[j]) continue;
      // orbit of coset j under left multiplication by h
      std::vector<int> orbit{static_cast<int>(j)};
      seen[j] = 1;
      for (size_t q = 0; q < orbit.size(); ++q)
        for (int e : h.elems) {
          int c2 = t.coset_of[g.mul(e, t.reps[orbit[q]])];
          if (!seen[c2]) {
            seen[c2] = 1;
            orbit.push_back(c2);
          }
        }
      // stabilizer of the representative coset inside h
      std::vector<int> stab;
      for (int e : h.elems)
        if (t.coset_of[g.mul(e, t.reps[j])] == static_cast<int>(j)) stab.push_back(e);
      std::sort(stab.begin(), stab.end());
      // translate to element indices of the subgroup-as-group
      std::vector<int> stab_in_h;
      for (int e : stab) stab_in_h.push_back(hg->index_of(g.elements()[e]));
      std::sort(stab_in_h.begin(), stab_in_h.end());
      r.mult[hg->class_of(stab_in_h)] += x.mult[c];
    }
  }
  return r;
}

GSet mult_induction(const GSet& x, const GroupPtr& g) {
  const Group& G = *g;
  const Group& S = *x.group;
  // embed S into G
  std::vector<int> s_in_g(S.order());
  for (i64 i = 0; i < S.order(); ++i) s_in_g[i] = G.index_of(S.elements()[i]);
  std::vector<int> s_sorted = s_in_g;
  std::sort(s_sorted.begin(), s_sorted.end());
  if (!G.is_subgroup_set(s_sorted))
    throw DomainError("mult_induction: the set group is not a subgroup of the target");

  const int n = G.n_classes();
  IVec v(n);
  IVec xmarks = marks_vector(x);
  for (int c = 0; c < n; ++c) {
    const auto& k = G.subgroup_classes()[c].rep.elems;
    std::vector<char> visited(G.order(), 0);
    i64 value = 1;
    for (int gidx = 0; gidx < static_cast<int>(G.order()); ++gidx) {
      if (visited[gidx]) continue;
      for (int ke : k)
        for (int se : s_sorted) visited[G.mul(ke, G.mul(gidx, se))] = 1;
      // factor f_{g^-1 K g  ∩ S}(X)
      int gi = G.inv(gidx);
      std::vector<int> a;
      for (i64 si = 0; si < S.order(); ++si) {
        int in_g = s_in_g[si];
        int conj = G.mul(gidx, G.mul(in_g, gi));
        if (std::binary_search(k.begin(), k.end(), conj)) a.push_back(static_cast<int>(si));
      }
      std::sort(a.begin(), a.end());
      value = checked_mul(value, xmarks[S.class_of(a)]);
    }
    v[c] = value;
  }
  try {
    return marks_to_gset(g, v);
  } catch (const DomainError& e) {
    throw DomainError(std::string("mult_induction produced non-integral orbit data, "
                                  "which indicates a bug: ") +
                      e.what());
  }
}

int ConcreteGSet::act(int g, int point) const {
  for (const auto& b : blocks) {
    int local = point - b.offset;
    i64 nc = static_cast<i64>(b.cosets.reps.size());
    if (local < 0 || local >= b.copies * nc) continue;
    i64 copy = local / nc;
    int coset = static_cast<int>(local % nc);
    int image = b.cosets.coset_of[group->mul(g, b.cosets.reps[coset])];
    return b.offset + static_cast<int>(copy * nc) + image;
  }
  throw DomainError("point index out of range");
}

bool ConcreteGSet::fixed_by(const std::vector<int>& subgroup_elems, int point) const {
  for (int e : subgroup_elems)
    if (act(e, point) != point) return false;
  return true;
}

std::vector<Perm> ConcreteGSet::generator_action() const {
  std::vector<Perm> r;
  for (int gi : group->generator_indices()) {
    Perm p;
    p.img.resize(n_points);
    for (int x = 0; x < n_points; ++x) p.img[x] = act(gi, x);
    r.push_back(std::move(p));
  }
  return r;
}

GSet ConcreteGSet::abstract() const {
  GSet x = gset_zero(group);
  for (const auto& b : blocks) x.mult[b.cls] += b.copies;
  return x;
}

ConcreteGSet concretize(const GSet& x) {
  ConcreteGSet c;
  c.group = x.group;
  int offset = 0;
  for (int cls = 0; cls < x.mult.size(); ++cls) {
    if (x.mult[cls] == 0) continue;
    ConcreteGSet::OrbitBlock b;
    b.cls = cls;
    b.copies = x.mult[cls];
    b.cosets = x.group->left_cosets(x.group->subgroup_classes()[cls].rep.elems);
    b.offset = offset;
    offset += static_cast<int>(b.copies * static_cast<i64>(b.cosets.reps.size()));
    c.blocks.push_back(std::move(b));
  }
  c.n_points = offset;
  return c;
}

}  // namespace dade
