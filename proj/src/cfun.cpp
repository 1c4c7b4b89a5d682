#include "dade/cfun.hpp"

#include <sstream>

namespace dade {

SuperclassFunction make_superclass(const GroupPtr& g, i64 p, IVec values) {
  if (static_cast<int>(g->p_classes(p).size()) != values.size())
    throw DomainError("superclass function has wrong length");
  SuperclassFunction f;
  f.group = g;
  f.p = p;
  f.values = std::move(values);
  return f;
}

SuperclassFunction operator+(const SuperclassFunction& a, const SuperclassFunction& b) {
  if (a.group.get() != b.group.get() || a.p != b.p)
    throw DomainError("superclass functions live in different groups");
  SuperclassFunction r = a;
  r.values += b.values;
  return r;
}

SuperclassFunction operator-(const SuperclassFunction& a, const SuperclassFunction& b) {
  if (a.group.get() != b.group.get() || a.p != b.p)
    throw DomainError("superclass functions live in different groups");
  SuperclassFunction r = a;
  r.values -= b.values;
  return r;
}

SuperclassFunction SuperclassFunction::scaled(i64 c) const {
  SuperclassFunction r = *this;
  r.values *= c;
  return r;
}

std::string SuperclassFunction::to_string() const {
  std::ostringstream out;
  std::vector<int> pc = group->p_classes(p);
  for (size_t i = 0; i < pc.size(); ++i) {
    if (i) out << ", ";
    out << group->class_name(pc[i]) << ": " << values[static_cast<int>(i)];
  }
  return out.str();
}

i64 value_at(const SuperclassFunction& f, const std::vector<int>& subgroup) {
  std::vector<int> pc = f.group->p_classes(f.p);
  int cls = f.group->class_of(subgroup);
  for (size_t i = 0; i < pc.size(); ++i)
    if (pc[i] == cls) return f.values[static_cast<int>(i)];
  throw DomainError("subgroup is not a p-subgroup");
}

SuperclassFunction omega_of_gset(const GSet& x, i64 p) {
  std::vector<int> pc = x.group->p_classes(p);
  IVec marks = marks_vector(x);
  IVec v(static_cast<int>(pc.size()));
  for (size_t i = 0; i < pc.size(); ++i) v[static_cast<int>(i)] = marks[pc[i]] > 0 ? 1 : 0;
  return make_superclass(x.group, p, std::move(v));
}

IMat subconjugacy_matrix(const GroupPtr& g, i64 p) {
  std::vector<int> pc = g->p_classes(p);
  const int n = static_cast<int>(pc.size());
  const auto& cls = g->subgroup_classes();
  IMat w = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w(i, j) = g->is_subconjugate(cls[pc[i]].rep.elems, cls[pc[j]].rep.elems) ? 1 : 0;
  return w;
}

SuperclassFunction omega_basis_element(const GroupPtr& g, i64 p, int pos) {
  IMat w = subconjugacy_matrix(g, p);
  return make_superclass(g, p, w.col(pos));
}

IVec to_omega_coeffs(const SuperclassFunction& f) {
  IMat w = subconjugacy_matrix(f.group, f.p);
  const int n = static_cast<int>(w.rows());
  // back-substitution against the unitriangular W (upper in class order)
  IVec c = IVec::Zero(n);
  IVec rest = f.values;
  for (int j = n - 1; j >= 0; --j) {
    c[j] = rest[j];
    if (c[j] != 0)
      for (int i = 0; i < n; ++i) rest[i] -= c[j] * w(i, j);
  }
  if (!rest.isZero(0)) throw DomainError("omega basis change failed (internal)");
  return c;
}

SuperclassFunction from_omega_coeffs(const GroupPtr& g, i64 p, const IVec& coeffs) {
  IMat w = subconjugacy_matrix(g, p);
  return make_superclass(g, p, w * coeffs);
}

IMat moebius_table(const GroupPtr& g, i64 p) {
  IMat w = subconjugacy_matrix(g, p);
  const int n = static_cast<int>(w.rows());
  IMat mu = IMat::Zero(n, n);
  for (int q = 0; q < n; ++q) {
    mu(q, q) = 1;
    for (int pp = q + 1; pp < n; ++pp) {
      if (!w(q, pp)) continue;
      i64 s = 0;
      for (int r = q; r < pp; ++r)
        if (w(q, r) && w(r, pp)) s += mu(q, r);
      mu(q, pp) = -s;
    }
  }
  return mu;
}

IVec omega_expand(const GSet& x, i64 p) {
  const GroupPtr& g = x.group;
  std::vector<int> pc = g->p_classes(p);
  const int n = static_cast<int>(pc.size());
  IMat mu = moebius_table(g, p);
  IMat w = subconjugacy_matrix(g, p);
  IVec marks = marks_vector(x);
  IVec a = IVec::Zero(n);
  for (int q = 0; q < n; ++q)
    for (int pp = q; pp < n; ++pp)
      if ((pp == q || w(q, pp)) && marks[pc[pp]] > 0) a[q] += mu(q, pp);
  SuperclassFunction recombined = from_omega_coeffs(g, p, a);
  SuperclassFunction direct = omega_of_gset(x, p);
  if (!int_equal(recombined.values, direct.values))
    throw DomainError("Moebius expansion failed to recombine (internal)");
  return a;
}

}  // namespace dade
