#pragma once

#include "dade/gset.hpp"
#include "dade/intlat.hpp"

namespace dade {

/// An integer function on the p-subgroup classes of G (an element of C(G,p)).
struct SuperclassFunction {
  GroupPtr group;
  i64 p = 2;
  IVec values;  // aligned with group->p_classes(p)

  friend SuperclassFunction operator+(const SuperclassFunction& a, const SuperclassFunction& b);
  friend SuperclassFunction operator-(const SuperclassFunction& a, const SuperclassFunction& b);
  SuperclassFunction scaled(i64 c) const;
  std::string to_string() const;  // "class-name: value" table
};

SuperclassFunction make_superclass(const GroupPtr& g, i64 p, IVec values);

/// Value of f at an arbitrary p-subgroup (through its G-class).
i64 value_at(const SuperclassFunction& f, const std::vector<int>& subgroup);

/// omega_X: 1 on classes with a fixed point, else 0.
SuperclassFunction omega_of_gset(const GSet& x, i64 p);

/// omega_{G/H} for the p-class with the given position in p_classes order.
SuperclassFunction omega_basis_element(const GroupPtr& g, i64 p, int pos);

/// Subconjugacy matrix W(i,j) = [class_i <=_G class_j] over the p-classes;
/// upper unitriangular; its columns are the omega_{G/P_j}.
IMat subconjugacy_matrix(const GroupPtr& g, i64 p);

/// Coefficients of f in the omega basis (exact; the matrix is unimodular).
IVec to_omega_coeffs(const SuperclassFunction& f);
SuperclassFunction from_omega_coeffs(const GroupPtr& g, i64 p, const IVec& coeffs);

/// delta-basis coefficients are the values themselves.
inline IVec to_delta_coeffs(const SuperclassFunction& f) { return f.values; }

/// Moebius function of the poset of p-subgroup classes under subconjugacy.
IMat moebius_table(const GroupPtr& g, i64 p);

/// Coefficients a_Q with omega_X = sum_Q a_Q omega_{G/Q}; verified internally
/// before returning.
IVec omega_expand(const GSet& x, i64 p);

}  // namespace dade
