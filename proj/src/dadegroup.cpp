#include "dade/dadegroup.hpp"

#include <random>
#include <sstream>

namespace dade {

DadeBounds dade_omega_bounds(const GroupPtr& g, i64 p) {
  DadeBounds b;
  std::vector<int> pc = g->p_classes(p);
  const int n = static_cast<int>(pc.size());
  b.cb = condition_lattice(g, p, ConditionKind::borel_smith);
  b.cba_plus = condition_lattice(g, p, ConditionKind::artin_borel_smith_plus);
  b.lower = quotient_structure(n, b.cb);
  b.upper = quotient_structure(n, b.cba_plus);

  i64 order = g->order();
  bool p_group = p_part(order, p) == order;
  if (p_group) {
    b.exactness = DadeBounds::exact_lower;
    b.justification = "p-group: kernel of the Bouc homomorphism is the Borel-Smith lattice";
  } else if (p == 2) {
    b.exactness = DadeBounds::exact_lower;
    b.justification = "p = 2: both condition lattices agree with the kernel";
  } else {
    Subgroup s = g->sylow(p);
    bool normal_prime_sylow =
        s.order() == p && g->is_normal_in(s.elems, g->full_subgroup().elems);
    if (normal_prime_sylow) {
      QuotientType qt = recognize_quotient(make_section(s, g->full_subgroup()));
      if (qt.kind == QuotientType::cyclic && qt.m > 1) {
        i64 q = 0;
        for (i64 c = 2; c <= qt.m; ++c)
          if (qt.m % c == 0) {
            q = c;
            break;
          }
        if (q != p && prime_power_log(qt.m, q) > 0) {
          b.exactness = DadeBounds::exact_upper;
          b.justification = "normal order-p Sylow with cyclic prime-power quotient";
        }
      }
    }
    if (b.exactness == DadeBounds::undetermined)
      b.justification = "no applicable exactness criterion; bounds only";
  }
  return b;
}

FinAbStructure semidirect_expected(i64 p, i64 q, int r, int l) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw DomainError("semidirect_expected: p and q must be distinct primes");
  if (r < 1 || l < 0 || l > r) throw DomainError("semidirect_expected: need 0 <= l <= r");
  if ((p - 1) % ipow(q, r - l) != 0)
    throw DomainError("semidirect_expected: q^(r-l) must divide p-1");
  FinAbStructure s;
  i64 m = checked_mul(2, ipow(q, r - l));
  if (m > 1) s.factors.push_back(m);
  return s;
}

std::string PsiCoset::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < residues.size(); ++i) {
    if (i) out << ", ";
    out << residues[i];
    if (moduli[i] > 0)
      out << " mod " << moduli[i];
    else
      out << " free";
  }
  out << ")";
  return out.str();
}

PsiCoset psi_coset(const QuotientMap& qm, const SuperclassFunction& f) {
  PsiCoset c;
  c.residues = qm.coset(f.values);
  c.moduli = qm.moduli;
  return c;
}

PsiCoset psi_coset(const SuperclassFunction& f) {
  IntegerLattice cba = condition_lattice(f.group, f.p, ConditionKind::artin_borel_smith_plus);
  QuotientMap qm = quotient_map(static_cast<int>(f.values.size()), cba);
  return psi_coset(qm, f);
}

RelationReport relation_suite(const GroupPtr& g, i64 p, int trials) {
  if (trials < 1) throw DomainError("relation_suite: trials must be >= 1");
  RelationReport rep;
  rep.trials = trials;
  std::mt19937_64 rng(20140621);
  const int n = g->n_classes();
  auto random_gset = [&]() {
    GSet x = gset_zero(g);
    for (int c = 0; c < n; ++c) x.mult[c] = static_cast<i64>(rng() % 6);
    if (x.mult.isZero(0)) x.mult[0] = 1;
    return x;
  };
  std::ostringstream detail;
  bool ok = true;

  for (int t = 0; t < trials && ok; ++t) {
    GSet x = random_gset(), y = random_gset();
    // omega product/union relation
    SuperclassFunction lhs = omega_of_gset(disjoint_union(x, y), p) + omega_of_gset(product(x, y), p);
    SuperclassFunction rhs = omega_of_gset(x, p) + omega_of_gset(y, p);
    if (!int_equal(lhs.values, rhs.values)) {
      ok = false;
      detail << "product relation failed: X=" << x.mult.transpose()
             << " Y=" << y.mult.transpose();
      break;
    }
    ++rep.product_checks;
    // marks roundtrip
    GSet back = marks_to_gset(g, marks_vector(x));
    if (!int_equal(back.mult, x.mult)) {
      ok = false;
      detail << "marks roundtrip failed: X=" << x.mult.transpose();
      break;
    }
    ++rep.roundtrip_checks;
    // spanning: omega_X lies in the span of transitive omegas (exact solve)
    IVec coeffs = to_omega_coeffs(omega_of_gset(x, p));
    SuperclassFunction rec = from_omega_coeffs(g, p, coeffs);
    if (!int_equal(rec.values, omega_of_gset(x, p).values)) {
      ok = false;
      detail << "omega spanning failed";
      break;
    }
    ++rep.spanning_checks;
  }

  // Sylow replacement: omega_{G/H} = omega_{G/T} for T a Sylow p-subgroup of H
  if (ok) {
    for (int c = 0; c < n; ++c) {
      const Subgroup& h = g->subgroup_classes()[c].rep;
      GroupPtr hg = Group::from_subgroup(h);
      Subgroup t_in_h = hg->sylow(p);
      std::vector<int> t_in_g;
      for (int e : t_in_h.elems) t_in_g.push_back(g->index_of(hg->elements()[e]));
      std::sort(t_in_g.begin(), t_in_g.end());
      int tc = g->class_of(t_in_g);
      SuperclassFunction a = omega_of_gset(gset_orbit(g, c), p);
      SuperclassFunction b = omega_of_gset(gset_orbit(g, tc), p);
      if (!int_equal(a.values, b.values)) {
        ok = false;
        detail << "Sylow replacement failed at class " << g->class_name(c);
        break;
      }
      ++rep.replacement_checks;
    }
  }

  rep.ok = ok;
  rep.detail = detail.str();
  if (!ok) throw DomainError("relation suite failed: " + rep.detail);
  return rep;
}

}  // namespace dade
