#include "dade/intlat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dade {

namespace {

// floor division
i64 fdiv(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HnfResult hnf(IMat a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  IMat u = IMat::Identity(rows, rows);
  auto rowop = [&](IMat& m, int dst, int src, i64 q) {
    for (int c = 0; c < m.cols(); ++c)
      m(dst, c) = checked_add(m(dst, c), checked_mul(q, m(src, c)));
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // gcd elimination in column c below row r
    while (true) {
      int piv = -1;
      i64 best = 0;
      for (int i = r; i < rows; ++i) {
        i64 v = a(i, c) < 0 ? -a(i, c) : a(i, c);
        if (v != 0 && (piv < 0 || v < best)) {
          piv = i;
          best = v;
        }
      }
      if (piv < 0) break;
      if (piv != r) {
        a.row(piv).swap(a.row(r));
        u.row(piv).swap(u.row(r));
      }
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        i64 q = fdiv(a(i, c), a(r, c));
        rowop(a, i, r, -q);
        rowop(u, i, r, -q);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.row(r) *= -1;
      u.row(r) *= -1;
    }
    for (int i = 0; i < r; ++i) {
      i64 q = fdiv(a(i, c), a(r, c));
      rowop(a, i, r, -q);
      rowop(u, i, r, -q);
    }
    ++r;
  }
  return HnfResult{std::move(a), std::move(u), r};
}

IMat left_kernel(const IMat& a) {
  HnfResult h = hnf(a);
  const int rows = static_cast<int>(a.rows());
  IMat k(rows - h.rank, a.rows());
  for (int i = h.rank; i < rows; ++i) k.row(i - h.rank) = h.u.row(i);
  return k;
}

SnfResult snf(IMat a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  IMat u = IMat::Identity(rows, rows);
  IMat v = IMat::Identity(cols, cols);
  auto rowop = [&](int dst, int src, i64 q) {
    for (int c = 0; c < cols; ++c) a(dst, c) = checked_add(a(dst, c), checked_mul(q, a(src, c)));
    for (int c = 0; c < rows; ++c) u(dst, c) = checked_add(u(dst, c), checked_mul(q, u(src, c)));
  };
  auto colop = [&](int dst, int src, i64 q) {
    for (int r = 0; r < rows; ++r) a(r, dst) = checked_add(a(r, dst), checked_mul(q, a(r, src)));
    for (int r = 0; r < cols; ++r) v(r, dst) = checked_add(v(r, dst), checked_mul(q, v(r, src)));
  };

  int t = 0;
  const int lim = std::min(rows, cols);
  while (t < lim) {
    // locate minimal nonzero entry in the trailing block
    int pi = -1, pj = -1;
    i64 best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        i64 val = a(i, j) < 0 ? -a(i, j) : a(i, j);
        if (val != 0 && (pi < 0 || val < best)) {
          pi = i;
          pj = j;
          best = val;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      a.row(pi).swap(a.row(t));
      u.row(pi).swap(u.row(t));
    }
    if (pj != t) {
      a.col(pj).swap(a.col(t));
      v.col(pj).swap(v.col(t));
    }
    bool again = false;
    for (int i = t + 1; i < rows; ++i) {
      if (a(i, t) == 0) continue;
      i64 q = fdiv(a(i, t), a(t, t));
      rowop(i, t, -q);
      if (a(i, t) != 0) again = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a(t, j) == 0) continue;
      i64 q = fdiv(a(t, j), a(t, t));
      colop(j, t, -q);
      if (a(t, j) != 0) again = true;
    }
    if (again) continue;
    // divisibility: pivot must divide every trailing entry
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (a(i, j) % a(t, t) != 0) {
          rowop(t, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    if (a(t, t) < 0) {
      a.row(t) *= -1;
      u.row(t) *= -1;
    }
    ++t;
  }
  SnfResult r;
  r.rank = t;
  r.d = std::move(a);
  r.u = std::move(u);
  r.v = std::move(v);
  return r;
}

std::vector<i64> SnfResult::diagonal() const {
  std::vector<i64> out;
  for (int i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

IntegerLattice lattice_from_rows(int ambient, const IMat& rows) {
  HnfResult h = hnf(rows);
  IntegerLattice l;
  l.ambient = ambient;
  l.basis = h.h.topRows(h.rank);
  return l;
}

IntegerLattice full_lattice(int ambient) {
  IntegerLattice l;
  l.ambient = ambient;
  l.basis = IMat::Identity(ambient, ambient);
  return l;
}

bool IntegerLattice::contains(const IVec& v) const {
  // reduce v against the HNF rows
  IVec w = v;
  for (int r = 0; r < basis.rows(); ++r) {
    int pc = 0;
    while (pc < ambient && basis(r, pc) == 0) ++pc;
    if (pc == ambient) continue;
    if (w[pc] % basis(r, pc) != 0) return false;
    i64 q = w[pc] / basis(r, pc);
    for (int c = 0; c < ambient; ++c) w[c] = checked_add(w[c], checked_mul(-q, basis(r, c)));
  }
  return w.isZero(0);
}

bool IntegerLattice::contains_lattice(const IntegerLattice& other) const {
  for (int r = 0; r < other.basis.rows(); ++r) {
    IVec row = other.basis.row(r).transpose();
    if (!contains(row)) return false;
  }
  return true;
}

i64 IntegerLattice::index() const {
  if (rank() < ambient) return 0;
  i64 det = 1;
  for (int i = 0; i < ambient; ++i) {
    int pc = 0;
    while (pc < ambient && basis(i, pc) == 0) ++pc;
    det = checked_mul(det, basis(i, pc));
  }
  return det < 0 ? -det : det;
}

IntegerLattice lattice_from_congruences(int ambient, const std::vector<Congruence>& cs) {
  const int k = static_cast<int>(cs.size());
  if (k == 0) return full_lattice(ambient);
  // { v : exists t with A v = D t }  =  first-n projection of ker [A | -D]
  IMat m(k, ambient + k);
  m.setZero();
  for (int i = 0; i < k; ++i) {
    if (cs[i].functional.size() != ambient)
      throw DomainError("congruence functional has wrong length");
    if (cs[i].modulus < 0) throw DomainError("congruence modulus must be >= 0");
    m.block(i, 0, 1, ambient) = cs[i].functional.transpose();
    m(i, ambient + i) = -cs[i].modulus;
  }
  IMat kern = left_kernel(IMat(m.transpose()));  // rows x (ambient + k)
  IMat proj = kern.leftCols(ambient);
  IntegerLattice l = lattice_from_rows(ambient, proj);
  // re-verify membership of each basis row against the raw congruences
  for (int r = 0; r < l.basis.rows(); ++r)
    for (const auto& c : cs) {
      i64 s = 0;
      for (int j = 0; j < ambient; ++j) s = checked_add(s, checked_mul(c.functional[j], l.basis(r, j)));
      bool ok = c.modulus == 0 ? s == 0 : s % c.modulus == 0;
      if (!ok) throw DomainError("congruence lattice failed self-check (internal)");
    }
  return l;
}

int FinAbStructure::free_rank() const {
  return static_cast<int>(std::count(factors.begin(), factors.end(), 0));
}

i64 FinAbStructure::torsion_order() const {
  i64 o = 1;
  for (i64 f : factors)
    if (f != 0) o = checked_mul(o, f);
  return o;
}

std::string FinAbStructure::to_string() const {
  if (factors.empty()) return "0";
  std::ostringstream out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " + ";
    if (factors[i] == 0)
      out << "Z";
    else
      out << "Z/" << factors[i];
  }
  return out.str();
}

FinAbStructure quotient_structure(int ambient, const IntegerLattice& l) {
  FinAbStructure s;
  if (l.rank() == 0) {
    s.factors.assign(ambient, 0);
    return s;
  }
  SnfResult r = snf(l.basis);
  for (i64 d : r.diagonal())
    if (d > 1) s.factors.push_back(d);
  for (int i = 0; i < ambient - r.rank; ++i) s.factors.push_back(0);
  return s;
}

bool has_surjection(const FinAbStructure& from, const FinAbStructure& onto) {
  int af = from.free_rank(), bf = onto.free_rank();
  if (bf > af) return false;
  int spare = af - bf;
  // collect torsion factors
  std::vector<i64> at, bt;
  for (i64 f : from.factors)
    if (f > 1) at.push_back(f);
  for (i64 f : onto.factors)
    if (f > 1) bt.push_back(f);
  // for every prime power q^k, #targets needing q^k must not exceed
  // #sources providing it plus free summands to spare
  std::map<i64, int> primes;
  for (i64 f : bt)
    for (i64 q = 2; q <= f; ++q)
      if (is_prime(q) && f % q == 0) primes[q] = 1;
  for (const auto& [q, unused] : primes) {
    for (int k = 1;; ++k) {
      i64 qk = 1;
      bool over = false;
      for (int i = 0; i < k; ++i) {
        if (qk > (1LL << 40)) {
          over = true;
          break;
        }
        qk *= q;
      }
      if (over) break;
      int need = 0, have = 0;
      for (i64 f : bt)
        if (f % qk == 0) ++need;
      for (i64 f : at)
        if (f % qk == 0) ++have;
      if (need == 0) break;
      if (need > have + spare) return false;
    }
  }
  return true;
}

IVec QuotientMap::coset(const IVec& x) const {
  IVec w = v.transpose() * x;
  for (int i = 0; i < w.size(); ++i) {
    if (moduli[i] > 0) {
      w[i] %= moduli[i];
      if (w[i] < 0) w[i] += moduli[i];
    }
  }
  return w;
}

QuotientMap quotient_map(int ambient, const IntegerLattice& l) {
  QuotientMap q;
  q.moduli = IVec::Zero(ambient);
  if (l.rank() == 0) {
    q.v = IMat::Identity(ambient, ambient);
    return q;
  }
  SnfResult r = snf(l.basis);
  q.v = r.v;
  for (int i = 0; i < r.rank; ++i) q.moduli[i] = r.d(i, i);
  return q;
}

bool integer_solve(const IMat& a, const IVec& b, IVec& x, IVec* residual) {
  // rows of a^T span the column lattice of a
  IMat bt = a.transpose();
  HnfResult h = hnf(bt);
  IVec w = b;
  IVec coeff = IVec::Zero(bt.rows());
  for (int r = 0; r < h.rank; ++r) {
    int pc = 0;
    while (pc < h.h.cols() && h.h(r, pc) == 0) ++pc;
    if (pc == h.h.cols()) continue;
    if (w[pc] % h.h(r, pc) != 0) break;
    i64 qv = w[pc] / h.h(r, pc);
    coeff[r] = qv;
    for (int c = 0; c < w.size(); ++c) w[c] = checked_add(w[c], checked_mul(-qv, h.h(r, c)));
  }
  if (!w.isZero(0)) {
    if (residual) *residual = w;
    return false;
  }
  x = h.u.transpose() * coeff;
  return true;
}

}  // namespace dade
