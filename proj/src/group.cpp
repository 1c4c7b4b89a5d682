#include "dade/group.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace dade {

bool Subgroup::contains(int e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

namespace {

bool is_valid_perm(const Perm& p) {
  std::vector<char> hit(p.degree(), 0);
  for (int x : p.img) {
    if (x < 0 || x >= p.degree() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

}  // namespace

GroupPtr Group::from_generators(std::vector<Perm> gens, int degree, const Bounds& bounds) {
  if (degree < 1) throw DomainError("group degree must be positive");
  if (degree > bounds.max_degree)
    throw DomainError("group degree " + std::to_string(degree) + " exceeds bound " +
                      std::to_string(bounds.max_degree));
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw DomainError("generators act on different point sets");
    if (!is_valid_perm(g)) throw DomainError("generator is not a permutation");
  }

  auto gp = std::shared_ptr<Group>(new Group());
  gp->degree_ = degree;
  gp->generators_ = gens;

  std::vector<Perm> elems{Perm::identity(degree)};
  std::map<Perm, int> idx{{elems[0], 0}};
  std::vector<int> wprev{-1}, wgen{-1};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm t = compose(elems[i], gens[gi]);
      auto [it, inserted] = idx.emplace(t, static_cast<int>(elems.size()));
      if (inserted) {
        elems.push_back(std::move(t));
        wprev.push_back(static_cast<int>(i));
        wgen.push_back(static_cast<int>(gi));
        if (static_cast<i64>(elems.size()) > bounds.max_order)
          throw DomainError("group too large: closure exceeds element bound " +
                            std::to_string(bounds.max_order));
      }
    }
  }

  // Re-index into deterministic (lexicographic) element order.
  const int n = static_cast<int>(elems.size());
  std::vector<int> by_rank(n);
  for (int i = 0; i < n; ++i) by_rank[i] = i;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int b) { return elems[a] < elems[b]; });
  std::vector<int> new_of_old(n);
  for (int r = 0; r < n; ++r) new_of_old[by_rank[r]] = r;
  gp->elements_.resize(n);
  gp->word_prev_.resize(n);
  gp->word_gen_.resize(n);
  for (int r = 0; r < n; ++r) {
    int old = by_rank[r];
    gp->elements_[r] = elems[old];
    gp->word_gen_[r] = wgen[old];
    gp->word_prev_[r] = wprev[old] < 0 ? -1 : new_of_old[wprev[old]];
  }
  gp->identity_ = new_of_old[0];

  gp->gen_idx_.clear();
  for (const auto& g : gens) gp->gen_idx_.push_back(gp->index_of(g));

  gp->inverse_.resize(n);
  for (int e = 0; e < n; ++e) gp->inverse_[e] = gp->index_of(inverse(gp->elements_[e]));
  return gp;
}

int Group::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    throw DomainError("permutation is not an element of the group");
  return static_cast<int>(it - elements_.begin());
}

std::optional<int> Group::find(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

int Group::mul(int a, int b) const { return index_of(compose(elements_[a], elements_[b])); }

int Group::inv(int a) const { return inverse_[a]; }

i64 Group::element_order(int a) const {
  i64 n = 1;
  int x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

// --- presets -----------------------------------------------------------------

GroupPtr Group::cyclic(i64 n) {
  if (n < 1) throw DomainError("cyclic: order must be positive");
  if (n == 1) return from_generators({}, 1);
  std::vector<int> img(n);
  for (i64 i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n);
  return from_generators({Perm(img)}, static_cast<int>(n));
}

GroupPtr Group::dihedral(i64 order) {
  if (order < 2 || order % 2 != 0) throw DomainError("dihedral: order must be even and >= 2");
  i64 n = order / 2;
  if (n == 1) return cyclic(2);
  if (n == 2) return elem_abelian(2, 2);
  std::vector<int> rot(n), refl(n);
  for (i64 i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    refl[i] = static_cast<int>((n - i) % n);
  }
  return from_generators({Perm(rot), Perm(refl)}, static_cast<int>(n));
}

GroupPtr Group::quaternion8() {
  // left regular action on 1, a, a^2, a^3, b, ab, a^2 b, a^3 b
  Perm a(std::vector<int>{1, 2, 3, 0, 5, 6, 7, 4});
  Perm b(std::vector<int>{4, 7, 6, 5, 2, 1, 0, 3});
  return from_generators({a, b}, 8);
}

GroupPtr Group::symmetric(int n) {
  if (n < 1) throw DomainError("symmetric: n must be >= 1");
  if (n == 1) return from_generators({}, 1);
  std::vector<int> swp(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    swp[i] = i;
    cyc[i] = (i + 1) % n;
  }
  std::swap(swp[0], swp[1]);
  if (n == 2) return from_generators({Perm(swp)}, 2);
  return from_generators({Perm(swp), Perm(cyc)}, n);
}

GroupPtr Group::elem_abelian(i64 p, int k) {
  if (!is_prime(p)) throw DomainError("elem_abelian: p must be prime");
  if (k < 1) throw DomainError("elem_abelian: rank must be >= 1");
  int deg = static_cast<int>(p) * k;
  std::vector<Perm> gens;
  for (int b = 0; b < k; ++b) {
    Perm g = Perm::identity(deg);
    for (i64 i = 0; i < p; ++i)
      g.img[b * p + i] = static_cast<int>(b * p + (i + 1) % p);
    gens.push_back(g);
  }
  return from_generators(gens, deg);
}

GroupPtr Group::semidirect(i64 p, i64 q, int r, int l) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw DomainError("semidirect: p and q must be distinct primes");
  if (r < 1 || l < 0 || l > r) throw DomainError("semidirect: need 0 <= l <= r, r >= 1");
  i64 need = ipow(q, r - l);
  if ((p - 1) % need != 0)
    throw DomainError("semidirect: no action of order q^(r-l) on C_p (q^(r-l) must divide p-1)");
  // smallest s in (Z/p)^* of multiplicative order q^(r-l)
  i64 s = 0;
  for (i64 c = 1; c < p; ++c) {
    i64 x = 1 % p, ord = 0;
    do {
      x = (x * c) % p;
      ++ord;
    } while (x != 1 % p);
    if (ord == need) {
      s = c;
      break;
    }
  }
  if (s == 0) throw DomainError("semidirect: no element of the required order (internal)");
  i64 m = ipow(q, r);
  int deg = static_cast<int>(p + m);
  Perm x = Perm::identity(deg), y = Perm::identity(deg);
  for (i64 i = 0; i < p; ++i) x.img[i] = static_cast<int>((i + 1) % p);
  for (i64 i = 0; i < p; ++i) y.img[i] = static_cast<int>((s * i) % p);
  for (i64 i = 0; i < m; ++i) y.img[p + i] = static_cast<int>(p + (i + 1) % m);
  return from_generators({x, y}, deg);
}

GroupPtr Group::from_subgroup(const Subgroup& s) {
  const Group& g = *s.parent;
  std::vector<int> gens = g.small_generating_set(s.elems);
  std::vector<Perm> perms;
  for (int e : gens) perms.push_back(g.elements()[e]);
  Bounds relaxed;
  relaxed.max_degree = g.degree();
  relaxed.max_order = g.order();
  return from_generators(perms, g.degree(), relaxed);
}

// --- element conjugacy ---------------------------------------------------------

void Group::ensure_elem_classes() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (have_elem_classes_) return;
  const int n = static_cast<int>(elements_.size());
  elem_class_of_.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (elem_class_of_[e] >= 0) continue;
    int cid = static_cast<int>(elem_classes_.size());
    std::vector<int> cls;
    std::vector<int> stack{e};
    elem_class_of_[e] = cid;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      cls.push_back(x);
      for (int g = 0; g < n; ++g) {
        int y = mul(g, mul(x, inverse_[g]));
        if (elem_class_of_[y] < 0) {
          elem_class_of_[y] = cid;
          stack.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    elem_class_reps_.push_back(cls.front());
    elem_classes_.push_back(std::move(cls));
  }
  have_elem_classes_ = true;
}

int Group::n_elem_classes() const {
  ensure_elem_classes();
  return static_cast<int>(elem_classes_.size());
}

int Group::elem_class_of(int e) const {
  ensure_elem_classes();
  return elem_class_of_[e];
}

const std::vector<int>& Group::elem_class_reps() const {
  ensure_elem_classes();
  return elem_class_reps_;
}

// --- subgroup machinery --------------------------------------------------------

std::vector<int> Group::closure(const std::vector<int>& seed) const {
  std::vector<char> in(elements_.size(), 0);
  std::vector<int> q{identity_};
  in[identity_] = 1;
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      q.push_back(s);
    }
  for (size_t i = 0; i < q.size(); ++i)
    for (int s : seed) {
      int t = mul(q[i], s);
      if (!in[t]) {
        in[t] = 1;
        q.push_back(t);
      }
    }
  std::sort(q.begin(), q.end());
  return q;
}

std::vector<int> Group::cyclic_subgroup(int e) const { return closure({e}); }

std::vector<int> Group::conjugate_subgroup(const std::vector<int>& sub, int g) const {
  std::vector<int> r;
  r.reserve(sub.size());
  int gi = inverse_[g];
  for (int h : sub) r.push_back(mul(g, mul(h, gi)));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> Group::canonical_subgroup(const std::vector<int>& sub) const {
  std::vector<int> best = sub;
  for (int g = 0; g < static_cast<int>(elements_.size()); ++g) {
    std::vector<int> c = conjugate_subgroup(sub, g);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<int> Group::normalizer(const std::vector<int>& sub) const {
  std::vector<int> r;
  for (int g = 0; g < static_cast<int>(elements_.size()); ++g)
    if (conjugate_subgroup(sub, g) == sub) r.push_back(g);
  return r;
}

std::vector<int> Group::centralizer(const std::vector<int>& sub) const {
  std::vector<int> r;
  for (int g = 0; g < static_cast<int>(elements_.size()); ++g) {
    bool ok = true;
    for (int h : sub)
      if (mul(g, h) != mul(h, g)) {
        ok = false;
        break;
      }
    if (ok) r.push_back(g);
  }
  return r;
}

std::vector<int> Group::small_generating_set(const std::vector<int>& sub) const {
  std::vector<int> gens;
  std::vector<int> cur{identity_};
  for (int e : sub) {
    if (std::binary_search(cur.begin(), cur.end(), e)) continue;
    gens.push_back(e);
    std::vector<int> seed = gens;
    cur = closure(seed);
    if (cur.size() == sub.size()) break;
  }
  return gens;
}

bool Group::is_subgroup_set(const std::vector<int>& sub) const {
  if (!std::binary_search(sub.begin(), sub.end(), identity_)) return false;
  for (int a : sub)
    for (int b : sub)
      if (!std::binary_search(sub.begin(), sub.end(), mul(a, b))) return false;
  return true;
}

bool Group::is_normal_in(const std::vector<int>& sub, const std::vector<int>& over) const {
  for (int g : over)
    if (conjugate_subgroup(sub, g) != sub) return false;
  return true;
}

bool Group::is_subconjugate(const std::vector<int>& a, const std::vector<int>& b) const {
  if (b.size() % a.size() != 0) return false;
  for (int g = 0; g < static_cast<int>(elements_.size()); ++g) {
    std::vector<int> c = conjugate_subgroup(a, g);
    if (std::includes(b.begin(), b.end(), c.begin(), c.end())) return true;
  }
  return false;
}

void Group::ensure_subgroups() const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (have_subgroups_) return;
  }
  std::set<std::vector<int>> found;
  found.insert({identity_});
  for (int e = 0; e < static_cast<int>(elements_.size()); ++e)
    found.insert(cyclic_subgroup(e));

  // Close under pairwise joins; every subgroup is an iterated join of cyclics.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        const auto &A = snapshot[i], &B = snapshot[j];
        if (std::includes(A.begin(), A.end(), B.begin(), B.end()) ||
            std::includes(B.begin(), B.end(), A.begin(), A.end()))
          continue;
        std::vector<int> seed;
        std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(seed));
        std::vector<int> c = closure(seed);
        if (found.insert(std::move(c)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<int>> subs(found.begin(), found.end());
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!have_subgroups_) {
    all_subgroups_ = std::move(subs);
    have_subgroups_ = true;
  }
}

const std::vector<std::vector<int>>& Group::all_subgroups() const {
  ensure_subgroups();
  return all_subgroups_;
}

void Group::ensure_classes() const {
  ensure_subgroups();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (have_classes_) return;
  }
  std::map<std::vector<int>, int> lookup;
  std::vector<std::vector<int>> canon;
  for (const auto& sub : all_subgroups_) {
    std::vector<int> c = canonical_subgroup(sub);
    if (lookup.emplace(c, 0).second) canon.push_back(std::move(c));
  }
  std::sort(canon.begin(), canon.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SubgroupClass> classes;
  GroupPtr self = shared_from_this();
  for (size_t i = 0; i < canon.size(); ++i) {
    SubgroupClass sc;
    sc.rep = Subgroup{self, canon[i]};
    sc.order = static_cast<i64>(canon[i].size());
    sc.name = structure_name(*this, canon[i]);
    classes.push_back(std::move(sc));
    lookup[canon[i]] = static_cast<int>(i);
  }
  // disambiguate repeated structure names in class order
  std::map<std::string, int> seen;
  for (auto& sc : classes) {
    int k = seen[sc.name]++;
    sc.name += std::string(k, '\'');
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!have_classes_) {
    classes_ = std::move(classes);
    class_lookup_ = std::move(lookup);
    have_classes_ = true;
  }
}

const std::vector<SubgroupClass>& Group::subgroup_classes() const {
  ensure_classes();
  return classes_;
}

int Group::class_of(const std::vector<int>& sub) const {
  ensure_classes();
  std::vector<int> c = canonical_subgroup(sub);
  auto it = class_lookup_.find(c);
  if (it == class_lookup_.end())
    throw DomainError("subgroup does not appear in the enumerated classes (internal)");
  return it->second;
}

std::vector<int> Group::p_classes(i64 p) const {
  if (!is_prime(p)) throw DomainError("p must be prime");
  std::vector<int> r;
  const auto& cls = subgroup_classes();
  for (int i = 0; i < static_cast<int>(cls.size()); ++i) {
    i64 o = cls[i].order;
    while (o % p == 0) o /= p;
    if (o == 1) r.push_back(i);
  }
  return r;
}

Subgroup Group::sylow(i64 p) const {
  if (!is_prime(p)) throw DomainError("p must be prime");
  i64 target = p_part(order(), p);
  for (const auto& sc : subgroup_classes())
    if (sc.order == target && p_part(sc.order, p) == sc.order) return sc.rep;
  throw DomainError("no Sylow subgroup found (internal)");
}

Subgroup Group::trivial_subgroup() const {
  return Subgroup{shared_from_this(), {identity_}};
}

Subgroup Group::full_subgroup() const {
  std::vector<int> all(elements_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Subgroup{shared_from_this(), all};
}

Subgroup Group::subgroup(std::vector<int> elems) const {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup_set(elems)) throw DomainError("element set is not a subgroup");
  return Subgroup{shared_from_this(), std::move(elems)};
}

Group::CosetTable Group::left_cosets(const std::vector<int>& sub) const {
  CosetTable t;
  t.coset_of.assign(elements_.size(), -1);
  for (int e = 0; e < static_cast<int>(elements_.size()); ++e) {
    if (t.coset_of[e] >= 0) continue;
    int cid = static_cast<int>(t.reps.size());
    t.reps.push_back(e);
    for (int h : sub) t.coset_of[mul(e, h)] = cid;
  }
  return t;
}

void Group::ensure_marks() const {
  ensure_classes();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (have_marks_) return;
  }
  const int n = static_cast<int>(classes_.size());
  IMat m = IMat::Zero(n, n);
  for (int h = 0; h < n; ++h) {
    CosetTable t = left_cosets(classes_[h].rep.elems);
    for (int k = 0; k < n; ++k) {
      std::vector<int> kg = small_generating_set(classes_[k].rep.elems);
      i64 fixed = 0;
      for (size_t j = 0; j < t.reps.size(); ++j) {
        bool fix = true;
        for (int g : kg)
          if (t.coset_of[mul(g, t.reps[j])] != static_cast<int>(j)) {
            fix = false;
            break;
          }
        if (fix) ++fixed;
      }
      m(h, k) = fixed;
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!have_marks_) {
    marks_ = std::move(m);
    have_marks_ = true;
  }
}

const IMat& Group::marks() const {
  ensure_marks();
  return marks_;
}

// --- structure recognition ------------------------------------------------------

namespace {

/// Abstract group given by a multiplication table, used for quotients and for
/// naming subgroups.
struct SmallTable {
  int n = 1;
  int id = 0;
  std::vector<std::vector<int>> mul;

  i64 elem_order(int a) const {
    i64 o = 1;
    int x = a;
    while (x != id) {
      x = mul[x][a];
      ++o;
    }
    return o;
  }
  bool abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul[a][b] != mul[b][a]) return false;
    return true;
  }
  std::vector<std::pair<i64, int>> order_fingerprint() const {
    std::map<i64, int> c;
    for (int a = 0; a < n; ++a) c[elem_order(a)]++;
    return {c.begin(), c.end()};
  }
};

SmallTable table_from_subgroup(const Group& g, const std::vector<int>& sub) {
  SmallTable t;
  t.n = static_cast<int>(sub.size());
  std::map<int, int> pos;
  for (int i = 0; i < t.n; ++i) pos[sub[i]] = i;
  t.id = pos.at(g.identity());
  t.mul.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) t.mul[i][j] = pos.at(g.mul(sub[i], sub[j]));
  return t;
}

SmallTable table_from_quotient(const Group& g, const std::vector<int>& lower,
                               const std::vector<int>& upper) {
  // left cosets of `lower` inside `upper`
  std::map<int, int> coset_of;
  std::vector<int> reps;
  for (int e : upper) {
    if (coset_of.count(e)) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int h : lower) coset_of[g.mul(e, h)] = cid;
  }
  SmallTable t;
  t.n = static_cast<int>(reps.size());
  t.id = coset_of.at(g.identity());
  t.mul.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) t.mul[i][j] = coset_of.at(g.mul(reps[i], reps[j]));
  return t;
}

std::vector<i64> abelian_invariants(const SmallTable& t) {
  if (t.n == 1) return {};
  // element of maximal order generates a direct summand
  int best = t.id;
  i64 bo = 1;
  for (int a = 0; a < t.n; ++a) {
    i64 o = t.elem_order(a);
    if (o > bo) {
      bo = o;
      best = a;
    }
  }
  if (bo == t.n) return {static_cast<i64>(t.n)};
  // quotient by <best>
  std::vector<int> cyc;
  int x = t.id;
  do {
    cyc.push_back(x);
    x = t.mul[x][best];
  } while (x != t.id);
  std::sort(cyc.begin(), cyc.end());
  std::map<int, int> coset_of;
  std::vector<int> reps;
  for (int e = 0; e < t.n; ++e) {
    if (coset_of.count(e)) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int h : cyc) coset_of[t.mul[e][h]] = cid;
  }
  SmallTable q;
  q.n = static_cast<int>(reps.size());
  q.id = coset_of.at(t.id);
  q.mul.assign(q.n, std::vector<int>(q.n));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) q.mul[i][j] = coset_of.at(t.mul[reps[i]][reps[j]]);
  std::vector<i64> inv = abelian_invariants(q);
  inv.push_back(bo);
  return inv;
}

std::string table_name(const SmallTable& t) {
  if (t.n == 1) return "1";
  i64 maxo = 1;
  int ninv = 0;
  for (int a = 0; a < t.n; ++a) {
    i64 o = t.elem_order(a);
    maxo = std::max(maxo, o);
    if (o == 2) ++ninv;
  }
  if (maxo == t.n) return "C" + std::to_string(t.n);
  if (t.abelian()) {
    std::vector<i64> inv = abelian_invariants(t);
    std::string s;
    for (size_t i = 0; i < inv.size(); ++i) {
      if (i) s += "x";
      s += "C" + std::to_string(inv[i]);
    }
    return s;
  }
  if (t.n == 8 && ninv == 1) return "Q8";
  static const std::vector<std::pair<std::vector<std::pair<i64, int>>, std::string>> known = {
      {{{1, 1}, {2, 3}, {3, 2}}, "S3"},
      {{{1, 1}, {2, 5}, {4, 2}}, "D8"},
      {{{1, 1}, {2, 5}, {5, 4}}, "D10"},
      {{{1, 1}, {2, 3}, {3, 8}}, "A4"},
      {{{1, 1}, {2, 7}, {3, 2}, {6, 2}}, "D12"},
      {{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}, "C3:C4"},
      {{{1, 1}, {2, 7}, {7, 6}}, "D14"},
      {{{1, 1}, {3, 14}, {7, 6}}, "C7:C3"},
      {{{1, 1}, {2, 5}, {4, 10}, {5, 4}}, "C5:C4"},
      {{{1, 1}, {2, 9}, {3, 8}, {4, 6}}, "S4"},
      {{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, "SL(2,3)"},
  };
  auto fp = t.order_fingerprint();
  for (const auto& [k, v] : known)
    if (k == fp) return v;
  // generic dihedral: a cyclic subgroup of index 2 plus an inverting involution
  if (t.n % 2 == 0 && maxo == t.n / 2) {
    for (int a = 0; a < t.n; ++a) {
      if (t.elem_order(a) != t.n / 2) continue;
      std::set<int> cyc;
      int x = t.id;
      do {
        cyc.insert(x);
        x = t.mul[x][a];
      } while (x != t.id);
      for (int b = 0; b < t.n; ++b) {
        if (cyc.count(b) || t.elem_order(b) != 2) continue;
        int bab = t.mul[t.mul[b][a]][b];
        int ainv = t.id;
        // a^(n/2-1)
        for (i64 i = 0; i + 1 < t.n / 2; ++i) ainv = t.mul[ainv][a];
        if (bab == ainv) return "D" + std::to_string(t.n);
      }
    }
  }
  return "G" + std::to_string(t.n);
}

}  // namespace

QuotientType recognize_quotient(const Section& s) {
  const Group& g = *s.lower.parent;
  SmallTable t = table_from_quotient(g, s.lower.elems, s.upper.elems);
  QuotientType q;
  q.order = t.n;
  q.name = table_name(t);
  i64 maxo = 1;
  int ninv = 0;
  for (int a = 0; a < t.n; ++a) {
    i64 o = t.elem_order(a);
    maxo = std::max(maxo, o);
    if (o == 2) ++ninv;
  }
  if (maxo == t.n) {
    q.kind = QuotientType::cyclic;
    q.m = t.n;
  } else if (t.abelian() && maxo > 1) {
    // elementary abelian of rank 2 exactly
    i64 p = maxo;
    if (is_prime(p) && t.n == p * p) {
      q.kind = QuotientType::elem_abelian;
      q.m = p;
    }
  } else if (t.n == 8 && ninv == 1 && !t.abelian()) {
    q.kind = QuotientType::quaternion8;
    q.m = 8;
  }
  return q;
}

std::string structure_name(const Group& g, const std::vector<int>& sub) {
  return table_name(table_from_subgroup(g, sub));
}

}  // namespace dade
