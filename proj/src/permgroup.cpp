#include "trivsrc/permgroup.hpp"

#include "trivsrc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace trivsrc {

std::shared_ptr<const PermGroup> PermGroup::from_generators(
    int degree, std::vector<Perm> gens, size_t order_bound) {
  if (degree < 1) throw ParseError("degree must be at least 1");
  for (const Perm& p : gens)
    if (p.degree() != degree) throw ParseError("generator degree mismatch");

  auto g = std::make_shared<PermGroup>();
  g->degree_ = degree;
  g->gens_ = gens;
  g->elems_.push_back(Perm(degree));
  g->index_[g->elems_[0]] = 0;
  for (size_t head = 0; head < g->elems_.size(); ++head) {
    // Copy: elems_ may reallocate while we append.
    Perm cur = g->elems_[head];
    for (const Perm& s : gens) {
      Perm next = cur * s;
      if (g->index_.count(next)) continue;
      if (g->elems_.size() >= order_bound)
        throw ScopeError("group order bound exceeded");
      g->index_[next] = static_cast<int>(g->elems_.size());
      g->elems_.push_back(std::move(next));
    }
  }

  const int n = static_cast<int>(g->elems_.size());
  g->inv_.resize(n);
  g->orders_.resize(n);
  for (int i = 0; i < n; ++i) {
    g->inv_[i] = g->index_.at(g->elems_[i].inverse());
    g->orders_[i] = g->elems_[i].order();
  }

  g->class_of_.assign(n, -1);
  std::vector<Perm> gen_inv;
  for (const Perm& s : gens) gen_inv.push_back(s.inverse());
  for (int i = 0; i < n; ++i) {
    if (g->class_of_[i] >= 0) continue;
    int cid = static_cast<int>(g->classes_.size());
    ConjClass cc;
    cc.rep = i;
    cc.order = g->orders_[i];
    std::vector<int> work = {i};
    g->class_of_[i] = cid;
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      cc.members.push_back(x);
      for (size_t k = 0; k < gens.size(); ++k) {
        int y = g->index_.at(gens[k] * g->elems_[x] * gen_inv[k]);
        if (g->class_of_[y] < 0) {
          g->class_of_[y] = cid;
          work.push_back(y);
        }
      }
    }
    std::sort(cc.members.begin(), cc.members.end());
    cc.size = static_cast<long>(cc.members.size());
    g->classes_.push_back(std::move(cc));
  }
  return g;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int a, int b) const {
  return index_.at(elems_[a] * elems_[b]);
}

int PermGroup::conjugate(int g, int by) const {
  return index_.at(elems_[by] * elems_[g] * elems_[by].inverse());
}

int PermGroup::power(int g, long long e) const {
  long o = orders_[g];
  long long k = ((e % o) + o) % o;
  int acc = 0;
  for (long long i = 0; i < k; ++i) acc = mul(acc, g);
  return acc;
}

long PermGroup::exponent() const {
  long e = 1;
  for (long o : orders_) e = std::lcm(e, o);
  return e;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

std::vector<int> PermGroup::canonical_class_order() const {
  std::vector<int> ids(classes_.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const ConjClass &ca = classes_[a], &cb = classes_[b];
    if (ca.order != cb.order) return ca.order < cb.order;
    if (ca.size != cb.size) return ca.size < cb.size;
    return a < b;
  });
  return ids;
}

std::vector<int> subgroup_closure(const PermGroup& g, std::vector<int> seed) {
  std::set<int> elts = {0};
  seed.erase(std::remove_if(seed.begin(), seed.end(),
                            [](int x) { return x == 0; }),
             seed.end());
  std::vector<int> work = {0};
  for (int s : seed)
    if (elts.insert(s).second) work.push_back(s);
  for (size_t head = 0; head < work.size(); ++head) {
    for (int s : seed) {
      int y = g.mul(work[head], s);
      if (elts.insert(y).second) work.push_back(y);
    }
  }
  return std::vector<int>(elts.begin(), elts.end());
}

bool is_subgroup(const PermGroup& g, const std::vector<int>& elts) {
  std::unordered_set<int> set(elts.begin(), elts.end());
  if (!set.count(0)) return false;
  for (int a : elts)
    for (int b : elts)
      if (!set.count(g.mul(a, b))) return false;
  return true;
}

std::vector<int> conjugated_subgroup(const PermGroup& g,
                                     const std::vector<int>& sub, int by) {
  std::vector<int> out;
  out.reserve(sub.size());
  for (int x : sub) out.push_back(g.conjugate(x, by));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> normalizer(const PermGroup& g, const std::vector<int>& sub) {
  std::unordered_set<int> set(sub.begin(), sub.end());
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int s : sub)
      if (!set.count(g.conjugate(s, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> centralizer(const PermGroup& g, int elt) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, elt) == g.mul(elt, x)) out.push_back(x);
  return out;
}

bool is_conjugate_subgroup(const PermGroup& g, const std::vector<int>& a,
                           const std::vector<int>& b, int* conjugator) {
  if (a.size() != b.size()) return false;
  std::vector<int> bs = b;
  std::sort(bs.begin(), bs.end());
  for (int x = 0; x < g.order(); ++x) {
    if (conjugated_subgroup(g, a, x) == bs) {
      if (conjugator) *conjugator = x;
      return true;
    }
  }
  return false;
}

std::vector<int> derived_subgroup(const PermGroup& g,
                                  const std::vector<int>& sub) {
  std::vector<int> comms;
  for (int a : sub)
    for (int b : sub)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(g, comms);
}

Subgroup make_subgroup(const GroupPtr& ambient,
                       const std::vector<int>& elements) {
  std::vector<Perm> gens;
  gens.reserve(elements.size());
  for (int e : elements) gens.push_back(ambient->element(e));
  Subgroup out;
  out.ambient = ambient;
  try {
    out.group = PermGroup::from_generators(ambient->degree(), gens,
                                           elements.size());
  } catch (const ScopeError&) {
    throw StructureError("element set is not closed under multiplication");
  }
  if (out.group->order() != static_cast<long>(elements.size()))
    throw StructureError("element set is not closed under multiplication");
  out.to_ambient.resize(out.group->order());
  for (int i = 0; i < out.group->order(); ++i) {
    int a = ambient->index_of(out.group->element(i));
    if (a < 0) throw StructureError("subgroup element escapes the group");
    out.to_ambient[i] = a;
  }
  return out;
}

int Quotient::project(int ambient_elt) const {
  if (self) return ambient_elt;
  return project_map.at(ambient_elt);
}

Quotient quotient_group(const GroupPtr& g, const std::vector<int>& n_elts,
                        const std::vector<int>& q_elts) {
  std::unordered_set<int> nset(n_elts.begin(), n_elts.end());
  std::unordered_set<int> qset(q_elts.begin(), q_elts.end());
  for (int q : q_elts)
    if (!nset.count(q)) throw StructureError("kernel not inside the subgroup");
  if (!is_subgroup(*g, n_elts) || !is_subgroup(*g, q_elts))
    throw StructureError("quotient needs subgroups");
  for (int x : n_elts)
    for (int q : q_elts)
      if (!qset.count(g->conjugate(q, x)))
        throw StructureError("kernel is not normal in the subgroup");

  Quotient out;
  if (q_elts.size() == 1 && n_elts.size() == static_cast<size_t>(g->order())) {
    out.group = g;
    out.self = true;
    out.coset_rep.resize(g->order());
    std::iota(out.coset_rep.begin(), out.coset_rep.end(), 0);
    return out;
  }

  // Left cosets xQ in first-appearance order over ascending x.
  std::vector<int> sorted_n = n_elts;
  std::sort(sorted_n.begin(), sorted_n.end());
  std::unordered_map<int, int> coset_of;
  std::vector<int> coset_reps;
  for (int x : sorted_n) {
    if (coset_of.count(x)) continue;
    int c = static_cast<int>(coset_reps.size());
    coset_reps.push_back(x);
    for (int q : q_elts) coset_of[g->mul(x, q)] = c;
  }
  const int m = static_cast<int>(coset_reps.size());

  auto action = [&](int elt) {
    std::vector<int> images(m);
    for (int c = 0; c < m; ++c)
      images[c] = coset_of.at(g->mul(elt, coset_reps[c])) + 1;
    return Perm::from_images_1based(images);
  };
  std::vector<Perm> qgens;
  for (int r : coset_reps) qgens.push_back(action(r));
  out.group = PermGroup::from_generators(m, qgens,
                                         static_cast<size_t>(m) + 1);
  out.coset_rep.resize(m);
  for (int c = 0; c < m; ++c) {
    int qidx = out.group->index_of(action(coset_reps[c]));
    if (qidx < 0) throw StructureError("coset action closure failed");
    out.coset_rep[qidx] = coset_reps[c];
  }
  for (int x : sorted_n)
    out.project_map[x] = out.group->index_of(action(x));
  return out;
}

std::pair<int, int> p_part_decomposition(const PermGroup& g, int elt) {
  long n = g.element_order(elt);
  long a = 1;
  while (n % (2 * a) == 0) a *= 2;
  long m = n / a;
  // e = 1 mod a, 0 mod m gives the 2-part; the complement gives the 2'-part.
  long e = 0, f = 0;
  for (long k = 0; k < n; ++k) {
    if (k % a == 1 % a && k % m == 0) e = k;
    if (k % a == 0 && k % m == 1 % m) f = k;
  }
  return {g.power(elt, e), g.power(elt, f)};
}

std::vector<int> sylow_2_subgroup(const PermGroup& g) {
  long two_part = 1;
  while (g.order() % (two_part * 2) == 0) two_part *= 2;
  if (two_part == 1) return {0};
  if (two_part > 4)
    throw ScopeError("Sylow 2-subgroup larger than a Klein four-group");
  int x = -1;
  for (int i = 0; i < g.order(); ++i)
    if (g.element_order(i) == 2) {
      x = i;
      break;
    }
  if (x < 0) throw StructureError("even order group without involutions");
  if (two_part == 2) {
    std::vector<int> s = {0, x};
    std::sort(s.begin(), s.end());
    return s;
  }
  for (int y = x + 1; y < g.order(); ++y) {
    if (g.element_order(y) != 2) continue;
    if (g.mul(x, y) != g.mul(y, x)) continue;
    std::vector<int> s = {0, x, y, g.mul(x, y)};
    std::sort(s.begin(), s.end());
    return s;
  }
  throw ScopeError("Sylow 2-subgroup is cyclic of order 4, unsupported");
}

namespace {

std::vector<int> lifted_odd_reps(const PermGroup& g, const Quotient& quot) {
  const PermGroup& q = *quot.group;
  std::vector<int> reps;
  for (int cid : q.canonical_class_order()) {
    if (q.cls(cid).order % 2 == 0) continue;
    int ambient = quot.coset_rep[q.cls(cid).rep];
    reps.push_back(p_part_decomposition(g, ambient).second);
  }
  return reps;
}

} // namespace

std::vector<SubgroupClassInfo> two_subgroup_classes(const GroupPtr& g) {
  std::vector<int> syl = sylow_2_subgroup(*g);
  std::vector<int> everything(g->order());
  std::iota(everything.begin(), everything.end(), 0);

  std::vector<SubgroupClassInfo> out;
  {
    SubgroupClassInfo q1;
    q1.subgroup = {0};
    q1.subgroup_order = 1;
    q1.generator = 0;
    q1.normalizer = everything;
    q1.quotient = quotient_group(g, everything, {0});
    q1.p_prime_reps = lifted_odd_reps(*g, q1.quotient);
    out.push_back(std::move(q1));
  }
  if (syl.size() >= 2) {
    for (int cid : g->canonical_class_order()) {
      if (g->cls(cid).order != 2) continue;
      SubgroupClassInfo info;
      int x = g->cls(cid).rep;
      info.subgroup = {0, x};
      std::sort(info.subgroup.begin(), info.subgroup.end());
      info.subgroup_order = 2;
      info.generator = x;
      info.normalizer = normalizer(*g, info.subgroup);
      info.quotient = quotient_group(g, info.normalizer, info.subgroup);
      info.p_prime_reps = lifted_odd_reps(*g, info.quotient);
      out.push_back(std::move(info));
    }
  }
  if (syl.size() == 4) {
    SubgroupClassInfo info;
    info.subgroup = syl;
    info.subgroup_order = 4;
    info.generator = -1;
    info.normalizer = normalizer(*g, info.subgroup);
    info.quotient = quotient_group(g, info.normalizer, info.subgroup);
    info.p_prime_reps = lifted_odd_reps(*g, info.quotient);
    out.push_back(std::move(info));
  }
  return out;
}

GroupPtr klein_group() {
  return PermGroup::from_generators(
      4, {perm_from_cycles(4, {{1, 2}, {3, 4}}),
          perm_from_cycles(4, {{1, 3}, {2, 4}})});
}

GroupPtr alt4_group() {
  return PermGroup::from_generators(
      4, {perm_from_cycles(4, {{1, 2}, {3, 4}}),
          perm_from_cycles(4, {{1, 2, 3}})});
}

GroupPtr alt5_group() {
  return PermGroup::from_generators(
      5, {perm_from_cycles(5, {{1, 2}, {3, 4}}),
          perm_from_cycles(5, {{1, 3, 5}})});
}

GroupPtr dihedral_group(long v) {
  if (v < 3 || v % 2 == 0)
    throw ScopeError("dihedral family needs odd v >= 3");
  const int deg = static_cast<int>(2 * v);
  std::vector<int> rot(deg), refl(deg);
  for (int i = 1; i <= deg; ++i) {
    rot[i - 1] = i % deg + 1;
    refl[i - 1] = (deg + 1 - i) % deg + 1;
  }
  return PermGroup::from_generators(
      deg, {Perm::from_images_1based(rot), Perm::from_images_1based(refl)});
}

GroupPtr ex972_group() {
  std::vector<Perm> gens;
  for (int b = 0; b < 4; ++b)
    gens.push_back(perm_from_cycles(12, {{3 * b + 1, 3 * b + 2, 3 * b + 3}}));
  // A4 on the four blocks of three points.
  gens.push_back(perm_from_cycles(
      12, {{1, 4}, {2, 5}, {3, 6}, {7, 10}, {8, 11}, {9, 12}}));
  gens.push_back(perm_from_cycles(12, {{4, 7, 10}, {5, 8, 11}, {6, 9, 12}}));
  return PermGroup::from_generators(12, gens);
}

GroupPtr builtin_group(const std::string& name) {
  if (name == "v4") return klein_group();
  if (name == "a4") return alt4_group();
  if (name == "a5") return alt5_group();
  if (name == "ex972") return ex972_group();
  if (name.rfind("d4v:", 0) == 0) {
    try {
      return dihedral_group(std::stol(name.substr(4)));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad dihedral parameter in " + name);
    } catch (const std::out_of_range&) {
      throw ParseError("bad dihedral parameter in " + name);
    }
  }
  throw ParseError("unknown builtin group: " + name);
}

} // namespace trivsrc
