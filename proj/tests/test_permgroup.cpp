#include <doctest.h>

#include "trivsrc/errors.hpp"
#include "trivsrc/permgroup.hpp"

#include <algorithm>
#include <set>

using namespace trivsrc;

TEST_CASE("built-in group orders and class counts") {
  struct Row {
    const char* name;
    long order;
    int classes;
  };
  const Row rows[] = {
      {"v4", 4, 4},      {"a4", 12, 4},    {"a5", 60, 5},
      {"d4v:3", 12, 6},  {"d4v:5", 20, 8}, {"d4v:9", 36, 12},
      {"ex972", 972, 39},
  };
  for (const Row& r : rows) {
    GroupPtr g = builtin_group(r.name);
    CHECK(g->order() == r.order);
    CHECK(g->num_classes() == r.classes);
    long total = 0;
    for (int k = 0; k < g->num_classes(); ++k) total += g->cls(k).size;
    CHECK(total == g->order());
  }
}

TEST_CASE("group arithmetic round trips") {
  GroupPtr g = alt5_group();
  for (int x = 0; x < g->order(); x += 7) {
    CHECK(g->mul(x, g->inv(x)) == 0);
    CHECK(g->power(x, g->element_order(x)) == 0);
    CHECK(g->power(x, -1) == g->inv(x));
    for (int y = 0; y < g->order(); y += 11) {
      int z = g->conjugate(x, y);
      CHECK(g->element_order(z) == g->element_order(x));
      CHECK(g->class_of(z) == g->class_of(x));
    }
  }
  CHECK(g->exponent() == 30);
  CHECK_FALSE(g->is_abelian());
  CHECK(klein_group()->is_abelian());
}

TEST_CASE("order bound is enforced") {
  GroupPtr a5 = alt5_group();
  CHECK_THROWS_AS(
      PermGroup::from_generators(5, a5->generators(), 10), ScopeError);
}

TEST_CASE("canonical class order sorts by element order then size") {
  GroupPtr g = dihedral_group(5);
  std::vector<int> ord = g->canonical_class_order();
  long prev_order = 0;
  for (size_t i = 0; i < ord.size(); ++i) {
    const ConjClass& c = g->cls(ord[i]);
    CHECK(c.order >= prev_order);
    if (i > 0 && c.order == g->cls(ord[i - 1]).order)
      CHECK(g->cls(ord[i - 1]).size <= c.size);
    prev_order = c.order;
  }
  // rotation r has order 2v, its odd powers too; reps come out deterministic
  CHECK(g->cls(ord[0]).order == 1);
}

TEST_CASE("element orders in the order-972 example") {
  GroupPtr g = ex972_group();
  std::set<long> orders;
  for (int k = 0; k < g->num_classes(); ++k) orders.insert(g->cls(k).order);
  CHECK(orders == std::set<long>{1, 2, 3, 6, 9});
  CHECK(g->exponent() == 18);
}

TEST_CASE("two-part and odd-part decomposition") {
  GroupPtr g = dihedral_group(3); // rotation r of order 6
  int r = g->index_of(g->generators()[0]);
  auto [g2, g2p] = p_part_decomposition(*g, r);
  CHECK(g->element_order(g2) == 2);
  CHECK(g->element_order(g2p) == 3);
  CHECK(g->mul(g2, g2p) == r);
  CHECK(g->mul(g2p, g2) == r);
  CHECK(g2 == g->power(r, 3));
  CHECK(g2p == g->power(r, 4));

  auto [i2, i2p] = p_part_decomposition(*g, 0);
  CHECK(i2 == 0);
  CHECK(i2p == 0);
}

TEST_CASE("sylow subgroup of supported shapes") {
  for (const char* name : {"v4", "a4", "a5", "d4v:3", "d4v:9", "ex972"}) {
    GroupPtr g = builtin_group(name);
    std::vector<int> s = sylow_2_subgroup(*g);
    CHECK(s.size() == 4u);
    CHECK(is_subgroup(*g, s));
    for (int x : s)
      CHECK((x == 0 ? g->element_order(x) == 1 : g->element_order(x) == 2));
  }
  GroupPtr c3 = PermGroup::from_generators(3, {perm_from_cycles(3, {{1, 2, 3}})});
  CHECK(sylow_2_subgroup(*c3) == std::vector<int>{0});
  GroupPtr c6 = PermGroup::from_generators(
      6, {perm_from_cycles(6, {{1, 2, 3, 4, 5, 6}})});
  CHECK(sylow_2_subgroup(*c6).size() == 2u);
}

TEST_CASE("sylow subgroup outside scope is rejected") {
  GroupPtr c4 = PermGroup::from_generators(4, {perm_from_cycles(4, {{1, 2, 3, 4}})});
  CHECK_THROWS_AS(sylow_2_subgroup(*c4), ScopeError);
  GroupPtr s4 = PermGroup::from_generators(
      4, {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3, 4}})});
  CHECK_THROWS_AS(sylow_2_subgroup(*s4), ScopeError); // 2-part 8
}

TEST_CASE("subgroup helpers on a dihedral group") {
  GroupPtr g = dihedral_group(3);
  int r = g->index_of(g->generators()[0]);
  int s = g->index_of(g->generators()[1]);
  CHECK(centralizer(*g, r).size() == 6u); // <r>
  CHECK(derived_subgroup(*g, subgroup_closure(*g, {r, s})).size() == 3u);

  std::vector<int> subs = subgroup_closure(*g, {s});
  std::vector<int> subsr2 = subgroup_closure(*g, {g->mul(s, g->power(r, 2))});
  std::vector<int> subr3 = subgroup_closure(*g, {g->power(r, 3)});
  int t = -1;
  CHECK(is_conjugate_subgroup(*g, subs, subsr2, &t));
  CHECK(conjugated_subgroup(*g, subs, t) == subsr2);
  CHECK_FALSE(is_conjugate_subgroup(*g, subs, subr3));
  CHECK(normalizer(*g, subr3).size() == 12u); // central
  CHECK(normalizer(*g, subs).size() == 4u);
}

TEST_CASE("derived subgroups of the alternating groups") {
  GroupPtr a4 = alt4_group();
  std::vector<int> all4(a4->order());
  for (int i = 0; i < a4->order(); ++i) all4[i] = i;
  CHECK(derived_subgroup(*a4, all4).size() == 4u);
  GroupPtr a5 = alt5_group();
  std::vector<int> all5(a5->order());
  for (int i = 0; i < a5->order(); ++i) all5[i] = i;
  CHECK(derived_subgroup(*a5, all5).size() == 60u);
}

TEST_CASE("quotient by a normal subgroup") {
  GroupPtr a4 = alt4_group();
  std::vector<int> all4(a4->order());
  for (int i = 0; i < a4->order(); ++i) all4[i] = i;
  std::vector<int> v4 = sylow_2_subgroup(*a4);
  Quotient q = quotient_group(a4, all4, v4);
  CHECK_FALSE(q.self);
  CHECK(q.group->order() == 3);
  // projection is a homomorphism
  for (int x = 0; x < a4->order(); ++x)
    for (int y = 0; y < a4->order(); ++y)
      CHECK(q.project(a4->mul(x, y)) ==
            q.group->mul(q.project(x), q.project(y)));
  // coset representatives project back to themselves
  for (int c = 0; c < q.group->order(); ++c)
    CHECK(q.project(q.coset_rep[c]) == c);

  Quotient self = quotient_group(a4, all4, {0});
  CHECK(self.self);
  CHECK(self.group->order() == 12);
  CHECK(self.project(7) == 7);
}

TEST_CASE("quotient rejects a non-normal kernel") {
  GroupPtr a4 = alt4_group();
  std::vector<int> all4(a4->order());
  for (int i = 0; i < a4->order(); ++i) all4[i] = i;
  int invol = -1;
  for (int i = 0; i < a4->order(); ++i)
    if (a4->element_order(i) == 2) {
      invol = i;
      break;
    }
  CHECK_THROWS_AS(quotient_group(a4, all4, {0, invol}), StructureError);
}

TEST_CASE("conjugacy classes of 2-subgroups with local data") {
  // trivial group, one class per involution class, then the Sylow subgroup
  CHECK(two_subgroup_classes(klein_group()).size() == 5u);
  CHECK(two_subgroup_classes(alt4_group()).size() == 3u);
  CHECK(two_subgroup_classes(alt5_group()).size() == 3u);
  CHECK(two_subgroup_classes(dihedral_group(5)).size() == 5u);
  CHECK(two_subgroup_classes(ex972_group()).size() == 3u);
}

TEST_CASE("local data in a dihedral group") {
  const long v = 5;
  GroupPtr g = dihedral_group(v);
  auto infos = two_subgroup_classes(g);
  REQUIRE(infos.size() == 5u);

  CHECK(infos[0].subgroup_order == 1);
  CHECK(infos[0].normalizer.size() == 20u);
  CHECK(infos[0].quotient.self);
  CHECK(infos[0].p_prime_reps.size() == 3u);

  // central involution r^v sits first among the order-2 classes (class size 1)
  CHECK(infos[1].subgroup_order == 2);
  CHECK(infos[1].generator == g->power(g->index_of(g->generators()[0]), v));
  CHECK(infos[1].normalizer.size() == 20u);
  CHECK(infos[1].quotient.group->order() == 2 * v);
  CHECK(infos[1].p_prime_reps.size() == 3u);

  for (int i : {2, 3}) {
    CHECK(infos[i].subgroup_order == 2);
    CHECK(infos[i].normalizer.size() == 4u);
    CHECK(infos[i].quotient.group->order() == 2);
    CHECK(infos[i].p_prime_reps == std::vector<int>{0});
  }

  CHECK(infos[4].subgroup_order == 4);
  CHECK(infos[4].normalizer.size() == 4u);
  CHECK(infos[4].quotient.group->order() == 1);
  CHECK(infos[4].p_prime_reps == std::vector<int>{0});
}

TEST_CASE("local data in the order-972 example") {
  GroupPtr g = ex972_group();
  auto infos = two_subgroup_classes(g);
  REQUIRE(infos.size() == 3u);

  CHECK(infos[0].p_prime_reps.size() == 33u); // odd-order classes of g
  CHECK(infos[1].subgroup_order == 2);
  CHECK(infos[1].normalizer.size() == 36u);
  CHECK(infos[1].quotient.group->order() == 18);
  std::vector<int> nbar(infos[1].quotient.group->order());
  for (size_t i = 0; i < nbar.size(); ++i) nbar[i] = static_cast<int>(i);
  // commutator subgroup of order 3, so the abelianisation has order 6
  CHECK(derived_subgroup(*infos[1].quotient.group, nbar).size() == 3u);

  CHECK(infos[2].subgroup_order == 4);
  CHECK(infos[2].normalizer.size() == 36u);
  CHECK(infos[2].quotient.group->order() == 9);
  CHECK(infos[2].quotient.group->is_abelian());
  CHECK(infos[2].quotient.group->exponent() == 3);
}

TEST_CASE("lifted odd-order representatives are coherent") {
  for (const char* name : {"d4v:9", "ex972", "a5"}) {
    GroupPtr g = builtin_group(name);
    for (const SubgroupClassInfo& info : two_subgroup_classes(g)) {
      std::set<int> seen;
      for (int rep : info.p_prime_reps) {
        CHECK(g->element_order(rep) % 2 == 1);
        // lift lands in the normalizer and hits each quotient class once
        CHECK(std::binary_search(info.normalizer.begin(),
                                 info.normalizer.end(), rep));
        int qcls = info.quotient.group->class_of(info.quotient.project(rep));
        CHECK(info.quotient.group->cls(qcls).order % 2 == 1);
        CHECK(seen.insert(qcls).second);
      }
      // every odd-order quotient class is covered
      size_t odd = 0;
      for (int k = 0; k < info.quotient.group->num_classes(); ++k)
        if (info.quotient.group->cls(k).order % 2 == 1) ++odd;
      CHECK(seen.size() == odd);
    }
  }
}

TEST_CASE("builtin group lookup failures") {
  CHECK_THROWS_AS(builtin_group("s3"), ParseError);
  CHECK_THROWS_AS(builtin_group("d4v:x"), ParseError);
  CHECK_THROWS_AS(builtin_group("d4v:4"), ScopeError);
  CHECK_THROWS_AS(builtin_group("d4v:1"), ScopeError);
  CHECK(builtin_group("d4v:7")->order() == 28);
}
