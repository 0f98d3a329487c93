#include <doctest.h>

#include "trivsrc/errors.hpp"
#include "trivsrc/tsct.hpp"

#include <map>
#include <string>
#include <vector>

using namespace trivsrc;

namespace {

VirtualCharacter rows_sum(const TablePtr& t, std::vector<int> rows) {
  VirtualCharacter chi;
  chi.table = t;
  for (int r : rows) chi.coeffs[r] += 1;
  return chi;
}

// Index of the unique row combining exactly the given table rows.
int find_row(const TSCTable& ts, const std::map<int, long>& coeffs,
             int local_label = -1) {
  int found = -1;
  for (int r = 0; r < static_cast<int>(ts.rows.size()); ++r) {
    if (ts.rows[r].character.coeffs != coeffs) continue;
    if (ts.rows[r].local_label.value_or(-1) != local_label) continue;
    REQUIRE(found == -1);
    found = r;
  }
  REQUIRE(found >= 0);
  return found;
}

void check_entries(const TSCTable& ts, int row, std::vector<long> want) {
  REQUIRE(ts.entries[row].size() == want.size());
  for (size_t c = 0; c < want.size(); ++c)
    CHECK(ts.entries[row][c] == CycNum(want[c]));
}

void expect_matches(const TSCTable& a, const TSCTable& b) {
  std::string why;
  bool same = tsct_matches(a, b, &why);
  INFO("mismatch reason: ", why);
  CHECK(same);
}

}  // namespace

TEST_CASE("species values evaluate characters at commuting products") {
  TablePtr d12 = dihedral_character_table(3);
  const GroupPtr& g = d12->group;
  int r = d12->classes[1].rep;
  int s = d12->classes[4].rep;
  int rv = g->power(r, 3);

  // chi_1 + chi_2 over <s> at s-part 1: both linears fix s
  CHECK(species_value(rows_sum(d12, {0, 1}), s, 0) == CycNum(2));
  // same pair over the central involution: chi_2(r^3) = -1 cancels
  CHECK(species_value(rows_sum(d12, {0, 1}), rv, 0) == CycNum(0));
  // trivial vertex reduces to plain evaluation
  int r2 = g->power(r, 2);
  CHECK(species_value(rows_sum(d12, {4}), 0, r2) ==
        d12->irr[4][d12->col_of_element(r2)]);

  TablePtr a4 = builtin_char_table("a4");
  std::vector<SubgroupClassInfo> a4v = two_subgroup_classes(a4->group);
  CHECK(species_value(rows_sum(a4, {0, 1, 2, 3}), a4v[1].generator, 0) ==
        CycNum(2));

  // rejected inputs: generator of order > 2, even s, non-commuting pair
  CHECK_THROWS_AS(species_value(rows_sum(d12, {0}), r, 0), StructureError);
  CHECK_THROWS_AS(species_value(rows_sum(d12, {0}), rv, s), StructureError);
  CHECK_THROWS_AS(species_value(rows_sum(d12, {0}), s, r2), StructureError);
}

TEST_CASE("reference tables carry the published values") {
  TSCTable v4 = builtin_tsct("v4");
  REQUIRE(v4.rows.size() == 5u);
  check_entries(v4, find_row(v4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}),
                {4, 0, 0, 0, 0});
  check_entries(v4, find_row(v4, {{0, 1}}, 0), {1, 1, 1, 1, 1});

  TSCTable a4 = builtin_tsct("a4");
  REQUIRE(a4.rows.size() == 7u);
  check_entries(a4, find_row(a4, {{0, 1}, {3, 1}}), {4, 1, 1, 0, 0, 0, 0});
  check_entries(a4, find_row(a4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}),
                {6, 0, 0, 2, 0, 0, 0});

  TSCTable a5 = builtin_tsct("a5");
  REQUIRE(a5.rows.size() == 8u);
  check_entries(a5, find_row(a5, {{3, 1}}), {4, 1, -1, -1, 0, 0, 0, 0});
  check_entries(a5, find_row(a5, {{0, 1}, {1, 1}, {2, 1}, {4, 1}}),
                {12, 0, 2, 2, 0, 0, 0, 0});
  check_entries(a5, find_row(a5, {{0, 1}, {4, 1}}), {6, 0, 1, 1, 2, 0, 0, 0});
  // the two degree-5 rows differ only in their local labels
  int five_a = find_row(a5, {{4, 1}}, 1);
  int five_b = find_row(a5, {{4, 1}}, 2);
  CycNum w = CycNum::root_of_unity(3, 1);
  CHECK(a5.entries[five_a][6] == w * w);
  CHECK(a5.entries[five_a][7] == w);
  CHECK(a5.entries[five_b][6] == w);
  CHECK(a5.entries[five_b][7] == w * w);

  for (const char* name : {"v4", "a4", "a5"})
    CHECK(verify_tsct(builtin_tsct(name)).all_pass());

  CHECK_THROWS_AS(builtin_tsct("d12"), ScopeError);
}

TEST_CASE("assembly reproduces the reference tables") {
  for (const char* name : {"v4", "a4", "a5"}) {
    TSCTable ref = builtin_tsct(name);
    TSCTable built = assemble_tsct(ref.group, ref.table);
    expect_matches(built, ref);
  }
}

TEST_CASE("assembly works from recomputed character tables") {
  const GroupPtr groups[] = {builtin_group("v4"), builtin_group("a4"),
                             builtin_group("a5")};
  const size_t sizes[] = {5, 7, 8};
  for (int i = 0; i < 3; ++i) {
    TablePtr t = dixon_character_table(groups[i]);
    TSCTable ts = assemble_tsct(groups[i], t);
    CHECK(ts.rows.size() == sizes[i]);
    CHECK(ts.columns.size() == sizes[i]);
    CHECK(verify_tsct(ts).all_pass());
  }
}

TEST_CASE("closed form dihedral tables match the assembled ones") {
  for (long v : {3L, 5L, 7L, 9L}) {
    TSCTable cf = tsct_d4v(v);
    CHECK(cf.rows.size() == static_cast<size_t>(v) + 4);
    CHECK(verify_tsct(cf).all_pass());
    TSCTable built = assemble_tsct(cf.group, cf.table);
    expect_matches(built, cf);
  }
  CHECK_THROWS_AS(tsct_d4v(4), ScopeError);
  CHECK_THROWS_AS(tsct_d4v(1), ScopeError);
}

TEST_CASE("dihedral projective rows halve onto the central vertex") {
  for (long v : {3L, 9L}) {
    TSCTable cf = tsct_d4v(v);
    // locate the central involution vertex: normalizer is the whole group
    int center = -1;
    for (int i = 1; i + 1 < static_cast<int>(cf.vertices.size()); ++i)
      if (cf.vertices[i].normalizer_order == 4 * v) center = i;
    REQUIRE(center > 0);
    std::vector<int> top_rows = cf.rows_with_vertex(0);
    std::vector<int> mid_rows = cf.rows_with_vertex(center);
    std::vector<int> top_cols = cf.cols_with_vertex(0);
    std::vector<int> mid_cols = cf.cols_with_vertex(center);
    REQUIRE(top_rows.size() == mid_rows.size());
    REQUIRE(top_cols.size() == mid_cols.size());
    for (size_t k = 0; k < mid_rows.size(); ++k) {
      for (size_t u = 0; u < top_cols.size(); ++u) {
        const CycNum& on_center = cf.entries[mid_rows[k]][mid_cols[u]];
        const CycNum& on_trivial = cf.entries[mid_rows[k]][top_cols[u]];
        // the central vertex block repeats the rotation values
        CHECK(on_center == on_trivial);
        // and the projective above it doubles them
        CHECK(cf.entries[top_rows[k]][top_cols[u]] ==
              CycNum(2) * on_trivial);
      }
    }
  }
}

TEST_CASE("assembly handles degenerate Sylow subgroups") {
  // cyclic of order 6: three blocks of defect 1, no Klein four vertex
  GroupPtr c6 = PermGroup::from_generators(
      6, {perm_from_cycles(6, {{1, 2, 3, 4, 5, 6}})});
  TSCTable ts = assemble_tsct(c6, dixon_character_table(c6));
  CHECK(ts.vertices.size() == 2u);
  CHECK(ts.rows.size() == 6u);
  CHECK(ts.rows_with_vertex(0).size() == 3u);
  CHECK(ts.rows_with_vertex(1).size() == 3u);
  CHECK(verify_tsct(ts).all_pass());

  // symmetric group on three points: Sylow of order 2, one defect-0 block
  GroupPtr s3 = PermGroup::from_generators(
      3, {perm_from_cycles(3, {{1, 2, 3}}), perm_from_cycles(3, {{1, 2}})});
  TSCTable ts3 = assemble_tsct(s3, dixon_character_table(s3));
  REQUIRE(ts3.rows.size() == 3u);
  CHECK(verify_tsct(ts3).all_pass());
  int pim = find_row(ts3, {{0, 1}, {1, 1}});
  check_entries(ts3, pim, {2, 2, 0});
  // the simple over the Sylow vertex is the trivial character, which the
  // canonical row order puts after the sign character
  int triv = find_row(ts3, {{1, 1}});
  CHECK(ts3.rows[triv].vertex_index == 1);
  for (const CycNum& z : ts3.entries[triv]) CHECK(z == CycNum(1));

  // odd order: the table is the ordinary character table
  GroupPtr c9 = PermGroup::from_generators(
      9, {perm_from_cycles(9, {{1, 2, 3, 4, 5, 6, 7, 8, 9}})});
  TablePtr t9 = dixon_character_table(c9);
  TSCTable ts9 = assemble_tsct(c9, t9);
  CHECK(ts9.vertices.size() == 1u);
  REQUIRE(ts9.rows.size() == 9u);
  for (int r = 0; r < 9; ++r) {
    REQUIRE(ts9.rows[r].character.coeffs.size() == 1u);
    int row = ts9.rows[r].character.coeffs.begin()->first;
    for (int c = 0; c < 9; ++c)
      CHECK(ts9.entries[r][c] ==
            t9->irr[row][t9->col_of_element(ts9.columns[c].rep)]);
  }
  CHECK(verify_tsct(ts9).all_pass());
}

TEST_CASE("verification flags any single entry change") {
  const TSCTable tables[] = {builtin_tsct("a5"), tsct_d4v(5)};
  for (const TSCTable& ts : tables) {
    REQUIRE(verify_tsct(ts).all_pass());
    for (size_t r = 0; r < ts.rows.size(); ++r)
      for (size_t c = 0; c < ts.columns.size(); ++c) {
        TSCTable bad = ts;
        bad.entries[r][c] += CycNum(1);
        INFO("perturbed row ", r, ", column ", c);
        CHECK_FALSE(verify_tsct(bad).all_pass());
      }
  }

  // a root of unity swapped for its conjugate keeps the modulus but must
  // still be caught
  TSCTable a5 = builtin_tsct("a5");
  CycNum w = CycNum::root_of_unity(3, 1);
  TSCTable bad = a5;
  int row = find_row(a5, {{4, 1}}, 2);
  REQUIRE(bad.entries[row][6] == w);
  bad.entries[row][6] = w * w;
  CHECK_FALSE(verify_tsct(bad).all_pass());
}

TEST_CASE("matching ignores row and column presentation order") {
  TSCTable cf = tsct_d4v(3);
  TSCTable shuffled = cf;
  // swap the two trivial vertex rows
  std::swap(shuffled.rows[0], shuffled.rows[1]);
  std::swap(shuffled.entries[0], shuffled.entries[1]);
  // swap two rotation columns of the trivial vertex along with the entries
  for (auto& row : shuffled.entries) std::swap(row[0], row[1]);
  std::swap(shuffled.columns[0], shuffled.columns[1]);
  expect_matches(cf, shuffled);
  std::string why;

  TSCTable bad = cf;
  bad.entries[2][0] += CycNum(1);
  CHECK_FALSE(tsct_matches(cf, bad, &why));
  CHECK(why.find("entries differ") == 0);

  TSCTable a4 = builtin_tsct("a4");
  TSCTable a5 = builtin_tsct("a5");
  CHECK_FALSE(tsct_matches(a4, a5, &why));
}

TEST_CASE("assembly of the order-972 group") {
  GroupPtr g = builtin_group("ex972");
  TablePtr t = dixon_character_table(g);
  TSCTable ts = assemble_tsct(g, t);
  REQUIRE(ts.vertices.size() == 3u);
  CHECK(ts.vertices[0].order == 1);
  CHECK(ts.vertices[1].order == 2);
  CHECK(ts.vertices[2].order == 4);
  CHECK(ts.vertices[1].normalizer_order == 36);
  CHECK(ts.vertices[2].normalizer_order == 36);
  CHECK(ts.rows.size() == 48u);
  CHECK(ts.rows_with_vertex(0).size() == 33u);
  CHECK(ts.rows_with_vertex(1).size() == 6u);
  CHECK(ts.rows_with_vertex(2).size() == 9u);
  CHECK(verify_tsct(ts).all_pass());
}
