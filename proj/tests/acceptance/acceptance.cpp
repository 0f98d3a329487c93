// Acceptance gate for the whole pipeline. Each criterion prints exactly one
// pass/fail line; the process exits nonzero when any of them fails. The
// later criteria reuse the tables produced by the earlier ones, so the
// order of the list in main() matters.

#include "trivsrc/blocks.hpp"
#include "trivsrc/chartab.hpp"
#include "trivsrc/cyclotomic.hpp"
#include "trivsrc/domestic.hpp"
#include "trivsrc/errors.hpp"
#include "trivsrc/permgroup.hpp"
#include "trivsrc/tsct.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace trivsrc;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point from) {
  return std::chrono::duration<double>(Clock::now() - from).count();
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

long integer_entry(const CycNum& v, const std::string& what) {
  auto iv = v.try_integer();
  require(iv.has_value(), what + ": value is not a rational integer");
  return static_cast<long>(*iv);
}

// Everything generated on the way, fed to the property suite in criterion 6.
std::vector<std::pair<std::string, TablePtr>> generated_tables;
std::vector<std::pair<std::string, TSCTable>> generated_tscts;

void note_table(const std::string& name, const TablePtr& t) {
  generated_tables.emplace_back(name, t);
}

void note_tsct(const std::string& name, const TSCTable& ts) {
  generated_tscts.emplace_back(name, ts);
}

// 1. The generic computation agrees with the hard-coded reference layouts
// and with the dihedral closed form, quickly.
void criterion_char_tables() {
  for (const char* name : {"v4", "a4", "a5"}) {
    Clock::time_point t0 = Clock::now();
    TablePtr ref = builtin_char_table(name);
    TablePtr computed = dixon_character_table(builtin_group(name));
    require(tables_match(*ref, *computed),
            std::string(name) + ": computed table disagrees with the reference");
    double dt = seconds(t0);
    require(dt < 1.0, std::string(name) + ": took " + fmt_secs(dt));
    note_table(std::string("reference table ") + name, ref);
    note_table(std::string("computed table ") + name, computed);
  }
  for (long v : {3L, 5L, 7L, 9L}) {
    Clock::time_point t0 = Clock::now();
    std::string label = "dihedral v=" + std::to_string(v);
    TablePtr closed = dihedral_character_table(v);
    TablePtr computed = dixon_character_table(dihedral_group(v));
    require(tables_match(*closed, *computed),
            label + ": closed form disagrees with the computed table");
    double dt = seconds(t0);
    require(dt < 1.0, label + ": took " + fmt_secs(dt));
    note_table("closed form " + label, closed);
    note_table("computed " + label, computed);
  }
}

// 2. Assembly over the reference character tables reproduces the reference
// trivial source tables entry by entry (up to the documented relabelings).
void criterion_base_tsct() {
  for (const char* name : {"v4", "a4", "a5"}) {
    TSCTable ref = builtin_tsct(name);
    TSCTable built = assemble_tsct(ref.group, ref.table);
    std::string why;
    require(tsct_matches(built, ref, &why), std::string(name) + ": " + why);
    note_tsct(std::string("reference tsct ") + name, ref);
    note_tsct(std::string("assembled tsct ") + name, built);
  }
}

// 3. The dihedral family: block count, the principal projective character,
// the repeated central block and the doubling into the projective rows, and
// agreement between the closed form and the assembled table.
void criterion_dihedral_family() {
  for (long v : {3L, 5L, 7L, 9L}) {
    std::string label = "v=" + std::to_string(v);
    TablePtr t = dihedral_character_table(v);
    std::vector<Block> blocks = block_partition(t);
    require(static_cast<long>(blocks.size()) == (v + 1) / 2,
            label + ": expected " + std::to_string((v + 1) / 2) + " blocks, got " +
                std::to_string(blocks.size()));
    require(blocks[0].irr_indices == std::vector<int>{0, 1, 2, 3},
            label + ": principal block is not the four linear characters");

    TSCTable cf = tsct_d4v(v);
    bool principal_pim = false;
    for (const TSCTRow& row : cf.rows)
      if (row.vertex_index == 0 &&
          row.character.coeffs == std::map<int, long>{{0, 1}, {1, 1}, {2, 1}, {3, 1}})
        principal_pim = true;
    require(principal_pim,
            label + ": no projective row equal to chi_1+chi_2+chi_3+chi_4");

    // central involution vertex: the only proper subgroup normalized by all of G
    int center = -1;
    for (int i = 1; i + 1 < static_cast<int>(cf.vertices.size()); ++i)
      if (cf.vertices[i].normalizer_order == 4 * v) center = i;
    require(center > 0, label + ": central vertex not found");
    std::vector<int> top_rows = cf.rows_with_vertex(0);
    std::vector<int> mid_rows = cf.rows_with_vertex(center);
    std::vector<int> top_cols = cf.cols_with_vertex(0);
    std::vector<int> mid_cols = cf.cols_with_vertex(center);
    require(top_rows.size() == mid_rows.size() && top_cols.size() == mid_cols.size(),
            label + ": central block is not square with the projective block");

    // central-vertex rows repeat their own values from the rotation columns
    for (int r : mid_rows)
      for (size_t u = 0; u < mid_cols.size(); ++u)
        require(cf.entries[r][mid_cols[u]] == cf.entries[r][top_cols[u]],
                label + ": central block differs from its projective-column values");
    // and the projective rows are exactly the doubled central-vertex rows
    auto slice = [&](int r, const std::vector<int>& cols) {
      std::vector<CycNum> out;
      for (int c : cols) out.push_back(cf.entries[r][c]);
      return out;
    };
    std::vector<std::vector<CycNum>> doubled, projective;
    for (int r : mid_rows) {
      std::vector<CycNum> row = slice(r, top_cols);
      for (CycNum& x : row) x = CycNum(2) * x;
      doubled.push_back(row);
    }
    for (int r : top_rows) projective.push_back(slice(r, top_cols));
    std::sort(doubled.begin(), doubled.end());
    std::sort(projective.begin(), projective.end());
    require(doubled == projective,
            label + ": projective rows are not the doubled central rows");

    TSCTable built = assemble_tsct(cf.group, cf.table);
    std::string why;
    require(tsct_matches(built, cf, &why), label + ": " + why);
    note_table("dihedral table " + label, t);
    note_tsct("closed form tsct " + label, cf);
    note_tsct("assembled dihedral tsct " + label, built);
  }
}

// 4. The order-972 example: group invariants, block structure, normalizer
// data, and the two table blocks that can be named independently.
void criterion_ex972() {
  Clock::time_point t0 = Clock::now();
  GroupPtr g = ex972_group();
  require(g->order() == 972, "group order is not 972");
  require(g->num_classes() == 39, "expected 39 conjugacy classes");
  require(g->exponent() == 18, "group exponent is not 18");

  TablePtr t = dixon_character_table(g);
  std::map<long, int> degrees;
  for (int r = 0; r < t->num_classes(); ++r) ++degrees[t->degree(r)];
  std::map<long, int> expected_degrees{{1, 9}, {3, 3}, {4, 18}, {6, 6}, {12, 3}};
  require(degrees == expected_degrees, "character degree multiset is off");

  std::vector<Block> blocks = block_partition(t);
  require(blocks.size() == 27u,
          "expected 27 blocks, got " + std::to_string(blocks.size()));
  std::map<int, int> profile;
  for (const Block& b : blocks) ++profile[b.defect];
  std::map<int, int> expected_profile{{0, 21}, {1, 3}, {2, 3}};
  require(profile == expected_profile, "block defect profile is off");

  int trivial_row = -1;
  for (int r = 0; r < t->num_classes() && trivial_row < 0; ++r) {
    bool all_one = true;
    for (int c = 0; c < t->num_classes(); ++c)
      if (t->irr[r][c] != CycNum(1)) all_one = false;
    if (all_one) trivial_row = r;
  }
  require(trivial_row >= 0, "no trivial character row");
  const Block* principal = nullptr;
  for (const Block& b : blocks)
    if (std::count(b.irr_indices.begin(), b.irr_indices.end(), trivial_row))
      principal = &b;
  require(principal && principal->defect == 2, "principal block has wrong defect");
  std::multiset<long> pdeg;
  for (int r : principal->irr_indices) pdeg.insert(t->degree(r));
  require(pdeg == std::multiset<long>{1, 1, 1, 3},
          "principal block degrees are not {1,1,1,3}");

  std::vector<SubgroupClassInfo> infos = two_subgroup_classes(g);
  require(infos.size() == 3u, "expected three classes of 2-subgroups");
  const SubgroupClassInfo& q2 = infos[1];
  require(q2.subgroup_order == 2, "second vertex is not of order 2");
  require(q2.normalizer.size() == 36u, "|N(Q2)| is not 36");
  GroupPtr n2bar = q2.quotient.group;
  require(n2bar->order() == 18, "N(Q2)/Q2 does not have order 18");
  std::vector<int> all_n2(n2bar->order());
  std::iota(all_n2.begin(), all_n2.end(), 0);
  long derived = static_cast<long>(derived_subgroup(*n2bar, all_n2).size());
  require(n2bar->order() / derived == 6,
          "abelianization of N(Q2)/Q2 does not have order 6");
  const SubgroupClassInfo& q3 = infos[2];
  require(q3.subgroup_order == 4, "third vertex is not of order 4");
  require(q3.normalizer.size() == 36u, "|N(Q3)| is not 36");
  GroupPtr n3bar = q3.quotient.group;
  require(n3bar->order() == 9 && n3bar->is_abelian() && n3bar->exponent() == 3,
          "N(Q3)/Q3 is not abelian of order 9 and exponent 3");

  TSCTable ts = assemble_tsct(g, t);

  // The six rows over the order-2 vertex: the block sum for each block of
  // defect 2, and for each block of defect 1 the character that is positive
  // at the defect involution.
  std::vector<std::map<int, long>> expected_c2;
  for (const Block& b : blocks) {
    if (b.defect == 2) {
      std::map<int, long> sum;
      for (int r : b.irr_indices) sum[r] = 1;
      expected_c2.push_back(sum);
    } else if (b.defect == 1) {
      expected_c2.push_back(defect1_trivial_source_rows(b, t).simple_char.coeffs);
    }
  }
  require(expected_c2.size() == 6u, "expected six rows over the order-2 vertex");
  std::vector<std::map<int, long>> actual_c2;
  for (int r : ts.rows_with_vertex(1)) actual_c2.push_back(ts.rows[r].character.coeffs);
  std::sort(expected_c2.begin(), expected_c2.end());
  std::sort(actual_c2.begin(), actual_c2.end());
  require(actual_c2 == expected_c2,
          "order-2 vertex rows disagree with the block-derived characters");

  // The 9x9 maximal block against its published form, up to relabeling the
  // rows and the non-identity columns.
  std::vector<int> rows3 = ts.rows_with_vertex(2);
  std::vector<int> cols3 = ts.cols_with_vertex(2);
  require(rows3.size() == 9u && cols3.size() == 9u,
          "maximal vertex block is not 9x9");
  CycNum w = CycNum::root_of_unity(3, 1);
  CycNum w2 = w * w;
  auto enc = [&](const CycNum& v) -> int {
    if (v == CycNum(1)) return 0;
    if (v == w) return 1;
    if (v == w2) return 2;
    throw Failure{"maximal block entry outside {1, w, w^2}"};
  };
  std::array<std::array<int, 9>, 9> mine;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) mine[i][j] = enc(ts.entries[rows3[i]][cols3[j]]);
  for (int i = 0; i < 9; ++i)
    require(mine[i][0] == 0, "first maximal column is not the identity column");
  // published block, with 0, 1, 2 encoding 1, w, w^2
  static const int published[9][9] = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 2, 1, 0, 2, 1, 2},
      {0, 2, 0, 1, 2, 0, 1, 2, 1},
      {0, 0, 1, 0, 1, 2, 1, 2, 2},
      {0, 0, 2, 0, 2, 1, 2, 1, 1},
      {0, 1, 1, 2, 2, 2, 0, 0, 1},
      {0, 2, 2, 1, 1, 1, 0, 0, 2},
      {0, 2, 1, 1, 0, 2, 2, 1, 0},
      {0, 1, 2, 2, 0, 1, 1, 2, 0},
  };
  std::vector<std::array<int, 9>> want;
  for (int i = 0; i < 9; ++i) {
    std::array<int, 9> row;
    std::copy(published[i], published[i] + 9, row.begin());
    want.push_back(row);
  }
  std::sort(want.begin(), want.end());
  std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8};
  bool found = false;
  do {
    std::vector<std::array<int, 9>> rows;
    for (int i = 0; i < 9; ++i) {
      std::array<int, 9> row;
      row[0] = mine[i][0];
      for (int j = 0; j < 8; ++j) row[j + 1] = mine[i][perm[j]];
      rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    if (rows == want) found = true;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  require(found, "maximal block differs from the published table under every "
                 "column relabeling");

  double dt = seconds(t0);
  require(dt < 60.0, "took " + fmt_secs(dt));
  note_table("computed table ex972", t);
  note_tsct("assembled tsct ex972", ts);
}

// 5. The sign analysis recovers multiplicities (1,1,1) and the canonical
// sign matrix from the reference inputs, and round-trips on randomized
// synthetic inputs for every fusion case.
constexpr int kSignRows[4][3] = {
    {+1, +1, +1}, {+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}};

void check_reconstruction(const DomesticBlockInput& in, const Brauer7BSolution& s,
                          const std::string& what) {
  require(s.signs[s.alpha_index] == std::array<int, 3>{1, 1, 1},
          what + ": alpha row is not all positive");
  for (size_t c = 0; c < in.involutions.size(); ++c)
    for (int i = 0; i < 4; ++i) {
      long got = 0;
      for (int j = 0; j < 3; ++j)
        if (s.column_class[j] == static_cast<int>(c)) got += s.signs[i][j] * s.n[j];
      require(got == in.involutions[c].values[i], what + ": reconstruction mismatch");
    }
}

void check_reference_solution(const TablePtr& t, const std::vector<int>& cols,
                              const std::string& what) {
  DomesticBlockInput in;
  in.fusion = FusionCase::III;
  for (int k = 0; k < 4; ++k) in.degrees[k] = t->degree(k);
  const char* names[] = {"2a", "2b", "2c"};
  for (size_t c = 0; c < cols.size(); ++c) {
    InvolutionValues iv{names[c], {}};
    for (int k = 0; k < 4; ++k)
      iv.values[k] = integer_entry(t->irr[k][cols[c]], what);
    in.involutions.push_back(iv);
  }
  Brauer7BSolution s = brauer_7B_solve(in);
  require(s.n == std::array<long, 3>{1, 1, 1}, what + ": multiplicities are not (1,1,1)");
  require(s.alpha_index == 0, what + ": alpha is not the trivial character");
  std::vector<std::array<int, 3>> got(s.signs.begin(), s.signs.end());
  std::vector<std::array<int, 3>> expect;
  for (const auto& row : kSignRows) expect.push_back({row[0], row[1], row[2]});
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  require(got == expect, what + ": sign rows are not the canonical four");
  check_reconstruction(in, s, what);
}

void criterion_sign_analysis() {
  check_reference_solution(builtin_char_table("v4"), {1, 2, 3}, "v4");
  for (long v : {3L, 9L}) {
    TablePtr t = dihedral_character_table(v);
    check_reference_solution(
        t, {static_cast<int>(v), static_cast<int>(v + 1), static_cast<int>(v + 2)},
        "dihedral v=" + std::to_string(v));
  }

  std::mt19937 rng(6021023);
  std::uniform_int_distribution<long> pick_n(1, 9);
  for (FusionCase fc : {FusionCase::I, FusionCase::II, FusionCase::III}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::string what = std::string("fusion ") + to_string(fc) + " trial " +
                         std::to_string(trial);
      std::array<long, 3> n = {pick_n(rng), pick_n(rng), pick_n(rng)};
      std::array<int, 4> row_of_char = {0, 1, 2, 3};
      std::shuffle(row_of_char.begin(), row_of_char.end(), rng);

      DomesticBlockInput in;
      in.fusion = fc;
      in.degrees = {1, 1, 1, 1};
      auto value = [&](int chr, std::vector<int> cols) {
        long v = 0;
        for (int j : cols) v += kSignRows[row_of_char[chr]][j] * n[j];
        return v;
      };
      if (fc == FusionCase::I) {
        InvolutionValues iv{"a", {}};
        for (int i = 0; i < 4; ++i) iv.values[i] = value(i, {0, 1, 2});
        in.involutions = {iv};
      } else if (fc == FusionCase::II) {
        InvolutionValues lone{"a", {}}, fused{"b", {}};
        for (int i = 0; i < 4; ++i) {
          lone.values[i] = value(i, {0});
          fused.values[i] = value(i, {1, 2});
        }
        in.involutions = {lone, fused};
        if (trial % 2 == 1) std::swap(in.involutions[0], in.involutions[1]);
      } else {
        for (const char* name : {"a", "b", "c"}) {
          InvolutionValues iv{name, {}};
          int j = static_cast<int>(in.involutions.size());
          for (int i = 0; i < 4; ++i) iv.values[i] = value(i, {j});
          in.involutions.push_back(iv);
        }
      }

      Brauer7BSolution s = brauer_7B_solve(in);
      check_reconstruction(in, s, what);
      int alpha_char = -1;
      for (int i = 0; i < 4; ++i)
        if (row_of_char[i] == 0) alpha_char = i;
      require(s.alpha_index == alpha_char, what + ": alpha row misplaced");
    }
  }
}

// 6. Properties that every generated table has to satisfy, on top of the
// structural verification: exact orthogonality of the character tables,
// non-negative integer species values at 2-element columns, projective rows
// vanishing on even-order classes, and pairwise non-conjugacy of the lifted
// odd-order column representatives inside the vertex normalizer.
void criterion_properties() {
  require(!generated_tables.empty() && !generated_tscts.empty(),
          "earlier criteria produced nothing to test");
  for (const auto& [name, t] : generated_tables) {
    try {
      validate_character_table(*t);
    } catch (const Error& e) {
      throw Failure{name + ": " + e.what()};
    }
  }
  for (const auto& [name, ts] : generated_tscts) {
    TSCTReport rep = verify_tsct(ts);
    if (!rep.all_pass()) {
      std::string bad;
      for (const TSCTCheck& c : rep.checks)
        if (!c.pass) bad += " " + c.name;
      throw Failure{name + ": verification failed:" + bad};
    }
    for (const TSCTRow& row : ts.rows) {
      const TablePtr& t = row.character.table;
      if (!t) continue;
      for (int col = 0; col < t->num_classes(); ++col) {
        long order = t->classes[col].order;
        CycNum v = row.character.value_at(col);
        if ((order & (order - 1)) == 0) {
          long iv = integer_entry(v, name + ": species value at a 2-element class");
          require(iv >= 0, name + ": negative species value at a 2-element class");
        }
        if (row.vertex_index == 0 && order % 2 == 0)
          require(v.is_zero(),
                  name + ": projective row does not vanish at an even-order class");
      }
    }
    if (!ts.group || ts.vertex_classes.empty()) continue;
    for (const SubgroupClassInfo& info : ts.vertex_classes) {
      std::vector<int> class_ids;
      if (static_cast<long>(info.normalizer.size()) == ts.group->order()) {
        for (int rep : info.p_prime_reps) class_ids.push_back(ts.group->class_of(rep));
      } else {
        Subgroup n = make_subgroup(ts.group, info.normalizer);
        for (int rep : info.p_prime_reps) {
          int local = n.group->index_of(ts.group->element(rep));
          require(local >= 0, name + ": column representative escapes its normalizer");
          class_ids.push_back(n.group->class_of(local));
        }
      }
      for (int rep : info.p_prime_reps)
        require(ts.group->element_order(rep) % 2 == 1,
                name + ": even-order column representative");
      std::sort(class_ids.begin(), class_ids.end());
      require(std::adjacent_find(class_ids.begin(), class_ids.end()) == class_ids.end(),
              name + ": two column representatives are conjugate in the normalizer");
    }
  }
}

// 7. Verification catches every single-entry corruption of a correct table.
void criterion_fault_injection() {
  auto sweep = [](const std::string& name, const TSCTable& good,
                  const std::vector<CycNum>& deltas) {
    for (size_t i = 0; i < good.entries.size(); ++i)
      for (size_t j = 0; j < good.entries[i].size(); ++j)
        for (const CycNum& d : deltas) {
          TSCTable bad = good;
          bad.entries[i][j] += d;
          require(!verify_tsct(bad).all_pass(),
                  name + ": perturbation at (" + std::to_string(i) + "," +
                      std::to_string(j) + ") not flagged");
        }
  };
  CycNum w = CycNum::root_of_unity(3, 1);
  TSCTable a4 = builtin_tsct("a4");
  sweep("a4", assemble_tsct(a4.group, a4.table), {CycNum(1), CycNum(-1), w});
  sweep("dihedral v=3", tsct_d4v(3), {CycNum(1), CycNum(-1), w});
  sweep("a5", builtin_tsct("a5"), {CycNum(1)});
}

} // namespace

int main() {
  struct Criterion {
    const char* label;
    void (*fn)();
  };
  const Criterion list[] = {
      {"1. character tables match the published layouts", &criterion_char_tables},
      {"2. assembled trivial source tables match the references", &criterion_base_tsct},
      {"3. dihedral family blocks and table identities", &criterion_dihedral_family},
      {"4. order-972 example", &criterion_ex972},
      {"5. sign analysis recovery and round-trips", &criterion_sign_analysis},
      {"6. property suite over all generated tables", &criterion_properties},
      {"7. single-entry fault injection is always flagged", &criterion_fault_injection},
  };

  Clock::time_point total0 = Clock::now();
  int failures = 0;
  for (const Criterion& c : list) {
    Clock::time_point t0 = Clock::now();
    try {
      c.fn();
      std::printf("pass  %s (%s)\n", c.label, fmt_secs(seconds(t0)).c_str());
    } catch (const Failure& f) {
      std::printf("FAIL  %s: %s\n", c.label, f.what.c_str());
      ++failures;
    } catch (const std::exception& e) {
      std::printf("FAIL  %s: unexpected error: %s\n", c.label, e.what());
      ++failures;
    }
  }
  if (failures == 0)
    std::printf("7 criteria, all passed (total %s)\n",
                fmt_secs(seconds(total0)).c_str());
  else
    std::printf("%d of 7 criteria failed (total %s)\n", failures,
                fmt_secs(seconds(total0)).c_str());
  return failures == 0 ? 0 : 1;
}
