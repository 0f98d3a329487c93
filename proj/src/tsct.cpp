#include "trivsrc/tsct.hpp"

#include "trivsrc/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace trivsrc {

namespace {

// Q_v <=_G Q_i from the vertex class indices alone: the trivial subgroup
// sits inside everything, a C2 class sits inside itself and inside the
// Klein four Sylow subgroup (every involution is conjugate into it), and
// distinct C2 classes are never subconjugate.
bool vertex_subconjugate(const TSCTable& ts, int qv, int qi) {
  if (qv == qi) return true;
  if (ts.vertices[qv].order == 1) return true;
  return ts.vertices[qv].order == 2 && ts.vertices[qi].order == 4;
}

int first_col_of_vertex(const TSCTable& ts, int v) {
  for (int c = 0; c < static_cast<int>(ts.columns.size()); ++c)
    if (ts.columns[c].vertex_index == v) return c;
  return -1;
}

void fill_vertex_summaries(TSCTable& ts) {
  ts.vertices.clear();
  for (const SubgroupClassInfo& info : ts.vertex_classes) {
    TSCTVertex v;
    v.order = info.subgroup_order;
    v.normalizer_order = static_cast<long>(info.normalizer.size());
    v.num_columns = static_cast<int>(info.p_prime_reps.size());
    ts.vertices.push_back(v);
  }
}

VirtualCharacter combine(const TablePtr& t, std::initializer_list<int> rows) {
  VirtualCharacter chi;
  chi.table = t;
  for (int r : rows) chi.coeffs[r] += 1;
  return chi;
}

// One column per 2'-class of N(Q)/Q, ordered by the canonical class order
// of the quotient, for every vertex class in turn.
void push_canonical_columns(TSCTable& ts) {
  for (int v = 0; v < static_cast<int>(ts.vertex_classes.size()); ++v) {
    for (int s : ts.vertex_classes[v].p_prime_reps) {
      TSCTColumn col;
      col.vertex_index = v;
      col.rep = s;
      col.rep_label = ts.group->element(s).cycle_str();
      ts.columns.push_back(std::move(col));
    }
  }
}

void require_verified(const TSCTable& ts, const char* what) {
  TSCTReport report = verify_tsct(ts);
  for (const TSCTCheck& c : report.checks) {
    if (!c.pass)
      throw StructureError(std::string(what) + " fails the " + c.name +
                           " check: " + c.detail);
  }
}

}  // namespace

std::vector<int> TSCTable::rows_with_vertex(int v) const {
  std::vector<int> out;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    if (rows[r].vertex_index == v) out.push_back(r);
  return out;
}

std::vector<int> TSCTable::cols_with_vertex(int v) const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(columns.size()); ++c)
    if (columns[c].vertex_index == v) out.push_back(c);
  return out;
}

CycNum species_value(const VirtualCharacter& chi, int x, int s) {
  if (!chi.table || !chi.table->group)
    throw StructureError("species evaluation needs a table with its group");
  const CharTable& t = *chi.table;
  const PermGroup& g = *t.group;
  if (g.element_order(x) > 2)
    throw StructureError("species subgroup generator must square to the identity");
  if (g.element_order(s) % 2 == 0)
    throw StructureError("species argument must have odd order");
  if (g.conjugate(x, s) != x)
    throw StructureError("species argument must centralize the subgroup");
  return chi.value_at(t.col_of_element(g.mul(x, s)));
}

TSCTable assemble_tsct(const GroupPtr& g, const TablePtr& t) {
  if (!g || !t)
    throw StructureError("assembly needs a group and its character table");
  if (t->group != g)
    throw StructureError("character table is not attached to the given group");

  TSCTable ts;
  ts.group = g;
  ts.table = t;
  ts.vertex_classes = two_subgroup_classes(g);
  fill_vertex_summaries(ts);

  const int nv = static_cast<int>(ts.vertices.size());
  const int sylow_index = nv - 1;
  const long sylow_order = ts.vertices[sylow_index].order;

  std::vector<int> c2_vertices;
  std::map<int, int> class_to_vertex;  // involution class id -> vertex index
  for (int i = 0; i < nv; ++i) {
    if (ts.vertices[i].order != 2) continue;
    c2_vertices.push_back(i);
    class_to_vertex[g->class_of(ts.vertex_classes[i].generator)] = i;
  }

  struct Pending {
    int vertex = 0;
    VirtualCharacter chi;
    std::optional<int> local_label;
  };
  std::vector<Pending> pending;

  for (const Block& b : block_partition(t)) {
    if (b.defect == 0) {
      pending.push_back({0, combine(t, {b.irr_indices[0]}), std::nullopt});
      continue;
    }
    if (b.defect == 1) {
      Defect1Rows d1 = defect1_trivial_source_rows(b, t);
      int cls = g->class_of(t->classes[d1.involution_col].rep);
      auto it = class_to_vertex.find(cls);
      if (it == class_to_vertex.end())
        throw StructureError("defect involution has no vertex class");
      pending.push_back({it->second, d1.simple_char, std::nullopt});
      pending.push_back({0, d1.pim_char, std::nullopt});
      continue;
    }
    if (b.defect != 2 || sylow_order != 4)
      throw StructureError("block defect does not fit the Sylow subgroup");
    if (b.irr_indices.size() != 4)
      throw StructureError("full defect block without four ordinary characters");

    DomesticBlockInput input;
    for (int j = 0; j < 4; ++j)
      input.degrees[j] = t->degree(b.irr_indices[j]);
    for (int vi : c2_vertices) {
      int col = t->col_of_element(ts.vertex_classes[vi].generator);
      InvolutionValues iv;
      iv.class_name = "column " + std::to_string(col);
      for (int j = 0; j < 4; ++j) {
        auto z = t->irr[b.irr_indices[j]][col].try_integer();
        if (!z)
          throw StructureError("non-integral value at an involution class");
        iv.values[j] = *z;
      }
      input.involutions.push_back(std::move(iv));
    }
    switch (c2_vertices.size()) {
      case 1: input.fusion = FusionCase::I; break;
      case 2: input.fusion = FusionCase::II; break;
      case 3: input.fusion = FusionCase::III; break;
      default:
        throw StructureError("unexpected number of involution classes");
    }

    for (const TrivialSourceRow& row : transport_block(input).rows) {
      Pending p;
      p.chi.table = t;
      for (int j = 0; j < 4; ++j)
        if (row.coeffs[j] != 0) p.chi.coeffs[b.irr_indices[j]] = row.coeffs[j];
      switch (row.vertex) {
        case VertexKind::Trivial:
          p.vertex = 0;
          break;
        case VertexKind::Maximal:
          p.vertex = sylow_index;
          break;
        case VertexKind::C2:
          if (row.attached_classes.size() != 1)
            throw StructureError(
                "character attaches to more than one involution class");
          p.vertex = c2_vertices[row.attached_classes[0]];
          break;
      }
      pending.push_back(std::move(p));
    }
  }

  // Group the rows by vertex; the stable sort keeps the block order, and
  // the per-block order from the transports, within each vertex.
  std::stable_sort(
      pending.begin(), pending.end(),
      [](const Pending& a, const Pending& b) { return a.vertex < b.vertex; });
  for (Pending& p : pending)
    ts.rows.push_back({p.vertex, std::move(p.chi), p.local_label});

  push_canonical_columns(ts);

  // Over a Klein four Sylow subgroup, match each maximal vertex row to the
  // irreducible of N(V)/V its Green correspondent inflates from: the first
  // unused local irreducible, in canonical order, whose inflation appears
  // in the restriction of the row character to N(V).
  TablePtr local_table;
  if (sylow_order == 4) {
    const SubgroupClassInfo& syl = ts.vertex_classes[sylow_index];
    local_table = dixon_character_table(syl.quotient.group);
    Subgroup nsub = make_subgroup(g, syl.normalizer);
    const PermGroup& n = *nsub.group;
    auto inflation_multiplicity = [&](const VirtualCharacter& chi, int l) {
      CycNum sum = 0;
      for (int cid = 0; cid < n.num_classes(); ++cid) {
        int amb = nsub.to_ambient[n.cls(cid).rep];
        const CycNum& lam =
            local_table
                ->irr[l][local_table->col_of_element(syl.quotient.project(amb))];
        sum += chi.value_at(t->col_of_element(amb)) * lam.conj() *
               CycNum(n.cls(cid).size);
      }
      auto z = sum.scaled(Rat(1, n.order())).try_integer();
      if (!z || *z < 0)
        throw StructureError(
            "restriction multiplicity is not a non-negative integer");
      return *z;
    };
    std::vector<bool> used(local_table->num_classes(), false);
    for (TSCTRow& row : ts.rows) {
      if (row.vertex_index != sylow_index) continue;
      int pick = -1;
      for (int l = 0; l < local_table->num_classes() && pick < 0; ++l)
        if (!used[l] && inflation_multiplicity(row.character, l) >= 1) pick = l;
      if (pick < 0)
        throw StructureError("no local irreducible left for a maximal vertex row");
      used[pick] = true;
      row.local_label = pick;
    }
  }

  ts.entries.assign(ts.rows.size(), std::vector<CycNum>(ts.columns.size()));
  for (int r = 0; r < static_cast<int>(ts.rows.size()); ++r) {
    const TSCTRow& row = ts.rows[r];
    for (int c = 0; c < static_cast<int>(ts.columns.size()); ++c) {
      const TSCTColumn& col = ts.columns[c];
      if (!vertex_subconjugate(ts, col.vertex_index, row.vertex_index))
        continue;  // zero by the vertex pattern, no evaluation
      if (ts.vertices[col.vertex_index].order <= 2) {
        ts.entries[r][c] = species_value(
            row.character, ts.vertex_classes[col.vertex_index].generator,
            col.rep);
      } else {
        const Quotient& q = ts.vertex_classes[col.vertex_index].quotient;
        ts.entries[r][c] =
            local_table
                ->irr[*row.local_label][local_table->col_of_element(q.project(col.rep))];
      }
    }
  }

  require_verified(ts, "assembled table");
  return ts;
}

TSCTable tsct_d4v(long v) {
  TablePtr t = dihedral_character_table(v);
  GroupPtr g = t->group;

  TSCTable ts;
  ts.group = g;
  ts.table = t;
  ts.vertex_classes = two_subgroup_classes(g);
  fill_vertex_summaries(ts);
  if (ts.vertices.size() != 5)
    throw StructureError("unexpected vertex classification for the dihedral group");

  // The character table fixes which rotation r and reflection s the row
  // formulas refer to; reuse its class representatives.
  const int r_elt = t->classes[1].rep;
  const int s_elt = t->classes[v + 1].rep;
  const int rv = g->power(r_elt, v);

  auto vertex_of = [&](int elt) {
    for (int i = 1; i <= 3; ++i)
      if (g->class_of(ts.vertex_classes[i].generator) == g->class_of(elt))
        return i;
    throw StructureError("involution without a vertex class");
  };
  const int v_center = vertex_of(rv);
  const int v_s = vertex_of(s_elt);
  const int v_sr = vertex_of(g->mul(s_elt, r_elt));
  if (v_center == v_s || v_center == v_sr || v_s == v_sr)
    throw StructureError("involution classes of the dihedral group are fused");

  const int half = static_cast<int>((v - 1) / 2);
  const long n2v = 2 * v;
  auto zeta_pair = [&](long m, long k) {
    long e = ((m * k) % n2v + n2v) % n2v;
    return CycNum::root_of_unity(n2v, e) +
           CycNum::root_of_unity(n2v, (n2v - e) % n2v);
  };

  std::vector<std::vector<int>> cols_by_vertex(5);
  auto add_col = [&](int vi, int elt) {
    TSCTColumn col;
    col.vertex_index = vi;
    col.rep = elt;
    col.rep_label = g->element(elt).cycle_str();
    cols_by_vertex[vi].push_back(static_cast<int>(ts.columns.size()));
    ts.columns.push_back(std::move(col));
  };
  for (int u = 0; u <= half; ++u) add_col(0, g->power(r_elt, 2 * u));
  for (int vi = 1; vi <= 3; ++vi) {
    if (vi == v_center)
      for (int u = 0; u <= half; ++u) add_col(vi, g->power(r_elt, 2 * u));
    else
      add_col(vi, 0);
  }
  add_col(4, 0);

  const int ncols = static_cast<int>(ts.columns.size());
  auto push_row = [&](int vi, VirtualCharacter chi, std::optional<int> label,
                      std::vector<CycNum> entries_row) {
    ts.rows.push_back({vi, std::move(chi), label});
    ts.entries.push_back(std::move(entries_row));
  };

  // Trivial vertex: the projective characters.  The full projective
  // chi_1+chi_2+chi_3+chi_4 covers the linear characters; each remaining
  // projective pairs the nonlinear chi_{4+i} with chi_{4+(v-i)}.
  {
    std::vector<CycNum> row(ncols);
    for (int u = 0; u <= half; ++u) row[cols_by_vertex[0][u]] = CycNum(4);
    push_row(0, combine(t, {0, 1, 2, 3}), std::nullopt, std::move(row));
  }
  for (int i = 1; i <= half; ++i) {
    std::vector<CycNum> row(ncols);
    for (int u = 0; u <= half; ++u)
      row[cols_by_vertex[0][u]] = CycNum(2) * zeta_pair(i, 2 * u);
    push_row(0, combine(t, {3 + i, 3 + static_cast<int>(v) - i}), std::nullopt,
             std::move(row));
  }

  // Central involution vertex: chi_1+chi_3 and, for each projective pair,
  // the member chi_{4+e} with even e; its rotation values repeat those at
  // the trivial vertex since chi_{4+e}(r^{v+2u}) = chi_{4+e}(r^{2u}).
  // Reflection vertices: chi_1+chi_2 lives over <s> and chi_1+chi_4 over
  // <sr^v>, each with value 2 on its own column.
  for (int vi = 1; vi <= 3; ++vi) {
    if (vi == v_center) {
      std::vector<CycNum> row(ncols);
      for (int u = 0; u <= half; ++u) {
        row[cols_by_vertex[0][u]] = CycNum(2);
        row[cols_by_vertex[vi][u]] = CycNum(2);
      }
      push_row(vi, combine(t, {0, 2}), std::nullopt, std::move(row));
      for (int i = 1; i <= half; ++i) {
        int e = (i % 2 == 0) ? i : static_cast<int>(v) - i;
        std::vector<CycNum> erow(ncols);
        for (int u = 0; u <= half; ++u) {
          erow[cols_by_vertex[0][u]] = zeta_pair(e, 2 * u);
          erow[cols_by_vertex[vi][u]] = zeta_pair(e, 2 * u);
        }
        push_row(vi, combine(t, {3 + e}), std::nullopt, std::move(erow));
      }
    } else {
      std::vector<CycNum> row(ncols);
      for (int u = 0; u <= half; ++u) row[cols_by_vertex[0][u]] = CycNum(2);
      row[cols_by_vertex[vi][0]] = CycNum(2);
      push_row(vi, combine(t, {0, vi == v_s ? 1 : 3}), std::nullopt,
               std::move(row));
    }
  }

  // Sylow vertex: the trivial character, with the trivial local label.
  {
    std::vector<CycNum> row(ncols, CycNum(1));
    push_row(4, combine(t, {0}), 0, std::move(row));
  }

  require_verified(ts, "closed form table");
  return ts;
}

namespace {

TSCTable builtin_base(const std::string& name) {
  TablePtr t = builtin_char_table(name);
  TSCTable ts;
  ts.group = t->group;
  ts.table = t;
  ts.vertex_classes = two_subgroup_classes(ts.group);
  fill_vertex_summaries(ts);
  push_canonical_columns(ts);
  return ts;
}

}  // namespace

TSCTable builtin_tsct(const std::string& name) {
  const CycNum w = CycNum::root_of_unity(3, 1);
  const CycNum w2 = CycNum::root_of_unity(3, 2);

  if (name == "v4") {
    TSCTable ts = builtin_base("v4");
    const TablePtr& t = ts.table;
    ts.rows.push_back({0, combine(t, {0, 1, 2, 3}), std::nullopt});
    ts.entries.push_back({4, 0, 0, 0, 0});
    for (int vi = 1; vi <= 3; ++vi) {
      int col = t->col_of_element(ts.vertex_classes[vi].generator);
      int partner = 0;
      for (int row = 1; row < 4; ++row)
        if (t->irr[row][col] == CycNum(1)) partner = row;
      if (partner == 0)
        throw StructureError("no linear character fixes the involution");
      ts.rows.push_back({vi, combine(t, {0, partner}), std::nullopt});
      std::vector<CycNum> row(5);
      row[0] = CycNum(2);
      row[vi] = CycNum(2);
      ts.entries.push_back(std::move(row));
    }
    ts.rows.push_back({4, combine(t, {0}), 0});
    ts.entries.push_back({1, 1, 1, 1, 1});
    require_verified(ts, "reference table");
    return ts;
  }

  if (name == "a4") {
    TSCTable ts = builtin_base("a4");
    const TablePtr& t = ts.table;
    // Columns: 1, c, c^2 | 1 | 1, cV, (cV)^2.  The local labels follow the
    // canonical order of the irreducibles of N(V)/V = C3, in which the
    // character with value omega^2 on cV sorts first among the nontrivial
    // ones; chi_2 restricts to the one with value omega there.
    ts.rows = {
        {0, combine(t, {0, 3}), std::nullopt},
        {0, combine(t, {1, 3}), std::nullopt},
        {0, combine(t, {2, 3}), std::nullopt},
        {1, combine(t, {0, 1, 2, 3}), std::nullopt},
        {2, combine(t, {0}), 0},
        {2, combine(t, {1}), 2},
        {2, combine(t, {2}), 1},
    };
    ts.entries = {
        {4, 1, 1, 0, 0, 0, 0},
        {4, w, w2, 0, 0, 0, 0},
        {4, w2, w, 0, 0, 0, 0},
        {6, 0, 0, 2, 0, 0, 0},
        {1, 1, 1, 1, 1, 1, 1},
        {1, w, w2, 1, 1, w, w2},
        {1, w2, w, 1, 1, w2, w},
    };
    require_verified(ts, "reference table");
    return ts;
  }

  if (name == "a5") {
    TSCTable ts = builtin_base("a5");
    const TablePtr& t = ts.table;
    const CycNum A = -CycNum::root_of_unity(5, 1) - CycNum::root_of_unity(5, 4);
    const CycNum As = -CycNum::root_of_unity(5, 2) - CycNum::root_of_unity(5, 3);
    // Columns: 1, d, ad, (ad)^2 | 1 | 1, yV, (yV)^2 with y of order 3.
    ts.rows = {
        {0, combine(t, {0, 1, 2, 4}), std::nullopt},
        {0, combine(t, {2, 4}), std::nullopt},
        {0, combine(t, {1, 4}), std::nullopt},
        {0, combine(t, {3}), std::nullopt},
        {1, combine(t, {0, 4}), std::nullopt},
        {2, combine(t, {0}), 0},
        {2, combine(t, {4}), 1},
        {2, combine(t, {4}), 2},
    };
    ts.entries = {
        {12, 0, 2, 2, 0, 0, 0, 0},
        {8, -1, As, A, 0, 0, 0, 0},
        {8, -1, A, As, 0, 0, 0, 0},
        {4, 1, -1, -1, 0, 0, 0, 0},
        {6, 0, 1, 1, 2, 0, 0, 0},
        {1, 1, 1, 1, 1, 1, 1, 1},
        {5, -1, 0, 0, 1, 1, w2, w},
        {5, -1, 0, 0, 1, 1, w, w2},
    };
    require_verified(ts, "reference table");
    return ts;
  }

  throw ScopeError("no reference trivial source table for '" + name + "'");
}

bool TSCTReport::all_pass() const {
  for (const TSCTCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

TSCTReport verify_tsct(const TSCTable& ts) {
  TSCTReport rep;
  auto add = [&](const std::string& name, bool pass, std::string detail = "") {
    rep.checks.push_back({name, pass, std::move(detail)});
  };
  auto coord = [](int r, int c) {
    return "row " + std::to_string(r) + ", column " + std::to_string(c);
  };
  const int nr = static_cast<int>(ts.rows.size());
  const int nc = static_cast<int>(ts.columns.size());
  const int nv = static_cast<int>(ts.vertices.size());

  // Square, grouped by vertex, per-vertex row count = column count =
  // number of 2'-classes of N(Q)/Q.
  {
    bool ok = nv > 0 && nr == nc && static_cast<int>(ts.entries.size()) == nr;
    std::string detail = ok ? "" : "matrix is not square";
    for (int r = 0; ok && r < nr; ++r) {
      if (static_cast<int>(ts.entries[r].size()) != nc) {
        ok = false;
        detail = "ragged entry matrix";
      }
    }
    std::vector<int> row_count(nv, 0), col_count(nv, 0);
    int prev = 0;
    for (int r = 0; ok && r < nr; ++r) {
      int v = ts.rows[r].vertex_index;
      if (v < prev || v >= nv) {
        ok = false;
        detail = "rows are not grouped by vertex";
        break;
      }
      prev = v;
      ++row_count[v];
    }
    prev = 0;
    for (int c = 0; ok && c < nc; ++c) {
      int v = ts.columns[c].vertex_index;
      if (v < prev || v >= nv) {
        ok = false;
        detail = "columns are not grouped by vertex";
        break;
      }
      prev = v;
      ++col_count[v];
    }
    for (int v = 0; ok && v < nv; ++v) {
      if (row_count[v] != ts.vertices[v].num_columns ||
          col_count[v] != ts.vertices[v].num_columns) {
        ok = false;
        detail = "vertex " + std::to_string(v) + " has " +
                 std::to_string(row_count[v]) + " rows and " +
                 std::to_string(col_count[v]) + " columns for " +
                 std::to_string(ts.vertices[v].num_columns) + " local classes";
      }
    }
    add("shape", ok, detail);
    if (!ok) return rep;
  }

  {
    bool ok = true;
    std::string detail;
    for (int r = 0; ok && r < nr; ++r)
      for (int c = 0; ok && c < nc; ++c)
        if (!vertex_subconjugate(ts, ts.columns[c].vertex_index,
                                 ts.rows[r].vertex_index) &&
            !ts.entries[r][c].is_zero()) {
          ok = false;
          detail = "nonzero outside the vertex pattern at " + coord(r, c);
        }
    add("zero-pattern", ok, detail);
  }

  {
    if (!ts.table) {
      add("trivial-row", true, "skipped: no character table attached");
    } else {
      bool ok = true;
      std::string detail;
      int triv = -1;
      for (int row = 0; row < ts.table->num_classes() && triv < 0; ++row) {
        bool all_one = true;
        for (const CycNum& z : ts.table->irr[row])
          if (z != CycNum(1)) all_one = false;
        if (all_one) triv = row;
      }
      int found = -1;
      for (int r = 0; r < nr; ++r) {
        const auto& cs = ts.rows[r].character.coeffs;
        if (cs.size() == 1 && cs.count(triv) && cs.at(triv) == 1) found = r;
      }
      if (triv < 0 || found < 0) {
        ok = false;
        detail = "no row equal to the trivial character";
      }
      for (int c = 0; ok && c < nc; ++c)
        if (ts.entries[found][c] != CycNum(1)) {
          ok = false;
          detail = "trivial character row is not all ones at " + coord(found, c);
        }
      add("trivial-row", ok, detail);
    }
  }

  {
    if (!ts.table) {
      add("degree-column", true, "skipped: no character table attached");
    } else {
      bool ok = ts.columns[0].vertex_index == 0;
      std::string detail = ok ? "" : "first column is not at the trivial vertex";
      for (int r = 0; ok && r < nr; ++r) {
        long want = 0;
        for (const auto& [row, coeff] : ts.rows[r].character.coeffs)
          want += coeff * ts.table->degree(row);
        if (ts.entries[r][0] != CycNum(want)) {
          ok = false;
          detail = "row " + std::to_string(r) + " does not start with its degree";
        }
      }
      add("degree-column", ok, detail);
    }
  }

  {
    bool ok = true;
    std::string detail;
    for (int v = 0; ok && v < nv; ++v) {
      int c0 = first_col_of_vertex(ts, v);
      if (c0 < 0) continue;
      for (int r = 0; ok && r < nr; ++r) {
        auto z = ts.entries[r][c0].try_integer();
        if (!z || *z < 0) {
          ok = false;
          detail = "value at " + coord(r, c0) + " is not a non-negative integer";
        }
      }
    }
    add("identity-columns", ok, detail);
  }

  {
    if (!ts.table) {
      add("projective-vanishing", true, "skipped: no character table attached");
    } else {
      bool ok = true;
      std::string detail;
      for (int r = 0; ok && r < nr; ++r) {
        if (ts.vertices[ts.rows[r].vertex_index].order != 1) continue;
        for (int col = 0; ok && col < ts.table->num_classes(); ++col) {
          if (ts.table->classes[col].order % 2 != 0) continue;
          if (!ts.rows[r].character.value_at(col).is_zero()) {
            ok = false;
            detail = "projective row " + std::to_string(r) +
                     " does not vanish at an even-order class";
          }
        }
      }
      add("projective-vanishing", ok, detail);
    }
  }

  {
    if (!ts.table) {
      add("gram-matrix", true, "skipped: no character table attached");
    } else {
      bool ok = true;
      std::string detail;
      std::vector<ClassFunction> fs;
      fs.reserve(nr);
      for (const TSCTRow& row : ts.rows)
        fs.push_back(row.character.as_class_function());
      for (int i = 0; ok && i < nr; ++i)
        for (int j = i; ok && j < nr; ++j) {
          auto z = inner_product(fs[i], fs[j]).try_integer();
          if (!z || *z < 0) {
            ok = false;
            detail = "rows " + std::to_string(i) + " and " + std::to_string(j) +
                     " have a bad inner product";
          }
        }
      add("gram-matrix", ok, detail);
    }
  }

  {
    bool ok = true;
    std::string detail;
    for (int r = 0; ok && r < nr; ++r) {
      int c0 = first_col_of_vertex(ts, ts.rows[r].vertex_index);
      auto z = ts.entries[r][c0].try_integer();
      if (!z || *z < 1) {
        ok = false;
        detail = "value at " + coord(r, c0) + " is not positive";
      }
    }
    add("diagonal-positivity", ok, detail);
  }

  {
    if (!ts.group || !ts.table || ts.vertex_classes.empty()) {
      add("species-entries", true, "skipped: no group attached");
    } else {
      bool ok = true;
      std::string detail;
      for (int c = 0; ok && c < nc; ++c) {
        const TSCTColumn& col = ts.columns[c];
        if (ts.vertices[col.vertex_index].order > 2) continue;
        int x = ts.vertex_classes[col.vertex_index].generator;
        for (int r = 0; ok && r < nr; ++r) {
          if (!vertex_subconjugate(ts, col.vertex_index,
                                   ts.rows[r].vertex_index))
            continue;
          try {
            if (species_value(ts.rows[r].character, x, col.rep) !=
                ts.entries[r][c]) {
              ok = false;
              detail = "entry at " + coord(r, c) +
                       " differs from the species value";
            }
          } catch (const StructureError& err) {
            ok = false;
            detail = err.what();
          }
        }
      }
      add("species-entries", ok, detail);
    }
  }

  {
    if (!ts.group || ts.vertex_classes.empty()) {
      add("local-orthonormality", true, "skipped: no group attached");
    } else if (ts.vertices.back().order != 4) {
      add("local-orthonormality", true, "skipped: no Klein four vertex");
    } else {
      bool ok = true;
      std::string detail;
      const Quotient& q = ts.vertex_classes.back().quotient;
      std::vector<int> rs = ts.rows_with_vertex(nv - 1);
      std::vector<int> cs = ts.cols_with_vertex(nv - 1);
      std::vector<long> size;
      for (int c : cs)
        size.push_back(q.group->cls(q.group->class_of(q.project(ts.columns[c].rep))).size);
      for (size_t i = 0; ok && i < rs.size(); ++i)
        for (size_t j = i; ok && j < rs.size(); ++j) {
          CycNum sum = 0;
          for (size_t c = 0; c < cs.size(); ++c)
            sum += ts.entries[rs[i]][cs[c]] *
                   ts.entries[rs[j]][cs[c]].conj() * CycNum(size[c]);
          CycNum want = i == j ? CycNum(q.group->order()) : CycNum(0);
          if (sum != want) {
            ok = false;
            detail = "maximal vertex rows " + std::to_string(rs[i]) + " and " +
                     std::to_string(rs[j]) + " are not orthonormal";
          }
        }
      add("local-orthonormality", ok, detail);
    }
  }

  return rep;
}

bool tsct_matches(const TSCTable& a, const TSCTable& b, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!a.group || a.group != b.group || !a.table || a.table != b.table)
    return fail("tables are not over the same group and character table");
  if (a.vertices.size() != b.vertices.size())
    return fail("vertex counts differ");
  for (size_t i = 0; i < a.vertices.size(); ++i)
    if (a.vertices[i].order != b.vertices[i].order ||
        a.vertices[i].normalizer_order != b.vertices[i].normalizer_order ||
        a.vertices[i].num_columns != b.vertices[i].num_columns)
      return fail("vertex data differs at index " + std::to_string(i));
  if (a.rows.size() != b.rows.size() || a.columns.size() != b.columns.size())
    return fail("table sizes differ");
  if (a.vertex_classes.empty() || b.vertex_classes.empty())
    return fail("tables without group data cannot be matched");

  // Rows are keyed by (vertex, character, local label), columns by
  // (vertex, class of the representative in N(Q)/Q).
  using RowKey = std::tuple<int, std::vector<std::pair<int, long>>, int>;
  auto row_keys = [](const TSCTable& ts) {
    std::vector<std::pair<RowKey, int>> keys;
    for (int r = 0; r < static_cast<int>(ts.rows.size()); ++r) {
      const TSCTRow& row = ts.rows[r];
      std::vector<std::pair<int, long>> cs(row.character.coeffs.begin(),
                                           row.character.coeffs.end());
      keys.push_back(
          {{row.vertex_index, std::move(cs), row.local_label.value_or(-1)}, r});
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  auto col_keys = [](const TSCTable& ts) {
    std::vector<std::pair<std::pair<int, int>, int>> keys;
    for (int c = 0; c < static_cast<int>(ts.columns.size()); ++c) {
      const TSCTColumn& col = ts.columns[c];
      const Quotient& q = ts.vertex_classes[col.vertex_index].quotient;
      int cls = q.group->class_of(q.project(col.rep));
      std::vector<int> order = q.group->canonical_class_order();
      int pos = static_cast<int>(
          std::find(order.begin(), order.end(), cls) - order.begin());
      keys.push_back({{col.vertex_index, pos}, c});
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };

  auto ra = row_keys(a), rb = row_keys(b);
  auto ca = col_keys(a), cb = col_keys(b);
  for (size_t i = 0; i < ra.size(); ++i) {
    if (ra[i].first != rb[i].first)
      return fail("row labels differ");
    if (i + 1 < ra.size() && ra[i].first == ra[i + 1].first)
      return fail("ambiguous row labels");
  }
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].first != cb[i].first)
      return fail("column labels differ");
    if (i + 1 < ca.size() && ca[i].first == ca[i + 1].first)
      return fail("ambiguous column labels");
  }
  for (size_t i = 0; i < ra.size(); ++i)
    for (size_t j = 0; j < ca.size(); ++j)
      if (a.entries[ra[i].second][ca[j].second] !=
          b.entries[rb[i].second][cb[j].second])
        return fail("entries differ at matched row " + std::to_string(i) +
                    ", column " + std::to_string(j));
  return true;
}

} // namespace trivsrc
