#pragma once

#include "trivsrc/blocks.hpp"
#include "trivsrc/chartab.hpp"
#include "trivsrc/domestic.hpp"
#include "trivsrc/permgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trivsrc {

// Row of a trivial source character table: the ordinary character of a
// trivial source module, together with the conjugacy class of its vertex.
// For rows whose vertex is a maximal 2-subgroup the local_label indexes the
// irreducible of N(Q)/Q that the module's Green correspondent inflates from
// (row index into the canonical character table of the quotient).
struct TSCTRow {
  int vertex_index = 0;
  VirtualCharacter character;
  std::optional<int> local_label;
};

// Column: a vertex class Q_v paired with an odd-order element s of N(Q_v).
// rep is the index of s in the ambient group (-1 for imported tables that
// carry only a printable label).
struct TSCTColumn {
  int vertex_index = 0;
  int rep = -1;
  std::string rep_label;
};

// Summary of one vertex class, kept separately from the group-level data so
// imported tables (which have no group attached) still know the shape.
struct TSCTVertex {
  long order = 1;
  long normalizer_order = 1;
  int num_columns = 0;
  std::vector<Perm> rep_perms;  // column representatives as plain
                                // permutations, kept only for imported
                                // tables so they can be re-serialized
};

// Trivial source character table at p = 2.  Rows and columns are grouped by
// vertex, the trivial subgroup first and a maximal vertex last; the first
// column of every vertex group is the one with s = 1.  Entries are species
// values tau_{Q,s}(M) = chi_M(x s) where x generates Q (cyclic case), or
// values of irreducibles of N(Q)/Q (maximal Klein four vertex).
// group/table are null for tables read back from serialized form.
struct TSCTable {
  GroupPtr group;
  TablePtr table;
  std::vector<TSCTVertex> vertices;
  std::vector<SubgroupClassInfo> vertex_classes;  // empty for imported tables
  std::vector<TSCTRow> rows;
  std::vector<TSCTColumn> columns;
  std::vector<std::vector<CycNum>> entries;

  std::vector<int> rows_with_vertex(int v) const;
  std::vector<int> cols_with_vertex(int v) const;
};

// Species value tau_{<x>,s} of a virtual character: chi(x s), where x is the
// identity or an involution and s an odd-order element centralizing x.
// Throws StructureError when x, s violate those constraints.
CycNum species_value(const VirtualCharacter& chi, int x, int s);

// Builds the trivial source character table of g from its ordinary character
// table (which must have g attached).  Works block by block: defect-0
// characters are their own rows with trivial vertex, defect-1 blocks
// contribute a simple row at the involution vertex plus a projective row,
// and defect-2 blocks go through the sign analysis and the Morita transport
// of the corresponding basic algebra.  The result is verified before it is
// returned.
TSCTable assemble_tsct(const GroupPtr& g, const TablePtr& t);

// Closed form of the table for the dihedral group of order 4v, odd v >= 3,
// with entries evaluated from the known character formulas rather than
// recomputed from the group.
TSCTable tsct_d4v(long v);

// Hard-coded reference tables over builtin_char_table(name) for "v4", "a4",
// "a5".
TSCTable builtin_tsct(const std::string& name);

struct TSCTCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct TSCTReport {
  std::vector<TSCTCheck> checks;
  bool all_pass() const;
};

// Structural checks on a table: square shape with matching per-vertex row
// and column counts, the zero pattern from vertex subconjugacy, the trivial
// and degree columns, integrality and positivity constraints, the Gram
// matrix of the row characters, and (when the group is available) direct
// recomputation of every species entry plus orthonormality of the maximal
// vertex block.  Checks that need the group or table are skipped for
// imported tables and report pass with a "skipped" detail.
TSCTReport verify_tsct(const TSCTable& ts);

// Equality of two tables over the same group and character table up to the
// allowed relabelings: rows are matched by (vertex, character, local label)
// and columns by (vertex, class of s in N(Q)/Q).  When the tables differ
// and why is non-null, a short reason is stored there.
bool tsct_matches(const TSCTable& a, const TSCTable& b,
                  std::string* why = nullptr);

} // namespace trivsrc
