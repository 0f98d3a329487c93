#pragma once

#include "trivsrc/cyclotomic.hpp"
#include "trivsrc/permgroup.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace trivsrc {

struct ClassCol {
  int rep;    // element index in the attached group, -1 for ingested tables
  long size;
  long order; // order of the class elements
};

// Ordinary character table. Rows are irreducible characters, columns are
// conjugacy classes. Immutable after construction.
struct CharTable {
  GroupPtr group;                          // null for tables read from files
  std::vector<ClassCol> classes;
  std::vector<std::vector<CycNum>> irr;    // irr[row][col]
  std::vector<std::string> names;          // row labels chi_1, chi_2, ...
  long group_order = 0;
  std::vector<int> group_class_to_col;     // group class id -> column
  std::vector<Perm> class_rep_perms;       // representatives as plain
                                           // permutations, kept only for
                                           // ingested tables so they can be
                                           // re-serialized

  int num_classes() const { return static_cast<int>(classes.size()); }
  int identity_col() const;
  int col_of_element(int elt) const;       // requires an attached group
  long degree(int row) const;              // chi(1) as a plain integer
  long table_exponent() const;             // lcm of the column element orders
};

using TablePtr = std::shared_ptr<const CharTable>;

// Class function on the columns of a fixed table.
struct ClassFunction {
  TablePtr table;
  std::vector<CycNum> values;
};

// Integer combination of the rows of a table.
struct VirtualCharacter {
  TablePtr table;
  std::map<int, long> coeffs;              // row index -> coefficient

  ClassFunction as_class_function() const;
  CycNum value_at(int col) const;
  std::string label() const;               // e.g. "chi_1+chi_4"
};
bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);
bool operator<(const VirtualCharacter& a, const VirtualCharacter& b);

ClassFunction row_function(const TablePtr& t, int row);

// (1/|G|) sum over classes of |C| f(C) conj(g(C)), exact.
CycNum inner_product(const ClassFunction& f, const ClassFunction& g);

// Coefficients of f in the basis of table rows; throws StructureError when a
// coefficient is not a rational integer.
std::map<int, long> decompose_integral(const ClassFunction& f);

// Generic table computation (Burnside-Dixon: splitting common eigenvectors of
// the class matrices over a prime field, then lifting multiplicities of roots
// of unity). Deterministic; rows sorted by degree, then by value vector.
TablePtr dixon_character_table(const GroupPtr& g);

// Closed form for the dihedral group of order 4v, odd v >= 3, with columns
// [1], [r], ..., [r^v], [s], [sr].
TablePtr dihedral_character_table(long v);

// Hard-coded reference tables for v4, a4, a5 in their customary layout.
TablePtr builtin_char_table(const std::string& name);

// Value of chi at the class of the subgroup representative.
ClassFunction restrict_character(const ClassFunction& chi, const Subgroup& h,
                                 const TablePtr& h_table);

// Standard induced character, computed by summing over subgroup elements.
ClassFunction induce_character(const ClassFunction& psi, const Subgroup& h,
                               const TablePtr& g_table);

// Pull a class function on N/Q back to N through the stored projection.
ClassFunction inflate_character(const ClassFunction& nu, const Quotient& quot,
                                const TablePtr& big_table);

// omega_chi(C) = |C| chi(g) / chi(1).
CycNum central_character(const CharTable& t, int row, int col);

// Columns whose classes consist of odd-order elements, in table order.
std::vector<int> p_regular_columns(const CharTable& t);

// Equality of tables up to the symmetries a character table is defined by:
// column order (matched by class data), row order, and a Galois twist of the
// cyclotomic values applied uniformly.
bool tables_match(const CharTable& a, const CharTable& b);

// Exact invariant check: square shape, positive integer degrees, sum of
// squared degrees equal to the group order, row orthonormality. Throws
// StructureError with a description on the first violation.
void validate_character_table(const CharTable& t);

} // namespace trivsrc
