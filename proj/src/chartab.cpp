#include "trivsrc/chartab.hpp"

#include "trivsrc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trivsrc {

namespace {

// rep elements must hit every class exactly once
void attach_group_columns(CharTable& t) {
  const PermGroup& g = *t.group;
  t.group_class_to_col.assign(g.num_classes(), -1);
  if (t.num_classes() != g.num_classes())
    throw StructureError("table column count does not match the class count");
  for (int c = 0; c < t.num_classes(); ++c) {
    int cls = g.class_of(t.classes[c].rep);
    if (t.group_class_to_col[cls] >= 0)
      throw StructureError("two table columns land in one conjugacy class");
    t.group_class_to_col[cls] = c;
    t.classes[c].size = g.cls(cls).size;
    t.classes[c].order = g.cls(cls).order;
  }
  t.group_order = g.order();
}

void default_names(CharTable& t) {
  t.names.clear();
  for (size_t i = 1; i <= t.irr.size(); ++i)
    t.names.push_back("chi_" + std::to_string(i));
}

} // namespace

int CharTable::identity_col() const {
  for (int c = 0; c < num_classes(); ++c)
    if (classes[c].order == 1) return c;
  throw StructureError("table has no identity column");
}

int CharTable::col_of_element(int elt) const {
  if (!group) throw StructureError("table has no attached group");
  return group_class_to_col.at(group->class_of(elt));
}

long CharTable::degree(int row) const {
  std::optional<long long> d = irr[row][identity_col()].try_integer();
  if (!d || *d <= 0) throw StructureError("character degree is not a positive integer");
  return static_cast<long>(*d);
}

long CharTable::table_exponent() const {
  long e = 1;
  for (const ClassCol& c : classes) e = std::lcm(e, c.order);
  return e;
}

ClassFunction VirtualCharacter::as_class_function() const {
  ClassFunction f;
  f.table = table;
  f.values.resize(table->num_classes());
  for (int c = 0; c < table->num_classes(); ++c) f.values[c] = value_at(c);
  return f;
}

CycNum VirtualCharacter::value_at(int col) const {
  CycNum v;
  for (const auto& [row, coeff] : coeffs)
    if (coeff != 0) v += table->irr[row][col].scaled(Rat(coeff));
  return v;
}

std::string VirtualCharacter::label() const {
  std::string out;
  for (const auto& [row, coeff] : coeffs) {
    if (coeff == 0) continue;
    std::string name = table->names[row];
    if (coeff == 1) {
      out += out.empty() ? name : "+" + name;
    } else if (coeff == -1) {
      out += "-" + name;
    } else {
      std::string term = std::to_string(coeff) + "*" + name;
      out += (out.empty() || coeff < 0) ? term : "+" + term;
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
  return a.coeffs == b.coeffs;
}

bool operator<(const VirtualCharacter& a, const VirtualCharacter& b) {
  return a.coeffs < b.coeffs;
}

ClassFunction row_function(const TablePtr& t, int row) {
  return ClassFunction{t, t->irr[row]};
}

CycNum inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.table != g.table)
    throw StructureError("inner product of functions on different tables");
  const CharTable& t = *f.table;
  CycNum sum;
  for (int c = 0; c < t.num_classes(); ++c)
    sum += (f.values[c] * g.values[c].conj()).scaled(Rat(t.classes[c].size));
  return sum.scaled(Rat(1, t.group_order));
}

std::map<int, long> decompose_integral(const ClassFunction& f) {
  std::map<int, long> out;
  for (size_t i = 0; i < f.table->irr.size(); ++i) {
    CycNum c = inner_product(f, row_function(f.table, static_cast<int>(i)));
    if (c.is_zero()) continue;
    std::optional<long long> k = c.try_integer();
    if (!k) throw StructureError("class function is not an integer combination of rows");
    out[static_cast<int>(i)] = static_cast<long>(*k);
  }
  return out;
}

TablePtr dihedral_character_table(long v) {
  if (v < 3 || v % 2 == 0)
    throw ScopeError("dihedral family needs odd v >= 3");
  GroupPtr g = dihedral_group(v);
  int r = g->index_of(g->generators()[0]);
  int s = g->index_of(g->generators()[1]);

  auto t = std::make_shared<CharTable>();
  t->group = g;
  t->classes.push_back({0, 0, 0});
  for (long u = 1; u <= v; ++u)
    t->classes.push_back({g->power(r, u), 0, 0});
  t->classes.push_back({s, 0, 0});
  t->classes.push_back({g->mul(s, r), 0, 0});
  attach_group_columns(*t);

  const int n = static_cast<int>(v) + 3;
  auto sign_row = [&](int rot_sign_base, long s_val, long sr_val) {
    // rot_sign_base = 0: rotations all 1; 1: r^j -> (-1)^j
    std::vector<CycNum> row(n);
    row[0] = CycNum(1);
    for (long u = 1; u <= v; ++u)
      row[u] = CycNum(rot_sign_base ? (u % 2 ? -1 : 1) : 1);
    row[n - 2] = CycNum(s_val);
    row[n - 1] = CycNum(sr_val);
    return row;
  };
  t->irr.push_back(sign_row(0, 1, 1));
  t->irr.push_back(sign_row(1, 1, -1));
  t->irr.push_back(sign_row(0, -1, -1));
  t->irr.push_back(sign_row(1, -1, 1));
  for (long m = 1; m <= v - 1; ++m) {
    std::vector<CycNum> row(n);
    for (long u = 0; u <= v; ++u)
      row[u] = CycNum::root_of_unity(2 * v, m * u) +
               CycNum::root_of_unity(2 * v, -m * u);
    row[n - 2] = CycNum(0);
    row[n - 1] = CycNum(0);
    t->irr.push_back(std::move(row));
  }
  default_names(*t);
  return t;
}

TablePtr builtin_char_table(const std::string& name) {
  auto t = std::make_shared<CharTable>();
  auto I = [](long long k) { return CycNum(k); };
  if (name == "v4") {
    GroupPtr g = klein_group();
    int a = g->index_of(g->generators()[0]);
    int b = g->index_of(g->generators()[1]);
    t->group = g;
    t->classes = {{0, 0, 0}, {a, 0, 0}, {b, 0, 0}, {g->mul(a, b), 0, 0}};
    t->irr = {
        {I(1), I(1), I(1), I(1)},
        {I(1), I(1), I(-1), I(-1)},
        {I(1), I(-1), I(1), I(-1)},
        {I(1), I(-1), I(-1), I(1)},
    };
  } else if (name == "a4") {
    GroupPtr g = alt4_group();
    int a = g->index_of(g->generators()[0]);
    int b = g->index_of(perm_from_cycles(4, {{1, 3}, {2, 4}}));
    int c = g->index_of(g->generators()[1]);
    int bc2 = g->mul(b, g->power(c, 2));
    CycNum w = CycNum::root_of_unity(3, 1), w2 = CycNum::root_of_unity(3, 2);
    t->group = g;
    t->classes = {{0, 0, 0}, {a, 0, 0}, {c, 0, 0}, {bc2, 0, 0}};
    t->irr = {
        {I(1), I(1), I(1), I(1)},
        {I(1), I(1), w, w2},
        {I(1), I(1), w2, w},
        {I(3), I(-1), I(0), I(0)},
    };
  } else if (name == "a5") {
    GroupPtr g = alt5_group();
    int a = g->index_of(g->generators()[0]);
    int d = g->index_of(g->generators()[1]);
    int ad = g->mul(a, d);
    int ad2 = g->power(ad, 2);
    auto h = [](long long k) { return CycNum::root_of_unity(5, k); };
    CycNum A = -h(1) - h(4), As = -h(2) - h(3); // (1 - sqrt 5)/2 and conjugate
    t->group = g;
    t->classes = {{0, 0, 0}, {a, 0, 0}, {d, 0, 0}, {ad, 0, 0}, {ad2, 0, 0}};
    t->irr = {
        {I(1), I(1), I(1), I(1), I(1)},
        {I(3), I(-1), I(0), A, As},
        {I(3), I(-1), I(0), As, A},
        {I(4), I(0), I(1), I(-1), I(-1)},
        {I(5), I(1), I(-1), I(0), I(0)},
    };
  } else {
    throw ParseError("unknown builtin table: " + name);
  }
  attach_group_columns(*t);
  default_names(*t);
  return t;
}

ClassFunction restrict_character(const ClassFunction& chi, const Subgroup& h,
                                 const TablePtr& h_table) {
  if (chi.table->group != h.ambient || h_table->group != h.group)
    throw StructureError("restriction: table/subgroup mismatch");
  ClassFunction out;
  out.table = h_table;
  for (const ClassCol& c : h_table->classes)
    out.values.push_back(
        chi.values[chi.table->col_of_element(h.to_ambient[c.rep])]);
  return out;
}

ClassFunction induce_character(const ClassFunction& psi, const Subgroup& h,
                               const TablePtr& g_table) {
  if (psi.table->group != h.group || g_table->group != h.ambient)
    throw StructureError("induction: table/subgroup mismatch");
  std::vector<CycNum> sums(g_table->num_classes());
  for (int e = 0; e < h.group->order(); ++e) {
    int gcol = g_table->col_of_element(h.to_ambient[e]);
    sums[gcol] += psi.values[psi.table->col_of_element(e)];
  }
  ClassFunction out;
  out.table = g_table;
  for (int c = 0; c < g_table->num_classes(); ++c)
    out.values.push_back(sums[c].scaled(
        Rat(g_table->group_order,
            h.group->order() * g_table->classes[c].size)));
  return out;
}

ClassFunction inflate_character(const ClassFunction& nu, const Quotient& quot,
                                const TablePtr& big_table) {
  if (nu.table->group != quot.group)
    throw StructureError("inflation: function does not live on the quotient");
  ClassFunction out;
  out.table = big_table;
  for (const ClassCol& c : big_table->classes)
    out.values.push_back(
        nu.values[nu.table->col_of_element(quot.project(c.rep))]);
  return out;
}

CycNum central_character(const CharTable& t, int row, int col) {
  return t.irr[row][col].scaled(Rat(t.classes[col].size, t.degree(row)));
}

std::vector<int> p_regular_columns(const CharTable& t) {
  std::vector<int> out;
  for (int c = 0; c < t.num_classes(); ++c)
    if (t.classes[c].order % 2 == 1) out.push_back(c);
  return out;
}

namespace {

std::vector<int> sorted_cols(const CharTable& t) {
  std::vector<int> cols(t.num_classes());
  std::iota(cols.begin(), cols.end(), 0);
  std::sort(cols.begin(), cols.end(), [&](int a, int b) {
    if (t.classes[a].order != t.classes[b].order)
      return t.classes[a].order < t.classes[b].order;
    if (t.classes[a].size != t.classes[b].size)
      return t.classes[a].size < t.classes[b].size;
    return a < b;
  });
  return cols;
}

bool vec_less(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

} // namespace

void validate_character_table(const CharTable& t) {
  const int n = t.num_classes();
  if (static_cast<int>(t.irr.size()) != n)
    throw StructureError("table is not square");
  long sizes = 0;
  for (const ClassCol& c : t.classes) sizes += c.size;
  if (sizes != t.group_order)
    throw StructureError("class sizes do not sum to the group order");
  long sq = 0;
  for (int i = 0; i < n; ++i) {
    long d = t.degree(i); // throws unless a positive integer
    sq += d * d;
  }
  if (sq != t.group_order)
    throw StructureError("squared degrees do not sum to the group order");
  TablePtr alias(std::shared_ptr<const CharTable>(), &t); // non-owning view
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      CycNum ip = inner_product(row_function(alias, i), row_function(alias, j));
      if (ip != CycNum(i == j ? 1 : 0))
        throw StructureError("rows are not orthonormal");
    }
}

bool tables_match(const CharTable& a, const CharTable& b) {
  const int n = a.num_classes();
  if (n != b.num_classes() || a.irr.size() != b.irr.size()) return false;
  if (a.group_order != b.group_order) return false;
  long e = a.table_exponent();
  if (e != b.table_exponent()) return false;

  // Align columns: through shared group classes when possible, otherwise by
  // the canonical (order, size) sort, which must then agree keywise.
  std::vector<int> acols = sorted_cols(a);
  std::vector<int> b_for_a(n, -1);
  if (a.group && a.group == b.group) {
    for (int c = 0; c < n; ++c) {
      int cls = a.group->class_of(a.classes[c].rep);
      b_for_a[c] = b.group_class_to_col[cls];
    }
  } else {
    std::vector<int> bcols = sorted_cols(b);
    for (int i = 0; i < n; ++i) {
      if (a.classes[acols[i]].order != b.classes[bcols[i]].order ||
          a.classes[acols[i]].size != b.classes[bcols[i]].size)
        return false;
      b_for_a[acols[i]] = bcols[i];
    }
  }

  std::vector<std::vector<CycNum>> rows_a;
  for (const auto& row : a.irr) {
    std::vector<CycNum> v;
    for (int c : acols) v.push_back(row[c]);
    rows_a.push_back(std::move(v));
  }
  std::sort(rows_a.begin(), rows_a.end(), vec_less);

  for (long twist = 1; twist < std::max<long>(e, 2); ++twist) {
    if (std::gcd(twist, e) != 1) continue;
    std::vector<std::vector<CycNum>> rows_b;
    for (const auto& row : b.irr) {
      std::vector<CycNum> v;
      for (int c : acols) v.push_back(row[b_for_a[c]].galois(twist));
      rows_b.push_back(std::move(v));
    }
    std::sort(rows_b.begin(), rows_b.end(), vec_less);
    if (rows_a == rows_b) return true;
  }
  return false;
}

} // namespace trivsrc
