#include "trivsrc/render.hpp"

#include "trivsrc/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace trivsrc {
namespace {

// --- shorthand spellings --------------------------------------------------

using Term = std::pair<Rat, std::string>;  // coefficient, printed root

std::string term_text(const Rat& c, const std::string& root) {
  if (root.empty()) return rat_str(c);
  if (c == 1) return root;
  if (c == -1) return "-" + root;
  if (rat_is_integer(c)) return rat_str(c) + root;
  return "(" + rat_str(c) + ")" + root;
}

std::string join_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& [c, root] : terms) {
    if (c == 0) continue;
    std::string t = term_text(c, root);
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out.empty() ? "0" : out;
}

struct Spelling {
  std::vector<Term> terms;
  int nonzero = 0;
  Rat weight = 0;  // sum of |coefficients|, the tie-breaker

  void add(const Rat& c, const std::string& root) {
    terms.push_back({c, root});
    if (c != 0) {
      ++nonzero;
      weight += c < 0 ? Rat(-c) : c;
    }
  }
  bool better_than(const Spelling& o) const {
    if (nonzero != o.nonzero) return nonzero < o.nonzero;
    return weight < o.weight;
  }
};

Rat coeff_at(const CycNum& v, long e) {
  for (const auto& [exp, c] : v.coeffs())
    if (exp == e) return c;
  return 0;
}

// Conductor 3, basis 1, w. The three spellings drop one of 1, w, w^2;
// ties prefer the pure-root form, so 2w-w^2 wins over 1+3w.
std::string conductor3_text(const CycNum& v) {
  Rat c0 = coeff_at(v, 0), c1 = coeff_at(v, 1);
  Spelling roots, one_w, one_w2;
  roots.add(c1 - c0, "w");
  roots.add(-c0, "w^2");
  one_w.add(c0, "");
  one_w.add(c1, "w");
  one_w2.add(c0 - c1, "");
  one_w2.add(-c1, "w^2");
  const Spelling* best = &roots;
  for (const Spelling* s : {&one_w, &one_w2})
    if (s->better_than(*best)) best = s;
  return join_terms(best->terms);
}

// Conductor 5, basis 1..h^3; shifting by t(1+h+...+h^4) = 0 recovers the
// usual -h-h^4 style spellings.
std::string conductor5_text(const CycNum& v) {
  std::vector<Rat> c(4);
  for (int k = 0; k < 4; ++k) c[k] = coeff_at(v, k);
  std::vector<Rat> shifts{0, c[0], c[1], c[2], c[3]};
  Spelling best;
  bool have = false;
  for (const Rat& t : shifts) {
    Spelling s;
    for (int k = 0; k < 4; ++k) {
      std::string root;
      if (k == 1) root = "h";
      else if (k > 1) root = "h^" + std::to_string(k);
      s.add(c[k] - t, root);
    }
    s.add(-t, "h^4");
    if (!have || s.better_than(best)) {
      best = std::move(s);
      have = true;
    }
  }
  return join_terms(best.terms);
}

// Conductor 9, basis 1..y^5; the only useful shift is by t(1+y^3+y^6) = 0.
std::string conductor9_text(const CycNum& v) {
  std::vector<Rat> c(6);
  for (int k = 0; k < 6; ++k) c[k] = coeff_at(v, k);
  std::vector<Rat> shifts{0, c[0], c[3]};
  Spelling best;
  bool have = false;
  for (const Rat& t : shifts) {
    Spelling s;
    for (int k = 0; k < 6; ++k) {
      Rat e = (k == 0 || k == 3) ? Rat(c[k] - t) : c[k];
      std::string root;
      if (k == 1) root = "y";
      else if (k > 1) root = "y^" + std::to_string(k);
      s.add(e, root);
    }
    s.add(-t, "y^6");
    if (!have || s.better_than(best)) {
      best = std::move(s);
      have = true;
    }
  }
  return join_terms(best.terms);
}

// Conductor 15: each basis root z(15)^k is the monomial w^(2k mod 3) *
// h^(2k mod 5).
std::string conductor15_text(const CycNum& v) {
  std::vector<Term> terms;
  for (const auto& [e, c] : v.coeffs()) {
    int i = static_cast<int>((2 * e) % 3);
    int j = static_cast<int>((2 * e) % 5);
    std::string root;
    if (i > 0) root = i == 1 ? "w" : "w^2";
    if (j > 0) {
      if (!root.empty()) root += "*";
      root += j == 1 ? "h" : "h^" + std::to_string(j);
    }
    terms.push_back({c, root});
  }
  return join_terms(terms);
}

// Legend entries for the roots a value's spelling can use.
void note_shorthand(const CycNum& v, bool& w, bool& h, bool& y) {
  switch (v.conductor()) {
    case 3: w = true; break;
    case 5: h = true; break;
    case 9: y = true; break;
    case 15: w = h = true; break;
    default: break;
  }
}

std::string legend_line(bool w, bool h, bool y) {
  if (!w && !h && !y) return "";
  std::string out = "where ";
  bool first = true;
  for (auto [used, text] : {std::pair{w, "w = z(3)"}, {h, "h = z(5)"},
                            {y, "y = z(9)"}}) {
    if (!used) continue;
    if (!first) out += ", ";
    out += text;
    first = false;
  }
  return out + "\n";
}

// --- aligned grids --------------------------------------------------------

// First column left-aligned, the rest right-aligned, two spaces apart.
// nullptr rows become horizontal rules.
std::string aligned(const std::vector<const std::vector<std::string>*>& rows) {
  size_t ncols = 0;
  for (const auto* r : rows)
    if (r) ncols = std::max(ncols, r->size());
  std::vector<size_t> width(ncols, 0);
  for (const auto* r : rows) {
    if (!r) continue;
    for (size_t j = 0; j < r->size(); ++j)
      width[j] = std::max(width[j], (*r)[j].size());
  }
  std::string out;
  for (const auto* r : rows) {
    std::string line;
    if (!r) {
      size_t total = 0;
      for (size_t j = 0; j < ncols; ++j) total += width[j] + (j ? 2 : 0);
      line.assign(total, '-');
    } else {
      for (size_t j = 0; j < r->size(); ++j) {
        const std::string& cell = (*r)[j];
        if (j == 0) {
          line += cell;
          line.append(width[0] - cell.size(), ' ');
        } else {
          line += "  ";
          line.append(width[j] - cell.size(), ' ');
          line += cell;
        }
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
    }
    out += line + "\n";
  }
  return out;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<const std::vector<std::string>*> ptrs;
  for (const auto& r : rows) ptrs.push_back(&r);
  return aligned(ptrs);
}

// --- labels ---------------------------------------------------------------

std::string count_letters(int k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k = k / 26 - 1;
  } while (k >= 0);
  return s;
}

std::vector<std::string> class_labels(const CharTable& t) {
  std::map<long, int> seen;
  std::vector<std::string> labels;
  for (const ClassCol& c : t.classes)
    labels.push_back(std::to_string(c.order) + count_letters(seen[c.order]++));
  return labels;
}

// chi_1+chi_4 style label; falls back to default names when the rows are
// not tied to a table (imported data).
std::string character_label(const TSCTable& ts, const VirtualCharacter& chi) {
  if (ts.table) return chi.label();
  std::string out;
  for (const auto& [row, coeff] : chi.coeffs) {
    if (coeff == 0) continue;
    std::string name = "chi_" + std::to_string(row + 1);
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

long column_rep_order(const TSCTable& ts, int col) {
  if (ts.group) return ts.group->element_order(ts.columns[col].rep);
  const TSCTVertex& v = ts.vertices[ts.columns[col].vertex_index];
  int pos = 0;
  for (int c = 0; c < col; ++c)
    if (ts.columns[c].vertex_index == ts.columns[col].vertex_index) ++pos;
  return v.rep_perms[pos].order();
}

// 1a, 3a, 3b... column labels, counting per vertex.
std::vector<std::string> tsct_column_labels(const TSCTable& ts) {
  std::vector<std::string> labels(ts.columns.size());
  for (size_t v = 0; v < ts.vertices.size(); ++v) {
    std::map<long, int> seen;
    for (int c : ts.cols_with_vertex(static_cast<int>(v))) {
      long o = column_rep_order(ts, c);
      labels[c] = std::to_string(o) + count_letters(seen[o]++);
    }
  }
  return labels;
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ",";
    line += cells[i];
  }
  return line + "\n";
}

int find_trivial_row(const CharTable& t) {
  for (size_t r = 0; r < t.irr.size(); ++r) {
    bool ones = true;
    for (const CycNum& v : t.irr[r])
      if (v != CycNum(1)) {
        ones = false;
        break;
      }
    if (ones) return static_cast<int>(r);
  }
  return -1;
}

} // namespace

std::string cyc_text(const CycNum& v) {
  if (v.is_rational()) return rat_str(*v.as_rational());
  switch (v.conductor()) {
    case 3: return conductor3_text(v);
    case 5: return conductor5_text(v);
    case 9: return conductor9_text(v);
    case 15: return conductor15_text(v);
    default: return v.str();
  }
}

// --- character tables -----------------------------------------------------

std::string render_char_table_text(const CharTable& t) {
  std::vector<std::string> labels = class_labels(t);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({""});
  for (const std::string& l : labels) rows.back().push_back(l);
  rows.push_back({"size"});
  for (const ClassCol& c : t.classes)
    rows.back().push_back(std::to_string(c.size));
  bool w = false, h = false, y = false;
  for (size_t r = 0; r < t.irr.size(); ++r) {
    rows.push_back({t.names[r]});
    for (const CycNum& v : t.irr[r]) {
      note_shorthand(v, w, h, y);
      rows.back().push_back(cyc_text(v));
    }
  }
  std::string out = "order " + std::to_string(t.group_order) + ", " +
                    std::to_string(t.num_classes()) + " classes\n";
  out += aligned(rows);
  out += legend_line(w, h, y);
  return out;
}

std::string render_char_table_csv(const CharTable& t) {
  std::vector<std::string> labels = class_labels(t);
  std::string out;
  {
    std::vector<std::string> header{""};
    header.insert(header.end(), labels.begin(), labels.end());
    out += csv_join(header);
  }
  std::vector<std::string> sizes{"size"};
  for (const ClassCol& c : t.classes) sizes.push_back(std::to_string(c.size));
  out += csv_join(sizes);
  for (size_t r = 0; r < t.irr.size(); ++r) {
    std::vector<std::string> cells{t.names[r]};
    for (const CycNum& v : t.irr[r]) cells.push_back(v.str());
    out += csv_join(cells);
  }
  return out;
}

// --- block reports --------------------------------------------------------

std::string render_blocks_text(const std::vector<Block>& blocks,
                               const CharTable& t) {
  std::vector<std::string> labels = class_labels(t);
  int trivial = find_trivial_row(t);
  std::string out = std::to_string(blocks.size()) + " block" +
                    (blocks.size() == 1 ? "" : "s") + "\n";
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    out += "block " + std::to_string(i + 1) + ": defect " +
           std::to_string(b.defect);
    if (trivial >= 0 &&
        std::find(b.irr_indices.begin(), b.irr_indices.end(), trivial) !=
            b.irr_indices.end())
      out += ", principal";
    if (b.involution_class)
      out += ", involution class " + labels[*b.involution_class];
    out += ", characters";
    for (int r : b.irr_indices) out += " " + t.names[r];
    out += "\n";
  }
  return out;
}

std::string render_blocks_csv(const std::vector<Block>& blocks,
                              const CharTable& t) {
  std::vector<std::string> labels = class_labels(t);
  int trivial = find_trivial_row(t);
  std::string out = "block,defect,principal,involution_class,characters\n";
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    bool principal =
        trivial >= 0 &&
        std::find(b.irr_indices.begin(), b.irr_indices.end(), trivial) !=
            b.irr_indices.end();
    std::string chars;
    for (int r : b.irr_indices) {
      if (!chars.empty()) chars += " ";
      chars += t.names[r];
    }
    out += csv_join({std::to_string(i + 1), std::to_string(b.defect),
                     principal ? "yes" : "",
                     b.involution_class ? labels[*b.involution_class] : "",
                     chars});
  }
  return out;
}

// --- transported blocks ---------------------------------------------------

namespace {

const char* const kBlockCharNames[4] = {"chi_a", "chi_b", "chi_g", "chi_d"};

std::string block_char_label(const std::array<int, 4>& coeffs) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (coeffs[i] == 0) continue;
    std::string name = kBlockCharNames[i];
    if (coeffs[i] == 1) {
      out += out.empty() ? name : "+" + name;
    } else if (coeffs[i] == -1) {
      out += "-" + name;
    } else {
      std::string term = std::to_string(coeffs[i]) + "*" + name;
      out += (out.empty() || coeffs[i] < 0) ? term : "+" + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string attached_text(const TrivialSourceRow& r) {
  std::string out;
  for (int c : r.attached_classes) {
    if (!out.empty()) out += " ";
    out += std::to_string(c);
  }
  return out;
}

} // namespace

std::string render_transport_text(const TrivialSourceBlockData& data) {
  std::string out =
      std::string("morita class ") + to_string(data.morita_class) + "\n";
  std::vector<std::vector<std::string>> rows;
  for (const TrivialSourceRow& r : data.rows) {
    std::string extra;
    if (r.local_label) extra = "local " + std::to_string(*r.local_label);
    if (!r.attached_classes.empty())
      extra = "classes " + attached_text(r);
    rows.push_back({to_string(r.vertex), block_char_label(r.coeffs), extra});
  }
  return out + aligned(rows);
}

std::string render_transport_csv(const TrivialSourceBlockData& data) {
  std::string out = "vertex,character,attached_classes,local_label\n";
  for (const TrivialSourceRow& r : data.rows)
    out += csv_join({to_string(r.vertex), block_char_label(r.coeffs),
                     attached_text(r),
                     r.local_label ? std::to_string(*r.local_label) : ""});
  return out;
}

// --- trivial source character tables --------------------------------------

std::string render_tsct_text(const TSCTable& ts) {
  std::string out = "trivial source character table at p = 2\n";
  for (size_t v = 0; v < ts.vertices.size(); ++v)
    out += "Q" + std::to_string(v + 1) + ": order " +
           std::to_string(ts.vertices[v].order) + ", normalizer order " +
           std::to_string(ts.vertices[v].normalizer_order) + ", " +
           std::to_string(ts.vertices[v].num_columns) + " column" +
           (ts.vertices[v].num_columns == 1 ? "" : "s") + "\n";

  std::vector<std::string> slabels = tsct_column_labels(ts);
  auto with_bars = [&](const std::string& label,
                       const std::vector<std::string>& cells) {
    std::vector<std::string> row{label};
    int last_vertex = -1;
    for (size_t c = 0; c < cells.size(); ++c) {
      int v = ts.columns[c].vertex_index;
      if (v != last_vertex && last_vertex >= 0) row.push_back("|");
      last_vertex = v;
      row.push_back(cells[c]);
    }
    return row;
  };

  std::vector<std::string> qcells(ts.columns.size());
  for (size_t c = 0; c < ts.columns.size(); ++c) {
    int v = ts.columns[c].vertex_index;
    bool first = c == 0 || ts.columns[c - 1].vertex_index != v;
    qcells[c] = first ? "Q" + std::to_string(v + 1) : "";
  }

  std::vector<std::vector<std::string>> owned;
  owned.push_back(with_bars("", qcells));
  owned.push_back(with_bars("", slabels));
  bool w = false, h = false, y = false;
  std::vector<bool> rule_before(ts.rows.size() + 2, false);
  int last_vertex = -1;
  for (size_t r = 0; r < ts.rows.size(); ++r) {
    if (static_cast<int>(r) > 0 &&
        ts.rows[r].vertex_index != last_vertex)
      rule_before[owned.size()] = true;
    last_vertex = ts.rows[r].vertex_index;
    std::vector<std::string> cells;
    for (const CycNum& v : ts.entries[r]) {
      note_shorthand(v, w, h, y);
      cells.push_back(cyc_text(v));
    }
    owned.push_back(
        with_bars(character_label(ts, ts.rows[r].character), cells));
  }

  std::vector<const std::vector<std::string>*> rows;
  for (size_t i = 0; i < owned.size(); ++i) {
    if (i == 2) rows.push_back(nullptr);  // rule under the header
    else if (i < rule_before.size() && rule_before[i]) rows.push_back(nullptr);
    rows.push_back(&owned[i]);
  }
  out += aligned(rows);
  out += legend_line(w, h, y);
  return out;
}

std::string render_tsct_csv(const TSCTable& ts) {
  std::vector<std::string> slabels = tsct_column_labels(ts);
  std::vector<std::string> header{""};
  for (size_t c = 0; c < ts.columns.size(); ++c)
    header.push_back("Q" +
                     std::to_string(ts.columns[c].vertex_index + 1) + ":" +
                     slabels[c]);
  std::string out = csv_join(header);
  for (size_t r = 0; r < ts.rows.size(); ++r) {
    std::vector<std::string> cells{
        character_label(ts, ts.rows[r].character)};
    for (const CycNum& v : ts.entries[r]) cells.push_back(v.str());
    out += csv_join(cells);
  }
  return out;
}

// --- verification reports -------------------------------------------------

std::string render_report_text(const TSCTReport& report) {
  std::string out;
  int failed = 0;
  for (const TSCTCheck& c : report.checks) {
    if (c.pass) {
      out += "pass  " + c.name;
      if (!c.detail.empty()) out += " (" + c.detail + ")";
    } else {
      ++failed;
      out += "FAIL  " + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
    }
    out += "\n";
  }
  out += std::to_string(report.checks.size()) + " checks, " +
         (failed ? std::to_string(failed) + " failed" : "all passed") + "\n";
  return out;
}

} // namespace trivsrc
