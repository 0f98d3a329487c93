#include "trivsrc/json_io.hpp"

#include "trivsrc/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace trivsrc {
namespace {

// Insertion order is preserved, so exports control their byte layout.
using json = nlohmann::ordered_json;

json parse_doc(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object())
    throw ParseError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

long long get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw ParseError(what + " must be an integer");
  return j.get<long long>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- permutations ---------------------------------------------------------

json perm_to_json(const Perm& p) { return json(p.images_1based()); }

Perm perm_from_json(const json& j, int degree) {
  if (!j.is_array() || static_cast<int>(j.size()) != degree)
    throw ParseError("permutation must list " + std::to_string(degree) +
                     " images");
  std::vector<int> images(degree);
  std::vector<char> seen(degree, 0);
  for (int i = 0; i < degree; ++i) {
    long long v = get_int(j[i], "permutation image");
    if (v < 1 || v > degree || seen[v - 1])
      throw ParseError("images are not a permutation of 1.." +
                       std::to_string(degree));
    seen[v - 1] = 1;
    images[i] = static_cast<int>(v);
  }
  return Perm::from_images_1based(images);
}

// --- cyclotomic numbers ---------------------------------------------------

json cyc_to_obj(const CycNum& v) {
  json c = json::object();
  for (const auto& [e, r] : v.coeffs())
    c[std::to_string(e)] = json::array({static_cast<long long>(rat_num(r)),
                                        static_cast<long long>(rat_den(r))});
  return json{{"n", v.conductor()}, {"c", std::move(c)}};
}

// The file's coefficients replayed through the export layout, for the
// canonical-form comparison below.
json cyc_to_obj_raw(long long n, const json& c) {
  json out = json::object();
  std::map<long long, const json*> ordered;
  for (const auto& [key, val] : c.items()) ordered[std::stoll(key)] = &val;
  for (const auto& [e, val] : ordered) out[std::to_string(e)] = *val;
  return json{{"n", n}, {"c", std::move(out)}};
}

CycNum cyc_from_obj(const json& j) {
  long long n = get_int(field(j, "n"), "conductor");
  if (n < 1) throw ParseError("conductor must be positive");
  const json& c = field(j, "c");
  if (!c.is_object()) throw ParseError("\"c\" must be an object");
  std::map<long long, Rat> coeffs;
  for (const auto& [key, val] : c.items()) {
    long long e = 0;
    try {
      size_t pos = 0;
      e = std::stoll(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("bad exponent key \"" + key + "\"");
    }
    if (key != std::to_string(e))
      throw ParseError("exponent key \"" + key + "\" is not canonical");
    if (!val.is_array() || val.size() != 2)
      throw ParseError("coefficient must be a [num, den] pair");
    long long num = get_int(val[0], "numerator");
    long long den = get_int(val[1], "denominator");
    if (den <= 0) throw ParseError("denominator must be positive");
    if (!coeffs.emplace(e, Rat(Int(num), Int(den))).second)
      throw ParseError("duplicate exponent " + std::to_string(e));
  }
  CycNum v = CycNum::from_coeffs(n, coeffs);
  // from_coeffs re-canonicalizes; anything it changed was not canonical in
  // the file (reducible conductor, out-of-basis exponent, unreduced
  // fraction), which the format forbids.
  if (cyc_to_obj(v).dump() != cyc_to_obj_raw(n, c).dump())
    throw ParseError("cyclotomic value is not in canonical form");
  return v;
}

} // namespace

std::string cycnum_to_json(const CycNum& v) { return dump(cyc_to_obj(v)); }

CycNum cycnum_from_json(const std::string& text) {
  return cyc_from_obj(parse_doc(text));
}

// --- groups ---------------------------------------------------------------

std::string group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const Perm& p : g.generators()) gens.push_back(perm_to_json(p));
  return dump(json{{"degree", g.degree()}, {"generators", std::move(gens)}});
}

GroupPtr group_from_json(const std::string& text) {
  json j = parse_doc(text);
  long long degree = get_int(field(j, "degree"), "degree");
  if (degree < 1 || degree > 100000)
    throw ParseError("degree out of range");
  const json& gens = field(j, "generators");
  if (!gens.is_array() || gens.empty())
    throw ParseError("\"generators\" must be a non-empty array");
  std::vector<Perm> perms;
  for (const json& g : gens)
    perms.push_back(perm_from_json(g, static_cast<int>(degree)));
  return PermGroup::from_generators(static_cast<int>(degree),
                                    std::move(perms));
}

// --- character tables -----------------------------------------------------

namespace {

Perm class_rep_perm(const CharTable& t, int col) {
  if (t.group) return t.group->element(t.classes[col].rep);
  if (col < static_cast<int>(t.class_rep_perms.size()))
    return t.class_rep_perms[col];
  throw StructureError("table has neither a group nor stored class reps");
}

} // namespace

std::string char_table_to_json(const CharTable& t) {
  json classes = json::array();
  for (int c = 0; c < t.num_classes(); ++c)
    classes.push_back(json{{"rep", perm_to_json(class_rep_perm(t, c))},
                           {"size", t.classes[c].size},
                           {"elt_order", t.classes[c].order}});
  json irr = json::array();
  for (const auto& row : t.irr) {
    json r = json::array();
    for (const CycNum& v : row) r.push_back(cyc_to_obj(v));
    irr.push_back(std::move(r));
  }
  return dump(json{{"order", t.group_order},
                   {"classes", std::move(classes)},
                   {"irr", std::move(irr)}});
}

TablePtr char_table_from_json(const std::string& text) {
  json j = parse_doc(text);
  auto t = std::make_shared<CharTable>();
  t->group_order = get_int(field(j, "order"), "group order");
  if (t->group_order < 1) throw ParseError("group order must be positive");

  const json& classes = field(j, "classes");
  if (!classes.is_array() || classes.empty())
    throw ParseError("\"classes\" must be a non-empty array");
  int degree = -1;
  int identity_cols = 0;
  for (const json& c : classes) {
    const json& rep = field(c, "rep");
    if (degree < 0) {
      if (!rep.is_array() || rep.empty())
        throw ParseError("class rep must be a non-empty image list");
      degree = static_cast<int>(rep.size());
    }
    Perm p = perm_from_json(rep, degree);
    long long size = get_int(field(c, "size"), "class size");
    long long order = get_int(field(c, "elt_order"), "element order");
    if (size < 1) throw ParseError("class size must be positive");
    if (p.order() != order)
      throw ParseError("class rep order disagrees with elt_order");
    if (order == 1) ++identity_cols;
    t->classes.push_back({-1, static_cast<long>(size),
                          static_cast<long>(order)});
    t->class_rep_perms.push_back(std::move(p));
  }
  if (identity_cols != 1)
    throw ParseError("table needs exactly one identity class");

  const json& irr = field(j, "irr");
  if (!irr.is_array())
    throw ParseError("\"irr\" must be an array of rows");
  for (const json& row : irr) {
    if (!row.is_array() || row.size() != classes.size())
      throw ParseError("character row length disagrees with the classes");
    std::vector<CycNum> r;
    for (const json& v : row) r.push_back(cyc_from_obj(v));
    t->irr.push_back(std::move(r));
  }
  for (size_t i = 1; i <= t->irr.size(); ++i)
    t->names.push_back("chi_" + std::to_string(i));

  try {
    validate_character_table(*t);
  } catch (const StructureError& e) {
    throw ParseError(std::string("character table rejected: ") + e.what());
  }
  return t;
}

// --- block reports --------------------------------------------------------

std::string blocks_to_json(const std::vector<Block>& blocks) {
  json out = json::array();
  for (const Block& b : blocks) {
    json jb{{"irr", b.irr_indices}, {"defect", b.defect}};
    jb["involution_class"] =
        b.involution_class ? json(*b.involution_class) : json(nullptr);
    out.push_back(std::move(jb));
  }
  return dump(out);
}

std::vector<Block> blocks_from_json(const std::string& text) {
  json j = parse_doc(text);
  if (!j.is_array()) throw ParseError("block report must be an array");
  std::vector<Block> out;
  for (const json& jb : j) {
    Block b;
    const json& irr = field(jb, "irr");
    if (!irr.is_array() || irr.empty())
      throw ParseError("\"irr\" must be a non-empty array");
    for (const json& v : irr)
      b.irr_indices.push_back(static_cast<int>(get_int(v, "character index")));
    b.defect = static_cast<int>(get_int(field(jb, "defect"), "defect"));
    const json& inv = field(jb, "involution_class");
    if (!inv.is_null())
      b.involution_class = static_cast<int>(get_int(inv, "involution class"));
    out.push_back(std::move(b));
  }
  return out;
}

// --- block inputs and transported rows ------------------------------------

namespace {

FusionCase fusion_from_string(const std::string& s) {
  for (FusionCase f : {FusionCase::I, FusionCase::II, FusionCase::III})
    if (s == to_string(f)) return f;
  throw ParseError("fusion must be \"I\", \"II\" or \"III\"");
}

MoritaClass morita_from_string(const std::string& s) {
  for (MoritaClass m : {MoritaClass::KV4, MoritaClass::KA4, MoritaClass::KA5})
    if (s == to_string(m)) return m;
  throw ParseError("unknown Morita class \"" + s + "\"");
}

VertexKind vertex_from_string(const std::string& s) {
  for (VertexKind v : {VertexKind::Trivial, VertexKind::C2,
                       VertexKind::Maximal})
    if (s == to_string(v)) return v;
  throw ParseError("unknown vertex kind \"" + s + "\"");
}

template <size_t N>
std::array<long, N> long_array(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N)
    throw ParseError(std::string(what) + " must list " + std::to_string(N) +
                     " integers");
  std::array<long, N> out{};
  for (size_t i = 0; i < N; ++i)
    out[i] = static_cast<long>(get_int(j[i], what));
  return out;
}

} // namespace

std::string block_input_to_json(const DomesticBlockInput& input) {
  json invs = json::array();
  for (const InvolutionValues& iv : input.involutions)
    invs.push_back(json{{"class", iv.class_name},
                        {"values", iv.values}});
  return dump(json{{"degrees", input.degrees},
                   {"involutions", std::move(invs)},
                   {"fusion", to_string(input.fusion)}});
}

DomesticBlockInput block_input_from_json(const std::string& text) {
  json j = parse_doc(text);
  DomesticBlockInput input;
  input.degrees = long_array<4>(field(j, "degrees"), "\"degrees\"");
  const json& invs = field(j, "involutions");
  if (!invs.is_array()) throw ParseError("\"involutions\" must be an array");
  for (const json& iv : invs) {
    const json& name = field(iv, "class");
    if (!name.is_string()) throw ParseError("class name must be a string");
    InvolutionValues v;
    v.class_name = name.get<std::string>();
    v.values = long_array<4>(field(iv, "values"), "\"values\"");
    input.involutions.push_back(std::move(v));
  }
  const json& fusion = field(j, "fusion");
  if (!fusion.is_string()) throw ParseError("\"fusion\" must be a string");
  input.fusion = fusion_from_string(fusion.get<std::string>());
  return input;
}

std::string transport_to_json(const TrivialSourceBlockData& data) {
  json rows = json::array();
  for (const TrivialSourceRow& r : data.rows) {
    json jr{{"vertex", to_string(r.vertex)},
            {"coeffs", r.coeffs},
            {"attached_classes", r.attached_classes}};
    jr["local_label"] = r.local_label ? json(*r.local_label) : json(nullptr);
    rows.push_back(std::move(jr));
  }
  return dump(json{{"morita_class", to_string(data.morita_class)},
                   {"rows", std::move(rows)}});
}

TrivialSourceBlockData transport_from_json(const std::string& text) {
  json j = parse_doc(text);
  TrivialSourceBlockData data;
  const json& mc = field(j, "morita_class");
  if (!mc.is_string()) throw ParseError("\"morita_class\" must be a string");
  data.morita_class = morita_from_string(mc.get<std::string>());
  const json& rows = field(j, "rows");
  if (!rows.is_array()) throw ParseError("\"rows\" must be an array");
  for (const json& jr : rows) {
    TrivialSourceRow r;
    const json& kind = field(jr, "vertex");
    if (!kind.is_string()) throw ParseError("vertex kind must be a string");
    r.vertex = vertex_from_string(kind.get<std::string>());
    std::array<long, 4> coeffs =
        long_array<4>(field(jr, "coeffs"), "\"coeffs\"");
    for (size_t i = 0; i < 4; ++i) r.coeffs[i] = static_cast<int>(coeffs[i]);
    const json& att = field(jr, "attached_classes");
    if (!att.is_array())
      throw ParseError("\"attached_classes\" must be an array");
    for (const json& v : att)
      r.attached_classes.push_back(
          static_cast<int>(get_int(v, "attached class")));
    const json& local = field(jr, "local_label");
    if (!local.is_null())
      r.local_label = static_cast<int>(get_int(local, "local label"));
    data.rows.push_back(std::move(r));
  }
  return data;
}

// --- trivial source character tables --------------------------------------

std::string tsct_to_json(const TSCTable& ts) {
  json vertices = json::array();
  for (size_t v = 0; v < ts.vertices.size(); ++v) {
    json reps = json::array();
    if (ts.group) {
      for (int c : ts.cols_with_vertex(static_cast<int>(v)))
        reps.push_back(perm_to_json(ts.group->element(ts.columns[c].rep)));
    } else {
      for (const Perm& p : ts.vertices[v].rep_perms)
        reps.push_back(perm_to_json(p));
    }
    if (static_cast<int>(reps.size()) != ts.vertices[v].num_columns)
      throw StructureError("table has no representatives for its columns");
    vertices.push_back(json{{"order", ts.vertices[v].order},
                            {"normalizer_order", ts.vertices[v].normalizer_order},
                            {"p_prime_reps", std::move(reps)}});
  }

  json rows = json::array();
  for (const TSCTRow& r : ts.rows) {
    json coeffs = json::object();
    for (const auto& [row, coeff] : r.character.coeffs)
      if (coeff != 0) coeffs[std::to_string(row)] = coeff;
    json jr{{"vertex", r.vertex_index}, {"char", std::move(coeffs)}};
    jr["local"] = r.local_label ? json(*r.local_label) : json(nullptr);
    rows.push_back(std::move(jr));
  }

  json entries = json::array();
  for (const auto& row : ts.entries) {
    json r = json::array();
    for (const CycNum& v : row) r.push_back(cyc_to_obj(v));
    entries.push_back(std::move(r));
  }

  return dump(json{{"vertices", std::move(vertices)},
                   {"rows", std::move(rows)},
                   {"entries", std::move(entries)}});
}

TSCTable tsct_from_json(const std::string& text) {
  json j = parse_doc(text);
  TSCTable ts;

  const json& vertices = field(j, "vertices");
  if (!vertices.is_array() || vertices.empty())
    throw ParseError("\"vertices\" must be a non-empty array");
  int degree = -1;
  for (const json& jv : vertices) {
    TSCTVertex v;
    v.order = static_cast<long>(get_int(field(jv, "order"), "vertex order"));
    v.normalizer_order = static_cast<long>(
        get_int(field(jv, "normalizer_order"), "normalizer order"));
    if (v.order < 1 || v.normalizer_order < 1)
      throw ParseError("vertex orders must be positive");
    const json& reps = field(jv, "p_prime_reps");
    if (!reps.is_array() || reps.empty())
      throw ParseError("every vertex needs at least one representative");
    for (const json& rp : reps) {
      if (degree < 0) {
        if (!rp.is_array() || rp.empty())
          throw ParseError("representative must be a non-empty image list");
        degree = static_cast<int>(rp.size());
      }
      v.rep_perms.push_back(perm_from_json(rp, degree));
    }
    v.num_columns = static_cast<int>(v.rep_perms.size());
    ts.vertices.push_back(std::move(v));
  }
  for (size_t v = 0; v < ts.vertices.size(); ++v)
    for (const Perm& p : ts.vertices[v].rep_perms)
      ts.columns.push_back({static_cast<int>(v), -1, p.cycle_str()});

  const json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty())
    throw ParseError("\"rows\" must be a non-empty array");
  for (const json& jr : rows) {
    TSCTRow r;
    r.vertex_index =
        static_cast<int>(get_int(field(jr, "vertex"), "row vertex"));
    if (r.vertex_index < 0 ||
        r.vertex_index >= static_cast<int>(ts.vertices.size()))
      throw ParseError("row vertex out of range");
    const json& coeffs = field(jr, "char");
    if (!coeffs.is_object())
      throw ParseError("\"char\" must map row indices to coefficients");
    for (const auto& [key, val] : coeffs.items()) {
      long long row = 0;
      try {
        row = std::stoll(key);
      } catch (const std::exception&) {
        throw ParseError("bad character key \"" + key + "\"");
      }
      if (row < 0 || key != std::to_string(row))
        throw ParseError("bad character key \"" + key + "\"");
      long long coeff = get_int(val, "character coefficient");
      if (coeff != 0)
        r.character.coeffs[static_cast<int>(row)] =
            static_cast<long>(coeff);
    }
    const json& local = field(jr, "local");
    if (!local.is_null())
      r.local_label = static_cast<int>(get_int(local, "local label"));
    ts.rows.push_back(std::move(r));
  }

  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != ts.rows.size())
    throw ParseError("\"entries\" must hold one row per character row");
  for (const json& row : entries) {
    if (!row.is_array() || row.size() != ts.columns.size())
      throw ParseError("entry row length disagrees with the columns");
    std::vector<CycNum> r;
    for (const json& v : row) r.push_back(cyc_from_obj(v));
    ts.entries.push_back(std::move(r));
  }
  return ts;
}

// --- files ----------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("cannot write " + path);
}

} // namespace trivsrc
