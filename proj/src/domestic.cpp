#include "trivsrc/domestic.hpp"

#include "trivsrc/errors.hpp"

#include <algorithm>
#include <map>

namespace trivsrc {

namespace {

// The reference sign matrix; every valid assignment is a row permutation.
constexpr int kSignRow[4][3] = {
    {+1, +1, +1}, {+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}};

int expected_classes(FusionCase fc) {
  switch (fc) {
    case FusionCase::I: return 1;
    case FusionCase::II: return 2;
    default: return 3;
  }
}

struct SignCandidate {
  std::array<long, 3> n{};
  std::array<int, 4> row_of_char{};  // index into kSignRow per character
  std::array<int, 3> column_class{};
};

Brauer7BSolution to_solution(const SignCandidate& c) {
  Brauer7BSolution s;
  s.n = c.n;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) s.signs[i][j] = kSignRow[c.row_of_char[i]][j];
    if (c.row_of_char[i] == 0) s.alpha_index = i;
  }
  s.column_class = c.column_class;
  return s;
}

std::vector<long> serialize(const Brauer7BSolution& s) {
  std::vector<long> key(s.n.begin(), s.n.end());
  for (const auto& row : s.signs) key.insert(key.end(), row.begin(), row.end());
  key.push_back(s.alpha_index);
  key.insert(key.end(), s.column_class.begin(), s.column_class.end());
  return key;
}

// Solutions differing only by a column permutation within one involution
// class describe the same decomposition. Normal form: the serialization
// minimum over the allowed permutations.
Brauer7BSolution canonicalize(const SignCandidate& c) {
  Brauer7BSolution base = to_solution(c);
  Brauer7BSolution best = base;
  std::vector<long> best_key = serialize(base);
  std::array<int, 3> perm = {0, 1, 2};
  do {
    bool allowed = true;
    for (int j = 0; j < 3; ++j)
      if (base.column_class[perm[j]] != base.column_class[j]) allowed = false;
    if (!allowed) continue;
    Brauer7BSolution cand = base;
    for (int j = 0; j < 3; ++j) {
      cand.n[j] = base.n[perm[j]];
      for (int i = 0; i < 4; ++i) cand.signs[i][j] = base.signs[i][perm[j]];
    }
    std::vector<long> key = serialize(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void collect_case_I(const std::array<long, 4>& v,
                    const std::array<int, 4>& row_of_char,
                    std::vector<SignCandidate>& out) {
  std::array<int, 4> char_of_row{};
  for (int i = 0; i < 4; ++i) char_of_row[row_of_char[i]] = i;
  const long va = v[char_of_row[0]];
  SignCandidate c;
  c.row_of_char = row_of_char;
  c.column_class = {0, 0, 0};
  for (int j = 0; j < 3; ++j) {
    // characters on rows 0 and j+1 share the + sign in column j
    long twice = va + v[char_of_row[j + 1]];
    if (twice % 2 != 0 || twice <= 0) return;
    c.n[j] = twice / 2;
  }
  for (int i = 0; i < 4; ++i) {
    long val = 0;
    for (int j = 0; j < 3; ++j) val += kSignRow[row_of_char[i]][j] * c.n[j];
    if (val != v[i]) return;
  }
  out.push_back(c);
}

void collect_case_II(const std::array<long, 4>& lone,
                     const std::array<long, 4>& fused, int lone_class,
                     int fused_class, const std::array<int, 4>& row_of_char,
                     std::vector<SignCandidate>& out) {
  std::array<int, 4> char_of_row{};
  for (int i = 0; i < 4; ++i) char_of_row[row_of_char[i]] = i;
  SignCandidate c;
  c.row_of_char = row_of_char;
  c.column_class = {lone_class, fused_class, fused_class};
  c.n[0] = kSignRow[row_of_char[0]][0] * lone[0];
  if (c.n[0] <= 0) return;
  for (int i = 0; i < 4; ++i)
    if (lone[i] != kSignRow[row_of_char[i]][0] * c.n[0]) return;
  // columns 2 and 3 act on the fused class; rows 0..3 carry the sign pairs
  // (+,+), (-,-), (+,-), (-,+) there
  const long sum = fused[char_of_row[0]];
  const long diff = fused[char_of_row[2]];
  if (fused[char_of_row[1]] != -sum || fused[char_of_row[3]] != -diff) return;
  if ((sum + diff) % 2 != 0) return;
  c.n[1] = (sum + diff) / 2;
  c.n[2] = (sum - diff) / 2;
  if (c.n[1] <= 0 || c.n[2] <= 0) return;
  out.push_back(c);
}

void collect_case_III(const std::vector<InvolutionValues>& classes,
                      const std::array<int, 4>& row_of_char,
                      std::vector<SignCandidate>& out) {
  SignCandidate c;
  c.row_of_char = row_of_char;
  c.column_class = {0, 1, 2};
  for (int j = 0; j < 3; ++j) {
    c.n[j] = kSignRow[row_of_char[0]][j] * classes[j].values[0];
    if (c.n[j] <= 0) return;
    for (int i = 0; i < 4; ++i)
      if (classes[j].values[i] != kSignRow[row_of_char[i]][j] * c.n[j]) return;
  }
  out.push_back(c);
}

long row_value(const DomesticBlockInput& in, const std::array<int, 4>& coeffs,
               size_t cls) {
  long s = 0;
  for (int i = 0; i < 4; ++i) s += coeffs[i] * in.involutions[cls].values[i];
  return s;
}

// Attaches C2 rows to the involution classes where they are positive and
// cross-checks the sign constraints every trivial source character obeys.
void attach_involution_classes(const DomesticBlockInput& in,
                               TrivialSourceBlockData& data) {
  if (in.involutions.empty()) return;
  for (TrivialSourceRow& row : data.rows) {
    for (size_t c = 0; c < in.involutions.size(); ++c) {
      const long val = row_value(in, row.coeffs, c);
      switch (row.vertex) {
        case VertexKind::Maximal:
          if (val <= 0)
            throw StructureError(
                "maximal vertex character is not positive at an involution "
                "class");
          break;
        case VertexKind::C2:
          if (val < 0)
            throw StructureError(
                "trivial source character is negative at an involution class");
          if (val > 0) row.attached_classes.push_back(static_cast<int>(c));
          break;
        case VertexKind::Trivial:
          if (val != 0)
            throw StructureError(
                "projective character does not vanish at an involution class");
          break;
      }
    }
    if (row.vertex == VertexKind::C2 && row.attached_classes.empty())
      throw StructureError(
          "C2 vertex character vanishes at every involution class");
  }
}

TrivialSourceRow make_row(VertexKind vk, std::array<int, 4> coeffs,
                          std::optional<int> local = std::nullopt) {
  TrivialSourceRow r;
  r.vertex = vk;
  r.coeffs = coeffs;
  r.local_label = local;
  return r;
}

} // namespace

const char* to_string(MoritaClass mc) {
  switch (mc) {
    case MoritaClass::KV4: return "kV4";
    case MoritaClass::KA4: return "kA4";
    default: return "kA5";
  }
}

const char* to_string(FusionCase fc) {
  switch (fc) {
    case FusionCase::I: return "I";
    case FusionCase::II: return "II";
    default: return "III";
  }
}

const char* to_string(VertexKind vk) {
  switch (vk) {
    case VertexKind::Trivial: return "trivial";
    case VertexKind::C2: return "C2";
    default: return "maximal";
  }
}

MoritaClass classify_morita_class(const std::array<long, 4>& degrees) {
  for (long d : degrees)
    if (d <= 0) throw ClassifyError("character degrees must be positive");
  std::array<long, 4> s = degrees;
  std::sort(s.begin(), s.end());
  const long a = s[0], b = s[1], c = s[2], d = s[3];
  if (a == b && b == c && c == d) return MoritaClass::KV4;
  if (a == b && b == c && d == 3 * a) return MoritaClass::KA4;
  if (d == b + c - a && b > a) return MoritaClass::KA5;
  throw ClassifyError(
      "degrees do not match any Klein four defect block pattern");
}

Brauer7BSolution brauer_7B_solve(const DomesticBlockInput& input) {
  const int want = expected_classes(input.fusion);
  if (static_cast<int>(input.involutions.size()) != want)
    throw ClassifyError("fusion case " + std::string(to_string(input.fusion)) +
                        " needs exactly " + std::to_string(want) +
                        " involution class(es), got " +
                        std::to_string(input.involutions.size()));

  std::vector<SignCandidate> candidates;
  std::array<int, 4> row_of_char = {0, 1, 2, 3};
  std::sort(row_of_char.begin(), row_of_char.end());
  do {
    switch (input.fusion) {
      case FusionCase::I:
        collect_case_I(input.involutions[0].values, row_of_char, candidates);
        break;
      case FusionCase::II:
        collect_case_II(input.involutions[0].values, input.involutions[1].values,
                        0, 1, row_of_char, candidates);
        collect_case_II(input.involutions[1].values, input.involutions[0].values,
                        1, 0, row_of_char, candidates);
        break;
      case FusionCase::III:
        collect_case_III(input.involutions, row_of_char, candidates);
        break;
    }
  } while (std::next_permutation(row_of_char.begin(), row_of_char.end()));

  std::map<std::vector<long>, Brauer7BSolution> classes;
  for (const SignCandidate& c : candidates) {
    Brauer7BSolution s = canonicalize(c);
    classes.emplace(serialize(s), s);
  }
  if (classes.empty())
    throw ClassifyError(
        "involution values admit no consistent sign decomposition");
  if (classes.size() > 1)
    throw ClassifyError(
        "involution values admit inequivalent sign decompositions; refusing "
        "to pick one");
  return classes.begin()->second;
}

TrivialSourceBlockData transport_kV4(const DomesticBlockInput& input) {
  if (classify_morita_class(input.degrees) != MoritaClass::KV4)
    throw ClassifyError("degrees are not in the kV4 class");
  Brauer7BSolution sol = brauer_7B_solve(input);
  const int alpha = sol.alpha_index;

  TrivialSourceBlockData data;
  data.morita_class = MoritaClass::KV4;
  std::array<int, 4> unit{};
  unit[alpha] = 1;
  data.rows.push_back(make_row(VertexKind::Maximal, unit, 0));
  for (int j = 0; j < 4; ++j) {
    if (j == alpha) continue;
    std::array<int, 4> coeffs{};
    coeffs[alpha] = 1;
    coeffs[j] = 1;
    data.rows.push_back(make_row(VertexKind::C2, coeffs));
  }
  data.rows.push_back(make_row(VertexKind::Trivial, {1, 1, 1, 1}));
  attach_involution_classes(input, data);
  return data;
}

TrivialSourceBlockData transport_kA4(const DomesticBlockInput& input) {
  if (classify_morita_class(input.degrees) != MoritaClass::KA4)
    throw ClassifyError("degrees are not in the kA4 class");
  const long top = *std::max_element(input.degrees.begin(), input.degrees.end());
  int delta = -1;
  std::vector<int> small;
  for (int i = 0; i < 4; ++i) {
    if (input.degrees[i] == top)
      delta = i;
    else
      small.push_back(i);
  }
  TrivialSourceBlockData data;
  data.morita_class = MoritaClass::KA4;
  for (int idx = 0; idx < 3; ++idx) {
    std::array<int, 4> unit{};
    unit[small[idx]] = 1;
    data.rows.push_back(make_row(VertexKind::Maximal, unit, idx));
  }
  data.rows.push_back(make_row(VertexKind::C2, {1, 1, 1, 1}));
  for (int idx = 0; idx < 3; ++idx) {
    std::array<int, 4> coeffs{};
    coeffs[small[idx]] = 1;
    coeffs[delta] = 1;
    data.rows.push_back(make_row(VertexKind::Trivial, coeffs));
  }
  attach_involution_classes(input, data);
  return data;
}

TrivialSourceBlockData transport_kA5(const DomesticBlockInput& input) {
  if (classify_morita_class(input.degrees) != MoritaClass::KA5)
    throw ClassifyError("degrees are not in the kA5 class");
  const auto [lo, hi] =
      std::minmax_element(input.degrees.begin(), input.degrees.end());
  const int alpha = static_cast<int>(lo - input.degrees.begin());
  const int delta = static_cast<int>(hi - input.degrees.begin());
  std::vector<int> mid;
  for (int i = 0; i < 4; ++i)
    if (i != alpha && i != delta) mid.push_back(i);
  const int beta = mid[0], gamma = mid[1];

  std::array<int, 4> e_alpha{}, e_delta{};
  e_alpha[alpha] = 1;
  e_delta[delta] = 1;
  std::array<int, 4> c2 = e_alpha;
  c2[delta] = 1;
  std::array<int, 4> pim_gamma{}, pim_beta{};
  pim_gamma[gamma] = pim_gamma[delta] = 1;
  pim_beta[beta] = pim_beta[delta] = 1;

  TrivialSourceBlockData data;
  data.morita_class = MoritaClass::KA5;
  data.rows.push_back(make_row(VertexKind::Maximal, e_alpha, 0));
  data.rows.push_back(make_row(VertexKind::Maximal, e_delta, 1));
  data.rows.push_back(make_row(VertexKind::Maximal, e_delta, 2));
  data.rows.push_back(make_row(VertexKind::C2, c2));
  data.rows.push_back(make_row(VertexKind::Trivial, {1, 1, 1, 1}));
  data.rows.push_back(make_row(VertexKind::Trivial, pim_gamma));
  data.rows.push_back(make_row(VertexKind::Trivial, pim_beta));
  attach_involution_classes(input, data);
  return data;
}

TrivialSourceBlockData transport_block(const DomesticBlockInput& input) {
  switch (classify_morita_class(input.degrees)) {
    case MoritaClass::KV4: return transport_kV4(input);
    case MoritaClass::KA4: return transport_kA4(input);
    default: return transport_kA5(input);
  }
}

} // namespace trivsrc
