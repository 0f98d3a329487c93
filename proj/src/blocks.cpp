#include "trivsrc/blocks.hpp"

#include "trivsrc/errors.hpp"
#include "trivsrc/gf2m.hpp"

#include <algorithm>
#include <map>

namespace trivsrc {

namespace {

int nu2(long n) {
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

// Reduce an algebraic integer in Q(zeta_exponent) into F_{2^d} through
// zeta_exponent -> zm^w with zm of order m and w = (2^b)^{-1} mod m.
struct Embedding {
  GF2m field;
  long exponent;
  long m;        // odd part of the exponent
  long zeta_exp; // image exponent w such that zeta_exponent -> zm^w
  unsigned zm;

  explicit Embedding(long exp_of_group)
      : field(field_degree(exp_of_group)), exponent(exp_of_group) {
    long b2 = 1;
    m = exp_of_group;
    while (m % 2 == 0) {
      m /= 2;
      b2 *= 2;
    }
    unsigned gamma = field.primitive_element();
    zm = field.pow(gamma, (static_cast<long long>(field.field_order()) - 1) / m);
    long w = 1 % m;
    while ((b2 * w) % m != 1 % m) ++w;
    zeta_exp = w;
  }

  static int field_degree(long exp_of_group) {
    long m = exp_of_group;
    while (m % 2 == 0) m /= 2;
    if (m == 1) return 1;
    int d = 1;
    long pow2 = 2 % m;
    while (pow2 != 1 % m) {
      pow2 = pow2 * 2 % m;
      if (++d > 12)
        throw ScopeError("odd part of the exponent needs a field beyond 2^12");
    }
    return d;
  }

  unsigned reduce(const CycNum& x) const {
    unsigned acc = 0;
    const long n = x.conductor();
    for (const auto& [e, c] : x.coeffs()) {
      if (!rat_is_integer(c))
        throw StructureError("central character is not an algebraic integer");
      if (rat_num(c) % 2 == 0) continue;
      // zeta_n^e = zeta_exponent^{(exponent/n) e} -> zm^{w (exponent/n) e}
      long long k = static_cast<long long>(zeta_exp) * (exponent / n) % m * e % m;
      acc = field.add(acc, field.pow(zm, k));
    }
    return acc;
  }
};

} // namespace

int block_defect(const std::vector<int>& irr_indices, const CharTable& t) {
  int min_v = nu2(t.group_order);
  for (int row : irr_indices) min_v = std::min(min_v, nu2(t.degree(row)));
  return nu2(t.group_order) - min_v;
}

std::vector<Block> block_partition(const TablePtr& t) {
  const int n = t->num_classes();
  const int rows = static_cast<int>(t->irr.size());
  Embedding emb(t->table_exponent());

  std::map<std::vector<unsigned>, std::vector<int>> by_fingerprint;
  std::vector<const std::vector<int>*> order; // first-seen fingerprints
  for (int i = 0; i < rows; ++i) {
    std::vector<unsigned> fp(n);
    for (int c = 0; c < n; ++c) fp[c] = emb.reduce(central_character(*t, i, c));
    auto [it, fresh] = by_fingerprint.emplace(std::move(fp), std::vector<int>{});
    it->second.push_back(i);
    if (fresh) order.push_back(&it->second);
  }

  int trivial_row = -1;
  for (int i = 0; i < rows; ++i) {
    bool ones = true;
    for (const CycNum& v : t->irr[i])
      if (v != CycNum(1)) ones = false;
    if (ones) {
      trivial_row = i;
      break;
    }
  }
  if (trivial_row < 0) throw StructureError("table has no trivial character");

  std::vector<Block> blocks;
  for (const std::vector<int>* members : order) {
    Block b;
    b.irr_indices = *members;
    b.defect = block_defect(b.irr_indices, *t);
    blocks.push_back(std::move(b));
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [&](const Block& x, const Block& y) {
                     bool px = std::count(x.irr_indices.begin(),
                                          x.irr_indices.end(), trivial_row);
                     bool py = std::count(y.irr_indices.begin(),
                                          y.irr_indices.end(), trivial_row);
                     if (px != py) return px;
                     return x.irr_indices.front() < y.irr_indices.front();
                   });

  for (Block& b : blocks)
    if (b.defect == 1 && b.irr_indices.size() == 2)
      b.involution_class = defect1_trivial_source_rows(b, t).involution_col;
  return blocks;
}

Defect1Rows defect1_trivial_source_rows(const Block& b, const TablePtr& t) {
  if (b.irr_indices.size() != 2)
    throw StructureError("defect-1 block does not have exactly two characters");
  const int ra = b.irr_indices[0], rb = b.irr_indices[1];

  int positive_col = -1, positive_row = -1;
  for (int c = 0; c < t->num_classes(); ++c) {
    if (t->classes[c].order != 2) continue;
    for (int row : {ra, rb}) {
      std::optional<long long> val = t->irr[row][c].try_integer();
      if (!val)
        throw StructureError("defect-1 character value at an involution class "
                             "is not a rational integer");
      if (*val > 0) {
        if (positive_col >= 0 && (positive_col != c || positive_row != row))
          throw StructureError("defect-1 block is positive at two involution "
                               "classes");
        positive_col = c;
        positive_row = row;
      }
    }
  }
  if (positive_col < 0)
    throw StructureError("defect-1 block has no positive involution value");

  Defect1Rows out;
  out.simple_char = VirtualCharacter{t, {{positive_row, 1}}};
  out.pim_char = VirtualCharacter{t, {{ra, 1}, {rb, 1}}};
  out.involution_col = positive_col;
  return out;
}

} // namespace trivsrc
