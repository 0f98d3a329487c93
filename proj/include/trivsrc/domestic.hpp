#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace trivsrc {

// Splendid Morita class of a block with a Klein four defect group.
enum class MoritaClass { KV4, KA4, KA5 };

// Number of distinct conjugacy classes the three involutions of the defect
// group fall into (1, 2 or 3).
enum class FusionCase { I, II, III };

enum class VertexKind { Trivial, C2, Maximal };

const char* to_string(MoritaClass mc);
const char* to_string(FusionCase fc);
const char* to_string(VertexKind vk);

// Values of the four block characters at one class of involutions meeting
// the defect group.
struct InvolutionValues {
  std::string class_name;
  std::array<long, 4> values;
};

// Character-level data of a Klein-four-defect block. This is deliberately
// group-free: the four degrees and the involution values determine
// everything below, whether they come from one of our tables or from an
// ingested one.
struct DomesticBlockInput {
  std::array<long, 4> degrees;
  std::vector<InvolutionValues> involutions;  // may be empty when only the
                                              // degrees are needed
  FusionCase fusion = FusionCase::III;
};

// Degree pattern test: sorted a <= b <= c <= d, all equal means KV4,
// (a,a,a,3a) means KA4, d = b + c - a with b > a means KA5.
MoritaClass classify_morita_class(const std::array<long, 4>& degrees);

// Solution of the sign analysis for a block in the KV4 class. Rows of
// `signs` follow the input character order; the matrix is a row permutation
// of
//   (+1 +1 +1 / +1 -1 -1 / -1 +1 -1 / -1 -1 +1),
// and alpha_index is the character holding the all-positive row.
// column_class maps each sign column to the index of the involution class
// it evaluates (case I: all the same class; case II: the lone class, then
// the fused one twice; case III: one class per column). Reconstruction:
// the value of character i at class c equals the sum of signs[i][j] * n[j]
// over the columns j with column_class[j] == c.
struct Brauer7BSolution {
  std::array<long, 3> n;
  std::array<std::array<int, 3>, 4> signs;
  int alpha_index = 0;
  std::array<int, 3> column_class;
};

// Finds the unique decomposition of the involution values into signed sums
// of three positive integers. Throws ClassifyError when no assignment is
// consistent or when several inequivalent ones are (equivalent means equal
// up to permuting columns within one involution class).
Brauer7BSolution brauer_7B_solve(const DomesticBlockInput& input);

// One trivial source module of the block, described by its vertex size and
// the coefficients of its ordinary character over the four block characters.
struct TrivialSourceRow {
  VertexKind vertex = VertexKind::Trivial;
  std::array<int, 4> coeffs{};
  std::vector<int> attached_classes;     // C2 rows: involution classes where
                                         // the character is positive
  std::optional<int> local_label;        // maximal rows: index of the local
                                         // simple, unique up to the allowed
                                         // relabelling
};

struct TrivialSourceBlockData {
  MoritaClass morita_class = MoritaClass::KV4;
  std::vector<TrivialSourceRow> rows;
};

// Ordinary characters of all trivial source modules of the block, from
// character data alone. Row order: maximal vertex rows first, then the C2
// rows, then the projective covers.
//   KV4: chi_a; chi_a+chi_b, chi_a+chi_g, chi_a+chi_d; sum of all four.
//        (five rows; a is the all-positive row of the sign analysis, the
//        C2 partners are taken in ascending character order)
//   KA4: chi_a, chi_b, chi_g; sum of all four; chi_a+chi_d, chi_b+chi_d,
//        chi_g+chi_d. (d is the degree-3a character)
//   KA5: chi_a, chi_d, chi_d; chi_a+chi_d; sum of all four, chi_g+chi_d,
//        chi_b+chi_d. (a minimal degree, d maximal degree)
// When involution values are supplied the outputs are cross-checked:
// maximal rows positive, every row non-negative, projective rows zero.
TrivialSourceBlockData transport_kV4(const DomesticBlockInput& input);
TrivialSourceBlockData transport_kA4(const DomesticBlockInput& input);
TrivialSourceBlockData transport_kA5(const DomesticBlockInput& input);

// Dispatches on classify_morita_class(input.degrees).
TrivialSourceBlockData transport_block(const DomesticBlockInput& input);

} // namespace trivsrc
