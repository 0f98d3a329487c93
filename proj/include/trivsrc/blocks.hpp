#pragma once

#include "trivsrc/chartab.hpp"

#include <optional>
#include <vector>

namespace trivsrc {

// 2-block of the ordinary irreducible characters.
struct Block {
  std::vector<int> irr_indices;            // ascending table row indices
  int defect = 0;
  std::optional<int> involution_class;     // column of the defect involution
                                           // (filled for two-character
                                           // defect-1 blocks)
};

// Characters fall in the same 2-block iff their central characters agree on
// every class after reduction into F_{2^d} (d minimal with m | 2^d - 1, m the
// odd part of the exponent) under a fixed embedding with zeta_m mapped to a
// power of the smallest primitive element and 2-power roots mapped to 1.
// The principal block (the trivial character's) comes first, the rest are
// ordered by smallest row index.
std::vector<Block> block_partition(const TablePtr& t);

// nu_2(|G|) minus the smallest nu_2 of a degree in the block.
int block_defect(const std::vector<int>& irr_indices, const CharTable& t);

// Trivial source data of a defect-1 block per the Brauer-tree picture: the
// projective cover character is the sum of the two ordinary characters, and
// the simple module's character is the one taking a positive value at the
// (unique) class of the involutions generating the defect groups.
struct Defect1Rows {
  VirtualCharacter simple_char;
  VirtualCharacter pim_char;
  int involution_col;
};
Defect1Rows defect1_trivial_source_rows(const Block& b, const TablePtr& t);

} // namespace trivsrc
