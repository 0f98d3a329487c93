#pragma once

#include "trivsrc/blocks.hpp"
#include "trivsrc/chartab.hpp"
#include "trivsrc/domestic.hpp"
#include "trivsrc/tsct.hpp"

#include <string>
#include <vector>

namespace trivsrc {

// Human-readable spelling of a cyclotomic value. Rationals print as
// themselves; values of conductor 3, 5, 9 or 15 are rewritten over the
// roots w = z(3), h = z(5) and y = z(9), matching the usual printed form
// of the tables (w^2, -h-h^4, ...); anything else falls back to the
// canonical "a+b*z(n)^k" string.
std::string cyc_text(const CycNum& v);

// Aligned plain-text table with GAP-style class headers (1a, 2a, 3b, ...)
// and a legend line for any shorthand roots that were used.
std::string render_char_table_text(const CharTable& t);
// One line per row; fields are the canonical CycNum strings.
std::string render_char_table_csv(const CharTable& t);

std::string render_blocks_text(const std::vector<Block>& blocks,
                               const CharTable& t);
std::string render_blocks_csv(const std::vector<Block>& blocks,
                              const CharTable& t);

// Rows of one transported block over the abstract block characters
// chi_a, chi_b, chi_g, chi_d (input order).
std::string render_transport_text(const TrivialSourceBlockData& data);
std::string render_transport_csv(const TrivialSourceBlockData& data);

// Block layout: columns grouped per vertex and separated by bars, rows
// labelled by their ordinary characters.
std::string render_tsct_text(const TSCTable& ts);
std::string render_tsct_csv(const TSCTable& ts);

// One line per verification check plus a summary line.
std::string render_report_text(const TSCTReport& report);

} // namespace trivsrc
