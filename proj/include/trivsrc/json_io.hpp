#pragma once

#include "trivsrc/blocks.hpp"
#include "trivsrc/chartab.hpp"
#include "trivsrc/domestic.hpp"
#include "trivsrc/tsct.hpp"

#include <string>
#include <vector>

namespace trivsrc {

// JSON spellings of the library objects. Exports are deterministic (fixed
// key order, two-space indent, trailing newline), so that
// export -> import -> export is the identity on bytes. Imports throw
// ParseError on malformed or non-canonical input.

// {"n": conductor, "c": {"exponent": [num, den], ...}}. The coefficients
// must already be in the canonical basis of Q(zeta_n) with n reduced, or
// the import refuses them.
std::string cycnum_to_json(const CycNum& v);
CycNum cycnum_from_json(const std::string& text);

// {"degree": d, "generators": [[images...], ...]} with 1-based images.
// An optional "name" field is accepted and ignored.
std::string group_to_json(const PermGroup& g);
GroupPtr group_from_json(const std::string& text);

// {"order": |G|, "classes": [{"rep": [images...], "size": s,
// "elt_order": m}, ...], "irr": [[value, ...], ...]}. The imported table
// has no group attached; shape, degrees and row orthonormality are
// validated before it is accepted.
std::string char_table_to_json(const CharTable& t);
TablePtr char_table_from_json(const std::string& text);

// [{"irr": [...], "defect": d, "involution_class": col | null}, ...]
std::string blocks_to_json(const std::vector<Block>& blocks);
std::vector<Block> blocks_from_json(const std::string& text);

// {"degrees": [...], "involutions": [{"class": name,
// "values": [4 ints]}, ...], "fusion": "I" | "II" | "III"}
std::string block_input_to_json(const DomesticBlockInput& input);
DomesticBlockInput block_input_from_json(const std::string& text);

// {"morita_class": ..., "rows": [{"vertex": kind, "coeffs": [4 ints],
// "attached_classes": [...], "local_label": j | null}, ...]}
std::string transport_to_json(const TrivialSourceBlockData& data);
TrivialSourceBlockData transport_from_json(const std::string& text);

// {"vertices": [{"order": q, "normalizer_order": n,
// "p_prime_reps": [[images...], ...]}, ...],
//  "rows": [{"vertex": i, "char": {"row": coeff, ...},
//  "local": j | null}, ...], "entries": [[value, ...], ...]}
std::string tsct_to_json(const TSCTable& ts);
TSCTable tsct_from_json(const std::string& text);

// Whole-file helpers; ParseError when the file cannot be read or written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace trivsrc
