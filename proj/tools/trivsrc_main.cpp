#include "trivsrc/blocks.hpp"
#include "trivsrc/chartab.hpp"
#include "trivsrc/domestic.hpp"
#include "trivsrc/errors.hpp"
#include "trivsrc/json_io.hpp"
#include "trivsrc/permgroup.hpp"
#include "trivsrc/render.hpp"
#include "trivsrc/tsct.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>

namespace {

using namespace trivsrc;

struct Source {
  std::string builtin;
  std::string group_file;
  std::string table_file;
  long d4v = 0;
  bool closed_form = false;
};

void add_source_flags(CLI::App* cmd, Source& s, bool with_closed_form) {
  cmd->add_option("--builtin", s.builtin,
                  "builtin group: v4, a4, a5, d4v:<v>, ex972");
  cmd->add_option("--group", s.group_file, "group file (JSON)");
  cmd->add_option("--table", s.table_file, "data file (JSON)");
  cmd->add_option("--d4v", s.d4v, "dihedral group of order 4v, odd v >= 3");
  if (with_closed_form)
    cmd->add_flag("--closed-form", s.closed_form,
                  "use the closed-form dihedral table (with --d4v)");
}

void require_one_source(const Source& s) {
  int n = (s.builtin.empty() ? 0 : 1) + (s.group_file.empty() ? 0 : 1) +
          (s.table_file.empty() ? 0 : 1) + (s.d4v != 0 ? 1 : 0);
  if (n != 1)
    throw ParseError(
        "choose exactly one of --builtin, --group, --table, --d4v");
  if (s.closed_form && s.d4v == 0)
    throw ParseError("--closed-form requires --d4v");
}

// Ordinary character table for the chartab and blocks subcommands. Builtin
// v4/a4/a5 use the reference layout, the dihedral family its closed form,
// everything else goes through the generic computation.
TablePtr resolve_table(const Source& s) {
  if (!s.table_file.empty())
    return char_table_from_json(read_text_file(s.table_file));
  if (s.d4v != 0) return dihedral_character_table(s.d4v);
  if (!s.group_file.empty())
    return dixon_character_table(group_from_json(read_text_file(s.group_file)));
  if (s.builtin == "v4" || s.builtin == "a4" || s.builtin == "a5")
    return builtin_char_table(s.builtin);
  if (s.builtin.rfind("d4v:", 0) == 0)
    return dihedral_character_table(builtin_group(s.builtin)->order() / 4);
  return dixon_character_table(builtin_group(s.builtin));
}

// Trivial source character table for the tsct and verify subcommands.
// Everything except an imported file is assembled from scratch (so the
// builtin and file routes of the same group agree byte for byte); --d4v
// uses the closed-form character table, and --closed-form skips the
// assembly entirely.
TSCTable resolve_tsct(const Source& s) {
  if (!s.table_file.empty())
    return tsct_from_json(read_text_file(s.table_file));
  if (s.d4v != 0) {
    if (s.closed_form) return tsct_d4v(s.d4v);
    TablePtr t = dihedral_character_table(s.d4v);
    return assemble_tsct(t->group, t);
  }
  GroupPtr g = s.group_file.empty()
                   ? builtin_group(s.builtin)
                   : group_from_json(read_text_file(s.group_file));
  return assemble_tsct(g, dixon_character_table(g));
}

int run_chartab(const Source& s, const std::string& format,
                std::string& out) {
  TablePtr t = resolve_table(s);
  if (format == "json") out = char_table_to_json(*t);
  else if (format == "csv") out = render_char_table_csv(*t);
  else out = render_char_table_text(*t);
  return 0;
}

int run_blocks(const Source& s, const std::string& format, std::string& out) {
  TablePtr t = resolve_table(s);
  std::vector<Block> blocks = block_partition(t);
  if (format == "json") out = blocks_to_json(blocks);
  else if (format == "csv") out = render_blocks_csv(blocks, *t);
  else out = render_blocks_text(blocks, *t);
  return 0;
}

int run_tsct(const Source& s, const std::string& format, std::string& out) {
  TSCTable ts = resolve_tsct(s);
  TSCTReport report = verify_tsct(ts);
  if (!report.all_pass()) {
    for (const TSCTCheck& c : report.checks)
      if (!c.pass)
        std::fprintf(stderr, "verification failed: %s: %s\n", c.name.c_str(),
                     c.detail.c_str());
    return 1;
  }
  if (format == "json") out = tsct_to_json(ts);
  else if (format == "csv") out = render_tsct_csv(ts);
  else out = render_tsct_text(ts);
  return 0;
}

int run_verify(const Source& s, const std::string& format, std::string& out) {
  TSCTable ts = resolve_tsct(s);
  TSCTReport report = verify_tsct(ts);
  if (format == "json") {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const TSCTCheck& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass},
                        {"detail", c.detail}});
    nlohmann::ordered_json j{{"checks", std::move(checks)},
                             {"all_pass", report.all_pass()}};
    out = j.dump(2) + "\n";
  } else if (format == "csv") {
    out = "check,pass,detail\n";
    for (const TSCTCheck& c : report.checks)
      out += c.name + "," + (c.pass ? "yes" : "no") + "," + c.detail + "\n";
  } else {
    out = render_report_text(report);
  }
  return report.all_pass() ? 0 : 1;
}

int run_transport(const Source& s, const std::string& format,
                  std::string& out) {
  if (s.table_file.empty())
    throw ParseError("transport reads a block-input file; pass --table FILE");
  DomesticBlockInput input =
      block_input_from_json(read_text_file(s.table_file));
  TrivialSourceBlockData data = transport_block(input);
  if (format == "json") out = transport_to_json(data);
  else if (format == "csv") out = render_transport_csv(data);
  else out = render_transport_text(data);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"trivial source character tables of small groups at p = 2"};
  app.require_subcommand(1);

  Source sources[5];
  std::string formats[5] = {"text", "text", "text", "text", "text"};
  std::string outs[5];

  const char* names[5] = {"chartab", "blocks", "tsct", "transport", "verify"};
  const char* descs[5] = {
      "ordinary character table of a group",
      "2-block partition with defects",
      "trivial source character table",
      "trivial source characters of one block from character data",
      "structural checks on a trivial source character table"};
  CLI::App* cmds[5];
  for (int i = 0; i < 5; ++i) {
    cmds[i] = app.add_subcommand(names[i], descs[i]);
    bool closed_form = i == 2 || i == 4;
    add_source_flags(cmds[i], sources[i], closed_form);
    cmds[i]
        ->add_option("--format", formats[i], "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmds[i]->add_option("--out", outs[i], "write the output to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    int which = 0;
    for (int i = 0; i < 5; ++i)
      if (app.got_subcommand(cmds[i])) which = i;
    const Source& s = sources[which];
    if (which != 3) require_one_source(s);

    std::string out;
    int code = 0;
    switch (which) {
      case 0: code = run_chartab(s, formats[which], out); break;
      case 1: code = run_blocks(s, formats[which], out); break;
      case 2: code = run_tsct(s, formats[which], out); break;
      case 3: code = run_transport(s, formats[which], out); break;
      default: code = run_verify(s, formats[which], out); break;
    }
    if (!out.empty()) {
      if (outs[which].empty())
        std::fwrite(out.data(), 1, out.size(), stdout);
      else
        write_text_file(outs[which], out);
    }
    return code;
  } catch (const ScopeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const ClassifyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const Error& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
