// Command-line front end. Positions come from --n/--k (builds the family of
// all subsets of size <= k) or from a two-line position file via --input.
// Output is key=value lines, or one JSON object with --json; either way the
// value field is an exact decimal string, never rounded or truncated.
//
// Exit codes: 0 success, 2 malformed input, 3 illegal position or parameter,
// 4 resource cap exceeded, 5 involution reduction not applicable.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "downset/enumerate.hpp"
#include "downset/games.hpp"
#include "downset/linext.hpp"
#include "downset/textio.hpp"

namespace {

using nlohmann::json;
using namespace downset;

struct Output {
  bool as_json = false;
  bool with_stats = false;
  json record = json::object();

  void field(const std::string& key, const std::string& value) { record[key] = value; }
  void field(const std::string& key, std::uint64_t value) { record[key] = value; }

  void stats(const RunStats& s) {
    if (!with_stats) return;
    record["positions_stored"] = s.positions_stored;
    record["positions_visited"] = s.positions_visited;
    record["elapsed_ms"] = static_cast<std::int64_t>(s.elapsed_ms());
  }

  void emit() const {
    if (as_json) {
      std::cout << record.dump() << "\n";
      return;
    }
    // insertion order is preserved: nlohmann::ordered_json is overkill since
    // we emit in a fixed key order instead
    for (const char* key : {"command", "input", "n", "labeled", "unlabeled",
                            "value", "positions_stored", "positions_visited",
                            "elapsed_ms"}) {
      if (!record.contains(key)) continue;
      const json& v = record[key];
      std::cout << key << "=";
      if (v.is_string())
        std::cout << v.get<std::string>();
      else
        std::cout << v.dump();
      std::cout << "\n";
    }
  }
};

struct PositionArgs {
  int n = -1;
  int k = -1;
  std::string input_file;

  // returns the position plus a short descriptor for the record
  std::pair<Complex, std::string> load() const {
    bool have_nk = n >= 0;
    bool have_file = !input_file.empty();
    if (have_nk == have_file)
      throw parse_error("give a position either as --n/--k or as --input FILE");
    if (have_file) {
      std::ifstream in(input_file);
      if (!in) throw parse_error("cannot open " + input_file);
      return {parse_complex(in), input_file};
    }
    if (k < 0) throw parse_error("--n requires --k");
    return {build_pnk(n, k),
            "P(" + std::to_string(n) + "," + std::to_string(k) + ")"};
  }
};

void add_position_flags(CLI::App* cmd, PositionArgs& pos) {
  cmd->add_option("--n", pos.n, "ground-set size (builds P(n,k) with --k)");
  cmd->add_option("--k", pos.k, "maximum face size");
  cmd->add_option("--input", pos.input_file, "position file (two-line format)");
}

int run(int argc, char** argv) {
  CLI::App app{"games and counting on downward-closed set families"};
  app.require_subcommand(1);

  Output out;
  EvalOptions opt;
  std::uint64_t memo_limit = 0;
  app.add_flag("--json", out.as_json, "emit one JSON object instead of key=value lines");
  app.add_flag("--stats", out.with_stats, "include memo and timing statistics");
  app.add_option("--memo-limit", memo_limit, "abort once the memo table holds this many entries");
  app.add_option("--threads", opt.threads, "worker threads for the evaluation");

  PositionArgs pos;
  bool find_first = false;
  std::string involution;
  int plain_n = -1;

  CLI::App* grundy_cmd = app.add_subcommand("grundy", "Grundy value of a position");
  add_position_flags(grundy_cmd, pos);
  CLI::App* winloss_cmd = app.add_subcommand("winloss", "win/loss of a position");
  add_position_flags(winloss_cmd, pos);
  CLI::App* moves_cmd = app.add_subcommand("moves", "winning moves of a position");
  add_position_flags(moves_cmd, pos);
  moves_cmd->add_flag("--find-first", find_first, "stop at the lowest winning move");
  CLI::App* linext_cmd = app.add_subcommand("linext", "count linear extensions");
  add_position_flags(linext_cmd, pos);
  CLI::App* formula_cmd =
      app.add_subcommand("linext-formula", "closed-form extension count of the pair family");
  formula_cmd->add_option("--n", plain_n, "ground-set size")->required();
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "census of families on n points");
  enum_cmd->add_option("--n", plain_n, "ground-set size")->required();
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "fixed subfamily of an involution");
  add_position_flags(reduce_cmd, pos);
  reduce_cmd->add_option("--involution", involution, "automorphism in cycle notation, e.g. \"(6 7)\"")
      ->required();

  // global flags may trail the subcommand's own options
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help text or the parse diagnostic
    return code == 0 ? 0 : 2;
  }
  if (memo_limit > 0) opt.memo_limit = memo_limit;

  if (grundy_cmd->parsed()) {
    auto [a, desc] = pos.load();
    GrundyResult r = grundy(a, opt);
    out.field("command", "grundy");
    out.field("input", desc);
    out.field("value", std::uint64_t{r.value});
    out.stats(r.stats);
  } else if (winloss_cmd->parsed()) {
    auto [a, desc] = pos.load();
    OutcomeResult r = winloss(a, opt);
    out.field("command", "winloss");
    out.field("input", desc);
    out.field("value", std::string(to_string(r.outcome)));
    out.stats(r.stats);
  } else if (moves_cmd->parsed()) {
    auto [a, desc] = pos.load();
    WinningMoves r = winning_moves(a, find_first, opt);
    out.field("command", "moves");
    out.field("input", desc);
    if (out.as_json) {
      json list = json::array();
      for (Face f : r.moves) list.push_back(face_token(f));
      out.record["value"] = list;
    } else {
      std::string joined;
      for (Face f : r.moves) {
        if (!joined.empty()) joined += ", ";
        joined += face_token(f);
      }
      out.field("value", joined);
    }
    out.stats(r.stats);
  } else if (linext_cmd->parsed()) {
    auto [a, desc] = pos.load();
    ExtensionResult r = count_linear_extensions(a, opt);
    out.field("command", "linext");
    out.field("input", desc);
    out.field("value", r.value.str());
    out.stats(r.stats);
  } else if (formula_cmd->parsed()) {
    out.field("command", "linext-formula");
    out.field("input", "P(" + std::to_string(plain_n) + ",2)");
    out.field("value", e_pn2_closed_form(plain_n).str());
  } else if (enum_cmd->parsed()) {
    auto started = std::chrono::steady_clock::now();
    ComplexCensus c = census(plain_n);
    auto elapsed = std::chrono::steady_clock::now() - started;
    out.field("command", "enumerate");
    out.field("input", "n=" + std::to_string(plain_n));
    out.field("labeled", c.labeled.str());
    out.field("unlabeled", std::uint64_t{c.unlabeled});
    out.field("value", c.labeled.str() + "/" + std::to_string(c.unlabeled));
    if (out.with_stats)
      out.record["elapsed_ms"] = static_cast<std::int64_t>(
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  } else if (reduce_cmd->parsed()) {
    auto [a, desc] = pos.load();
    VertexPermutation phi = parse_cycles(involution, a.n());
    Complex fixed = fixed_subcomplex(a, phi);
    out.field("command", "reduce");
    out.field("input", desc);
    out.field("n", std::uint64_t{static_cast<unsigned>(fixed.n())});
    // value holds the maximal-faces line of the two-line format; together
    // with the n field it reconstructs a parseable position file
    std::string text = serialize_complex(fixed);
    std::size_t nl = text.find('\n');
    std::string faces_line = text.substr(nl + 1);
    if (!faces_line.empty() && faces_line.back() == '\n') faces_line.pop_back();
    out.field("value", faces_line);
  }

  out.emit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const not_applicable_error& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 5;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource cap: " << e.what() << " (stored " << e.partial.positions_stored
              << ", visited " << e.partial.positions_visited << ")\n";
    return 4;
  } catch (const invalid_position_error& e) {
    std::cerr << "illegal position: " << e.what() << "\n";
    return 3;
  } catch (const illegal_move_error& e) {
    std::cerr << "illegal move: " << e.what() << "\n";
    return 3;
  } catch (const invalid_parameter_error& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
