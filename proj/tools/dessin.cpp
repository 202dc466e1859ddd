#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dessin/cycle_notation.hpp"
#include "dessin/errors.hpp"
#include "dessin/graph_model.hpp"
#include "dessin/oracle.hpp"
#include "dessin/pair.hpp"
#include "dessin/reroute.hpp"
#include "json.hpp"

using namespace dessin;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string white;
  std::string black;
  std::string file;
  std::optional<std::uint32_t> degree;
  std::string a;
  std::string b;
  bool json = false;
  std::string out;
  unsigned threads = 1;
  std::uint32_t max_degree = 5;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 1;
  std::uint32_t tree_edges = 0;
};

struct UsageError : Error {
  using Error::Error;
};

// Accepts the format written by format_pair: "white: ..." and "black: ..."
// lines, optionally "degree: n".
void read_pair_file(Options& o) {
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot open " + o.file);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (key == "white") o.white = value;
    if (key == "black") o.black = value;
    if (key == "degree" && !o.degree) o.degree = static_cast<std::uint32_t>(std::stoul(value));
  }
}

PermutationPair load_pair(Options& o) {
  if (!o.file.empty()) read_pair_file(o);
  if (o.white.empty() || o.black.empty()) throw UsageError("both --white and --black (or --file) are required");
  return parse_pair(o.white, o.black, o.degree);
}

std::pair<ElementLabel, ElementLabel> load_ab(const PermutationPair& pair, const Options& o) {
  if (o.a.empty() || o.b.empty()) throw UsageError("--a and --b are required");
  ElementLabel a = ElementLabel::parse(o.a);
  ElementLabel b = ElementLabel::parse(o.b);
  if (a == b) throw UsageError("--a and --b must differ");
  if (!pair.ground().contains(a) || !pair.ground().contains(b)) throw UsageError("--a and --b must be ground elements");
  return {a, b};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

ordered_json pair_json(const PermutationPair& pair) {
  return {{"white", format_permutation(pair.white())}, {"black", format_permutation(pair.black())}};
}

ordered_json report_json(const PairReport& r) { return ordered_json::parse(r.to_json()); }

int cmd_analyze(Options& o) {
  PermutationPair pair = load_pair(o);
  PairReport r = analyze(pair);
  if (o.json) {
    ordered_json j = pair_json(pair);
    j.update(report_json(r));
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, format_pair(pair) + r.to_text());
  }
  return kOk;
}

int cmd_classify(Options& o) {
  PermutationPair pair = load_pair(o);
  std::vector<std::pair<ElementLabel, ElementLabel>> targets;
  if (!o.a.empty() || !o.b.empty()) {
    targets.push_back(load_ab(pair, o));
  } else {
    for (const auto& a : pair.ground().elements()) {
      for (const auto& b : pair.ground().elements()) {
        if (a != b) targets.emplace_back(a, b);
      }
    }
  }
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "a\tb\ttype\texceptional\tgenus_effect\tbranch\ttransitive_after\n";
  for (const auto& [a, b] : targets) {
    TypeClass type = classify_type(pair, a, b);
    ExceptionalClass ex = classify_exceptional(pair, a, b);
    GenusEffect effect = genus_effect(pair, a, b);
    TypeClass branch = predict_branch_type(pair, a, b);
    bool after = is_transitive_oracle(conjugate_by_transposition(pair, a, b));
    rows.push_back({{"a", a.to_string()},
                    {"b", b.to_string()},
                    {"type", to_string(type)},
                    {"exceptional", to_string(ex)},
                    {"genus_effect", to_string(effect)},
                    {"branch", to_string(branch)},
                    {"transitive_after", after}});
    text << a.to_string() << '\t' << b.to_string() << '\t' << to_string(type) << '\t' << to_string(ex) << '\t'
         << to_string(effect) << '\t' << to_string(branch) << '\t' << (after ? "true" : "false") << '\n';
  }
  if (o.json) {
    ordered_json j = pair_json(pair);
    j["rows"] = rows;
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, text.str());
  }
  return kOk;
}

int emit_result(Options& o, const PermutationPair& result) {
  PairReport r = analyze(result);
  if (o.json) {
    ordered_json j = pair_json(result);
    j.update(report_json(r));
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, format_pair(result) + r.to_text());
  }
  return kOk;
}

int cmd_reroute(Options& o) {
  PermutationPair pair = load_pair(o);
  auto [a, b] = load_ab(pair, o);
  return emit_result(o, reroute(pair, a, b).pair);
}

int cmd_conjugate(Options& o) {
  PermutationPair pair = load_pair(o);
  auto [a, b] = load_ab(pair, o);
  return emit_result(o, conjugate_by_transposition(pair, a, b));
}

int cmd_export_dot(Options& o) {
  PermutationPair pair = load_pair(o);
  emit(o, export_dot(build_model(pair)));
  return kOk;
}

int cmd_verify(Options& o) {
  if (o.tree_edges > 0) {
    TreeCaseReport r = verify_tree_case(o.tree_edges);
    emit(o, r.to_json() + "\n");
    return r.failures == 0 ? kOk : kFailed;
  }
  VerifyOptions v;
  v.degree = o.degree.value_or(4);
  v.threads = o.threads;
  v.max_degree = o.max_degree;
  v.samples = o.samples;
  v.seed = o.seed;
  if (v.degree < 2 || v.degree > 8) throw UsageError("--degree must be between 2 and 8");
  if (v.max_degree > 5) throw UsageError("--max-degree must be at most 5");
  VerificationReport r = verify_all(v);
  if (o.json) {
    emit(o, r.to_json() + "\n");
  } else {
    std::ostringstream text;
    text << "degree: " << r.degree << (r.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
    text << "cases: " << r.cases_checked << "\n";
    for (const auto& c : r.checks) {
      text << (c.failed ? "FAIL " : "ok   ") << c.name << " " << c.checked - c.failed << "/" << c.checked << "\n";
      if (c.first) {
        text << "     first: white " << c.first->white << " black " << c.first->black << " a " << c.first->a
             << " b " << c.first->b << ": expected " << c.first->expected << ", got " << c.first->actual << "\n";
      }
    }
    text << "tame witnesses: " << r.tame_transitive_witnesses << " transitive, " << r.tame_nontransitive_witnesses
         << " not\n";
    emit(o, text.str());
  }
  return r.all_passed() ? kOk : kFailed;
}

void add_pair_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--white", o.white, "white permutation in cycle notation");
  cmd->add_option("--black", o.black, "black permutation in cycle notation");
  cmd->add_option("--file", o.file, "file with 'white:' and 'black:' lines");
  cmd->add_option("--degree", o.degree, "size of the ground set {1..n}");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_option("--out", o.out, "write to PATH instead of stdout");
}

void add_ab_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--a", o.a, "first element of the transposition");
  cmd->add_option("--b", o.b, "second element of the transposition");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation pairs, reroutes and transposition conjugation of dessins"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "chi, genus, cycle counts and transitivity");
  add_pair_flags(analyze_cmd, o);
  add_output_flags(analyze_cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "type, exceptional class and genus effect per (a, b)");
  add_pair_flags(classify_cmd, o);
  add_ab_flags(classify_cmd, o);
  add_output_flags(classify_cmd, o);

  auto* reroute_cmd = app.add_subcommand("reroute", "reroute relative to (a, b)");
  add_pair_flags(reroute_cmd, o);
  add_ab_flags(reroute_cmd, o);
  add_output_flags(reroute_cmd, o);

  auto* conjugate_cmd = app.add_subcommand("conjugate", "conjugate white by the transposition (a b)");
  add_pair_flags(conjugate_cmd, o);
  add_ab_flags(conjugate_cmd, o);
  add_output_flags(conjugate_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "check every theorem over S_n x S_n");
  verify_cmd->add_option("--degree", o.degree, "n (default 4)");
  verify_cmd->add_option("--threads", o.threads, "worker threads");
  verify_cmd->add_option("--max-degree", o.max_degree, "largest exhaustive degree; above it pairs are sampled");
  verify_cmd->add_option("--samples", o.samples, "sampled pairs above --max-degree");
  verify_cmd->add_option("--seed", o.seed, "sampling seed");
  verify_cmd->add_option("--tree-case", o.tree_edges, "run the plane-tree conjugation check up to N edges instead");
  add_output_flags(verify_cmd, o);

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz text for the bicolored graph");
  add_pair_flags(dot_cmd, o);
  add_ab_flags(dot_cmd, o);
  add_output_flags(dot_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*reroute_cmd) return cmd_reroute(o);
    if (*conjugate_cmd) return cmd_conjugate(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*dot_cmd) return cmd_export_dot(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
