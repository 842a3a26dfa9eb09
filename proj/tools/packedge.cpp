// packedge command-line tool.
//
// Exit codes:
//    0  colorable / verified / success
//   10  not colorable, certificate rejected, or construction not applicable
//   20  search budget exhausted (timeout)
//   30  scan: at least one corpus file could not be read or parsed
//    2  usage or input error
//    1  internal error (a construction contradicted its own proof)

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "packedge/certificate.hpp"
#include "packedge/constructive.hpp"
#include "packedge/error.hpp"
#include "packedge/families.hpp"
#include "packedge/graph6.hpp"
#include "packedge/scan.hpp"
#include "packedge/sequences.hpp"

using namespace packedge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 10;
constexpr int kExitTimeout = 20;
constexpr int kExitScanError = 30;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Colorable: return kExitOk;
    case SolveStatus::NotColorable: return kExitNo;
    case SolveStatus::Timeout: return kExitTimeout;
  }
  return kExitInternal;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return read_text_file(path);
}

GraphFormat format_of(const std::string& name) {
  if (name == "g6") return GraphFormat::Graph6;
  if (name == "edges") return GraphFormat::EdgeList;
  return GraphFormat::Auto;
}

Graph load_graph(const std::string& path, const std::string& format) {
  auto graphs = parse_graphs(read_input(path), format_of(format));
  if (graphs.size() != 1) {
    throw UsageError("expected exactly one graph in '" + path + "', found " +
                     std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

void emit(const Json& doc, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw UsageError("cannot write '" + out + "'");
  file << doc.dump(2) << '\n';
}

struct GraphArgs {
  std::string path;
  std::string format = "auto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--graph", path, "Graph file (graph6 or edge list), '-' for stdin")
        ->required();
    cmd->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
  }
};

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  GraphArgs graph;
  std::string sequence;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  std::string out;
  int threads = 0;
};

int cmd_solve(const SolveArgs& a) {
  const PackingSequence s = PackingSequence::parse(a.sequence);
  const Graph g = load_graph(a.graph.path, a.graph.format);
  if (a.threads > 0) omp_set_num_threads(a.threads);
  const auto outcome = solve(g, s, Budget{a.budget_nodes, a.budget_seconds});
  emit(make_certificate(g, s, outcome), a.out);
  std::cerr << to_string(outcome.status) << " (" << outcome.stats.nodes << " nodes, "
            << outcome.stats.seconds << " s)\n";
  return exit_for(outcome.status);
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  GraphArgs graph;
  std::string theorem;
  int k = 2;
  std::string out;
};

Json construct_1122(const Graph& g) {
  const PackingSequence s({1, 1, 2, 2});
  SolveOutcome outcome;
  Json parts;
  if (auto p = two_matching_color(g)) {
    outcome.status = SolveStatus::Colorable;
    outcome.coloring = matching_partition_to_coloring(g, *p);
    parts = {{"part_a", p->part_a}, {"part_b", p->part_b}};
  } else {
    outcome.status = SolveStatus::NotColorable;
  }
  Json cert = make_certificate(g, s, outcome);
  cert["method"] = std::string(theorem_name(Theorem::MATCH_1122));
  if (!parts.is_null()) cert["intermediates"] = std::move(parts);
  return cert;
}

int cmd_construct(const ConstructArgs& a) {
  const auto theorem = parse_theorem(a.theorem);
  if (!theorem) throw UsageError("unknown theorem '" + a.theorem + "'");
  const Graph g = load_graph(a.graph.path, a.graph.format);
  const auto start = std::chrono::steady_clock::now();

  if (*theorem == Theorem::MATCH_1122) {
    Json cert = construct_1122(g);
    emit(cert, a.out);
    return cert["status"] == "colorable" ? kExitOk : kExitNo;
  }

  std::optional<Construction> c;
  try {
    switch (*theorem) {
      case Theorem::T4_1112: c = construct_1112(g); break;
      case Theorem::T5_11133: c = construct_11133(g); break;
      case Theorem::T7_1114x5: c = construct_1114x5(g); break;
      case Theorem::T9_11k: c = construct_11k(g, a.k); break;
      case Theorem::T15_1k: c = construct_1k(g, a.k); break;
      case Theorem::C_112x5: c = construct_112x5(g); break;
      case Theorem::P6_1113: c = construct_1113_oddness2(g); break;
      case Theorem::MATCH_1122: break;
    }
  } catch (const NoTwoFactor& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kExitNo;
  }
  if (!c) {
    std::cerr << "not applicable: no structural case holds for any 2-factor with two odd cycles\n";
    return kExitNo;
  }
  for (const auto& note : c->notes) std::cerr << "note: " << note << '\n';
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(make_certificate(g, *c, seconds), a.out);
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const std::string& path) {
  const std::string text = read_input(path);
  Json cert;
  try {
    cert = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::cout << "FAIL: " << e.what() << '\n';
    return kExitNo;
  }
  const auto check = check_certificate(cert);
  std::cout << (check.ok ? "OK: " : "FAIL: ") << check.reason << '\n';
  return check.ok ? kExitOk : kExitNo;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0;
  int k = 0;
  int i = 0;
  std::string format = "g6";
};

int cmd_gen(const GenArgs& a) {
  static const std::map<std::string, Family> kFamilies{
      {"petersen", Family::Petersen},  {"tietze", Family::Tietze},
      {"gp", Family::GeneralizedPetersen}, {"flower", Family::FlowerSnark},
      {"prism", Family::Prism},        {"tree", Family::TreeT},
      {"tree-prime", Family::TreeTPrime}, {"fig6", Family::Fig6},
  };
  auto it = kFamilies.find(a.family);
  if (it == kFamilies.end()) throw UsageError("unknown family '" + a.family + "'");
  const Graph g = generate(FamilySpec{it->second, a.n, a.k, a.i});
  if (a.format == "edges") std::cout << encode_edge_list(g);
  else std::cout << encode_graph6(g) << '\n';
  return kExitOk;
}

// --- scan ------------------------------------------------------------------

struct ScanArgs {
  std::string corpus;
  std::string sequence;
  int jobs = 1;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  std::string out;
};

int cmd_scan(ScanArgs a) {
  const PackingSequence s = PackingSequence::parse(a.sequence);
  if (a.corpus.empty()) {
    if (const char* env = std::getenv("PACKEDGE_CORPUS")) a.corpus = env;
  }
  if (a.corpus.empty()) throw UsageError("no corpus: pass --corpus or set PACKEDGE_CORPUS");
  if (!std::filesystem::is_directory(a.corpus)) {
    throw UsageError("corpus '" + a.corpus + "' is not a directory");
  }
  const auto files = list_corpus(a.corpus);
  const auto report = scan_corpus(files, s, Budget{a.budget_nodes, a.budget_seconds}, a.jobs);

  std::ofstream file;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out);
    if (!file) throw UsageError("cannot write '" + a.out + "'");
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

  int worst = kExitOk;
  std::map<std::string, int> tally;
  for (const auto& entry : report.entries) {
    Json line{{"path", entry.path}, {"index", entry.index}, {"graph", entry.graph6}};
    if (entry.outcome) {
      line["status"] = std::string(to_string(entry.outcome->status));
      line["nodes"] = entry.outcome->stats.nodes;
      worst = std::max(worst, exit_for(entry.outcome->status));
      ++tally[line["status"].get<std::string>()];
    } else {
      line["status"] = "error";
      line["error"] = entry.error;
      worst = std::max(worst, kExitScanError);
      ++tally["error"];
    }
    out << line.dump() << '\n';
  }
  std::cerr << report.entries.size() << " graphs:";
  for (const auto& [status, count] : tally) std::cerr << ' ' << status << '=' << count;
  std::cerr << '\n';
  return worst;
}

// --- seq -------------------------------------------------------------------

int cmd_seq(const std::string& table, int max_k) {
  const SequenceKind kind = table == "a" ? SequenceKind::A
                            : table == "b" ? SequenceKind::B
                                           : SequenceKind::C;
  for (const auto& row : sequence_table(kind, max_k)) {
    std::cout << row.k << ':' << row.value << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-packing edge-colorings of subcubic graphs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide colorability with the exact solver");
  solve_args.graph.add_to(solve_cmd);
  solve_cmd->add_option("--sequence", solve_args.sequence, "Packing sequence, e.g. 1^2,2^5")
      ->required();
  solve_cmd->add_option("--budget-nodes", solve_args.budget_nodes, "Node budget (0 = none)");
  solve_cmd->add_option("--budget-seconds", solve_args.budget_seconds, "Time budget (0 = none)");
  solve_cmd->add_option("--out", solve_args.out, "Certificate path (default stdout)");
  solve_cmd->add_option("--threads", solve_args.threads, "OpenMP threads (0 = default)");

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build a coloring from a constructive proof");
  construct_args.graph.add_to(construct_cmd);
  construct_cmd
      ->add_option("--theorem", construct_args.theorem,
                   "1112 | 11133 | 1114x5 | 11k | 1k | 1113 | 112x5 | 1122")
      ->required();
  construct_cmd->add_option("--k", construct_args.k, "Radius for 11k and 1k")
      ->check(CLI::Range(2, 60));
  construct_cmd->add_option("--out", construct_args.out, "Certificate path (default stdout)");

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate");
  verify_cmd->add_option("--certificate", cert_path, "Certificate JSON, '-' for stdin")
      ->required();

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family member");
  gen_cmd->add_option("--family", gen_args.family,
                      "petersen | tietze | gp | flower | prism | tree | tree-prime | fig6")
      ->required();
  gen_cmd->add_option("--n", gen_args.n, "Order parameter (gp, flower, prism)");
  gen_cmd->add_option("--k", gen_args.k, "Step (gp)");
  gen_cmd->add_option("--i", gen_args.i, "Depth (tree, tree-prime)");
  gen_cmd->add_option("--format", gen_args.format, "Output format")
      ->check(CLI::IsMember({"g6", "edges"}));

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Solve every graph of a corpus directory");
  scan_cmd->add_option("--corpus", scan_args.corpus, "Directory (default $PACKEDGE_CORPUS)");
  scan_cmd->add_option("--sequence", scan_args.sequence, "Packing sequence")->required();
  scan_cmd->add_option("--jobs", scan_args.jobs, "Parallel workers")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--budget-nodes", scan_args.budget_nodes, "Per-graph node budget");
  scan_cmd->add_option("--budget-seconds", scan_args.budget_seconds, "Per-graph time budget");
  scan_cmd->add_option("--out", scan_args.out, "JSON-lines report path (default stdout)");

  std::string table;
  int max_k = 10;
  auto* seq_cmd = app.add_subcommand("seq", "Print a_k, b_k or c_k");
  seq_cmd->add_option("--table", table, "a | b | c")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  seq_cmd->add_option("--max-k", max_k, "Last k")->check(CLI::Range(1, 60));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*construct_cmd) return cmd_construct(construct_args);
    if (*verify_cmd) return cmd_verify(cert_path);
    if (*gen_cmd) return cmd_gen(gen_args);
    if (*scan_cmd) return cmd_scan(scan_args);
    if (*seq_cmd) return cmd_seq(table, max_k);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const DomainError*>(&e)) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
