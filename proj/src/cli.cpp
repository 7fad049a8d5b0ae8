#include "gstirling/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gstirling/chromatic.hpp"
#include "gstirling/counting.hpp"
#include "gstirling/dyck.hpp"
#include "gstirling/errors.hpp"
#include "gstirling/families.hpp"
#include "gstirling/graph.hpp"
#include "gstirling/json_out.hpp"
#include "gstirling/normality.hpp"
#include "gstirling/qt.hpp"

namespace gstirling {

namespace {

std::string squares_text(const std::vector<SquareLabel>& squares) {
  std::string out;
  for (const SquareLabel& s : squares) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(s.col) + "," + std::to_string(s.row) + ")";
  }
  return out;
}

std::string ten_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

FamilySpec family_from_flags(const std::string& text, std::optional<int> components,
                             std::uint64_t seed) {
  FamilySpec spec = parse_family_spec(text);
  if (components) spec.components = components;
  spec.seed = seed;
  return spec;
}

struct WordCmd {
  std::string text;
  bool board = false, below = false, turns = false, graph = false, json = false;

  int run(std::ostream& out) const {
    const DyckWord w = parse_word(text);
    if (json) {
      Json j;
      j["word"] = w.render();
      j["n"] = w.n();
      if (board) j["board"] = board_json(board_above(w));
      if (below) j["below"] = squares_json(squares_below(w));
      if (turns) j["turns"] = squares_json(turning_squares(w));
      if (graph) j["graph"] = graph_json(word_to_graph(w).first);
      out << j.dump() << "\n";
      return kExitOk;
    }
    if (!board && !below && !turns && !graph) {
      out << "n=" << w.n() << " word=" << w.render() << "\n";
      return kExitOk;
    }
    if (board) out << squares_text(board_above(w).squares()) << "\n";
    if (below) out << squares_text(squares_below(w)) << "\n";
    if (turns) out << squares_text(turning_squares(w)) << "\n";
    if (graph) out << format_graph(word_to_graph(w).first);
    return kExitOk;
  }
};

struct StirlingCmd {
  std::string word_text, graph_path, family_text, method = "auto";
  std::optional<int> components;
  std::uint64_t seed = 0;

  CountSeq from_word(const DyckWord& w, const std::string& m, const Caps& caps) const {
    if (m == "enumerate") return stirling_enumerate(word_to_graph(w).first, caps);
    if (m == "weyl") return stirling_weyl(w);
    if (m == "rook" || m == "auto") return stirling_rook(w);
    if (m == "matching") return stirling_matching(w, caps);
    if (m == "chromatic") {
      return stirling_from_chromatic(chromatic_polynomial(word_to_graph(w).second), w.n());
    }
    throw std::invalid_argument("unknown method: " + m);
  }

  int run(std::ostream& out) const {
    const Caps caps = Caps::from_env();
    CountSeq seq;
    if (!word_text.empty()) {
      seq = from_word(parse_word(word_text), method, caps);
    } else if (!graph_path.empty()) {
      const Graph g = parse_graph_file(graph_path);
      if (method == "enumerate") {
        seq = stirling_enumerate(g, caps);
      } else if (method == "chromatic") {
        seq = stirling_from_chromatic(chromatic_polynomial(g, caps), g.n);
      } else if (method == "auto") {
        seq = auto_graph(g, caps);
      } else {
        // Word-based methods need the quasi-threshold word.
        seq = from_word(graph_to_word(g), method, caps);
      }
    } else if (!family_text.empty()) {
      const FamilySpec spec = family_from_flags(family_text, components, seed);
      if (method == "auto") {
        seq = family_stirling(spec);
      } else if (method == "enumerate") {
        seq = stirling_enumerate(family_graph(spec), caps);
      } else if (method == "chromatic" &&
                 (spec.kind == FamilyKind::Path || spec.kind == FamilyKind::Forest)) {
        seq = family_stirling(spec);
      } else {
        seq = from_word(family_word(spec), method, caps);
      }
    } else {
      throw std::invalid_argument("stirling: need one of --word, --graph, --family");
    }
    out << countseq_json(seq).dump() << "\n";
    return kExitOk;
  }

  static CountSeq auto_graph(const Graph& g, const Caps& caps) {
    try {
      return stirling_rook(graph_to_word(g));
    } catch (const NotQuasiThreshold&) {
      // fall through to the co-chromatic / enumeration routes
    }
    if (g.is_acyclic()) {
      const int comps = static_cast<int>(g.components().size());
      return stirling_from_chromatic(forest_chromatic(g.n, comps), g.n);
    }
    if (g.n <= caps.enumerate_max_vertices) return stirling_enumerate(g, caps);
    return stirling_from_chromatic(chromatic_polynomial(g, caps), g.n);
  }
};

struct CrosscheckCmd {
  std::string word_text;
  int exhaustive = 0;
  int random_count = 0;
  int nmax = 10;
  std::uint64_t seed = 0;

  int run(std::ostream& out) const {
    const Caps caps = Caps::from_env();
    long checked = 0;
    bool all_agree = true;

    auto check = [&](const DyckWord& w) {
      const CrossCheckReport report = cross_check(w, caps);
      ++checked;
      if (!report.agree) {
        all_agree = false;
        out << "DISAGREE " << w.render() << ": " << report.divergence << "\n";
      }
    };

    if (!word_text.empty()) {
      const DyckWord w = parse_word(word_text);
      const CrossCheckReport report = cross_check(w, caps);
      ++checked;
      Json j;
      j["word"] = w.render();
      j["agree"] = report.agree;
      Json routes = Json::array();
      for (const auto& [label, seq] : report.results) routes.push_back(label);
      j["routes"] = routes;
      j["skipped"] = report.skipped;
      if (const CountSeq* ref = report.reference()) j["values"] = countseq_json(*ref)["values"];
      if (!report.agree) j["divergence"] = report.divergence;
      out << j.dump() << "\n";
      all_agree = report.agree;
    } else if (exhaustive > 0) {
      for (int n = 1; n <= exhaustive; ++n) {
        for (const DyckWord& w : all_dyck_words(n)) check(w);
      }
      out << "checked " << checked << " words exhaustively up to n = " << exhaustive
          << (all_agree ? ": all routes agree" : ": DISAGREEMENT") << "\n";
    } else if (random_count > 0) {
      Rng rng(seed);
      for (int i = 0; i < random_count; ++i) {
        const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(nmax)));
        check(random_dyck_word(n, rng));
      }
      out << "checked " << checked << " random words with n <= " << nmax
          << (all_agree ? ": all routes agree" : ": DISAGREEMENT") << "\n";
    } else {
      throw std::invalid_argument("crosscheck: need --word, --exhaustive, or --random");
    }
    return all_agree ? kExitOk : kExitDisagreement;
  }
};

struct NormalityCmd {
  std::string family_text;
  std::vector<int> sweep;
  std::optional<int> components;
  std::uint64_t seed = 0;
  std::string csv_path;

  int run(std::ostream& out) const {
    const Caps caps = Caps::from_env();
    const FamilySpec base = family_from_flags(family_text, components, seed);
    std::vector<int> ns = sweep;
    std::sort(ns.begin(), ns.end());

    std::ostringstream csv;
    csv << "n,f,chi,g,mean,variance,kolmogorov,real_rooted,ratio\n";
    for (int n : ns) {
      const FamilySpec spec = base.with_n(n);
      const CountSeq seq = family_stirling(spec);
      const NormalityReport report = normality_report(seq, caps);
      const KahnCheck kahn = kahn_check(family_cochromatic_word(spec), caps);

      Json j;
      j["n"] = n;
      j["family"] = family_name(spec.kind);
      j["report"] = normality_json(report);
      j["kahn"] = kahn_json(kahn);
      out << j.dump() << "\n";

      csv << n << "," << kahn.f << "," << kahn.chi << "," << rational_string(kahn.g) << ","
          << ten_digits(mpq_get_d(report.stats.mean.get_mpq_t())) << ","
          << ten_digits(mpq_get_d(report.stats.variance.get_mpq_t())) << ","
          << (report.degenerate ? "nan" : ten_digits(report.kolmogorov)) << ","
          << verdict_name(report.real_rooted.verdict) << "," << rational_string(kahn.ratio)
          << "\n";
    }
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      if (!f) throw std::runtime_error("cannot write CSV file: " + csv_path);
      f << csv.str();
    }
    return kExitOk;
  }
};

struct FamilyCmd {
  std::string spec_text;
  std::string emit = "graph";
  std::optional<int> components;
  std::uint64_t seed = 0;

  int run(std::ostream& out) const {
    const FamilySpec spec = family_from_flags(spec_text, components, seed);
    if (emit == "graph") {
      out << format_graph(family_graph(spec));
    } else if (emit == "word") {
      out << family_word(spec).render() << "\n";
    } else {
      throw std::invalid_argument("family: --emit must be graph or word");
    }
    return kExitOk;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph Stirling sequences: five counting routes, cross-checks, "
               "and finite-scale normality reports"};
  app.require_subcommand(1);

  WordCmd word;
  auto* word_cmd = app.add_subcommand("word", "parse a Dyck word and emit its geometry");
  word_cmd->add_option("text", word.text, "word over {x,D} (aliases U/R and parentheses)")
      ->required();
  word_cmd->add_flag("--board", word.board, "squares above the path (Ferrers board)");
  word_cmd->add_flag("--below", word.below, "squares below the path, above the diagonal");
  word_cmd->add_flag("--turns", word.turns, "squares the path turns around");
  word_cmd->add_flag("--graph", word.graph, "edge list of the associated graph");
  word_cmd->add_flag("--json", word.json, "emit JSON instead of plain text");

  StirlingCmd stirling;
  auto* stirling_cmd = app.add_subcommand("stirling", "compute a graph Stirling sequence");
  stirling_cmd->add_option("--word", stirling.word_text, "Dyck word input");
  stirling_cmd->add_option("--graph", stirling.graph_path, "graph file input");
  stirling_cmd->add_option("--family", stirling.family_text, "family spec, e.g. empty:3");
  stirling_cmd
      ->add_option("--method", stirling.method,
                   "enumerate | weyl | rook | matching | chromatic | auto")
      ->check(CLI::IsMember({"enumerate", "weyl", "rook", "matching", "chromatic", "auto"}));
  int stirling_components = -1;
  stirling_cmd->add_option("--components", stirling_components, "forest component count");
  stirling_cmd->add_option("--seed", stirling.seed, "seed for random families");

  CrosscheckCmd crosscheck;
  auto* crosscheck_cmd =
      app.add_subcommand("crosscheck", "compare all counting routes on Dyck words");
  crosscheck_cmd->add_option("--word", crosscheck.word_text, "single word");
  crosscheck_cmd->add_option("--exhaustive", crosscheck.exhaustive, "all words with n <= nmax");
  crosscheck_cmd->add_option("--random", crosscheck.random_count, "number of random words");
  crosscheck_cmd->add_option("--nmax", crosscheck.nmax, "max n for random words");
  crosscheck_cmd->add_option("--seed", crosscheck.seed, "random seed");

  NormalityCmd normality;
  auto* normality_cmd =
      app.add_subcommand("normality", "normality reports for a family sweep");
  normality_cmd->add_option("--family", normality.family_text, "family spec")->required();
  normality_cmd->add_option("--sweep", normality.sweep, "sizes, e.g. 50,100,200")
      ->required()
      ->delimiter(',');
  int normality_components = -1;
  normality_cmd->add_option("--components", normality_components, "forest component count");
  normality_cmd->add_option("--seed", normality.seed, "seed for random families");
  normality_cmd->add_option("--csv", normality.csv_path, "also write a CSV file");

  FamilyCmd family;
  auto* family_cmd = app.add_subcommand("family", "emit a family member");
  family_cmd->add_option("spec", family.spec_text, "family spec, e.g. star:5")->required();
  family_cmd->add_option("--emit", family.emit, "graph | word")
      ->check(CLI::IsMember({"graph", "word"}));
  int family_components = -1;
  family_cmd->add_option("--components", family_components, "forest component count");
  family_cmd->add_option("--seed", family.seed, "seed for random families");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "gstirling");
  argv.reserve(storage.size());
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  if (stirling_components >= 0) stirling.components = stirling_components;
  if (normality_components >= 0) normality.components = normality_components;
  if (family_components >= 0) family.components = family_components;

  try {
    if (word_cmd->parsed()) return word.run(out);
    if (stirling_cmd->parsed()) return stirling.run(out);
    if (crosscheck_cmd->parsed()) return crosscheck.run(out);
    if (normality_cmd->parsed()) return normality.run(out);
    if (family_cmd->parsed()) return family.run(out);
  } catch (const WordParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const NotQuasiThreshold& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NonIntegralResult& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NegativeResult& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace gstirling
