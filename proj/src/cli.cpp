#include "deckpoly/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "deckpoly/deck.hpp"
#include "deckpoly/error.hpp"
#include "deckpoly/graph_polys.hpp"
#include "deckpoly/identities.hpp"
#include "deckpoly/random.hpp"
#include "deckpoly/reconstruct.hpp"
#include "deckpoly/search.hpp"
#include "deckpoly/serialize.hpp"

namespace deckpoly::cli {

using nlohmann::json;

namespace {

// Raised for bad input; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

void emit(const json& value, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << value.dump() << '\n';
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw UsageError("cannot write '" + output_path + "'");
  file << value.dump() << '\n';
}

PolyKind kind_flag(const std::string& text) {
  try {
    return parse_kind(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Digraph digraph_file(const std::string& path) {
  try {
    return digraph_from_json(read_json_file(path));
  } catch (const FormatError& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

std::uint64_t search_budget() {
  const char* env = std::getenv("DECKPOLY_BUDGET");
  if (env == nullptr) return kDefaultSearchBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw UsageError(std::string("DECKPOLY_BUDGET must be a non-negative integer, got '") + env +
                     "'");
  }
  return value;
}

struct VerifyFlags {
  std::string theorem;
  std::size_t trials = 0;
  std::size_t max_n = 6;
  std::optional<std::uint64_t> seed;
  bool weighted = false;
  double zero_density = 0.3;
};

int run_verify(const VerifyFlags& flags, std::ostream& out) {
  if (!flags.seed) throw UsageError("verify requires --seed");
  if (flags.trials < 1) throw UsageError("--trials must be at least 1");
  if (flags.max_n < 1) throw UsageError("--max-n must be at least 1");
  const bool per_involved = flags.theorem != "2.1" && flags.theorem != "2.2";
  if (per_involved && flags.max_n > kMaxPermanentPolyOrder) {
    throw UsageError("--max-n exceeds the permanent cap of " +
                     std::to_string(kMaxPermanentPolyOrder));
  }

  InstanceGenerator gen(*flags.seed);
  std::size_t checks = 0;
  json violations = json::array();
  auto record = [&](const IdentityReport& report) {
    ++checks;
    if (!report.holds()) violations.push_back(report_to_json(report));
  };

  for (std::size_t trial = 0; trial < flags.trials; ++trial) {
    if (flags.theorem == "2.1") {
      record(check_thm21(gen.matrix(flags.max_n, flags.zero_density)));
    } else if (flags.theorem == "2.2") {
      record(check_thm22(gen.matrix(flags.max_n, flags.zero_density)));
    } else if (flags.theorem == "2.3") {
      record(check_thm23(gen.matrix(flags.max_n, flags.zero_density)));
    } else if (flags.theorem == "3.1") {
      const Digraph g = gen.digraph(gen.uniform_index(1, flags.max_n), flags.weighted);
      const Rational beta = gen.rational();
      const Rational gamma = gen.nonzero_rational();
      const PencilMode mode =
          gen.bernoulli(0.5) ? PencilMode::kDeterminant : PencilMode::kPermanent;
      record(check_thm31(g, beta, gamma, mode));
    } else if (flags.theorem == "1.7") {
      const Digraph g = gen.digraph(gen.uniform_index(1, flags.max_n), flags.weighted);
      for (const PolyKind& kind : named_kinds()) record(check_eq17(g, kind));
    } else {
      throw UsageError("unknown theorem '" + flags.theorem + "'");
    }
  }

  const bool clean = violations.empty();
  out << json{{"format_version", kFormatVersion},
              {"theorem", flags.theorem},
              {"trials", flags.trials},
              {"checks", checks},
              {"seed", *flags.seed},
              {"violations", std::move(violations)}}
             .dump()
      << '\n';
  return clean ? kExitOk : kExitViolated;
}

int run_counterexample(std::size_t n, std::ostream& out) {
  if (n > kMaxPermanentPolyOrder) {
    throw UsageError("--n exceeds the permanent cap of " + std::to_string(kMaxPermanentPolyOrder));
  }
  const auto [g1, g2] = [n] {
    try {
      return canonical_counterexample(n);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  json kinds = json::object();
  for (const PolyKind& kind : {PolyKind::f1(), PolyKind::f4()}) {
    const Deck d1 = deck(g1, kind);
    const Deck d2 = deck(g2, kind);
    kinds[kind.name()] = {{"g1_poly", polynomial_to_json(poly_of(g1, kind))},
                          {"g2_poly", polynomial_to_json(poly_of(g2, kind))},
                          {"g1_deck", deck_to_json(d1)["polys"]},
                          {"g2_deck", deck_to_json(d2)["polys"]},
                          {"decks_equal", d1.polys == d2.polys}};
  }
  out << json{{"format_version", kFormatVersion},
              {"n", n},
              {"g1", digraph_to_json(g1)},
              {"g2", digraph_to_json(g2)},
              {"kinds", std::move(kinds)}}
             .dump()
      << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact digraph characteristic and permanental polynomials, edge decks and "
               "deck reconstruction"};
  app.name("deckpoly");
  app.require_subcommand(1);

  std::string kind_text;
  std::string input_path;
  std::string output_path;

  auto* compute = app.add_subcommand("compute", "Print the polynomial of a digraph file");
  compute->add_option("--kind", kind_text, "f1..f6 or general:BETA,GAMMA,det|per")->required();
  compute->add_option("--input", input_path, "Digraph file")->required();

  auto* deck_cmd = app.add_subcommand("deck", "Write the edge deck of a digraph file");
  deck_cmd->add_option("--kind", kind_text, "f1..f6 or general:BETA,GAMMA,det|per")->required();
  deck_cmd->add_option("--input", input_path, "Digraph file")->required();
  deck_cmd->add_option("--output", output_path, "Deck file (standard output if omitted)");

  std::string deck_path;
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Recover the polynomial from a deck file");
  reconstruct_cmd->add_option("--deck", deck_path, "Deck file")->required();

  VerifyFlags verify_flags;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Check an identity on seeded random instances");
  verify->add_option("--theorem", verify_flags.theorem, "2.1, 2.2, 2.3, 3.1 or 1.7")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.3", "3.1", "1.7"}));
  verify->add_option("--trials", verify_flags.trials, "Number of random instances")->required();
  verify->add_option("--max-n", verify_flags.max_n, "Largest matrix order or vertex count");
  verify->add_option("--seed", seed, "RNG seed")->required();
  verify->add_flag("--weighted", verify_flags.weighted, "Random nonzero rational arc weights");
  verify->add_option("--zero-density", verify_flags.zero_density,
                     "Probability of a zero matrix entry")
      ->check(CLI::Range(0.0, 1.0));

  std::size_t vertices = 0;
  std::size_t arc_count = 0;
  unsigned workers = 1;
  auto* search_cmd = app.add_subcommand("search", "Find deck collisions among small digraphs");
  search_cmd->add_option("--vertices", vertices, "Vertex count")->required();
  search_cmd->add_option("--arcs", arc_count, "Arc count")->required();
  search_cmd->add_option("--kind", kind_text, "f1..f6 or general:BETA,GAMMA,det|per")->required();
  search_cmd->add_option("--output", output_path, "NDJSON output (standard output if omitted)");
  search_cmd->add_option("--workers", workers, "Worker threads; 0 uses every core");

  std::size_t counter_n = 0;
  auto* counter_cmd =
      app.add_subcommand("counterexample", "Print the cycle/path pair with colliding decks");
  counter_cmd->add_option("--n", counter_n, "Vertex count (>= 3)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "deckpoly: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const PolyKind kind = kind_flag(kind_text);
      out << polynomial_to_json(poly_of(digraph_file(input_path), kind)).dump() << '\n';
      return kExitOk;
    }
    if (deck_cmd->parsed()) {
      const PolyKind kind = kind_flag(kind_text);
      const Digraph g = digraph_file(input_path);
      if (g.arc_count() == 0) throw UsageError("digraph has no arcs, so its deck is empty");
      emit(deck_to_json(deck(g, kind)), output_path, out);
      return kExitOk;
    }
    if (reconstruct_cmd->parsed()) {
      Deck d;
      try {
        d = deck_from_json(read_json_file(deck_path));
      } catch (const FormatError& e) {
        throw UsageError("'" + deck_path + "': " + e.what());
      }
      const ReconstructionResult result = reconstruct(d);
      out << result_to_json(result).dump() << '\n';
      if (std::holds_alternative<Unique>(result)) return kExitOk;
      if (std::holds_alternative<OneParameterFamily>(result)) return kExitFamily;
      return kExitInconsistent;
    }
    if (verify->parsed()) {
      verify_flags.seed = seed;
      return run_verify(verify_flags, out);
    }
    if (search_cmd->parsed()) {
      const PolyKind kind = kind_flag(kind_text);
      const SearchOptions options{search_budget(), workers};
      std::vector<CollisionGroup> groups;
      try {
        groups = find_deck_collisions(vertices, arc_count, kind, options);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      std::ostringstream lines;
      for (const CollisionGroup& g : groups) lines << group_to_json(g).dump() << '\n';
      if (output_path.empty()) {
        out << lines.str();
      } else {
        std::ofstream file(output_path);
        if (!file) throw UsageError("cannot write '" + output_path + "'");
        file << lines.str();
      }
      err << "deckpoly: " << groups.size() << " collision group(s) among "
          << count_digraphs(vertices, arc_count) << " labeled digraphs\n";
      return kExitOk;
    }
    if (counter_cmd->parsed()) return run_counterexample(counter_n, out);
  } catch (const UsageError& e) {
    err << "deckpoly: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "deckpoly: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "deckpoly: internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace deckpoly::cli
