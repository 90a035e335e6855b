// olcp: arena for on-line chain partitioning of semi-orders. An adaptive
// adversary presents unit intervals of width at most 2k+1 and forces any
// on-line algorithm to open 3k+2 chains; this tool plays, verifies and
// narrates those games.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "olcp/adversary.hpp"
#include "olcp/algorithms.hpp"
#include "olcp/arena.hpp"
#include "olcp/errors.hpp"
#include "olcp/render.hpp"
#include "olcp/transcript.hpp"

namespace {

using namespace olcp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAnomaly = 2;
constexpr int kExitBudget = 3;

struct RunArgs {
  int k = 1;
  std::string algorithm;
  std::string format = "pretty";
  bool check_width = false;
  bool no_check_width = false;
};

PlayOptions width_options(const RunArgs& args) {
  PlayOptions options;
  if (args.check_width) options.check_width = true;
  if (args.no_check_width) options.check_width = false;
  return options;
}

int cmd_run(const RunArgs& args) {
  const auto algorithm = make_algorithm(args.algorithm);
  PlayOptions options = width_options(args);

  if (args.format == "jsonl") {
    options.on_step = [](const AdversaryState&, const AdversaryState&,
                         const GameStep& step) {
      write_transcript_jsonl_record(std::cout, step);
    };
  } else if (args.format == "csv") {
    std::cout << transcript_csv_header() << '\n';
    options.on_step = [](const AdversaryState&, const AdversaryState&,
                         const GameStep& step) {
      write_transcript_csv_row(std::cout, step);
    };
  } else {
    options.on_step = [](const AdversaryState&, const AdversaryState&,
                         const GameStep& step) {
      std::cout << "step " << step.index << " [" << stage_tag(step.stage)
                << "] r=" << step.interval.right.to_string() << " -> chain "
                << step.chain << "  chains=" << step.chains_so_far;
      if (step.width_so_far >= 0) std::cout << " width=" << step.width_so_far;
      std::cout << '\n';
    };
  }

  const GameResult result = play_game(Adversary(args.k), *algorithm, options);

  if (args.format == "pretty") {
    std::cout << '\n' << render_figure(result) << summary_line(result) << '\n';
  } else {
    // Keep machine formats clean on stdout; the summary goes to stderr.
    std::cerr << summary_line(result) << '\n';
  }
  return result.forced ? kExitOk : kExitAnomaly;
}

struct BatchArgs {
  int k_min = 1;
  int k_max = 8;
  std::string algorithm = "first-fit";
  int trials = 20;
  std::uint64_t seed = 1;
  std::string format = "table";
};

int cmd_batch(const BatchArgs& args) {
  const auto rows = batch_run(args.algorithm, args.k_min, args.k_max, args.trials,
                              args.seed);
  bool all_ok = true;
  if (args.format == "csv") {
    std::cout << "k,games,min_chains,max_chains,target,max_width,all_forced\n";
  } else if (args.format == "table") {
    std::printf("%4s %6s %10s %10s %7s %9s %7s\n", "k", "games", "min_chains",
                "max_chains", "target", "max_width", "forced");
  }
  for (const BatchRow& row : rows) {
    all_ok = all_ok && row.all_forced && row.min_chains == row.target &&
             row.max_chains == row.target;
    if (args.format == "csv") {
      std::cout << row.k << ',' << row.games << ',' << row.min_chains << ','
                << row.max_chains << ',' << row.target << ',' << row.max_width << ','
                << (row.all_forced ? "yes" : "no") << '\n';
    } else if (args.format == "jsonl") {
      std::cout << "{\"k\":" << row.k << ",\"games\":" << row.games
                << ",\"min_chains\":" << row.min_chains
                << ",\"max_chains\":" << row.max_chains << ",\"target\":" << row.target
                << ",\"max_width\":" << row.max_width << ",\"all_forced\":"
                << (row.all_forced ? "true" : "false") << "}\n";
    } else {
      std::printf("%4d %6d %10d %10d %7d %9d %7s\n", row.k, row.games, row.min_chains,
                  row.max_chains, row.target, row.max_width,
                  row.all_forced ? "yes" : "no");
    }
  }
  return all_ok ? kExitOk : kExitAnomaly;
}

struct VerifyArgs {
  int k = 1;
  std::uint64_t node_budget = 100'000'000;
  bool no_prune = false;
  bool allow_expensive = false;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.k > 1 && !args.allow_expensive) {
    std::cerr << "verify --k " << args.k
              << " explores every possible algorithm behavior; beyond k=1 the game\n"
                 "tree explodes combinatorially. Pass --allow-expensive to try anyway\n"
                 "under the node budget.\n";
    return kExitUsage;
  }
  const int target = 3 * args.k + 2;
  std::cout << "searching every on-line algorithm behavior for k=" << args.k
            << " (width " << 2 * args.k + 1 << ", target " << target << ")\n";
  SearchOptions options;
  options.node_budget = args.node_budget;
  options.prune_at_target = !args.no_prune;
  try {
    const SearchResult result = min_forced_chains(args.k, options);
    std::cout << "min forced chains: " << result.min_chains << '\n'
              << "complete games: " << result.games << ", nodes visited: "
              << result.nodes << '\n';
    if (result.min_chains >= target) {
      std::cout << "every behavior opens at least " << target << " chains\n";
      return kExitOk;
    }
    std::cout << "ANOMALY: some behavior escapes with " << result.min_chains
              << " chains\n";
    return kExitAnomaly;
  } catch (const SearchBudgetError& e) {
    std::cerr << "node budget exhausted after " << e.nodes() << " nodes";
    if (e.partial_min() >= 0) {
      std::cerr << "; fewest chains among games completed so far: " << e.partial_min();
    }
    std::cerr << '\n';
    return kExitBudget;
  }
}

int cmd_explain(int k, const std::string& algorithm_spec) {
  const auto algorithm = make_algorithm(algorithm_spec);
  std::cout << "adversary plan against " << algorithm->name() << " (k=" << k << "):\n"
            << "present unit intervals of width at most " << 2 * k + 1
            << " and force " << 3 * k + 2 << " chains.\n"
            << "stages: " << k << (k == 1 ? " stack value" : " stack values")
            << ", a bisection band above the stack,\n"
            << "a band below it, a squeeze between the two, then " << k
            << (k == 1 ? " closing copy.\n\n" : " closing copies.\n\n");
  PlayOptions options;
  options.on_step = [](const AdversaryState& before, const AdversaryState& after,
                       const GameStep& step) {
    std::cout << describe_step(before, after, step) << '\n';
  };
  const GameResult result = play_game(Adversary(k), *algorithm, options);
  std::cout << '\n' << render_figure(result) << summary_line(result) << '\n';
  return result.forced ? kExitOk : kExitAnomaly;
}

class InteractivePlayer final : public OnlineAlgorithm {
 public:
  struct EndOfInput {};

  ChainId step(const ChainPartition& p, const UnitInterval& x) override {
    std::cout << "\nelement " << x.right.to_string() << ", interval ["
              << x.left().to_string() << ", " << x.right.to_string() << "]\n";
    for (ChainId id = 0; id < p.chain_count(); ++id) {
      std::cout << "  chain " << id << ":";
      for (const UnitInterval& e : p.chain(id)) std::cout << ' ' << e.right.to_string();
      std::cout << (p.is_legal(id, x) ? "  (legal)" : "") << '\n';
    }
    std::cout << "  chain " << p.chain_count() << ": fresh  (legal)\n";

    while (true) {
      std::cout << "chain id or 'new'> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) throw EndOfInput{};
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t");
      const std::string token = line.substr(first, last - first + 1);

      ChainId choice;
      if (token == "new" || token == "n") {
        choice = p.chain_count();
      } else {
        try {
          std::size_t used = 0;
          choice = std::stoi(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::logic_error&) {
          std::cout << "not a chain id: " << token << '\n';
          continue;
        }
      }
      if (!p.is_legal(choice, x)) {
        std::cout << "chain " << choice
                  << " cannot take this element (some element on it is within one "
                     "unit)\n";
        continue;
      }
      return choice;
    }
  }

  std::string name() const override { return "interactive"; }
};

int cmd_interactive(int k) {
  std::cout << "you are the on-line algorithm; the adversary presents unit intervals.\n"
            << "every presented prefix keeps width at most " << 2 * k + 1
            << ", yet you will need " << 3 * k + 2 << " chains.\n"
            << "a chain is legal for an element when all its elements are comparable\n"
            << "to it (endpoints more than one unit apart).\n";
  InteractivePlayer player;
  try {
    const GameResult result = play_game(Adversary(k), player);
    std::cout << '\n' << render_figure(result) << summary_line(result) << '\n'
              << "you used " << result.distinct_chains
              << " chains; no strategy can finish below " << result.target << ".\n";
    return result.forced ? kExitOk : kExitAnomaly;
  } catch (const InteractivePlayer::EndOfInput&) {
    std::cerr << "input ended before the game finished\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arena for on-line chain partitioning of semi-orders: an adaptive adversary\n"
      "forces 3k+2 chains while the presented intervals never exceed width 2k+1"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "play one game and print its transcript");
  run->add_option("-k,--k", run_args.k, "width parameter (width 2k+1, target 3k+2)")
      ->required()
      ->check(CLI::PositiveNumber);
  run->add_option("-a,--algorithm", run_args.algorithm,
                  "first-fit | best-fit | random:<seed> | scripted:<id,id,...>")
      ->required();
  run->add_option("--format", run_args.format, "jsonl | csv | pretty")
      ->check(CLI::IsMember({"jsonl", "csv", "pretty"}))
      ->capture_default_str();
  auto* cw = run->add_flag("--check-width", run_args.check_width,
                           "track the prefix width at every step");
  run->add_flag("--no-check-width", run_args.no_check_width, "skip width tracking")
      ->excludes(cw);

  BatchArgs batch_args;
  CLI::App* batch =
      app.add_subcommand("batch", "play many games across a range of k and aggregate");
  batch->add_option("--k-min", batch_args.k_min, "smallest k")
      ->required()
      ->check(CLI::PositiveNumber);
  batch->add_option("--k-max", batch_args.k_max, "largest k")
      ->required()
      ->check(CLI::PositiveNumber);
  batch->add_option("-a,--algorithm", batch_args.algorithm,
                    "algorithm spec; random algorithms replay per-trial seeds")
      ->required();
  batch->add_option("--trials", batch_args.trials,
                    "games per k for randomized algorithms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  batch->add_option("--seed", batch_args.seed, "master seed for per-game seeds")
      ->envname("OLCP_SEED")
      ->capture_default_str();
  batch->add_option("--format", batch_args.format, "table | csv | jsonl")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}))
      ->capture_default_str();

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "exhaustively check that no algorithm behavior beats the bound");
  verify->add_option("-k,--k", verify_args.k, "width parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--node-budget", verify_args.node_budget,
                     "abort after visiting this many game states")
      ->envname("OLCP_NODE_BUDGET")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_flag("--no-prune", verify_args.no_prune,
                   "keep expanding branches that already reached the target");
  verify->add_flag("--allow-expensive", verify_args.allow_expensive,
                   "permit the search for k > 1");

  int explain_k = 1;
  std::string explain_algorithm;
  CLI::App* explain =
      app.add_subcommand("explain", "narrate one game move by move");
  explain->add_option("-k,--k", explain_k, "width parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  explain->add_option("-a,--algorithm", explain_algorithm, "algorithm spec")
      ->required();

  int interactive_k = 1;
  CLI::App* interactive =
      app.add_subcommand("interactive", "play against the adversary yourself");
  interactive->add_option("-k,--k", interactive_k, "width parameter")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (batch->parsed()) return cmd_batch(batch_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (explain->parsed()) return cmd_explain(explain_k, explain_algorithm);
    if (interactive->parsed()) return cmd_interactive(interactive_k);
  } catch (const IllegalMoveError& e) {
    std::cerr << "illegal move: " << e.what() << '\n';
    return kExitAnomaly;
  } catch (const ScriptExhaustedError& e) {
    std::cerr << "script ran dry: " << e.what() << '\n';
    return kExitAnomaly;
  } catch (const AdversaryStuckError& e) {
    std::cerr << "adversary bug: " << e.what() << '\n';
    return kExitAnomaly;
  } catch (const IllegalObservationError& e) {
    std::cerr << "engine inconsistency: " << e.what() << '\n';
    return kExitAnomaly;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
