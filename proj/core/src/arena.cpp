#include "olcp/arena.hpp"

#include <climits>
#include <stdexcept>
#include <string>

#include "olcp/errors.hpp"

namespace olcp {

std::array<int, 5> GameResult::stage_rounds() const {
  std::array<int, 5> rounds{};
  for (const GameStep& step : steps) {
    rounds[static_cast<std::size_t>(step.stage)] += 1;
  }
  return rounds;
}

GameResult play_game(Adversary adversary, OnlineAlgorithm& algorithm,
                     const PlayOptions& options) {
  const bool check_width =
      options.check_width.value_or(max_game_length(adversary.k()) <= 10'000);

  GameResult result;
  result.k = adversary.k();
  result.target = adversary.target();

  WidthTracker tracker;
  int index = 0;
  while (!adversary.is_done()) {
    const UnitInterval x = adversary.next_interval();
    const Stage stage = adversary.state().stage;
    ++index;

    const ChainId choice = algorithm.step(result.partition, x);
    if (!result.partition.is_legal(choice, x)) {
      throw IllegalMoveError(
          index, choice,
          "illegal move at step " + std::to_string(index) + ": chain " +
              std::to_string(choice) + " cannot take " + x.right.to_string());
    }

    AdversaryState before;
    if (options.on_step) before = adversary.state();

    result.partition.assign(choice, x);
    adversary.observe_assignment(choice, result.partition.chain_count());
    if (check_width) tracker.insert(x.right);

    result.steps.push_back(GameStep{index, x, choice, stage,
                                    result.partition.chain_count(),
                                    check_width ? tracker.width() : -1});
    if (options.on_step) options.on_step(before, adversary.state(), result.steps.back());
  }

  result.distinct_chains = result.partition.chain_count();
  // Prefix widths only grow, so the final width is the maximum.
  result.max_width = check_width ? tracker.width() : -1;
  result.forced = result.distinct_chains >= result.target;
  return result;
}

namespace {

struct Searcher {
  const SearchOptions& options;
  int target;
  SearchResult result;
  std::vector<ChainId> path;

  void visit(const Adversary& adversary, const ChainPartition& partition) {
    if (result.nodes >= options.node_budget) {
      const int partial = result.games == 0 ? -1 : result.min_chains;
      throw SearchBudgetError(result.nodes, partial,
                              "search stopped at the node budget of " +
                                  std::to_string(options.node_budget));
    }
    ++result.nodes;

    if (adversary.is_done() ||
        (options.prune_at_target && partition.chain_count() >= target)) {
      ++result.games;
      result.min_chains = std::min(result.min_chains, partition.chain_count());
      if (options.collect_scripts) result.scripts.push_back(path);
      return;
    }

    const UnitInterval x = adversary.next_interval();
    std::vector<ChainId> moves = partition.legal_chains(x);
    moves.push_back(partition.chain_count());
    for (ChainId move : moves) {
      Adversary child = adversary;
      ChainPartition next = partition;
      next.assign(move, x);
      child.observe_assignment(move, next.chain_count());
      path.push_back(move);
      visit(child, next);
      path.pop_back();
    }
  }
};

// splitmix64 finalizer; enough mixing to decorrelate per-game seeds.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_name(std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

SearchResult min_forced_chains(int k, const SearchOptions& options) {
  Searcher searcher{options, 3 * k + 2, SearchResult{}, {}};
  searcher.result.min_chains = INT_MAX;
  searcher.visit(Adversary(k), ChainPartition{});
  return searcher.result;
}

std::vector<BatchRow> batch_run(std::string_view algorithm, int k_min, int k_max,
                                int trials, std::uint64_t seed,
                                const PlayOptions& options) {
  if (k_min < 1) throw std::invalid_argument("batch_run requires k_min >= 1");
  if (trials < 1) throw std::invalid_argument("batch_run requires trials >= 1");

  constexpr std::string_view kRandom = "random:";
  const bool randomized = algorithm.substr(0, kRandom.size()) == kRandom;
  // Probe the algorithm spec up front so a bad name fails before any games run.
  make_algorithm(algorithm);

  std::vector<BatchRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    BatchRow row;
    row.k = k;
    row.target = 3 * k + 2;
    row.games = randomized ? trials : 1;
    row.min_chains = INT_MAX;
    row.max_chains = 0;
    row.all_forced = true;
    for (int trial = 0; trial < row.games; ++trial) {
      std::unique_ptr<OnlineAlgorithm> alg;
      if (randomized) {
        const std::uint64_t game_seed =
            mix(seed ^ mix(hash_name(algorithm) ^
                           mix((static_cast<std::uint64_t>(k) << 32) |
                               static_cast<std::uint64_t>(trial))));
        alg = std::make_unique<RandomLegal>(game_seed);
      } else {
        alg = make_algorithm(algorithm);
      }
      const GameResult game = play_game(Adversary(k), *alg, options);
      row.min_chains = std::min(row.min_chains, game.distinct_chains);
      row.max_chains = std::max(row.max_chains, game.distinct_chains);
      row.max_width = std::max(row.max_width, game.max_width);
      row.all_forced = row.all_forced && game.forced;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace olcp
