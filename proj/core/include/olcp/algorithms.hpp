#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "olcp/chains.hpp"

namespace olcp {

// An on-line chain partitioning algorithm. step() sees the partition built
// so far and the newly presented element, and must return a legal chain:
// an existing one whose elements are all comparable to x, or the fresh id
// chain_count(). The arena enforces legality; decisions are irrevocable.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  virtual ChainId step(const ChainPartition& p, const UnitInterval& x) = 0;
  virtual std::string name() const = 0;
};

// Lowest-numbered legal chain; fresh chain when none exists.
class FirstFit : public OnlineAlgorithm {
 public:
  ChainId step(const ChainPartition& p, const UnitInterval& x) override;
  std::string name() const override { return "first-fit"; }
};

// Tightest legal fit. Prefers the legal chain whose top endpoint below
// x's interval is largest; failing that, the legal chain whose lowest
// endpoint above x's interval is smallest; fresh chain when nothing is
// legal. Ties break toward the smaller id.
class BestFit : public OnlineAlgorithm {
 public:
  ChainId step(const ChainPartition& p, const UnitInterval& x) override;
  std::string name() const override { return "best-fit"; }
};

// Uniform choice among the legal chains plus one fresh chain.
// Fully determined by the seed.
class RandomLegal : public OnlineAlgorithm {
 public:
  explicit RandomLegal(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  ChainId step(const ChainPartition& p, const UnitInterval& x) override;
  std::string name() const override { return "random:" + std::to_string(seed_); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// Replays a fixed decision list verbatim, no legality filtering of its
// own. Throws ScriptExhaustedError once the list runs out.
class Scripted : public OnlineAlgorithm {
 public:
  explicit Scripted(std::vector<ChainId> script) : script_(std::move(script)) {}

  ChainId step(const ChainPartition& p, const UnitInterval& x) override;
  std::string name() const override;

 private:
  std::vector<ChainId> script_;
  std::size_t next_ = 0;
};

// Builds an algorithm from its name: "first-fit", "best-fit",
// "random:<seed>" with a decimal uint64 seed, or "scripted:<id,id,...>"
// (bare "scripted:" is an empty script). Throws std::invalid_argument
// for anything else.
std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view spec);

}  // namespace olcp
