#include "olcp/algorithms.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

#include "olcp/errors.hpp"

namespace olcp {

ChainId FirstFit::step(const ChainPartition& p, const UnitInterval& x) {
  for (ChainId id = 0; id < p.chain_count(); ++id) {
    if (p.is_legal(id, x)) return id;
  }
  return p.chain_count();
}

ChainId BestFit::step(const ChainPartition& p, const UnitInterval& x) {
  // A legal chain sits entirely below x (top endpoint under x's interval)
  // or entirely above it... not quite: it may straddle, with some elements
  // below and some above. Classify by the nearest endpoint: chains with
  // their maximum below x's interval compete on that maximum (larger is
  // tighter); the rest compete on their smallest endpoint above x's
  // interval (smaller is tighter). Below beats above.
  std::optional<ChainId> best_below;
  Rational best_below_top;
  std::optional<ChainId> best_above;
  Rational best_above_bottom;

  for (ChainId id : p.legal_chains(x)) {
    const auto chain = p.chain(id);
    Rational top = chain.front().right;
    for (const UnitInterval& e : chain) {
      if (e.right > top) top = e.right;
    }
    if (top < x.right - 1) {
      if (!best_below || top > best_below_top) {
        best_below = id;
        best_below_top = top;
      }
    } else {
      // Legal and not entirely below, so the maximum lies above x's
      // interval; the smallest such endpoint is the binding one.
      Rational bottom = top;
      for (const UnitInterval& e : chain) {
        if (e.right > x.right + 1 && e.right < bottom) bottom = e.right;
      }
      if (!best_above || bottom < best_above_bottom) {
        best_above = id;
        best_above_bottom = bottom;
      }
    }
  }

  if (best_below) return *best_below;
  if (best_above) return *best_above;
  return p.chain_count();
}

ChainId RandomLegal::step(const ChainPartition& p, const UnitInterval& x) {
  std::vector<ChainId> options = p.legal_chains(x);
  options.push_back(p.chain_count());
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return options[pick(rng_)];
}

ChainId Scripted::step(const ChainPartition&, const UnitInterval&) {
  if (next_ >= script_.size()) {
    throw ScriptExhaustedError("script exhausted after " +
                               std::to_string(script_.size()) + " decisions");
  }
  return script_[next_++];
}

std::string Scripted::name() const {
  std::string out = "scripted:";
  for (std::size_t i = 0; i < script_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(script_[i]);
  }
  return out;
}

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) return std::nullopt;
  return value;
}

std::optional<int> parse_chain_id(std::string_view text) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view spec) {
  if (spec == "first-fit") return std::make_unique<FirstFit>();
  if (spec == "best-fit") return std::make_unique<BestFit>();

  constexpr std::string_view kRandom = "random:";
  if (spec.substr(0, kRandom.size()) == kRandom) {
    const auto seed = parse_u64(spec.substr(kRandom.size()));
    if (!seed) {
      throw std::invalid_argument("bad seed in algorithm spec \"" + std::string(spec) +
                                  "\"; expected random:<uint64>");
    }
    return std::make_unique<RandomLegal>(*seed);
  }

  constexpr std::string_view kScripted = "scripted:";
  if (spec.substr(0, kScripted.size()) == kScripted) {
    std::vector<ChainId> script;
    std::string_view rest = spec.substr(kScripted.size());
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      const auto id = parse_chain_id(item);
      if (!id) {
        throw std::invalid_argument("bad chain id \"" + std::string(item) +
                                    "\" in algorithm spec \"" + std::string(spec) + "\"");
      }
      script.push_back(*id);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      if (rest.empty()) {
        throw std::invalid_argument("trailing comma in algorithm spec \"" +
                                    std::string(spec) + "\"");
      }
    }
    return std::make_unique<Scripted>(std::move(script));
  }

  throw std::invalid_argument(
      "unknown algorithm \"" + std::string(spec) +
      "\"; expected first-fit, best-fit, random:<seed> or scripted:<ids>");
}

}  // namespace olcp
