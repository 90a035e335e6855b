#include "olcp/chains.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "olcp/interval.hpp"
#include "testutil.hpp"

using namespace olcp;
using testutil::intervals;
using testutil::rat;

TEST_CASE("comparability follows the strict one-unit gap rule") {
  auto at = [](std::string_view r) { return UnitInterval{rat(r)}; };
  CHECK(compare(at("0"), at("3/2")) == Ordering::Less);
  CHECK(compare(at("3/2"), at("0")) == Ordering::Greater);
  CHECK(compare(at("0"), at("5/2")) == Ordering::Less);
  // A gap of exactly one: the closed intervals touch, so incomparable.
  CHECK(compare(at("0"), at("1")) == Ordering::Incomparable);
  CHECK(compare(at("1"), at("0")) == Ordering::Incomparable);
  CHECK(compare(at("0"), at("0")) == Ordering::Incomparable);
  CHECK(compare(at("3/2"), at("5/4")) == Ordering::Incomparable);
  CHECK(comparable(at("-25/16"), at("0")));       // gap 25/16 > 1
  CHECK_FALSE(comparable(at("-49/32"), at("-25/16")));
  CHECK(at("3/2").left() == rat("1/2"));
}

TEST_CASE("is_chain requires strict gaps between consecutive endpoints") {
  CHECK(is_chain(intervals({})));
  CHECK(is_chain(intervals({"0"})));
  CHECK(is_chain(intervals({"0", "3/2"})));
  CHECK(is_chain(intervals({"5/2", "0", "5/4"})));  // order of presentation irrelevant
  CHECK_FALSE(is_chain(intervals({"0", "1"})));     // touching
  CHECK_FALSE(is_chain(intervals({"0", "0"})));
  CHECK_FALSE(is_chain(intervals({"0", "3/2", "5/4"})));
}

TEST_CASE("partition assignment is dense and irrevocable") {
  ChainPartition p;
  CHECK(p.empty());
  CHECK(p.chain_count() == 0);
  CHECK(p.is_legal(0, UnitInterval{rat("0")}));       // fresh
  CHECK_FALSE(p.is_legal(1, UnitInterval{rat("0")})); // skips an id
  CHECK_FALSE(p.is_legal(-1, UnitInterval{rat("0")}));
  CHECK_THROWS_AS(p.assign(1, UnitInterval{rat("0")}), std::out_of_range);

  p.assign(0, UnitInterval{rat("0")});
  p.assign(1, UnitInterval{rat("1/2")});
  p.assign(0, UnitInterval{rat("3/2")});
  CHECK(p.chain_count() == 2);
  CHECK(p.element_count() == 3);
  CHECK(p.chain(0).size() == 2);
  CHECK(p.chain(0)[1] == UnitInterval{rat("3/2")});
  CHECK_THROWS_AS(p.chain(2), std::out_of_range);
  CHECK_THROWS_AS(p.chain(-1), std::out_of_range);

  // 3 is comparable to both of chain 0, but sits within one unit of 1/2.
  CHECK(p.is_legal(0, UnitInterval{rat("3")}));
  CHECK(p.is_legal(1, UnitInterval{rat("3")}));
  CHECK(p.legal_chains(UnitInterval{rat("3")}) == std::vector<ChainId>{0, 1});
  CHECK(p.legal_chains(UnitInterval{rat("5/4")}).empty());
  CHECK(p.legal_chains(UnitInterval{rat("-3/4")}) == std::vector<ChainId>{1});
  CHECK(p.legal_chains(UnitInterval{rat("-2")}) == std::vector<ChainId>{0, 1});
}

TEST_CASE("validate_partition reports the first incomparable pair") {
  ChainPartition good;
  good.assign(0, UnitInterval{rat("0")});
  good.assign(1, UnitInterval{rat("1/2")});
  good.assign(0, UnitInterval{rat("3/2")});
  CHECK_FALSE(validate_partition(good).has_value());

  ChainPartition bad;
  bad.assign(0, UnitInterval{rat("0")});
  bad.assign(0, UnitInterval{rat("3/2")});
  bad.assign(0, UnitInterval{rat("5/4")});
  const auto violation = validate_partition(bad);
  REQUIRE(violation.has_value());
  CHECK(violation->chain == 0);
  CHECK(violation->first == UnitInterval{rat("3/2")});
  CHECK(violation->second == UnitInterval{rat("5/4")});
}

TEST_CASE("width equals the densest one-unit window") {
  CHECK(width(intervals({})) == 0);
  CHECK(width(intervals({"0"})) == 1);
  CHECK(width(intervals({"0", "1"})) == 2);
  CHECK(width(intervals({"0", "3/2"})) == 1);
  CHECK(width(intervals({"0", "1/2", "1"})) == 3);
  CHECK(width(intervals({"0", "0", "0"})) == 3);
  CHECK(width(intervals({"0", "0", "3/2", "7/4", "5/2"})) == 3);
  CHECK(width(intervals({"0", "3/2", "3", "9/2"})) == 1);
}

TEST_CASE("width tracker agrees with the one-shot computation") {
  std::mt19937_64 rng(0x91d7ull);
  for (int round = 0; round < 20; ++round) {
    const auto elements = testutil::random_instance(rng, 120, 4);
    WidthTracker tracker;
    std::vector<UnitInterval> prefix;
    int last = 0;
    for (const UnitInterval& e : elements) {
      const int probed = tracker.width_with(e.right);
      tracker.insert(e.right);
      prefix.push_back(e);
      const int expected = width(prefix);
      CAPTURE(prefix.size());
      REQUIRE(tracker.width() == expected);
      REQUIRE(probed == expected);
      REQUIRE(tracker.width() >= last);  // widths only grow
      last = tracker.width();
    }
    CHECK(tracker.size() == elements.size());
  }
}

TEST_CASE("width tracker probe does not mutate") {
  WidthTracker tracker;
  tracker.insert(rat("0"));
  tracker.insert(rat("1/2"));
  CHECK(tracker.width() == 2);
  CHECK(tracker.width_with(rat("3/4")) == 3);
  CHECK(tracker.width_with(rat("3/4")) == 3);
  CHECK(tracker.width() == 2);
  CHECK(tracker.size() == 2);
}

TEST_CASE("offline partition is valid and uses exactly width chains") {
  SUBCASE("hand instances") {
    const auto a = intervals({"0", "0", "3/2", "7/4", "5/2"});
    const ChainPartition p = offline_optimal_partition(a);
    CHECK_FALSE(validate_partition(p).has_value());
    CHECK(p.element_count() == a.size());
    CHECK(p.chain_count() == width(a));

    CHECK(offline_optimal_partition(intervals({})).chain_count() == 0);
    CHECK(offline_optimal_partition(intervals({"5", "0"})).chain_count() == 1);
    CHECK(offline_optimal_partition(intervals({"0", "0", "0"})).chain_count() == 3);
  }

  SUBCASE("random instances") {
    std::mt19937_64 rng(0x0ff1ull);
    for (int round = 0; round < 200; ++round) {
      const auto elements = testutil::random_instance(rng, 1 + round % 40);
      const ChainPartition p = offline_optimal_partition(elements);
      CAPTURE(round);
      REQUIRE_FALSE(validate_partition(p).has_value());
      REQUIRE(p.element_count() == elements.size());
      REQUIRE(p.chain_count() == width(elements));
    }
  }
}
