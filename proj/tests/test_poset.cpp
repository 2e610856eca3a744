#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "posetglue/generate.hpp"

using namespace posetglue;

namespace {

Poset chain3() { return Poset::build(std::vector<NodeId>{"a", "b", "c"}, Relation{{"a", "b"}, {"b", "c"}}); }

using fixtures::kind_of;

}  // namespace

TEST_CASE("build reduces to covers and sorts ids") {
  auto p = Poset::build(std::vector<NodeId>{"c", "a", "b"}, Relation{{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "b"}});
  CHECK(p.nodes() == std::vector<NodeId>{"a", "b", "c"});
  CHECK(p.cover_pairs() == Relation{{"a", "b"}, {"b", "c"}});
  CHECK(p.leq("a", "c"));
  CHECK_FALSE(p.covers("a", "c"));
  CHECK(p == chain3());
}

TEST_CASE("build rejects bad input") {
  CHECK(kind_of([] { Poset::build(std::vector<NodeId>{"a", "b"}, Relation{{"a", "b"}, {"b", "a"}}); }) ==
        ErrorKind::CycleDetected);
  CHECK(kind_of([] { Poset::build(std::vector<NodeId>{"a"}, Relation{{"a", "z"}}); }) == ErrorKind::DanglingNode);
  CHECK(kind_of([] { Poset::build(std::vector<NodeId>{"a", "a"}, Relation{}); }) == ErrorKind::DuplicateNode);
}

TEST_CASE("figure X: dimension, extremes and chains") {
  const Poset x = fixtures::load("fig1.poset");
  CHECK(x.size() == 9);
  CHECK(x.cover_pairs().size() == 10);
  CHECK(dim(x) == 6);
  CHECK(dim(x) == oracle::dim(oracle::order_of(x)));
  CHECK(min_nodes(x) == NodeSet{"10"});
  CHECK(max_nodes(x) == NodeSet{"1"});
  CHECK(maximal_chains(x).size() == 4);
  CHECK(count_longest_chains(x) == 1);
  CHECK(height(x, "1") == 6);
  CHECK(coheight(x, "10") == 6);
  CHECK(height(x, "6") == 3);
  CHECK(coheight(x, "6") == 3);
  const auto chains = maximal_chains(x);
  CHECK(std::find(chains.begin(), chains.end(), Chain{"10", "9", "8", "6", "5", "4", "1"}) != chains.end());
}

TEST_CASE("queries on the empty poset and unknown ids") {
  Poset empty;
  CHECK(kind_of([&] { dim(empty); }) == ErrorKind::EmptyPoset);
  CHECK(kind_of([&] { min_nodes(empty); }) == ErrorKind::EmptyPoset);
  CHECK(kind_of([] { height(chain3(), "q"); }) == ErrorKind::UnknownNode);
}

TEST_CASE("antichains, complete subsets, down- and up-sets") {
  const Poset x = fixtures::load("fig4-left.poset");
  CHECK(is_antichain(x, {"6L", "6R"}));
  CHECK_FALSE(is_antichain(x, {"6R", "5"}));
  CHECK(is_complete_subset(x, {"6L", "6R"}));
  CHECK(is_complete_subset(x, {"6R", "5", "4"}));
  CHECK_FALSE(is_complete_subset(x, {"6R", "4"}));
  CHECK(down_set(x, "4") == NodeSet{"4", "5", "6R"});
  CHECK(up_set(x, "6L") == NodeSet{"6L", "2", "1"});
}

TEST_CASE("fresh ids skip taken names") {
  CHECK(fresh_id("a", {"b"}) == "a");
  CHECK(fresh_id("a", {"a", "a~1"}) == "a~2");
}

TEST_CASE("induced subposet and relabel") {
  const Poset x = fixtures::load("fig1.poset");
  const Poset sub = induced(x, {"10", "6", "1"});
  CHECK(sub.cover_pairs() == Relation{{"10", "6"}, {"6", "1"}});
  const Poset r = relabel(chain3(), {{"a", "z"}, {"b", "y"}, {"c", "x"}});
  CHECK(r.cover_pairs() == Relation{{"y", "x"}, {"z", "y"}});
  CHECK(kind_of([] { relabel(chain3(), {{"a", "z"}}); }) == ErrorKind::NotTotal);
}

TEST_CASE("dimension and chains agree with brute force on random posets") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Poset p = random_poset(seed, 1 + seed % 8, 0.1 * static_cast<double>(seed % 7));
    const auto o = oracle::order_of(p);
    REQUIRE(dim(p) == oracle::dim(o));
    REQUIRE(count_longest_chains(p) == oracle::eta(o));
    const auto chains = maximal_chains(p);
    REQUIRE(std::set<Chain>(chains.begin(), chains.end()) == oracle::maximal_chains(o));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) REQUIRE(p.leq(a, b) == o.le[a][b]);
  }
}
