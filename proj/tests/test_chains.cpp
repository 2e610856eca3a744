#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace posetglue;
using fixtures::kind_of;

TEST_CASE("chain decomposition of the figure poset") {
  const Poset x = fixtures::load("fig1.poset");
  const auto cd = chain_decomposition(x);
  CHECK(cd.chains.size() == 4);
  CHECK(cd.d.size() == 6 + 5 + 6 + 7);
  CHECK(verify_chain_decomposition(cd));
  const auto lift = verify_min_max_lifting(cd);
  CHECK(lift.min_d.size() == 4);
  CHECK(lift.max_d.size() == 4);
  CHECK(cd.phi("a0.0") == "10");
  CHECK(decomposition_fibers(cd).size() == 9);
}

TEST_CASE("broken decompositions are rejected") {
  const Poset x = fixtures::load("fig6-v.poset");
  auto cd = chain_decomposition(x);
  REQUIRE(verify_chain_decomposition(cd));
  auto dropped = cd;
  dropped.chains.pop_back();
  CHECK_FALSE(verify_chain_decomposition(dropped));

  // both chains sent onto the same maximal chain
  auto doubled = cd;
  auto assign = cd.phi.assignment();
  for (auto& [k, v] : assign)
    if (v == "4") v = "2";
  doubled.phi = PosetMap(cd.d, x, assign);
  CHECK_FALSE(verify_chain_decomposition(doubled));
}

TEST_CASE("gluing D along every fiber gives X back") {
  const Poset x = fixtures::load("fig1.poset");
  const auto cd = chain_decomposition(x);
  const auto all = glue_D_along_subcollection(cd, decomposition_fibers(cd));
  CHECK(all.f_poset == x);
  CHECK(is_isomorphism(all.f));
  const auto none = glue_D_along_subcollection(cd, {});
  CHECK(none.f_poset.size() == cd.d.size());
  CHECK(isomorphic(none.f_poset, cd.d));
  CHECK(kind_of([&] { glue_D_along_subcollection(cd, {{"a0.0", "a0.1"}}); }) == ErrorKind::NotASubcollection);
}

TEST_CASE("splitting a shared minimum") {
  const Poset f1 = fixtures::load("fig5-f1.poset");
  const auto s = split_for_cover(f1, "6", "5");
  CHECK(s.f_poset.size() == 7);
  CHECK(preimage(s.f, "6") == NodeSet{"6~1", "6~2"});
  CHECK(s.f_poset.upper_covers(s.f_poset.index_of("6~2")) ==
        std::vector<std::size_t>{s.f_poset.index_of("5")});
  CHECK(verify_gluing(s.f, fiber_collection(s.f)));
  CHECK(compose(s.f, s.t) == chain_decomposition(f1).phi);

  const auto again = split_for_cover(s.f_poset, "7", "5");
  CHECK(again.f_poset.size() == 8);
  CHECK(isomorphic(again.f_poset, fixtures::load("fig5-j.poset")));
}

TEST_CASE("split preconditions and the trivial case") {
  const Poset f1 = fixtures::load("fig5-f1.poset");
  CHECK(kind_of([&] { split_for_cover(f1, "5", "4"); }) == ErrorKind::NotMinimal);
  CHECK(kind_of([&] { split_for_cover(f1, "6", "4"); }) == ErrorKind::NotACover);
  const Poset x = fixtures::load("fig1.poset");
  const auto same = split_for_cover(fixtures::load("fig5-j.poset"), "6R", "5");
  CHECK(same.f_poset == fixtures::load("fig5-j.poset"));
  CHECK(is_isomorphism(same.f));
  CHECK(kind_of([&] { split_for_cover(x, "10", "9"); }) == std::nullopt);
}

TEST_CASE("chain decomposition suite (small)") {
  const auto r = props::chain_decompositions(21, 200);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}
