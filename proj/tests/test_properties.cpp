#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "properties.hpp"

TEST_CASE("every property suite passes on a fresh seed") {
  for (const auto& r : props::all_suites(2024, 100)) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.failures == 0);
    CHECK(r.instances == 100);
  }
}

TEST_CASE("the library enumerator agrees with the independent one") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto lib = posetglue::enumerate_posets(n);
    const auto ref = oracle::enumerate(n);
    REQUIRE(lib.size() == ref.size());
    std::set<std::uint64_t> lib_codes, ref_codes;
    for (const auto& p : lib) lib_codes.insert(oracle::canonical_code(oracle::order_of(p).le));
    for (const auto& le : ref) ref_codes.insert(oracle::canonical_code(le));
    CHECK(lib_codes == ref_codes);
  }
}
