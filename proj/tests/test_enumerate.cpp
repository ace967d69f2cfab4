#include <doctest.h>

#include "latt/enumerate.hpp"
#include "latt/error.hpp"
#include "oracles.hpp"

using namespace latt;

TEST_SUITE("enumerate") {
  TEST_CASE("lattice counts") {
    const int want[] = {0, 1, 1, 1, 2, 5, 15, 53, 222};
    for (int n = 1; n <= 8; ++n) CHECK(catalog(n).size() == want[n]);
  }

  TEST_CASE("catalog matches the poset-filter oracle up to 6 elements") {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::vector<char>> mine;
      for (const auto& L : catalog(n).lattices) mine.insert(oracle::canonical_code(oracle::order_of(L)));
      CHECK(int(mine.size()) == catalog(n).size());
      CHECK(mine == oracle::lattices(n));
    }
  }

  TEST_CASE("catalog generation is deterministic") {
    const auto a = enumerate_lattices(6);
    const auto b = enumerate_lattices(6);
    CHECK(catalog_to_jsonl(a) == catalog_to_jsonl(b));
    CHECK(catalog_to_jsonl(catalog_from_jsonl(catalog_to_jsonl(a))) == catalog_to_jsonl(a));
  }

  TEST_CASE("size cap") { CHECK_THROWS_AS(enumerate_lattices(kEnumCap + 1), Error); }

  TEST_CASE("every (lattice, Delta) pair is listed once") {
    const auto all = enumerate_wcl_algebras(5);
    size_t total = 0;
    for (const auto& L : catalog(5).lattices) total += enumerate_weak_complementations(L).size();
    CHECK(all.size() == total);
  }
}
