#include <doctest.h>

#include "latt/congruence.hpp"
#include "latt/constructions.hpp"
#include "latt/enumerate.hpp"
#include "latt/error.hpp"
#include "oracles.hpp"

using namespace latt;

namespace {

std::vector<std::vector<int>> labels_of(const std::vector<Congruence>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& t : cs) out.push_back(t.block_of);
  std::sort(out.begin(), out.end());
  return out;
}

bool iso(const FiniteLattice& a, const FiniteLattice& b) { return are_isomorphic(a, b).has_value(); }

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("all_congruences matches the partition brute force up to 6 elements") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& L : catalog(n).lattices) CHECK(labels_of(all_congruences(L).congruences) == oracle::congruences(L));
  }

  TEST_CASE("all_congruences matches the brute force on assorted 7- and 8-element lattices") {
    for (const char* e : {"chain:2*chain:4", "bool:3", "mk:3+chain:3", "chain:3|chain:6", "chain:4|chain:5"})
      CHECK(labels_of(all_congruences(eval(e)).congruences) == oracle::congruences(eval(e)));
  }

  TEST_CASE("congruence lattices are distributive") {
    for (int n = 1; n <= 7; ++n)
      for (const auto& L : catalog(n).lattices) {
        const FiniteLattice C = all_congruences(L).order;
        for (int x = 0; x < C.size(); ++x)
          for (int y = 0; y < C.size(); ++y)
            for (int z = 0; z < C.size(); ++z) REQUIRE(C.meet(x, C.join(y, z)) == C.join(C.meet(x, y), C.meet(x, z)));
      }
  }

  TEST_CASE("known congruence lattices") {
    CHECK(all_congruences(chain(5)).size() == 16);
    CHECK(iso(all_congruences(chain(5)).order, boolean(4)));
    CHECK(all_congruences(m_kappa(3)).size() == 2);
    CHECK(iso(all_congruences(boolean(3)).order, boolean(3)));
    // N5: =, eq(b,c), eq(0,a | b,c,1), eq(0,b,c | a,1), full
    CHECK(all_congruences(n5()).size() == 5);
    CHECK(is_subdirectly_irreducible(all_congruences(n5())));
    CHECK_FALSE(is_subdirectly_irreducible(all_congruences(boolean(2))));
  }

  TEST_CASE("principal congruences") {
    const FiniteLattice N = n5();
    CHECK(principal_congruence(N, 2, 3) == eps(5, {{2, 3}}));
    CHECK(principal_congruence(N, 0, 1) == eps(5, {{0, 1}, {2, 3, 4}}));
    CHECK(principal_congruence(N, 0, 2).is_full() == false);
    CHECK(principal_congruence(N, 0, 2) == eps(5, {{0, 2, 3}, {1, 4}}));
    CHECK(principal_congruence(N, 0, 4).is_full());
  }

  TEST_CASE("filters by singleton bounds") {
    const FiniteLattice N = n5();
    const auto c01 = con_filtered(N, true, true);
    CHECK(c01.size() == 2);
    CHECK(con_filtered(N, true, false).size() == 2);
    CHECK(filter_singleton(all_congruences(N).congruences, N.top()).size() == 2);
    CHECK(con_filtered(chain(4), true, false).size() == 4);
  }

  TEST_CASE("quotients") {
    const FiniteLattice B = boolean(3);
    const auto q = quotient(B, principal_congruence(B, 0, 1));
    CHECK(iso(q.lattice, boolean(2)));
    CHECK(q.projection[0] == q.projection[1]);
    CHECK_THROWS_AS(quotient(B, eps(8, {{0, 1}})), Error);
  }

  TEST_CASE("ordinal and horizontal sum congruences") {
    const FiniteLattice L = chain(3), M = chain(3);
    const auto a = principal_congruence(L, 0, 1), b = identity_congruence(3);
    const Congruence s = osum_congruence(L, M, a, b);
    CHECK(is_congruence(ordinal_sum(L, M), s));
    CHECK(s.num_blocks() == 4);
    const FiniteLattice H = horizontal_sum(chain(4), chain(3));
    const Congruence h = hsum_congruence(chain(4), chain(3), principal_congruence(chain(4), 1, 2), identity_congruence(3));
    CHECK(is_congruence(H, h));
    CHECK_THROWS_AS(hsum_congruence(chain(4), chain(3), full_congruence(4), identity_congruence(3)), Error);
  }

  TEST_CASE("JSON round trip of a congruence") {
    const Congruence t = eps(6, {{0, 3}, {1, 2, 5}});
    CHECK(congruence_from_json(to_json(t), 6) == t);
  }
}
