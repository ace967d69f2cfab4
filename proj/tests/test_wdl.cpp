#include <doctest.h>

#include "latt/congruence.hpp"
#include "latt/constructions.hpp"
#include "latt/enumerate.hpp"
#include "latt/verify.hpp"
#include "latt/wdl.hpp"
#include "oracles.hpp"

using namespace latt;

namespace {

std::vector<UnaryOp> sorted(std::vector<UnaryOp> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool iso(const FiniteLattice& a, const FiniteLattice& b) { return are_isomorphic(a, b).has_value(); }

}  // namespace

TEST_SUITE("wdl") {
  TEST_CASE("weak complementations match the unpruned brute force up to 5 elements") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& L : catalog(n).lattices) {
        CHECK(sorted(enumerate_weak_complementations(L)) == oracle::weak_complementations(L));
        CHECK(sorted(enumerate_dual_weak_complementations(L)) == oracle::weak_complementations(L, true));
      }
  }

  TEST_CASE("C2 x C3 has three weak complementations and three duals") {
    const FiniteLattice P = product(chain(2), chain(3));
    const auto bf = oracle::weak_complementations(P);
    CHECK(bf.size() == 3);
    CHECK(sorted(enumerate_weak_complementations(P)) == bf);
    CHECK(sorted(enumerate_dual_weak_complementations(P)) == oracle::weak_complementations(P, true));
    CHECK(enumerate_dicomplementations(P).size() == 9);
    // the four-element table u,a -> b; b -> a fails xΔΔ <= x at u
    CHECK(wcl_violation(P, {5, 5, 4, 2, 2, 0}).has_value());
  }

  TEST_CASE("trivial operations") {
    for (const auto& L : catalog(5).lattices) {
      const auto d = trivial_delta(L), n = trivial_nabla(L);
      CHECK(is_weak_complementation(L, d));
      CHECK(is_dual_weak_complementation(L, n));
      CHECK(is_dicomplementation(L, d, n));
      CHECK(is_trivial_delta(L, d));
      CHECK(is_trivial_nabla(L, n));
      for (int x = 0; x < L.size(); ++x) CHECK(d[x] == (x == L.top() ? L.bottom() : L.top()));
    }
  }

  TEST_CASE("derived identities hold for every enumerated weak complementation") {
    for (int n = 2; n <= 7; ++n)
      for (const auto& L : catalog(n).lattices)
        for (const auto& d : enumerate_weak_complementations(L)) {
          CHECK(d[L.top()] == L.bottom());
          CHECK(d[L.bottom()] == L.top());
          for (int x = 0; x < n; ++x) {
            REQUIRE(L.join(x, d[x]) == L.top());
            REQUIRE(d[d[d[x]]] == d[x]);
          }
        }
  }

  TEST_CASE("Boolean complement is the unique Delta on C2^3 that is an involution") {
    const FiniteLattice B = boolean(3);
    int involutions = 0;
    for (const auto& d : enumerate_weak_complementations(B)) {
      bool inv = true;
      for (int x = 0; x < 8; ++x) inv = inv && d[d[x]] == x;
      if (inv) {
        ++involutions;
        for (int x = 0; x < 8; ++x) CHECK(d[x] == (7 ^ x));
      }
    }
    CHECK(involutions == 1);
  }

  TEST_CASE("Delta^{a,b} on horizontal sums and N5") {
    const FiniteLattice N = n5();
    auto d = delta_ab(N, 1, 3);
    REQUIRE(d.has_value());
    CHECK(*d == UnaryOp{4, 3, 4, 1, 0});
    CHECK(is_representable(N, *d).has_value());
    auto nb = nabla_ab(N, 1, 2);
    REQUIRE(nb.has_value());
    CHECK(*nb == UnaryOp{4, 2, 1, 0, 0});
    CHECK(enumerate_dicomplementations(N).size() == 4);
    CHECK_FALSE(delta_ab(chain(4), 1, 2).has_value());
  }

  TEST_CASE("smallest Delta comes from the join-irreducibles") {
    for (const auto& L : catalog(6).lattices) {
      const auto dj = delta_from_join_dense(L, join_irreducibles(L));
      REQUIRE(dj.has_value());
      CHECK(is_weak_complementation(L, *dj));
      CHECK(is_representable(L, *dj).has_value());
    }
  }

  TEST_CASE("Con_WCL of the trivial Delta is Con_1 plus the full relation") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& L : catalog(n).lattices) {
        auto want = filter_singleton(all_congruences(L).congruences, L.top());
        want.push_back(full_congruence(n));
        CHECK(same_set(con_wcl(L, trivial_delta(L)).congruences, want));
      }
  }

  TEST_CASE("Con_WDL is the intersection of Con_WCL and Con_WDCL") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& L : catalog(n).lattices)
        for (const auto& p : enumerate_dicomplementations(L)) {
          const auto a = con_wcl(L, p.delta).congruences, b = con_wdcl(L, p.nabla).congruences;
          std::vector<Congruence> both;
          for (const auto& t : a)
            if (std::find(b.begin(), b.end(), t) != b.end()) both.push_back(t);
          CHECK(same_set(con_wdl(p).congruences, both));
        }
  }

  TEST_CASE("Delta-preserving quotients carry a weak complementation") {
    for (const auto& L : catalog(6).lattices)
      for (const auto& d : enumerate_weak_complementations(L))
        for (const auto& t : con_wcl(L, d).congruences) {
          const auto q = quotient_wcl(L, d, t);
          CHECK(is_weak_complementation(q.lattice, q.op));
        }
  }

  TEST_CASE("principal Delta-preserving congruence is the least one containing the pair") {
    const FiniteLattice L = eval("chain:2+bool:2");
    for (const auto& d : enumerate_weak_complementations(L))
      for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
          const Congruence t = principal_wcl_congruence(L, d, a, b);
          CHECK(t.same(a, b));
          CHECK(preserves(t, d));
          for (const auto& s : con_wcl(L, d).congruences)
            if (s.same(a, b)) CHECK(refines(t, s));
        }
  }

  TEST_CASE("algebra JSON round trip") {
    const FiniteLattice N = n5();
    const Algebra a{N, trivial_delta(N), trivial_nabla(N)};
    const Algebra b = algebra_from_json(to_json(a));
    CHECK(b.lattice == N);
    CHECK(b.delta == a.delta);
    CHECK(b.nabla == a.nabla);
  }

  TEST_CASE("the C2 x C3 Con_WCL sizes") {
    const FiniteLattice P = product(chain(2), chain(3));
    std::vector<int> sizes;
    for (const auto& d : enumerate_weak_complementations(P)) sizes.push_back(con_wcl(P, d).size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{3, 3, 6});
    CHECK(iso(con_wcl(P, product_op(chain(2), trivial_delta(chain(2)), chain(3), trivial_delta(chain(3)))).order, P));
  }
}
