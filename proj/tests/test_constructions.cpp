#include <doctest.h>

#include "latt/constructions.hpp"
#include "latt/error.hpp"
#include "latt/shape.hpp"

using namespace latt;

namespace {
bool iso(const FiniteLattice& a, const FiniteLattice& b) { return are_isomorphic(a, b).has_value(); }
}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("sizes of the basic families") {
    CHECK(chain(5).size() == 5);
    CHECK(boolean(3).size() == 8);
    CHECK(m_kappa(3).size() == 5);
    CHECK(n5().size() == 5);
    CHECK(product(chain(2), chain(3)).size() == 6);
    CHECK(ordinal_sum(chain(3), boolean(2)).size() == 6);
    CHECK(horizontal_sum(chain(3), chain(4)).size() == 5);
  }

  TEST_CASE("N5 is C3 [+] C4 and M3 is C3 [+] C3 [+] C3") {
    CHECK(iso(horizontal_sum(chain(3), chain(4)), n5()));
    CHECK(iso(horizontal_sum(horizontal_sum(chain(3), chain(3)), chain(3)), m_kappa(3)));
    CHECK(iso(product(chain(2), chain(2)), boolean(2)));
  }

  TEST_CASE("ordinal sum keeps the left indices and glues top to bottom") {
    const FiniteLattice L = chain(3), M = boolean(2);
    const FiniteLattice S = ordinal_sum(L, M);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(S.leq(x, y) == L.leq(x, y));
    const auto f = osum_right_embedding(L, M);
    CHECK(f[M.bottom()] == L.top());
    CHECK(f[M.top()] == S.top());
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(S.leq(f[x], f[y]) == M.leq(x, y));
  }

  TEST_CASE("horizontal sum shares only the bounds") {
    const FiniteLattice L = chain(4), M = chain(3);
    const FiniteLattice H = horizontal_sum(L, M);
    const auto g = hsum_right_embedding(L, M);
    CHECK(g[0] == H.bottom());
    CHECK(g[2] == H.top());
    for (int x = 1; x < 3; ++x) CHECK_FALSE(H.comparable(x, g[1]));
    CHECK(H.join(1, g[1]) == H.top());
    CHECK(H.meet(2, g[1]) == H.bottom());
  }

  TEST_CASE("product indexing is x*|M|+y") {
    const FiniteLattice P = product(chain(2), chain(3));
    CHECK(P.leq(1, 4));   // (0,1) <= (1,1)
    CHECK_FALSE(P.comparable(2, 3));  // (0,2) vs (1,0)
    CHECK(P.join(2, 3) == 5);
    CHECK(P.meet(2, 4) == 1);
  }

  TEST_CASE("C2 is neutral for horizontal sums and C1 is rejected") {
    CHECK(iso(horizontal_sum(chain(2), chain(3)), chain(3)));
    CHECK(iso(horizontal_sum(n5(), chain(2)), n5()));
    CHECK_THROWS_AS(horizontal_sum(chain(1), chain(3)), Error);
  }

  TEST_CASE("expression grammar and precedence") {
    CHECK(iso(eval("chain:2*chain:3+chain:2"), ordinal_sum(product(chain(2), chain(3)), chain(2))));
    CHECK(iso(eval("chain:3|chain:4"), n5()));
    CHECK(iso(eval("bool:2+chain:3|chain:3"), ordinal_sum(boolean(2), m_kappa(2))));
    CHECK(iso(eval("dual(bool:2+chain:3)"), ordinal_sum(chain(3), boolean(2))));
    CHECK(iso(eval("interval(bool:3,1,7)"), boolean(2)));
    CHECK(eval("mk:4").size() == 6);
    CHECK(to_string(parse_expr(to_string(parse_expr("chain:2*(chain:3|chain:3)")))) ==
          to_string(parse_expr("chain:2*(chain:3|chain:3)")));
    CHECK_THROWS_AS(eval("chain:"), Error);
    CHECK_THROWS_AS(eval("chain:3++chain:2"), Error);
    CHECK_THROWS_AS(eval("unknown:3"), Error);
  }

  TEST_CASE("shape naming agrees with isomorphism") {
    for (const char* e : {"bool:3+chain:2", "chain:2*chain:3", "chain:3|chain:4", "mk:3", "chain:5", "bool:2+bool:2"}) {
      const FiniteLattice L = eval(e);
      auto s = name_shape(L);
      REQUIRE(s.has_value());
      CHECK(iso(eval(*s), L));
    }
    CHECK(pretty(*name_shape(ordinal_sum(boolean(3), chain(2)))) == "C2^3 (+) C2");
  }
}
