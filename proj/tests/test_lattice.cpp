#include <doctest.h>

#include "latt/constructions.hpp"
#include "latt/enumerate.hpp"
#include "latt/error.hpp"
#include "oracles.hpp"

using namespace latt;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("meet and join agree with the order on every catalog lattice up to 6 elements") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& L : catalog(n).lattices) {
        const auto t = oracle::tables(L);
        CHECK(L.bottom() == t.bot);
        CHECK(L.top() == t.top);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            REQUIRE(L.meet(x, y) == t.meet[x][y]);
            REQUIRE(L.join(x, y) == t.join[x][y]);
          }
      }
  }

  TEST_CASE("lattice laws hold exhaustively") {
    for (const auto& L : catalog(6).lattices) {
      const int n = L.size();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          CHECK(L.meet(x, y) == L.meet(y, x));
          CHECK(L.join(x, L.meet(x, y)) == x);
          CHECK(L.meet(x, L.join(x, y)) == x);
          for (int z = 0; z < n; ++z) CHECK(L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z)));
        }
    }
  }

  TEST_CASE("validation rejects non-lattices") {
    CHECK(kind_of([] { FiniteLattice::from_covers(3, {{0, 1}, {1, 2}, {2, 0}}); }) == ErrorKind::NotAPartialOrder);
    // two maximal elements
    CHECK(kind_of([] { FiniteLattice::from_covers(3, {{0, 1}, {0, 2}}); }) == ErrorKind::Unbounded);
    // bowtie: a, b < c, d has no join of a and b
    CHECK(kind_of([] {
            FiniteLattice::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
          }) == ErrorKind::NotALattice);
  }

  TEST_CASE("irreducibles, atoms and coatoms of N5") {
    const FiniteLattice N = n5();
    CHECK(join_irreducibles(N).members() == std::vector<int>{1, 2, 3});
    CHECK(meet_irreducibles(N).members() == std::vector<int>{1, 2, 3});
    CHECK(atoms(N).members() == std::vector<int>{1, 2});
    CHECK(coatoms(N).members() == std::vector<int>{1, 3});
  }

  TEST_CASE("Boolean lattices have every non-bottom element as a join of atoms") {
    const FiniteLattice B = boolean(3);
    CHECK(join_irreducibles(B).members() == atoms(B).members());
    CHECK(meet_irreducibles(B).members() == coatoms(B).members());
  }

  TEST_CASE("dual keeps indices and reverses the order") {
    const FiniteLattice N = n5();
    const FiniteLattice D = dual(N);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) CHECK(D.leq(x, y) == N.leq(y, x));
    CHECK(dual(D) == N);
    CHECK(are_isomorphic(D, N).has_value());
  }

  TEST_CASE("isomorphism witnesses preserve the order both ways") {
    const FiniteLattice a = eval("chain:3|chain:4");
    const FiniteLattice b = relabel(a, {4, 2, 0, 3, 1});
    auto f = are_isomorphic(a, b);
    REQUIRE(f.has_value());
    CHECK(is_isomorphism(a, b, *f));
    CHECK_FALSE(are_isomorphic(n5(), m_kappa(3)).has_value());
    CHECK_FALSE(are_isomorphic(chain(4), boolean(2)).has_value());
  }

  TEST_CASE("catalog lattices are pairwise non-isomorphic") {
    for (int n = 4; n <= 6; ++n) {
      const auto& c = catalog(n).lattices;
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) CHECK_FALSE(are_isomorphic(c[i], c[j]).has_value());
    }
  }

  TEST_CASE("canonical forms agree exactly on isomorphic lattices") {
    const FiniteLattice a = eval("bool:2+chain:3");
    const FiniteLattice b = relabel(a, {5, 3, 4, 0, 1, 2});
    CHECK(canonical_form(a).cert == canonical_form(b).cert);
    CHECK(canonical_form(a).cert != canonical_form(eval("chain:3+bool:2")).cert);
  }

  TEST_CASE("JSON round trip is byte-stable") {
    for (const auto& L : catalog(6).lattices) {
      const std::string s = to_json(L);
      CHECK(to_json(lattice_from_json(s)) == s);
    }
  }

  TEST_CASE("JSON loader rejects a list that is not the cover relation") {
    CHECK(kind_of([] { lattice_from_json(R"({"n":3,"covers":[[0,1],[1,2],[0,2]]})"); }) ==
          ErrorKind::NotAPartialOrder);
    CHECK(kind_of([] { lattice_from_json("{oops"); }) == ErrorKind::Parse);
  }

  TEST_CASE("intervals and element labels") {
    const FiniteLattice B = boolean(3);
    std::vector<int> map;
    const FiniteLattice I = interval(B, 1, 7, &map);
    CHECK(are_isomorphic(I, boolean(2)).has_value());
    CHECK(map.size() == 4);
    const auto lab = element_labels(chain(4));
    CHECK(lab == std::vector<std::string>{"0", "a1", "a2", "1"});
  }

  TEST_CASE("DOT export lists every cover edge") {
    const std::string dot = to_dot(n5());
    CHECK(dot.find("digraph") != std::string::npos);
    size_t arrows = 0;
    for (size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
    CHECK(arrows == covers(n5()).size());
  }
}
