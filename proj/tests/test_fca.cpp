#include <doctest.h>

#include "latt/constructions.hpp"
#include "latt/enumerate.hpp"
#include "latt/error.hpp"
#include "latt/fca.hpp"

using namespace latt;

TEST_SUITE("fca") {
  TEST_CASE("standard context round trip for N5") {
    const FiniteLattice N = n5();
    const FormalContext ctx = standard_context(N);
    CHECK(ctx.num_objects() == 3);
    CHECK(ctx.num_attributes() == 3);
    const ConceptLattice C = concept_lattice(ctx);
    CHECK(are_isomorphic(C.lattice, N).has_value());
    const auto emb = standard_embedding(N, C);
    CHECK(is_isomorphism(N, C.lattice, emb));
  }

  TEST_CASE("standard context round trip over the catalog") {
    for (int n = 1; n <= 7; ++n)
      for (const auto& L : catalog(n).lattices) {
        const ConceptLattice C = concept_lattice(standard_context(L));
        CHECK(is_isomorphism(L, C.lattice, standard_embedding(L, C)));
      }
  }

  TEST_CASE("derivation operators form a Galois connection") {
    const FormalContext ctx = standard_context(boolean(3));
    const int g = ctx.num_objects(), m = ctx.num_attributes();
    for (int mask = 0; mask < (1 << g); ++mask) {
      ElementSet A(g);
      for (int i = 0; i < g; ++i)
        if (mask >> i & 1) A.insert(i);
      const ElementSet B = derive_objects(ctx, A);
      CHECK(A.subset_of(derive_attributes(ctx, B)));
      CHECK(derive_objects(ctx, derive_attributes(ctx, B)) == B);
      CHECK(B.universe() == m);
    }
  }

  TEST_CASE("concepts are listed in lectic order of extents without repeats") {
    const ConceptLattice C = concept_lattice(standard_context(eval("chain:2*chain:3")));
    CHECK(C.concepts.size() == 6);
    for (size_t i = 0; i < C.concepts.size(); ++i)
      for (size_t j = i + 1; j < C.concepts.size(); ++j) CHECK_FALSE(C.concepts[i].extent == C.concepts[j].extent);
    CHECK(C.index_of_extent(C.concepts[3].extent) == 3);
  }

  TEST_CASE("concept algebra of a context is a weak dicomplementation") {
    const FormalContext ctx = read_cxt(
        "B\n\n4\n3\n\ng1\ng2\ng3\ng4\nm1\nm2\nm3\nX..\n.X.\nXX.\n..X\n");
    const DicompLattice a = concept_algebra(ctx);
    CHECK(is_dicomplementation(a.lattice, a.delta, a.nabla));
  }

  TEST_CASE("cxt round trip and errors") {
    const FormalContext ctx = standard_context(n5());
    const std::string text = write_cxt(ctx);
    const FormalContext back = read_cxt(text);
    CHECK(back.objects == ctx.objects);
    CHECK(back.attributes == ctx.attributes);
    CHECK(write_cxt(back) == text);
    CHECK_THROWS_AS(read_cxt("B\n\n2\n1\n\ng\ng\nm\nX\nX\n"), Error);
    CHECK_THROWS_AS(read_cxt("nonsense"), Error);
  }

  TEST_CASE("csv contexts") {
    const FormalContext ctx = read_csv_context(",m1,m2\ng1,1,0\ng2,1,1\n");
    CHECK(ctx.num_objects() == 2);
    CHECK(ctx.num_attributes() == 2);
    CHECK(ctx.incident(1, 1));
    CHECK_FALSE(ctx.incident(0, 1));
    CHECK(concept_lattice(ctx).lattice.size() == 2);
  }
}
