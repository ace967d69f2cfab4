#include <doctest.h>

#include "latt/verify.hpp"

using namespace latt;

TEST_SUITE("verify") {
  TEST_CASE("small runs of the maxima suites pass") {
    CHECK(verify_lattice_maxima(1, 6).pass());
    CHECK(verify_fca(5).pass());
  }

  TEST_CASE("reports are deterministic") {
    TheoremReport a = verify_horizontal_sums(3, 4, 3), b = verify_horizontal_sums(3, 4, 3);
    auto ja = a.to_json(), jb = b.to_json();
    ja.erase("seconds");
    jb.erase("seconds");
    CHECK(ja.dump() == jb.dump());
    CHECK(a.checks > 0);
  }

  TEST_CASE("failure tally is exact beyond the recorded witnesses") {
    TheoremReport r;
    for (int i = 0; i < 500; ++i) r.expect(false, "always");
    r.expect(true, "never");
    CHECK(r.failure_count == 500);
    CHECK(r.failure_tally.at("always") == 500);
    CHECK(r.failures.size() < 500);
    CHECK(r.checks == 501);
  }

  TEST_CASE("run_suite dispatch") {
    CHECK(run_suite("fca", 4).pass());
    CHECK_THROWS(run_suite("nope", 4));
    CHECK(suite_names().size() == 10);
  }

  TEST_CASE("helpers") {
    const FiniteLattice B = boolean(2);
    UnaryOp comp{3, 2, 1, 0};
    CHECK(is_boolean_complement(B, comp));
    CHECK_FALSE(is_boolean_complement(B, trivial_delta(B)));
    const UnaryOp p = product_op(chain(2), trivial_delta(chain(2)), chain(2), trivial_delta(chain(2)));
    CHECK(p == comp);
    CHECK(op_isomorphism(B, comp, B, comp).has_value());
  }
}
