#include <chrono>

#include "latt/enumerate.hpp"
#include "latt/error.hpp"
#include "latt/fca.hpp"
#include "latt/parallel.hpp"
#include "latt/verify.hpp"

namespace latt {

using nlohmann::json;

namespace {

// (L, L, <=)
FormalContext full_context(const FiniteLattice& L) {
  FormalContext ctx;
  ctx.objects = element_labels(L);
  ctx.attributes = ctx.objects;
  for (int g = 0; g < L.size(); ++g) ctx.rows.push_back(L.principal_filter(g));
  return ctx;
}

bool is_order_isomorphism(const FiniteLattice& L, const FiniteLattice& K, const std::vector<int>& f) {
  if (int(f.size()) != L.size() || K.size() != L.size()) return false;
  std::vector<char> hit(K.size(), 0);
  for (int x : f) {
    if (x < 0 || x >= K.size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(x, y) != K.leq(f[x], f[y])) return false;
  return true;
}

void check_lattice(TheoremReport& r, const FiniteLattice& L, long& pairs_seen) {
  const auto wit = [&] { return json{{"lattice", lattice_json(L)}}; };

  ConceptLattice C;
  const DicompLattice alg = concept_algebra(standard_context(L), &C);
  const auto emb = standard_embedding(L, C);
  r.expect(is_order_isomorphism(L, C.lattice, emb),
           "fca-roundtrip: x -> (Ji cap (x], Mi cap [x)) is an isomorphism onto the standard concept lattice", wit);
  r.expect(is_dicomplementation(alg.lattice, alg.delta, alg.nabla),
           "fca-algebra: the standard concept algebra is a weak dicomplementation", wit);

  const auto dji = delta_from_join_dense(L, join_irreducibles(L));
  const auto nmi = nabla_from_meet_dense(L, meet_irreducibles(L));
  if (!r.expect(dji && nmi, "fca-algebra: Ji is join-dense and Mi is meet-dense", wit)) return;
  bool same = emb.size() == size_t(L.size());
  for (int x = 0; same && x < L.size(); ++x)
    same = alg.delta[emb[x]] == emb[(*dji)[x]] && alg.nabla[emb[x]] == emb[(*nmi)[x]];
  r.expect(same, "fca-algebra: the standard concept algebra carries (Delta^Ji, Nabla^Mi)", [&] {
    return json{{"lattice", lattice_json(L)}, {"delta_ji", *dji}, {"nabla_mi", *nmi}, {"embedding", emb},
                {"algebra_delta", alg.delta}, {"algebra_nabla", alg.nabla}};
  });

  ConceptLattice F;
  const DicompLattice falg = concept_algebra(full_context(L), &F);
  r.expect(are_isomorphic(F.lattice, L).has_value(), "fca-roundtrip: B(L, L, <=) is isomorphic to L", wit);
  r.expect(is_dicomplementation(falg.lattice, falg.delta, falg.nabla),
           "fca-algebra: the concept algebra of (L, L, <=) is a weak dicomplementation", wit);

  for (const auto& p : enumerate_dicomplementations(L)) {
    ++pairs_seen;
    bool below = true, above = true;
    for (int x = 0; x < L.size(); ++x) {
      below = below && L.leq((*dji)[x], p.delta[x]);
      above = above && L.leq(p.nabla[x], (*nmi)[x]);
    }
    r.expect(below, "fca-smallest: Delta^Ji is pointwise below every enumerated Delta",
             [&] { return json{{"lattice", lattice_json(L)}, {"delta", p.delta}, {"delta_ji", *dji}}; });
    r.expect(above, "fca-smallest: Nabla^Mi is pointwise above every enumerated Nabla",
             [&] { return json{{"lattice", lattice_json(L)}, {"nabla", p.nabla}, {"nabla_mi", *nmi}}; });
  }
}

}  // namespace

TheoremReport verify_fca(int n_max) {
  if (n_max > 7) throw Error(ErrorKind::CapExceeded, "fca suite supports n <= 7");
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  r.suite = "fca";
  r.params = {{"n_max", n_max}};
  ReportSink sink(r);
  long lattices = 0, pairs = 0;
  for (int n = 1; n <= n_max; ++n) {
    const auto& cat = catalog(n);
    std::vector<long> seen(cat.size(), 0);
    parallel_for(cat.size(), [&](int i) {
      TheoremReport part;
      check_lattice(part, cat.lattices[i], seen[i]);
      sink.merge(std::move(part));
    });
    lattices += cat.size();
    for (long s : seen) pairs += s;
  }
  r.notes.push_back("fca: " + std::to_string(lattices) + " lattices, " + std::to_string(pairs) +
                    " weak dicomplementations compared, n = 1.." + std::to_string(n_max));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.finalize();
  return r;
}

}  // namespace latt
