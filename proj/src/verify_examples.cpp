#include <chrono>
#include <map>

#include "latt/congruence.hpp"
#include "latt/verify.hpp"

namespace latt {

using nlohmann::json;

namespace {

FiniteLattice pow2(int k) { return k <= 0 ? chain(1) : boolean(k); }
FiniteLattice osum(const FiniteLattice& a, const FiniteLattice& b) { return ordinal_sum(a, b); }
bool iso(const FiniteLattice& a, const FiniteLattice& b) { return are_isomorphic(a, b).has_value(); }

struct Named {
  std::string name;
  UnaryOp op;
};

// C2 x C3 as product(chain(2), chain(3)): 0=(0,0) v=(0,1) b=(0,2) u=(1,0) a=(1,1) 1=(1,2).
enum { Z = 0, V = 1, B = 2, U = 3, A = 4, O = 5 };

void c2c3_example(TheoremReport& r) {
  const FiniteLattice C2 = chain(2), C3 = chain(3);
  const FiniteLattice P = product(C2, C3);
  const int n = P.size();
  auto eq = [&](std::vector<std::vector<int>> sets) { return eps(n, sets); };
  const Congruence id = identity_congruence(n), full = full_congruence(n);
  const Congruence alpha = eq({{Z, U, V, A}, {B, O}}), beta = eq({{Z, V, B}, {U, A, O}});
  const Congruence gamma = eq({{Z, V}, {U, A}}), delta = eq({{Z, U}, {V, A}, {B, O}});
  const Congruence psi = eq({{Z, U}, {V, A, B, O}}), omega = eq({{V, B}, {A, O}});

  const Named dt{"trivial", trivial_delta(P)};
  const Named dp{"product", product_op(C2, trivial_delta(C2), C3, trivial_delta(C3))};
  const Named dab{"Delta^{a,b}", {O, O, A, O, B, Z}};
  const Named dabb{"Delta^{a,b,b}", {O, O, A, B, B, Z}};
  const Named nt{"trivial", trivial_nabla(P)};
  const Named np{"product", product_op(C2, trivial_nabla(C2), C3, trivial_nabla(C3))};
  const Named nuv{"Nabla^{u,v}", {O, U, Z, V, Z, Z}};
  const Named nuuv{"Nabla^{u,u,v}", {O, U, Z, V, V, Z}};

  const auto deltas = enumerate_weak_complementations(P);
  const auto nablas = enumerate_dual_weak_complementations(P);
  const auto pairs = enumerate_dicomplementations(P);
  r.expect(deltas.size() == 4, "example C2xC3: exactly 4 weak complementations",
           [&] { return json{{"actual", deltas}}; });
  r.expect(nablas.size() == 4, "example C2xC3: exactly 4 dual weak complementations",
           [&] { return json{{"actual", nablas}}; });
  r.expect(pairs.size() == 16, "example C2xC3: 16 weak dicomplementations", [&] { return json{{"actual", pairs.size()}}; });
  r.notes.push_back("example C2xC3: delta=" + std::to_string(deltas.size()) + " nabla=" + std::to_string(nablas.size()) +
                    " pairs=" + std::to_string(pairs.size()));
  for (const auto* d : {&dt, &dp, &dab, &dabb})
    r.expect(is_weak_complementation(P, d->op), "example C2xC3: " + d->name + " is a weak complementation",
             [&] { return json{{"op", d->op}, {"violation", wcl_violation(P, d->op).value_or("")}}; });
  for (const auto* d : {&nt, &np, &nuv, &nuuv})
    r.expect(is_dual_weak_complementation(P, d->op), "example C2xC3: " + d->name + " is a dual weak complementation",
             [&] { return json{{"op", d->op}, {"violation", wdcl_violation(P, d->op).value_or("")}}; });

  auto check = [&](const std::string& id_, const ConLattice& got, const std::vector<Congruence>& want,
                   const FiniteLattice& shape) {
    r.expect(same_set(got.congruences, want), id_ + ": congruence set", [&] {
      return json{{"actual", congruences_json(got.congruences)}, {"stated", congruences_json(want)}};
    });
    r.expect(iso(got.order, shape), id_ + ": shape", [&] { return json{{"actual_size", got.size()}}; });
  };
  check("example C2xC3: Con_WCL(trivial) = {=, gamma, full} ~ C3", con_wcl(P, dt.op), {id, gamma, full}, C3);
  check("example C2xC3: Con_WCL(product) = {=, alpha, beta, gamma, delta, full} ~ C2 x C3", con_wcl(P, dp.op),
        {id, alpha, beta, gamma, delta, full}, P);
  check("example C2xC3: Con_WCL(Delta^{a,b}) = {=, alpha, beta, gamma, full} ~ C2 (+) C2^2", con_wcl(P, dab.op),
        {id, alpha, beta, gamma, full}, osum(C2, boolean(2)));
  check("example C2xC3: Con_WCL(Delta^{a,b,b}) = {=, alpha, beta, gamma, full} ~ C2 (+) C2^2", con_wcl(P, dabb.op),
        {id, alpha, beta, gamma, full}, osum(C2, boolean(2)));
  {
    std::vector<int> sizes;
    for (const auto* d : {&dt, &dp, &dab, &dabb}) sizes.push_back(con_wcl(P, d->op).size());
    r.expect(sizes == std::vector<int>{3, 6, 5, 5},
             "example C2xC3: |Con_WCL| for (trivial, product, Delta^{a,b}, Delta^{a,b,b}) is 3/6/5/5",
             [&] { return json{{"actual", sizes}}; });
    r.notes.push_back("example C2xC3: |Con_WCL| (trivial, product, Delta^{a,b}, Delta^{a,b,b}) = " + json(sizes).dump());
  }
  check("example C2xC3: Con_WDCL(trivial) ~ C3", con_wdcl(P, nt.op), {id, omega, full}, C3);
  check("example C2xC3: Con_WDCL(product) ~ C2 x C3", con_wdcl(P, np.op), {id, psi, beta, omega, delta, full}, P);
  check("example C2xC3: Con_WDCL(Nabla^{u,v}) ~ C2 (+) C2^2", con_wdcl(P, nuv.op), {id, psi, beta, omega, full},
        osum(C2, boolean(2)));
  check("example C2xC3: Con_WDCL(Nabla^{u,u,v}) ~ C2 (+) C2^2", con_wdcl(P, nuuv.op), {id, psi, beta, omega, full},
        osum(C2, boolean(2)));

  auto wdl = [&](const Named& d, const Named& nb, const std::vector<Congruence>& want, const FiniteLattice& shape) {
    const std::string tag = "example C2xC3: Con_WDL(" + d.name + ", " + nb.name + ")";
    if (!r.expect(is_dicomplementation(P, d.op, nb.op), tag + ": the pair is a weak dicomplementation",
                  [&] { return json{{"delta", d.op}, {"nabla", nb.op}}; }))
      return;
    check(tag + " ~ " + (want.size() == 2 ? "C2" : want.size() == 3 ? "C3" : "C2^2"), con_wdl({P, d.op, nb.op}), want,
          shape);
  };
  const std::vector<Congruence> two{id, full};
  wdl(dt, nt, two, C2);
  for (const auto* nb : {&nuv, &nuuv}) wdl(dt, *nb, two, C2);
  for (const auto* d : {&dab, &dabb}) wdl(*d, nt, two, C2);
  wdl(dp, nt, two, C2);
  wdl(dt, np, two, C2);
  wdl(dp, np, {id, beta, delta, full}, boolean(2));
  for (const auto* d : {&dab, &dabb})
    for (const auto* nb : {&nuv, &nuuv}) wdl(*d, *nb, {id, beta, full}, C3);
  for (const auto* nb : {&nuv, &nuuv}) wdl(dp, *nb, {id, beta, full}, C3);
  for (const auto* d : {&dab, &dabb}) wdl(*d, np, {id, beta, full}, C3);

  // Ordinal sums with C2 x C3 on top (and in the middle).
  for (int k = 2; k <= 4; ++k) {
    const FiniteLattice M = chain(k);
    const FiniteLattice S = osum(M, P);
    const auto conM = all_congruences(M);
    for (const auto& d : enumerate_weak_complementations(S)) {
      auto got = con_wcl(S, d);
      r.expect(iso(got.order, osum(product(conM.order, C2), C2)),
               "example C2xC3: Con_WCL(C_k (+) (C2 x C3)) ~ (Con(C_k) x C2) (+) C2 for every Delta",
               [&] { return json{{"k", k}, {"delta", d}, {"actual_size", got.size()}}; });
      r.expect(got.size() == (1 << k) + 1, "example C2xC3: |Con_WCL(C_k (+) (C2 x C3))| = 2^k + 1",
               [&] { return json{{"k", k}, {"delta", d}, {"actual_size", got.size()}}; });
    }
  }
  for (int h = 1; h <= 3; ++h)
    for (int k = 2; k <= 3; ++k) {
      const FiniteLattice S = osum(osum(chain(h), P), chain(k));
      const auto ds = enumerate_weak_complementations(S);
      r.expect(ds.size() == 1 && is_trivial_delta(S, ds[0]),
               "example C2xC3: C_h (+) (C2 x C3) (+) C_k has only the trivial weak complementation",
               [&] { return json{{"h", h}, {"k", k}, {"count", ds.size()}}; });
      if (!ds.empty())
        r.expect(con_wcl(S, ds[0]).size() == (1 << (h + k)) + 1,
                 "example C2xC3: |Con_WCL(C_h (+) (C2 x C3) (+) C_k)| = 2^(h+k) + 1",
                 [&] { return json{{"h", h}, {"k", k}, {"actual", con_wcl(S, ds[0]).size()}}; });
    }
}

void hsum_example(TheoremReport& r) {
  const FiniteLattice C2 = chain(2), C3 = chain(3);
  const FiniteLattice L = osum(osum(C2, boolean(2)), C2), M = osum(boolean(2), C2);
  const FiniteLattice A = horizontal_sum(L, M);
  const auto ds = enumerate_weak_complementations(A);
  const auto ns = enumerate_dual_weak_complementations(A);
  r.expect(ds.size() == 2 && ns.size() == 1,
           "example (C2 (+) C2^2 (+) C2) [+] (C2^2 (+) C2): two weak complementations, only the trivial dual one",
           [&] { return json{{"deltas", ds.size()}, {"nablas", ns.size()}}; });
  auto co = coatoms(A).members();
  auto dnt = co.size() == 2 ? delta_ab(A, co[0], co[1]) : std::nullopt;
  const auto triv = con_wdl({A, trivial_delta(A), trivial_nabla(A)});
  r.expect(iso(triv.order, osum(boolean(2), C2)),
           "example (C2 (+) C2^2 (+) C2) [+] (C2^2 (+) C2): Con_WDL(trivial pair) ~ C2^2 (+) C2",
           [&] { return json{{"actual_size", triv.size()}}; });
  r.expect(dnt && con_wcl(A, *dnt).size() == 2,
           "example (C2 (+) C2^2 (+) C2) [+] (C2^2 (+) C2): Con_WCL(Delta^{d,u}) = {=, full}",
           [&] { return json{{"actual_size", dnt ? con_wcl(A, *dnt).size() : -1}}; });
}

void n5_example(TheoremReport& r) {
  const FiniteLattice N = n5();  // 0, a, b, c, 1 with a in the short side and b < c
  enum { z = 0, a = 1, b = 2, c = 3, o = 4 };
  const int n = N.size();
  const Congruence id = identity_congruence(n), full = full_congruence(n);
  const Congruence bc = eps(n, {{b, c}});
  const UnaryOp dt = trivial_delta(N), nt = trivial_nabla(N);
  const auto dac = delta_ab(N, a, c);
  const auto nab = nabla_ab(N, a, b);
  r.expect(dac.has_value() && nab.has_value(), "example N5: Delta^{a,c} and Nabla^{a,b} exist");
  if (!dac || !nab) return;
  const auto pairs = enumerate_dicomplementations(N);
  r.expect(pairs.size() == 4, "example N5: exactly four weak dicomplementations",
           [&] { return json{{"actual", pairs.size()}}; });
  auto set_is = [&](const std::string& id_, const std::vector<Congruence>& got, const std::vector<Congruence>& want) {
    r.expect(same_set(got, want), id_, [&] {
      return json{{"actual", congruences_json(got)}, {"stated", congruences_json(want)}};
    });
  };
  set_is("example N5: Con01(N5) = {=, eq(b,c)}", con_filtered(N, true, true), {id, bc});
  set_is("example N5: Con_WCL(trivial) = {=, eq(b,c), full}", con_wcl(N, dt).congruences, {id, bc, full});
  set_is("example N5: Con_WDCL(trivial) = {=, eq(b,c), full}", con_wdcl(N, nt).congruences, {id, bc, full});
  set_is("example N5: Con_WDL(trivial, trivial) = {=, eq(b,c), full}", con_wdl({N, dt, nt}).congruences,
         {id, bc, full});
  const auto wac = con_wcl(N, *dac).congruences;
  const auto wab = con_wdcl(N, *nab).congruences;
  set_is("example N5: Con_WCL(Delta^{a,c}) = {=, eq({0,b,c},{a,1}), full}", wac,
         {id, eps(n, {{z, b, c}, {a, o}}), full});
  set_is("example N5: Con_WDCL(Nabla^{a,b}) = {=, eq({0,a},{b,c,1}), full}", wab,
         {id, eps(n, {{z, a}, {b, c, o}}), full});
  set_is("example N5: Con_WCL01(Delta^{a,c}) = Con_WCL0 = Con_WCL1 = {=}",
         filter_singleton(filter_singleton(wac, z), o), {id});
  set_is("example N5: Con_WCL0(Delta^{a,c}) = {=}", filter_singleton(wac, z), {id});
  set_is("example N5: Con_WCL1(Delta^{a,c}) = {=}", filter_singleton(wac, o), {id});
  set_is("example N5: Con_WDCL0(Nabla^{a,b}) = {=}", filter_singleton(wab, z), {id});
  set_is("example N5: Con_WDCL1(Nabla^{a,b}) = {=}", filter_singleton(wab, o), {id});
  set_is("example N5: Con_WDL(trivial, Nabla^{a,b}) = {=, full}", con_wdl({N, dt, *nab}).congruences, {id, full});
  set_is("example N5: Con_WDL(Delta^{a,c}, trivial) = {=, full}", con_wdl({N, *dac, nt}).congruences, {id, full});
  set_is("example N5: Con_WDL(Delta^{a,c}, Nabla^{a,b}) = {=, full}", con_wdl({N, *dac, *nab}).congruences,
         {id, full});
}

void chain_hsum_example(TheoremReport& r) {
  const FiniteLattice C2 = chain(2), C3 = chain(3);
  for (int rr = 3; rr <= 5; ++rr)
    for (int s = 4; s <= 6; ++s) {
      const FiniteLattice H = horizontal_sum(chain(rr), chain(s));
      const json where{{"r", rr}, {"s", s}};
      auto expect_shape = [&](const std::string& id_, const ConLattice& got, const FiniteLattice& want) {
        r.expect(iso(got.order, want), id_, [&] {
          json j = where;
          j["actual_size"] = got.size();
          j["stated_size"] = want.size();
          return j;
        });
      };
      expect_shape("example C_r [+] C_s: Con ~ C2^(r+s-6) (+) C2^2", all_congruences(H),
                   osum(pow2(rr + s - 6), boolean(2)));
      r.expect(iso(make_con_lattice(con_filtered(H, true, true)).order, pow2(rr + s - 6)),
               "example C_r [+] C_s: Con01 ~ C2^(r+s-6)", [&] { return where; });
      const UnaryOp dt = trivial_delta(H), nt = trivial_nabla(H);
      const FiniteLattice triv = osum(pow2(rr + s - 6), C2);
      expect_shape("example C_r [+] C_s: Con_WCL(trivial) ~ C2^(r+s-6) (+) C2", con_wcl(H, dt), triv);
      expect_shape("example C_r [+] C_s: Con_WDCL(trivial) ~ C2^(r+s-6) (+) C2", con_wdcl(H, nt), triv);
      expect_shape("example C_r [+] C_s: Con_WDL(trivial, trivial) ~ C2^(r+s-6) (+) C2", con_wdl({H, dt, nt}), triv);
      auto co = coatoms(H).members();
      auto at = atoms(H).members();
      auto dcd = delta_ab(H, co[0], co[1]);
      auto nab = nabla_ab(H, at[0], at[1]);
      if (!r.expect(dcd && nab, "example C_r [+] C_s: Delta^{c,d} and Nabla^{a,b} exist", [&] { return where; }))
        continue;
      const FiniteLattice one = rr == 3 ? osum(pow2(s - 4), C3) : osum(pow2(rr + s - 8), C2);
      expect_shape("example C_r [+] C_s: Con_WCL(Delta^{c,d}) ~ C2^(s-4) (+) C3 (r=3) or C2^(r+s-8) (+) C2",
                   con_wcl(H, *dcd), one);
      expect_shape("example C_r [+] C_s: Con_WDCL(Nabla^{a,b}) ~ C2^(s-4) (+) C3 (r=3) or C2^(r+s-8) (+) C2",
                   con_wdcl(H, *nab), one);
      const FiniteLattice mixed = osum(pow2(rr == 3 ? s - 4 : rr + s - 8), C2);
      expect_shape("example C_r [+] C_s: Con_WDL(Delta^{c,d}, trivial) ~ (Con01(C_(r-1)) x Con01(C_(s-1))) (+) C2",
                   con_wdl({H, *dcd, nt}), mixed);
      expect_shape("example C_r [+] C_s: Con_WDL(trivial, Nabla^{a,b}) ~ (Con01(C_(r-1)) x Con01(C_(s-1))) (+) C2",
                   con_wdl({H, dt, *nab}), mixed);
      const int e = std::max(0, rr - 5) + std::max(0, s - 5);
      expect_shape("example C_r [+] C_s: Con_WDL(Delta^{c,d}, Nabla^{a,b}) ~ (Con01(C_(r-2)) x Con01(C_(s-2))) (+) C2",
                   con_wdl({H, *dcd, *nab}), osum(pow2(e), C2));
    }
}

}  // namespace

TheoremReport verify_examples() {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  r.suite = "examples";
  c2c3_example(r);
  hsum_example(r);
  n5_example(r);
  chain_hsum_example(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.finalize();
  return r;
}

}  // namespace latt
