#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latt/congruence.hpp"
#include "latt/enumerate.hpp"
#include "latt/error.hpp"
#include "latt/fca.hpp"
#include "latt/shape.hpp"
#include "latt/verify.hpp"
#include "latt/wdl.hpp"

using namespace latt;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3, kValidation = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::Io, "cannot write " + path);
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

// Human output lists elements in label order (height, then index).
struct Labels {
  std::vector<std::string> names;
  std::vector<int> order, rank;
  explicit Labels(const FiniteLattice& L) : names(element_labels(L)), order(L.size()), rank(L.size()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return L.height(x) < L.height(y); });
    for (int i = 0; i < L.size(); ++i) rank[order[i]] = i;
  }
  void sort(std::vector<int>& xs) const {
    std::sort(xs.begin(), xs.end(), [&](int x, int y) { return rank[x] < rank[y]; });
  }
  std::string set(std::vector<int> xs) const {
    sort(xs);
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + names[xs[i]];
    return s + "}";
  }
  std::string blocks(const Congruence& t) const {
    auto bs = t.blocks();
    for (auto& b : bs) sort(b);
    std::sort(bs.begin(), bs.end(), [&](const auto& a, const auto& b) { return rank[a[0]] < rank[b[0]]; });
    std::string s;
    for (const auto& b : bs) s += (s.empty() ? "" : " ") + set(b);
    return s;
  }
  std::string op(const UnaryOp& f) const {
    std::string s;
    for (int x : order) s += (s.empty() ? "" : " ") + names[x] + "->" + names[f[x]];
    return s;
  }
  // Accepts a raw index or a label.
  int parse(const std::string& tok) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == tok) return int(i);
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used == tok.size() && v >= 0 && v < int(names.size())) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("unknown element \"" + tok + "\"");
  }
};

std::string shape_text(const FiniteLattice& L) {
  auto e = name_shape(L);
  return e ? pretty(*e) : "unnamed";
}

UnaryOp pick(const std::vector<UnaryOp>& ops, int idx, const char* what) {
  if (idx < 0 || idx >= int(ops.size()))
    throw UsageError(std::string(what) + " index " + std::to_string(idx) + " out of range (" +
                     std::to_string(ops.size()) + " available)");
  return ops[idx];
}

// Operation for --delta idx / --nabla idx, falling back to the one stored in the file.
UnaryOp resolve_delta(const Algebra& a, int idx) {
  if (idx >= 0) return pick(enumerate_weak_complementations(a.lattice), idx, "--delta");
  if (a.delta) {
    if (auto v = wcl_violation(a.lattice, *a.delta)) throw Error(ErrorKind::BadElements, "delta: " + *v);
    return *a.delta;
  }
  throw UsageError("no weak complementation: pass --delta idx or add \"delta\" to the file");
}

UnaryOp resolve_nabla(const Algebra& a, int idx) {
  if (idx >= 0) return pick(enumerate_dual_weak_complementations(a.lattice), idx, "--nabla");
  if (a.nabla) {
    if (auto v = wdcl_violation(a.lattice, *a.nabla)) throw Error(ErrorKind::BadElements, "nabla: " + *v);
    return *a.nabla;
  }
  throw UsageError("no dual weak complementation: pass --nabla idx or add \"nabla\" to the file");
}

// gen ------------------------------------------------------------------------

struct GenOpts {
  std::string expr, out, dot;
};

int run_gen(const GenOpts& o) {
  const FiniteLattice L = eval(o.expr);
  const std::string text = with_newline(to_json(L));
  if (!o.dot.empty()) {
    const auto labels = element_labels(L);
    write_file(o.dot, with_newline(to_dot(L, &labels)));
  }
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
  return kOk;
}

// con ------------------------------------------------------------------------

struct ConOpts {
  std::string file;
  bool fix0 = false, fix1 = false, wcl = false, wdcl = false, wdl = false, shape = false, json = false;
  int delta = -1, nabla = -1;
};

int run_con(const ConOpts& o) {
  const Algebra a = algebra_from_json(read_file(o.file));
  const FiniteLattice& L = a.lattice;
  std::vector<Congruence> cs;
  std::string what = "Con";
  json ops = json::object();
  if (o.wcl) {
    const UnaryOp d = resolve_delta(a, o.delta);
    cs = con_wcl(L, d).congruences;
    what = "Con_WCL";
    ops["delta"] = d;
  } else if (o.wdcl) {
    const UnaryOp n = resolve_nabla(a, o.nabla);
    cs = con_wdcl(L, n).congruences;
    what = "Con_WDCL";
    ops["nabla"] = n;
  } else if (o.wdl) {
    const UnaryOp d = resolve_delta(a, o.delta), n = resolve_nabla(a, o.nabla);
    if (!is_dicomplementation(L, d, n)) throw Error(ErrorKind::BadElements, "the pair is not a weak dicomplementation");
    cs = con_wdl({L, d, n}).congruences;
    what = "Con_WDL";
    ops["delta"] = d;
    ops["nabla"] = n;
  } else {
    if (o.delta >= 0 || o.nabla >= 0) throw UsageError("--delta/--nabla need --wcl, --wdcl or --wdl");
    cs = all_congruences(L).congruences;
  }
  if (o.fix0) cs = filter_singleton(cs, L.bottom());
  if (o.fix1) cs = filter_singleton(cs, L.top());
  if (o.fix0 || o.fix1) what += std::string(o.fix0 ? "0" : "") + (o.fix1 ? "1" : "");
  const ConLattice cl = make_con_lattice(cs);

  if (o.json) {
    json j;
    j["lattice"] = json::parse(to_json(L));
    j["kind"] = what;
    j["operations"] = ops;
    j["congruences"] = congruences_json(cl.congruences);
    j["covers"] = json::parse(to_json(cl.order))["covers"];
    if (o.shape) j["shape"] = shape_text(cl.order);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  const Labels lab(L);
  std::cout << what << ": " << cl.size() << " congruences\n";
  for (int i = 0; i < cl.size(); ++i) std::cout << "  #" << i << " " << lab.blocks(cl.congruences[i]) << "\n";
  if (o.shape) std::cout << "shape: " << shape_text(cl.order) << "\n";
  return kOk;
}

// wdc ------------------------------------------------------------------------

struct WdcOpts {
  std::string file;
  bool list = false, count = false, representable = false, json = false;
};

int index_in(const std::vector<UnaryOp>& ops, const UnaryOp& f) {
  return int(std::find(ops.begin(), ops.end(), f) - ops.begin());
}

int run_wdc(const WdcOpts& o) {
  const Algebra a = algebra_from_json(read_file(o.file));
  const FiniteLattice& L = a.lattice;
  const auto ds = enumerate_weak_complementations(L);
  const auto ns = enumerate_dual_weak_complementations(L);
  const auto ps = enumerate_dicomplementations(L);
  if (o.count && !o.representable && !o.json) {
    std::cout << "delta=" << ds.size() << " nabla=" << ns.size() << " pairs=" << ps.size() << "\n";
    return kOk;
  }
  const Labels lab(L);
  auto rep_text = [&](const std::optional<ElementSet>& s) {
    return s ? "representable by " + lab.set(s->members()) : std::string("not representable");
  };
  if (o.json) {
    json j;
    j["delta"] = ds;
    j["nabla"] = ns;
    j["pairs"] = json::array();
    for (const auto& p : ps) j["pairs"].push_back({index_in(ds, p.delta), index_in(ns, p.nabla)});
    if (o.representable) {
      auto rep = [](const std::optional<ElementSet>& s) { return s ? json(s->members()) : json(nullptr); };
      j["delta_representing_sets"] = json::array();
      for (const auto& d : ds) j["delta_representing_sets"].push_back(rep(is_representable(L, d)));
      j["nabla_representing_sets"] = json::array();
      for (const auto& n : ns) j["nabla_representing_sets"].push_back(rep(is_dual_representable(L, n)));
    }
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "delta=" << ds.size() << " nabla=" << ns.size() << " pairs=" << ps.size() << "\n";
  if (o.count) {
    for (size_t i = 0; i < ds.size(); ++i) std::cout << "delta #" << i << ": " << rep_text(is_representable(L, ds[i])) << "\n";
    for (size_t i = 0; i < ns.size(); ++i)
      std::cout << "nabla #" << i << ": " << rep_text(is_dual_representable(L, ns[i])) << "\n";
    return kOk;
  }
  for (size_t i = 0; i < ds.size(); ++i) {
    std::cout << "delta #" << i << ": " << lab.op(ds[i]);
    if (is_trivial_delta(L, ds[i])) std::cout << "  (trivial)";
    if (o.representable) std::cout << "  " << rep_text(is_representable(L, ds[i]));
    std::cout << "\n";
  }
  for (size_t i = 0; i < ns.size(); ++i) {
    std::cout << "nabla #" << i << ": " << lab.op(ns[i]);
    if (is_trivial_nabla(L, ns[i])) std::cout << "  (trivial)";
    if (o.representable) std::cout << "  " << rep_text(is_dual_representable(L, ns[i]));
    std::cout << "\n";
  }
  for (size_t i = 0; i < ps.size(); ++i)
    std::cout << "pair #" << i << ": delta #" << index_in(ds, ps[i].delta) << ", nabla #" << index_in(ns, ps[i].nabla)
              << "\n";
  return kOk;
}

// fca ------------------------------------------------------------------------

struct FcaOpts {
  std::string file, out;
  bool algebra = false;
};

int run_fca(const FcaOpts& o) {
  const std::string text = read_file(o.file);
  const bool csv = o.file.size() >= 4 && o.file.compare(o.file.size() - 4, 4, ".csv") == 0;
  const FormalContext ctx = csv ? read_csv_context(text) : read_cxt(text);
  ConceptLattice C;
  std::optional<DicompLattice> alg;
  if (o.algebra)
    alg = concept_algebra(ctx, &C);
  else
    C = concept_lattice(ctx);
  auto names = [](const std::vector<std::string>& all, const ElementSet& s) {
    std::string r = "{";
    bool first = true;
    for (int x : s.members()) {
      r += (first ? "" : ",") + all[x];
      first = false;
    }
    return r + "}";
  };
  std::cout << "concepts: " << C.concepts.size() << "\n";
  for (size_t i = 0; i < C.concepts.size(); ++i)
    std::cout << "  #" << i << " (" << names(ctx.objects, C.concepts[i].extent) << ", "
              << names(ctx.attributes, C.concepts[i].intent) << ")\n";
  if (alg) {
    std::string d, n;
    for (size_t i = 0; i < alg->delta.size(); ++i) {
      d += (i ? " " : "") + std::to_string(i) + "->" + std::to_string(alg->delta[i]);
      n += (i ? " " : "") + std::to_string(i) + "->" + std::to_string(alg->nabla[i]);
    }
    std::cout << "delta: " << d << "\nnabla: " << n << "\n";
  }
  if (!o.out.empty()) {
    Algebra a{C.lattice, std::nullopt, std::nullopt};
    if (alg) {
      a.delta = alg->delta;
      a.nabla = alg->nabla;
    }
    write_file(o.out, with_newline(to_json(a)));
  }
  return kOk;
}

// enum -----------------------------------------------------------------------

struct EnumOpts {
  int n = 0;
  bool count = false;
  std::string dump;
};

int run_enum(const EnumOpts& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const auto& cat = catalog(o.n);
  if (!o.dump.empty()) write_file(o.dump, catalog_to_jsonl(cat));
  std::cout << "n=" << o.n << " lattices=" << cat.size() << "\n";
  return kOk;
}

// verify ---------------------------------------------------------------------

struct VerifyOpts {
  std::string suite, json;
  int max_n = -1;
  bool deterministic = true;
};

int default_max_n(const std::string& s) {
  static const std::map<std::string, int> d{{"lat", 8},  {"wcl", 8},       {"wdcl", 7},     {"wdl", 7},
                                            {"sums", 5}, {"osum", 5},      {"hsum", 6},     {"quotients", 7},
                                            {"examples", 0}, {"fca", 7}};
  auto it = d.find(s);
  return it == d.end() ? 0 : it->second;
}

int run_verify(const VerifyOpts& o) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end())
    suites = {o.suite};
  else
    throw UsageError("unknown suite \"" + o.suite + "\"; expected all or one of lat, wcl, wdcl, wdl, sums, osum, hsum, "
                     "quotients, examples, fca");
  if (suites.size() > 1 && o.max_n >= 0) throw UsageError("--max-n applies to a single suite");
  bool pass = true;
  json reports = json::array();
  for (const auto& s : suites) {
    TheoremReport r = run_suite(s, o.max_n >= 0 ? o.max_n : default_max_n(s));
    r.finalize();
    pass = pass && r.pass();
    std::cout << r.summary();
    if (!o.deterministic) std::cout << " " << r.seconds << "s";
    std::cout << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
    for (const auto& f : r.flags) std::cout << "  flag: " << f.check << " " << f.witness.dump() << "\n";
    for (const auto& [check, count] : r.failure_tally) std::cout << "  failed " << count << " x " << check << "\n";
    json j = r.to_json();
    if (o.deterministic) j.erase("seconds");
    reports.push_back(std::move(j));
  }
  if (!o.json.empty()) write_file(o.json, (suites.size() == 1 ? reports[0] : reports).dump(2) + "\n");
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kVerifyFailed;
}

// quot -----------------------------------------------------------------------

struct QuotOpts {
  std::string file, collapse, out;
  bool wcl = false;
  int delta = -1;
};

int run_quot(const QuotOpts& o) {
  const Algebra a = algebra_from_json(read_file(o.file));
  const FiniteLattice& L = a.lattice;
  const Labels lab(L);
  const auto comma = o.collapse.find(',');
  if (comma == std::string::npos) throw UsageError("--collapse expects a,b");
  const int x = lab.parse(o.collapse.substr(0, comma)), y = lab.parse(o.collapse.substr(comma + 1));
  Algebra q;
  Congruence t;
  if (o.wcl) {
    const UnaryOp d = resolve_delta(a, o.delta);
    t = principal_wcl_congruence(L, d, x, y);
    OpQuotient oq = quotient_wcl(L, d, t);
    q = {oq.lattice, oq.op, std::nullopt};
  } else {
    if (o.delta >= 0) throw UsageError("--delta needs --wcl");
    t = principal_congruence(L, x, y);
    q = {quotient(L, t).lattice, std::nullopt, std::nullopt};
  }
  std::cout << (o.wcl ? "CgW(" : "Cg(") << lab.names[x] << "," << lab.names[y] << "): " << lab.blocks(t) << "\n";
  std::cout << "quotient: " << q.lattice.size() << " elements, shape " << shape_text(q.lattice) << "\n";
  const std::string text = with_newline(to_json(q));
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latt: finite lattices with weak (di)complementations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "Build a lattice from an expression and print its JSON");
  g->add_option("expr", gen.expr, "e.g. \"chain:3|chain:4\", \"bool:2+chain:2\", \"chain:2*chain:3\"")->required();
  g->add_option("--out", gen.out, "Write the JSON here instead of stdout");
  g->add_option("--dot", gen.dot, "Write the Hasse diagram (DOT) here");

  ConOpts con;
  auto* c = app.add_subcommand("con", "Congruence lattice, optionally operation-preserving or bound-fixing");
  c->add_option("file", con.file, "Lattice or algebra JSON")->required();
  c->add_flag("--fix0", con.fix0, "Keep congruences with {0} as a class");
  c->add_flag("--fix1", con.fix1, "Keep congruences with {1} as a class");
  auto* f_wcl = c->add_flag("--wcl", con.wcl, "Preserve Delta");
  auto* f_wdcl = c->add_flag("--wdcl", con.wdcl, "Preserve Nabla");
  auto* f_wdl = c->add_flag("--wdl", con.wdl, "Preserve Delta and Nabla");
  f_wcl->excludes(f_wdcl)->excludes(f_wdl);
  f_wdcl->excludes(f_wdl);
  c->add_option("--delta", con.delta, "Index into the enumerated weak complementations");
  c->add_option("--nabla", con.nabla, "Index into the enumerated dual weak complementations");
  c->add_flag("--shape", con.shape, "Name the congruence lattice up to isomorphism");
  c->add_flag("--json", con.json, "JSON output");

  WdcOpts wdc;
  auto* w = app.add_subcommand("wdc", "Enumerate weak complementations, duals and dicomplementations");
  w->add_option("file", wdc.file, "Lattice JSON")->required();
  auto* f_list = w->add_flag("--list", wdc.list, "List every operation (default)");
  auto* f_count = w->add_flag("--count", wdc.count, "Print counts only");
  f_list->excludes(f_count);
  w->add_flag("--representable", wdc.representable, "Report a representing join-/meet-dense set");
  w->add_flag("--json", wdc.json, "JSON output");

  FcaOpts fca;
  auto* fc = app.add_subcommand("fca", "Concept lattice of a formal context (.cxt or .csv)");
  fc->add_option("file", fca.file, "Context file")->required();
  fc->add_flag("--algebra", fca.algebra, "Also compute the concept algebra operations");
  fc->add_option("--out", fca.out, "Write the concept lattice (and operations) as JSON");

  EnumOpts en;
  auto* e = app.add_subcommand("enum", "Count or dump all lattices of a given size up to isomorphism");
  e->add_option("--n", en.n, "Number of elements (at most 9)")->required();
  auto* f_ecount = e->add_flag("--count", en.count, "Print the count (default)");
  auto* f_dump = e->add_option("--dump", en.dump, "Write the catalog as JSON lines");
  f_ecount->excludes(f_dump);

  VerifyOpts ver;
  auto* v = app.add_subcommand("verify", "Run a theorem-verification suite");
  v->add_option("--suite", ver.suite, "all, lat, wcl, wdcl, wdl, sums, osum, hsum, quotients, examples, fca")
      ->required();
  v->add_option("--max-n", ver.max_n, "Size bound (suite-specific default)");
  v->add_option("--json", ver.json, "Write the full report as JSON");
  v->add_flag("--deterministic,!--no-deterministic", ver.deterministic,
              "Omit timings so output is byte-stable (default on)");

  QuotOpts qu;
  auto* q = app.add_subcommand("quot", "Quotient by the principal congruence generated by a pair");
  q->add_option("file", qu.file, "Lattice or algebra JSON")->required();
  q->add_option("--collapse", qu.collapse, "a,b as indices or labels")->required();
  q->add_flag("--wcl", qu.wcl, "Use the smallest Delta-preserving congruence");
  q->add_option("--delta", qu.delta, "Index into the enumerated weak complementations");
  q->add_option("--out", qu.out, "Write the quotient JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    std::cerr << "E" << kUsage << ": " << ex.what() << "\n";
    return kUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*c) return run_con(con);
    if (*w) return run_wdc(wdc);
    if (*fc) return run_fca(fca);
    if (*e) return run_enum(en);
    if (*v) return run_verify(ver);
    if (*q) return run_quot(qu);
  } catch (const UsageError& ex) {
    std::cerr << "E" << kUsage << ": " << ex.what() << "\n";
    return kUsage;
  } catch (const Error& ex) {
    const int code = ex.kind() == ErrorKind::Io ? kIo : kValidation;
    std::cerr << "E" << code << ": " << ex.what() << "\n";
    return code;
  }
  return kUsage;
}
