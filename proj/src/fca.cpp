#include "latt/fca.hpp"

#include <map>
#include <set>
#include <sstream>

namespace latt {

void check_context(const FormalContext& ctx) {
  auto uniq = [](const std::vector<std::string>& v, const char* what) {
    std::set<std::string> s(v.begin(), v.end());
    if (s.size() != v.size()) throw Error(ErrorKind::Parse, std::string("duplicate ") + what + " label");
  };
  uniq(ctx.objects, "object");
  uniq(ctx.attributes, "attribute");
  if (int(ctx.rows.size()) != ctx.num_objects()) throw Error(ErrorKind::Parse, "row count mismatch");
  for (const auto& r : ctx.rows)
    if (r.universe() != ctx.num_attributes()) throw Error(ErrorKind::Parse, "row width mismatch");
}

ElementSet derive_objects(const FormalContext& ctx, const ElementSet& A) {
  ElementSet B = ElementSet::full(ctx.num_attributes());
  for (int g : A.members()) B &= ctx.rows[g];
  return B;
}

ElementSet derive_attributes(const FormalContext& ctx, const ElementSet& B) {
  ElementSet A(ctx.num_objects());
  for (int g = 0; g < ctx.num_objects(); ++g)
    if (B.subset_of(ctx.rows[g])) A.insert(g);
  return A;
}

int ConceptLattice::index_of_extent(const ElementSet& A) const {
  for (size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i].extent == A) return int(i);
  return -1;
}

ConceptLattice concept_lattice(const FormalContext& ctx) {
  check_context(ctx);
  const int G = ctx.num_objects();
  if (G > kContextCap || ctx.num_attributes() > kContextCap)
    throw Error(ErrorKind::CapExceeded, "context exceeds 1024 objects or attributes");
  auto close = [&](const ElementSet& A) { return derive_attributes(ctx, derive_objects(ctx, A)); };
  ConceptLattice C;
  // NextClosure over extents in lectic order (object 0 most significant).
  ElementSet A = close(ElementSet(G));
  while (true) {
    C.concepts.push_back({A, derive_objects(ctx, A)});
    if (int(C.concepts.size()) > FiniteLattice::kMaxSize)
      throw Error(ErrorKind::CapExceeded, "concept lattice exceeds 4096 concepts");
    bool found = false;
    for (int i = G - 1; i >= 0 && !found; --i) {
      if (A.contains(i)) continue;
      ElementSet B(G);
      for (int j = 0; j < i; ++j)
        if (A.contains(j)) B.insert(j);
      B.insert(i);
      ElementSet D = close(B);
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (D.contains(j) != A.contains(j)) ok = false;
      if (ok) {
        A = D;
        found = true;
      }
    }
    if (!found) break;
  }
  const int m = int(C.concepts.size());
  BoolMatrix leq(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (C.concepts[i].extent.subset_of(C.concepts[j].extent)) leq.set(i, j);
  C.lattice = FiniteLattice::validate(leq);
  return C;
}

DicompLattice concept_algebra(const FormalContext& ctx, ConceptLattice* out) {
  ConceptLattice C = concept_lattice(ctx);
  const int m = C.lattice.size();
  std::map<ElementSet, int> by_extent;
  for (int i = 0; i < m; ++i) by_extent[C.concepts[i].extent] = i;
  DicompLattice D{C.lattice, UnaryOp(m), UnaryOp(m)};
  for (int i = 0; i < m; ++i) {
    const auto& c = C.concepts[i];
    ElementSet notA = ElementSet::full(ctx.num_objects()).minus(c.extent);
    D.delta[i] = by_extent.at(derive_attributes(ctx, derive_objects(ctx, notA)));
    ElementSet notB = ElementSet::full(ctx.num_attributes()).minus(c.intent);
    D.nabla[i] = by_extent.at(derive_attributes(ctx, notB));
  }
  if (out) *out = std::move(C);
  return D;
}

std::vector<int> standard_objects(const FiniteLattice& L) { return join_irreducibles(L).members(); }
std::vector<int> standard_attributes(const FiniteLattice& L) { return meet_irreducibles(L).members(); }

FormalContext standard_context(const FiniteLattice& L) {
  auto lab = element_labels(L);
  auto J = standard_objects(L);
  auto M = standard_attributes(L);
  FormalContext ctx;
  for (int j : J) ctx.objects.push_back(lab[j]);
  for (int m : M) ctx.attributes.push_back(lab[m]);
  for (int j : J) {
    ElementSet r(int(M.size()));
    for (size_t k = 0; k < M.size(); ++k)
      if (L.leq(j, M[k])) r.insert(int(k));
    ctx.rows.push_back(r);
  }
  return ctx;
}

std::vector<int> standard_embedding(const FiniteLattice& L, const ConceptLattice& C) {
  auto J = standard_objects(L);
  std::vector<int> f(L.size());
  for (int x = 0; x < L.size(); ++x) {
    ElementSet A(int(J.size()));
    for (size_t k = 0; k < J.size(); ++k)
      if (L.leq(J[k], x)) A.insert(int(k));
    f[x] = C.index_of_extent(A);
  }
  return f;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

int parse_count(const std::string& s) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::Parse, "expected a count, got \"" + s + "\"");
  return std::stoi(s);
}

}  // namespace

FormalContext read_cxt(const std::string& text) {
  auto lines = split_lines(text);
  size_t i = 0;
  if (lines.empty() || lines[0] != "B") throw Error(ErrorKind::Parse, "cxt must start with a 'B' line");
  ++i;
  auto next_nonblank = [&]() -> std::string {
    while (i < lines.size() && lines[i].empty()) ++i;
    if (i >= lines.size()) throw Error(ErrorKind::Parse, "unexpected end of cxt");
    return lines[i++];
  };
  std::string first = next_nonblank();
  if (first.find_first_not_of("0123456789") != std::string::npos) first = next_nonblank();  // context name
  int G = parse_count(first);
  int M = parse_count(next_nonblank());
  if (G > kContextCap || M > kContextCap) throw Error(ErrorKind::CapExceeded, "context exceeds 1024");
  while (i < lines.size() && lines[i].empty()) ++i;
  FormalContext ctx;
  auto take = [&]() -> std::string {
    if (i >= lines.size()) throw Error(ErrorKind::Parse, "unexpected end of cxt");
    return lines[i++];
  };
  for (int g = 0; g < G; ++g) ctx.objects.push_back(take());
  for (int m = 0; m < M; ++m) ctx.attributes.push_back(take());
  for (int g = 0; g < G; ++g) {
    std::string row = take();
    if (int(row.size()) != M) throw Error(ErrorKind::Parse, "row " + std::to_string(g) + " has wrong width");
    ElementSet r(M);
    for (int m = 0; m < M; ++m) {
      char c = row[m];
      if (c == 'X' || c == 'x')
        r.insert(m);
      else if (c != '.')
        throw Error(ErrorKind::Parse, "bad incidence character in row " + std::to_string(g));
    }
    ctx.rows.push_back(r);
  }
  for (; i < lines.size(); ++i)
    if (!lines[i].empty()) throw Error(ErrorKind::Parse, "trailing data after incidence rows");
  check_context(ctx);
  return ctx;
}

std::string write_cxt(const FormalContext& ctx) {
  std::string s = "B\n\n" + std::to_string(ctx.num_objects()) + "\n" + std::to_string(ctx.num_attributes()) + "\n\n";
  for (const auto& g : ctx.objects) s += g + "\n";
  for (const auto& m : ctx.attributes) s += m + "\n";
  for (int g = 0; g < ctx.num_objects(); ++g) {
    for (int m = 0; m < ctx.num_attributes(); ++m) s += ctx.incident(g, m) ? 'X' : '.';
    s += "\n";
  }
  return s;
}

FormalContext read_csv_context(const std::string& text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty csv");
  auto cells = [](const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    for (auto& x : out) {
      size_t a = x.find_first_not_of(" \t"), b = x.find_last_not_of(" \t");
      x = a == std::string::npos ? "" : x.substr(a, b - a + 1);
    }
    return out;
  };
  auto head = cells(lines[0]);
  FormalContext ctx;
  ctx.attributes.assign(head.begin() + 1, head.end());
  const int M = ctx.num_attributes();
  for (size_t l = 1; l < lines.size(); ++l) {
    auto row = cells(lines[l]);
    if (int(row.size()) != M + 1) throw Error(ErrorKind::Parse, "csv row " + std::to_string(l) + " has wrong width");
    ctx.objects.push_back(row[0]);
    ElementSet r(M);
    for (int m = 0; m < M; ++m) {
      const auto& c = row[m + 1];
      if (c == "X" || c == "x" || c == "1")
        r.insert(m);
      else if (!c.empty() && c != "." && c != "0")
        throw Error(ErrorKind::Parse, "bad csv cell \"" + c + "\"");
    }
    ctx.rows.push_back(r);
  }
  if (ctx.num_objects() > kContextCap || M > kContextCap) throw Error(ErrorKind::CapExceeded, "context exceeds 1024");
  check_context(ctx);
  return ctx;
}

}  // namespace latt
