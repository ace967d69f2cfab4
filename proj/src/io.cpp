#include <algorithm>

#include <json.hpp>

#include "latt/lattice.hpp"

namespace latt {

using ojson = nlohmann::ordered_json;

std::string to_json(const FiniteLattice& L) {
  ojson j;
  j["n"] = L.size();
  j["covers"] = ojson::array();
  for (auto [a, b] : covers(L)) j["covers"].push_back({a, b});
  return j.dump();
}

FiniteLattice lattice_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("covers") ||
      !j["covers"].is_array())
    throw Error(ErrorKind::Parse, "expected {\"n\": int, \"covers\": [[a,b],...]}");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> cov;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw Error(ErrorKind::Parse, "cover entries must be [a,b]");
    cov.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  FiniteLattice L = FiniteLattice::from_covers(n, cov);
  // the listed pairs must be exactly the covers of the closure
  auto got = covers(L);
  std::sort(cov.begin(), cov.end());
  cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
  if (got != cov) throw Error(ErrorKind::NotAPartialOrder, "listed pairs are not the cover relation");
  return L;
}

}  // namespace latt
