#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "latt/constructions.hpp"
#include "latt/wdl.hpp"

namespace latt {

struct Finding {
  std::string check;
  nlohmann::json witness;
};

struct TheoremReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  long checks = 0;
  std::vector<Finding> failures;  // capped; failure_count is exact
  long failure_count = 0;
  std::map<std::string, long> failure_tally;  // exact count per check id
  std::vector<Finding> flags;     // reported, not failing
  std::vector<std::string> notes;
  double seconds = 0;

  bool pass() const noexcept { return failure_count == 0; }
  // Counts one check; on failure records `witness()` (evaluated lazily).
  template <class W>
  bool expect(bool ok, const std::string& check, W&& witness) {
    ++checks;
    if (!ok) fail(check, witness());
    return ok;
  }
  bool expect(bool ok, const std::string& check) {
    return expect(ok, check, [] { return nlohmann::json::object(); });
  }
  void fail(const std::string& check, nlohmann::json witness);
  void flag(const std::string& check, nlohmann::json witness);
  void merge(TheoremReport&& other);
  // Sorts findings so output does not depend on thread scheduling.
  void finalize();
  nlohmann::json to_json() const;
  std::string summary() const;  // one line
};

// Thread-safe accumulation for suites that run over catalog entries in parallel.
class ReportSink {
 public:
  explicit ReportSink(TheoremReport& r) : r_(r) {}
  void merge(TheoremReport&& part) {
    std::lock_guard lock(mu_);
    r_.merge(std::move(part));
  }

 private:
  TheoremReport& r_;
  std::mutex mu_;
};

// Witness helpers.
nlohmann::json lattice_json(const FiniteLattice& L);
nlohmann::json congruence_json(const Congruence& t);
nlohmann::json congruences_json(const std::vector<Congruence>& cs);

// Pointwise op on L×M, (x,y) -> (f x, g y) in product() indexing.
UnaryOp product_op(const FiniteLattice& L, const UnaryOp& f, const FiniteLattice& M, const UnaryOp& g);
// Some isomorphism L -> M carrying opL to opM (and opL2 to opM2 if given), or none.
std::optional<std::vector<int>> op_isomorphism(const FiniteLattice& L, const UnaryOp& opL,
                                               const FiniteLattice& M, const UnaryOp& opM,
                                               const UnaryOp* opL2 = nullptr,
                                               const UnaryOp* opM2 = nullptr);
bool is_boolean_complement(const FiniteLattice& L, const UnaryOp& op);
// Congruence set equality as sets.
bool same_set(std::vector<Congruence> a, std::vector<Congruence> b);

// Suites. Each is deterministic in its parameters.
TheoremReport verify_lattice_maxima(int n_min, int n_max);
TheoremReport verify_wcl_maxima(int n_min, int n_max);
TheoremReport verify_wdcl_maxima(int n_min, int n_max, int spot_cases = 10);
TheoremReport verify_wdl_maxima(int n_min, int n_max);
TheoremReport verify_ordinal_sums(int size_cap);
TheoremReport verify_horizontal_sums(int min_size, int max_size, int triple_max_size);
TheoremReport verify_sum_structures(int size_cap);  // both of the above
TheoremReport verify_quotient_size_lemmas(int n_max);
TheoremReport verify_examples();
TheoremReport verify_fca(int n_max);

// Runs a suite by name: lat, wcl, wdcl, wdl, sums, osum, hsum, quotients, examples, fca.
TheoremReport run_suite(const std::string& name, int max_n);
const std::vector<std::string>& suite_names();

}  // namespace latt
