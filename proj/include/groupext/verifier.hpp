#pragma once

// Theorem sweeps: enumerate every extension class in a parameter range and
// check that each one either classifies into the sweep's admissible set or
// carries a catalog finding. Sweeps run to completion and report every
// exception; the verdict is confirmed iff no case fails.

#include <span>
#include <string>

#include <json.hpp>

#include "groupext/extension.hpp"
#include "groupext/ok_catalog.hpp"

namespace groupext {

inline constexpr const char* kToolVersion = "0.1.0";

struct CaseRecord {
  std::string kernel;
  int prime = 0;
  int class_index = 0;
  bool split = false;
  int total_order = 0;
  Classification classification;
  std::vector<Finding> findings;
  bool admissible = false;
  // Group-isomorphism class of the total within its (kernel, prime) cell;
  // inequivalent extensions can share one.
  int iso_index = 0;
};

enum class Verdict { Confirmed, Counterexample };

struct Report {
  std::string command;
  nlohmann::ordered_json parameters;
  std::vector<CaseRecord> cases;
  Verdict verdict = Verdict::Confirmed;
  int first_counterexample = -1;  // index into cases, -1 when confirmed
  long long timing_ms = 0;
};

// A case passes iff it is admissible or carries at least one finding.
Verdict compute_verdict(std::span<const CaseRecord> cases, int* first_fail = nullptr);

// Every extension of Z_n by Z_p, n <= n_max, p in primes, must classify
// Cyclic or Dihedral or be rejected.
Report verify_cyclic_kernel(int n_max, std::vector<int> primes, int cap = kDefaultOrderCap);

// Every extension of D_2n by Z_p, 2 <= n <= n_max, must classify Dihedral or
// A4 or be rejected.
Report verify_dihedral_kernel(int n_max, std::vector<int> primes, int cap = kDefaultOrderCap);

// Extensions of A4: only S4 (at p = 2) is admissible. Extensions of S4: none.
Report verify_a4_s4(std::vector<int> primes, int cap = kDefaultOrderCap);

// PSL(2,p) spot checks: small-p identifications, the two extensions of A5 by
// Z_2, and Sylow-p normalizer structure and rejection for 5 < p <= p_max.
Report verify_nonsolvable(int p_max, int cap = kDefaultOrderCap);

// Classification kinds that appear among admissible cases, deduplicated, in
// enum order (the reachable-taxonomy aggregation).
std::vector<std::string> admissible_kinds(const Report& r);

nlohmann::ordered_json finding_to_json(const Finding& f);
nlohmann::ordered_json report_to_json(const Report& r, bool include_timing = true);

}  // namespace groupext
