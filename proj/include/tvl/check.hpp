#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvl/cocycle.hpp"
#include "tvl/transversal.hpp"

namespace tvl {

/// One analyzed (G, H) pair; the unit of check and scan reports.
struct PairRecord {
  std::string group_name;
  int group_order = 0;
  std::string subgroup_desc;
  int subgroup_order = 0;
  bool normal = false;
  bool abelian = false;
  bool central = false;
  bool condition2 = false;  // G = H C_G(H)
  bool condition3 = false;  // centralizer lifting
  GallagherCounts gallagher;
  bool exists_invariant = false;
  int meets_derived_order = 1;  // |H meet G'|
  bool counterexample = false;
  bool gallagher_special = false;  // |H|=2, H <= Z(G) meet G', k(G) = 2 k(G/H)
};

struct LambdaSummary {
  int index = 0;
  bool faithful = false;
  int regular_element_count = 0;
  int regular_class_count = 0;
  bool alpha_trivial = false;
};

struct CheckOptions {
  bool with_cocycle = true;               // cocycle section for central H
  bool faithful_lambdas_only = false;     // restrict the summary to faithful lambdas
  std::optional<int> lambda_index;        // restrict to one character
};

struct CheckOutcome {
  PairRecord record;
  std::optional<int> condition3_witness;
  std::optional<std::vector<int>> transversal;  // when exists_invariant
  std::optional<SymmetryReport> gamma_symmetry;  // when H central
  std::vector<LambdaSummary> lambdas;            // when H central
};

/// Full verdict for one (G, H): conditions, construction, counterexample
/// status, and for central H the factor-set symmetry and per-character
/// regularity summary. Requires normal H.
CheckOutcome run_check(const std::string& group_name, const Subgroup& h,
                       const std::string& subgroup_desc, const CheckOptions& opts = {});

/// Compact description of a subgroup by its member list.
std::string describe_subgroup(const Subgroup& h);

std::string check_to_text(const CheckOutcome& outcome);
std::string check_to_json(const CheckOutcome& outcome);

/// Fixed-order JSON object for a pair record (shared by check and scan).
std::string pair_record_to_json(const PairRecord& r);

}  // namespace tvl
