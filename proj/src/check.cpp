#include "tvl/check.hpp"

#include <sstream>

#include <json.hpp>

namespace tvl {

using ordered_json = nlohmann::ordered_json;

std::string describe_subgroup(const Subgroup& h) {
  std::ostringstream os;
  os << "{";
  const auto& m = h.members();
  size_t shown = m.size() <= 16 ? m.size() : 8;
  for (size_t i = 0; i < shown; ++i) {
    if (i) os << ",";
    os << m[i];
  }
  if (shown < m.size()) os << ",..." << "|" << m.size();
  os << "}";
  return os.str();
}

namespace {

bool eval_gallagher_special(const Subgroup& h, const PairRecord& r) {
  if (h.order() != 2 || !r.central) return false;
  Subgroup derived = commutator_subgroup(h.parent());
  for (int m : h.members())
    if (!derived.contains(m)) return false;
  return r.gallagher.k_group == 2 * r.gallagher.k_quotient;
}

}  // namespace

CheckOutcome run_check(const std::string& group_name, const Subgroup& h,
                       const std::string& subgroup_desc, const CheckOptions& opts) {
  CheckOutcome out;
  PairRecord& r = out.record;
  r.group_name = group_name;
  r.group_order = h.parent()->order();
  r.subgroup_desc = subgroup_desc.empty() ? describe_subgroup(h) : subgroup_desc;
  r.subgroup_order = h.order();
  r.normal = is_normal(h);
  r.abelian = is_abelian(h);
  r.central = is_central(h);

  ConditionsVerdict v = check_conditions(h);
  r.condition2 = v.factorization_holds;
  r.condition3 = v.centralizer_condition_holds;
  r.gallagher = v.gallagher;
  r.exists_invariant = v.exists_invariant;
  out.condition3_witness = v.centralizer_witness;

  CounterexampleStatus status = counterexample_status(h);
  r.meets_derived_order = status.meets_derived.order();
  r.counterexample = status.is_counterexample;
  r.gallagher_special = eval_gallagher_special(h, r);

  if (v.exists_invariant) out.transversal = construct_invariant_transversal(h).members;

  if (opts.with_cocycle && r.central) {
    CocycleTable gamma = cocycle_from_transversal(h, minimal_coset_section(h).members);
    out.gamma_symmetry = symmetric_on_commuting(gamma);
    auto lambdas = linear_characters(h);
    for (int i = 0; i < static_cast<int>(lambdas.size()); ++i) {
      if (opts.lambda_index && *opts.lambda_index != i) continue;
      bool faithful = lambdas[i].is_faithful();
      if (opts.faithful_lambdas_only && !faithful) continue;
      TwistedCocycle alpha = twist_by_character(gamma, lambdas[i]);
      AlphaRegularity reg = alpha_regular_elements(alpha);
      out.lambdas.push_back(LambdaSummary{
          i, faithful, static_cast<int>(reg.regular_elements.size()),
          reg.regular_class_count, alpha_class_is_trivial(h, lambdas[i])});
    }
  }
  return out;
}

static ordered_json record_json(const PairRecord& r) {
  ordered_json j;
  j["group"] = r.group_name;
  j["order"] = r.group_order;
  j["subgroup"] = r.subgroup_desc;
  j["subgroup_order"] = r.subgroup_order;
  j["normal"] = r.normal;
  j["abelian"] = r.abelian;
  j["central"] = r.central;
  j["condition2"] = r.condition2;
  j["condition3"] = r.condition3;
  j["gallagher"] = ordered_json{{"kG", r.gallagher.k_group},
                                {"kQ", r.gallagher.k_quotient},
                                {"kH", r.gallagher.k_subgroup},
                                {"holds", r.gallagher.holds}};
  j["exists_invariant"] = r.exists_invariant;
  j["meets_derived"] = r.meets_derived_order;
  j["counterexample"] = r.counterexample;
  j["gallagher_special"] = r.gallagher_special;
  return j;
}

std::string pair_record_to_json(const PairRecord& r) { return record_json(r).dump(); }

std::string check_to_json(const CheckOutcome& outcome) {
  ordered_json j = record_json(outcome.record);
  if (outcome.condition3_witness) j["condition3_witness"] = *outcome.condition3_witness;
  if (outcome.transversal) j["transversal"] = *outcome.transversal;
  if (outcome.gamma_symmetry) {
    ordered_json s;
    s["symmetric"] = outcome.gamma_symmetry->symmetric;
    if (outcome.gamma_symmetry->witness)
      s["witness"] = {outcome.gamma_symmetry->witness->first,
                      outcome.gamma_symmetry->witness->second};
    j["gamma"] = std::move(s);
  }
  if (!outcome.lambdas.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& l : outcome.lambdas) {
      arr.push_back(ordered_json{{"lambda", l.index},
                                 {"faithful", l.faithful},
                                 {"regular_elements", l.regular_element_count},
                                 {"regular_classes", l.regular_class_count},
                                 {"alpha_trivial", l.alpha_trivial}});
    }
    j["lambdas"] = std::move(arr);
  }
  return j.dump();
}

std::string check_to_text(const CheckOutcome& outcome) {
  const PairRecord& r = outcome.record;
  std::ostringstream os;
  os << "group " << r.group_name << " (order " << r.group_order << ")\n";
  os << "subgroup " << r.subgroup_desc << " (order " << r.subgroup_order << ")"
     << "  normal=" << (r.normal ? "yes" : "no") << " abelian=" << (r.abelian ? "yes" : "no")
     << " central=" << (r.central ? "yes" : "no") << "\n";
  os << "condition (2) G = H C_G(H)      : " << (r.condition2 ? "true" : "false") << "\n";
  os << "condition (3) centralizer lift  : " << (r.condition3 ? "true" : "false");
  if (outcome.condition3_witness) os << "   (witness g=" << *outcome.condition3_witness << ")";
  os << "\n";
  os << "condition (4) k(G)=k(G/H)*k(H)  : " << r.gallagher.k_group
     << (r.gallagher.holds ? " == " : " != ") << r.gallagher.k_quotient << "*"
     << r.gallagher.k_subgroup << " -> " << (r.gallagher.holds ? "true" : "false") << "\n";
  os << "invariant transversal exists    : " << (r.exists_invariant ? "true" : "false") << "\n";
  if (outcome.transversal) {
    os << "transversal                     : {";
    for (size_t i = 0; i < outcome.transversal->size(); ++i)
      os << (i ? "," : "") << (*outcome.transversal)[i];
    os << "}\n";
  }
  os << "|H meet G'|                     : " << r.meets_derived_order << "\n";
  os << "counterexample                  : " << (r.counterexample ? "YES" : "no") << "\n";
  if (r.gallagher_special)
    os << "gallagher-special (k(G)=2k(G/H), H <= Z(G) meet G'): YES\n";
  if (outcome.gamma_symmetry) {
    os << "factor set symmetric on commuting pairs: "
       << (outcome.gamma_symmetry->symmetric ? "true" : "false");
    if (outcome.gamma_symmetry->witness)
      os << "   (witness pair " << outcome.gamma_symmetry->witness->first << ","
         << outcome.gamma_symmetry->witness->second << ")";
    os << "\n";
    for (const auto& l : outcome.lambdas) {
      os << "lambda[" << l.index << "]" << (l.faithful ? " (faithful)" : "          ")
         << ": regular elements " << l.regular_element_count << ", regular classes "
         << l.regular_class_count << ", [alpha] " << (l.alpha_trivial ? "trivial" : "non-trivial")
         << "\n";
    }
  }
  return os.str();
}

}  // namespace tvl
