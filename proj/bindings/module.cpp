#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tvl/check.hpp"
#include "tvl/cocycle.hpp"
#include "tvl/corpus.hpp"
#include "tvl/group_file.hpp"
#include "tvl/scan.hpp"
#include "tvl/structure.hpp"
#include "tvl/transversal.hpp"

namespace py = pybind11;
using namespace tvl;

namespace {

std::vector<int> whole_group_members(const GroupPtr& g) {
  std::vector<int> v(g->order());
  for (int i = 0; i < g->order(); ++i) v[i] = i;
  return v;
}

int checked(const Group& g, int e) {
  if (e < 0 || e >= g.order())
    throw py::index_error("element " + std::to_string(e) + " is out of range for a group of order " +
                          std::to_string(g.order()));
  return e;
}

}  // namespace

PYBIND11_MODULE(transversal_lab, m) {
  m.doc() = "finite-group invariant-transversal laboratory";

  py::register_exception<Error>(m, "Error");

  py::enum_<Provenance>(m, "Provenance")
      .value("CAYLEY_FILE", Provenance::CayleyFile)
      .value("PERMUTATION_CLOSURE", Provenance::PermutationClosure)
      .value("BUILTIN_FAMILY", Provenance::BuiltinFamily)
      .value("PRODUCT", Provenance::Product);

  py::class_<Group, GroupPtr>(m, "Group")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("name", &Group::name)
      .def_property_readonly("provenance", &Group::provenance)
      .def("mul",
           [](const Group& g, int a, int b) { return g.mul(checked(g, a), checked(g, b)); },
           py::arg("a"), py::arg("b"))
      .def("inv", [](const Group& g, int a) { return g.inv(checked(g, a)); }, py::arg("a"))
      .def("power",
           [](const Group& g, int x, long long e) { return g.power(checked(g, x), e); },
           py::arg("g"), py::arg("e"))
      .def("element_order",
           [](const Group& g, int x) { return g.element_order(checked(g, x)); },
           py::arg("g"))
      .def("conjugate",
           [](const Group& g, int a, int x) {
             return g.conjugate(checked(g, a), checked(g, x));
           },
           py::arg("g"), py::arg("x"))
      .def("commutator",
           [](const Group& g, int a, int x) {
             return g.commutator(checked(g, a), checked(g, x));
           },
           py::arg("g"), py::arg("x"))
      .def("exponent", &Group::exponent)
      .def("is_abelian", &Group::is_abelian)
      .def("perm_images", &Group::perm_images)
      .def("generating_set", &Group::generating_set)
      .def("__len__", &Group::order)
      .def("__repr__", [](const Group& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("group_from_cayley",
        [](const std::vector<std::vector<int>>& table, const std::string& name) {
          return group_from_cayley(table, name);
        },
        py::arg("table"), py::arg("name") = "G");
  m.def("group_from_permutations",
        [](int degree, const std::vector<std::vector<int>>& gens, const std::string& name) {
          return group_from_permutations(degree, gens, name);
        },
        py::arg("degree"), py::arg("generators"), py::arg("name") = "G");
  m.def("regular_representation", &regular_representation, py::arg("group"),
        py::arg("generators"));
  m.def("cyclic_group", [](int n) { return cyclic_group(n); }, py::arg("n"));
  m.def("dihedral_group", [](int order) { return dihedral_group(order); }, py::arg("order"));
  m.def("quaternion_group", [] { return quaternion_group(); });
  m.def("symmetric_group", [](int n) { return symmetric_group(n); }, py::arg("n"));
  m.def("elementary_abelian_group",
        [](int p, int k) { return elementary_abelian_group(p, k); }, py::arg("p"),
        py::arg("k"));
  m.def("builtin_group",
        [](const std::string& family, const std::vector<int>& params) {
          return builtin_group(family, params);
        },
        py::arg("family"), py::arg("params"));

  py::class_<DirectProduct>(m, "DirectProduct")
      .def_readonly("group", &DirectProduct::group)
      .def_readonly("proj_left", &DirectProduct::proj_left)
      .def_readonly("proj_right", &DirectProduct::proj_right)
      .def_readonly("embed_left", &DirectProduct::embed_left)
      .def_readonly("embed_right", &DirectProduct::embed_right);
  m.def("direct_product",
        [](const GroupPtr& a, const GroupPtr& b, const std::string& name) {
          return direct_product(a, b, name);
        },
        py::arg("a"), py::arg("b"), py::arg("name") = "");

  py::class_<CentralProduct>(m, "CentralProduct")
      .def_readonly("group", &CentralProduct::group)
      .def_readonly("embed_left", &CentralProduct::embed_left)
      .def_readonly("embed_right", &CentralProduct::embed_right);
  m.def("central_product",
        [](const GroupPtr& a, const GroupPtr& b, const std::vector<std::pair<int, int>>& phi,
           const std::string& name) { return central_product(a, b, phi, name); },
        py::arg("a"), py::arg("b"), py::arg("phi"), py::arg("name") = "");

  py::class_<Subgroup>(m, "Subgroup")
      .def(py::init<GroupPtr, std::vector<int>>(), py::arg("parent"), py::arg("members"))
      .def_property_readonly("parent", &Subgroup::parent)
      .def_property_readonly("members", &Subgroup::members)
      .def_property_readonly("order", &Subgroup::order)
      .def("contains", &Subgroup::contains, py::arg("g"))
      .def("is_trivial", &Subgroup::is_trivial)
      .def("is_whole_group", &Subgroup::is_whole_group)
      .def("__len__", &Subgroup::order)
      .def("__contains__", &Subgroup::contains)
      .def("__repr__", [](const Subgroup& h) {
        return "<Subgroup of order " + std::to_string(h.order()) + ">";
      });

  m.def("subgroup_closure", &subgroup_closure, py::arg("group"), py::arg("seed"));
  m.def("trivial_subgroup", &trivial_subgroup, py::arg("group"));
  m.def("whole_group", &whole_group, py::arg("group"));
  m.def("centralizer",
        py::overload_cast<const GroupPtr&, const std::vector<int>&>(&centralizer),
        py::arg("group"), py::arg("targets"));
  m.def("normalizer", &normalizer, py::arg("group"), py::arg("members"));
  m.def("center", &center, py::arg("group"));
  m.def("commutator_subgroup", &commutator_subgroup, py::arg("group"));
  m.def("intersect", &intersect, py::arg("a"), py::arg("b"));
  m.def("is_normal", &is_normal, py::arg("subgroup"));
  m.def("is_abelian", &is_abelian, py::arg("subgroup"));
  m.def("is_central", &is_central, py::arg("subgroup"));

  py::class_<ClassPartition>(m, "ClassPartition")
      .def_readonly("class_of", &ClassPartition::class_of)
      .def_readonly("classes", &ClassPartition::classes)
      .def_readonly("representatives", &ClassPartition::representatives)
      .def("count", &ClassPartition::count)
      .def("__len__", &ClassPartition::count);
  m.def("conjugacy_classes", &conjugacy_classes, py::arg("group"));

  py::class_<QuotientMap>(m, "QuotientMap")
      .def_readonly("source", &QuotientMap::source)
      .def_readonly("kernel", &QuotientMap::kernel)
      .def_readonly("quotient", &QuotientMap::quotient)
      .def_readonly("projection", &QuotientMap::projection)
      .def_readonly("section", &QuotientMap::section)
      .def("project", &QuotientMap::project, py::arg("g"));
  m.def("quotient", &quotient, py::arg("group"), py::arg("kernel"));

  m.def("normal_subgroups",
        [](const GroupPtr& g) { return normal_subgroups(g); }, py::arg("group"));
  m.def("sylow_subgroup", &sylow_subgroup, py::arg("group"), py::arg("p"));

  py::class_<SubgroupGroup>(m, "SubgroupGroup")
      .def_readonly("group", &SubgroupGroup::group)
      .def_readonly("to_parent", &SubgroupGroup::to_parent);
  m.def("subgroup_to_group", [](const Subgroup& h) { return subgroup_to_group(h); },
        py::arg("subgroup"));
  m.def("class_count", &class_count, py::arg("subgroup"));

  py::class_<LinearCharacter>(m, "LinearCharacter")
      .def_readonly("modulus", &LinearCharacter::modulus)
      .def_readonly("exponents", &LinearCharacter::exponents)
      .def_readonly("h_members", &LinearCharacter::h_members)
      .def("exponent_of", &LinearCharacter::exponent_of, py::arg("ambient"))
      .def("is_faithful", &LinearCharacter::is_faithful)
      .def("kernel_members", &LinearCharacter::kernel_members);
  m.def("linear_characters", [](const Subgroup& h) { return linear_characters(h); },
        py::arg("subgroup"));

  py::class_<Transversal>(m, "Transversal")
      .def_readonly("group", &Transversal::group)
      .def_readonly("subgroup", &Transversal::subgroup)
      .def_readonly("members", &Transversal::members);

  py::class_<GallagherCounts>(m, "GallagherCounts")
      .def_readonly("k_group", &GallagherCounts::k_group)
      .def_readonly("k_quotient", &GallagherCounts::k_quotient)
      .def_readonly("k_subgroup", &GallagherCounts::k_subgroup)
      .def_readonly("holds", &GallagherCounts::holds);

  py::class_<ConditionsVerdict>(m, "ConditionsVerdict")
      .def_readonly("factorization_holds", &ConditionsVerdict::factorization_holds)
      .def_readonly("centralizer_condition_holds",
                    &ConditionsVerdict::centralizer_condition_holds)
      .def_readonly("centralizer_witness", &ConditionsVerdict::centralizer_witness)
      .def_readonly("gallagher", &ConditionsVerdict::gallagher)
      .def_readonly("exists_invariant", &ConditionsVerdict::exists_invariant)
      .def_readonly("commutator_free", &ConditionsVerdict::commutator_free);
  m.def("check_conditions", &check_conditions, py::arg("subgroup"));

  m.def("is_transversal", &is_transversal, py::arg("subgroup"), py::arg("t"));
  m.def("is_invariant_under", &is_invariant_under, py::arg("group"), py::arg("t"),
        py::arg("conjugators"));
  m.def("is_invariant_under_group", &is_invariant_under_group, py::arg("group"),
        py::arg("t"));
  m.def("minimal_coset_section", &minimal_coset_section, py::arg("subgroup"));
  m.def("construct_invariant_transversal", &construct_invariant_transversal,
        py::arg("subgroup"));
  m.def("construct_via_derived",
        py::overload_cast<const Subgroup&>(&construct_via_derived), py::arg("subgroup"));
  m.def("construct_via_derived",
        py::overload_cast<const Subgroup&, const std::vector<int>&>(&construct_via_derived),
        py::arg("subgroup"), py::arg("section"));
  m.def("brute_force_invariant_transversal",
        [](const Subgroup& h, const std::vector<int>& conj, std::optional<long long> cap) {
          return brute_force_invariant_transversal(
              h, conj, cap.value_or(default_config().search_cap));
        },
        py::arg("subgroup"), py::arg("invariance_members"), py::arg("cap") = py::none());
  m.def("brute_force_group_invariant",
        [](const Subgroup& h, std::optional<long long> cap) {
          return brute_force_invariant_transversal(
              h, whole_group_members(h.parent()), cap.value_or(default_config().search_cap));
        },
        py::arg("subgroup"), py::arg("cap") = py::none());
  m.def("brute_force_space_estimate", &brute_force_space_estimate, py::arg("subgroup"),
        py::arg("invariance_members"));
  m.def("h_invariant_exists", &h_invariant_exists, py::arg("subgroup"));

  py::class_<CentralizerReduction>(m, "CentralizerReduction")
      .def_readonly("l", &CentralizerReduction::l)
      .def_readonly("z", &CentralizerReduction::z);
  m.def("reduce_to_centralizer", &reduce_to_centralizer, py::arg("subgroup"));

  py::class_<LoopReport>(m, "LoopReport")
      .def_readonly("members", &LoopReport::members)
      .def_readonly("table", &LoopReport::table)
      .def_readonly("is_loop_transversal", &LoopReport::is_loop_transversal)
      .def_readonly("has_identity", &LoopReport::has_identity)
      .def_readonly("is_latin", &LoopReport::is_latin)
      .def_readonly("loop_axioms_hold", &LoopReport::loop_axioms_hold)
      .def_readonly("associative", &LoopReport::associative)
      .def("op",
           [](const LoopReport& r, int a, int b) {
             int k = static_cast<int>(r.members.size());
             if (a < 0 || a >= k || b < 0 || b >= k)
               throw py::index_error("loop index out of range");
             return r.op(a, b);
           },
           py::arg("a"), py::arg("b"));
  m.def("loop_from_transversal", &loop_from_transversal, py::arg("subgroup"), py::arg("t"));

  py::class_<DescentResult>(m, "DescentResult")
      .def_readonly("sylow", &DescentResult::sylow)
      .def_readonly("transversal", &DescentResult::transversal)
      .def_readonly("q_in_derived", &DescentResult::q_in_derived);
  m.def("descend_to_sylow", &descend_to_sylow, py::arg("h"), py::arg("q"), py::arg("p"),
        py::arg("t"));

  py::class_<CounterexampleStatus>(m, "CounterexampleStatus")
      .def_readonly("abelian", &CounterexampleStatus::abelian)
      .def_readonly("admits", &CounterexampleStatus::admits)
      .def_readonly("meets_derived", &CounterexampleStatus::meets_derived)
      .def_readonly("is_counterexample", &CounterexampleStatus::is_counterexample);
  m.def("counterexample_status", &counterexample_status, py::arg("subgroup"));

  py::class_<CocycleTable>(m, "CocycleTable")
      .def_readonly("qmap", &CocycleTable::qmap)
      .def_readonly("subgroup", &CocycleTable::subgroup)
      .def_readonly("values", &CocycleTable::values)
      .def("size", &CocycleTable::size)
      .def("value",
           [](const CocycleTable& t, int x, int y) {
             if (x < 0 || x >= t.size() || y < 0 || y >= t.size())
               throw py::index_error("quotient index out of range");
             return t.value(x, y);
           },
           py::arg("xbar"), py::arg("ybar"));
  m.def("cocycle_from_transversal", &cocycle_from_transversal, py::arg("subgroup"),
        py::arg("t"));

  py::class_<SymmetryReport>(m, "SymmetryReport")
      .def_readonly("symmetric", &SymmetryReport::symmetric)
      .def_readonly("witness", &SymmetryReport::witness);
  m.def("symmetric_on_commuting", &symmetric_on_commuting, py::arg("gamma"));

  py::class_<TwistedCocycle>(m, "TwistedCocycle")
      .def_readonly("quotient", &TwistedCocycle::quotient)
      .def_readonly("modulus", &TwistedCocycle::modulus)
      .def_readonly("values", &TwistedCocycle::values)
      .def("size", &TwistedCocycle::size)
      .def("value",
           [](const TwistedCocycle& t, int x, int y) {
             if (x < 0 || x >= t.size() || y < 0 || y >= t.size())
               throw py::index_error("quotient index out of range");
             return t.value(x, y);
           },
           py::arg("xbar"), py::arg("ybar"));
  m.def("twist_by_character", &twist_by_character, py::arg("gamma"), py::arg("lam"));

  py::class_<AlphaRegularity>(m, "AlphaRegularity")
      .def_readonly("regular_elements", &AlphaRegularity::regular_elements)
      .def_readonly("regular_class_count", &AlphaRegularity::regular_class_count);
  m.def("alpha_regular_elements", &alpha_regular_elements, py::arg("alpha"));
  m.def("alpha_class_is_trivial", &alpha_class_is_trivial, py::arg("subgroup"),
        py::arg("lam"));

  py::class_<ParsedGroupFile>(m, "ParsedGroupFile")
      .def_readonly("group", &ParsedGroupFile::group)
      .def_property_readonly("subgroups", [](const ParsedGroupFile& f) {
        py::dict d;
        for (const auto& [name, sub] : f.subgroups) d[py::str(name)] = sub;
        return d;
      });
  m.def("parse_group_file",
        [](const std::filesystem::path& p) { return parse_group_file(p); }, py::arg("path"));
  m.def("group_file_to_json", &group_file_to_json, py::arg("parsed"));

  py::enum_<ScanMode>(m, "ScanMode")
      .value("CONJECTURE", ScanMode::Conjecture)
      .value("GALLAGHER_SPECIAL", ScanMode::GallagherSpecial);

  py::class_<PairRecord>(m, "PairRecord")
      .def_readonly("group_name", &PairRecord::group_name)
      .def_readonly("group_order", &PairRecord::group_order)
      .def_readonly("subgroup_desc", &PairRecord::subgroup_desc)
      .def_readonly("subgroup_order", &PairRecord::subgroup_order)
      .def_readonly("normal", &PairRecord::normal)
      .def_readonly("abelian", &PairRecord::abelian)
      .def_readonly("central", &PairRecord::central)
      .def_readonly("condition2", &PairRecord::condition2)
      .def_readonly("condition3", &PairRecord::condition3)
      .def_readonly("gallagher", &PairRecord::gallagher)
      .def_readonly("exists_invariant", &PairRecord::exists_invariant)
      .def_readonly("meets_derived_order", &PairRecord::meets_derived_order)
      .def_readonly("counterexample", &PairRecord::counterexample)
      .def_readonly("gallagher_special", &PairRecord::gallagher_special);

  py::class_<ScanError>(m, "ScanError")
      .def_readonly("file", &ScanError::file)
      .def_readonly("message", &ScanError::message);

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("pairs", &ScanReport::pairs)
      .def_readonly("errors", &ScanReport::errors)
      .def_readonly("groups_scanned", &ScanReport::groups_scanned)
      .def_readonly("counterexamples", &ScanReport::counterexamples)
      .def_readonly("gallagher_special_hits", &ScanReport::gallagher_special_hits);
  m.def("scan_corpus",
        [](const std::filesystem::path& dir, ScanMode mode, int jobs) {
          return scan_corpus(dir, mode, jobs);
        },
        py::arg("directory"), py::arg("mode") = ScanMode::Conjecture, py::arg("jobs") = 1);
  m.def("report_to_json", &report_to_json, py::arg("report"));
  m.def("report_to_text", &report_to_text, py::arg("report"));

  m.def("builtin_corpus", &builtin_corpus);
  m.def("write_corpus_files", &write_corpus_files, py::arg("directory"));

  py::class_<LambdaSummary>(m, "LambdaSummary")
      .def_readonly("index", &LambdaSummary::index)
      .def_readonly("faithful", &LambdaSummary::faithful)
      .def_readonly("regular_element_count", &LambdaSummary::regular_element_count)
      .def_readonly("regular_class_count", &LambdaSummary::regular_class_count)
      .def_readonly("alpha_trivial", &LambdaSummary::alpha_trivial);

  py::class_<CheckOutcome>(m, "CheckOutcome")
      .def_readonly("record", &CheckOutcome::record)
      .def_readonly("condition3_witness", &CheckOutcome::condition3_witness)
      .def_readonly("transversal", &CheckOutcome::transversal)
      .def_readonly("gamma_symmetry", &CheckOutcome::gamma_symmetry)
      .def_readonly("lambdas", &CheckOutcome::lambdas);
  m.def("run_check",
        [](const Subgroup& h, const std::string& group_name, const std::string& desc) {
          return run_check(group_name.empty() ? h.parent()->name() : group_name, h, desc);
        },
        py::arg("subgroup"), py::arg("group_name") = "", py::arg("subgroup_desc") = "");
  m.def("check_to_text", &check_to_text, py::arg("outcome"));
  m.def("check_to_json", &check_to_json, py::arg("outcome"));
}
