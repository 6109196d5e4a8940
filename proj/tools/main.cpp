#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvl/check.hpp"
#include "tvl/cocycle.hpp"
#include "tvl/corpus.hpp"
#include "tvl/group_file.hpp"
#include "tvl/scan.hpp"
#include "tvl/structure.hpp"
#include "tvl/transversal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitCounterexample = 3;

using tvl::Subgroup;

// A selector names a bundled subgroup, "center", "derived",
// "all-normal-abelian", or a comma-separated element list (closed to the
// subgroup it generates).
std::vector<std::pair<std::string, Subgroup>> resolve_selector(
    const tvl::ParsedGroupFile& file, const std::string& selector) {
  if (const Subgroup* named = file.find_subgroup(selector))
    return {{selector, *named}};
  if (selector == "center") return {{"center", tvl::center(file.group)}};
  if (selector == "derived") return {{"derived", tvl::commutator_subgroup(file.group)}};
  if (selector == "all-normal-abelian") {
    std::vector<std::pair<std::string, Subgroup>> out;
    for (const Subgroup& h : tvl::normal_subgroups(file.group))
      if (tvl::is_abelian(h)) out.emplace_back(tvl::describe_subgroup(h), h);
    return out;
  }
  std::vector<int> elements;
  std::stringstream ss(selector);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      elements.push_back(v);
    } catch (const std::exception&) {
      throw tvl::SchemaError("cannot resolve subgroup selector '" + selector + "'");
    }
  }
  if (elements.empty())
    throw tvl::SchemaError("cannot resolve subgroup selector '" + selector + "'");
  Subgroup h = tvl::subgroup_closure(file.group, elements);
  return {{tvl::describe_subgroup(h), h}};
}

void print_group_info(const tvl::ParsedGroupFile& file) {
  const tvl::Group& g = *file.group;
  std::cout << "name        : " << g.name() << "\n";
  std::cout << "order       : " << g.order() << "\n";
  std::cout << "provenance  : " << tvl::to_string(g.provenance()) << "\n";
  std::cout << "abelian     : " << (g.is_abelian() ? "yes" : "no") << "\n";
  std::cout << "exponent    : " << g.exponent() << "\n";
  tvl::ClassPartition classes = tvl::conjugacy_classes(file.group);
  std::cout << "classes     : " << classes.count() << " (sizes";
  for (const auto& c : classes.classes) std::cout << " " << c.size();
  std::cout << ")\n";
  std::cout << "center      : order " << tvl::center(file.group).order() << "\n";
  std::cout << "derived     : order " << tvl::commutator_subgroup(file.group).order() << "\n";
  {
    std::cout << "normal subgroup orders:";
    for (const Subgroup& h : tvl::normal_subgroups(file.group)) std::cout << " " << h.order();
    std::cout << "\n";
  }
  if (!g.perm_images().empty()) {
    std::cout << "element enumeration (index: image):\n";
    for (int i = 0; i < g.order(); ++i) {
      std::cout << "  " << i << ": (";
      const auto& img = g.perm_images()[i];
      for (size_t k = 0; k < img.size(); ++k) std::cout << (k ? " " : "") << img[k];
      std::cout << ")\n";
    }
  }
  for (const auto& [name, sub] : file.subgroups)
    std::cout << "subgroup " << name << ": order " << sub.order() << " "
              << tvl::describe_subgroup(sub) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group invariant-transversal laboratory"};
  app.require_subcommand(1);

  std::string file_arg, subgroup_sel, q_sel, invariance = "group", mode = "conjecture";
  std::string format = "text", out_path, dir_arg;
  int prime = 2, jobs = 1;
  long long cap = tvl::default_config().search_cap;
  std::optional<int> lambda_index;

  auto* info = app.add_subcommand("info", "summarize a group file");
  info->add_option("file", file_arg, "group file")->required();

  auto* check = app.add_subcommand("check", "existence conditions and counterexample status");
  check->add_option("file", file_arg)->required();
  check->add_option("--subgroup", subgroup_sel, "selector: name, element list, center, derived, all-normal-abelian")->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* construct = app.add_subcommand("construct", "build the canonical invariant transversal");
  construct->add_option("file", file_arg)->required();
  construct->add_option("--subgroup", subgroup_sel)->required();

  auto* brute = app.add_subcommand("brute", "exhaustive invariant-transversal search");
  brute->add_option("file", file_arg)->required();
  brute->add_option("--subgroup", subgroup_sel)->required();
  brute->add_option("--invariance", invariance)->check(CLI::IsMember({"group", "subgroup"}));
  brute->add_option("--cap", cap, "search node budget");

  auto* cocycle = app.add_subcommand("cocycle", "factor set and twisted-cocycle regularity");
  cocycle->add_option("file", file_arg)->required();
  cocycle->add_option("--subgroup", subgroup_sel)->required();
  cocycle->add_option("--lambda", lambda_index, "restrict to one character index");

  auto* sylow = app.add_subcommand("sylow", "deterministic Sylow p-subgroup");
  sylow->add_option("file", file_arg)->required();
  sylow->add_option("-p", prime, "prime")->required();

  auto* descend = app.add_subcommand("descend", "push an invariant transversal down to a Sylow subgroup");
  descend->add_option("file", file_arg)->required();
  descend->add_option("--subgroup", subgroup_sel, "central H")->required();
  descend->add_option("--q", q_sel, "order-p subgroup of H")->required();
  descend->add_option("-p", prime, "prime")->required();

  auto* scan = app.add_subcommand("scan", "analyze every group file in a directory");
  scan->add_option("dir", dir_arg)->required();
  scan->add_option("--mode", mode)->check(CLI::IsMember({"conjecture", "gallagher-special"}));
  scan->add_option("--jobs", jobs, "worker threads");
  scan->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  scan->add_option("--out", out_path, "write the report here instead of stdout");

  auto* fixtures = app.add_subcommand("fixtures", "export the builtin fixture corpus as group files");
  fixtures->add_option("--out", out_path, "target directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) {
      print_group_info(tvl::parse_group_file(file_arg));
      return kExitOk;
    }

    if (check->parsed()) {
      auto file = tvl::parse_group_file(file_arg);
      bool counterexample = false;
      bool first = true;
      for (const auto& [desc, h] : resolve_selector(file, subgroup_sel)) {
        tvl::CheckOutcome outcome = tvl::run_check(file.group->name(), h, desc);
        if (format == "json") {
          std::cout << tvl::check_to_json(outcome) << "\n";
        } else {
          if (!first) std::cout << "\n";
          std::cout << tvl::check_to_text(outcome);
        }
        first = false;
        counterexample = counterexample || outcome.record.counterexample;
      }
      return counterexample ? kExitCounterexample : kExitOk;
    }

    if (construct->parsed()) {
      auto file = tvl::parse_group_file(file_arg);
      for (const auto& [desc, h] : resolve_selector(file, subgroup_sel)) {
        std::cout << "subgroup " << desc << ":\n";
        try {
          tvl::Transversal t = tvl::construct_invariant_transversal(h);
          std::cout << "  invariant transversal {";
          for (size_t i = 0; i < t.members.size(); ++i)
            std::cout << (i ? "," : "") << t.members[i];
          std::cout << "}\n";
          tvl::LoopReport loop = tvl::loop_from_transversal(h, t.members);
          std::cout << "  loop transversal: " << (loop.is_loop_transversal ? "yes" : "no")
                    << ", latin: " << (loop.is_latin ? "yes" : "no")
                    << ", associative: " << (loop.associative ? "yes" : "no") << "\n";
        } catch (const tvl::ConditionsFail& e) {
          std::cout << "  no invariant transversal: " << e.what() << "\n";
        }
      }
      return kExitOk;
    }

    if (brute->parsed()) {
      auto file = tvl::parse_group_file(file_arg);
      for (const auto& [desc, h] : resolve_selector(file, subgroup_sel)) {
        std::vector<int> conj;
        if (invariance == "group") {
          conj.resize(file.group->order());
          for (int i = 0; i < file.group->order(); ++i) conj[i] = i;
        } else {
          conj = h.members();
        }
        auto found = tvl::brute_force_invariant_transversal(h, conj, cap);
        std::cout << "subgroup " << desc << ": ";
        if (found) {
          std::cout << "least " << invariance << "-invariant transversal {";
          for (size_t i = 0; i < found->members.size(); ++i)
            std::cout << (i ? "," : "") << found->members[i];
          std::cout << "}\n";
        } else {
          std::cout << "none\n";
        }
      }
      return kExitOk;
    }

    if (cocycle->parsed()) {
      auto file = tvl::parse_group_file(file_arg);
      for (const auto& [desc, h] : resolve_selector(file, subgroup_sel)) {
        tvl::CheckOptions opts;
        opts.lambda_index = lambda_index;
        tvl::CheckOutcome outcome = tvl::run_check(file.group->name(), h, desc, opts);
        if (!outcome.gamma_symmetry) {
          std::cout << "subgroup " << desc << ": not central, no factor set\n";
          continue;
        }
        std::cout << check_to_text(outcome);
        tvl::CocycleTable gamma =
            tvl::cocycle_from_transversal(h, tvl::minimal_coset_section(h).members);
        std::cout << "factor set (rows/cols follow quotient indices, entries are elements of H):\n";
        for (int x = 0; x < gamma.size(); ++x) {
          std::cout << "  ";
          for (int y = 0; y < gamma.size(); ++y) std::cout << gamma.value(x, y) << " ";
          std::cout << "\n";
        }
      }
      return kExitOk;
    }

    if (sylow->parsed()) {
      auto file = tvl::parse_group_file(file_arg);
      Subgroup p = tvl::sylow_subgroup(file.group, prime);
      std::cout << "sylow " << prime << "-subgroup: order " << p.order() << " "
                << tvl::describe_subgroup(p) << "\n";
      return kExitOk;
    }

    if (descend->parsed()) {
      auto file = tvl::parse_group_file(file_arg);
      auto hs = resolve_selector(file, subgroup_sel);
      auto qs = resolve_selector(file, q_sel);
      if (hs.size() != 1 || qs.size() != 1)
        throw tvl::SchemaError("descend needs single-subgroup selectors");
      const Subgroup& h = hs[0].second;
      const Subgroup& q = qs[0].second;
      tvl::Transversal t = tvl::construct_invariant_transversal(h);
      tvl::DescentResult r = tvl::descend_to_sylow(h, q, prime, t);
      std::cout << "sylow subgroup P: order " << r.sylow.order() << " "
                << tvl::describe_subgroup(r.sylow) << "\n";
      std::cout << "P-invariant transversal for Q\\P: {";
      for (size_t i = 0; i < r.transversal.size(); ++i)
        std::cout << (i ? "," : "") << r.transversal[i];
      std::cout << "}\n";
      std::cout << "Q inside P': " << (r.q_in_derived ? "yes" : "no") << "\n";
      return kExitOk;
    }

    if (scan->parsed()) {
      tvl::ScanMode m =
          mode == "conjecture" ? tvl::ScanMode::Conjecture : tvl::ScanMode::GallagherSpecial;
      tvl::ScanReport report = tvl::scan_corpus(dir_arg, m, jobs);
      tvl::emit_report(report,
                       format == "json" ? tvl::ReportFormat::Json : tvl::ReportFormat::Text,
                       out_path);
      bool hits = report.counterexamples > 0 || report.gallagher_special_hits > 0;
      return hits ? kExitCounterexample : kExitOk;
    }

    if (fixtures->parsed()) {
      auto written = tvl::write_corpus_files(out_path);
      std::cout << "wrote " << written.size() << " group files to " << out_path << "\n";
      return kExitOk;
    }
  } catch (const tvl::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tvl::NotASubgroup& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tvl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
