#include "tvl/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tvl/group_file.hpp"

namespace tvl {

using ordered_json = nlohmann::ordered_json;

namespace {

struct FileResult {
  bool parsed = false;
  std::vector<PairRecord> pairs;
  std::string error;
};

FileResult analyze_file(const std::filesystem::path& path, ScanMode mode, const Config& cfg) {
  FileResult out;
  try {
    ParsedGroupFile parsed = parse_group_file(path, cfg);
    const GroupPtr& g = parsed.group;
    CheckOptions opts;
    opts.with_cocycle = false;

    if (mode == ScanMode::Conjecture) {
      // all normal abelian subgroups, in (order, members) order
      for (const Subgroup& h : normal_subgroups(g, cfg)) {
        if (!is_abelian(h)) continue;
        out.pairs.push_back(
            run_check(g->name(), h, describe_subgroup(h), opts).record);
      }
    } else {
      // order-2 central subgroups inside the derived subgroup
      Subgroup z = center(g);
      Subgroup derived = commutator_subgroup(g);
      for (int x : z.members()) {
        if (x == 0 || !derived.contains(x) || g->element_order(x) != 2) continue;
        Subgroup q(g, {0, x});
        out.pairs.push_back(
            run_check(g->name(), q, describe_subgroup(q), opts).record);
      }
    }
    out.parsed = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

ScanReport scan_corpus(const std::filesystem::path& directory, ScanMode mode, int jobs,
                       const Config& cfg) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(directory))
    throw SchemaError(directory.string() + ": not a directory");
  for (const auto& entry : std::filesystem::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

  std::vector<FileResult> results(files.size());
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  if (workers <= 1) {
    for (size_t i = 0; i < files.size(); ++i) results[i] = analyze_file(files[i], mode, cfg);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1))
          results[i] = analyze_file(files[i], mode, cfg);
      });
    for (auto& t : pool) t.join();
  }

  ScanReport report;
  report.mode = mode;
  for (size_t i = 0; i < files.size(); ++i) {
    if (!results[i].parsed) {
      report.errors.push_back({files[i].filename().string(), results[i].error});
      continue;
    }
    ++report.groups_scanned;
    for (auto& r : results[i].pairs) {
      if (r.counterexample) ++report.counterexamples;
      if (r.gallagher_special) ++report.gallagher_special_hits;
      report.pairs.push_back(std::move(r));
    }
  }
  return report;
}

std::string report_to_json(const ScanReport& report) {
  ordered_json j;
  ordered_json pairs = ordered_json::array();
  for (const auto& r : report.pairs)
    pairs.push_back(ordered_json::parse(pair_record_to_json(r)));
  j["pairs"] = std::move(pairs);
  j["totals"] =
      ordered_json{{"groups", report.groups_scanned}, {"counterexamples", report.counterexamples}};
  if (!report.errors.empty()) {
    ordered_json errs = ordered_json::array();
    for (const auto& e : report.errors)
      errs.push_back(ordered_json{{"file", e.file}, {"message", e.message}});
    j["errors"] = std::move(errs);
  }
  return j.dump();
}

std::string report_to_text(const ScanReport& report) {
  std::ostringstream os;
  std::vector<std::array<std::string, 13>> rows;
  rows.push_back({"group", "|G|", "subgroup", "|H|", "nrm", "ab", "ctr", "(2)", "(3)",
                  "k:G/Q/H", "exists", "|HnG'|", "flags"});
  for (const auto& r : report.pairs) {
    std::ostringstream k;
    k << r.gallagher.k_group << "/" << r.gallagher.k_quotient << "/" << r.gallagher.k_subgroup;
    std::string flags;
    if (r.counterexample) flags += "CE";
    if (r.gallagher_special) flags += flags.empty() ? "GS" : "+GS";
    if (flags.empty()) flags = "-";
    rows.push_back({r.group_name, std::to_string(r.group_order), r.subgroup_desc,
                    std::to_string(r.subgroup_order), r.normal ? "y" : "n",
                    r.abelian ? "y" : "n", r.central ? "y" : "n", r.condition2 ? "T" : "F",
                    r.condition3 ? "T" : "F", k.str(), r.exists_invariant ? "T" : "F",
                    std::to_string(r.meets_derived_order), flags});
  }
  std::array<size_t, 13> width{};
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c)
      os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    os << "\n";
  }
  os << "totals: groups=" << report.groups_scanned
     << " pairs=" << report.pairs.size()
     << " counterexamples=" << report.counterexamples
     << " gallagher_special=" << report.gallagher_special_hits << "\n";
  for (const auto& e : report.errors) os << "error: " << e.file << ": " << e.message << "\n";
  return os.str();
}

void emit_report(const ScanReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  std::string body =
      format == ReportFormat::Json ? report_to_json(report) : report_to_text(report);
  if (path.empty()) {
    std::cout << body;
    if (format == ReportFormat::Json) std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(path.string() + ": cannot write");
  out << body;
}

}  // namespace tvl
