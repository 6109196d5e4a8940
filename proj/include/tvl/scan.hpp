#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tvl/check.hpp"

namespace tvl {

enum class ScanMode { Conjecture, GallagherSpecial };
enum class ReportFormat { Text, Json };

struct ScanError {
  std::string file;
  std::string message;
};

struct ScanReport {
  ScanMode mode = ScanMode::Conjecture;
  std::vector<PairRecord> pairs;
  std::vector<ScanError> errors;
  int groups_scanned = 0;
  int counterexamples = 0;
  int gallagher_special_hits = 0;
};

/// Analyze every *.json group file in a directory. Conjecture mode walks all
/// normal abelian subgroups; gallagher-special mode walks the order-2 central
/// subgroups inside G'. Files are processed in name order and may be analyzed
/// by several worker threads; the report is a deterministic ordered merge, so
/// output does not depend on the job count. Per-file failures are collected
/// and the scan continues.
ScanReport scan_corpus(const std::filesystem::path& directory, ScanMode mode, int jobs = 1,
                       const Config& cfg = default_config());

/// Byte-stable serializations.
std::string report_to_json(const ScanReport& report);
std::string report_to_text(const ScanReport& report);

/// Write the report; empty path means stdout.
void emit_report(const ScanReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace tvl
