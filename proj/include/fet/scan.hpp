#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fet/boolean_function.hpp"
#include "fet/common.hpp"

namespace fet {

struct ConfigError : Error {
  using Error::Error;
};

enum class ScanCheck {
  FeiRatio,
  FmeiRatio,
  MinentropyVsCminParity,
  EntropyVsAuc,
  EntropyVsAucParity,
  Granularity,
  RenyiChain,
  LpMinentropy,
  KklRatio,
};

const char* to_string(ScanCheck c);
ScanCheck scan_check_from_string(const std::string& name);

enum class ScanMode { Exhaustive, Random, File };

struct ScanConfig {
  int n = 2;
  ScanMode mode = ScanMode::Exhaustive;
  std::uint64_t count = 0;     // random mode
  std::uint64_t seed = 0;      // random mode
  std::string path;            // file mode: concatenated truth-table blocks
  std::set<ScanCheck> checks;  // empty = all checks allowed at this n
  enum class Format { Json, Csv } format = Format::Json;
};

struct RatioEntry {
  double lhs = 0, rhs = 0, ratio = 0;
};

struct ScanRecord {
  std::uint64_t index = 0;
  std::string table_hex;
  bool constant = false;
  std::optional<RatioEntry> fei;
  std::optional<RatioEntry> fmei;
  struct Fmei { double min_entropy; int c_min_parity; bool holds; };
  std::optional<Fmei> minentropy_vs_cmin_parity;
  struct Auc { double entropy; double auc; std::string auc_exact; bool holds; };
  std::optional<Auc> entropy_vs_auc;
  std::optional<Auc> entropy_vs_auc_parity;
  std::optional<bool> granularity;
  struct Renyi { double h_inf, h, h_half, h0; bool ok; };
  std::optional<Renyi> renyi_chain;
  struct LpMin { double min_entropy; double bound; bool holds; };
  std::optional<LpMin> lp_minentropy;
  struct Kkl { double max_influence; double log_term; double ratio; bool sentinel; };
  std::optional<Kkl> kkl;
  std::string error;  // per-record failure tag, empty when clean
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanRecord> records;
  struct Extremal {
    bool present = false;
    std::uint64_t index = 0;
    std::string table_hex;
    double ratio = 0;
  };
  Extremal max_fei;
  Extremal max_fmei;
  // Wall-clock stats are logged to stderr, never serialized: the rendered
  // report must be byte-identical across runs and thread counts.
  double elapsed_seconds = 0;
};

// Runs the configured checks over the corpus. Deterministic given the seed;
// threads only split the work, the report is assembled in index order.
// A proved inequality coming out false aborts with InternalError.
ScanReport scan(const ScanConfig& config, int threads = 1);

std::string render_report(const ScanReport& report);  // format per config
ScanReport parse_report_json(const std::string& text);

}  // namespace fet
