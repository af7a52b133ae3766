#include "fet/scan.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "fet/certificates.hpp"
#include "fet/lp.hpp"
#include "fet/partitions.hpp"
#include "fet/spectrum.hpp"

namespace fet {

using nlohmann::json;

const char* to_string(ScanCheck c) {
  switch (c) {
    case ScanCheck::FeiRatio: return "fei_ratio";
    case ScanCheck::FmeiRatio: return "fmei_ratio";
    case ScanCheck::MinentropyVsCminParity: return "minentropy_vs_cmin_parity";
    case ScanCheck::EntropyVsAuc: return "entropy_vs_aUC";
    case ScanCheck::EntropyVsAucParity: return "entropy_vs_aUC_parity";
    case ScanCheck::Granularity: return "granularity";
    case ScanCheck::RenyiChain: return "renyi_chain";
    case ScanCheck::LpMinentropy: return "lp_minentropy";
    case ScanCheck::KklRatio: return "kkl_ratio";
  }
  throw InternalError("unknown check");
}

ScanCheck scan_check_from_string(const std::string& name) {
  for (ScanCheck c : {ScanCheck::FeiRatio, ScanCheck::FmeiRatio,
                      ScanCheck::MinentropyVsCminParity, ScanCheck::EntropyVsAuc,
                      ScanCheck::EntropyVsAucParity, ScanCheck::Granularity,
                      ScanCheck::RenyiChain, ScanCheck::LpMinentropy,
                      ScanCheck::KklRatio}) {
    if (name == to_string(c)) return c;
  }
  throw ConfigError("unknown check: " + name);
}

namespace {

std::set<ScanCheck> checks_allowed_at(int n) {
  std::set<ScanCheck> out{ScanCheck::FeiRatio, ScanCheck::FmeiRatio,
                          ScanCheck::Granularity, ScanCheck::RenyiChain,
                          ScanCheck::KklRatio};
  if (n <= caps::kExactAucMaxVars) out.insert(ScanCheck::EntropyVsAuc);
  if (n <= caps::kParityCertMaxVars) out.insert(ScanCheck::MinentropyVsCminParity);
  if (n <= caps::kPartitionCheckMaxVars) out.insert(ScanCheck::EntropyVsAucParity);
  if (n <= caps::kLpMaxVars) out.insert(ScanCheck::LpMinentropy);
  return out;
}

void validate_config(const ScanConfig& config) {
  if (config.n < 1 || config.n > caps::kMaxVars) throw ConfigError("n out of range");
  if (config.mode == ScanMode::Exhaustive && config.n > 4) {
    throw ConfigError("exhaustive mode requires n <= 4");
  }
  if (config.mode == ScanMode::Random && config.count == 0) {
    throw ConfigError("random mode needs a positive count");
  }
  auto allowed = checks_allowed_at(config.n);
  for (ScanCheck c : config.checks) {
    if (!allowed.count(c)) {
      throw ConfigError(std::string(to_string(c)) + " not available at n = " +
                        std::to_string(config.n));
    }
  }
}

std::vector<BooleanFunction> build_corpus(const ScanConfig& config) {
  std::vector<BooleanFunction> corpus;
  switch (config.mode) {
    case ScanMode::Exhaustive: {
      std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << config.n);
      corpus.reserve(total);
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        corpus.push_back(BooleanFunction::from_table_bits(config.n, bits));
      }
      break;
    }
    case ScanMode::Random: {
      std::mt19937_64 rng(config.seed);
      corpus.reserve(config.count);
      for (std::uint64_t i = 0; i < config.count; ++i) {
        BooleanFunction f(config.n);
        for (std::uint64_t x = 0; x < f.table_size(); x += 64) {
          std::uint64_t word = rng();
          for (int b = 0; b < 64 && x + b < f.table_size(); ++b) {
            f.set_bit(x + b, (word >> b) & 1);
          }
        }
        corpus.push_back(std::move(f));
      }
      break;
    }
    case ScanMode::File: {
      std::ifstream in(config.path);
      if (!in) throw ConfigError("cannot open " + config.path);
      std::string header;
      while (in >> header) {
        std::string table;
        if (!(in >> table)) throw ConfigError("truncated truth-table block");
        BooleanFunction f = BooleanFunction::from_text(header + "\n" + table);
        if (f.n() != config.n) {
          throw ConfigError("file function has n = " + std::to_string(f.n()) +
                            ", config says " + std::to_string(config.n));
        }
        corpus.push_back(std::move(f));
      }
      if (corpus.empty()) throw ConfigError("no functions in " + config.path);
      break;
    }
  }
  return corpus;
}

ScanRecord scan_one(const std::set<ScanCheck>& checks,
                    std::uint64_t index, const BooleanFunction& f) {
  ScanRecord rec;
  rec.index = index;
  rec.table_hex = f.table_hex();
  rec.constant = f.is_constant();
  FourierSpectrum s = wht(f);
  double h = shannon_entropy(s);
  double h_inf = min_entropy(s);
  double inf = s.influence_exact().to_double();

  if (checks.count(ScanCheck::FeiRatio) && !rec.constant) {
    rec.fei = RatioEntry{h, inf, h / inf};
  }
  if (checks.count(ScanCheck::FmeiRatio) && !rec.constant) {
    rec.fmei = RatioEntry{h_inf, inf, h_inf / inf};
  }
  if (checks.count(ScanCheck::MinentropyVsCminParity)) {
    int cmin = min_parity_certificate(f);
    bool holds = h_inf <= 2.0 * cmin + 1e-9;
    if (!holds) throw InternalError("min-entropy vs parity-certificate bound failed");
    rec.minentropy_vs_cmin_parity = ScanRecord::Fmei{h_inf, cmin, holds};
  }
  if (checks.count(ScanCheck::EntropyVsAuc)) {
    ExactAucResult auc = min_auc_exact(f);
    bool holds = h <= 2.0 * auc.auc.to_double() + 1e-9;
    if (!holds) throw InternalError("entropy vs exact aUC bound failed");
    rec.entropy_vs_auc =
        ScanRecord::Auc{h, auc.auc.to_double(), auc.auc.to_string(), holds};
  }
  if (checks.count(ScanCheck::EntropyVsAucParity)) {
    AffinePartition part = heuristic_affine_partition(f);
    Rational auc = verify_partition(f, part);
    bool holds = h <= 2.0 * auc.to_double() + 1e-9;
    if (!holds) throw InternalError("entropy vs parity aUC bound failed");
    rec.entropy_vs_auc_parity =
        ScanRecord::Auc{h, auc.to_double(), auc.to_string(), holds};
  }
  if (checks.count(ScanCheck::Granularity)) {
    bool ok = s.granularity_ok();
    if (!ok) throw InternalError("granularity failed");
    rec.granularity = ok;
  }
  if (checks.count(ScanCheck::RenyiChain)) {
    double h_half = renyi_entropy(s, 0.5);
    double h0 = renyi_entropy(s, 0.0);
    bool ok = h_inf <= h + 1e-9 && h <= h_half + 1e-9 && h_half <= h0 + 1e-9;
    if (!ok) throw InternalError("Renyi ordering failed");
    rec.renyi_chain = ScanRecord::Renyi{h_inf, h, h_half, h0, ok};
  }
  if (checks.count(ScanCheck::LpMinentropy)) {
    MinentropyNormReport lp = verify_minentropy_vs_norm(f, 0.0);
    if (!lp.holds) throw InternalError("min-entropy vs spectral-norm bound failed");
    rec.lp_minentropy = ScanRecord::LpMin{lp.min_entropy, lp.bound, lp.holds};
  }
  if (checks.count(ScanCheck::KklRatio) && !rec.constant) {
    KklReport k = kkl_ratio(f);
    rec.kkl = ScanRecord::Kkl{k.max_coordinate_influence, k.log_term,
                              k.sentinel ? 0.0 : k.ratio, k.sentinel};
  }
  return rec;
}

}  // namespace

ScanReport scan(const ScanConfig& config, int threads) {
  validate_config(config);
  auto started = std::chrono::steady_clock::now();
  std::set<ScanCheck> checks =
      config.checks.empty() ? checks_allowed_at(config.n) : config.checks;

  std::vector<BooleanFunction> corpus = build_corpus(config);
  ScanReport report;
  report.config = config;
  report.records.resize(corpus.size());

  threads = std::max(1, threads);
  std::atomic<std::uint64_t> cursor{0};
  std::vector<std::exception_ptr> failures(threads);
  auto worker = [&](int tid) {
    try {
      while (true) {
        std::uint64_t i = cursor.fetch_add(1);
        if (i >= corpus.size()) break;
        try {
          report.records[i] = scan_one(checks, i, corpus[i]);
        } catch (const InternalError&) {
          throw;  // soundness violations abort the scan
        } catch (const std::exception& e) {
          report.records[i].index = i;
          report.records[i].table_hex = corpus[i].table_hex();
          report.records[i].error = e.what();
        }
      }
    } catch (...) {
      failures[tid] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  for (auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  // Extremal ratios over non-constant functions, first index wins ties.
  for (const auto& rec : report.records) {
    if (rec.constant) continue;
    if (rec.fei && (!report.max_fei.present || rec.fei->ratio > report.max_fei.ratio)) {
      report.max_fei = {true, rec.index, rec.table_hex, rec.fei->ratio};
    }
    if (rec.fmei && (!report.max_fmei.present || rec.fmei->ratio > report.max_fmei.ratio)) {
      report.max_fmei = {true, rec.index, rec.table_hex, rec.fmei->ratio};
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

namespace {

json config_to_json(const ScanConfig& c) {
  json checks = json::array();
  for (ScanCheck ch : c.checks) checks.push_back(to_string(ch));
  const char* mode = c.mode == ScanMode::Exhaustive ? "exhaustive"
                     : c.mode == ScanMode::Random   ? "random"
                                                    : "file";
  return json{{"n", c.n},         {"mode", mode},   {"count", c.count},
              {"seed", c.seed},   {"path", c.path}, {"checks", checks},
              {"format", c.format == ScanConfig::Format::Json ? "json" : "csv"}};
}

ScanConfig config_from_json(const json& j) {
  ScanConfig c;
  c.n = j.at("n").get<int>();
  std::string mode = j.at("mode").get<std::string>();
  c.mode = mode == "exhaustive" ? ScanMode::Exhaustive
           : mode == "random"   ? ScanMode::Random
                                : ScanMode::File;
  c.count = j.at("count").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.path = j.at("path").get<std::string>();
  for (const auto& name : j.at("checks")) {
    c.checks.insert(scan_check_from_string(name.get<std::string>()));
  }
  c.format = j.at("format") == "csv" ? ScanConfig::Format::Csv : ScanConfig::Format::Json;
  return c;
}

json record_to_json(const ScanRecord& r) {
  json out{{"id", r.index}, {"table", r.table_hex}, {"constant", r.constant}};
  if (!r.error.empty()) out["error"] = r.error;
  if (r.fei) out["fei_ratio"] = {{"entropy", r.fei->lhs},
                                 {"influence", r.fei->rhs},
                                 {"ratio", r.fei->ratio}};
  if (r.fmei) out["fmei_ratio"] = {{"min_entropy", r.fmei->lhs},
                                   {"influence", r.fmei->rhs},
                                   {"ratio", r.fmei->ratio}};
  if (r.minentropy_vs_cmin_parity) {
    out["minentropy_vs_cmin_parity"] = {{"min_entropy", r.minentropy_vs_cmin_parity->min_entropy},
                                        {"c_min_parity", r.minentropy_vs_cmin_parity->c_min_parity},
                                        {"holds", r.minentropy_vs_cmin_parity->holds}};
  }
  auto auc_json = [](const ScanRecord::Auc& a) {
    return json{{"entropy", a.entropy}, {"auc", a.auc}, {"auc_exact", a.auc_exact},
                {"holds", a.holds}};
  };
  if (r.entropy_vs_auc) out["entropy_vs_aUC"] = auc_json(*r.entropy_vs_auc);
  if (r.entropy_vs_auc_parity) out["entropy_vs_aUC_parity"] = auc_json(*r.entropy_vs_auc_parity);
  if (r.granularity) out["granularity"] = {{"ok", *r.granularity}};
  if (r.renyi_chain) {
    out["renyi_chain"] = {{"h_inf", r.renyi_chain->h_inf}, {"h", r.renyi_chain->h},
                          {"h_half", r.renyi_chain->h_half}, {"h0", r.renyi_chain->h0},
                          {"ok", r.renyi_chain->ok}};
  }
  if (r.lp_minentropy) {
    out["lp_minentropy"] = {{"min_entropy", r.lp_minentropy->min_entropy},
                            {"bound", r.lp_minentropy->bound},
                            {"holds", r.lp_minentropy->holds}};
  }
  if (r.kkl) {
    json k{{"max_influence", r.kkl->max_influence}, {"log_term", r.kkl->log_term},
           {"sentinel", r.kkl->sentinel}};
    if (!r.kkl->sentinel) k["ratio"] = r.kkl->ratio;
    out["kkl_ratio"] = k;
  }
  return out;
}

ScanRecord record_from_json(const json& j) {
  ScanRecord r;
  r.index = j.at("id").get<std::uint64_t>();
  r.table_hex = j.at("table").get<std::string>();
  r.constant = j.at("constant").get<bool>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("fei_ratio")) {
    const json& e = j.at("fei_ratio");
    r.fei = RatioEntry{e.at("entropy"), e.at("influence"), e.at("ratio")};
  }
  if (j.contains("fmei_ratio")) {
    const json& e = j.at("fmei_ratio");
    r.fmei = RatioEntry{e.at("min_entropy"), e.at("influence"), e.at("ratio")};
  }
  if (j.contains("minentropy_vs_cmin_parity")) {
    const json& e = j.at("minentropy_vs_cmin_parity");
    r.minentropy_vs_cmin_parity =
        ScanRecord::Fmei{e.at("min_entropy"), e.at("c_min_parity"), e.at("holds")};
  }
  auto auc_from = [](const json& e) {
    return ScanRecord::Auc{e.at("entropy"), e.at("auc"), e.at("auc_exact"), e.at("holds")};
  };
  if (j.contains("entropy_vs_aUC")) r.entropy_vs_auc = auc_from(j.at("entropy_vs_aUC"));
  if (j.contains("entropy_vs_aUC_parity")) {
    r.entropy_vs_auc_parity = auc_from(j.at("entropy_vs_aUC_parity"));
  }
  if (j.contains("granularity")) r.granularity = j.at("granularity").at("ok").get<bool>();
  if (j.contains("renyi_chain")) {
    const json& e = j.at("renyi_chain");
    r.renyi_chain = ScanRecord::Renyi{e.at("h_inf"), e.at("h"), e.at("h_half"),
                                      e.at("h0"), e.at("ok")};
  }
  if (j.contains("lp_minentropy")) {
    const json& e = j.at("lp_minentropy");
    r.lp_minentropy = ScanRecord::LpMin{e.at("min_entropy"), e.at("bound"), e.at("holds")};
  }
  if (j.contains("kkl_ratio")) {
    const json& e = j.at("kkl_ratio");
    bool sentinel = e.at("sentinel").get<bool>();
    r.kkl = ScanRecord::Kkl{e.at("max_influence"), e.at("log_term"),
                            sentinel ? 0.0 : e.at("ratio").get<double>(), sentinel};
  }
  return r;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

const char* kCsvHeader =
    "id,n,table,constant,error,"
    "fei_entropy,fei_influence,fei_ratio,"
    "fmei_min_entropy,fmei_influence,fmei_ratio,"
    "mvc_min_entropy,mvc_c_min_parity,mvc_holds,"
    "auc_entropy,auc_value,auc_exact,auc_holds,"
    "aucp_entropy,aucp_value,aucp_exact,aucp_holds,"
    "granularity_ok,"
    "renyi_h_inf,renyi_h,renyi_h_half,renyi_h0,renyi_ok,"
    "lp_min_entropy,lp_bound,lp_holds,"
    "kkl_max_influence,kkl_log_term,kkl_ratio,kkl_sentinel";

std::string record_to_csv(const ScanRecord& r, int n) {
  std::ostringstream os;
  os << r.index << ',' << n << ',' << r.table_hex << ',' << (r.constant ? 1 : 0) << ','
     << r.error;
  auto ratio3 = [&](const std::optional<RatioEntry>& e) {
    if (e) {
      os << ',' << format_double(e->lhs) << ',' << format_double(e->rhs) << ','
         << format_double(e->ratio);
    } else {
      os << ",,,";
    }
  };
  ratio3(r.fei);
  ratio3(r.fmei);
  if (r.minentropy_vs_cmin_parity) {
    os << ',' << format_double(r.minentropy_vs_cmin_parity->min_entropy) << ','
       << r.minentropy_vs_cmin_parity->c_min_parity << ','
       << (r.minentropy_vs_cmin_parity->holds ? 1 : 0);
  } else {
    os << ",,,";
  }
  auto auc4 = [&](const std::optional<ScanRecord::Auc>& e) {
    if (e) {
      os << ',' << format_double(e->entropy) << ',' << format_double(e->auc) << ','
         << e->auc_exact << ',' << (e->holds ? 1 : 0);
    } else {
      os << ",,,,";
    }
  };
  auc4(r.entropy_vs_auc);
  auc4(r.entropy_vs_auc_parity);
  os << ',' << (r.granularity ? (*r.granularity ? "1" : "0") : "");
  if (r.renyi_chain) {
    os << ',' << format_double(r.renyi_chain->h_inf) << ',' << format_double(r.renyi_chain->h)
       << ',' << format_double(r.renyi_chain->h_half) << ','
       << format_double(r.renyi_chain->h0) << ',' << (r.renyi_chain->ok ? 1 : 0);
  } else {
    os << ",,,,,";
  }
  if (r.lp_minentropy) {
    os << ',' << format_double(r.lp_minentropy->min_entropy) << ','
       << format_double(r.lp_minentropy->bound) << ',' << (r.lp_minentropy->holds ? 1 : 0);
  } else {
    os << ",,,";
  }
  if (r.kkl) {
    os << ',' << format_double(r.kkl->max_influence) << ',' << format_double(r.kkl->log_term)
       << ',' << (r.kkl->sentinel ? "" : format_double(r.kkl->ratio)) << ','
       << (r.kkl->sentinel ? 1 : 0);
  } else {
    os << ",,,,";
  }
  return os.str();
}

}  // namespace

std::string render_report(const ScanReport& report) {
  if (report.config.format == ScanConfig::Format::Csv) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& rec : report.records) {
      os << record_to_csv(rec, report.config.n) << '\n';
    }
    return os.str();
  }
  json out;
  out["schema_version"] = 1;
  out["config"] = config_to_json(report.config);
  json records = json::array();
  for (const auto& rec : report.records) records.push_back(record_to_json(rec));
  out["records"] = records;
  auto extremal_json = [](const ScanReport::Extremal& e) {
    json j{{"present", e.present}};
    if (e.present) {
      j["id"] = e.index;
      j["table"] = e.table_hex;
      j["ratio"] = e.ratio;
    }
    return j;
  };
  out["max_fei"] = extremal_json(report.max_fei);
  out["max_fmei"] = extremal_json(report.max_fmei);
  return out.dump(1) + "\n";
}

ScanReport parse_report_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema_version").get<int>() != 1) throw ConfigError("unknown schema version");
  ScanReport report;
  report.config = config_from_json(j.at("config"));
  for (const auto& rec : j.at("records")) {
    report.records.push_back(record_from_json(rec));
  }
  auto extremal_from = [](const json& e) {
    ScanReport::Extremal x;
    x.present = e.at("present").get<bool>();
    if (x.present) {
      x.index = e.at("id").get<std::uint64_t>();
      x.table_hex = e.at("table").get<std::string>();
      x.ratio = e.at("ratio").get<double>();
    }
    return x;
  };
  report.max_fei = extremal_from(j.at("max_fei"));
  report.max_fmei = extremal_from(j.at("max_fmei"));
  return report;
}

}  // namespace fet
