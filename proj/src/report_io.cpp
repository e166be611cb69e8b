#include "wzcheck/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wzcheck {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json outcome_json(const VerificationOutcome& o) {
  ordered_json j;
  j["claim"] = o.claim;
  j["p"] = o.p;
  j["holds"] = o.holds;
  j["lhs"] = o.lhs;
  j["rhs"] = o.rhs;
  j["modulus"] = o.modulus;
  if (o.diff_valuation.is_infinite())
    j["diff_valuation"] = "inf";
  else
    j["diff_valuation"] = o.diff_valuation.finite();
  j["path"] = o.path;
  return j;
}

std::string dv_str(const Valuation& v) { return v.str(); }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown output format: " + name);
}

std::string to_json(const Report& report, bool include_timing) {
  ordered_json j;
  ordered_json cfg;
  cfg["claims"] = report.config.claim_ids.empty()
                      ? ordered_json("all")
                      : ordered_json(report.config.claim_ids);
  cfg["p_min"] = report.config.p_min;
  cfg["p_max"] = report.config.p_max;
  cfg["oracle_max"] = report.config.oracle_max;
  cfg["identity_n_max"] = report.config.identity_n_max;
  cfg["telescope_grid"] = report.config.telescope_grid;
  j["config"] = cfg;

  ordered_json outs = ordered_json::array();
  for (const VerificationOutcome& o : report.outcomes) outs.push_back(outcome_json(o));
  j["outcomes"] = outs;

  ordered_json per;
  for (const auto& [id, s] : report.per_claim)
    per[id] = ordered_json{{"pass", s.pass}, {"fail", s.fail}, {"error", s.error}};
  j["summary"] = ordered_json{{"per_claim", per},
                              {"pass", report.pass},
                              {"fail", report.fail},
                              {"error", report.error}};

  if (include_timing) {
    ordered_json per_ms;
    for (const auto& [id, s] : report.per_claim) per_ms[id] = s.ms;
    j["timing"] = ordered_json{{"worker_count", report.config.worker_count},
                               {"wall_ms", report.wall_ms},
                               {"per_claim_ms", per_ms}};
  }
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& value) {
  bool needs_quote = value.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quote) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "claim,p,holds,lhs,rhs,modulus,diff_valuation,path\r\n";
  for (const VerificationOutcome& o : report.outcomes) {
    out << csv_field(o.claim) << ',' << o.p << ',' << (o.holds ? "true" : "false") << ','
        << csv_field(o.lhs) << ',' << csv_field(o.rhs) << ',' << csv_field(o.modulus) << ','
        << dv_str(o.diff_valuation) << ',' << csv_field(o.path) << "\r\n";
  }
  return out.str();
}

std::string to_text(const Report& report) {
  size_t w_claim = 5, w_p = 1, w_lhs = 3, w_rhs = 3, w_mod = 7, w_dv = 2, w_path = 4;
  for (const VerificationOutcome& o : report.outcomes) {
    w_claim = std::max(w_claim, o.claim.size());
    w_p = std::max(w_p, std::to_string(o.p).size());
    w_lhs = std::max(w_lhs, o.lhs.size());
    w_rhs = std::max(w_rhs, o.rhs.size());
    w_mod = std::max(w_mod, o.modulus.size());
    w_dv = std::max(w_dv, dv_str(o.diff_valuation).size());
    w_path = std::max(w_path, o.path.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w_claim)) << "claim" << "  "
      << std::right << std::setw(static_cast<int>(w_p)) << "p" << "  "
      << std::left << std::setw(5) << "holds" << "  "
      << std::right << std::setw(static_cast<int>(w_lhs)) << "lhs" << "  "
      << std::setw(static_cast<int>(w_rhs)) << "rhs" << "  "
      << std::left << std::setw(static_cast<int>(w_mod)) << "modulus" << "  "
      << std::right << std::setw(static_cast<int>(w_dv)) << "dv" << "  "
      << std::left << "path" << "\n";
  for (const VerificationOutcome& o : report.outcomes) {
    out << std::left << std::setw(static_cast<int>(w_claim)) << o.claim << "  "
        << std::right << std::setw(static_cast<int>(w_p)) << o.p << "  "
        << std::left << std::setw(5) << (o.holds ? "true" : "FALSE") << "  "
        << std::right << std::setw(static_cast<int>(w_lhs)) << o.lhs << "  "
        << std::setw(static_cast<int>(w_rhs)) << o.rhs << "  "
        << std::left << std::setw(static_cast<int>(w_mod)) << o.modulus << "  "
        << std::right << std::setw(static_cast<int>(w_dv)) << dv_str(o.diff_valuation) << "  "
        << std::left << o.path << "\n";
  }
  out << "\nsummary\n";
  size_t w_id = 5;
  for (const auto& [id, s] : report.per_claim) w_id = std::max(w_id, id.size());
  for (const auto& [id, s] : report.per_claim) {
    out << "  " << std::left << std::setw(static_cast<int>(w_id)) << id << "  pass=" << s.pass
        << " fail=" << s.fail << " error=" << s.error << "  (" << std::fixed
        << std::setprecision(1) << s.ms << " ms)\n";
  }
  out << "total: pass=" << report.pass << " fail=" << report.fail
      << " error=" << report.error << "  wall=" << std::fixed << std::setprecision(1)
      << report.wall_ms << " ms\n";
  return out.str();
}

}  // namespace wzcheck
