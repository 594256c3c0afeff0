#include "fockbench/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fockbench {

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string render_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "h,value,predicted,rel_error\n";
  for (const ConvergenceRow& r : rows) {
    os << fmt_g(r.h) << ',' << fmt_g(r.value) << ',' << fmt_g(r.predicted)
       << ',' << fmt_g(r.rel_error) << '\n';
  }
  return os.str();
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ResourceError("cannot open for writing: " + tmp.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      throw ResourceError("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string scenario_summary_json(const ScenarioReport& rep) {
  nlohmann::json j;
  j["scenario"] = rep.scenario;
  j["seed"] = rep.seed;
  j["pass"] = rep.pass();
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : rep.parameters) params[key] = value;
  j["parameters"] = params;
  nlohmann::json verdicts = nlohmann::json::array();
  for (const ScenarioVerdict& v : rep.verdicts) {
    verdicts.push_back({{"name", v.name},
                        {"value", v.value},
                        {"threshold", v.threshold},
                        {"pass", v.pass}});
  }
  j["verdicts"] = verdicts;
  nlohmann::json tables = nlohmann::json::array();
  for (const ScenarioTable& t : rep.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ConvergenceRow& r : t.rows) {
      rows.push_back({{"h", r.h},
                      {"value", r.value},
                      {"predicted", r.predicted},
                      {"abs_error", r.abs_error},
                      {"rel_error", r.rel_error}});
    }
    tables.push_back({{"name", t.name},
                      {"fitted_order", t.fitted_order},
                      {"per_h", rows},
                      {"csv", t.name + ".csv"}});
  }
  j["tables"] = tables;
  return j.dump(2) + "\n";
}

std::string render_verdict_log(const ScenarioReport& rep) {
  std::ostringstream os;
  for (const ScenarioVerdict& v : rep.verdicts) {
    os << (v.pass ? "PASS " : "FAIL ") << rep.scenario << '.' << v.name
       << " value=" << fmt_g(v.value) << " threshold=" << fmt_g(v.threshold)
       << '\n';
  }
  os << "SCENARIO " << rep.scenario << (rep.pass() ? " PASS" : " FAIL")
     << '\n';
  return os.str();
}

void write_scenario_outputs(const ScenarioReport& rep,
                            const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw ResourceError("cannot create output directory: " +
                        out_dir.string());
  }
  write_text_atomic(out_dir / "summary.json", scenario_summary_json(rep));
  write_text_atomic(out_dir / "verdicts.log", render_verdict_log(rep));
  for (const ScenarioTable& t : rep.tables) {
    write_text_atomic(out_dir / (t.name + ".csv"), render_csv(t.rows));
  }
}

}  // namespace fockbench
