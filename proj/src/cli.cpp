#include "fockbench/cli.hpp"

#include <set>

#include <json.hpp>

namespace fockbench {

namespace {

using nlohmann::json;

json parse_with_diagnostic(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop =
        std::min(text.size(), e.byte > 0 ? e.byte - 1 : std::size_t(0));
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError("malformed JSON config at line " + std::to_string(line) +
                      ", column " + std::to_string(column) + ": " + e.what());
  }
}

// Typed field access over a flat JSON object that tracks which keys were
// consumed, so leftovers can be rejected by name.
class ConfigFields {
 public:
  explicit ConfigFields(const json& j) : m_j(j) {
    if (!j.is_object()) {
      throw ConfigError("config must be a JSON object");
    }
  }

  double number(const char* key, double fallback) {
    if (!take(key)) return fallback;
    const json& v = m_j.at(key);
    if (!v.is_number()) {
      throw ConfigError(std::string("config key '") + key +
                        "' must be a number");
    }
    return v.get<double>();
  }

  unsigned uint_field(const char* key, unsigned fallback) {
    if (!take(key)) return fallback;
    const json& v = m_j.at(key);
    if (!v.is_number_unsigned()) {
      throw ConfigError(std::string("config key '") + key +
                        "' must be a nonnegative integer");
    }
    return v.get<unsigned>();
  }

  unsigned long long uint64_field(const char* key, unsigned long long fallback) {
    if (!take(key)) return fallback;
    const json& v = m_j.at(key);
    if (!v.is_number_unsigned()) {
      throw ConfigError(std::string("config key '") + key +
                        "' must be a nonnegative integer");
    }
    return v.get<unsigned long long>();
  }

  std::vector<double> number_list(const char* key,
                                  std::vector<double> fallback) {
    if (!take(key)) return fallback;
    const json& v = m_j.at(key);
    if (!v.is_array() || v.empty()) {
      throw ConfigError(std::string("config key '") + key +
                        "' must be a nonempty array of numbers");
    }
    std::vector<double> out;
    for (const json& x : v) {
      if (!x.is_number()) {
        throw ConfigError(std::string("config key '") + key +
                          "' must contain numbers only");
      }
      out.push_back(x.get<double>());
    }
    return out;
  }

  void finish() const {
    for (const auto& item : m_j.items()) {
      if (!m_seen.count(item.key())) {
        throw ConfigError("unknown config key '" + item.key() + "'");
      }
    }
  }

 private:
  bool take(const char* key) {
    if (!m_j.contains(key)) return false;
    m_seen.insert(key);
    return true;
  }

  const json& m_j;
  std::set<std::string> m_seen;
};

json coherent_defaults() {
  const CoherentScenarioConfig cfg;
  return json{{"modes", cfg.modes},
              {"eps_schedule", cfg.eps_schedule},
              {"p_max", cfg.p_max},
              {"alpha_max", cfg.alpha_max},
              {"seed", cfg.seed}};
}

json fermi_defaults() {
  const FermiScenarioConfig cfg;
  return json{{"beta", cfg.beta},
              {"decay", cfg.decay},
              {"support_bound", cfg.support_bound},
              {"h_schedule", cfg.h_schedule}};
}

json bec_defaults() {
  const BecScenarioConfig cfg;
  return json{{"beta", cfg.beta},
              {"nu_c", cfg.nu_c},
              {"s_eval", cfg.s_eval},
              {"support_bound", cfg.support_bound},
              {"h_schedule", cfg.h_schedule},
              {"taylor_orders", cfg.taylor_orders}};
}

json singular_defaults() {
  const SingularScenarioConfig cfg;
  return json{{"support_bound", cfg.support_bound},
              {"h_schedule", cfg.h_schedule},
              {"c_values", cfg.c_values},
              {"max_points", cfg.max_points}};
}

json multiscale_defaults() {
  const MultiscaleScenarioConfig cfg;
  return json{{"coarse_schedule", cfg.coarse_schedule},
              {"fine_schedule", cfg.fine_schedule},
              {"x0", cfg.x0},
              {"xi0", cfg.xi0},
              {"tol", cfg.tol}};
}

json defaults_for(const std::string& name) {
  if (name == "coherent") return coherent_defaults();
  if (name == "fermi_gibbs") return fermi_defaults();
  if (name == "bec") return bec_defaults();
  if (name == "singular_trace") return singular_defaults();
  if (name == "multiscale") return multiscale_defaults();
  throw ConfigError("unknown scenario '" + name +
                    "'; run `fockbench list` for the registry");
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"coherent", "fermi_gibbs", "bec", "singular_trace", "multiscale"};
}

std::string scenario_default_config(const std::string& name) {
  return defaults_for(name).dump(2) + "\n";
}

std::string scenario_listing_json() {
  json out = json::array();
  for (const std::string& name : scenario_names()) {
    out.push_back({{"name", name}, {"defaults", defaults_for(name)}});
  }
  return json{{"scenarios", out}}.dump(2) + "\n";
}

ScenarioReport run_scenario(const std::string& name,
                            const std::string& config_text,
                            std::optional<unsigned long long> seed_override) {
  defaults_for(name);  // validates the name up front
  const json j = config_text.empty() ? json::object()
                                     : parse_with_diagnostic(config_text);
  ConfigFields f(j);

  if (name == "coherent") {
    CoherentScenarioConfig cfg;
    cfg.modes = f.uint_field("modes", cfg.modes);
    cfg.eps_schedule = f.number_list("eps_schedule", cfg.eps_schedule);
    cfg.p_max = f.uint_field("p_max", cfg.p_max);
    cfg.alpha_max = f.uint_field("alpha_max", cfg.alpha_max);
    cfg.seed = f.uint64_field("seed", cfg.seed);
    f.finish();
    if (seed_override) cfg.seed = *seed_override;
    return scenario_coherent(cfg);
  }
  if (name == "fermi_gibbs") {
    FermiScenarioConfig cfg;
    cfg.beta = f.number("beta", cfg.beta);
    cfg.decay = f.number("decay", cfg.decay);
    cfg.support_bound = f.number("support_bound", cfg.support_bound);
    cfg.h_schedule = f.number_list("h_schedule", cfg.h_schedule);
    f.finish();
    return scenario_fermi_gibbs(cfg);
  }
  if (name == "bec") {
    BecScenarioConfig cfg;
    cfg.beta = f.number("beta", cfg.beta);
    cfg.nu_c = f.number("nu_c", cfg.nu_c);
    cfg.s_eval = f.number("s_eval", cfg.s_eval);
    cfg.support_bound = f.number("support_bound", cfg.support_bound);
    cfg.h_schedule = f.number_list("h_schedule", cfg.h_schedule);
    cfg.taylor_orders = f.uint_field("taylor_orders", cfg.taylor_orders);
    f.finish();
    return scenario_bec(cfg);
  }
  if (name == "singular_trace") {
    SingularScenarioConfig cfg;
    cfg.support_bound = f.number("support_bound", cfg.support_bound);
    cfg.h_schedule = f.number_list("h_schedule", cfg.h_schedule);
    cfg.c_values = f.number_list("c_values", cfg.c_values);
    cfg.max_points = f.uint_field("max_points", cfg.max_points);
    f.finish();
    return scenario_singular_trace(cfg);
  }
  MultiscaleScenarioConfig cfg;
  cfg.coarse_schedule = f.number_list("coarse_schedule", cfg.coarse_schedule);
  cfg.fine_schedule = f.number_list("fine_schedule", cfg.fine_schedule);
  cfg.x0 = f.number("x0", cfg.x0);
  cfg.xi0 = f.number("xi0", cfg.xi0);
  cfg.tol = f.number("tol", cfg.tol);
  f.finish();
  return scenario_multiscale(cfg);
}

}  // namespace fockbench
