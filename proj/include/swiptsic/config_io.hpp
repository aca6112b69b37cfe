#pragma once
// JSON parameter loading. Keys mirror the NetworkParams field names;
// quantities naturally quoted in decibels carry a _db suffix and are
// converted on entry, so everything downstream stays linear.

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "swiptsic/errors.hpp"
#include "swiptsic/params.hpp"

namespace swiptsic {

inline NetworkParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw config_error("parameter config must be a JSON object");
  NetworkParams p;
  bool seen_pt = false, seen_pt_db = false, seen_theta = false, seen_theta_db = false;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number())
      throw config_error("config key '" + key + "' must be a number");
    const double x = value.get<double>();
    if (key == "lambda") p.lambda = x;
    else if (key == "p_t") { p.p_t = x; seen_pt = true; }
    else if (key == "p_t_db") { p.p_t = from_decibels(x); seen_pt_db = true; }
    else if (key == "d0") p.d0 = x;
    else if (key == "alpha") p.alpha = x;
    else if (key == "theta") { p.theta = x; seen_theta = true; }
    else if (key == "theta_db") { p.theta = from_decibels(x); seen_theta_db = true; }
    else if (key == "sigma2") p.sigma2 = x;
    else if (key == "sigma2_c") p.sigma2_c = x;
    else if (key == "v") p.v = x;
    else if (key == "zeta") p.zeta = x;
    else throw config_error("unknown config key '" + key + "'");
  }
  if (seen_pt && seen_pt_db) throw config_error("config sets both p_t and p_t_db");
  if (seen_theta && seen_theta_db) throw config_error("config sets both theta and theta_db");
  p.validate();
  return p;
}

inline NetworkParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return params_from_json(j);
}

}  // namespace swiptsic
