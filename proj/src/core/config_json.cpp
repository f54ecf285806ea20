#include "core/config_json.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace slnr {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "n_tx",   "users",          "rx_antennas", "layers",      "noise_var",
    "scheme", "receiver",       "feedback_iters", "drops",    "seed",
    "output_path", "emit_cdf",  "emit_plot_script"};

int require_count(const json& doc, const char* key, int max_value = 1 << 20) {
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError(std::string("key \"") + key + "\" must be a nonnegative integer");
  const std::int64_t n = v.get<std::int64_t>();
  if (n > max_value)
    throw ParseError(std::string("key \"") + key + "\" is implausibly large");
  return static_cast<int>(n);
}

std::vector<int> require_count_list(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_array())
    throw ParseError(std::string("key \"") + key + "\" must be an array of counts");
  std::vector<int> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
      throw ParseError(std::string("key \"") + key + "\" must contain nonnegative integers");
    out.push_back(static_cast<int>(e.get<std::int64_t>()));
  }
  return out;
}

}  // namespace

RunSpec parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!doc.is_object()) throw ParseError("config document must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!kKnownKeys.contains(key)) throw ParseError("unknown key \"" + key + "\"");
  }
  for (const char* key : {"n_tx", "users", "rx_antennas", "layers", "noise_var",
                          "scheme", "seed"}) {
    if (!doc.contains(key))
      throw ParseError(std::string("missing required key \"") + key + "\"");
  }

  RunSpec spec;
  SystemConfig& cfg = spec.config;
  try {
    cfg.n_tx = require_count(doc, "n_tx");
    cfg.users = require_count(doc, "users");
    cfg.rx_antennas = require_count_list(doc, "rx_antennas");
    cfg.layers = require_count_list(doc, "layers");

    if (!doc.at("noise_var").is_number())
      throw ParseError("key \"noise_var\" must be a number");
    cfg.noise_var = doc.at("noise_var").get<double>();

    if (!doc.at("scheme").is_string())
      throw ParseError("key \"scheme\" must be a string");
    cfg.scheme = scheme_from_string(doc.at("scheme").get<std::string>());

    if (!doc.at("seed").is_number_integer())
      throw ParseError("key \"seed\" must be an integer");
    if (doc.at("seed").is_number_unsigned())
      cfg.seed = doc.at("seed").get<std::uint64_t>();
    else {
      const std::int64_t s = doc.at("seed").get<std::int64_t>();
      if (s < 0) throw ParseError("key \"seed\" must be nonnegative");
      cfg.seed = static_cast<std::uint64_t>(s);
    }

    if (doc.contains("receiver")) {
      if (!doc.at("receiver").is_string())
        throw ParseError("key \"receiver\" must be a string");
      cfg.receiver = receiver_from_string(doc.at("receiver").get<std::string>());
    }
    if (doc.contains("feedback_iters"))
      cfg.feedback_iters = require_count(doc, "feedback_iters");
    if (doc.contains("drops")) {
      if (!doc.at("drops").is_number_integer() || doc.at("drops").get<std::int64_t>() < 0)
        throw ParseError("key \"drops\" must be a nonnegative integer");
      cfg.drops = doc.at("drops").get<std::uint64_t>();
    }
    if (doc.contains("output_path")) {
      if (!doc.at("output_path").is_string())
        throw ParseError("key \"output_path\" must be a string");
      spec.output.output_path = doc.at("output_path").get<std::string>();
    }
    if (doc.contains("emit_cdf")) {
      if (!doc.at("emit_cdf").is_boolean())
        throw ParseError("key \"emit_cdf\" must be a boolean");
      spec.output.emit_cdf = doc.at("emit_cdf").get<bool>();
    }
    if (doc.contains("emit_plot_script")) {
      if (!doc.at("emit_plot_script").is_boolean())
        throw ParseError("key \"emit_plot_script\" must be a boolean");
      spec.output.emit_plot_script = doc.at("emit_plot_script").get<bool>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed config value: ") + e.what());
  }

  spec.warnings = validate(cfg);
  return spec;
}

RunSpec parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string config_to_json(const RunSpec& spec) {
  json doc;
  doc["n_tx"] = spec.config.n_tx;
  doc["users"] = spec.config.users;
  doc["rx_antennas"] = spec.config.rx_antennas;
  doc["layers"] = spec.config.layers;
  doc["noise_var"] = spec.config.noise_var;
  doc["scheme"] = to_string(spec.config.scheme);
  doc["receiver"] = to_string(spec.config.receiver);
  doc["feedback_iters"] = spec.config.feedback_iters;
  doc["drops"] = spec.config.drops;
  doc["seed"] = spec.config.seed;
  doc["output_path"] = spec.output.output_path;
  doc["emit_cdf"] = spec.output.emit_cdf;
  doc["emit_plot_script"] = spec.output.emit_plot_script;
  return doc.dump(2);
}

}  // namespace slnr
