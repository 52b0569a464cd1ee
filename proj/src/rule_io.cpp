#include "rule_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace cub5::rule_io {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_json_string(const constructor::CubatureRule& rule) {
  nlohmann::ordered_json j;
  j["dimension"] = rule.dimension;
  j["degree"] = rule.degree;
  j["region"] = rule.region;
  j["gamma"] = rule.gamma;
  j["mass"] = rule.mass;
  j["points_in_region"] = rule.points_in_region;
  j["has_negative_weights"] = rule.has_negative_weights;
  j["attains_moller_bound"] = rule.attains_moller_bound;
  j["nodes"] = rule.nodes;
  j["weights"] = rule.weights;
  return j.dump(2) + "\n";
}

constructor::CubatureRule from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("rule file is not valid JSON: ") + e.what());
  }
  constructor::CubatureRule rule;
  try {
    rule.dimension = j.at("dimension").get<int>();
    rule.degree = j.at("degree").get<int>();
    rule.region = j.at("region").get<std::string>();
    rule.gamma = j.at("gamma").get<double>();
    rule.mass = j.at("mass").get<double>();
    rule.points_in_region = j.at("points_in_region").get<bool>();
    rule.has_negative_weights = j.at("has_negative_weights").get<bool>();
    rule.attains_moller_bound = j.at("attains_moller_bound").get<bool>();
    rule.nodes = j.at("nodes").get<std::vector<std::vector<double>>>();
    rule.weights = j.at("weights").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("rule file is missing or mistypes a field: ") + e.what());
  }
  if (rule.dimension < 1) fail(errc::parse, "rule file has a nonpositive dimension");
  if (rule.nodes.size() != rule.weights.size())
    fail(errc::parse, "rule file node and weight counts differ");
  for (const auto& node : rule.nodes)
    if (static_cast<int>(node.size()) != rule.dimension)
      fail(errc::parse, "rule file contains a node of the wrong dimension");
  return rule;
}

std::string to_csv_string(const constructor::CubatureRule& rule) {
  std::ostringstream out;
  for (int i = 1; i <= rule.dimension; ++i) out << 'x' << i << ',';
  out << "weight\n";
  for (std::size_t r = 0; r < rule.nodes.size(); ++r) {
    for (double x : rule.nodes[r]) out << fmt17(x) << ',';
    out << fmt17(rule.weights[r]) << '\n';
  }
  return out.str();
}

void save(const constructor::CubatureRule& rule, const std::string& path,
          const std::string& format) {
  std::string payload;
  if (format == "json")
    payload = to_json_string(rule);
  else if (format == "csv")
    payload = to_csv_string(rule);
  else
    fail(errc::invalid_argument, "unknown output format '" + format + "'");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io, "cannot open '" + path + "' for writing");
  out << payload;
  if (!out) fail(errc::io, "failed to write '" + path + "'");
}

constructor::CubatureRule load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_string(buffer.str());
}

}  // namespace cub5::rule_io
