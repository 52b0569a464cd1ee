#pragma once

#include <string>

#include "constructor.hpp"

namespace cub5::rule_io {

/// Rule JSON, exact field set:
/// {"dimension", "degree", "region", "gamma", "mass", "points_in_region",
///  "has_negative_weights", "attains_moller_bound", "nodes", "weights"}.
/// Byte-stable across runs for identical rules.
std::string to_json_string(const constructor::CubatureRule& rule);
constructor::CubatureRule from_json_string(const std::string& text);

/// CSV export: header "x1,...,xn,weight", one row per node, weight last,
/// 17 significant digits.
std::string to_csv_string(const constructor::CubatureRule& rule);

void save(const constructor::CubatureRule& rule, const std::string& path,
          const std::string& format);  // "json" or "csv"
constructor::CubatureRule load_json(const std::string& path);

}  // namespace cub5::rule_io
