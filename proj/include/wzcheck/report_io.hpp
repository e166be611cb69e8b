#pragma once

#include <string>

#include "wzcheck/engine.hpp"

namespace wzcheck {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& name);  // ConfigError on anything else

// include_timing=false drops the timing block (and nothing else), which makes
// reports from runs with different worker counts byte-comparable.
std::string to_json(const Report& report, bool include_timing = true);

// One row per outcome, header first, RFC 4180 quoting.
std::string to_csv(const Report& report);

// Aligned outcome table followed by a per-claim summary block.
std::string to_text(const Report& report);

std::string csv_field(const std::string& value);

}  // namespace wzcheck
