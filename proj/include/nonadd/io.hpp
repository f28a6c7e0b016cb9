#pragma once

// JSON schemas shared by the CLI and the Python bindings.
//
// Set function / capacity:
//   {"n": 2, "values": {"": 0, "1": 0.3, "2": 0.6, "1,2": 1}}   keyed form, all 2^n keys
//   {"n": 2, "values_by_mask": [0, 0.3, 0.6, 1]}               dense form, canonical on output
// Model:
//   {"capacity": {...}, "integral": "sipos", "capacity2": {...},
//    "scales": [{"criterion": 1, "levels": {"neutral": 0, "good": 1, ...}}, ...]}
// Acts:
//   [["good", "neutral"], {"name": "y", "levels": ["neutral", 0.5]}, ...]

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nonadd/axioms.hpp"
#include "nonadd/interaction.hpp"
#include "nonadd/model.hpp"
#include "nonadd/set_function.hpp"

namespace nonadd::io {

using Json = nlohmann::json;

inline constexpr int kSignificantDigits = 12;

/// Rounds to 12 significant digits (what "%.12g" prints).
double round_significant(double x);
/// "%.12g".
std::string format_number(double x);

struct RawSetFunction {
  int n = 0;
  std::vector<double> values;  // indexed by mask; the empty-set entry is not checked here
};

/// Parses either form; throws InvalidArgument on schema violations.
RawSetFunction parse_set_function(const Json& j);
SetFunction to_set_function(const RawSetFunction& raw);
Capacity parse_capacity(const Json& j, const ValidationOptions& options = {});

/// Canonical dense form with values rounded to 12 significant digits.
Json set_function_json(int n, std::span<const double> values);
Json to_json(const Capacity& mu);

Json to_json(const InteractionReport& report);
Json to_json(const AxiomReport& report);
Json to_json(const EquivalenceReport& report);
Json to_json(const PseudoProductReport& report);
Json to_json(const ComparisonTable& table);
Json to_json(std::span<const RankedAct> ranking);

AggregationModel parse_model(const Json& j);
std::vector<Act> parse_acts(const Json& j);

/// Comma-separated reals, e.g. "0.5,-0.2".
std::vector<double> parse_scores_csv(std::string_view text);
/// A JSON array of arrays, or one comma-separated vector per non-empty line.
std::vector<std::vector<double>> parse_score_rows(const std::string& text);

std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace nonadd::io
