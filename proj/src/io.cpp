#include "nonadd/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nonadd::io {

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  const auto text = format_number(x);
  return std::strtod(text.c_str(), nullptr);
}

std::string format_number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", kSignificantDigits, x);
  std::string out(buffer);
  if (out == "-0") out = "0";
  return out;
}

namespace {

double number_at(const Json& value, const std::string& where) {
  if (!value.is_number()) throw InvalidArgument(where + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw InvalidArgument(where + " must be finite");
  return x;
}

Json rounded(std::span<const double> values) {
  Json out = Json::array();
  for (double x : values) out.push_back(round_significant(x));
  return out;
}

Json rounded_point(const std::vector<double>& values) { return rounded(values); }

}  // namespace

RawSetFunction parse_set_function(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("set function JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InvalidArgument("set function JSON needs an integer 'n'");
  RawSetFunction raw;
  raw.n = j["n"].get<int>();
  check_criteria_count(raw.n);
  const std::size_t size = lattice_size(raw.n);

  if (j.contains("values_by_mask")) {
    const auto& dense = j["values_by_mask"];
    if (!dense.is_array() || dense.size() != size) {
      throw InvalidArgument("'values_by_mask' must be an array of 2^n = " + std::to_string(size) + " numbers");
    }
    raw.values.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
      raw.values.push_back(number_at(dense[k], "values_by_mask[" + std::to_string(k) + "]"));
    }
    return raw;
  }
  if (!j.contains("values") || !j["values"].is_object()) {
    throw InvalidArgument("set function JSON needs 'values' (object) or 'values_by_mask' (array)");
  }
  const auto& keyed = j["values"];
  raw.values.assign(size, 0.0);
  std::vector<bool> seen(size, false);
  for (const auto& [key, value] : keyed.items()) {
    const Subset s = Subset::parse_key(key, raw.n);
    if (seen[s.mask()]) throw InvalidArgument("duplicate subset key '" + key + "'");
    seen[s.mask()] = true;
    raw.values[s.mask()] = number_at(value, "values[\"" + key + "\"]");
  }
  for (std::uint32_t a = 0; a < size; ++a) {
    if (!seen[a]) throw InvalidArgument("missing value for subset key \"" + Subset{a}.key() + "\"");
  }
  return raw;
}

SetFunction to_set_function(const RawSetFunction& raw) { return SetFunction(raw.n, raw.values); }

Capacity parse_capacity(const Json& j, const ValidationOptions& options) {
  const auto raw = parse_set_function(j);
  auto result = validate(raw.n, raw.values, options);
  if (!result.ok()) throw CapacityError(*result.diagnostic);
  return std::move(*result.capacity);
}

Json set_function_json(int n, std::span<const double> values) {
  return Json{{"n", n}, {"values_by_mask", rounded(values)}};
}

Json to_json(const Capacity& mu) { return set_function_json(mu.n(), mu.values()); }

Json to_json(const InteractionReport& report) {
  Json indices = Json::object();
  for (const auto& [subset, value] : report.indices) indices[subset.key()] = round_significant(value);
  Json pairs = Json::array();
  for (const auto& row : report.pairs) pairs.push_back(rounded(row));
  Json kinds = Json::object();
  for (int i = 0; i < report.n; ++i) {
    for (int j = i + 1; j < report.n; ++j) {
      kinds[Subset::of({i + 1, j + 1}).key()] =
          std::string(to_string(report.pair_kinds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
  }
  return Json{{"n", report.n},
              {"shapley", rounded(report.shapley)},
              {"pairs", pairs},
              {"pair_classification", kinds},
              {"max_order", report.max_order},
              {"indices", indices}};
}

Json to_json(const AxiomReport& report) {
  Json out{{"axiom", std::string(to_string(report.axiom))},
           {"function", report.function},
           {"passed", report.passed},
           {"samples_tested", report.samples_tested},
           {"skipped", report.skipped}};
  if (report.counterexample) {
    const auto& cx = *report.counterexample;
    Json points = Json::array();
    for (const auto& p : cx.points) points.push_back(rounded_point(p));
    out["counterexample"] = Json{{"points", points},
                                 {"params", rounded(cx.params)},
                                 {"expected", round_significant(cx.expected)},
                                 {"got", round_significant(cx.got)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json to_json(const EquivalenceReport& report) {
  Json left = Json::array(), right = Json::array();
  for (const auto& r : report.requirements) left.push_back(to_json(r));
  for (const auto& r : report.simplified) right.push_back(to_json(r));
  return Json{{"requirements", left},
              {"requirements_pass", report.requirements_pass},
              {"simplified", right},
              {"simplified_pass", report.simplified_pass},
              {"consistent", report.consistent()}};
}

Json to_json(const PseudoProductReport& report) {
  Json conditions = Json::array();
  for (const auto& c : report.conditions) {
    conditions.push_back(Json{{"name", c.name},
                              {"holds", c.holds},
                              {"witness", rounded(c.witness)},
                              {"expected", round_significant(c.expected)},
                              {"got", round_significant(c.got)},
                              {"samples", c.samples}});
  }
  return Json{{"operator", report.op},
              {"conditions", conditions},
              {"all_hold", report.all_hold},
              {"min_equivalent", report.min_equivalent},
              {"max_deviation_from_min", round_significant(report.max_deviation_from_min)}};
}

Json to_json(const ComparisonTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"point", rounded_point(r.point)},
                        {"choquet", round_significant(r.choquet)},
                        {"sipos", round_significant(r.sipos)},
                        {"mle", round_significant(r.mle)},
                        {"smle", round_significant(r.smle)},
                        {"sugeno-prod", round_significant(r.sugeno_product)}});
  }
  Json verdicts = Json::object();
  for (const auto& v : table.verdicts) {
    verdicts[std::string(to_string(v.integral))] = Json{{"A1", v.intra_criterion},
                                                        {"A2", v.inter_criteria},
                                                        {"I", v.absolute_levels},
                                                        {"M", v.monotone}};
  }
  return Json{{"rows", rows}, {"verdicts", verdicts}};
}

Json to_json(std::span<const RankedAct> ranking) {
  Json out = Json::array();
  std::size_t rank = 0;
  for (const auto& r : ranking) {
    if (!r.indifferent_to_previous) ++rank;
    out.push_back(Json{{"rank", rank},
                       {"name", r.name},
                       {"index", r.index},
                       {"score", round_significant(r.score)},
                       {"indifferent_to_previous", r.indifferent_to_previous}});
  }
  return out;
}

AggregationModel parse_model(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("model JSON must be an object");
  if (!j.contains("capacity")) throw InvalidArgument("model JSON needs a 'capacity' block");
  Capacity mu = parse_capacity(j["capacity"], ValidationOptions{kDefaultTolerance, true});
  const Integral integral = parse_integral(j.value("integral", std::string("sipos")));
  std::optional<Capacity> mu2;
  if (j.contains("capacity2")) mu2 = parse_capacity(j["capacity2"]);

  if (!j.contains("scales") || !j["scales"].is_array()) throw InvalidArgument("model JSON needs a 'scales' array");
  std::vector<UtilityScale> scales;
  int position = 0;
  for (const auto& block : j["scales"]) {
    ++position;
    if (!block.is_object() || !block.contains("levels") || !block["levels"].is_object()) {
      throw InvalidArgument("scale " + std::to_string(position) + " needs a 'levels' object");
    }
    const int criterion = block.value("criterion", position);
    std::map<std::string, double, std::less<>> levels;
    for (const auto& [name, value] : block["levels"].items()) {
      levels[name] = number_at(value, "levels[\"" + name + "\"]");
    }
    scales.emplace_back(criterion, std::move(levels));
  }
  return AggregationModel(std::move(mu), std::move(scales), integral, std::move(mu2));
}

std::vector<Act> parse_acts(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("acts JSON must be an array");
  std::vector<Act> acts;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& item = j[k];
    Act act;
    act.name = "act" + std::to_string(k + 1);
    const Json* entries = &item;
    if (item.is_object()) {
      act.name = item.value("name", act.name);
      if (!item.contains("levels")) throw InvalidArgument("act " + std::to_string(k + 1) + " needs 'levels'");
      entries = &item["levels"];
    }
    if (!entries->is_array()) throw InvalidArgument("act " + std::to_string(k + 1) + " must list one entry per criterion");
    for (const auto& e : *entries) {
      if (e.is_string()) {
        act.entries.emplace_back(e.get<std::string>());
      } else {
        act.entries.emplace_back(number_at(e, "act " + std::to_string(k + 1) + " entry"));
      }
    }
    acts.push_back(std::move(act));
  }
  return acts;
}

std::vector<double> parse_scores_csv(std::string_view text) {
  std::vector<double> out;
  std::string token;
  auto flush = [&] {
    std::size_t begin = token.find_first_not_of(" \t\r");
    std::size_t end = token.find_last_not_of(" \t\r");
    if (begin == std::string::npos) throw InvalidArgument("empty score in '" + std::string(text) + "'");
    const std::string trimmed = token.substr(begin, end - begin + 1);
    char* stop = nullptr;
    const double x = std::strtod(trimmed.c_str(), &stop);
    if (stop != trimmed.c_str() + trimmed.size() || !std::isfinite(x)) {
      throw InvalidArgument("invalid score '" + trimmed + "'");
    }
    out.push_back(x);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::vector<std::vector<double>> parse_score_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    const Json j = Json::parse(text);
    if (!j.is_array()) throw InvalidArgument("scores file must hold an array of arrays");
    for (const auto& row : j) {
      if (!row.is_array()) throw InvalidArgument("scores file must hold an array of arrays");
      std::vector<double> r;
      for (const auto& x : row) r.push_back(number_at(x, "score"));
      rows.push_back(std::move(r));
    }
    return rows;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t\r")] == '#') continue;
    rows.push_back(parse_scores_csv(line));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace nonadd::io
