#include "nonadd/cli.hpp"

#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "nonadd/axioms.hpp"
#include "nonadd/integrals.hpp"
#include "nonadd/interaction.hpp"
#include "nonadd/io.hpp"
#include "nonadd/model.hpp"

namespace nonadd::cli {

namespace {

using io::Json;
using io::format_number;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string transform_kind;
  std::string input;
  std::string capacity;
  std::string capacity2;
  std::string integral;
  std::string scores;
  std::string scores_file;
  std::string coalition;
  std::string axioms;
  std::string domain;
  std::string pseudo_product;
  std::string model;
  std::string acts;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  int max_order = 0;
  bool allow_out_of_domain = false;
  bool equivalence = false;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string vector_text(std::span<const double> v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += format_number(v[k]);
  }
  return out + ")";
}

std::string subset_label(Subset s) { return "{" + s.key() + "}"; }

Integral integral_option(const std::string& name) {
  try {
    return parse_integral(name);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> scores_option(const std::string& text) {
  try {
    return io::parse_scores_csv(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--scores: ") + e.what());
  }
}

Capacity load_capacity(const std::string& path) { return io::parse_capacity(io::read_json_file(path)); }

void print_lattice(std::ostream& out, int n, std::span<const double> values) {
  for (std::uint32_t a = 0; a < lattice_size(n); ++a) {
    out << std::left << std::setw(std::max(4, 2 * n + 2)) << subset_label(Subset{a}) << ' ' << format_number(values[a])
        << '\n';
  }
}

int run_transform(const Options& o, std::ostream& out) {
  const std::string& path = o.input.empty() ? o.capacity : o.input;
  if (path.empty()) throw UsageError("transform needs --input FILE");
  const auto raw = io::parse_set_function(io::read_json_file(path));
  std::vector<double> result;
  int n = raw.n;
  if (o.transform_kind == "mobius") {
    const auto m = mobius(io::to_set_function(raw));
    result.assign(m.values().begin(), m.values().end());
  } else if (o.transform_kind == "zeta") {
    const auto v = zeta(MobiusRepr(raw.n, raw.values));
    result.assign(v.values().begin(), v.values().end());
  } else if (o.transform_kind == "comobius") {
    const auto c = co_mobius(io::to_set_function(raw));
    result.assign(c.values().begin(), c.values().end());
  } else if (o.transform_kind == "ordinal") {
    const auto mv = ordinal_mobius(make_capacity(raw.n, raw.values));
    result.assign(mv.values().begin(), mv.values().end());
  } else if (o.transform_kind == "conjugate") {
    const auto bar = conjugate(make_capacity(raw.n, raw.values));
    result.assign(bar.values().begin(), bar.values().end());
  } else {
    throw UsageError("unknown transform '" + o.transform_kind + "' (mobius, zeta, comobius, ordinal, conjugate)");
  }
  if (json_output(o)) {
    Json j = io::set_function_json(n, result);
    j["transform"] = o.transform_kind;
    out << j.dump(2) << '\n';
  } else {
    print_lattice(out, n, result);
  }
  return kExitOk;
}

int run_eval(const Options& o, std::ostream& out) {
  const Integral kind = integral_option(o.integral);
  const auto t = scores_option(o.scores);
  const Capacity mu = load_capacity(o.capacity);
  std::optional<Capacity> mu2;
  if (kind == Integral::Cpt) {
    if (o.capacity2.empty()) throw UsageError("--integral cpt needs --capacity2 FILE");
    mu2 = load_capacity(o.capacity2);
  }
  const auto f = bind_integral(kind, mu, mu2);
  const double value = f(t);
  if (json_output(o)) {
    Json j{{"integral", std::string(to_string(kind))}, {"value", io::round_significant(value)}};
    Json scores = Json::array();
    for (double x : t) scores.push_back(x);
    j["scores"] = scores;
    out << j.dump(2) << '\n';
  } else {
    out << format_number(value) << '\n';
  }
  return kExitOk;
}

int run_interaction(const Options& o, std::ostream& out) {
  const Capacity mu = load_capacity(o.capacity);
  if (o.tol < 0.0) throw UsageError("--tol must be nonnegative");
  if (!o.coalition.empty()) {
    Subset a;
    try {
      a = Subset::parse_key(o.coalition, mu.n());
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--coalition: ") + e.what());
    }
    const double value = interaction_index(mu, a);
    const auto kind = classify(value, o.tol);
    if (json_output(o)) {
      out << Json{{"coalition", a.key()}, {"value", io::round_significant(value)},
                  {"classification", std::string(to_string(kind))}}
                 .dump(2)
          << '\n';
    } else {
      out << format_number(value) << '\n';
    }
    return kExitOk;
  }
  const auto report = interaction_report(mu, o.max_order, o.tol);
  if (json_output(o)) {
    out << io::to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "Shapley values\n";
  for (int i = 0; i < report.n; ++i) {
    out << "  " << (i + 1) << "  " << format_number(report.shapley[static_cast<std::size_t>(i)]) << '\n';
  }
  out << "Pairwise interaction\n";
  for (int i = 0; i < report.n; ++i) {
    for (int j = i + 1; j < report.n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      out << "  " << subset_label(Subset::of({i + 1, j + 1})) << "  " << format_number(report.pairs[ui][uj]) << "  "
          << to_string(report.pair_kinds[ui][uj]) << '\n';
    }
  }
  out << "Interaction indices (|A| <= " << report.max_order << ")\n";
  for (const auto& [subset, value] : report.indices) {
    out << "  " << subset_label(subset) << "  " << format_number(value) << '\n';
  }
  return kExitOk;
}

void print_axiom_report(std::ostream& out, const AxiomReport& r) {
  out << std::left << std::setw(4) << to_string(r.axiom) << (r.passed ? "pass" : "FAIL")
      << "  samples=" << r.samples_tested << " skipped=" << r.skipped;
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    out << "  counterexample:";
    for (const auto& p : cx.points) out << ' ' << vector_text(p);
    out << " expected=" << format_number(cx.expected) << " got=" << format_number(cx.got);
  }
  out << '\n';
}

int run_pseudo_product(const Options& o, std::ostream& out) {
  PseudoProduct op = [&] {
    if (o.pseudo_product == "min") return PseudoProduct::minimum();
    if (o.pseudo_product == "product") return PseudoProduct::product();
    if (o.pseudo_product == "lukasiewicz") return PseudoProduct::lukasiewicz();
    throw UsageError("unknown pseudo-product '" + o.pseudo_product + "' (min, product, lukasiewicz)");
  }();
  AxiomCheckConfig config;
  config.seed = o.seed;
  config.sample_count = o.samples;
  config.tolerance = o.tol;
  const auto report = check_pseudo_product(op, config);
  if (json_output(o)) {
    out << io::to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "operator " << report.op << '\n';
  for (const auto& c : report.conditions) {
    out << "  " << std::left << std::setw(14) << c.name << (c.holds ? "holds" : "FAILS");
    if (!c.holds) {
      out << "  witness " << vector_text(c.witness) << " expected=" << format_number(c.expected)
          << " got=" << format_number(c.got);
    }
    out << '\n';
  }
  out << "min-equivalent on sampled grid: " << (report.min_equivalent ? "yes" : "no") << '\n';
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  if (!o.pseudo_product.empty()) return run_pseudo_product(o, out);
  if (o.capacity.empty()) throw UsageError("verify needs --capacity FILE");
  if (o.integral.empty()) throw UsageError("verify needs --integral NAME");
  const Integral kind = integral_option(o.integral);
  std::vector<Axiom> axioms;
  if (o.axioms == "all") {
    axioms = {Axiom::HE, Axiom::A, Axiom::M, Axiom::M1, Axiom::I, Axiom::A1, Axiom::A2, Axiom::C1, Axiom::S1};
  } else if (!o.equivalence || !o.axioms.empty()) {
    try {
      axioms = parse_axiom_list(o.axioms);
    } catch (const UnknownAxiom& e) {
      throw UsageError(e.what());
    }
  }
  Domain domain = Domain::Real;
  if (o.domain == "unit") {
    domain = Domain::UnitCube;
  } else if (!o.domain.empty() && o.domain != "real") {
    throw UsageError("--domain must be 'real' or 'unit'");
  }
  if (o.samples < 1) throw UsageError("--samples must be at least 1");

  const Capacity mu = load_capacity(o.capacity);
  std::optional<Capacity> mu2;
  if (kind == Integral::Cpt) {
    if (o.capacity2.empty()) throw UsageError("--integral cpt needs --capacity2 FILE");
    mu2 = load_capacity(o.capacity2);
  }
  const auto f = bind_integral(kind, mu, mu2, domain);
  AxiomCheckConfig config;
  config.seed = o.seed;
  config.sample_count = o.samples;
  config.tolerance = o.tol;
  config.allow_out_of_domain = o.allow_out_of_domain;

  std::vector<AxiomReport> reports;
  for (Axiom a : axioms) reports.push_back(check_axiom(a, f, mu, config));
  std::optional<EquivalenceReport> equivalence;
  if (o.equivalence) equivalence = check_axiom_equivalence(f, mu, config);

  if (json_output(o)) {
    Json j{{"integral", std::string(to_string(kind))},
           {"domain", std::string(to_string(domain))},
           {"seed", o.seed},
           {"samples", o.samples},
           {"tolerance", o.tol}};
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(io::to_json(r));
    j["reports"] = list;
    if (equivalence) j["equivalence"] = io::to_json(*equivalence);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "integral " << to_string(kind) << " on " << (domain == Domain::Real ? "R^n" : "[0,1]^n") << ", seed "
      << o.seed << ", " << o.samples << " random samples per axiom, tol " << format_number(o.tol) << '\n';
  for (const auto& r : reports) print_axiom_report(out, r);
  if (equivalence) {
    out << "equivalence {A1,A2,I} <=> {HE,A}: requirements " << (equivalence->requirements_pass ? "pass" : "fail")
        << ", simplified " << (equivalence->simplified_pass ? "pass" : "fail") << ", "
        << (equivalence->consistent() ? "consistent" : "INCONSISTENT") << '\n';
  }
  return kExitOk;
}

int run_compare(const Options& o, std::ostream& out) {
  const Capacity mu = load_capacity(o.capacity);
  std::vector<std::vector<double>> grid;
  try {
    grid = io::parse_score_rows(io::read_file(o.scores_file));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--scores-file: ") + e.what());
  }
  AxiomCheckConfig config;
  config.seed = o.seed;
  config.sample_count = o.samples;
  config.tolerance = o.tol;
  const auto table = compare_extensions(mu, grid, config);
  if (json_output(o)) {
    out << io::to_json(table).dump(2) << '\n';
    return kExitOk;
  }
  out << std::left << std::setw(28) << "point" << std::setw(16) << "choquet" << std::setw(16) << "sipos"
      << std::setw(16) << "mle" << std::setw(16) << "smle" << "sugeno-prod" << '\n';
  for (const auto& r : table.rows) {
    out << std::setw(28) << vector_text(r.point) << std::setw(16) << format_number(r.choquet) << std::setw(16)
        << format_number(r.sipos) << std::setw(16) << format_number(r.mle) << std::setw(16) << format_number(r.smle)
        << format_number(r.sugeno_product) << '\n';
  }
  out << "\nproperties   A1    A2    I     M\n";
  auto mark = [](bool ok) { return ok ? "yes   " : "no    "; };
  for (const auto& v : table.verdicts) {
    out << std::setw(13) << to_string(v.integral) << mark(v.intra_criterion) << mark(v.inter_criteria)
        << mark(v.absolute_levels) << mark(v.monotone) << '\n';
  }
  return kExitOk;
}

int run_rank(const Options& o, std::ostream& out) {
  const auto model = io::parse_model(io::read_json_file(o.model));
  const auto acts = io::parse_acts(io::read_json_file(o.acts));
  const auto ranking = rank_acts(model, acts);
  if (json_output(o)) {
    out << io::to_json(std::span<const RankedAct>(ranking)).dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    const auto& r = ranking[k];
    if (k > 0) out << (r.indifferent_to_previous ? "  ~  " : "  >  ");
    out << r.name;
  }
  out << '\n';
  for (const auto& r : ranking) out << "  " << std::left << std::setw(12) << r.name << format_number(r.score) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacities, non-additive integrals, interaction indices and axiom checks", "nonadd"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* transform = app.add_subcommand("transform", "Transform a set function (mobius|zeta|comobius|ordinal|conjugate)");
  transform->add_option("kind", o.transform_kind, "mobius, zeta, comobius, ordinal or conjugate")->required();
  transform->add_option("--input,--capacity", o.input, "Set function JSON file")->required();
  add_format(transform);

  auto* eval = app.add_subcommand("eval", "Evaluate an integral on a score vector");
  eval->add_option("--integral", o.integral, "choquet, sipos, mle, smle, sugeno-prod or cpt")->required();
  eval->add_option("--capacity", o.capacity, "Capacity JSON file")->required();
  eval->add_option("--capacity2", o.capacity2, "Capacity for negative scores (cpt)");
  eval->add_option("--scores", o.scores, "Comma-separated scores in criterion order")->required();
  add_format(eval);

  auto* interaction = app.add_subcommand("interaction", "Shapley values and interaction indices");
  interaction->add_option("--capacity", o.capacity, "Capacity JSON file")->required();
  interaction->add_option("--coalition", o.coalition, "Coalition such as 1,3");
  interaction->add_option("--tol", o.tol, "Classification tolerance");
  interaction->add_option("--max-order", o.max_order, "Largest coalition size listed (0 = all)");
  add_format(interaction);

  auto* verify = app.add_subcommand("verify", "Sampled axiom verification");
  verify->add_option("--capacity", o.capacity, "Capacity JSON file");
  verify->add_option("--capacity2", o.capacity2, "Capacity for negative scores (cpt)");
  verify->add_option("--integral", o.integral, "Integral to check");
  verify->add_option("--axioms", o.axioms, "Comma-separated list of HE,A,M,M1,I,A1,A2,C1,S1 or 'all'");
  verify->add_option("--seed", o.seed, "RNG seed");
  verify->add_option("--samples", o.samples, "Random samples per axiom");
  verify->add_option("--tol", o.tol, "Tolerance");
  verify->add_option("--domain", o.domain, "Declared domain of the integral: real or unit");
  verify->add_flag("--allow-out-of-domain", o.allow_out_of_domain, "Sample outside the declared domain");
  verify->add_flag("--equivalence", o.equivalence, "Also check {A1,A2,I} against {HE,A}");
  verify->add_option("--pseudo-product", o.pseudo_product, "Check a pseudo-product instead: min, product, lukasiewicz");
  add_format(verify);

  auto* compare = app.add_subcommand("compare", "Tabulate all extensions on a grid of score vectors");
  compare->add_option("--capacity", o.capacity, "Capacity JSON file")->required();
  compare->add_option("--scores-file", o.scores_file, "JSON array of score vectors or CSV lines")->required();
  compare->add_option("--seed", o.seed, "RNG seed for property verdicts");
  compare->add_option("--samples", o.samples, "Random samples per property verdict");
  compare->add_option("--tol", o.tol, "Tolerance");
  add_format(compare);

  auto* rank = app.add_subcommand("rank", "Rank acts under an aggregation model");
  rank->add_option("--model", o.model, "Model JSON file")->required();
  rank->add_option("--acts", o.acts, "Acts JSON file")->required();
  add_format(rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (transform->parsed()) return run_transform(o, out);
    if (eval->parsed()) return run_eval(o, out);
    if (interaction->parsed()) return run_interaction(o, out);
    if (verify->parsed()) {
      if (o.pseudo_product.empty() && o.axioms.empty() && !o.equivalence) {
        throw UsageError("verify needs --axioms LIST, --equivalence or --pseudo-product OP");
      }
      return run_verify(o, out);
    }
    if (compare->parsed()) return run_compare(o, out);
    if (rank->parsed()) return run_rank(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const CapacityError& e) {
    err << "invalid capacity: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << "usage error: no subcommand\n";
  return kExitUsageError;
}

}  // namespace nonadd::cli
