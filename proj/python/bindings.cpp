#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonadd/axioms.hpp"
#include "nonadd/integrals.hpp"
#include "nonadd/interaction.hpp"
#include "nonadd/io.hpp"
#include "nonadd/model.hpp"

namespace py = pybind11;
using namespace nonadd;

namespace {

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

// Values are passed as a dense list indexed by subset mask (bit i-1 for criterion i).
int criteria_from_length(std::size_t size) {
  int n = 0;
  while (lattice_size(n) < size && n < kMaxCriteria) ++n;
  if (lattice_size(n) != size || n == 0) throw InvalidArgument("value list length must be 2^n with n >= 1");
  return n;
}

Capacity capacity_from(const std::vector<double>& values, bool positive_singletons = false) {
  return make_capacity(criteria_from_length(values.size()), values, ValidationOptions{kDefaultTolerance, positive_singletons});
}

py::object json_to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<Capacity> optional_capacity(const std::optional<std::vector<double>>& values) {
  if (!values) return std::nullopt;
  return capacity_from(*values);
}

Domain parse_domain(const std::string& name) {
  if (name == "real") return Domain::Real;
  if (name == "unit") return Domain::UnitCube;
  throw InvalidArgument("domain must be 'real' or 'unit'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Capacities, Mobius transforms, non-additive integrals, interaction indices and axiom checks.";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("mobius", [](const std::vector<double>& v) {
    return to_vector(mobius(SetFunction(criteria_from_length(v.size()), v)).values());
  }, py::arg("values"));
  m.def("zeta", [](const std::vector<double>& coefficients) {
    return to_vector(zeta(MobiusRepr(criteria_from_length(coefficients.size()), coefficients)).values());
  }, py::arg("mobius"));
  m.def("co_mobius", [](const std::vector<double>& v) {
    return to_vector(co_mobius(SetFunction(criteria_from_length(v.size()), v)).values());
  }, py::arg("values"));
  m.def("ordinal_mobius", [](const std::vector<double>& v) {
    return to_vector(ordinal_mobius(capacity_from(v)).values());
  }, py::arg("capacity"));
  m.def("conjugate", [](const std::vector<double>& v) {
    return to_vector(conjugate(SetFunction(criteria_from_length(v.size()), v)).values());
  }, py::arg("values"));

  m.def("validate", [](const std::vector<double>& v, bool require_positive_singletons) {
    const auto r = validate(criteria_from_length(v.size()), v, ValidationOptions{kDefaultTolerance, require_positive_singletons});
    py::dict out;
    out["ok"] = r.ok();
    out["strictly_monotone"] = r.strictly_monotone;
    out["additive"] = r.additive;
    if (r.diagnostic) {
      out["kind"] = std::string(to_string(r.diagnostic->kind));
      out["subset"] = r.diagnostic->subset.key();
      out["criterion"] = r.diagnostic->criterion;
      out["message"] = r.diagnostic->message;
    }
    return out;
  }, py::arg("values"), py::arg("require_positive_singletons") = false);

  m.def("evaluate", [](const std::string& integral, const std::vector<double>& capacity, const std::vector<double>& scores,
                       const std::optional<std::vector<double>>& capacity2) {
    const auto f = bind_integral(parse_integral(integral), capacity_from(capacity), optional_capacity(capacity2));
    return f(scores);
  }, py::arg("integral"), py::arg("capacity"), py::arg("scores"), py::arg("capacity2") = std::nullopt,
     "Evaluates choquet, sipos, mle, smle, sugeno-prod or cpt on one score vector.");

  m.def("symmetric_max", &symmetric_max, py::arg("a"), py::arg("b"));

  m.def("interaction_index", [](const std::vector<double>& capacity, const std::vector<int>& coalition) {
    return interaction_index(capacity_from(capacity), Subset::of(std::span<const int>(coalition)));
  }, py::arg("capacity"), py::arg("coalition"));
  m.def("shapley", [](const std::vector<double>& capacity) { return shapley(capacity_from(capacity)); },
        py::arg("capacity"));
  m.def("interaction_report", [](const std::vector<double>& capacity, int max_order, double tol) {
    return json_to_py(io::to_json(interaction_report(capacity_from(capacity), max_order, tol)));
  }, py::arg("capacity"), py::arg("max_order") = 0, py::arg("tol") = kDefaultTolerance);

  m.def("check_axioms", [](const std::string& integral, const std::vector<double>& capacity,
                           const std::vector<std::string>& axioms, std::uint64_t seed, std::size_t samples, double tol,
                           const std::string& domain, const std::optional<std::vector<double>>& capacity2) {
    const auto mu = capacity_from(capacity);
    const auto f = bind_integral(parse_integral(integral), mu, optional_capacity(capacity2), parse_domain(domain));
    AxiomCheckConfig config;
    config.seed = seed;
    config.sample_count = samples;
    config.tolerance = tol;
    py::list out;
    for (const auto& name : axioms) out.append(json_to_py(io::to_json(check_axiom(parse_axiom(name), f, mu, config))));
    return out;
  }, py::arg("integral"), py::arg("capacity"), py::arg("axioms"), py::arg("seed") = 42, py::arg("samples") = 1000,
     py::arg("tol") = kDefaultTolerance, py::arg("domain") = "real", py::arg("capacity2") = std::nullopt);

  m.def("check_pseudo_product", [](const std::string& name, std::uint64_t seed) {
    PseudoProduct op = name == "min"       ? PseudoProduct::minimum()
                       : name == "product" ? PseudoProduct::product()
                       : name == "lukasiewicz" ? PseudoProduct::lukasiewicz()
                                               : throw InvalidArgument("unknown pseudo-product '" + name + "'");
    AxiomCheckConfig config;
    config.seed = seed;
    return json_to_py(io::to_json(check_pseudo_product(op, config)));
  }, py::arg("name"), py::arg("seed") = 42);

  m.def("compare", [](const std::vector<double>& capacity, const std::vector<std::vector<double>>& grid) {
    return json_to_py(io::to_json(compare_extensions(capacity_from(capacity), grid)));
  }, py::arg("capacity"), py::arg("grid"));

  m.def("rank", [](const std::string& model_json, const std::string& acts_json) {
    const auto model = io::parse_model(io::Json::parse(model_json));
    const auto acts = io::parse_acts(io::Json::parse(acts_json));
    const auto ranking = rank_acts(model, acts);
    return json_to_py(io::to_json(std::span<const RankedAct>(ranking)));
  }, py::arg("model_json"), py::arg("acts_json"), "Ranks acts given the model and acts documents as JSON text.");
}
