#pragma once

// Sampled verification of the requirement systems an aggregation function
// must satisfy to be compatible with ratio-scale intra- and inter-criteria
// information. Every check is deterministic given the configuration seed and
// reports the first counterexample it meets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonadd/integrals.hpp"
#include "nonadd/set_function.hpp"

namespace nonadd {

enum class Axiom {
  HE,  // homogeneous extension: F(a 1_A, 0) = a mu(A)
  A,   // restricted affinity: F(a_i, 0) = a_i F(1_i, 0)
  M,   // monotonicity
  M1,  // restricted monotonicity on single-criterion acts
  I,   // idempotence: F(a,...,a) = a for a >= 0
  A1,  // intra-criterion difference ratios
  A2,  // inter-criteria difference ratios
  C1,  // invariance to a common positive affine map
  S1,  // homogeneity for every real factor
};

std::string_view to_string(Axiom axiom);
/// Case-insensitive; throws UnknownAxiom.
Axiom parse_axiom(std::string_view name);
/// Parses a comma-separated list such as "HE,A,M".
std::vector<Axiom> parse_axiom_list(std::string_view list);

struct AxiomCheckConfig {
  std::size_t sample_count = 1000;
  std::uint64_t seed = 42;
  double tolerance = kDefaultTolerance;
  double score_bound = 10.0;  // real-domain scores are drawn from [-bound, bound]
  double alpha_min = 1e-3;
  double alpha_max = 1e3;
  std::optional<Domain> sample_domain;  // defaults to the function's own domain
  bool allow_out_of_domain = false;
};

/// Inputs of one probe together with the scalars needed to recompute it.
struct Counterexample {
  std::vector<std::vector<double>> points;
  std::vector<double> params;
  double expected = 0.0;
  double got = 0.0;
};

struct AxiomReport {
  Axiom axiom = Axiom::HE;
  std::string function;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::size_t samples_tested = 0;
  std::size_t skipped = 0;  // ratio probes whose denominator fell below tolerance
};

AxiomReport check_axiom(Axiom axiom, const AggregationFunction& f, const Capacity& mu,
                        const AxiomCheckConfig& config = {});

struct ProbeOutcome {
  double expected = 0.0;
  double got = 0.0;
  bool skipped = false;
  bool violated = false;
};

/// Re-evaluates a reported counterexample against the same function and capacity.
ProbeOutcome replay(Axiom axiom, const AggregationFunction& f, const Capacity& mu, const Counterexample& cx,
                    double tolerance = kDefaultTolerance);

/// {A1, A2, I} against {HE, A} on the same sample set; M is not part of either side.
struct EquivalenceReport {
  std::vector<AxiomReport> requirements;  // A1, A2, I
  std::vector<AxiomReport> simplified;    // HE, A
  bool requirements_pass = false;
  bool simplified_pass = false;
  bool consistent() const { return requirements_pass == simplified_pass; }
};

EquivalenceReport check_axiom_equivalence(const AggregationFunction& f, const Capacity& mu,
                                          const AxiomCheckConfig& config = {});

struct ConditionCheck {
  std::string name;
  bool holds = true;
  std::vector<double> witness;  // worst-case arguments
  double expected = 0.0;
  double got = 0.0;
  std::size_t samples = 0;
};

struct PseudoProductReport {
  std::string op;
  std::vector<ConditionCheck> conditions;
  bool all_hold = false;
  bool min_equivalent = false;
  double max_deviation_from_min = 0.0;

  const ConditionCheck* find(std::string_view name) const;
};

/// Commutativity, associativity, nondecreasingness, 0.0=0, 1.1=1, a.0=0, a.a=a and 1.a=a.
PseudoProductReport check_pseudo_product(const PseudoProduct& op, const AxiomCheckConfig& config = {});

struct ComparisonRow {
  std::vector<double> point;
  double choquet = 0.0;
  double sipos = 0.0;
  double mle = 0.0;
  double smle = 0.0;
  double sugeno_product = 0.0;
};

struct OperatorVerdict {
  Integral integral;
  bool intra_criterion = false;   // A1
  bool inter_criteria = false;    // A2
  bool absolute_levels = false;   // I
  bool monotone = false;          // M
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::vector<OperatorVerdict> verdicts;
};

/// Evaluates every single-capacity extension on each grid point and sampled property verdicts over R^n.
ComparisonTable compare_extensions(const Capacity& mu, const std::vector<std::vector<double>>& grid,
                                   const AxiomCheckConfig& config = {});

}  // namespace nonadd
