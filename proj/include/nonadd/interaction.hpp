#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "nonadd/set_function.hpp"

namespace nonadd {

/// Interaction index I(A) of a nonempty coalition. Throws EmptyCoalition for A = empty.
///
/// I(A) = sum over B in N\A of (n-|B|-|A|)! |B|! / (n-|A|+1)! * sum over K in A of (-1)^|A\K| mu(K u B).
/// The factorial weights are exact integers divided once.
double interaction_index(const Capacity& mu, Subset a);

/// Shapley values phi_i = I({i}); they sum to mu(N).
std::vector<double> shapley(const Capacity& mu);

enum class InteractionKind { Positive, Negative, NonInteractive };

std::string_view to_string(InteractionKind kind);

/// positive above tol, negative below -tol, non-interactive otherwise.
InteractionKind classify(double value, double tol = kDefaultTolerance);

struct InteractionReport {
  int n = 0;
  std::vector<double> shapley;
  std::vector<std::vector<double>> pairs;  // pairs[i][j] = I({i+1, j+1}); diagonal holds Shapley values
  std::vector<std::vector<InteractionKind>> pair_kinds;
  std::vector<std::pair<Subset, double>> indices;  // every coalition up to max_order, ascending mask
  int max_order = 0;
};

/// Builds the full report. max_order <= 0 means every coalition size (cost grows as 4^n).
InteractionReport interaction_report(const Capacity& mu, int max_order = 0, double tol = kDefaultTolerance);

}  // namespace nonadd
