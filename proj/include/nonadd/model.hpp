#pragma once

// Aggregation model over acts: per-criterion utility scales on a common
// ratio scale (neutral = 0, good = 1), a capacity built from the
// attractiveness of binary acts, and one extension chosen to aggregate.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nonadd/integrals.hpp"
#include "nonadd/set_function.hpp"

namespace nonadd {

inline constexpr double kIndifferenceThreshold = 1e-9;

/// Utilities of the named levels of one criterion. Must map "neutral" to 0 and "good" to 1.
class UtilityScale {
 public:
  UtilityScale(int criterion, std::map<std::string, double, std::less<>> levels);

  int criterion() const { return criterion_; }
  const std::map<std::string, double, std::less<>>& levels() const { return levels_; }

  /// Throws UnknownLevel.
  double utility(std::string_view level) const;

 private:
  int criterion_;
  std::map<std::string, double, std::less<>> levels_;
};

/// One level name or a direct utility per criterion.
using ActEntry = std::variant<std::string, double>;

struct Act {
  std::string name;
  std::vector<ActEntry> entries;
};

class AggregationModel {
 public:
  /// mu must have strictly positive singletons; cpt needs mu2.
  AggregationModel(Capacity mu, std::vector<UtilityScale> scales, Integral integral,
                   std::optional<Capacity> mu2 = std::nullopt);

  int n() const { return mu_.n(); }
  const Capacity& capacity() const { return mu_; }
  const std::optional<Capacity>& negative_capacity() const { return mu2_; }
  const std::vector<UtilityScale>& scales() const { return scales_; }
  Integral integral() const { return integral_; }

  /// Utility vector of an act; throws UnknownLevel or DimensionMismatch.
  std::vector<double> utilities(const Act& act) const;
  double aggregate(Scores utilities) const { return f_(utilities); }

 private:
  Capacity mu_;
  std::optional<Capacity> mu2_;
  std::vector<UtilityScale> scales_;
  Integral integral_;
  AggregationFunction f_;
};

/// mu(A) from the attractiveness of (good on A, neutral elsewhere). Every subset must be present.
/// Throws CapacityError (NotNormalized, NotMonotone, NonPositiveSingleton).
Capacity capacity_from_binary_acts(int n, const std::map<Subset, double>& attractiveness,
                                   double tolerance = kDefaultTolerance);

double evaluate_act(const AggregationModel& model, const Act& act);

struct RankedAct {
  std::size_t index = 0;  // position in the input list
  std::string name;
  double score = 0.0;
  bool indifferent_to_previous = false;
};

/// Descending by score; ties keep input order and are flagged as indifference.
std::vector<RankedAct> rank_acts(const AggregationModel& model, std::span<const Act> acts);

}  // namespace nonadd
