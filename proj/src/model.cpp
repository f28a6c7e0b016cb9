#include "nonadd/model.hpp"

#include <algorithm>
#include <cmath>

namespace nonadd {

UtilityScale::UtilityScale(int criterion, std::map<std::string, double, std::less<>> levels)
    : criterion_(criterion), levels_(std::move(levels)) {
  if (criterion < 1) throw InvalidArgument("criterion ids are 1-based");
  auto require = [&](const char* name, double value) {
    auto it = levels_.find(name);
    if (it == levels_.end()) {
      throw InvalidArgument("scale of criterion " + std::to_string(criterion) + " lacks the '" + name + "' level");
    }
    if (it->second != value) {
      throw InvalidArgument("scale of criterion " + std::to_string(criterion) + ": u(" + name + ") must be " +
                            std::to_string(static_cast<int>(value)));
    }
  };
  require("neutral", 0.0);
  require("good", 1.0);
  for (const auto& [name, u] : levels_) {
    if (!std::isfinite(u)) throw InvalidArgument("utility of level '" + name + "' is not finite");
  }
}

double UtilityScale::utility(std::string_view level) const {
  auto it = levels_.find(level);
  if (it == levels_.end()) throw UnknownLevel(criterion_, std::string(level));
  return it->second;
}

AggregationModel::AggregationModel(Capacity mu, std::vector<UtilityScale> scales, Integral integral,
                                   std::optional<Capacity> mu2)
    : mu_(std::move(mu)), mu2_(std::move(mu2)), scales_(std::move(scales)), integral_(integral) {
  if (!mu_.strictly_positive_singletons()) {
    for (int i = 1; i <= mu_.n(); ++i) {
      if (!(mu_[Subset::singleton(i)] > 0.0)) {
        throw CapacityError(CapacityDiagnostic{CapacityDiagnostic::Kind::NonPositiveSingleton, Subset::singleton(i), i,
                                               "NonPositiveSingleton: mu({" + std::to_string(i) +
                                                   "}) must be > 0 for the utility scales to be compatible"});
      }
    }
  }
  if (scales_.size() != static_cast<std::size_t>(mu_.n())) {
    throw DimensionMismatch(static_cast<std::size_t>(mu_.n()), scales_.size());
  }
  std::sort(scales_.begin(), scales_.end(),
            [](const UtilityScale& a, const UtilityScale& b) { return a.criterion() < b.criterion(); });
  for (std::size_t k = 0; k < scales_.size(); ++k) {
    if (scales_[k].criterion() != static_cast<int>(k) + 1) {
      throw InvalidArgument("scales must cover criteria 1.." + std::to_string(mu_.n()) + " exactly once");
    }
  }
  f_ = bind_integral(integral_, mu_, mu2_);
}

std::vector<double> AggregationModel::utilities(const Act& act) const {
  if (act.entries.size() != scales_.size()) throw DimensionMismatch(scales_.size(), act.entries.size());
  std::vector<double> u(scales_.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto& entry = act.entries[k];
    if (const auto* level = std::get_if<std::string>(&entry)) {
      u[k] = scales_[k].utility(*level);
    } else {
      u[k] = std::get<double>(entry);
    }
  }
  return u;
}

Capacity capacity_from_binary_acts(int n, const std::map<Subset, double>& attractiveness, double tolerance) {
  check_criteria_count(n);
  std::vector<double> values(lattice_size(n));
  std::vector<bool> seen(values.size(), false);
  for (const auto& [subset, value] : attractiveness) {
    if (!subset.is_subset_of(Subset::full(n))) {
      throw InvalidArgument("subset {" + subset.key() + "} is not a subset of N");
    }
    values[subset.mask()] = value;
    seen[subset.mask()] = true;
  }
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    if (!seen[a]) throw InvalidArgument("attractiveness missing for subset {" + Subset{a}.key() + "}");
  }
  return make_capacity(n, std::move(values), ValidationOptions{tolerance, true});
}

double evaluate_act(const AggregationModel& model, const Act& act) {
  return model.aggregate(model.utilities(act));
}

std::vector<RankedAct> rank_acts(const AggregationModel& model, std::span<const Act> acts) {
  if (acts.empty()) throw InvalidArgument("cannot rank an empty list of acts");
  std::vector<RankedAct> ranked;
  ranked.reserve(acts.size());
  for (std::size_t k = 0; k < acts.size(); ++k) {
    ranked.push_back({k, acts[k].name, evaluate_act(model, acts[k]), false});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedAct& a, const RankedAct& b) { return a.score > b.score; });
  // Runs of scores within the threshold are indifferent; restore input order inside each run.
  std::size_t run = 0;
  for (std::size_t k = 1; k <= ranked.size(); ++k) {
    if (k < ranked.size() && ranked[k - 1].score - ranked[k].score <= kIndifferenceThreshold) continue;
    std::sort(ranked.begin() + static_cast<std::ptrdiff_t>(run), ranked.begin() + static_cast<std::ptrdiff_t>(k),
              [](const RankedAct& a, const RankedAct& b) { return a.index < b.index; });
    for (std::size_t j = run + 1; j < k; ++j) ranked[j].indifferent_to_previous = true;
    run = k;
  }
  return ranked;
}

}  // namespace nonadd
