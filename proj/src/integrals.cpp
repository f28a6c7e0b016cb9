#include "nonadd/integrals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numeric>

namespace nonadd {

namespace {

void check_scores(int n, Scores t) {
  if (t.size() != static_cast<std::size_t>(n)) throw DimensionMismatch(static_cast<std::size_t>(n), t.size());
  for (double x : t) {
    if (!std::isfinite(x)) throw InvalidArgument("scores must be finite");
  }
}

std::vector<double> positive_part(Scores t) {
  std::vector<double> out(t.size());
  std::transform(t.begin(), t.end(), out.begin(), [](double x) { return x > 0.0 ? x : 0.0; });
  return out;
}

std::vector<double> negative_part(Scores t) {
  std::vector<double> out(t.size());
  std::transform(t.begin(), t.end(), out.begin(), [](double x) { return x < 0.0 ? -x : 0.0; });
  return out;
}

// Ascending order of t; equal scores keep criterion order.
std::vector<int> ascending_order(Scores t) {
  std::vector<int> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return t[a] < t[b]; });
  return order;
}

// table[A] = fold of `combine` over the scores in A, built by peeling the highest criterion.
// table[0] is left at 0 and never read: the empty set contributes m(empty) = 0.
template <class Combine>
std::vector<double> subset_table(Scores t, Combine combine) {
  const std::size_t size = lattice_size(static_cast<int>(t.size()));
  std::vector<double> table(size, 0.0);
  for (std::uint32_t a = 1; a < size; ++a) {
    const int top = std::bit_width(a) - 1;
    const std::uint32_t rest = a & ~(std::uint32_t{1} << top);
    table[a] = rest == 0 ? t[top] : combine(table[rest], t[top]);
  }
  return table;
}

std::vector<double> min_table(Scores t) {
  return subset_table(t, [](double acc, double x) { return std::min(acc, x); });
}

std::vector<double> product_table(Scores t) {
  return subset_table(t, [](double acc, double x) { return acc * x; });
}

double weighted_sum(std::span<const double> m, const std::vector<double>& table) {
  double sum = 0.0;
  for (std::size_t a = 1; a < table.size(); ++a) sum += m[a] * table[a];
  return sum;
}

double choquet_unchecked(const Capacity& mu, Scores t) {
  const auto order = ascending_order(t);
  const auto v = mu.values();
  std::uint32_t remaining = Subset::full(mu.n()).mask();
  double previous = t[order[0]];
  double result = previous * v[remaining];
  remaining &= ~(std::uint32_t{1} << order[0]);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const double current = t[order[k]];
    result += (current - previous) * v[remaining];
    previous = current;
    remaining &= ~(std::uint32_t{1} << order[k]);
  }
  return result;
}

// max over nonempty B of m(B) * min over B of x, for x >= 0.
double sugeno_nonnegative(const OrdinalMobiusRepr& mv, Scores x) {
  const auto mins = min_table(x);
  double best = 0.0;
  for (std::size_t b = 1; b < mins.size(); ++b) best = std::max(best, mv.values()[b] * mins[b]);
  return best;
}

}  // namespace

double choquet(const Capacity& mu, Scores t) {
  check_scores(mu.n(), t);
  return choquet_unchecked(mu, t);
}

double choquet_mobius(const MobiusRepr& m, Scores t) {
  check_scores(m.n(), t);
  return weighted_sum(m.values(), min_table(t));
}

double sipos(const Capacity& mu, Scores t) {
  check_scores(mu.n(), t);
  const auto plus = positive_part(t);
  const auto minus = negative_part(t);
  return choquet_unchecked(mu, plus) - choquet_unchecked(mu, minus);
}

double sipos_closed_form(const Capacity& mu, Scores t) {
  check_scores(mu.n(), t);
  const auto order = ascending_order(t);
  const auto v = mu.values();
  const std::size_t n = order.size();
  const std::size_t p = static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [](double x) { return x < 0.0; }));
  auto bit = [&](std::size_t k) { return std::uint32_t{1} << order[k]; };

  double result = 0.0;
  // Negative block: sorted positions 0..p-1, sets {(1)..(i)} growing from the most negative score.
  std::uint32_t prefix = 0;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    prefix |= bit(i);
    result += (t[order[i]] - t[order[i + 1]]) * v[prefix];
  }
  if (p > 0) {
    prefix |= bit(p - 1);
    result += t[order[p - 1]] * v[prefix];
  }
  // Positive block: sorted positions p..n-1, sets {(i)..(n)} shrinking from the bottom.
  if (p < n) {
    std::uint32_t suffix = 0;
    for (std::size_t k = p; k < n; ++k) suffix |= bit(k);
    result += t[order[p]] * v[suffix];
    suffix &= ~bit(p);
    for (std::size_t i = p + 1; i < n; ++i) {
      result += (t[order[i]] - t[order[i - 1]]) * v[suffix];
      suffix &= ~bit(i);
    }
  }
  return result;
}

double sipos_mobius(const MobiusRepr& m, Scores t) {
  check_scores(m.n(), t);
  const auto plus = positive_part(t);
  const auto minus = negative_part(t);
  return weighted_sum(m.values(), min_table(plus)) - weighted_sum(m.values(), min_table(minus));
}

double mle(const MobiusRepr& m, Scores t) {
  check_scores(m.n(), t);
  return weighted_sum(m.values(), product_table(t));
}

double smle(const MobiusRepr& m, Scores t) {
  check_scores(m.n(), t);
  const auto plus = positive_part(t);
  const auto minus = negative_part(t);
  return weighted_sum(m.values(), product_table(plus)) - weighted_sum(m.values(), product_table(minus));
}

double symmetric_max(double a, double b) {
  if (std::abs(a) > std::abs(b)) return a;
  if (b == -a) return 0.0;
  return b;
}

double symmetric_max_fold(std::span<const double> values) {
  double top = 0.0;
  double bottom = 0.0;
  for (double x : values) {
    if (x > 0.0) top = std::max(top, x);
    if (x < 0.0) bottom = std::min(bottom, x);
  }
  return symmetric_max(top, bottom);
}

double sugeno_product(const OrdinalMobiusRepr& mv, Scores t) {
  check_scores(mv.n(), t);
  const double up = sugeno_nonnegative(mv, positive_part(t));
  const double down = sugeno_nonnegative(mv, negative_part(t));
  return symmetric_max(up, -down);
}

double cpt(const MobiusRepr& m1, const MobiusRepr& m2, Scores t) {
  check_scores(m1.n(), t);
  if (m2.n() != m1.n()) throw DimensionMismatch(static_cast<std::size_t>(m1.n()), static_cast<std::size_t>(m2.n()));
  const auto plus = positive_part(t);
  const auto minus = negative_part(t);
  return weighted_sum(m1.values(), min_table(plus)) - weighted_sum(m2.values(), min_table(minus));
}

CptCompatibility cpt_compatible(const Capacity& mu1, const Capacity& mu2, double tol) {
  if (mu1.n() != mu2.n()) throw DimensionMismatch(static_cast<std::size_t>(mu1.n()), static_cast<std::size_t>(mu2.n()));
  // Singleton Mobius coefficients equal the singleton capacities.
  CptCompatibility report;
  for (int i = 1; i <= mu1.n(); ++i) {
    const Subset s = Subset::singleton(i);
    if (std::abs(mu1[s] - mu2[s]) > tol) report.violating.push_back(i);
  }
  report.compatible = report.violating.empty();
  return report;
}

PseudoProduct::PseudoProduct(std::string name, Op op, double tol) : name_(std::move(name)), op_(std::move(op)) {
  if (!op_) throw InvalidArgument("pseudo-product operation is empty");
  std::vector<double> grid(kGridPoints);
  for (std::size_t k = 0; k < kGridPoints; ++k) grid[k] = static_cast<double>(k) / static_cast<double>(kGridPoints - 1);

  certificate_.grid_points = kGridPoints;
  certificate_.tolerance = tol;
  for (double a : grid) {
    for (double b : grid) {
      const double ab = op_(a, b);
      if (!std::isfinite(ab) || ab < -tol || ab > 1.0 + tol) certificate_.maps_unit_square = false;
      if (std::abs(ab - op_(b, a)) > tol) certificate_.commutative = false;
      for (double c : grid) {
        if (std::abs(op_(ab, c) - op_(a, op_(b, c))) > tol) certificate_.associative = false;
      }
    }
  }
}

PseudoProduct PseudoProduct::minimum() {
  return PseudoProduct("min", [](double a, double b) { return std::min(a, b); });
}

PseudoProduct PseudoProduct::product() {
  return PseudoProduct("product", [](double a, double b) { return a * b; });
}

PseudoProduct PseudoProduct::lukasiewicz() {
  return PseudoProduct("lukasiewicz", [](double a, double b) { return std::max(0.0, a + b - 1.0); });
}

double pseudo_product_extension(const MobiusRepr& m, const PseudoProduct& op, Scores t) {
  check_scores(m.n(), t);
  if (!op.certificate().certified()) {
    throw UncertifiedOperator("operator '" + op.name() + "' is not commutative and associative on the sample grid");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0.0 || t[i] > 1.0) {
      throw OutOfDomain("pseudo-product extension needs scores in [0,1]; criterion " + std::to_string(i + 1) +
                        " has " + std::to_string(t[i]));
    }
  }
  return weighted_sum(m.values(), subset_table(t, [&](double acc, double x) { return op(acc, x); }));
}

std::string_view to_string(Integral kind) {
  switch (kind) {
    case Integral::Choquet: return "choquet";
    case Integral::Sipos: return "sipos";
    case Integral::Mle: return "mle";
    case Integral::Smle: return "smle";
    case Integral::SugenoProduct: return "sugeno-prod";
    case Integral::Cpt: return "cpt";
  }
  return "unknown";
}

Integral parse_integral(std::string_view name) {
  if (name == "choquet") return Integral::Choquet;
  if (name == "sipos") return Integral::Sipos;
  if (name == "mle") return Integral::Mle;
  if (name == "smle") return Integral::Smle;
  if (name == "sugeno-prod" || name == "sugeno_product" || name == "sugeno-product") return Integral::SugenoProduct;
  if (name == "cpt") return Integral::Cpt;
  throw InvalidArgument("unknown integral '" + std::string(name) + "'");
}

std::string_view to_string(Domain domain) { return domain == Domain::Real ? "real" : "unit"; }

AggregationFunction bind_integral(Integral kind, const Capacity& mu, const std::optional<Capacity>& mu2,
                                  Domain domain) {
  AggregationFunction f;
  f.name = std::string(to_string(kind));
  f.n = mu.n();
  f.domain = domain;
  switch (kind) {
    case Integral::Choquet: {
      auto cap = std::make_shared<const Capacity>(mu);
      f.eval = [cap](Scores t) { return choquet(*cap, t); };
      break;
    }
    case Integral::Sipos: {
      auto cap = std::make_shared<const Capacity>(mu);
      f.eval = [cap](Scores t) { return sipos(*cap, t); };
      break;
    }
    case Integral::Mle: {
      auto m = std::make_shared<const MobiusRepr>(mobius(mu));
      f.eval = [m](Scores t) { return mle(*m, t); };
      break;
    }
    case Integral::Smle: {
      auto m = std::make_shared<const MobiusRepr>(mobius(mu));
      f.eval = [m](Scores t) { return smle(*m, t); };
      break;
    }
    case Integral::SugenoProduct: {
      auto mv = std::make_shared<const OrdinalMobiusRepr>(ordinal_mobius(mu));
      f.eval = [mv](Scores t) { return sugeno_product(*mv, t); };
      break;
    }
    case Integral::Cpt: {
      if (!mu2) throw InvalidArgument("cpt needs a second capacity for the negative part");
      if (mu2->n() != mu.n()) throw DimensionMismatch(static_cast<std::size_t>(mu.n()), static_cast<std::size_t>(mu2->n()));
      auto m1 = std::make_shared<const MobiusRepr>(mobius(mu));
      auto m2 = std::make_shared<const MobiusRepr>(mobius(*mu2));
      f.eval = [m1, m2](Scores t) { return cpt(*m1, *m2, t); };
      break;
    }
  }
  return f;
}

}  // namespace nonadd
