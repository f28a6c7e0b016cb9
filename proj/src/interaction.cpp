#include "nonadd/interaction.hpp"

#include <bit>
#include <numeric>

namespace nonadd {

namespace {

__extension__ typedef unsigned __int128 Wide;

Wide factorial(int k) {
  Wide out = 1;
  for (int i = 2; i <= k; ++i) out *= static_cast<Wide>(i);
  return out;
}

Wide gcd(Wide a, Wide b) {
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// (n-b-a)! b! / (n-a+1)! reduced, then divided once in floating point.
double coalition_weight(int n, int a, int b) {
  Wide num = factorial(n - b - a) * factorial(b);
  Wide den = factorial(n - a + 1);
  const Wide g = gcd(num, den);
  num /= g;
  den /= g;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double interaction_index(const Capacity& mu, Subset a) {
  if (a.empty()) throw EmptyCoalition();
  const int n = mu.n();
  if (!a.is_subset_of(Subset::full(n))) throw InvalidArgument("coalition {" + a.key() + "} is not a subset of N");

  const auto v = mu.values();
  const int size_a = a.size();
  std::vector<double> weights(static_cast<std::size_t>(n - size_a) + 1);
  for (int b = 0; b <= n - size_a; ++b) weights[static_cast<std::size_t>(b)] = coalition_weight(n, size_a, b);

  const std::uint32_t outside = Subset::full(n).mask() & ~a.mask();
  const std::uint32_t inside = a.mask();
  double total = 0.0;
  // B runs over subsets of N\A, K over subsets of A (standard submask enumeration).
  for (std::uint32_t b = outside;; b = (b - 1) & outside) {
    double difference = 0.0;
    for (std::uint32_t k = inside;; k = (k - 1) & inside) {
      const double term = v[k | b];
      difference += ((size_a - std::popcount(k)) % 2 == 0) ? term : -term;
      if (k == 0) break;
    }
    total += weights[static_cast<std::size_t>(std::popcount(b))] * difference;
    if (b == 0) break;
  }
  return total;
}

std::vector<double> shapley(const Capacity& mu) {
  std::vector<double> phi(static_cast<std::size_t>(mu.n()));
  for (int i = 1; i <= mu.n(); ++i) phi[static_cast<std::size_t>(i - 1)] = interaction_index(mu, Subset::singleton(i));
  return phi;
}

std::string_view to_string(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::Positive: return "positive";
    case InteractionKind::Negative: return "negative";
    case InteractionKind::NonInteractive: return "non-interactive";
  }
  return "unknown";
}

InteractionKind classify(double value, double tol) {
  if (tol < 0.0) throw InvalidArgument("classification tolerance must be nonnegative");
  if (value > tol) return InteractionKind::Positive;
  if (value < -tol) return InteractionKind::Negative;
  return InteractionKind::NonInteractive;
}

InteractionReport interaction_report(const Capacity& mu, int max_order, double tol) {
  const int n = mu.n();
  InteractionReport report;
  report.n = n;
  report.max_order = (max_order <= 0 || max_order > n) ? n : max_order;
  report.shapley = shapley(mu);

  const auto un = static_cast<std::size_t>(n);
  report.pairs.assign(un, std::vector<double>(un, 0.0));
  report.pair_kinds.assign(un, std::vector<InteractionKind>(un, InteractionKind::NonInteractive));
  for (std::size_t i = 0; i < un; ++i) {
    report.pairs[i][i] = report.shapley[i];
    for (std::size_t j = i + 1; j < un; ++j) {
      const double value = interaction_index(mu, Subset::of({static_cast<int>(i) + 1, static_cast<int>(j) + 1}));
      report.pairs[i][j] = report.pairs[j][i] = value;
      report.pair_kinds[i][j] = report.pair_kinds[j][i] = classify(value, tol);
    }
  }

  for (std::uint32_t a = 1; a < lattice_size(n); ++a) {
    if (std::popcount(a) > report.max_order) continue;
    report.indices.emplace_back(Subset{a}, interaction_index(mu, Subset{a}));
  }
  return report;
}

}  // namespace nonadd
