#include "nonadd/set_function.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace nonadd {

void check_criteria_count(int n) {
  if (n < 1 || n > kMaxCriteria) {
    throw InvalidArgument("criteria count must be in [1, " + std::to_string(kMaxCriteria) + "], got " +
                          std::to_string(n));
  }
}

Subset Subset::of(std::initializer_list<int> criteria) {
  return of(std::span<const int>(criteria.begin(), criteria.size()));
}

Subset Subset::of(std::span<const int> criteria) {
  std::uint32_t mask = 0;
  for (int c : criteria) {
    if (c < 1 || c > kMaxCriteria) throw InvalidArgument("criterion index out of range: " + std::to_string(c));
    mask |= std::uint32_t{1} << (c - 1);
  }
  return Subset{mask};
}

Subset Subset::parse_key(std::string_view key, int n) {
  std::uint32_t mask = 0;
  int previous = 0;
  while (!key.empty()) {
    auto comma = key.find(',');
    auto token = key.substr(0, comma);
    int c = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed subset key '" + std::string(token) + "'");
    }
    if (c < 1 || c > n) throw InvalidArgument("criterion " + std::to_string(c) + " out of range in subset key");
    if (c <= previous) throw InvalidArgument("subset key criteria must be strictly ascending");
    mask |= std::uint32_t{1} << (c - 1);
    previous = c;
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
    if (key.empty()) throw InvalidArgument("trailing comma in subset key");
  }
  return Subset{mask};
}

std::vector<int> Subset::criteria() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::key() const {
  std::string out;
  for (int c : criteria()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

SetFunction::SetFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  check_criteria_count(n);
  if (values_.size() != lattice_size(n)) {
    throw InvalidArgument("set function needs 2^" + std::to_string(n) + " = " + std::to_string(lattice_size(n)) +
                          " values, got " + std::to_string(values_.size()));
  }
  for (double x : values_) {
    if (!std::isfinite(x)) throw InvalidArgument("set function values must be finite");
  }
  if (values_[0] != 0.0) throw InvalidArgument("set function must vanish on the empty set");
}

SetFunction SetFunction::zero(int n) {
  check_criteria_count(n);
  return SetFunction(n, std::vector<double>(lattice_size(n), 0.0));
}

std::string_view to_string(CapacityDiagnostic::Kind kind) {
  switch (kind) {
    case CapacityDiagnostic::Kind::NotNormalized: return "NotNormalized";
    case CapacityDiagnostic::Kind::NotMonotone: return "NotMonotone";
    case CapacityDiagnostic::Kind::NonPositiveSingleton: return "NonPositiveSingleton";
  }
  return "unknown";
}

namespace {

std::string set_label(Subset a) { return "{" + a.key() + "}"; }

std::optional<CapacityDiagnostic> check_normalization(int n, std::span<const double> v, double tol) {
  using Kind = CapacityDiagnostic::Kind;
  if (std::abs(v[0]) > tol) {
    return CapacityDiagnostic{Kind::NotNormalized, Subset{}, 0,
                              "NotNormalized: mu(empty) = " + std::to_string(v[0]) + ", expected 0"};
  }
  const Subset all = Subset::full(n);
  if (std::abs(v[all.mask()] - 1.0) > tol) {
    return CapacityDiagnostic{Kind::NotNormalized, all, 0,
                              "NotNormalized: mu(N) = " + std::to_string(v[all.mask()]) + ", expected 1"};
  }
  return std::nullopt;
}

}  // namespace

ValidationResult validate(int n, std::span<const double> values, const ValidationOptions& options) {
  check_criteria_count(n);
  if (values.size() != lattice_size(n)) {
    throw InvalidArgument("set function needs 2^n values");
  }
  ValidationResult result;
  if (auto diag = check_normalization(n, values, options.tolerance)) {
    result.diagnostic = std::move(diag);
    return result;
  }
  // mu(empty) within tolerance of 0; snap to the exact invariant of SetFunction.
  std::vector<double> copy(values.begin(), values.end());
  copy[0] = 0.0;
  return validate(SetFunction(n, std::move(copy)), options);
}

ValidationResult validate(const SetFunction& v, const ValidationOptions& options) {
  using Kind = CapacityDiagnostic::Kind;
  const int n = v.n();
  const double tol = options.tolerance;
  const auto values = v.values();
  ValidationResult result;

  if (auto diag = check_normalization(n, values, tol)) {
    result.diagnostic = std::move(diag);
    return result;
  }

  bool strict = true;
  bool additive = true;
  std::optional<CapacityDiagnostic> violation;
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << (i - 1);
      if (a & bit) continue;
      const double lower = values[a];
      const double upper = values[a | bit];
      if (!violation && lower > upper + tol) {
        violation = CapacityDiagnostic{Kind::NotMonotone, Subset{a}, i,
                                       "NotMonotone: mu(" + set_label(Subset{a}) + ") = " + std::to_string(lower) +
                                           " exceeds mu(" + set_label(Subset{a | bit}) +
                                           ") = " + std::to_string(upper) + " after adding criterion " +
                                           std::to_string(i)};
      }
      if (!(upper - lower > tol)) strict = false;
      if (std::abs(upper - lower - values[bit]) > tol) additive = false;
    }
  }
  result.strictly_monotone = strict && !violation;
  result.additive = additive;
  if (violation) {
    result.diagnostic = std::move(violation);
    return result;
  }

  bool positive = true;
  for (int i = 1; i <= n; ++i) {
    if (!(v[Subset::singleton(i)] > 0.0)) {
      positive = false;
      if (options.require_positive_singletons) {
        result.diagnostic = CapacityDiagnostic{
            Kind::NonPositiveSingleton, Subset::singleton(i), i,
            "NonPositiveSingleton: mu({" + std::to_string(i) + "}) = " + std::to_string(v[Subset::singleton(i)]) +
                " must be > 0"};
        return result;
      }
    }
  }
  result.capacity = Capacity(v, positive, result.strictly_monotone, additive);
  return result;
}

Capacity make_capacity(const SetFunction& v, const ValidationOptions& options) {
  auto result = validate(v, options);
  if (!result.ok()) throw CapacityError(*result.diagnostic);
  return std::move(*result.capacity);
}

Capacity make_capacity(int n, std::vector<double> values, const ValidationOptions& options) {
  auto result = validate(n, values, options);
  if (!result.ok()) throw CapacityError(*result.diagnostic);
  return std::move(*result.capacity);
}

namespace {

// In-place subset-sum butterfly; sign = +1 gives zeta, -1 gives Mobius.
void subset_butterfly(std::vector<double>& f, int n, double sign) {
  const std::size_t size = lattice_size(n);
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t block = 0; block < size; block += 2 * step) {
      for (std::size_t k = block; k < block + step; ++k) {
        f[k + step] += sign * f[k];
      }
    }
  }
}

}  // namespace

MobiusRepr mobius(const SetFunction& v) {
  std::vector<double> f(v.values().begin(), v.values().end());
  subset_butterfly(f, v.n(), -1.0);
  return MobiusRepr(v.n(), std::move(f));
}

SetFunction zeta(const MobiusRepr& m) {
  if (m.values()[0] != 0.0) throw InvalidArgument("Mobius coefficient of the empty set must be 0");
  std::vector<double> f(m.values().begin(), m.values().end());
  subset_butterfly(f, m.n(), 1.0);
  return SetFunction(m.n(), std::move(f));
}

CoMobiusRepr co_mobius(const SetFunction& v) {
  const int n = v.n();
  const std::uint32_t all = Subset::full(n).mask();
  std::vector<double> f(v.size());
  for (std::uint32_t b = 0; b < f.size(); ++b) {
    const double term = v.values()[all & ~b];
    f[b] = (std::popcount(b) % 2 == 0) ? term : -term;
  }
  subset_butterfly(f, n, 1.0);
  return CoMobiusRepr(n, std::move(f));
}

OrdinalMobiusRepr ordinal_mobius(const Capacity& mu) {
  const auto v = mu.values();
  std::vector<double> out(v.size(), 0.0);
  for (std::uint32_t a = 1; a < v.size(); ++a) {
    bool strict_jump = true;
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (!(v[a] > v[a & ~bit])) {
        strict_jump = false;
        break;
      }
    }
    if (strict_jump) out[a] = v[a];
  }
  return OrdinalMobiusRepr(mu.n(), std::move(out));
}

std::vector<double> ordinal_zeta(const OrdinalMobiusRepr& m) {
  std::vector<double> f(m.values().begin(), m.values().end());
  const int n = m.n();
  for (int bit = 0; bit < n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      if (a & b) f[a] = std::max(f[a], f[a & ~b]);
    }
  }
  return f;
}

SetFunction conjugate(const SetFunction& v) {
  const std::uint32_t all = Subset::full(v.n()).mask();
  const double total = v.values()[all];
  std::vector<double> out(v.size());
  for (std::uint32_t a = 0; a < out.size(); ++a) out[a] = total - v.values()[all & ~a];
  out[0] = 0.0;
  return SetFunction(v.n(), std::move(out));
}

Capacity conjugate(const Capacity& mu) {
  // Conjugation maps capacities to capacities, so validation cannot fail here.
  return make_capacity(conjugate(mu.function()));
}

}  // namespace nonadd
