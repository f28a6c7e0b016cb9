#pragma once

// Set functions on the subset lattice of N = {1..n} and the transforms
// between their representations (Mobius, zeta, co-Mobius, ordinal Mobius).
//
// Subsets are bitmasks: bit (i-1) set means criterion i belongs to the set.
// Every vector indexed by subsets has length 2^n and is indexed by that mask.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nonadd/error.hpp"

namespace nonadd {

inline constexpr int kMaxCriteria = 24;
inline constexpr double kDefaultTolerance = 1e-9;

/// Number of subsets of an n-element criteria set.
constexpr std::size_t lattice_size(int n) { return std::size_t{1} << n; }

/// Throws InvalidArgument unless 1 <= n <= kMaxCriteria.
void check_criteria_count(int n);

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}

  /// Builds a subset from 1-based criterion indices.
  static Subset of(std::initializer_list<int> criteria);
  static Subset of(std::span<const int> criteria);
  static constexpr Subset singleton(int criterion) { return Subset{std::uint32_t{1} << (criterion - 1)}; }
  static constexpr Subset full(int n) { return Subset{static_cast<std::uint32_t>(lattice_size(n) - 1)}; }

  /// Parses "1,3,4" (ascending, 1-based, no repeats); "" is the empty set.
  static Subset parse_key(std::string_view key, int n);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int criterion) const { return (mask_ >> (criterion - 1)) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Subset with(int criterion) const { return Subset{mask_ | (std::uint32_t{1} << (criterion - 1))}; }
  constexpr Subset without(int criterion) const { return Subset{mask_ & ~(std::uint32_t{1} << (criterion - 1))}; }
  constexpr Subset complement(int n) const { return Subset{full(n).mask_ & ~mask_}; }

  /// Ascending 1-based criterion indices.
  std::vector<int> criteria() const;
  /// Canonical key used by the JSON formats, e.g. "1,2".
  std::string key() const;

  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Real values on all 2^n subsets with v(empty) = 0.
class SetFunction {
 public:
  /// Throws InvalidArgument on a bad n, a wrong length, non-finite values or v(empty) != 0.
  SetFunction(int n, std::vector<double> values);

  static SetFunction zero(int n);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](Subset a) const { return values_[a.mask()]; }
  double at(std::uint32_t mask) const { return values_.at(mask); }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_;
  std::vector<double> values_;
};

/// Coefficient vector over the lattice, tagged by the transform that produced it.
template <class Tag>
class LatticeCoefficients {
 public:
  LatticeCoefficients(int n, std::vector<double> coefficients) : n_(n), values_(std::move(coefficients)) {
    check_criteria_count(n);
    if (values_.size() != lattice_size(n)) {
      throw InvalidArgument("coefficient vector must have 2^n entries");
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](Subset a) const { return values_[a.mask()]; }
  std::span<const double> values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

struct MobiusTag {};
struct CoMobiusTag {};
struct OrdinalMobiusTag {};

/// m(A) = sum over B subset of A of (-1)^|A\B| v(B).
using MobiusRepr = LatticeCoefficients<MobiusTag>;
/// Co-Mobius (commonality) coefficients; m(empty) = v(N).
using CoMobiusRepr = LatticeCoefficients<CoMobiusTag>;
/// Ordinal Mobius coefficients; nonnegative, each either 0 or mu(A).
using OrdinalMobiusRepr = LatticeCoefficients<OrdinalMobiusTag>;

struct CapacityDiagnostic {
  enum class Kind { NotNormalized, NotMonotone, NonPositiveSingleton };

  Kind kind;
  Subset subset;      // offending A for NotMonotone / NotNormalized
  int criterion = 0;  // offending i for NotMonotone / NonPositiveSingleton
  std::string message;
};

std::string_view to_string(CapacityDiagnostic::Kind kind);

class CapacityError : public Error {
 public:
  explicit CapacityError(CapacityDiagnostic diagnostic)
      : Error(diagnostic.message), diagnostic_(std::move(diagnostic)) {}

  const CapacityDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  CapacityDiagnostic diagnostic_;
};

struct ValidationOptions {
  double tolerance = kDefaultTolerance;
  bool require_positive_singletons = false;
};

class Capacity;
struct ValidationResult;

ValidationResult validate(const SetFunction& v, const ValidationOptions& options = {});
ValidationResult validate(int n, std::span<const double> values, const ValidationOptions& options = {});

/// A monotone set function normalized to mu(N) = 1. Only obtainable through validation.
class Capacity {
 public:
  const SetFunction& function() const { return base_; }
  int n() const { return base_.n(); }
  double operator[](Subset a) const { return base_[a]; }
  std::span<const double> values() const { return base_.values(); }

  /// True when every singleton has strictly positive weight.
  bool strictly_positive_singletons() const { return positive_singletons_; }
  bool strictly_monotone() const { return strictly_monotone_; }
  bool additive() const { return additive_; }

 private:
  friend ValidationResult validate(const SetFunction&, const ValidationOptions&);

  Capacity(SetFunction base, bool positive_singletons, bool strictly_monotone, bool additive)
      : base_(std::move(base)),
        positive_singletons_(positive_singletons),
        strictly_monotone_(strictly_monotone),
        additive_(additive) {}

  SetFunction base_;
  bool positive_singletons_;
  bool strictly_monotone_;
  bool additive_;
};

struct ValidationResult {
  std::optional<Capacity> capacity;
  std::optional<CapacityDiagnostic> diagnostic;
  bool strictly_monotone = false;
  bool additive = false;

  bool ok() const { return capacity.has_value(); }
};

/// Validates and throws CapacityError with the first violated requirement.
Capacity make_capacity(const SetFunction& v, const ValidationOptions& options = {});
Capacity make_capacity(int n, std::vector<double> values, const ValidationOptions& options = {});

// Transforms. Fast O(n 2^n) butterflies; no tolerance is applied.

MobiusRepr mobius(const SetFunction& v);
inline MobiusRepr mobius(const Capacity& mu) { return mobius(mu.function()); }

/// Inverse of mobius: v(A) = sum of m(B) over B subset of A. Requires m(empty) = 0.
SetFunction zeta(const MobiusRepr& m);

CoMobiusRepr co_mobius(const SetFunction& v);

OrdinalMobiusRepr ordinal_mobius(const Capacity& mu);

/// max over B subset of A of m(B), computed by a max-zeta butterfly.
std::vector<double> ordinal_zeta(const OrdinalMobiusRepr& m);

/// vbar(A) = v(N) - v(complement of A).
SetFunction conjugate(const SetFunction& v);
Capacity conjugate(const Capacity& mu);

}  // namespace nonadd
