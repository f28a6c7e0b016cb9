#pragma once

// Extensions of a capacity from {0,1}^n to real score vectors.
//
// Score vectors are spans of length n in criterion order. Every function
// throws DimensionMismatch when the length differs from the capacity's n and
// InvalidArgument on non-finite scores.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nonadd/set_function.hpp"

namespace nonadd {

using Scores = std::span<const double>;

/// Asymmetric Choquet integral, permutation form. Ties sort by criterion index.
double choquet(const Capacity& mu, Scores t);

/// Choquet integral through the Mobius representation: sum of m(A) * min over A.
double choquet_mobius(const MobiusRepr& m, Scores t);

/// Sipos (symmetric Choquet) integral: C(t+) - C(t-).
double sipos(const Capacity& mu, Scores t);

/// Sipos integral from a single sort, negative block and positive block handled separately.
double sipos_closed_form(const Capacity& mu, Scores t);

/// Sipos integral through the Mobius representation.
double sipos_mobius(const MobiusRepr& m, Scores t);

/// Multilinear extension: sum of m(A) * product over A.
double mle(const MobiusRepr& m, Scores t);

/// Symmetric multilinear extension: sum of m(A) * (prod t+ - prod t-).
double smle(const MobiusRepr& m, Scores t);

/// a if |a| > |b|, 0 if b == -a, b otherwise.
double symmetric_max(double a, double b);

/// Folds the symmetric maximum over a list: positives by max, negatives by min, then one symmetric max.
double symmetric_max_fold(std::span<const double> values);

/// Sugeno variant with product in place of min, extended to signed scores by the symmetric maximum.
double sugeno_product(const OrdinalMobiusRepr& mv, Scores t);

/// Two-capacity form: Choquet of t+ under m1 minus Choquet of t- under m2.
double cpt(const MobiusRepr& m1, const MobiusRepr& m2, Scores t);

struct CptCompatibility {
  bool compatible = true;
  std::vector<int> violating;  // criteria with m2({i}) != m1({i})
};

CptCompatibility cpt_compatible(const Capacity& mu1, const Capacity& mu2, double tol = kDefaultTolerance);

struct OperatorCertificate {
  bool maps_unit_square = true;
  bool commutative = true;
  bool associative = true;
  std::size_t grid_points = 0;
  double tolerance = 0.0;

  bool certified() const { return maps_unit_square && commutative && associative; }
};

/// A binary operation on [0,1] replacing the product in the multilinear form.
/// Construction samples commutativity and associativity on a regular grid.
class PseudoProduct {
 public:
  using Op = std::function<double(double, double)>;

  static constexpr std::size_t kGridPoints = 21;

  PseudoProduct(std::string name, Op op, double tol = 1e-12);

  static PseudoProduct minimum();
  static PseudoProduct product();
  static PseudoProduct lukasiewicz();

  double operator()(double a, double b) const { return op_(a, b); }
  const std::string& name() const { return name_; }
  const OperatorCertificate& certificate() const { return certificate_; }

 private:
  std::string name_;
  Op op_;
  OperatorCertificate certificate_;
};

/// sum of m(A) times the pseudo-product folded over A in ascending order; t must lie in [0,1]^n.
double pseudo_product_extension(const MobiusRepr& m, const PseudoProduct& op, Scores t);

enum class Integral { Choquet, Sipos, Mle, Smle, SugenoProduct, Cpt };

std::string_view to_string(Integral kind);
/// Accepts choquet, sipos, mle, smle, sugeno-prod (or sugeno_product), cpt.
Integral parse_integral(std::string_view name);

enum class Domain { Real, UnitCube };

std::string_view to_string(Domain domain);

/// An opaque aggregation function with the domain it is declared on.
struct AggregationFunction {
  std::string name;
  int n = 0;
  std::function<double(Scores)> eval;
  Domain domain = Domain::Real;

  double operator()(Scores t) const { return eval(t); }
};

/// Binds an integral to a capacity, precomputing the transforms it needs.
/// Cpt requires mu2; it is ignored otherwise.
AggregationFunction bind_integral(Integral kind, const Capacity& mu, const std::optional<Capacity>& mu2 = std::nullopt,
                                  Domain domain = Domain::Real);

}  // namespace nonadd
