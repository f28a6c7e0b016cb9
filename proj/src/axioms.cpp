#include "nonadd/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

namespace nonadd {

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::HE: return "HE";
    case Axiom::A: return "A";
    case Axiom::M: return "M";
    case Axiom::M1: return "M1";
    case Axiom::I: return "I";
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::C1: return "C1";
    case Axiom::S1: return "S1";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  std::string upper;
  for (char c : name) {
    if (c == '.' || std::isspace(static_cast<unsigned char>(c))) continue;
    upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  for (Axiom a : {Axiom::HE, Axiom::A, Axiom::M, Axiom::M1, Axiom::I, Axiom::A1, Axiom::A2, Axiom::C1, Axiom::S1}) {
    if (upper == to_string(a)) return a;
  }
  throw UnknownAxiom("unknown axiom '" + std::string(name) + "' (expected HE, A, M, M1, I, A1, A2, C1 or S1)");
}

std::vector<Axiom> parse_axiom_list(std::string_view list) {
  std::vector<Axiom> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto token = list.substr(0, comma);
    if (!token.empty()) out.push_back(parse_axiom(token));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UnknownAxiom("empty axiom list");
  return out;
}

namespace {

bool within(double got, double expected, double tol) {
  return std::abs(got - expected) <= tol * std::max(1.0, std::abs(expected));
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // 53-bit uniform in [0,1); independent of the standard library's distributions.
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  std::size_t index(std::size_t count) { return static_cast<std::size_t>(rng_() % count); }
  bool coin() { return (rng_() >> 63) != 0; }

 private:
  std::mt19937_64 rng_;
};

struct Probe {
  std::vector<std::vector<double>> points;
  std::vector<double> params;
};

std::vector<double> basis(int n, int criterion, double value) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[static_cast<std::size_t>(criterion - 1)] = value;
  return v;
}

std::vector<double> indicator(int n, std::uint32_t mask, double alpha) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) v[static_cast<std::size_t>(i)] = alpha;
  }
  return v;
}

ProbeOutcome evaluate(Axiom axiom, const AggregationFunction& f, const Capacity& mu, const Probe& probe,
                      double tol) {
  ProbeOutcome out;
  const auto& p = probe.points;
  const auto& q = probe.params;
  auto mu_at = [&](double mask) { return mu.values()[static_cast<std::uint32_t>(mask)]; };
  switch (axiom) {
    case Axiom::HE:
      out.expected = q[0] * mu_at(q[1]);
      out.got = f(p[0]);
      break;
    case Axiom::A:
      out.expected = q[0] * f(p[1]);
      out.got = f(p[0]);
      break;
    case Axiom::I:
      out.expected = q[0];
      out.got = f(p[0]);
      break;
    case Axiom::C1:
      out.expected = q[0] * f(p[0]) + q[1];
      out.got = f(p[1]);
      break;
    case Axiom::S1:
      out.expected = q[0] * f(p[0]);
      out.got = f(p[1]);
      break;
    case Axiom::M:
    case Axiom::M1:
      // points[0] is dominated by points[1]
      out.expected = f(p[1]);
      out.got = f(p[0]);
      out.violated = out.got > out.expected + tol * std::max(1.0, std::abs(out.expected));
      return out;
    case Axiom::A1: {
      const double a = q[1], b = q[2], c = q[3], d = q[4];
      const double denominator = f(p[2]) - f(p[3]);
      if (std::abs(c - d) <= tol || std::abs(denominator) <= tol) {
        out.skipped = true;
        return out;
      }
      out.expected = (a - b) / (c - d);
      out.got = (f(p[0]) - f(p[1])) / denominator;
      break;
    }
    case Axiom::A2: {
      const double reference = mu_at(q[3]) - mu_at(q[4]);
      const double denominator = f(p[2]) - f(p[3]);
      if (std::abs(reference) <= tol || std::abs(denominator) <= tol) {
        out.skipped = true;
        return out;
      }
      out.expected = (mu_at(q[1]) - mu_at(q[2])) / reference;
      out.got = (f(p[0]) - f(p[1])) / denominator;
      break;
    }
  }
  out.violated = !within(out.got, out.expected, tol);
  return out;
}

// Log-spaced alphas in [lo, hi] plus 1.
std::vector<double> alpha_grid(double lo, double hi) {
  constexpr int kSteps = 24;
  std::vector<double> grid;
  for (int k = 0; k <= kSteps; ++k) {
    grid.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * k / kSteps));
  }
  if (lo <= 1.0 && 1.0 <= hi) grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(), [](double a, double b) { return std::abs(a - b) < 1e-12 * b; }),
             grid.end());
  return grid;
}

class ProbeSource {
 public:
  ProbeSource(Axiom axiom, int n, const AxiomCheckConfig& config, Domain domain)
      : axiom_(axiom), n_(n), config_(config), unit_(domain == Domain::UnitCube), rng_(config.seed) {
    const double hi = unit_ ? std::min(1.0, config.alpha_max) : config.alpha_max;
    alphas_ = alpha_grid(std::min(config.alpha_min, hi), hi);
    build_fixed();
  }

  const std::vector<Probe>& fixed() const { return fixed_; }

  Probe random() {
    switch (axiom_) {
      case Axiom::HE: {
        const double alpha = draw_alpha();
        const auto mask = static_cast<std::uint32_t>(rng_.index(lattice_size(n_)));
        return he(alpha, mask);
      }
      case Axiom::A: {
        const int i = draw_criterion();
        return affinity(i, draw_score());
      }
      case Axiom::M1: {
        const int i = draw_criterion();
        double lo = draw_score(), hi = draw_score();
        if (lo > hi) std::swap(lo, hi);
        return {{basis(n_, i, lo), basis(n_, i, hi)}, {}};
      }
      case Axiom::A1: {
        const int i = draw_criterion();
        double a = draw_score(), b = draw_score(), c = draw_score(), d = draw_score();
        if (a < b) std::swap(a, b);
        if (c < d) std::swap(c, d);
        return ratio_probe(i, draw_alpha(), a, b, c, d);
      }
      case Axiom::A2: {
        const auto size = lattice_size(n_);
        return a2(draw_alpha(), static_cast<std::uint32_t>(rng_.index(size)), static_cast<std::uint32_t>(rng_.index(size)),
                  static_cast<std::uint32_t>(rng_.index(size)), static_cast<std::uint32_t>(rng_.index(size)));
      }
      case Axiom::M: {
        std::vector<double> lower(static_cast<std::size_t>(n_)), upper(static_cast<std::size_t>(n_));
        for (std::size_t k = 0; k < lower.size(); ++k) {
          lower[k] = draw_score();
          const double room = unit_ ? 1.0 - lower[k] : config_.score_bound;
          upper[k] = rng_.coin() ? lower[k] + rng_.uniform(0.0, room) : lower[k];
        }
        return {{lower, upper}, {}};
      }
      case Axiom::I:
        return idempotence(draw_alpha());
      case Axiom::C1: {
        auto t = draw_vector();
        const double alpha = draw_alpha();
        const double beta = rng_.uniform(-config_.score_bound, config_.score_bound);
        return affine(t, alpha, beta);
      }
      case Axiom::S1: {
        auto t = draw_vector();
        const double alpha = rng_.coin() ? draw_alpha() : -draw_alpha();
        return scaled(t, alpha);
      }
    }
    return {};
  }

 private:
  void build_fixed() {
    const auto size = lattice_size(n_);
    const std::uint32_t all = static_cast<std::uint32_t>(size - 1);
    switch (axiom_) {
      case Axiom::HE:
        for (double alpha : with_zero(alphas_)) {
          for (std::uint32_t mask = 0; mask < size; ++mask) fixed_.push_back(he(alpha, mask));
        }
        break;
      case Axiom::A:
        for (int i = 1; i <= n_; ++i) {
          for (double a : unit_ ? std::vector<double>{0.5, 1.0} : std::vector<double>{-1.0, 1.0, -config_.score_bound, config_.score_bound}) {
            fixed_.push_back(affinity(i, a));
          }
        }
        break;
      case Axiom::M1:
        for (int i = 1; i <= n_; ++i) {
          fixed_.push_back({{basis(n_, i, unit_ ? 0.0 : -1.0), basis(n_, i, 1.0)}, {}});
        }
        break;
      case Axiom::A1:
        // Straddling zero when the domain allows it: (1 - 0) / (0 - (-1)).
        for (int i = 1; i <= n_; ++i) {
          if (unit_) {
            fixed_.push_back(ratio_probe(i, 1.0, 1.0, 0.5, 0.5, 0.0));
          } else {
            fixed_.push_back(ratio_probe(i, 1.0, 1.0, 0.0, 0.0, -1.0));
          }
        }
        break;
      case Axiom::A2:
        for (double alpha : alphas_) {
          for (std::uint32_t mask = 0; mask < size; ++mask) fixed_.push_back(a2(alpha, mask, 0, all, 0));
        }
        break;
      case Axiom::M: {
        // Diagonal pairs (a,...,a) <= (b,...,b) along the alpha grid.
        std::vector<double> levels = with_zero(alphas_);
        if (!unit_) {
          for (double alpha : alphas_) levels.push_back(-alpha);
          std::sort(levels.begin(), levels.end());
        }
        for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
          fixed_.push_back({{constant(levels[k]), constant(levels[k + 1])}, {}});
        }
        break;
      }
      case Axiom::I:
        for (double alpha : with_zero(alphas_)) fixed_.push_back(idempotence(alpha));
        break;
      case Axiom::C1:
        for (double alpha : with_zero(alphas_)) fixed_.push_back(affine(ramp(), alpha, -1.0));
        break;
      case Axiom::S1:
        for (double alpha : alphas_) {
          fixed_.push_back(scaled(ramp(), alpha));
          fixed_.push_back(scaled(ramp(), -alpha));
        }
        fixed_.push_back(scaled(ramp(), 0.0));
        break;
    }
  }

  static std::vector<double> with_zero(const std::vector<double>& alphas) {
    std::vector<double> out{0.0};
    out.insert(out.end(), alphas.begin(), alphas.end());
    return out;
  }

  std::vector<double> constant(double value) const { return std::vector<double>(static_cast<std::size_t>(n_), value); }

  // A mixed-sign vector spanning the score range.
  std::vector<double> ramp() const {
    std::vector<double> t(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) {
      t[static_cast<std::size_t>(k)] = n_ == 1 ? -0.5 * config_.score_bound
                                               : config_.score_bound * (2.0 * k / (n_ - 1) - 1.0) * (k % 2 ? 0.7 : 1.0);
    }
    return t;
  }

  Probe he(double alpha, std::uint32_t mask) const {
    return {{indicator(n_, mask, alpha)}, {alpha, static_cast<double>(mask)}};
  }
  Probe affinity(int i, double a) const {
    return {{basis(n_, i, a), basis(n_, i, 1.0)}, {a, static_cast<double>(i)}};
  }
  Probe ratio_probe(int i, double alpha, double a, double b, double c, double d) const {
    return {{basis(n_, i, alpha * a), basis(n_, i, alpha * b), basis(n_, i, alpha * c), basis(n_, i, alpha * d)},
            {alpha, a, b, c, d, static_cast<double>(i)}};
  }
  Probe a2(double alpha, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
    return {{indicator(n_, a, alpha), indicator(n_, b, alpha), indicator(n_, c, alpha), indicator(n_, d, alpha)},
            {alpha, static_cast<double>(a), static_cast<double>(b), static_cast<double>(c), static_cast<double>(d)}};
  }
  Probe idempotence(double alpha) const { return {{constant(alpha)}, {alpha}}; }
  Probe affine(const std::vector<double>& t, double alpha, double beta) const {
    std::vector<double> moved(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) moved[k] = alpha * t[k] + beta;
    return {{t, moved}, {alpha, beta}};
  }
  Probe scaled(const std::vector<double>& t, double alpha) const {
    std::vector<double> moved(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) moved[k] = alpha * t[k];
    return {{t, moved}, {alpha}};
  }

  int draw_criterion() { return static_cast<int>(rng_.index(static_cast<std::size_t>(n_))) + 1; }
  double draw_score() { return unit_ ? rng_.unit() : rng_.uniform(-config_.score_bound, config_.score_bound); }
  double draw_alpha() {
    const double hi = unit_ ? std::min(1.0, config_.alpha_max) : config_.alpha_max;
    const double lo = std::min(config_.alpha_min, hi);
    return rng_.log_uniform(lo, hi);
  }
  std::vector<double> draw_vector() {
    std::vector<double> t(static_cast<std::size_t>(n_));
    for (double& x : t) x = draw_score();
    return t;
  }

  Axiom axiom_;
  int n_;
  AxiomCheckConfig config_;
  bool unit_;
  Sampler rng_;
  std::vector<double> alphas_;
  std::vector<Probe> fixed_;
};

Domain resolve_domain(Axiom axiom, const AggregationFunction& f, const AxiomCheckConfig& config) {
  const Domain requested = config.sample_domain.value_or(f.domain);
  if (f.domain == Domain::UnitCube && requested == Domain::Real && !config.allow_out_of_domain) {
    throw DomainMismatch("'" + f.name + "' is declared on [0,1]^n; sampling R^n needs allow_out_of_domain");
  }
  if (requested == Domain::UnitCube && (axiom == Axiom::C1 || axiom == Axiom::S1)) {
    if (!config.allow_out_of_domain) {
      throw DomainMismatch(std::string(to_string(axiom)) + " quantifies over R^n and cannot be sampled on [0,1]^n");
    }
    return Domain::Real;
  }
  return requested;
}

}  // namespace

AxiomReport check_axiom(Axiom axiom, const AggregationFunction& f, const Capacity& mu, const AxiomCheckConfig& config) {
  if (config.sample_count < 1) throw InvalidArgument("sample_count must be at least 1");
  if (!f.eval) throw InvalidArgument("aggregation function is empty");
  if (f.n != mu.n()) throw DimensionMismatch(static_cast<std::size_t>(mu.n()), static_cast<std::size_t>(f.n));
  if (!(config.alpha_min > 0.0) || !(config.alpha_max >= config.alpha_min)) {
    throw InvalidArgument("alpha range must satisfy 0 < alpha_min <= alpha_max");
  }

  const Domain domain = resolve_domain(axiom, f, config);
  ProbeSource source(axiom, mu.n(), config, domain);
  AxiomReport report;
  report.axiom = axiom;
  report.function = f.name;

  auto run = [&](const Probe& probe) {
    const auto outcome = evaluate(axiom, f, mu, probe, config.tolerance);
    ++report.samples_tested;
    if (outcome.skipped) {
      ++report.skipped;
      return true;
    }
    if (outcome.violated) {
      report.passed = false;
      report.counterexample = Counterexample{probe.points, probe.params, outcome.expected, outcome.got};
      return false;
    }
    return true;
  };

  for (const auto& probe : source.fixed()) {
    if (!run(probe)) return report;
  }
  for (std::size_t s = 0; s < config.sample_count; ++s) {
    if (!run(source.random())) return report;
  }
  return report;
}

ProbeOutcome replay(Axiom axiom, const AggregationFunction& f, const Capacity& mu, const Counterexample& cx,
                    double tolerance) {
  return evaluate(axiom, f, mu, Probe{cx.points, cx.params}, tolerance);
}

EquivalenceReport check_axiom_equivalence(const AggregationFunction& f, const Capacity& mu,
                                          const AxiomCheckConfig& config) {
  EquivalenceReport report;
  for (Axiom a : {Axiom::A1, Axiom::A2, Axiom::I}) report.requirements.push_back(check_axiom(a, f, mu, config));
  for (Axiom a : {Axiom::HE, Axiom::A}) report.simplified.push_back(check_axiom(a, f, mu, config));
  auto all_pass = [](const std::vector<AxiomReport>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const AxiomReport& r) { return r.passed; });
  };
  report.requirements_pass = all_pass(report.requirements);
  report.simplified_pass = all_pass(report.simplified);
  return report;
}

const ConditionCheck* PseudoProductReport::find(std::string_view name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// Tracks the largest deviation seen for one condition.
class ConditionTracker {
 public:
  ConditionTracker(std::string name, double tol) : tol_(tol) { check_.name = std::move(name); }

  void observe(std::vector<double> args, double expected, double got) {
    ++check_.samples;
    const double deviation = std::abs(got - expected);
    if (deviation > worst_) {
      worst_ = deviation;
      check_.witness = std::move(args);
      check_.expected = expected;
      check_.got = got;
    }
  }

  // One-sided: only got > bound counts as a deviation.
  void observe_upper(std::vector<double> args, double bound, double got) {
    ++check_.samples;
    const double deviation = got - bound;
    if (deviation > worst_) {
      worst_ = deviation;
      check_.witness = std::move(args);
      check_.expected = bound;
      check_.got = got;
    }
  }

  ConditionCheck finish() {
    check_.holds = worst_ <= tol_;
    return check_;
  }

 private:
  double tol_;
  double worst_ = 0.0;
  ConditionCheck check_;
};

}  // namespace

PseudoProductReport check_pseudo_product(const PseudoProduct& op, const AxiomCheckConfig& config) {
  const double tol = config.tolerance;
  std::vector<double> points;
  for (std::size_t k = 0; k < PseudoProduct::kGridPoints; ++k) {
    points.push_back(static_cast<double>(k) / static_cast<double>(PseudoProduct::kGridPoints - 1));
  }
  Sampler rng(config.seed);
  const std::size_t extra = std::min<std::size_t>(config.sample_count, 200);
  for (std::size_t s = 0; s < extra; ++s) points.push_back(rng.unit());

  ConditionTracker commutative("commutative", tol), associative("associative", tol), monotone("nondecreasing", tol);
  ConditionTracker zero_zero("0.0=0", tol), one_one("1.1=1", tol), absorbing("a.0=0", tol);
  ConditionTracker idempotent("a.a=a", tol), neutral("1.a=a", tol);

  zero_zero.observe({0.0, 0.0}, 0.0, op(0.0, 0.0));
  one_one.observe({1.0, 1.0}, 1.0, op(1.0, 1.0));
  double max_from_min = 0.0;
  for (double a : points) {
    absorbing.observe({a, 0.0}, 0.0, op(a, 0.0));
    idempotent.observe({a, a}, a, op(a, a));
    neutral.observe({1.0, a}, a, op(1.0, a));
    for (double b : points) {
      const double ab = op(a, b);
      max_from_min = std::max(max_from_min, std::abs(ab - std::min(a, b)));
      commutative.observe({a, b}, op(b, a), ab);
    }
  }
  // Cubic checks stay on the regular grid.
  const std::span<const double> grid(points.data(), PseudoProduct::kGridPoints);
  for (double a : grid) {
    for (double b : grid) {
      const double ab = op(a, b);
      for (double c : grid) {
        associative.observe({a, b, c}, op(a, op(b, c)), op(ab, c));
        if (a <= b) {
          monotone.observe_upper({a, b, c}, op(b, c), op(a, c));
          monotone.observe_upper({a, b, c}, op(c, b), op(c, a));
        }
      }
    }
  }

  PseudoProductReport report;
  report.op = op.name();
  for (auto* t : {&commutative, &associative, &monotone, &zero_zero, &one_one, &absorbing, &idempotent, &neutral}) {
    report.conditions.push_back(t->finish());
  }
  report.all_hold = std::all_of(report.conditions.begin(), report.conditions.end(),
                                [](const ConditionCheck& c) { return c.holds; });
  report.max_deviation_from_min = max_from_min;
  report.min_equivalent = report.all_hold && max_from_min <= tol;
  return report;
}

ComparisonTable compare_extensions(const Capacity& mu, const std::vector<std::vector<double>>& grid,
                                   const AxiomCheckConfig& config) {
  const std::vector<Integral> kinds{Integral::Choquet, Integral::Sipos, Integral::Mle, Integral::Smle,
                                    Integral::SugenoProduct};
  std::vector<AggregationFunction> fs;
  for (Integral k : kinds) fs.push_back(bind_integral(k, mu));

  ComparisonTable table;
  for (const auto& point : grid) {
    ComparisonRow row;
    row.point = point;
    row.choquet = fs[0](point);
    row.sipos = fs[1](point);
    row.mle = fs[2](point);
    row.smle = fs[3](point);
    row.sugeno_product = fs[4](point);
    table.rows.push_back(std::move(row));
  }

  AxiomCheckConfig real = config;
  real.sample_domain = Domain::Real;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    OperatorVerdict verdict{kinds[k]};
    verdict.intra_criterion = check_axiom(Axiom::A1, fs[k], mu, real).passed;
    verdict.inter_criteria = check_axiom(Axiom::A2, fs[k], mu, real).passed;
    verdict.absolute_levels = check_axiom(Axiom::I, fs[k], mu, real).passed;
    verdict.monotone = check_axiom(Axiom::M, fs[k], mu, real).passed;
    table.verdicts.push_back(verdict);
  }
  return table;
}

}  // namespace nonadd
