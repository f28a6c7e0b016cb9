// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nonadd/axioms.hpp"
#include "nonadd/integrals.hpp"
#include "nonadd/interaction.hpp"
#include "nonadd/model.hpp"
#include "../oracles.hpp"

using namespace nonadd;
using Clock = std::chrono::steady_clock;
using V = std::vector<double>;

namespace tol {
constexpr double kExact = 1e-12;
constexpr double kOracle = 1e-9;
constexpr double kTransform = 1e-12;
constexpr double kInteraction = 1e-12;
constexpr double kEfficiency = 1e-9;
constexpr double kExtension = 1e-9;
}  // namespace tol

namespace budget {
constexpr auto kMleCounterexample = std::chrono::milliseconds(1);
constexpr auto kOracleSweep = std::chrono::seconds(10);
constexpr auto kMobius20 = std::chrono::seconds(1);
}  // namespace budget

constexpr int kSamplesPerN = 1000;
constexpr std::uint64_t kSeed = 20240917;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

struct Sample {
  int n;
  V v;
  V t;
};

// Shared (mu, t) sample for criteria 2 and 3.
const std::vector<Sample>& sweep_sample() {
  static const std::vector<Sample> samples = [] {
    std::mt19937_64 rng(kSeed);
    std::vector<Sample> out;
    for (int n = 1; n <= 8; ++n) {
      for (int k = 0; k < kSamplesPerN; ++k) {
        auto v = oracle::random_capacity(n, rng);
        auto t = oracle::random_scores(n, 10.0, rng);
        out.push_back({n, std::move(v), std::move(t)});
      }
    }
    return out;
  }();
  return samples;
}

Outcome mle_counterexample() {
  Outcome o;
  const auto start = Clock::now();
  const auto mu = make_capacity(2, {0, 0.9, 0.9, 1.0});
  const auto m = mobius(mu);
  const double at_one = mle(m, V{1, 1});
  const double at_three = mle(m, V{3, 3});
  const double ms = elapsed_ms(start);
  o.require(std::abs(at_one - 1.0) <= tol::kExact, fmt("MLE(1,1) = %.17g", at_one));
  o.require(std::abs(at_three + 1.8) <= tol::kExact, fmt("MLE(3,3) = %.17g", at_three));
  o.require(at_three < at_one, "MLE(3,3) is not below MLE(1,1)");
  o.require(ms < std::chrono::duration<double, std::milli>(budget::kMleCounterexample).count(),
            fmt("took %.3f ms", ms));
  if (o.pass) o.detail = fmt("MLE(1,1)=1, MLE(3,3)=%.12g, %.3f ms", at_three, ms);
  return o;
}

Outcome permutation_matches_mobius() {
  Outcome o;
  const auto start = Clock::now();
  double worst_c = 0.0, worst_s = 0.0, worst_closed = 0.0;
  for (const auto& s : sweep_sample()) {
    const auto mu = make_capacity(s.n, s.v);
    const auto m = mobius(mu);
    const double c = choquet(mu, s.t);
    const double sp = sipos(mu, s.t);
    worst_c = std::max(worst_c, std::abs(c - choquet_mobius(m, s.t)));
    worst_s = std::max(worst_s, std::abs(sp - sipos_mobius(m, s.t)));
    worst_closed = std::max(worst_closed, std::abs(sp - sipos_closed_form(mu, s.t)));
  }
  const double ms = elapsed_ms(start);
  o.require(worst_c <= tol::kOracle, fmt("choquet permutation vs mobius off by %.3g", worst_c));
  o.require(worst_s <= tol::kOracle, fmt("sipos split vs mobius off by %.3g", worst_s));
  o.require(worst_closed <= tol::kOracle, fmt("sipos split vs closed form off by %.3g", worst_closed));
  o.require(ms < std::chrono::duration<double, std::milli>(budget::kOracleSweep).count(), fmt("took %.0f ms", ms));
  if (o.pass) {
    o.detail = fmt("8000 samples, max diffs %.2g / %.2g", worst_c, worst_s) + fmt(" / %.2g, %.0f ms", worst_closed, ms);
  }
  return o;
}

Outcome symmetry_identities() {
  Outcome o;
  double worst_c = 0.0, worst_s = 0.0;
  for (const auto& s : sweep_sample()) {
    const auto mu = make_capacity(s.n, s.v);
    const auto bar = conjugate(mu);
    V neg(s.t);
    for (auto& x : neg) x = -x;
    worst_c = std::max(worst_c, std::abs(choquet(mu, neg) + choquet(bar, s.t)));
    worst_s = std::max(worst_s, std::abs(sipos(mu, neg) + sipos(mu, s.t)));
  }
  o.require(worst_c <= tol::kOracle, fmt("C(-t) + Cbar(t) off by %.3g", worst_c));
  o.require(worst_s <= tol::kOracle, fmt("S(-t) + S(t) off by %.3g", worst_s));
  if (o.pass) o.detail = fmt("max diffs %.2g / %.2g", worst_c, worst_s);
  return o;
}

Outcome transforms() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_oracle = 0.0, worst_round = 0.0, worst_conj = 0.0;
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      V v(lattice_size(n));
      for (auto& x : v) x = u(rng);
      v[0] = 0.0;
      const auto m = mobius(SetFunction(n, v));
      const auto want = oracle::mobius(n, v);
      const auto back = zeta(m);
      const auto z = zeta(MobiusRepr(n, v));
      const auto zwant = oracle::zeta(n, v);
      for (std::size_t k = 0; k < v.size(); ++k) {
        worst_oracle = std::max({worst_oracle, std::abs(m.values()[k] - want[k]), std::abs(z.values()[k] - zwant[k])});
        worst_round = std::max(worst_round, std::abs(back.values()[k] - v[k]));
      }
      if (n <= 8) {
        const auto c = co_mobius(conjugate(SetFunction(n, v)));
        for (std::uint32_t a = 1; a < v.size(); ++a) {
          worst_conj = std::max(worst_conj, std::abs(c.values()[a] + oracle::parity(a) * want[a]));
        }
      }
    }
  }
  V big(lattice_size(20));
  for (auto& x : big) x = u(rng);
  big[0] = 0.0;
  const SetFunction f(20, std::move(big));
  const auto start = Clock::now();
  const auto m20 = mobius(f);
  const double ms = elapsed_ms(start);
  o.require(worst_oracle <= tol::kTransform, fmt("fast vs naive off by %.3g", worst_oracle));
  o.require(worst_round <= tol::kTransform, fmt("round trip off by %.3g", worst_round));
  o.require(worst_conj <= tol::kTransform, fmt("co-mobius conjugation off by %.3g", worst_conj));
  o.require(m20.size() == lattice_size(20), "n=20 transform has the wrong size");
  o.require(ms < std::chrono::duration<double, std::milli>(budget::kMobius20).count(), fmt("n=20 took %.1f ms", ms));
  if (o.pass) {
    o.detail = fmt("max diffs %.2g / %.2g", worst_oracle, worst_round) + fmt(" / %.2g, n=20 in %.1f ms", worst_conj, ms);
  }
  return o;
}

bool has_negative(const Counterexample& cx) {
  for (const auto& p : cx.points) {
    for (double x : p) {
      if (x < 0.0) return true;
    }
  }
  return false;
}

Outcome property_table() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  std::vector<Capacity> capacities;
  capacities.push_back(make_capacity(2, {0, 0.9, 0.9, 1.0}));
  for (int n : {2, 3, 4}) capacities.push_back(make_capacity(n, oracle::random_capacity(n, rng)));

  AxiomCheckConfig config;  // seed 42, 1000 samples, tol 1e-9
  int checks = 0;
  for (const auto& mu : capacities) {
    const std::string tag = " (n=" + std::to_string(mu.n()) + ")";
    const auto sip = bind_integral(Integral::Sipos, mu);
    for (Axiom a : {Axiom::HE, Axiom::A, Axiom::A1, Axiom::A2, Axiom::M, Axiom::I, Axiom::S1}) {
      ++checks;
      o.require(check_axiom(a, sip, mu, config).passed, "sipos fails " + std::string(to_string(a)) + tag);
    }
    const auto cho = bind_integral(Integral::Choquet, mu);
    for (Axiom a : {Axiom::HE, Axiom::A2, Axiom::M, Axiom::I, Axiom::C1}) {
      ++checks;
      o.require(check_axiom(a, cho, mu, config).passed, "choquet fails " + std::string(to_string(a)) + tag);
    }
    const auto bar = conjugate(mu);
    bool asymmetric = false;
    for (int i = 1; i <= mu.n(); ++i) asymmetric = asymmetric || std::abs(mu[Subset::singleton(i)] - bar[Subset::singleton(i)]) > 1e-9;
    if (asymmetric) {
      ++checks;
      const auto r = check_axiom(Axiom::A1, cho, mu, config);
      o.require(!r.passed, "choquet passes A1" + tag);
      o.require(r.counterexample && has_negative(*r.counterexample), "choquet A1 witness has no negative score" + tag);
    }
    if (!mu.additive()) {
      const auto f = bind_integral(Integral::Mle, mu);
      for (Axiom a : {Axiom::HE, Axiom::A2}) {
        ++checks;
        const auto r = check_axiom(a, f, mu, config);
        o.require(!r.passed && r.counterexample.has_value(), "mle passes " + std::string(to_string(a)) + tag);
      }
    }
    ++checks;
    const auto unit = bind_integral(Integral::Mle, mu, std::nullopt, Domain::UnitCube);
    o.require(check_axiom(Axiom::M, unit, mu, config).passed, "mle on [0,1]^n fails M" + tag);
  }
  if (o.pass) o.detail = std::to_string(checks) + " verdicts over " + std::to_string(capacities.size()) + " capacities";
  return o;
}

Outcome interaction() {
  Outcome o;
  const double lower = interaction_index(make_capacity(2, {0, 0, 0, 1}), Subset::of({1, 2}));
  const double upper = interaction_index(make_capacity(2, {0, 1, 1, 1}), Subset::of({1, 2}));
  o.require(std::abs(lower - 1.0) <= tol::kInteraction, fmt("I({1,2}) = %.17g for the lower extreme", lower));
  o.require(std::abs(upper + 1.0) <= tol::kInteraction, fmt("I({1,2}) = %.17g for the upper extreme", upper));

  std::mt19937_64 rng(kSeed + 6);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double worst_additive = 0.0, worst_eff = 0.0, worst_oracle = 0.0;
  for (int n = 1; n <= 8; ++n) {
    V w(static_cast<std::size_t>(n));
    double total = 0.0;
    for (auto& x : w) total += (x = u(rng));
    V v(lattice_size(n), 0.0);
    for (std::uint32_t a = 0; a < v.size(); ++a) {
      for (int i = 0; i < n; ++i) {
        if ((a >> i) & 1U) v[a] += w[static_cast<std::size_t>(i)] / total;
      }
    }
    v.back() = 1.0;
    const auto additive = make_capacity(n, v);
    for (std::uint32_t a = 1; a < v.size(); ++a) {
      if (std::popcount(a) >= 2) worst_additive = std::max(worst_additive, std::abs(interaction_index(additive, Subset{a})));
    }
    for (int rep = 0; rep < 10; ++rep) {
      const auto rv = oracle::random_capacity(n, rng);
      const auto mu = make_capacity(n, rv);
      const auto phi = shapley(mu);
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        const double naive = oracle::interaction(n, rv, std::uint32_t{1} << i);
        worst_oracle = std::max(worst_oracle, std::abs(phi[static_cast<std::size_t>(i)] - naive));
        sum += phi[static_cast<std::size_t>(i)];
      }
      worst_eff = std::max(worst_eff, std::abs(sum - 1.0));
    }
  }
  o.require(worst_additive <= tol::kInteraction, fmt("additive interaction up to %.3g", worst_additive));
  o.require(worst_eff <= tol::kEfficiency, fmt("Shapley sum off by %.3g", worst_eff));
  o.require(worst_oracle <= tol::kEfficiency, fmt("Shapley vs naive enumerator off by %.3g", worst_oracle));
  if (o.pass) o.detail = fmt("I=+1/-1, additive max %.2g, efficiency max %.2g", worst_additive, worst_eff);
  return o;
}

Outcome four_acts() {
  Outcome o;
  using Levels = std::map<std::string, double, std::less<>>;
  std::vector<UtilityScale> scales{UtilityScale(1, Levels{{"neutral", 0}, {"good", 1}}),
                                   UtilityScale(2, Levels{{"neutral", 0}, {"good", 1}})};
  const AggregationModel model(make_capacity(2, {0, 0.5, 0.5, 1}), scales, Integral::Sipos);
  const std::string n = "neutral", g = "good";
  const std::vector<Act> acts{{"x", {n, n}}, {"y", {n, g}}, {"z", {g, g}}, {"t", {g, n}}};
  const auto r = rank_acts(model, acts);
  std::string order;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k > 0) order += r[k].indifferent_to_previous ? " ~ " : " > ";
    order += r[k].name;
  }
  o.require(order == "z > y ~ t > x", "ranking is " + order);
  const V want{1.0, 0.5, 0.5, 0.0};
  for (std::size_t k = 0; k < r.size() && k < want.size(); ++k) {
    o.require(std::abs(r[k].score - want[k]) <= tol::kExact, "score of " + r[k].name + fmt(" is %.17g", r[k].score));
  }
  const double gap_xy = r[1].score - r[3].score, gap_yz = r[0].score - r[1].score;
  o.require(std::abs(gap_xy - gap_yz) <= tol::kExact, fmt("gaps %.17g vs %.17g", gap_xy, gap_yz));
  if (o.pass) o.detail = order + " with scores 1, 0.5, 0.5, 0";
  return o;
}

Outcome sugeno_variant() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_real_distribution<double> alpha(0.0, 100.0);
  std::uniform_real_distribution<double> signed_score(-10.0, 10.0);
  int probes = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto v = oracle::random_capacity(n, rng);
    const auto mu = make_capacity(n, v);
    const auto mv = ordinal_mobius(mu);
    for (int rep = 0; rep < 20; ++rep) {
      const double a = rep == 0 ? 0.0 : alpha(rng);
      for (std::uint32_t s = 0; s < v.size(); ++s) {
        V t(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
          if ((s >> i) & 1U) t[static_cast<std::size_t>(i)] = a;
        }
        const double got = sugeno_product(mv, t);
        o.require(std::abs(got - a * v[s]) <= tol::kOracle * std::max(1.0, a),
                  "S(alpha 1_A, 0) = " + fmt("%.12g, expected %.12g", got, a * v[s]));
        ++probes;
      }
    }
    for (int i = 0; i < n; ++i) {
      const double a = signed_score(rng);
      V t(static_cast<std::size_t>(n), 0.0);
      t[static_cast<std::size_t>(i)] = a;
      const double want = a * v[std::uint32_t{1} << i];
      const double got = sugeno_product(mv, t);
      o.require(std::abs(got - want) <= tol::kOracle * std::max(1.0, std::abs(a)),
                "single criterion " + fmt("%.12g, expected %.12g", got, want));
      ++probes;
    }
  }
  int cells = 0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double a = (i - 20) / 10.0, b = (j - 20) / 10.0;
      const double got = symmetric_max(a, b);
      double want = 0.0;
      if (std::abs(a) > std::abs(b)) {
        want = a;
      } else if (std::abs(b) > std::abs(a)) {
        want = b;
      } else {
        want = (a == -b) ? 0.0 : a;
      }
      o.require(got == want, fmt("%g (v) %g", a, b) + fmt(" gave %g", got));
      o.require(symmetric_max(a, 0.0) == a, fmt("%g (v) 0 is not the identity", a));
      o.require(symmetric_max(a, -a) == 0.0, fmt("%g (v) -itself is not 0", a));
      ++cells;
    }
  }
  if (o.pass) o.detail = std::to_string(probes) + " extension probes, " + std::to_string(cells) + " grid cells";
  return o;
}

Outcome pseudo_products() {
  Outcome o;
  const auto mn = check_pseudo_product(PseudoProduct::minimum());
  o.require(mn.all_hold, "min violates a condition");
  o.require(mn.min_equivalent, "min is not flagged min-equivalent");
  for (const auto& op : {PseudoProduct::product(), PseudoProduct::lukasiewicz()}) {
    const auto r = check_pseudo_product(op);
    const auto* idem = r.find("a.a=a");
    o.require(idem && !idem->holds, op.name() + " passes a.a=a");
    o.require(idem && idem->witness.size() == 2 && std::abs(idem->got - idem->expected) > 0.0,
              op.name() + " reports no witness");
    o.require(!r.min_equivalent, op.name() + " flagged min-equivalent");
  }
  std::mt19937_64 rng(kSeed + 9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const auto mu = make_capacity(n, oracle::random_capacity(n, rng));
    const auto m = mobius(mu);
    for (int rep = 0; rep < 200; ++rep) {
      V t(static_cast<std::size_t>(n));
      for (auto& x : t) x = u(rng);
      worst = std::max(worst, std::abs(pseudo_product_extension(m, PseudoProduct::minimum(), t) - choquet(mu, t)));
    }
  }
  o.require(worst <= tol::kExtension, fmt("min extension vs choquet off by %.3g", worst));
  if (o.pass) o.detail = fmt("min certified; product and Lukasiewicz rejected; extension max diff %.2g", worst);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"MLE counterexample at (1,1) and (3,3)", mle_counterexample},
      {"permutation and Mobius forms of Choquet and Sipos agree", permutation_matches_mobius},
      {"sign symmetry of Choquet and Sipos", symmetry_identities},
      {"fast transforms, round trip, co-Mobius conjugation, n=20 timing", transforms},
      {"property table reproduced by sampled verification", property_table},
      {"interaction extremes, additivity and Shapley efficiency", interaction},
      {"four-act ranking under equal importance", four_acts},
      {"Sugeno product variant and symmetric maximum", sugeno_variant},
      {"pseudo-product conditions and min extension", pseudo_products},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
