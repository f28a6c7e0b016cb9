#include <doctest.h>

#include "nonadd/model.hpp"

using namespace nonadd;

namespace {

std::vector<UtilityScale> two_scales() {
  std::vector<UtilityScale> s;
  for (int i = 1; i <= 2; ++i) s.emplace_back(i, std::map<std::string, double, std::less<>>{{"bad", -1}, {"neutral", 0}, {"good", 1}});
  return s;
}

std::vector<Act> four_acts() {
  return {{"x", {std::string("neutral"), std::string("neutral")}},
          {"y", {std::string("neutral"), std::string("good")}},
          {"z", {std::string("good"), std::string("good")}},
          {"t", {std::string("good"), std::string("neutral")}}};
}

std::vector<std::string> names(const std::vector<RankedAct>& r) {
  std::vector<std::string> out;
  for (const auto& a : r) out.push_back(a.name);
  return out;
}

}  // namespace

TEST_CASE("utility scales need the two anchor levels") {
  using Levels = std::map<std::string, double, std::less<>>;
  CHECK_THROWS_AS(UtilityScale(1, Levels{{"good", 1}}), InvalidArgument);
  CHECK_THROWS_AS(UtilityScale(1, Levels{{"neutral", 0}, {"good", 2}}), InvalidArgument);
  const UtilityScale s(1, Levels{{"neutral", 0}, {"good", 1}, {"great", 1.5}});
  CHECK(s.utility("great") == 1.5);
  CHECK_THROWS_AS(s.utility("awful"), UnknownLevel);
}

TEST_CASE("capacity from binary acts") {
  std::map<Subset, double> ok{{Subset{}, 0}, {Subset::of({1}), .3}, {Subset::of({2}), .6}, {Subset::of({1, 2}), 1}};
  CHECK(capacity_from_binary_acts(2, ok)[Subset::of({2})] == 0.6);

  auto zero = ok;
  zero[Subset::of({1})] = 0.0;
  try {
    capacity_from_binary_acts(2, zero);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.diagnostic().kind == CapacityDiagnostic::Kind::NonPositiveSingleton);
    CHECK(e.diagnostic().criterion == 1);
  }

  auto shifted = ok;
  shifted[Subset{}] = 0.1;
  try {
    capacity_from_binary_acts(2, shifted);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.diagnostic().kind == CapacityDiagnostic::Kind::NotNormalized);
  }

  auto missing = ok;
  missing.erase(Subset::of({2}));
  CHECK_THROWS_AS(capacity_from_binary_acts(2, missing), InvalidArgument);
}

TEST_CASE("evaluating acts") {
  const auto mu = make_capacity(2, {0, 0.3, 0.6, 1});
  const AggregationModel model(mu, two_scales(), Integral::Sipos);
  CHECK(evaluate_act(model, {"", {std::string("neutral"), std::string("neutral")}}) == 0.0);
  CHECK(evaluate_act(model, {"", {std::string("good"), std::string("good")}}) == doctest::Approx(1.0));
  CHECK(evaluate_act(model, {"", {std::string("good"), std::string("neutral")}}) == doctest::Approx(0.3));
  CHECK(evaluate_act(model, {"", {std::string("neutral"), std::string("good")}}) == doctest::Approx(0.6));
  CHECK(evaluate_act(model, {"", {std::string("bad"), 0.5}}) == doctest::Approx(-0.3 + 0.3));
  CHECK_THROWS_AS(evaluate_act(model, {"", {std::string("good")}}), DimensionMismatch);
  CHECK_THROWS_AS(evaluate_act(model, {"", {std::string("good"), std::string("meh")}}), UnknownLevel);
}

TEST_CASE("model construction checks") {
  CHECK_THROWS_AS(AggregationModel(make_capacity(2, {0, 0, 1, 1}), two_scales(), Integral::Sipos), CapacityError);
  auto one = two_scales();
  one.pop_back();
  CHECK_THROWS_AS(AggregationModel(make_capacity(2, {0, .5, .5, 1}), one, Integral::Sipos), DimensionMismatch);
  CHECK_THROWS_AS(AggregationModel(make_capacity(2, {0, .5, .5, 1}), two_scales(), Integral::Cpt), InvalidArgument);
}

TEST_CASE("four acts with equally important criteria") {
  const AggregationModel model(make_capacity(2, {0, .5, .5, 1}), two_scales(), Integral::Sipos);
  const auto r = rank_acts(model, four_acts());
  CHECK(names(r) == std::vector<std::string>{"z", "y", "t", "x"});
  CHECK(r[0].score == doctest::Approx(1.0));
  CHECK(r[1].score == doctest::Approx(0.5));
  CHECK(r[2].score == doctest::Approx(0.5));
  CHECK(r[3].score == doctest::Approx(0.0));
  CHECK_FALSE(r[1].indifferent_to_previous);
  CHECK(r[2].indifferent_to_previous);
  CHECK_FALSE(r[3].indifferent_to_previous);
  CHECK(r[1].score - r[3].score == doctest::Approx(r[0].score - r[1].score));
}

TEST_CASE("four acts with substitutive criteria") {
  const AggregationModel model(make_capacity(2, {0, 1, 1, 1}), two_scales(), Integral::Sipos);
  const auto r = rank_acts(model, four_acts());
  CHECK(names(r) == std::vector<std::string>{"y", "z", "t", "x"});
  CHECK(r[1].indifferent_to_previous);
  CHECK(r[2].indifferent_to_previous);
  CHECK(r[2].score == doctest::Approx(1.0));
}

TEST_CASE("ranking edge cases") {
  const AggregationModel model(make_capacity(2, {0, .5, .5, 1}), two_scales(), Integral::Sipos);
  const std::vector<Act> single{{"only", {0.2, 0.4}}};
  const auto r = rank_acts(model, single);
  REQUIRE(r.size() == 1);
  CHECK(r[0].name == "only");
  CHECK_FALSE(r[0].indifferent_to_previous);
  CHECK_THROWS_AS(rank_acts(model, std::vector<Act>{}), InvalidArgument);
}
