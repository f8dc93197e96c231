#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"
#include "tensordeg/completion.hpp"
#include "tensordeg/degeneracy.hpp"

using namespace tensordeg;

namespace {

bool report_equal(const SZReport& a, const SZReport& b) {
  if (a.trials != b.trials || a.seed != b.seed || a.sample_bound != b.sample_bound || a.verdict != b.verdict ||
      a.evaluations.size() != b.evaluations.size() || a.hitting_point != b.hitting_point) {
    return false;
  }
  for (std::size_t i = 0; i < a.evaluations.size(); ++i) {
    if (a.evaluations[i].digest != b.evaluations[i].digest || a.evaluations[i].zero != b.evaluations[i].zero) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("template construction", "[completion][template]") {
  const auto tpl = build_template(Format(2, 2, 2));
  CHECK(tpl.target == Format(3, 2, 2));
  CHECK(tpl.target.cells() == 12);
  CHECK(tpl.placement.size() == 8);
  CHECK(tpl.free_count() == 4);
  CHECK(tpl.fixed_cells.empty());
  CHECK_NOTHROW(validate(tpl));
  for (const auto& [from, to] : tpl.placement) CHECK(from == to);  // corner placement

  const auto id = build_template(Format(3, 2, 2));
  CHECK(id.target == Format(3, 2, 2));
  CHECK(id.free_count() == 0);
  CHECK(build_template(Format(2, 3, 2)).free_count() == 0);
  CHECK(build_template(Format(4, 4, 1)).free_count() == 0);
  CHECK(build_template(Format(3, 2, 1)).target == Format(3, 3, 1));
  CHECK(build_template(Format(2, 1, 1)).target == Format(2, 2, 1));

  CHECK_THROWS_AS(build_template(Format(4, 4, 4)), UnsupportedFormat);
  CHECK_THROWS_AS(build_template(Format(9, 9, 1)), UnsupportedFormat);
}

TEST_CASE("template validation", "[completion][template]") {
  auto tpl = build_template(Format(2, 2, 2));
  auto dup = tpl;
  dup.placement[1].second = dup.placement[0].second;
  CHECK_THROWS_AS(validate(dup), InvalidInput);
  auto missing = tpl;
  missing.free_cells.pop_back();
  CHECK_THROWS_AS(validate(missing), InvalidInput);
  auto overlap = tpl;
  overlap.free_cells.push_back(overlap.placement[0].second);
  CHECK_THROWS_AS(validate(overlap), InvalidInput);
  auto outside = tpl;
  outside.free_cells[0] = Cell{5, 0, 0};
  CHECK_THROWS_AS(validate(outside), InvalidInput);
  auto interior = tpl;
  interior.target = Format(3, 3, 3);
  CHECK_THROWS_AS(validate(interior), InvalidInput);
}

TEST_CASE("completion evaluation", "[completion][eval]") {
  const auto tpl = build_template(Format(2, 2, 2));
  const VectorQ zeros = VectorQ::Zero(4);
  CHECK(eval_completion(TensorQ(2, 2, 2), tpl, zeros) == 0);
  CHECK_THROWS_AS(eval_completion(TensorQ(2, 2, 2), tpl, VectorQ::Zero(3)), DimensionError);
  CHECK_THROWS_AS(eval_completion(TensorQ(2, 2, 3), tpl, zeros), DimensionError);

  // A planted witness padded by zeros witnesses the completion with zero free cells.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = degenerate_generator(Format(2, 2, 2), seed);
    const TensorQ full = assemble(s.tensor, tpl, zeros);
    VectorQ x = VectorQ::Zero(3);
    x.head(2) = s.witness.x;
    REQUIRE(verify_tensor_witness(full, WitnessQ{x, s.witness.y, s.witness.z}));
    REQUIRE(eval_completion(s.tensor, tpl, zeros) == 0);
  }

  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const TensorQ t = random_integer_tensor(Format(2, 2, 2), 3, rng);
    VectorQ u(4);
    for (Index i = 0; i < 4; ++i) u(i) = rng.uniform_int(0, 1000);
    const TensorQ full = assemble(t, tpl, u);
    REQUIRE(eval_completion(t, tpl, u) == hyperdet(full).value);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        for (Index k = 0; k < 2; ++k) REQUIRE(full(i, j, k) == t(i, j, k));
    if (eval_completion(t, tpl, u) != 0) {
      REQUIRE(decide(full, SearchConfig{}).outcome == Outcome::infeasible_certified);
    }
  }
  CHECK(completion_degree_bound(tpl) == 6);
  CHECK(point_digest(testing::vec({1, 2})) == point_digest(testing::vec({1, 2})));
  CHECK(point_digest(testing::vec({1, 2})) != point_digest(testing::vec({2, 1})));
  CHECK(point_digest(testing::vec({1, 2})).size() == 16);
}

TEST_CASE("Schwartz-Zippel test", "[completion][sz]") {
  const auto tpl = build_template(Format(2, 2, 2));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = sz_test(TensorQ(2, 2, 2), tpl, 10, 1 << 20, seed);
    CHECK(r.verdict == SZVerdict::all_zero);
    CHECK(r.evaluations.size() == 10);
    CHECK_FALSE(r.hitting_point);
  }
  CHECK_THROWS_AS(sz_test(TensorQ(2, 2, 2), tpl, 0, 1 << 20, 0), InvalidInput);
  CHECK_THROWS_AS(sz_test(TensorQ(2, 2, 2), tpl, 5, 11, 0), InvalidInput);
  CHECK_NOTHROW(sz_test(TensorQ(2, 2, 2), tpl, 1, 12, 0));

  // Inputs certified nondegenerate by the exact decision hit quickly.
  Rng rng(21);
  Index hits_first = 0, tried = 0;
  while (tried < 30) {
    const TensorQ t = random_integer_tensor(Format(3, 2, 1), 3, rng);
    if (decide(t, SearchConfig{}).outcome != Outcome::infeasible_certified) continue;
    ++tried;
    const auto ct = build_template(Format(3, 2, 1));
    const auto r = sz_test(t, ct, 20, 1 << 20, static_cast<std::uint64_t>(tried));
    REQUIRE(r.verdict == SZVerdict::hitting_point_found);
    REQUIRE(r.hitting_point);
    REQUIRE(eval_completion(t, ct, *r.hitting_point) != 0);
    REQUIRE(r.evaluations.back().zero == false);
    hits_first += r.evaluations.size() == 1 ? 1 : 0;
  }
  CHECK(hits_first >= 25);

  const TensorQ t = random_integer_tensor(Format(2, 2, 2), 3, rng);
  CHECK(report_equal(sz_test(t, tpl, 20, 1 << 20, 7), sz_test(t, tpl, 20, 1 << 20, 7)));
}

TEST_CASE("identity templates reduce to the hyperdeterminant", "[completion][sz]") {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const TensorQ t = trial % 3 == 0 ? degenerate_generator(Format(3, 2, 2), static_cast<std::uint64_t>(trial)).tensor
                                     : random_integer_tensor(Format(3, 2, 2), 1, rng);
    const auto tpl = build_template(Format(3, 2, 2));
    const bool zero = hyperdet(t).value == 0;
    REQUIRE((sz_test(t, tpl, 3, 12, 0).verdict == SZVerdict::all_zero) == zero);
    for (auto s : {HittingStrategy::zeros, HittingStrategy::unit_points, HittingStrategy::coordinate_ramp}) {
      const auto p = hitting_attempt(t, tpl, s);
      REQUIRE(p.has_value() == !zero);
      if (p) REQUIRE(p->size() == 0);
    }
  }
}

TEST_CASE("hitting strategies", "[completion][hitting]") {
  const auto tpl = build_template(Format(2, 2, 2));
  for (auto s : {HittingStrategy::zeros, HittingStrategy::unit_points, HittingStrategy::coordinate_ramp}) {
    CHECK_FALSE(hitting_attempt(TensorQ(2, 2, 2), tpl, s));
    CHECK(parse_hitting_strategy(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_hitting_strategy("spiral"), InvalidInput);

  Rng rng(13);
  Index ramp_hits = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const TensorQ t = random_integer_tensor(Format(2, 2, 2), 3, rng);
    for (auto s : {HittingStrategy::zeros, HittingStrategy::unit_points, HittingStrategy::coordinate_ramp}) {
      if (const auto p = hitting_attempt(t, tpl, s)) {
        REQUIRE(eval_completion(t, tpl, *p) != 0);
        ramp_hits += s == HittingStrategy::coordinate_ramp ? 1 : 0;
        // A deterministic hit implies the PIT harness also reports a point.
        REQUIRE(completion_pit(t, tpl, PitBudget{}).outcome == PitOutcome::nonzero_with_point);
      }
    }
  }
  CHECK(ramp_hits > 0);
}

TEST_CASE("completion PIT", "[completion][pit]") {
  const auto tpl = build_template(Format(2, 2, 2));
  const auto z = completion_pit(TensorQ(2, 2, 2), tpl, PitBudget{});
  CHECK(z.outcome == PitOutcome::identically_zero_up_to_budget);
  CHECK_FALSE(z.point);
  REQUIRE(z.sz);
  CHECK(z.sz->verdict == SZVerdict::all_zero);

  Rng rng(3);
  std::set<std::string> origins;
  for (int trial = 0; trial < 40; ++trial) {
    const TensorQ t = random_integer_tensor(Format(2, 2, 2), 3, rng);
    const auto r = completion_pit(t, tpl, PitBudget{});
    if (r.outcome == PitOutcome::nonzero_with_point) {
      REQUIRE(r.point);
      REQUIRE(eval_completion(t, tpl, *r.point) != 0);
      origins.insert(r.found_by);
    }
  }
  CHECK_FALSE(origins.empty());
  CHECK(to_string(PitOutcome::identically_zero_up_to_budget) == std::string("identically_zero_up_to_budget"));
}
