#include <doctest.h>

#include "stanley/parse.hpp"
#include "stanley/solver.hpp"
#include "stanley/transforms.hpp"
#include "support.hpp"

using namespace stanley;

namespace {

StanleySpace space(std::vector<int> u, std::vector<int> vars_1based) {
  std::vector<int> z;
  for (int v : vars_1based) z.push_back(v - 1);
  return StanleySpace{ExponentVector(std::move(u)), std::move(z)};
}

// x_j appears in exactly one generator; everything else avoids x_j.
MonomialIdeal random_distinguished(std::mt19937_64& r, int n, int var, int exp) {
  for (;;) {
    std::vector<int> carrier(n, 0);
    carrier[var] = exp;
    for (int j = 0; j < n; ++j)
      if (j != var) carrier[j] = testsupport::draw(r, 0, 2);
    std::vector<ExponentVector> gens{ExponentVector(carrier)};
    int extra = testsupport::draw(r, 0, 2);
    for (int i = 0; i < extra; ++i) {
      std::vector<int> entries(n, 0);
      for (int j = 0; j < n; ++j)
        if (j != var) entries[j] = testsupport::draw(r, 0, 2);
      ExponentVector candidate(entries);
      if (!candidate.is_zero()) gens.push_back(candidate);
    }
    MonomialIdeal ideal(n, gens);
    int carriers = 0;
    bool kept = false;
    for (const ExponentVector& g : ideal.generators())
      if (g[var] > 0) {
        ++carriers;
        kept = g[var] == exp;
      }
    if (carriers == 1 && kept) return ideal;
  }
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("radical chain strips one exponent per step") {
  std::vector<ReductionStep> chain = radical_reduction_chain(parse_ideal("(x1^3,x2^2)"));
  REQUIRE(chain.size() == 3);
  CHECK(chain[0].variable == 0);
  CHECK(render(chain[0].after) == "(x1^2,x2^2)");
  CHECK(render(chain[1].after) == "(x1,x2^2)");
  CHECK(render(chain[2].after) == "(x1,x2)");
  CHECK(chain[2].after == radical(parse_ideal("(x1^3,x2^2)")));

  CHECK(radical_reduction_chain(parse_ideal("(x1,x2)")).empty());
  CHECK_THROWS_AS(radical_reduction_chain(parse_ideal("(x1*x2,x2*x3)")),
                  std::invalid_argument);
}

TEST_CASE("lift moves a certificate to the raised ideal, preserving min rho") {
  MonomialIdeal ideal = parse_ideal("(x1,x2)");
  SdepthOutcome outcome = sdepth_exact(ideal);
  REQUIRE(outcome.is_exact());
  TransformedPartition lifted = lift_partition(ideal, outcome.exact->certificate, 0);
  CHECK(render(lifted.ideal) == "(x1^2,x2)");
  CHECK(min_rho(lifted.partition) == min_rho(outcome.exact->certificate));
  CHECK(lifted.dropped_empty == 0);

  // frozen endpoint arithmetic for the singleton certificate of (x1,x2)
  IntervalPartition start{ExponentVector({1, 1}),
                          {{ExponentVector({1, 0}), ExponentVector({1, 0})},
                           {ExponentVector({0, 1}), ExponentVector({1, 1})}}};
  TransformedPartition moved = lift_partition(ideal, start, 0);
  CHECK(moved.partition.intervals[0].c == ExponentVector({2, 0}));
  CHECK(moved.partition.intervals[0].d == ExponentVector({2, 0}));
  CHECK(moved.partition.intervals[1].c == ExponentVector({0, 1}));
  CHECK(moved.partition.intervals[1].d == ExponentVector({2, 1}));
}

TEST_CASE("lower inverts lift and may drop emptied intervals") {
  MonomialIdeal raised = parse_ideal("(x1^2,x2)");
  IntervalPartition partition{ExponentVector({2, 1}),
                              {{ExponentVector({0, 1}), ExponentVector({0, 1})},
                               {ExponentVector({1, 1}), ExponentVector({1, 1})},
                               {ExponentVector({2, 0}), ExponentVector({2, 1})}}};
  TransformedPartition lowered = lower_partition(raised, partition, 0);
  CHECK(render(lowered.ideal) == "(x1,x2)");
  CHECK(lowered.dropped_empty == 1);  // [(1,1),(1,1)] collapses
  REQUIRE(lowered.partition.intervals.size() == 2);
  CHECK(lowered.partition.intervals[0].c == ExponentVector({0, 1}));
  CHECK(lowered.partition.intervals[1].c == ExponentVector({1, 0}));
  CHECK(lowered.partition.intervals[1].d == ExponentVector({1, 1}));

  CHECK_THROWS_AS(lower_partition(parse_ideal("(x1,x2)"), lowered.partition, 0),
                  std::invalid_argument);  // exponent already 1
}

TEST_CASE("lift and lower round-trip on seeded distinguished ideals") {
  auto r = testsupport::rng(501);
  for (int trial = 0; trial < 60; ++trial) {
    int n = testsupport::draw(r, 1, 3);
    int var = testsupport::draw(r, 0, n - 1);
    int exp = testsupport::draw(r, 1, 3);
    MonomialIdeal ideal = random_distinguished(r, n, var, exp);
    SdepthOutcome outcome = sdepth_exact(ideal);
    REQUIRE(outcome.is_exact());
    const IntervalPartition& certificate = outcome.exact->certificate;

    TransformedPartition lifted = lift_partition(ideal, certificate, var);
    CHECK(min_rho(lifted.partition) == min_rho(certificate));
    TransformedPartition back = lower_partition(lifted.ideal, lifted.partition, var);
    CHECK(back.ideal == ideal);
    CHECK(back.partition.intervals == certificate.intervals);
    CHECK(back.dropped_empty == 0);

    // lowering an arbitrary certificate of the raised ideal never loses rho
    SdepthOutcome raised = sdepth_exact(lifted.ideal);
    REQUIRE(raised.is_exact());
    TransformedPartition lowered =
        lower_partition(lifted.ideal, raised.exact->certificate, var);
    CHECK(min_rho(lowered.partition) >= min_rho(raised.exact->certificate));
  }
}

TEST_CASE("lift rejects ideals without a distinguished generator") {
  MonomialIdeal shared = parse_ideal("(x1*x2, x2*x3)");
  SdepthOutcome outcome = sdepth_exact(shared);
  CHECK_THROWS_AS(lift_partition(shared, outcome.exact->certificate, 1),
                  std::invalid_argument);
  MonomialIdeal absent = parse_ideal("(x1)", 2);
  SdepthOutcome other = sdepth_exact(absent);
  CHECK_THROWS_AS(lift_partition(absent, other.exact->certificate, 1),
                  std::invalid_argument);
}

TEST_CASE("projection reproduces the two-variable example") {
  MonomialIdeal extended = parse_ideal("(x1, x2*x3)");
  StanleyDecomposition dprime{3,
                              {space({0, 1, 1}, {1, 2, 3}), space({1, 0, 0}, {1, 3}),
                               space({1, 1, 0}, {1, 2})}};
  REQUIRE(verify_decomposition(extended, dprime).valid());
  CHECK(dprime.sdepth() == 2);
  TransformedDecomposition projected = project_decomposition(extended, dprime);
  CHECK(render(projected.ideal) == "(x1,x2)");
  REQUIRE(projected.decomposition.spaces.size() == 2);
  CHECK(projected.decomposition.spaces[0] == space({0, 1}, {1, 2}));
  CHECK(projected.decomposition.spaces[1] == space({1, 0}, {1}));
  CHECK(projected.decomposition.sdepth() == 1);
}

TEST_CASE("projection rejects pure powers of the dropped variable") {
  MonomialIdeal bad = parse_ideal("(x1, x2^2)");
  SdepthOutcome outcome = sdepth_exact(bad);
  StanleyDecomposition decomposition =
      partition_to_decomposition(outcome.exact->certificate);
  CHECK_THROWS_AS(project_decomposition(bad, decomposition), std::invalid_argument);
}

TEST_CASE("solver decompositions always survive projection") {
  auto r = testsupport::rng(502);
  for (int trial = 0; trial < 40; ++trial) {
    int n = testsupport::draw(r, 2, 4);
    MonomialIdeal ideal = testsupport::random_ideal(r, n, 3, 2);
    ExponentVector g = lcm_exponent(ideal);
    if (g[n - 1] == 0) continue;  // last variable unused, nothing to project
    bool pure_power = false;
    for (const ExponentVector& gen : ideal.generators())
      if (gen.support() == std::vector<int>{n - 1}) pure_power = true;
    if (pure_power) continue;
    SdepthOutcome outcome = sdepth_exact(ideal);
    REQUIRE(outcome.is_exact());
    StanleyDecomposition decomposition =
        partition_to_decomposition(outcome.exact->certificate);
    TransformedDecomposition projected = project_decomposition(ideal, decomposition);
    SdepthOutcome image = sdepth_exact(projected.ideal);
    REQUIRE(image.is_exact());
    CHECK(outcome.exact->value <= image.exact->value + 1);
  }
}

TEST_CASE("extending by a fresh variable raises sdepth by one") {
  MonomialIdeal ideal = parse_ideal("(x1,x2)");
  StanleyDecomposition d{2, {space({0, 1}, {1, 2}), space({1, 0}, {1})}};
  REQUIRE(verify_decomposition(ideal, d).valid());
  TransformedDecomposition extended = extend_decomposition(ideal, d);
  CHECK(extended.ideal.var_count() == 3);
  CHECK(render(extended.ideal) == "(x1,x2)");
  CHECK(extended.decomposition.sdepth() == d.sdepth() + 1);
  REQUIRE(extended.decomposition.spaces.size() == 2);
  CHECK(extended.decomposition.spaces[0] == space({0, 1, 0}, {1, 2, 3}));
  CHECK(extended.decomposition.spaces[1] == space({1, 0, 0}, {1, 3}));

  // and the invariant holds at the level of sdepth itself
  SdepthOutcome before = sdepth_exact(ideal);
  SdepthOutcome after = sdepth_exact(extended.ideal);
  CHECK(after.exact->value == before.exact->value + 1);
}

TEST_CASE("sdepth is invariant under taking radicals of complete intersections") {
  auto r = testsupport::rng(503);
  for (int trial = 0; trial < 20; ++trial) {
    int n = testsupport::draw(r, 1, 4);
    MonomialIdeal ideal = testsupport::random_ci(r, n, 3);
    SdepthOutcome full = sdepth_exact(ideal);
    SdepthOutcome rad = sdepth_exact(radical(ideal));
    REQUIRE(full.is_exact());
    REQUIRE(rad.is_exact());
    CHECK(full.exact->value == rad.exact->value);
  }
}

}  // TEST_SUITE
