// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <memory>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "tsa/cost_assortment.h"
#include "tsa/errors.h"
#include "tsa/instance.h"
#include "tsa/mnl.h"
#include "tsa/random.h"

namespace tsa {
namespace {

CostMatrix Uniform(const Instance& inst, double g) {
  return CostMatrix::Constant(inst.n, inst.m, g);
}

CostMatrix RandomCosts(const Instance& inst, Rng& rng) {
  CostMatrix gamma(inst.n, inst.m);
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) gamma(i, j) = rng.Uniform(0.0, 0.3);
  }
  return gamma;
}

double BruteForceSubDual(const Instance& inst, int j, const CostMatrix& g) {
  double best = 0.0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << inst.n); ++mask) {
    best = std::max(best, RevCost(inst, j, Subset::FromMask(mask), g));
  }
  return best;
}

TEST(RevCostTest, SubtractsCostsOfOfferedCustomers) {
  const Instance inst = testing::ThreeByTwo();
  CostMatrix gamma = Uniform(inst, 0.0);
  gamma(0, 1) = 0.05;
  gamma(2, 1) = 0.02;
  const Subset C{0, 2};
  EXPECT_DOUBLE_EQ(RevCost(inst, 1, C, gamma),
                   ExpectedRevenue(inst, 1, C) - 0.07);
  EXPECT_THROW(RevCost(inst, 0, C, CostMatrix::Zero(2, 2)),
               std::invalid_argument);
}

TEST(SubDualTest, FixtureValues) {
  const Instance inst = NonSubmodularExample();
  const SubDualResult low = SubDualExact(inst, 0, Uniform(inst, 0.1));
  EXPECT_NEAR(low.value, 2.1333333333333333, 1e-12);
  EXPECT_EQ(low.argmax, Subset({0, 1}));
  const SubDualResult high = SubDualExact(inst, 0, Uniform(inst, 1.0));
  EXPECT_NEAR(high.value, 1.0, 1e-12);
  EXPECT_EQ(high.argmax, Subset({0}));
  // Costs above every revenue leave only the empty set.
  const SubDualResult none = SubDualExact(inst, 0, Uniform(inst, 10.0));
  EXPECT_EQ(none.value, 0.0);
  EXPECT_TRUE(none.argmax.empty());
}

TEST(SubDualTest, ExactMatchesBruteForce) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.UniformInt(1, 8);
    const Instance inst =
        Generate(InstanceKind::kUniformRandom, n, 2, rng.Next());
    const CostMatrix gamma = RandomCosts(inst, rng);
    for (int j = 0; j < inst.m; ++j) {
      const SubDualResult r = SubDualExact(inst, j, gamma);
      EXPECT_NEAR(r.value, BruteForceSubDual(inst, j, gamma), 1e-15);
      EXPECT_DOUBLE_EQ(RevCost(inst, j, r.argmax, gamma), r.value);
      EXPECT_EQ(r.delta, 0.0);
    }
  }
}

TEST(SubDualTest, ThresholdOracleMeetsItsGuarantee) {
  Rng rng(4);
  for (double delta : {0.0, 0.1, 0.5, 0.9}) {
    const ThresholdSubDualOracle oracle(delta);
    for (int trial = 0; trial < 100; ++trial) {
      const Instance inst =
          Generate(InstanceKind::kUniformRandom, 6, 2, rng.Next());
      const CostMatrix gamma = RandomCosts(inst, rng);
      for (int j = 0; j < inst.m; ++j) {
        const double opt = SubDualExact(inst, j, gamma).value;
        const SubDualResult r = OracleCall(oracle, inst, j, gamma);
        EXPECT_GE(r.value, (1.0 - delta) * opt - 1e-15);
        EXPECT_LE(r.value, opt + 1e-15);
        EXPECT_EQ(r.delta, delta);
      }
    }
  }
  EXPECT_THROW(ThresholdSubDualOracle(1.5), std::invalid_argument);
}

TEST(SubDualTest, BestSingletonNeverExceedsOptimum) {
  Rng rng(8);
  const BestSingletonOracle oracle;
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst =
        Generate(InstanceKind::kUniformRandom, 5, 2, rng.Next());
    const CostMatrix gamma = RandomCosts(inst, rng);
    for (int j = 0; j < inst.m; ++j) {
      const SubDualResult r = OracleCall(oracle, inst, j, gamma);
      EXPECT_LE(r.argmax.size(), 1);
      EXPECT_LE(r.value, SubDualExact(inst, j, gamma).value + 1e-15);
      EXPECT_GE(r.value, 0.0);
    }
  }
}

TEST(SubDualTest, FactoryBuildsRequestedOracle) {
  EXPECT_EQ(MakeOracle({})->name(), "exact");
  OracleConfig threshold;
  threshold.kind = OracleConfig::Kind::kThreshold;
  threshold.delta = 0.25;
  const auto t = MakeOracle(threshold);
  EXPECT_EQ(t->name(), "threshold");
  EXPECT_EQ(t->delta(), 0.25);
  OracleConfig single;
  single.kind = OracleConfig::Kind::kBestSingleton;
  EXPECT_EQ(MakeOracle(single)->name(), "best-singleton");
}

// Reports a value that does not match its own set.
class LyingOracle final : public SubDualOracle {
 public:
  SubDualResult Solve(const Instance&, int, const CostMatrix&) const override {
    return {5.0, Subset({0}), 0.0};
  }
  double delta() const override { return 0.0; }
  std::string name() const override { return "lying"; }
};

TEST(SubDualTest, OracleCallRejectsInconsistentReports) {
  const Instance inst = testing::ThreeByTwo();
  EXPECT_THROW(OracleCall(LyingOracle(), inst, 0, Uniform(inst, 0.0)),
               SolverError);
}

}  // namespace
}  // namespace tsa
