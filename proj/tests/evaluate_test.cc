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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "tsa/errors.h"
#include "tsa/evaluate.h"
#include "tsa/instance.h"
#include "tsa/mnl.h"
#include "tsa/random.h"

namespace tsa {
namespace {

TEST(MonteCarloTest, DeterministicAcrossThreadCounts) {
  const Sampler sampler = [](uint64_t seed) {
    Rng rng(seed);
    return rng.Uniform();
  };
  const MonteCarloResult one = MonteCarlo(sampler, 10001, 3, 1);
  const MonteCarloResult four = MonteCarlo(sampler, 10001, 3, 4);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.std_error, four.std_error);
  EXPECT_EQ(one.trials, 10001);
  EXPECT_NEAR(one.mean, 0.5, 4.0 * one.std_error);
  EXPECT_NEAR(one.std_error, std::sqrt(1.0 / 12.0 / 10001), 1e-4);
  EXPECT_NE(MonteCarlo(sampler, 100, 4).mean, MonteCarlo(sampler, 100, 3).mean);
  EXPECT_THROW(MonteCarlo(sampler, 0, 0), std::invalid_argument);
}

TEST(MonteCarloTest, ConstantSamplerHasZeroError) {
  const MonteCarloResult r =
      MonteCarlo([](uint64_t) { return 2.5; }, 50, 0, 2);
  EXPECT_EQ(r.mean, 2.5);
  EXPECT_EQ(r.std_error, 0.0);
}

TEST(DistributionTest, ProductAndPointMassMarginals) {
  const std::vector<double> q = {0.2, 0.7, 1.0};
  const SubsetDistribution D = SubsetDistribution::Product(q);
  double total = 0.0;
  for (const auto& [A, p] : D.support) total += p;
  EXPECT_NEAR(total, 1.0, 1e-15);
  const auto back = D.Marginals(3);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(back[i], q[i], 1e-15);
  const auto point = SubsetDistribution::PointMass(Subset({1})).Marginals(3);
  EXPECT_EQ(point, (std::vector<double>{0.0, 1.0, 0.0}));
}

TEST(DistributionTest, RandomCorrelatedIsNormalized) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const SubsetDistribution D = SubsetDistribution::RandomCorrelated(5, rng);
    EXPECT_GE(D.support.size(), 1u);
    EXPECT_LE(D.support.size(), 8u);
    double total = 0.0;
    for (const auto& [A, p] : D.support) {
      EXPECT_GE(p, 0.0);
      EXPECT_LE(A.Bound(), 5);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(CorrelationGapTest, BoundsAndDegenerateCases) {
  const double e_ratio = std::numbers::e / (std::numbers::e - 1.0);
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const bool uniform = trial % 2 == 1;
    const Instance inst = Generate(uniform ? InstanceKind::kSupplierUniform
                                           : InstanceKind::kUniformRandom,
                                   rng.UniformInt(2, 6), 1, rng.Next());
    const SubsetDistribution D = SubsetDistribution::RandomCorrelated(inst.n, rng);
    const CorrelationGap gap = CorrelationGapCheck(inst, 0, D);
    if (gap.ratio) {
      EXPECT_LE(*gap.ratio, (uniform ? e_ratio : 2.0) + 1e-9);
    }
    const CorrelationGap product = CorrelationGapCheck(
        inst, 0, SubsetDistribution::Product(D.Marginals(inst.n)));
    if (product.ratio) {
      EXPECT_NEAR(*product.ratio, 1.0, 1e-12);
    }
    const CorrelationGap point = CorrelationGapCheck(
        inst, 0, SubsetDistribution::PointMass(D.support.front().first));
    if (point.ratio) {
      EXPECT_NEAR(*point.ratio, 1.0, 1e-12);
    }
  }
}

TEST(CorrelationGapTest, EmptyDistributionHasNoRatio) {
  const Instance inst = testing::ThreeByTwo();
  const CorrelationGap gap =
      CorrelationGapCheck(inst, 0, SubsetDistribution::PointMass(Subset()));
  EXPECT_FALSE(gap.ratio.has_value());
  EXPECT_EQ(gap.correlated, 0.0);
}

TEST(CostShareTest, FixtureShares) {
  const Instance inst = NonSubmodularExample();
  const Subset all{0, 1, 2};
  // Descending revenue order is 0, 1, 2.
  EXPECT_NEAR(CostShare(inst, 0, 0, all), 2.0, 1e-12);
  EXPECT_NEAR(CostShare(inst, 0, 1, all), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(CostShare(inst, 0, 2, all), 0.0, 1e-12);
  EXPECT_EQ(CostShare(inst, 0, 1, Subset({0})), 0.0);
}

TEST(CostShareTest, RandomChecksPass) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = Generate(InstanceKind::kUniformRandom, 8, 1, seed);
    const CheckReport r = CostSharingCheck(inst, 0, 200, seed);
    EXPECT_TRUE(r.passed()) << (r.witnesses.empty() ? "" : r.witnesses[0]);
    EXPECT_EQ(r.checks, 600);
  }
}

TEST(OrderCheckTest, FixtureOrderHoldsAndReverseFails) {
  const Instance inst = NonSubmodularExample();
  EXPECT_TRUE(SubmodularOrderCheckExhaustive(inst, 0, {0, 1, 2}).passed());
  const CheckReport reversed = SubmodularOrderCheckExhaustive(inst, 0, {2, 1, 0});
  EXPECT_FALSE(reversed.passed());
  EXPECT_FALSE(reversed.witnesses.empty());
  const CheckReport plain = SubmodularityCheckExhaustive(inst, 0);
  EXPECT_FALSE(plain.passed());
  EXPECT_THROW(SubmodularOrderCheckExhaustive(inst, 0, {0, 0, 1}),
               PreconditionError);
}

TEST(OrderCheckTest, RandomSameOrderInstancesPass) {
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const Instance inst =
        Generate(InstanceKind::kSameOrderAdditive, 6, 2, seed);
    const std::vector<int> order = *DetectSameOrder(inst);
    for (int j = 0; j < inst.m; ++j) {
      EXPECT_TRUE(SubmodularOrderCheck(inst, j, order, 200, seed).passed());
      EXPECT_TRUE(InterleavedPartitionCheck(inst, j, order, 200, seed).passed());
    }
    if (seed < 2) {
      EXPECT_TRUE(SubmodularOrderCheckExhaustive(inst, 0, order).passed());
    }
  }
}

TEST(InterleavedTest, EmptyTargetHasZeroSlack) {
  const Instance inst = Generate(InstanceKind::kSameOrderAdditive, 5, 1, 1);
  const std::vector<int> order = *DetectSameOrder(inst);
  EXPECT_NEAR(InterleavedPartitionSlack(inst, 0, order, Subset({1, 3}),
                                        Subset()),
              0.0, 1e-15);
}

TEST(CheckReportTest, RecordsWorstAndCapsWitnesses) {
  CheckReport r;
  for (int k = 0; k < 10; ++k) {
    r.Record(k * 0.1, 0.05, [k] { return std::to_string(k); });
  }
  EXPECT_EQ(r.checks, 10);
  EXPECT_EQ(r.violations, 9);
  EXPECT_NEAR(r.worst, 0.9, 1e-15);
  EXPECT_EQ(r.witnesses.size(), 5u);
  EXPECT_FALSE(r.passed());
}

}  // namespace
}  // namespace tsa
