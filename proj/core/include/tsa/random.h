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

#ifndef TSA_RANDOM_H_
#define TSA_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>

namespace tsa {

// Seed for trial `index` of a run keyed by `master`. Independent of
// scheduling, so parallel and serial runs draw identical streams.
uint64_t DeriveSeed(uint64_t master, uint64_t index);

// Thin wrapper over std::mt19937_64. The real-valued draws are computed from
// raw engine output rather than std::uniform_real_distribution so streams are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform on [0, 1).
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // log-uniform on [lo, hi], lo > 0.
  double LogUniform(double lo, double hi);
  // Uniform integer in [lo, hi].
  int UniformInt(int lo, int hi);
  bool Bernoulli(double p) { return Uniform() < p; }
  // Index drawn proportionally to `weights` (nonnegative, positive sum).
  int Categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tsa

#endif  // TSA_RANDOM_H_
