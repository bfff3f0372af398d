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

#ifndef TSA_SUBSET_H_
#define TSA_SUBSET_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tsa {

// A set of agent indices from one side of the platform, stored sorted and
// duplicate-free. Indices are 0-based.
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<int> items);
  // Sorts `items`. Throws std::invalid_argument on negative or repeated
  // indices.
  explicit Subset(std::vector<int> items);

  static Subset FromMask(uint64_t mask);
  static Subset Range(int n);  // {0, ..., n-1}

  // Requires every index < 64.
  uint64_t ToMask() const;

  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  bool Contains(int i) const;
  bool IsSubsetOf(const Subset& other) const;
  // Largest index + 1, or 0 when empty.
  int Bound() const { return items_.empty() ? 0 : items_.back() + 1; }

  Subset With(int i) const;
  Subset Without(int i) const;
  Subset Union(const Subset& other) const;
  Subset Intersect(const Subset& other) const;
  Subset Minus(const Subset& other) const;

  const std::vector<int>& items() const { return items_; }
  std::vector<int>::const_iterator begin() const { return items_.begin(); }
  std::vector<int>::const_iterator end() const { return items_.end(); }
  int operator[](int k) const { return items_[k]; }

  std::string ToString() const;

  friend bool operator==(const Subset& a, const Subset& b) = default;
  // Lexicographic on the sorted index lists.
  friend auto operator<=>(const Subset& a, const Subset& b) = default;

 private:
  std::vector<int> items_;
};

// Tie-break order used wherever a deterministic choice among equally good
// sets is needed: smaller sets first, then lexicographic.
bool SizeThenLexLess(const Subset& a, const Subset& b);

}  // namespace tsa

#endif  // TSA_SUBSET_H_
