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

#include "tsa/subset.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

namespace tsa {

Subset::Subset(std::initializer_list<int> items)
    : Subset(std::vector<int>(items)) {}

Subset::Subset(std::vector<int> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  if (!items_.empty() && items_.front() < 0) {
    throw std::invalid_argument("Subset: negative index");
  }
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
    throw std::invalid_argument("Subset: repeated index");
  }
}

Subset Subset::FromMask(uint64_t mask) {
  Subset s;
  s.items_.reserve(std::popcount(mask));
  while (mask != 0) {
    s.items_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

Subset Subset::Range(int n) {
  Subset s;
  s.items_.resize(n);
  for (int i = 0; i < n; ++i) s.items_[i] = i;
  return s;
}

uint64_t Subset::ToMask() const {
  uint64_t mask = 0;
  for (int i : items_) {
    if (i >= 64) throw std::out_of_range("Subset::ToMask: index >= 64");
    mask |= uint64_t{1} << i;
  }
  return mask;
}

bool Subset::Contains(int i) const {
  return std::binary_search(items_.begin(), items_.end(), i);
}

bool Subset::IsSubsetOf(const Subset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

Subset Subset::With(int i) const {
  if (i < 0) throw std::invalid_argument("Subset::With: negative index");
  Subset s = *this;
  auto it = std::lower_bound(s.items_.begin(), s.items_.end(), i);
  if (it == s.items_.end() || *it != i) s.items_.insert(it, i);
  return s;
}

Subset Subset::Without(int i) const {
  Subset s = *this;
  auto it = std::lower_bound(s.items_.begin(), s.items_.end(), i);
  if (it != s.items_.end() && *it == i) s.items_.erase(it);
  return s;
}

Subset Subset::Union(const Subset& other) const {
  Subset s;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(s.items_));
  return s;
}

Subset Subset::Intersect(const Subset& other) const {
  Subset s;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(s.items_));
  return s;
}

Subset Subset::Minus(const Subset& other) const {
  Subset s;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(s.items_));
  return s;
}

std::string Subset::ToString() const {
  std::string out = "{";
  for (size_t k = 0; k < items_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(items_[k]);
  }
  out += "}";
  return out;
}

bool SizeThenLexLess(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace tsa
