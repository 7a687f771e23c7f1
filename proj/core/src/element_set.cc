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
#include "probing/element_set.hpp"

#include <functional>
#include <string>

#include "probing/errors.hpp"

namespace probing {

ElementSet::ElementSet(std::size_t universe,
                       std::initializer_list<ElementId> members)
    : ElementSet(universe) {
  for (ElementId e : members) insert(e);
}

ElementSet::ElementSet(std::size_t universe, std::span<const ElementId> members)
    : ElementSet(universe) {
  for (ElementId e : members) insert(e);
}

ElementSet ElementSet::All(std::size_t universe) {
  ElementSet s(universe);
  for (ElementId e = 0; e < universe; ++e) s.insert(e);
  return s;
}

ElementSet ElementSet::FromMask(std::size_t universe, std::uint64_t mask) {
  ElementSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void ElementSet::insert(ElementId e) {
  if (e >= universe_) {
    throw DomainError("element " + std::to_string(e) +
                      " outside universe of size " + std::to_string(universe_));
  }
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void ElementSet::erase(ElementId e) {
  if (e >= universe_) return;
  words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

std::vector<ElementId> ElementSet::members() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for_each([&](ElementId e) { out.push_back(e); });
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.universe_ != universe_) throw DomainError("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (other.universe_ != universe_) throw DomainError("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  if (other.universe_ != universe_) throw DomainError("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::uint64_t ElementSet::to_mask() const {
  if (universe_ > 64) throw DomainError("to_mask needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

std::size_t ElementSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace probing
