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

#ifndef PROBING_ELEMENT_SET_HPP_
#define PROBING_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace probing {

// Dense index of an element in a universe [0, |V|).
using ElementId = std::size_t;

// Fixed-universe bitset. Ordering and equality compare the universe size
// first, so sets over different universes never compare equal.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<ElementId> members);
  ElementSet(std::size_t universe, std::span<const ElementId> members);

  static ElementSet All(std::size_t universe);
  static ElementSet FromMask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }

  bool contains(ElementId e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
  }
  // Throws DomainError when e is outside the universe.
  void insert(ElementId e);
  void erase(ElementId e);

  std::size_t size() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  ElementSet with(ElementId e) const {
    ElementSet out = *this;
    out.insert(e);
    return out;
  }
  ElementSet without(ElementId e) const {
    ElementSet out = *this;
    out.erase(e);
    return out;
  }

  // Members in ascending order.
  std::vector<ElementId> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  // Set difference.
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool is_subset_of(const ElementSet& other) const;

  // Requires universe() <= 64.
  std::uint64_t to_mask() const;

  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet&,
                                          const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace probing

#endif  // PROBING_ELEMENT_SET_HPP_
