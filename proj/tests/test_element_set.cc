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
#include <doctest.h>

#include "probing/element_set.hpp"
#include "probing/errors.hpp"

using probing::ElementSet;

TEST_CASE("insert, erase and membership") {
  ElementSet s(70);
  s.insert(3);
  s.insert(69);
  CHECK(s.contains(3));
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(4));
  CHECK(s.size() == 2);
  s.erase(3);
  CHECK(s.members() == std::vector<probing::ElementId>{69});
  CHECK_THROWS_AS(s.insert(70), probing::DomainError);
}

TEST_CASE("set algebra") {
  const ElementSet a(8, {0, 1, 2});
  const ElementSet b(8, {2, 3});
  CHECK((a | b).members() == std::vector<probing::ElementId>{0, 1, 2, 3});
  CHECK((a & b).members() == std::vector<probing::ElementId>{2});
  CHECK((a - b).members() == std::vector<probing::ElementId>{0, 1});
  CHECK((a & b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
}

TEST_CASE("mask round trip") {
  for (std::uint64_t m : {0ull, 1ull, 0b101101ull, (1ull << 40) - 1}) {
    CHECK(ElementSet::FromMask(41, m).to_mask() == m);
  }
}

TEST_CASE("different universes never compare equal") {
  CHECK(ElementSet(3) != ElementSet(4));
  CHECK(ElementSet(3, {1}) == ElementSet(3, {1}));
  CHECK(ElementSet(3, {0}) < ElementSet(3, {1}));
}
