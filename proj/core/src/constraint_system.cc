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
#include "probing/constraint_system.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "probing/errors.hpp"

namespace probing {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // False when a and b were already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

void check_universe(const ElementSet& s, std::size_t universe) {
  if (s.universe() != universe) {
    throw DomainError("element set over universe " +
                      std::to_string(s.universe()) +
                      " used with a system over universe " +
                      std::to_string(universe));
  }
}

std::size_t count_in(const ElementSet& s, const std::vector<ElementId>& part) {
  std::size_t n = 0;
  for (ElementId e : part) n += s.contains(e) ? 1 : 0;
  return n;
}

double sum_over(std::span<const double> x, const ElementSet& s) {
  double total = 0.0;
  s.for_each([&](ElementId e) { total += x[e]; });
  return total;
}

void check_members(std::size_t universe,
                   const std::vector<std::vector<ElementId>>& sets,
                   const char* what) {
  for (const auto& set : sets) {
    std::vector<ElementId> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DomainError(std::string(what) + " lists an element twice");
    }
    for (ElementId e : set) {
      if (e >= universe) {
        throw DomainError(std::string(what) + " element " + std::to_string(e) +
                          " outside universe of size " +
                          std::to_string(universe));
      }
    }
  }
}

// Tracks the most violated witness seen so far.
struct BestWitness {
  std::optional<SubsetWitness> witness;
  double violation = kSeparationTolerance;

  void offer(const ElementSet& members, double value, double bound) {
    if (value - bound > violation) {
      violation = value - bound;
      witness = SubsetWitness{members, value, bound};
    }
  }
  void offer(std::optional<SubsetWitness> w) {
    if (w) offer(w->members, w->value, w->bound);
  }
};

// Edmonds-Karp on a dense residual matrix; cap is modified in place.
double max_flow(std::vector<double>& cap, std::size_t n, std::size_t source,
                std::size_t sink) {
  constexpr double kEps = 1e-12;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  double flow = 0.0;
  std::vector<std::size_t> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), kNone);
    parent[source] = source;
    std::queue<std::size_t> queue;
    queue.push(source);
    while (!queue.empty() && parent[sink] == kNone) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == kNone && cap[u * n + v] > kEps) {
          parent[v] = u;
          queue.push(v);
        }
      }
    }
    if (parent[sink] == kNone) break;
    double bottleneck = std::numeric_limits<double>::infinity();
    for (std::size_t v = sink; v != source; v = parent[v]) {
      bottleneck = std::min(bottleneck, cap[parent[v] * n + v]);
    }
    for (std::size_t v = sink; v != source; v = parent[v]) {
      cap[parent[v] * n + v] -= bottleneck;
      cap[v * n + parent[v]] += bottleneck;
    }
    flow += bottleneck;
  }
  return flow;
}

// Forest-polytope separation: for every root r, a min cut finds the vertex
// set U containing r that maximizes x(E(U)) - |U| + 1.
std::optional<SubsetWitness> separate_graphic(const GraphicMatroid& g,
                                              const ConstraintSystem& self,
                                              std::span<const double> x) {
  const std::size_t universe = g.edges.size();
  BestWitness best;
  for (ElementId e = 0; e < universe; ++e) {
    if (g.edges[e].first == g.edges[e].second) {
      best.offer(ElementSet(universe, {e}), x[e], 0.0);
    }
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> local(g.num_vertices, kNone);
  std::vector<std::size_t> global;
  for (ElementId e = 0; e < universe; ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v || x[e] <= kSeparationTolerance) continue;
    for (std::size_t w : {u, v}) {
      if (local[w] == kNone) {
        local[w] = global.size();
        global.push_back(w);
      }
    }
  }
  const std::size_t count = global.size();
  if (count == 0) return best.witness;

  const std::size_t n = count + 2;
  const std::size_t source = count;
  const std::size_t sink = count + 1;
  std::vector<double> base(n * n, 0.0);
  std::vector<double> degree(count, 0.0);
  for (ElementId e = 0; e < universe; ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v || x[e] <= kSeparationTolerance) continue;
    const std::size_t a = local[u];
    const std::size_t b = local[v];
    base[a * n + b] += x[e] / 2.0;
    base[b * n + a] += x[e] / 2.0;
    degree[a] += x[e];
    degree[b] += x[e];
  }
  double total_degree = 0.0;
  for (std::size_t a = 0; a < count; ++a) {
    base[source * n + a] = degree[a] / 2.0;
    base[a * n + sink] = 1.0;
    total_degree += degree[a];
  }

  std::vector<char> in_cut(count);
  for (std::size_t root = 0; root < count; ++root) {
    std::vector<double> cap = base;
    cap[source * n + root] = std::numeric_limits<double>::max() / 4;
    const double flow = max_flow(cap, n, source, sink);
    if (total_degree / 2.0 + 1.0 - flow <= best.violation) continue;

    std::fill(in_cut.begin(), in_cut.end(), 0);
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> queue;
    queue.push(source);
    seen[source] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v] && cap[u * n + v] > 1e-12) {
          seen[v] = 1;
          queue.push(v);
        }
      }
    }
    ElementSet members(universe);
    for (ElementId e = 0; e < universe; ++e) {
      const auto [u, v] = g.edges[e];
      if (local[u] != kNone && local[v] != kNone && seen[local[u]] &&
          seen[local[v]]) {
        members.insert(e);
      }
    }
    best.offer(members, sum_over(x, members),
               static_cast<double>(self.rank(members)));
  }
  return best.witness;
}

std::size_t exact_max_independent(const ConstraintSystem& sys,
                                  const ElementSet& s) {
  const std::vector<ElementId> elems = s.members();
  std::size_t best = sys.greedy_basis(s).size();
  ElementSet current(sys.universe_size());
  std::function<void(std::size_t, std::size_t)> search =
      [&](std::size_t i, std::size_t size) {
        if (size + (elems.size() - i) <= best) return;
        if (i == elems.size()) {
          best = size;
          return;
        }
        if (sys.can_add(current, elems[i])) {
          current.insert(elems[i]);
          search(i + 1, size + 1);
          current.erase(elems[i]);
        }
        search(i + 1, size);
      };
  search(0, 0);
  return best;
}

std::size_t explicit_rank(const ExplicitFamily& f, const ElementSet& s) {
  std::size_t best = 0;
  for (const ElementSet& set : f.independent_sets) {
    if (set.is_subset_of(s)) best = std::max(best, set.size());
  }
  return best;
}

int explicit_k(const ExplicitFamily& f, std::size_t universe) {
  std::vector<std::uint64_t> masks;
  masks.reserve(f.independent_sets.size());
  for (const ElementSet& s : f.independent_sets) masks.push_back(s.to_mask());
  std::vector<char> member(std::size_t{1} << universe, 0);
  for (std::uint64_t m : masks) member[m] = 1;

  int k = 1;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << universe); ++s) {
    int largest = 0;
    int smallest_maximal = std::numeric_limits<int>::max();
    for (std::uint64_t m : masks) {
      if ((m & ~s) != 0) continue;
      const int size = std::popcount(m);
      largest = std::max(largest, size);
      bool maximal = true;
      for (std::uint64_t rest = s & ~m; rest != 0; rest &= rest - 1) {
        if (member[m | (rest & (~rest + 1))]) {
          maximal = false;
          break;
        }
      }
      if (maximal) smallest_maximal = std::min(smallest_maximal, size);
    }
    if (largest == 0) continue;
    k = std::max(k, (largest + smallest_maximal - 1) / smallest_maximal);
  }
  return k;
}

}  // namespace

bool parts_are_disjoint(const std::vector<std::vector<ElementId>>& parts) {
  std::vector<ElementId> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool family_is_laminar(const std::vector<std::vector<ElementId>>& sets) {
  std::vector<std::vector<ElementId>> sorted = sets;
  for (auto& s : sorted) std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      std::vector<ElementId> common;
      std::set_intersection(sorted[i].begin(), sorted[i].end(),
                            sorted[j].begin(), sorted[j].end(),
                            std::back_inserter(common));
      const std::size_t c = common.size();
      if (c != 0 && c != sorted[i].size() && c != sorted[j].size()) {
        return false;
      }
    }
  }
  return true;
}

ConstraintSystem::ConstraintSystem(std::size_t universe, ConstraintVariant data)
    : universe_(universe),
      data_(std::make_shared<const ConstraintVariant>(std::move(data))) {}

ConstraintSystem ConstraintSystem::Uniform(std::size_t universe,
                                           std::size_t rank) {
  return ConstraintSystem(universe, UniformMatroid{rank});
}

ConstraintSystem ConstraintSystem::Partition(
    std::size_t universe, std::vector<std::vector<ElementId>> parts,
    std::vector<std::size_t> capacities) {
  if (parts.size() != capacities.size()) {
    throw DomainError("partition needs one capacity per part");
  }
  check_members(universe, parts, "partition part");
  if (!parts_are_disjoint(parts)) {
    throw DomainError("partition parts overlap");
  }
  return ConstraintSystem(
      universe, PartitionMatroid{std::move(parts), std::move(capacities)});
}

ConstraintSystem ConstraintSystem::Laminar(
    std::size_t universe, std::vector<std::vector<ElementId>> sets,
    std::vector<std::size_t> capacities) {
  if (sets.size() != capacities.size()) {
    throw DomainError("laminar family needs one capacity per set");
  }
  check_members(universe, sets, "laminar set");
  if (!family_is_laminar(sets)) {
    throw DomainError("laminar family has two crossing sets");
  }
  return ConstraintSystem(
      universe, LaminarMatroid{std::move(sets), std::move(capacities)});
}

ConstraintSystem ConstraintSystem::Graphic(
    std::size_t num_vertices,
    std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw DomainError("graphic edge endpoint outside vertex range");
    }
  }
  const std::size_t universe = edges.size();
  return ConstraintSystem(universe,
                          GraphicMatroid{num_vertices, std::move(edges)});
}

ConstraintSystem ConstraintSystem::Intersection(
    std::vector<ConstraintSystem> members) {
  if (members.empty()) throw DomainError("intersection of no systems");
  const std::size_t universe = members.front().universe_size();
  for (const auto& m : members) {
    if (m.universe_size() != universe) {
      throw DomainError("intersection members disagree on universe size");
    }
  }
  return ConstraintSystem(universe, SystemIntersection{std::move(members)});
}

ConstraintSystem ConstraintSystem::Explicit(std::size_t universe,
                                            std::vector<ElementSet> family) {
  for (const auto& s : family) check_universe(s, universe);
  family.emplace_back(universe);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (const auto& s : family) {
    bool closed = true;
    s.for_each([&](ElementId e) {
      if (closed && !std::binary_search(family.begin(), family.end(),
                                        s.without(e))) {
        closed = false;
      }
    });
    if (!closed) throw DomainError("explicit family is not downward closed");
  }
  ExplicitFamily data{std::move(family)};
  if (universe <= kExplicitKCap) data.k = explicit_k(data, universe);
  return ConstraintSystem(universe, std::move(data));
}

ConstraintSystem ConstraintSystem::Lifted(const ConstraintSystem& base,
                                          std::vector<ElementId> image) {
  if (const auto* inter = std::get_if<SystemIntersection>(&base.data())) {
    std::vector<ConstraintSystem> lifted;
    for (const auto& m : inter->members) lifted.push_back(Lifted(m, image));
    return Intersection(std::move(lifted));
  }
  for (ElementId b : image) {
    if (b >= base.universe_size()) {
      throw DomainError("lift image outside the base universe");
    }
  }
  const std::size_t universe = image.size();
  return ConstraintSystem(universe, LiftedSystem{base, std::move(image)});
}

bool operator==(const ConstraintSystem& a, const ConstraintSystem& b) {
  return a.universe_ == b.universe_ && *a.data_ == *b.data_;
}

bool ConstraintSystem::is_independent(const ElementSet& s) const {
  check_universe(s, universe_);
  return std::visit(
      Overloaded{
          [&](const UniformMatroid& u) { return s.size() <= u.rank; },
          [&](const PartitionMatroid& p) {
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
              if (count_in(s, p.parts[i]) > p.capacities[i]) return false;
            }
            return true;
          },
          [&](const LaminarMatroid& l) {
            for (std::size_t i = 0; i < l.sets.size(); ++i) {
              if (count_in(s, l.sets[i]) > l.capacities[i]) return false;
            }
            return true;
          },
          [&](const GraphicMatroid& g) {
            UnionFind uf(g.num_vertices);
            bool forest = true;
            s.for_each([&](ElementId e) {
              if (forest && !uf.unite(g.edges[e].first, g.edges[e].second)) {
                forest = false;
              }
            });
            return forest;
          },
          [&](const SystemIntersection& inter) {
            for (const auto& m : inter.members) {
              if (!m.is_independent(s)) return false;
            }
            return true;
          },
          [&](const ExplicitFamily& f) {
            return std::binary_search(f.independent_sets.begin(),
                                      f.independent_sets.end(), s);
          },
          [&](const LiftedSystem& l) {
            ElementSet img(l.base.universe_size());
            bool injective = true;
            s.for_each([&](ElementId e) {
              if (img.contains(l.image[e])) injective = false;
              img.insert(l.image[e]);
            });
            return injective && l.base.is_independent(img);
          },
      },
      *data_);
}

bool ConstraintSystem::can_add(const ElementSet& s, ElementId e) const {
  if (e >= universe_) {
    throw DomainError("element " + std::to_string(e) + " outside universe");
  }
  if (s.contains(e)) return is_independent(s);
  return is_independent(s.with(e));
}

ElementSet ConstraintSystem::greedy_basis(const ElementSet& s) const {
  check_universe(s, universe_);
  ElementSet basis(universe_);
  s.for_each([&](ElementId e) {
    if (can_add(basis, e)) basis.insert(e);
  });
  return basis;
}

std::size_t ConstraintSystem::rank(const ElementSet& s, std::size_t cap) const {
  check_universe(s, universe_);
  return std::visit(
      Overloaded{
          [&](const UniformMatroid& u) { return std::min(u.rank, s.size()); },
          [&](const PartitionMatroid& p) {
            ElementSet covered(universe_);
            std::size_t r = 0;
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
              r += std::min(p.capacities[i], count_in(s, p.parts[i]));
              for (ElementId e : p.parts[i]) covered.insert(e);
            }
            return r + (s - covered).size();
          },
          [&](const LaminarMatroid&) { return greedy_basis(s).size(); },
          [&](const GraphicMatroid& g) {
            UnionFind uf(g.num_vertices);
            std::size_t r = 0;
            s.for_each([&](ElementId e) {
              if (uf.unite(g.edges[e].first, g.edges[e].second)) ++r;
            });
            return r;
          },
          [&](const SystemIntersection& inter) -> std::size_t {
            if (inter.members.size() == 1) return inter.members[0].rank(s, cap);
            if (s.size() > cap) {
              throw CapabilityError("exact rank of a " +
                                    std::to_string(s.size()) +
                                    "-element set exceeds the enumeration cap of " +
                                    std::to_string(cap));
            }
            return exact_max_independent(*this, s);
          },
          [&](const ExplicitFamily& f) { return explicit_rank(f, s); },
          [&](const LiftedSystem& l) {
            ElementSet img(l.base.universe_size());
            s.for_each([&](ElementId e) { img.insert(l.image[e]); });
            return l.base.rank(img, cap);
          },
      },
      *data_);
}

ElementSet ConstraintSystem::span(const ElementSet& t) const {
  check_universe(t, universe_);
  ElementSet out = t;
  if (const auto* u = std::get_if<UniformMatroid>(data_.get())) {
    return t.size() >= u->rank ? ElementSet::All(universe_) : out;
  }
  if (const auto* p = std::get_if<PartitionMatroid>(data_.get())) {
    for (std::size_t i = 0; i < p->parts.size(); ++i) {
      if (count_in(t, p->parts[i]) >= p->capacities[i]) {
        for (ElementId e : p->parts[i]) out.insert(e);
      }
    }
    return out;
  }
  if (const auto* g = std::get_if<GraphicMatroid>(data_.get())) {
    UnionFind uf(g->num_vertices);
    t.for_each([&](ElementId e) { uf.unite(g->edges[e].first, g->edges[e].second); });
    for (ElementId e = 0; e < universe_; ++e) {
      if (uf.find(g->edges[e].first) == uf.find(g->edges[e].second)) {
        out.insert(e);
      }
    }
    return out;
  }
  if (const auto* l = std::get_if<LiftedSystem>(data_.get())) {
    ElementSet img(l->base.universe_size());
    t.for_each([&](ElementId e) { img.insert(l->image[e]); });
    const ElementSet base_span = l->base.span(img);
    for (ElementId e = 0; e < universe_; ++e) {
      if (base_span.contains(l->image[e])) out.insert(e);
    }
    return out;
  }
  if (is_matroid()) {
    const ElementSet basis = greedy_basis(t);
    for (ElementId e = 0; e < universe_; ++e) {
      if (!t.contains(e) && !can_add(basis, e)) out.insert(e);
    }
    return out;
  }
  const std::size_t r = rank(t);
  for (ElementId e = 0; e < universe_; ++e) {
    if (!t.contains(e) && rank(t.with(e)) == r) out.insert(e);
  }
  return out;
}

std::optional<SubsetWitness> ConstraintSystem::separate(
    std::span<const double> x) const {
  if (x.size() != universe_) {
    throw DomainError("fractional point has " + std::to_string(x.size()) +
                      " coordinates, universe has " + std::to_string(universe_));
  }
  for (double v : x) {
    if (!(v >= -kSeparationTolerance && v <= 1.0 + kSeparationTolerance)) {
      throw DomainError("fractional point outside [0,1]^V");
    }
  }
  return separate_unchecked(x);
}

std::optional<SubsetWitness> ConstraintSystem::separate_unchecked(
    std::span<const double> x) const {
  return std::visit(
      Overloaded{
          [&](const UniformMatroid& u) -> std::optional<SubsetWitness> {
            std::vector<ElementId> order;
            for (ElementId e = 0; e < universe_; ++e) {
              if (x[e] > 0.0) order.push_back(e);
            }
            std::stable_sort(order.begin(), order.end(),
                             [&](ElementId a, ElementId b) { return x[a] > x[b]; });
            BestWitness best;
            double prefix = 0.0;
            std::size_t best_len = 0;
            for (std::size_t j = 0; j < order.size(); ++j) {
              prefix += x[order[j]];
              const double bound = static_cast<double>(std::min(u.rank, j + 1));
              if (prefix - bound > best.violation) {
                best.violation = prefix - bound;
                best_len = j + 1;
              }
            }
            if (best_len == 0) return std::nullopt;
            ElementSet members(universe_);
            for (std::size_t j = 0; j < best_len; ++j) members.insert(order[j]);
            return SubsetWitness{
                members, sum_over(x, members),
                static_cast<double>(std::min(u.rank, best_len))};
          },
          [&](const PartitionMatroid& p) {
            BestWitness best;
            ElementSet covered(universe_);
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
              ElementSet part(universe_, p.parts[i]);
              covered |= part;
              best.offer(part, sum_over(x, part),
                         static_cast<double>(
                             std::min(p.capacities[i], p.parts[i].size())));
            }
            for (ElementId e = 0; e < universe_; ++e) {
              if (!covered.contains(e)) {
                best.offer(ElementSet(universe_, {e}), x[e], 1.0);
              }
            }
            return best.witness;
          },
          [&](const LaminarMatroid& l) {
            BestWitness best;
            for (const auto& set : l.sets) {
              ElementSet members(universe_, set);
              best.offer(members, sum_over(x, members),
                         static_cast<double>(rank(members)));
            }
            for (ElementId e = 0; e < universe_; ++e) {
              if (x[e] > kSeparationTolerance) {
                ElementSet single(universe_, {e});
                best.offer(single, x[e], static_cast<double>(rank(single)));
              }
            }
            return best.witness;
          },
          [&](const GraphicMatroid& g) { return separate_graphic(g, *this, x); },
          [&](const SystemIntersection& inter) {
            BestWitness best;
            for (const auto& m : inter.members) {
              best.offer(m.separate_unchecked(x));
            }
            return best.witness;
          },
          [&](const ExplicitFamily& f) -> std::optional<SubsetWitness> {
            std::vector<ElementId> support;
            for (ElementId e = 0; e < universe_; ++e) {
              if (x[e] > 0.0) support.push_back(e);
            }
            if (support.size() > kEnumerationCap) {
              throw CapabilityError(
                  "explicit-family separation over a support of " +
                  std::to_string(support.size()) + " elements");
            }
            BestWitness best;
            const std::uint64_t limit = std::uint64_t{1} << support.size();
            for (std::uint64_t m = 1; m < limit; ++m) {
              ElementSet members(universe_);
              for (std::size_t j = 0; j < support.size(); ++j) {
                if ((m >> j) & 1u) members.insert(support[j]);
              }
              best.offer(members, sum_over(x, members),
                         static_cast<double>(explicit_rank(f, members)));
            }
            return best.witness;
          },
          [&](const LiftedSystem& l) -> std::optional<SubsetWitness> {
            std::vector<double> aggregate(l.base.universe_size(), 0.0);
            for (ElementId e = 0; e < universe_; ++e) {
              aggregate[l.image[e]] += x[e];
            }
            auto base_witness = l.base.separate_unchecked(aggregate);
            if (!base_witness) return std::nullopt;
            ElementSet members(universe_);
            for (ElementId e = 0; e < universe_; ++e) {
              if (base_witness->members.contains(l.image[e])) members.insert(e);
            }
            return SubsetWitness{members, sum_over(x, members),
                                 base_witness->bound};
          },
      },
      *data_);
}

int ConstraintSystem::k_parameter() const {
  return std::visit(
      Overloaded{
          [](const UniformMatroid&) { return 1; },
          [](const PartitionMatroid&) { return 1; },
          [](const LaminarMatroid&) { return 1; },
          [](const GraphicMatroid&) { return 1; },
          [](const SystemIntersection& inter) {
            int k = 0;
            for (const auto& m : inter.members) k += m.k_parameter();
            return k;
          },
          [&](const ExplicitFamily& f) {
            if (f.k < 0) {
              throw CapabilityError(
                  "k_parameter of an explicit family over " +
                  std::to_string(universe_) + " elements");
            }
            return f.k;
          },
          [](const LiftedSystem& l) { return l.base.k_parameter(); },
      },
      *data_);
}

int ConstraintSystem::effective_k() const {
  return is_free() ? 0 : k_parameter();
}

bool ConstraintSystem::is_matroid() const {
  return std::visit(
      Overloaded{
          [](const SystemIntersection& inter) {
            return inter.members.size() == 1 && inter.members[0].is_matroid();
          },
          [](const ExplicitFamily& f) { return f.k == 1; },
          [](const LiftedSystem& l) { return l.base.is_matroid(); },
          [](const auto&) { return true; },
      },
      *data_);
}

bool ConstraintSystem::is_free() const {
  return std::visit(
      Overloaded{
          [&](const UniformMatroid& u) { return u.rank >= universe_; },
          [](const PartitionMatroid& p) {
            for (std::size_t i = 0; i < p.parts.size(); ++i) {
              if (p.capacities[i] < p.parts[i].size()) return false;
            }
            return true;
          },
          [](const LaminarMatroid& l) {
            for (std::size_t i = 0; i < l.sets.size(); ++i) {
              if (l.capacities[i] < l.sets[i].size()) return false;
            }
            return true;
          },
          [&](const GraphicMatroid&) {
            return is_independent(ElementSet::All(universe_));
          },
          [](const SystemIntersection& inter) {
            for (const auto& m : inter.members) {
              if (!m.is_free()) return false;
            }
            return true;
          },
          [&](const ExplicitFamily&) {
            return is_independent(ElementSet::All(universe_));
          },
          [&](const LiftedSystem& l) {
            std::vector<ElementId> img = l.image;
            std::sort(img.begin(), img.end());
            return std::adjacent_find(img.begin(), img.end()) == img.end() &&
                   l.base.is_free();
          },
      },
      *data_);
}

std::vector<ConstraintSystem> ConstraintSystem::factors() const {
  const auto* inter = std::get_if<SystemIntersection>(data_.get());
  if (inter == nullptr) return {*this};
  std::vector<ConstraintSystem> out;
  for (const auto& m : inter->members) {
    auto sub = m.factors();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace probing
