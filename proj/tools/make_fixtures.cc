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
// Writes the shipped fixture corpus: make_fixtures <output-dir>.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "probing/fixtures.hpp"
#include "probing/io.hpp"

namespace {

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace probing;
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  for (const AppendixFixture& f : load_appendix_fixtures(10)) {
    write(dir / (f.name + ".json"), emit_instance(f.instance));
  }
  write(dir / "tightness.json", emit_instance(tightness_instance(7)));

  Rng rng(kDefaultSeed);
  RandomInstanceOptions options;
  options.min_size = options.max_size = 8;
  options.k_in = 2;
  write(dir / "random-unweighted.json", emit_instance(random_instance(options, rng)));
  options.weighted = true;
  options.min_size = options.max_size = 10;
  write(dir / "random-weighted.json", emit_instance(random_instance(options, rng)));
  options.weighted = false;
  options.deadlines = true;
  options.min_size = options.max_size = 7;
  write(dir / "random-deadline.json", emit_instance(random_instance(options, rng)));

  AuctionSpec single;
  single.max_value = 2;
  single.distributions = {{0.0, 0.5, 0.5}};
  single.feasibility = ConstraintSystem::Uniform(1, 1);
  write(dir / "auction-single.json", emit_auction(single));
  write(dir / "auction-matching.json",
        emit_auction(random_auction(6, 3, bipartite_matching(2, 3), rng)));
  write(dir / "auction-uniform.json",
        emit_auction(random_auction(5, 5, ConstraintSystem::Uniform(5, 2), rng)));
  return 0;
}
