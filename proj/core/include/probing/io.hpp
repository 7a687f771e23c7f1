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
#ifndef PROBING_IO_HPP_
#define PROBING_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "probing/constraint_system.hpp"
#include "probing/errors.hpp"
#include "probing/instance.hpp"
#include "probing/spm.hpp"

namespace probing {

inline constexpr int kSchemaVersion = 1;

enum class ParseErrorCode {
  kSyntax,              // PARSE_SYNTAX
  kProbabilityRange,    // PROB_RANGE
  kPartitionOverlap,    // PARTITION_OVERLAP
  kLaminarNotNested,    // LAMINAR_NOT_NESTED
  kUnknownField,        // UNKNOWN_FIELD
  kSchema,              // SCHEMA
  kElementRange,        // ELEMENT_RANGE
  kDeadlineRange,       // DEADLINE_RANGE
  kFamilyNotClosed,     // FAMILY_NOT_CLOSED
  kDistributionSum,     // DIST_SUM
  kContinuousDistribution,  // CONTINUOUS_DIST
};

std::string_view to_string(ParseErrorCode code);

// Carries the offending location: a JSON pointer, or "line L, column C" for
// syntax errors.
class ParseError : public DomainError {
 public:
  ParseError(ParseErrorCode code, std::string where, const std::string& what);
  ParseErrorCode code() const { return code_; }
  const std::string& where() const { return where_; }

 private:
  ParseErrorCode code_;
  std::string where_;
};

struct ParseOptions {
  bool strict = false;  // reject unknown fields instead of warning
};

struct ParsedInstance {
  ProbingInstance instance;
  std::vector<std::string> warnings;
};

struct ParsedAuction {
  AuctionSpec spec;
  std::vector<std::string> warnings;
};

ParsedInstance parse_instance(std::string_view text, ParseOptions options = {});
ParsedAuction parse_auction(std::string_view text, ParseOptions options = {});

nlohmann::ordered_json constraint_to_json(const ConstraintSystem& system);
nlohmann::ordered_json instance_to_json(const ProbingInstance& instance);
nlohmann::ordered_json auction_to_json(const AuctionSpec& spec);
nlohmann::ordered_json mechanism_to_json(const SpmMechanism& mechanism);

std::string emit_instance(const ProbingInstance& instance);
std::string emit_auction(const AuctionSpec& spec);

// Pretty-printed JSON with every floating-point number written with 17
// significant digits; object keys keep their insertion order only if the
// caller used ordered_json.
std::string dump_json(const nlohmann::json& doc);
std::string dump_json(const nlohmann::ordered_json& doc);
std::string format_double(double value);

}  // namespace probing

#endif  // PROBING_IO_HPP_
