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
#include "probing/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <type_traits>
#include <utility>
#include <variant>

namespace probing {
namespace {

using nlohmann::json;
using OJson = nlohmann::ordered_json;
using Code = ParseErrorCode;

std::string location_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(Code::kSyntax, location_of(text, e.byte), e.what());
  }
}

class Reader {
 public:
  explicit Reader(ParseOptions options) : options_(options) {}

  std::vector<std::string> take_warnings() { return std::move(warnings_); }

  void expect_fields(const json& obj, const std::string& path,
                     std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : obj.items()) {
      if (std::find(known.begin(), known.end(), key) != known.end()) continue;
      const std::string where = path + "/" + key;
      if (options_.strict) {
        throw ParseError(Code::kUnknownField, where, "unknown field");
      }
      warnings_.push_back("ignored unknown field " + where);
    }
  }

  static const json& object(const json& doc, const std::string& path) {
    if (!doc.is_object()) throw ParseError(Code::kSchema, path, "expected an object");
    return doc;
  }

  static const json& field(const json& obj, const std::string& path,
                           const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      throw ParseError(Code::kSchema, path + "/" + key, "missing field");
    }
    return *it;
  }

  static const json& array(const json& doc, const std::string& path) {
    if (!doc.is_array()) throw ParseError(Code::kSchema, path, "expected an array");
    return doc;
  }

  static double number(const json& doc, const std::string& path) {
    if (!doc.is_number()) throw ParseError(Code::kSchema, path, "expected a number");
    const double v = doc.get<double>();
    if (!std::isfinite(v)) throw ParseError(Code::kSchema, path, "non-finite number");
    return v;
  }

  static std::size_t count(const json& doc, const std::string& path) {
    if (!doc.is_number_unsigned() &&
        !(doc.is_number_integer() && doc.get<std::int64_t>() >= 0)) {
      throw ParseError(Code::kSchema, path, "expected a non-negative integer");
    }
    return doc.get<std::size_t>();
  }

  static std::vector<ElementId> ids(const json& doc, const std::string& path,
                                    std::size_t universe) {
    std::vector<ElementId> out;
    std::size_t i = 0;
    for (const json& v : array(doc, path)) {
      const std::string at = path + "/" + std::to_string(i++);
      const std::size_t e = count(v, at);
      if (e >= universe) {
        throw ParseError(Code::kElementRange, at,
                         "element " + std::to_string(e) + " outside universe of size " +
                             std::to_string(universe));
      }
      out.push_back(e);
    }
    return out;
  }

  static std::vector<std::size_t> counts(const json& doc, const std::string& path) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    for (const json& v : array(doc, path)) {
      out.push_back(count(v, path + "/" + std::to_string(i++)));
    }
    return out;
  }

  ConstraintSystem constraint(const json& doc, const std::string& path,
                              std::size_t universe) {
    object(doc, path);
    const json& type_doc = field(doc, path, "type");
    if (!type_doc.is_string()) {
      throw ParseError(Code::kSchema, path + "/type", "expected a string");
    }
    const std::string type = type_doc.get<std::string>();
    try {
      if (type == "free") {
        expect_fields(doc, path, {"type"});
        return ConstraintSystem::Free(universe);
      }
      if (type == "uniform") {
        expect_fields(doc, path, {"type", "rank"});
        return ConstraintSystem::Uniform(universe,
                                         count(field(doc, path, "rank"), path + "/rank"));
      }
      if (type == "partition" || type == "laminar") {
        const bool partition = type == "partition";
        const char* key = partition ? "parts" : "sets";
        expect_fields(doc, path, {"type", key, "capacities"});
        const std::string sets_path = path + "/" + key;
        std::vector<std::vector<ElementId>> sets;
        std::size_t i = 0;
        for (const json& s : array(field(doc, path, key), sets_path)) {
          sets.push_back(ids(s, sets_path + "/" + std::to_string(i++), universe));
        }
        auto caps = counts(field(doc, path, "capacities"), path + "/capacities");
        if (caps.size() != sets.size()) {
          throw ParseError(Code::kSchema, path + "/capacities",
                           "one capacity per set is required");
        }
        if (partition && !parts_are_disjoint(sets)) {
          throw ParseError(Code::kPartitionOverlap, sets_path,
                           "partition parts overlap");
        }
        if (!partition && !family_is_laminar(sets)) {
          throw ParseError(Code::kLaminarNotNested, sets_path,
                           "sets are neither nested nor disjoint");
        }
        return partition
                   ? ConstraintSystem::Partition(universe, std::move(sets), std::move(caps))
                   : ConstraintSystem::Laminar(universe, std::move(sets), std::move(caps));
      }
      if (type == "graphic") {
        expect_fields(doc, path, {"type", "vertices", "edges"});
        const std::size_t vertices = count(field(doc, path, "vertices"), path + "/vertices");
        const std::string edges_path = path + "/edges";
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::size_t i = 0;
        for (const json& e : array(field(doc, path, "edges"), edges_path)) {
          const std::string at = edges_path + "/" + std::to_string(i++);
          if (!e.is_array() || e.size() != 2) {
            throw ParseError(Code::kSchema, at, "an edge is a pair of vertices");
          }
          const auto ends = ids(e, at, vertices);
          edges.emplace_back(ends[0], ends[1]);
        }
        if (edges.size() != universe) {
          throw ParseError(Code::kSchema, edges_path,
                           "expected one edge per element (" + std::to_string(universe) + ")");
        }
        return ConstraintSystem::Graphic(vertices, std::move(edges));
      }
      if (type == "intersection") {
        expect_fields(doc, path, {"type", "members"});
        const std::string members_path = path + "/members";
        std::vector<ConstraintSystem> members;
        std::size_t i = 0;
        for (const json& m : array(field(doc, path, "members"), members_path)) {
          members.push_back(constraint(m, members_path + "/" + std::to_string(i++), universe));
        }
        if (members.empty()) {
          throw ParseError(Code::kSchema, members_path, "an intersection needs members");
        }
        return ConstraintSystem::Intersection(std::move(members));
      }
      if (type == "explicit") {
        expect_fields(doc, path, {"type", "sets"});
        const std::string sets_path = path + "/sets";
        std::vector<ElementSet> family;
        std::size_t i = 0;
        for (const json& s : array(field(doc, path, "sets"), sets_path)) {
          ElementSet set(universe);
          for (ElementId e : ids(s, sets_path + "/" + std::to_string(i++), universe)) {
            set.insert(e);
          }
          family.push_back(std::move(set));
        }
        try {
          return ConstraintSystem::Explicit(universe, std::move(family));
        } catch (const DomainError& e) {
          throw ParseError(Code::kFamilyNotClosed, sets_path, e.what());
        }
      }
      if (type == "lifted") {
        expect_fields(doc, path, {"type", "base_universe", "base", "image"});
        const std::size_t base_universe =
            count(field(doc, path, "base_universe"), path + "/base_universe");
        auto base = constraint(field(doc, path, "base"), path + "/base", base_universe);
        auto image = ids(field(doc, path, "image"), path + "/image", base_universe);
        if (image.size() != universe) {
          throw ParseError(Code::kSchema, path + "/image",
                           "expected one image per element (" + std::to_string(universe) + ")");
        }
        return ConstraintSystem::Lifted(base, std::move(image));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(Code::kSchema, path, e.what());
    }
    throw ParseError(Code::kSchema, path + "/type", "unknown constraint type '" + type + "'");
  }

  void version(const json& doc) {
    const json& v = field(doc, "", "schema_version");
    if (count(v, "/schema_version") != static_cast<std::size_t>(kSchemaVersion)) {
      throw ParseError(Code::kSchema, "/schema_version",
                       "unsupported schema version (expected " +
                           std::to_string(kSchemaVersion) + ")");
    }
  }

 private:
  ParseOptions options_;
  std::vector<std::string> warnings_;
};

OJson element_ids(const std::vector<ElementId>& ids) {
  OJson out = OJson::array();
  for (ElementId e : ids) out.push_back(e);
  return out;
}

template <typename Json>
void write(const Json& doc, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner_pad = pad + "  ";
  switch (doc.type()) {
    case Json::value_t::object: {
      if (doc.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : doc.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner_pad + Json(key).dump() + ": ";
        write(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (doc.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(doc.begin(), doc.end(),
                                    [](const Json& v) { return v.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < doc.size(); ++i) {
          if (i) out += ", ";
          write(doc[i], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < doc.size(); ++i) {
        if (i) out += ",\n";
        out += inner_pad;
        write(doc[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(doc.template get<double>());
      return;
    default:
      out += doc.dump();
      return;
  }
}

}  // namespace

std::string_view to_string(ParseErrorCode code) {
  switch (code) {
    case Code::kSyntax:
      return "PARSE_SYNTAX";
    case Code::kProbabilityRange:
      return "PROB_RANGE";
    case Code::kPartitionOverlap:
      return "PARTITION_OVERLAP";
    case Code::kLaminarNotNested:
      return "LAMINAR_NOT_NESTED";
    case Code::kUnknownField:
      return "UNKNOWN_FIELD";
    case Code::kSchema:
      return "SCHEMA";
    case Code::kElementRange:
      return "ELEMENT_RANGE";
    case Code::kDeadlineRange:
      return "DEADLINE_RANGE";
    case Code::kFamilyNotClosed:
      return "FAMILY_NOT_CLOSED";
    case Code::kDistributionSum:
      return "DIST_SUM";
    case Code::kContinuousDistribution:
      return "CONTINUOUS_DIST";
  }
  return "UNKNOWN";
}

ParseError::ParseError(ParseErrorCode code, std::string where,
                       const std::string& what)
    : DomainError(std::string(to_string(code)) + " at " +
                  (where.empty() ? std::string("/") : where) + ": " + what),
      code_(code),
      where_(std::move(where)) {}

ParsedInstance parse_instance(std::string_view text, ParseOptions options) {
  const json doc = parse_text(text);
  Reader r(options);
  Reader::object(doc, "");
  r.expect_fields(doc, "", {"schema_version", "elements", "inner", "outer"});
  r.version(doc);

  std::vector<Element> elements;
  std::size_t i = 0;
  for (const json& el : Reader::array(Reader::field(doc, "", "elements"), "/elements")) {
    const std::string path = "/elements/" + std::to_string(i++);
    Reader::object(el, path);
    r.expect_fields(el, path, {"weight", "p", "deadline"});
    Element e;
    if (el.contains("weight")) {
      e.weight = Reader::number(el["weight"], path + "/weight");
      if (e.weight < 0.0) throw ParseError(Code::kSchema, path + "/weight", "negative weight");
    }
    e.p = Reader::number(Reader::field(el, path, "p"), path + "/p");
    if (e.p < 0.0 || e.p > 1.0) {
      throw ParseError(Code::kProbabilityRange, path + "/p", "probability outside [0, 1]");
    }
    if (el.contains("deadline")) {
      const json& d = el["deadline"];
      if (!d.is_number_integer()) {
        throw ParseError(Code::kDeadlineRange, path + "/deadline", "expected an integer");
      }
      const auto v = d.get<std::int64_t>();
      if (v < 1 || v > std::numeric_limits<int>::max()) {
        throw ParseError(Code::kDeadlineRange, path + "/deadline", "deadline must be >= 1");
      }
      e.deadline = static_cast<int>(v);
    }
    elements.push_back(e);
  }
  const std::size_t n = elements.size();
  auto side = [&](const char* key) {
    if (!doc.contains(key)) return ConstraintSystem::Free(n);
    return r.constraint(doc[key], std::string("/") + key, n);
  };
  ConstraintSystem inner = side("inner");
  ConstraintSystem outer = side("outer");
  return {ProbingInstance(std::move(elements), std::move(inner), std::move(outer)),
          r.take_warnings()};
}

ParsedAuction parse_auction(std::string_view text, ParseOptions options) {
  const json doc = parse_text(text);
  Reader r(options);
  Reader::object(doc, "");
  r.expect_fields(doc, "", {"schema_version", "max_value", "distributions", "feasibility"});
  r.version(doc);

  AuctionSpec spec;
  spec.max_value = Reader::count(Reader::field(doc, "", "max_value"), "/max_value");
  std::size_t i = 0;
  for (const json& d : Reader::array(Reader::field(doc, "", "distributions"), "/distributions")) {
    const std::string path = "/distributions/" + std::to_string(i++);
    if (d.is_object()) {
      throw ParseError(Code::kContinuousDistribution, path,
                       "valuations must be discrete on {0..max_value}; discretize the "
                       "distribution to integer values first");
    }
    std::vector<double> mass;
    std::size_t c = 0;
    for (const json& m : Reader::array(d, path)) {
      const std::string at = path + "/" + std::to_string(c++);
      const double v = Reader::number(m, at);
      if (v < 0.0 || v > 1.0) throw ParseError(Code::kProbabilityRange, at, "mass outside [0, 1]");
      mass.push_back(v);
    }
    if (mass.size() != spec.max_value + 1) {
      throw ParseError(Code::kSchema, path,
                       "expected " + std::to_string(spec.max_value + 1) + " masses");
    }
    double total = 0.0;
    for (double m : mass) total += m;
    if (std::abs(total - 1.0) > 1e-9) {
      throw ParseError(Code::kDistributionSum, path, "masses sum to " + format_double(total));
    }
    spec.distributions.push_back(std::move(mass));
  }
  const std::size_t agents = spec.distributions.size();
  spec.feasibility = doc.contains("feasibility")
                         ? r.constraint(doc["feasibility"], "/feasibility", agents)
                         : ConstraintSystem::Free(agents);
  spec.validate();
  return {std::move(spec), r.take_warnings()};
}

nlohmann::ordered_json constraint_to_json(const ConstraintSystem& system) {
  return std::visit(
      [&](const auto& d) -> OJson {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, UniformMatroid>) {
          return {{"type", "uniform"}, {"rank", d.rank}};
        } else if constexpr (std::is_same_v<T, PartitionMatroid>) {
          OJson parts = OJson::array();
          for (const auto& p : d.parts) parts.push_back(element_ids(p));
          return {{"type", "partition"}, {"parts", parts}, {"capacities", d.capacities}};
        } else if constexpr (std::is_same_v<T, LaminarMatroid>) {
          OJson sets = OJson::array();
          for (const auto& s : d.sets) sets.push_back(element_ids(s));
          return {{"type", "laminar"}, {"sets", sets}, {"capacities", d.capacities}};
        } else if constexpr (std::is_same_v<T, GraphicMatroid>) {
          OJson edges = OJson::array();
          for (const auto& [a, b] : d.edges) edges.push_back({a, b});
          return {{"type", "graphic"}, {"vertices", d.num_vertices}, {"edges", edges}};
        } else if constexpr (std::is_same_v<T, SystemIntersection>) {
          OJson members = OJson::array();
          for (const auto& m : d.members) members.push_back(constraint_to_json(m));
          return {{"type", "intersection"}, {"members", members}};
        } else if constexpr (std::is_same_v<T, ExplicitFamily>) {
          OJson sets = OJson::array();
          for (const auto& s : d.independent_sets) sets.push_back(element_ids(s.members()));
          return {{"type", "explicit"}, {"sets", sets}};
        } else {
          return {{"type", "lifted"},
                  {"base_universe", d.base.universe_size()},
                  {"base", constraint_to_json(d.base)},
                  {"image", element_ids(d.image)}};
        }
      },
      system.data());
}

nlohmann::ordered_json instance_to_json(const ProbingInstance& instance) {
  OJson elements = OJson::array();
  for (const Element& e : instance.elements()) {
    OJson el = {{"weight", e.weight}, {"p", e.p}};
    if (e.deadline) el["deadline"] = *e.deadline;
    elements.push_back(std::move(el));
  }
  return {{"schema_version", kSchemaVersion},
          {"elements", std::move(elements)},
          {"inner", constraint_to_json(instance.inner())},
          {"outer", constraint_to_json(instance.outer())}};
}

nlohmann::ordered_json auction_to_json(const AuctionSpec& spec) {
  return {{"schema_version", kSchemaVersion},
          {"max_value", spec.max_value},
          {"distributions", spec.distributions},
          {"feasibility", constraint_to_json(spec.feasibility)}};
}

nlohmann::ordered_json mechanism_to_json(const SpmMechanism& mechanism) {
  OJson offers = OJson::array();
  for (const Offer& o : mechanism.offers) {
    offers.push_back({{"agent", o.agent}, {"price", o.price}});
  }
  return {{"schema_version", kSchemaVersion}, {"offers", std::move(offers)}};
}

std::string emit_instance(const ProbingInstance& instance) {
  return dump_json(instance_to_json(instance));
}

std::string emit_auction(const AuctionSpec& spec) {
  return dump_json(auction_to_json(spec));
}

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string s(buf);
  // Keep the token a JSON float so it reads back as one.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const nlohmann::json& doc) {
  std::string out;
  write(doc, out, 0);
  out += "\n";
  return out;
}

std::string dump_json(const nlohmann::ordered_json& doc) {
  std::string out;
  write(doc, out, 0);
  out += "\n";
  return out;
}

}  // namespace probing
