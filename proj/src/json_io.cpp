// Copyright 2026 The divknap Authors
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

#include "divknap/json_io.hpp"

#include <fstream>

#include "divknap/error.hpp"

namespace divknap {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::ParseError,
          std::string("missing field '") + key + "'");
  return j.at(key);
}

Int int_field(const json& j) {
  require(j.is_string(), ErrorCode::ParseError,
          "numeric values must be decimal strings");
  return parse_int(j.get<std::string>());
}

Rat rat_field(const json& j) {
  require(j.is_string(), ErrorCode::ParseError,
          "numeric values must be 'p' or 'p/q' strings");
  return parse_rat(j.get<std::string>());
}

std::vector<Int> int_array(const json& j) {
  require(j.is_array(), ErrorCode::ParseError, "expected an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_field(e));
  return out;
}

std::vector<Rat> rat_array(const json& j) {
  require(j.is_array(), ErrorCode::ParseError, "expected an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rat_field(e));
  return out;
}

json int_array_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& e : v) out.push_back(to_string(e));
  return out;
}

json rat_array_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& e : v) out.push_back(to_string(e));
  return out;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  return json{{"a", int_array_to_json(inst.a)},
              {"u", int_array_to_json(inst.u)},
              {"b", to_string(inst.b)}};
}

Instance instance_from_json(const json& j) {
  Instance inst;
  inst.a = int_array(field(j, "a"));
  inst.u = int_array(field(j, "u"));
  inst.b = int_field(field(j, "b"));
  return inst;
}

json point_to_json(const IntPoint& pt) {
  return json{{"x0", to_string(pt.x0)}, {"x", rat_array_to_json(pt.x)}};
}

json point_to_json(const GeqPoint& pt) {
  return json{{"x", rat_array_to_json(pt.x)},
              {"s0", to_string(pt.s0)},
              {"s", rat_array_to_json(pt.s)}};
}

json point_to_json(const LeqPoint& pt) {
  return json{{"x", rat_array_to_json(pt.x)},
              {"y0", to_string(pt.y0)},
              {"y", rat_array_to_json(pt.y)}};
}

IntPoint int_point_from_json(const json& j) {
  IntPoint pt;
  pt.x0 = rat_field(field(j, "x0"));
  pt.x = rat_array(field(j, "x"));
  return pt;
}

GeqPoint geq_point_from_json(const json& j) {
  GeqPoint pt;
  pt.x = rat_array(field(j, "x"));
  pt.s0 = rat_field(field(j, "s0"));
  pt.s = rat_array(field(j, "s"));
  return pt;
}

LeqPoint leq_point_from_json(const json& j) {
  LeqPoint pt;
  pt.x = rat_array(field(j, "x"));
  pt.y0 = rat_field(field(j, "y0"));
  pt.y = rat_array(field(j, "y"));
  return pt;
}

json cut_to_json(const PartitionCut& cut) {
  return json{
      {"orientation",
       cut.orientation() == Orientation::Geq ? "geq" : "leq"},
      {"subset", cut.cont_subset},
      {"x_coeffs", int_array_to_json(cut.x_coeffs)},
      {"rhs", to_string(cut.rhs)},
      {"partition_breaks", cut.source_partition.breaks}};
}

PartitionCut cut_from_json(const json& j, CutShape shape) {
  PartitionCut cut;
  cut.shape = shape;
  const std::string orient = field(j, "orientation").get<std::string>();
  require(orient == "geq" || orient == "leq", ErrorCode::ParseError,
          "orientation must be 'geq' or 'leq'");
  require((orient == "leq") == (shape == CutShape::LeqKnapsack),
          ErrorCode::ParseError, "orientation does not match the cut shape");
  cut.cont_subset = field(j, "subset").get<std::vector<int>>();
  cut.x_coeffs = int_array(field(j, "x_coeffs"));
  cut.rhs = int_field(field(j, "rhs"));
  cut.source_partition.breaks =
      field(j, "partition_breaks").get<std::vector<int>>();
  return cut;
}

json result_to_json(const SeparationResult& result) {
  if (!result.violated()) return json{{"status", "inside"}};
  return json{{"status", "violated"},
              {"cut", cut_to_json(*result.cut)},
              {"violation", to_string(result.violation)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError,
                "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace divknap
