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

#ifndef DIVKNAP_JSON_IO_HPP
#define DIVKNAP_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "divknap/cut.hpp"
#include "divknap/instance.hpp"
#include "divknap/point.hpp"

namespace divknap {

// On-disk schema. All numerics are decimal strings ("12") or rational
// strings ("5/2") so nothing is squeezed through a double.
//
//   instance   {"a":["2","6","12"],"u":["3"],"b":"7"}
//   int point  {"x0":"0","x":["5/2"]}
//   geq point  {"x":["5/2"],"s0":"0","s":["0"]}
//   leq point  {"x":["5/2"],"y0":"0","y":["3"]}
//   cut        {"orientation":"geq","subset":[1],"x_coeffs":["1"],
//               "rhs":"3","partition_breaks":[0,1]}
//   result     {"status":"violated","cut":{...},"violation":"1/2"}
//              or {"status":"inside"}

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const IntPoint& pt);
nlohmann::json point_to_json(const GeqPoint& pt);
nlohmann::json point_to_json(const LeqPoint& pt);
IntPoint int_point_from_json(const nlohmann::json& j);
GeqPoint geq_point_from_json(const nlohmann::json& j);
LeqPoint leq_point_from_json(const nlohmann::json& j);

nlohmann::json cut_to_json(const PartitionCut& cut);

/// Rebuilds an evaluable cut from its JSON form. The residual capacity is
/// not part of the schema, so the returned cut supports eval_cut but not
/// validity_oracle.
PartitionCut cut_from_json(const nlohmann::json& j, CutShape shape);

nlohmann::json result_to_json(const SeparationResult& result);

/// Parses a whole file, mapping I/O and syntax problems to
/// ErrorCode::ParseError.
nlohmann::json load_json_file(const std::string& path);

}  // namespace divknap

#endif  // DIVKNAP_JSON_IO_HPP
