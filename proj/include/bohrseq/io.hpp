// Copyright 2026 The bohrseq Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "bohrseq/arcset.hpp"
#include "bohrseq/builder.hpp"
#include "bohrseq/gap_cover.hpp"
#include "bohrseq/harness.hpp"
#include "bohrseq/torus.hpp"

namespace bohrseq {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const Json& j);
/// Accepts a JSON integer or a string such as "3/7".
Rational rational_from_json(const Json& j);

/// {"kind":"rational","num":1,"den":3}, {"kind":"sqrt","radicand":2,
/// "coeff":"1","offset":"0"}, {"kind":"cfrac","head":[..],"period":[..]}, or
/// {"kind":"combination","offset":"p/q","terms":[{"coeff":..,"radicand":..}]}.
TorusPoint point_from_json(const Json& j);
Json point_to_json(const TorusPoint& p);

/// {"generators":[descriptor, ...]} or a bare array of descriptors.
GroupSpec group_from_json(const Json& j);
std::vector<TorusPoint> points_from_json(const Json& j);

struct BetaSpec {
  TorusPoint beta;
  std::vector<Integer> combination;  // empty when not declared
  bool has_combination = false;
};
BetaSpec beta_from_json(const Json& j);

Json arcs_to_json(const ArcSet& arcs);
Json cover_to_json(const GapCover& cover);

Json stage_to_json(const StageArtifacts& stage);
Json report_to_json(const StreamResult& result, const GroupSpec& group);

/// seq.csv with columns stage,t_index,n.
std::string sequence_csv(const std::vector<StageArtifacts>& stages);
/// Stage members from seq.csv and term bounds from report.json.
std::vector<StageData> load_stages(const std::string& seq_csv, const Json& report);

std::string member_csv(const VerificationReport& rep);
std::string nonmember_csv(const VerificationReport& rep);
Json verification_to_json(const VerificationReport& rep);

}  // namespace bohrseq
