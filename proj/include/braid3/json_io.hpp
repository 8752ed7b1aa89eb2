// Copyright 2026 The Braid3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON renderings of the library's value types. Key order is nlohmann's
// canonical (alphabetical) order and member lists are pre-sorted, so a
// given value always serializes to the same bytes.

#ifndef BRAID3_JSON_IO_HPP_
#define BRAID3_JSON_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braid3/conjugacy.hpp"
#include "braid3/enumerate.hpp"
#include "braid3/structure.hpp"
#include "braid3/verify.hpp"

namespace braid3 {

inline nlohmann::json to_json(const std::vector<NormalForm>& forms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const NormalForm& nf : forms) arr.push_back(nf.str());
  return arr;
}

inline nlohmann::json to_json(const CyclicClass& cc) {
  return {{"representative", cc.representative().str()},
          {"size", cc.size()},
          {"members", to_json(cc.members())}};
}

inline nlohmann::json to_json(const ClassReport& report) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const CyclicClassPtr& cc : report.cyclic_classes) {
    cycles.push_back(to_json(*cc));
  }
  return {{"representative", report.representative().str()},
          {"size", report.size()},
          {"coincides", report.coincides},
          {"members", to_json(report.members)},
          {"cyclic_classes", cycles}};
}

inline nlohmann::json to_json(const ClassTable& table) {
  nlohmann::json classes = nlohmann::json::array();
  for (const ClassReport& report : table.classes) {
    classes.push_back(to_json(report));
  }
  return {{"length", table.length},
          {"braid_count", table.braid_count},
          {"class_count", table.class_count()},
          {"classes", classes}};
}

inline nlohmann::json to_json(const CoincidenceVerdict& v) {
  return {{"coincides", v.coincides},
          {"conditions",
           {{"infimum_zero", v.infimum_zero},
            {"lemma_shape", v.lemma_shape},
            {"no_ccbar_power", v.no_ccbar_power}}}};
}

inline nlohmann::json to_json(const std::optional<CcbarPower>& power) {
  if (!power) return {{"found", false}};
  return {{"found", true},
          {"c", power->c.str()},
          {"exponent", power->exponent},
          {"minimal", power->minimal}};
}

inline nlohmann::json to_json(const SuiteResult& result) {
  nlohmann::json j = {{"suite", result.suite},
                      {"max_len", result.max_len},
                      {"instances_checked", result.instances_checked},
                      {"failures", result.failures},
                      {"passed", result.passed()}};
  if (result.suite == "structure") {
    j["splits_checked"] = result.splits_checked;
  }
  return j;
}

}  // namespace braid3

#endif  // BRAID3_JSON_IO_HPP_
