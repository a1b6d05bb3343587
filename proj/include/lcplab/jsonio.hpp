// Copyright 2026 The lcplab Authors
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

#ifndef LCPLAB_JSONIO_HPP_
#define LCPLAB_JSONIO_HPP_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lcplab/hiddenz.hpp"
#include "lcplab/labgen.hpp"
#include "lcplab/lcpsolve.hpp"
#include "lcplab/ratmat.hpp"

namespace lcplab {

// All reports carry this schema tag.
inline constexpr const char* kSchemaTag = "lcplab/1";

// Rational literals: JSON integers, or strings holding "p/q" or an exact
// decimal. Bare JSON floats are rejected to keep every value exact.
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& r);

RatVec vec_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const RatVec& v);

// Matrices are {"rows": [[...], ...]} or a bare array of arrays.
RatMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const RatMatrix& m);

// Certificates are {"X": matrix, "Y": matrix, "r": vector, "s": vector}.
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const Certificate& c);

// Instances are {"A": matrix, "q": vector, "certificate": optional}.
struct InstanceFile {
  RatMatrix a;
  std::optional<RatVec> q;
  std::optional<Certificate> cert;
};
InstanceFile instance_from_json(const nlohmann::json& j);

// Index sets cross the boundary as 1-based member arrays.
nlohmann::json indexset_to_json(const IndexSet& s);
IndexSet indexset_from_members_1based(int universe,
                                      const std::vector<long>& members);

nlohmann::json suite_report_to_json(const SuiteReport& rep);
nlohmann::json solution_to_json(const LcpSolution& sol);

// Parses a JSON document from a file, reporting the position of any syntax
// error as InputError. The file may be a bare matrix, or an instance object.
nlohmann::json load_json_file(const std::string& path);

}  // namespace lcplab

#endif  // LCPLAB_JSONIO_HPP_
