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

#include "lcplab/jsonio.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "lcplab/error.hpp"

namespace lcplab {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Rat(static_cast<long>(j.get<long long>()));
  }
  if (j.is_number_unsigned()) {
    unsigned long long u = j.get<unsigned long long>();
    return Rat::parse(std::to_string(u));
  }
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_float()) {
    throw InputError(
        "floating-point literal " + j.dump() +
        " is not exact; write it as a string (\"p/q\" or decimal)");
  }
  throw InputError("expected a rational literal, got " + j.dump());
}

json rat_to_json(const Rat& r) {
  if (r.is_integer() && r.fits_long()) return json(r.to_long());
  return json(r.str());
}

RatVec vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json vec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& r : v) out.push_back(rat_to_json(r));
  return out;
}

RatMatrix matrix_from_json(const json& j) {
  const json* rows = nullptr;
  if (j.is_object() && j.contains("rows")) {
    rows = &j.at("rows");
  } else if (j.is_array()) {
    rows = &j;
  } else {
    throw InputError("expected a matrix ({\"rows\": [[...]]} or [[...]])");
  }
  if (!rows->is_array() || rows->empty()) {
    throw InputError("matrix needs at least one row");
  }
  const int nrows = static_cast<int>(rows->size());
  int ncols = -1;
  std::vector<RatVec> data;
  for (const auto& r : *rows) {
    if (!r.is_array()) throw InputError("matrix rows must be arrays");
    if (ncols < 0) {
      ncols = static_cast<int>(r.size());
      if (ncols == 0) throw InputError("matrix rows must be nonempty");
    } else if (static_cast<int>(r.size()) != ncols) {
      throw InputError("matrix rows have inconsistent lengths");
    }
    data.push_back(vec_from_json(r));
  }
  RatMatrix m(nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    for (int k = 0; k < ncols; ++k) m(i, k) = data[i][k];
  }
  return m;
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return json{{"rows", rows}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InputError("certificate must be an object");
  for (const char* key : {"X", "Y", "r", "s"}) {
    if (!j.contains(key)) {
      throw InputError(std::string("certificate is missing \"") + key + "\"");
    }
  }
  Certificate c{matrix_from_json(j.at("X")), matrix_from_json(j.at("Y")),
                vec_from_json(j.at("r")), vec_from_json(j.at("s"))};
  const int n = c.x.rows();
  if (c.x.cols() != n || c.y.rows() != n || c.y.cols() != n) {
    throw InputError("certificate X and Y must be square of equal order");
  }
  if (static_cast<int>(c.r.size()) != n ||
      static_cast<int>(c.s.size()) != n) {
    throw InputError("certificate r and s must have length " +
                     std::to_string(n));
  }
  return c;
}

json certificate_to_json(const Certificate& c) {
  return json{{"X", matrix_to_json(c.x)},
              {"Y", matrix_to_json(c.y)},
              {"r", vec_to_json(c.r)},
              {"s", vec_to_json(c.s)}};
}

InstanceFile instance_from_json(const json& j) {
  InstanceFile f;
  if (j.is_object() && j.contains("A")) {
    f.a = matrix_from_json(j.at("A"));
    if (j.contains("q")) f.q = vec_from_json(j.at("q"));
    if (j.contains("certificate")) {
      f.cert = certificate_from_json(j.at("certificate"));
    }
  } else {
    f.a = matrix_from_json(j);
  }
  if (f.a.rows() != f.a.cols()) {
    throw InputError("instance matrix A must be square");
  }
  if (f.q.has_value() &&
      static_cast<int>(f.q->size()) != f.a.rows()) {
    throw InputError("q has length " + std::to_string(f.q->size()) +
                     " but A has order " + std::to_string(f.a.rows()));
  }
  if (f.cert.has_value() && f.cert->x.rows() != f.a.rows()) {
    throw InputError("certificate order " + std::to_string(f.cert->x.rows()) +
                     " does not match matrix order " +
                     std::to_string(f.a.rows()));
  }
  return f;
}

json indexset_to_json(const IndexSet& s) {
  json out = json::array();
  for (int i : s.members()) out.push_back(i + 1);
  return out;
}

IndexSet indexset_from_members_1based(int universe,
                                      const std::vector<long>& members) {
  std::vector<int> zero_based;
  zero_based.reserve(members.size());
  for (long m : members) {
    if (m < 1 || m > universe) {
      throw InputError("index " + std::to_string(m) +
                       " outside 1.." + std::to_string(universe));
    }
    zero_based.push_back(static_cast<int>(m - 1));
  }
  return IndexSet(universe, std::move(zero_based));
}

json suite_report_to_json(const SuiteReport& rep) {
  json violations = json::array();
  for (const auto& v : rep.violations) {
    violations.push_back(json{{"trial_seed", v.trial_seed},
                              {"detail", v.detail}});
  }
  json reasons = json::object();
  for (const auto& [reason, count] : rep.skip_reasons) {
    reasons[reason] = count;
  }
  return json{{"schema", kSchemaTag},
              {"suite", rep.suite_id},
              {"trials", rep.trials},
              {"n_max", rep.n_max},
              {"seed", rep.seed},
              {"passed", rep.passed()},
              {"skipped", rep.skipped},
              {"skip_reasons", reasons},
              {"violations", violations}};
}

json solution_to_json(const LcpSolution& sol) {
  return json{{"z", vec_to_json(sol.z)},
              {"w", vec_to_json(sol.w)},
              {"support", indexset_to_json(sol.support)},
              {"degenerate", sol.degenerate}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Reconstruct line/column from the byte offset for a usable diagnostic.
    size_t line = 1, col = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + e.what());
  }
}

}  // namespace lcplab
