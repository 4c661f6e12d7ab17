// Copyright 2026 The antilin Authors
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

#ifndef ANTILIN_IO_HPP
#define ANTILIN_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "antilin/decomp.hpp"
#include "antilin/epr.hpp"
#include "antilin/symplectic.hpp"

// JSON encodings. Complex numbers are [re, im] pairs, matrices are row-major
// lists of rows.
namespace antilin::io {

using json = nlohmann::json;

/// Malformed input. `where` is a JSON pointer into the offending document.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &where, const std::string &what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string &where() const { return where_; }

   private:
    std::string where_;
};

/// Rounds to 12 significant digits; -0 becomes 0.
double round12(double x);

json to_json(cplx z);
json matrix_to_json(const Mat &m);
json vector_to_json(const Vec &v);  // {"dim", "entries"}
json op_to_json(const Op &op);      // {"dim", "kind", "matrix"}
json bipartite_to_json(const BipartiteVector &psi);
json whv_to_json(const WhvForm &form);
json curve_to_json(const ConjugationCurve &curve);

cplx cplx_from_json(const json &j, const std::string &where = "");
Mat matrix_from_json(const json &j, const std::string &where = "");
Vec vector_from_json(const json &j, const std::string &where = "");
Op op_from_json(const json &j, const std::string &where = "");
AntiOp anti_from_json(const json &j, const std::string &where = "");
LinOp lin_from_json(const json &j, const std::string &where = "");
BipartiteVector bipartite_from_json(const json &j, const std::string &where = "");
ConjugationCurve curve_from_json(const json &j, const std::string &where = "");

struct CopositiveInput {
    std::vector<Vec> inputs;
    std::vector<Vec> outputs;
    Mat beta;
};
CopositiveInput copositive_input_from_json(const json &j, const std::string &where = "");
json copositive_input_to_json(const CopositiveInput &in);

/// Reads and parses a file; parse failures report the file and byte offset.
json load_file(const std::string &path);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string &bytes);
std::uint64_t fnv1a(const std::string &bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace antilin::io

#endif
