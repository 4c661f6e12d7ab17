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

#include "antilin/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace antilin::io {

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json to_json(cplx z) { return json::array({round12(z.real()), round12(z.imag())}); }

json matrix_to_json(const Mat &m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); c++) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const Vec &v) {
    json e = json::array();
    for (Index k = 0; k < v.size(); k++) e.push_back(to_json(v(k)));
    return {{"dim", v.size()}, {"entries", e}};
}

json op_to_json(const Op &op) {
    return {{"dim", dim_of(op)},
            {"kind", is_antilinear(op) ? "antilinear" : "linear"},
            {"matrix", matrix_to_json(matrix_of(op))}};
}

json bipartite_to_json(const BipartiteVector &psi) {
    return {{"dimA", psi.dim_a()}, {"dimB", psi.dim_b()}, {"coeffs", matrix_to_json(psi.coeffs)}};
}

json whv_to_json(const WhvForm &form) {
    json b1 = json::array(), b2 = json::array();
    for (double r : form.blocks_1d) b1.push_back(round12(r));
    for (cplx z : form.blocks_2d) b2.push_back(to_json(z));
    return {{"blocks1d", b1}, {"blocks2d", b2}, {"basis", matrix_to_json(form.basis)}};
}

json curve_to_json(const ConjugationCurve &curve) {
    json s = json::array();
    for (const auto &t : curve.samples) s.push_back(op_to_json(t));
    return {{"closed", curve.closed}, {"samples", s}};
}

namespace {

const json &field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + "/" + key, "missing field");
    return *it;
}

double number(const json &j, const std::string &where) {
    if (!j.is_number()) throw ParseError(where, "expected a number");
    double x = j.get<double>();
    if (!std::isfinite(x)) throw ParseError(where, "non-finite number");
    return x;
}

Index positive_int(const json &j, const std::string &where) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) {
        throw ParseError(where, "expected a positive integer");
    }
    return (Index)j.get<long long>();
}

}  // namespace

cplx cplx_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where, "expected [re, im]");
    return {number(j[0], where + "/0"), number(j[1], where + "/1")};
}

Mat matrix_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) throw ParseError(where, "expected a non-empty list of rows");
    const Index rows = (Index)j.size();
    if (!j[0].is_array() || j[0].empty()) throw ParseError(where + "/0", "expected a non-empty row");
    const Index cols = (Index)j[0].size();
    Mat m(rows, cols);
    for (Index r = 0; r < rows; r++) {
        std::string wr = where + "/" + std::to_string(r);
        if (!j[r].is_array() || (Index)j[r].size() != cols) throw ParseError(wr, "ragged row");
        for (Index c = 0; c < cols; c++) m(r, c) = cplx_from_json(j[r][c], wr + "/" + std::to_string(c));
    }
    return m;
}

Vec vector_from_json(const json &j, const std::string &where) {
    Index d = positive_int(field(j, "dim", where), where + "/dim");
    const json &e = field(j, "entries", where);
    if (!e.is_array() || (Index)e.size() != d) throw ParseError(where + "/entries", "length differs from dim");
    Vec v(d);
    for (Index k = 0; k < d; k++) v(k) = cplx_from_json(e[k], where + "/entries/" + std::to_string(k));
    return v;
}

Op op_from_json(const json &j, const std::string &where) {
    Index d = positive_int(field(j, "dim", where), where + "/dim");
    const json &kind = field(j, "kind", where);
    Mat m = matrix_from_json(field(j, "matrix", where), where + "/matrix");
    if (m.rows() != d || m.cols() != d) throw ParseError(where + "/matrix", "matrix is not dim x dim");
    if (kind == "antilinear") return AntiOp(m);
    if (kind == "linear") return LinOp(m);
    throw ParseError(where + "/kind", "expected \"linear\" or \"antilinear\"");
}

AntiOp anti_from_json(const json &j, const std::string &where) {
    Op op = op_from_json(j, where);
    if (!is_antilinear(op)) throw ParseError(where + "/kind", "expected an antilinear operator");
    return std::get<AntiOp>(op);
}

LinOp lin_from_json(const json &j, const std::string &where) {
    Op op = op_from_json(j, where);
    if (is_antilinear(op)) throw ParseError(where + "/kind", "expected a linear operator");
    return std::get<LinOp>(op);
}

BipartiteVector bipartite_from_json(const json &j, const std::string &where) {
    Index da = positive_int(field(j, "dimA", where), where + "/dimA");
    Index db = positive_int(field(j, "dimB", where), where + "/dimB");
    Mat c = matrix_from_json(field(j, "coeffs", where), where + "/coeffs");
    if (c.rows() != da || c.cols() != db) throw ParseError(where + "/coeffs", "shape differs from dimA x dimB");
    return BipartiteVector(c);
}

ConjugationCurve curve_from_json(const json &j, const std::string &where) {
    ConjugationCurve curve;
    const json &closed = field(j, "closed", where);
    if (!closed.is_boolean()) throw ParseError(where + "/closed", "expected a boolean");
    curve.closed = closed.get<bool>();
    const json &s = field(j, "samples", where);
    if (!s.is_array()) throw ParseError(where + "/samples", "expected a list");
    for (size_t k = 0; k < s.size(); k++) {
        curve.samples.push_back(anti_from_json(s[k], where + "/samples/" + std::to_string(k)));
    }
    return curve;
}

CopositiveInput copositive_input_from_json(const json &j, const std::string &where) {
    CopositiveInput in;
    for (const char *key : {"inputs", "outputs"}) {
        const json &list = field(j, key, where);
        std::string w = where + "/" + key;
        if (!list.is_array()) throw ParseError(w, "expected a list of vectors");
        auto &dst = std::string(key) == "inputs" ? in.inputs : in.outputs;
        for (size_t k = 0; k < list.size(); k++) dst.push_back(vector_from_json(list[k], w + "/" + std::to_string(k)));
    }
    in.beta = matrix_from_json(field(j, "beta", where), where + "/beta");
    return in;
}

json copositive_input_to_json(const CopositiveInput &in) {
    json a = json::array(), b = json::array();
    for (const auto &v : in.inputs) a.push_back(vector_to_json(v));
    for (const auto &v : in.outputs) b.push_back(vector_to_json(v));
    return {{"inputs", a}, {"outputs", b}, {"beta", matrix_to_json(in.beta)}};
}

json load_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path, "cannot open file");
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error &e) {
        throw ParseError(path + "@" + std::to_string(e.byte), e.what());
    }
}

std::uint64_t fnv1a(const std::string &bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a_hex(const std::string &bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(bytes));
    return buf;
}

}  // namespace antilin::io
