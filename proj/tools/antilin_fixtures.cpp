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

// Writes the example files under docs/fixtures. Usage: antilin_fixtures DIR

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "antilin/antilin.hpp"
#include "antilin/io.hpp"

using namespace antilin;
using io::json;

namespace {

void write(const std::string &dir, const std::string &name, const json &j) {
    std::ofstream f(dir + "/" + name, std::ios::binary);
    f << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    if (argc != 2) {
        std::cerr << "usage: antilin_fixtures DIR\n";
        return 2;
    }
    const std::string dir = argv[1];
    const cplx I(0, 1);
    auto p = pauli_basis();

    write(dir, "operator_tau0.json", io::op_to_json(p.tau[0]));

    Mat n(3, 3);
    n << 2, 0, 0, 0, 0, 1.0 + I, 0, 1.0 - I, 0;
    write(dir, "operator_normal.json", io::op_to_json(AntiOp(n)));
    write(dir, "whv_normal.json", io::whv_to_json(whv_decompose(AntiOp(n))));

    Mat a(2, 2), b(2, 2);
    a << 2, I, -I, 1;
    b << 1, 0, 0, 4;
    write(dir, "positive_a.json", io::op_to_json(LinOp(a)));
    write(dir, "positive_b.json", io::op_to_json(LinOp(b)));

    Vec v(2);
    v << 0.6, 0.8 * I;
    write(dir, "vector.json", io::vector_to_json(v));

    write(dir, "bipartite_bell.json", io::bipartite_to_json(BipartiteVector::max_entangled(2)));
    Mat c(2, 2);
    c << std::sqrt(0.7), 0, 0, std::sqrt(0.3) * I;
    write(dir, "bipartite_psi.json", io::bipartite_to_json(BipartiteVector(c)));

    Vec e = Vec::Unit(2, 0);
    auto line = make_acq_line(AntiOp::standard(2), rank_one_lin(e, e));
    write(dir, "curve_generator_loop.json", io::curve_to_json(sample_closed(line, 0, std::numbers::pi, 400)));

    const double s = 1 / std::sqrt(2.0);
    Vec f1(2), f2(2);
    f1 << s, s;
    f2 << s, -s;
    Mat beta(2, 2);
    beta << 1, 0.5, 0.5, 1;
    io::CopositiveInput in{{Vec::Unit(2, 0), Vec::Unit(2, 1)}, {f1, f2}, beta};
    write(dir, "copositive_input.json", io::copositive_input_to_json(in));
    return 0;
}
