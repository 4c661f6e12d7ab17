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

// Command-line front end. Every command reads JSON files and prints a report
// {"command", "inputs_digest", "result", "diagnostics"}.
//
// Exit codes: 0 ok, 2 bad arguments or input files, 3 library error,
// 4 tolerance failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "antilin/antilin.hpp"
#include "antilin/io.hpp"
#include "antilin/linalg.hpp"

namespace {

using namespace antilin;
using io::json;

constexpr int kExitParse = 2;
constexpr int kExitLibrary = 3;
constexpr int kExitTolerance = 4;

struct Context {
    double tol = kDefaultTol;
    std::vector<std::string> paths;
    std::vector<std::string> diagnostics;

    json load(const std::string &path) {
        paths.push_back(path);
        return io::load_file(path);
    }

    std::string digest() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const auto &p : paths) {
            std::ifstream f(p, std::ios::binary);
            std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
            h = io::fnv1a(bytes, h);
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
        return buf;
    }
};

// Result plus a flag asking for exit code 4 after printing.
struct Outcome {
    json result;
    bool tolerance_failure = false;
};

Outcome cmd_classify(Context &ctx, const std::string &op_path) {
    AntiOp t = io::anti_from_json(ctx.load(op_path));
    AntiClass c = classify(t, ctx.tol);
    return {{{"class", to_string(c)}, {"normal", is_normal(t, ctx.tol)}}};
}

Outcome cmd_decompose(Context &ctx, const std::string &op_path) {
    AntiOp t = io::anti_from_json(ctx.load(op_path));
    WhvForm f = whv_decompose(t, ctx.tol);
    json r = io::whv_to_json(f);
    r["residual"] = io::round12(la::max_abs(whv_reassemble(f).mat - t.mat));
    return {r};
}

Outcome cmd_polar(Context &ctx, const std::string &op_path) {
    AntiOp t = io::anti_from_json(ctx.load(op_path));
    PolarParts p = polar_anti(t, ctx.tol);
    return {{{"left", io::op_to_json(p.left)},
             {"modulus", io::op_to_json(p.modulus)},
             {"right", io::op_to_json(p.right)},
             {"modulus_right", io::op_to_json(p.modulus_right)}}};
}

Outcome cmd_maslov(Context &ctx, const std::string &curve_path, double guard) {
    ConjugationCurve c = io::curve_from_json(ctx.load(curve_path));
    long n = maslov_index(c, guard, ctx.tol);
    double s = maslov_sum(c, ctx.tol);
    ctx.diagnostics.push_back("residual " + std::to_string(std::abs(s - (double)n)));
    return {{{"index", n}, {"sum", io::round12(s)}, {"samples", c.samples.size()}}};
}

Outcome cmd_copositive(Context &ctx, const std::string &path) {
    io::CopositiveInput in = io::copositive_input_from_json(ctx.load(path));
    CopositiveMap t = build_copositive(in.inputs, in.outputs, in.beta, ctx.tol);
    const size_t n = in.inputs.size();
    double scale = std::max(1.0, la::max_abs(t.k_op.mat));
    double worst = 0;
    for (size_t j = 0; j < n; j++) {
        for (size_t k = 0; k < n; k++) {
            LinOp x = rank_one_lin(in.inputs[j], in.inputs[k]);
            LinOp y = apply_copositive(t, x);
            Mat want = in.beta(j, k) * rank_one_lin(in.outputs[k], in.outputs[j]).mat;
            worst = std::max(worst, la::max_abs(y.mat - want));
            worst = std::max(worst, std::abs(y.mat.trace() - (t.k_op.mat * x.mat).trace()));
        }
    }
    bool ok = worst <= ctx.tol * scale;
    if (!ok) ctx.diagnostics.push_back("trace identities violated by " + std::to_string(worst));
    return {{{"length", t.length()}, {"K", io::matrix_to_json(t.k_op.mat)}, {"traces_check", ok}}, !ok};
}

Outcome cmd_mean(Context &ctx, const std::string &a_path, const std::string &b_path) {
    PositiveOp a(io::lin_from_json(ctx.load(a_path), "a").mat, ctx.tol);
    PositiveOp b(io::lin_from_json(ctx.load(b_path), "b").mat, ctx.tol);
    return {{{"mean", io::op_to_json(geometric_mean(a, b).op())}}};
}

Outcome cmd_modular(Context &ctx, const std::string &psi_path) {
    BipartiteVector psi = io::bipartite_from_json(ctx.load(psi_path));
    ModularTriple m = modular_from_bipartite(psi.coeffs, ctx.tol);
    return {{{"S", io::op_to_json(m.s)}, {"Delta", io::op_to_json(m.delta.op())}, {"J", io::op_to_json(m.j)}}};
}

Outcome cmd_teleport(Context &ctx, const std::string &psi_path, const std::string &phi_path,
                     const std::string &in_path) {
    BipartiteVector psi = io::bipartite_from_json(ctx.load(psi_path));
    BipartiteVector phi = io::bipartite_from_json(ctx.load(phi_path));
    Vec v = io::vector_from_json(ctx.load(in_path));
    TeleportMap t = teleport_map(phi, psi);
    if (v.size() != t.dim_in()) throw DimError("input vector does not live on the A space");
    Vec out = t(v);
    return {{{"output", io::vector_to_json(out)}, {"norm", io::round12(out.norm())}}};
}

Outcome cmd_fidelity(Context &ctx, const std::string &psi_path, const std::string &phi_path) {
    BipartiteVector psi = io::bipartite_from_json(ctx.load(psi_path));
    BipartiteVector phi = io::bipartite_from_json(ctx.load(phi_path));
    return {{{"fidelity", io::round12(teleport_fidelity(phi, psi, ctx.tol))}}};
}

Outcome cmd_swap(Context &ctx, const std::string &p23, const std::string &p45, const std::string &s34) {
    BipartiteVector a = io::bipartite_from_json(ctx.load(p23));
    BipartiteVector b = io::bipartite_from_json(ctx.load(p45));
    BipartiteVector s = io::bipartite_from_json(ctx.load(s34));
    BipartiteVector out = entanglement_swap(a, b, s);
    return {{{"state", io::bipartite_to_json(out)}, {"norm", io::round12(out.coeffs.norm())}}};
}

std::string human(const json &report) {
    std::string s = "command: " + report["command"].get<std::string>() + "\n";
    s += "inputs_digest: " + report["inputs_digest"].get<std::string>() + "\n";
    for (auto it = report["result"].begin(); it != report["result"].end(); ++it) {
        s += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
    }
    for (const auto &d : report["diagnostics"]) s += "note: " + d.get<std::string>() + "\n";
    return s;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"antilin: antilinear operator toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    double tol = kDefaultTol;
    std::string output;
    app.add_flag("--json", json_out, "print the report as JSON");
    auto *tol_opt = app.add_option("--tol", tol, "numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--output", output, "write the report to this file");

    std::map<std::string, std::string> f;
    double guard = 0.1;
    auto need = [&](CLI::App *sub, const std::string &name, const std::string &help) {
        sub->add_option("--" + name, f[name], help)->required();
    };
    auto *c_classify = app.add_subcommand("classify", "label an antilinear operator");
    need(c_classify, "op", "operator JSON");
    auto *c_decompose = app.add_subcommand("decompose", "block form of a normal antilinear operator");
    need(c_decompose, "op", "operator JSON");
    auto *c_polar = app.add_subcommand("polar", "polar decomposition");
    need(c_polar, "op", "operator JSON");
    auto *c_maslov = app.add_subcommand("maslov", "Maslov index of a closed curve of conjugations");
    need(c_maslov, "curve", "curve JSON");
    c_maslov->add_option("--guard", guard, "largest accepted distance from an integer");
    auto *c_copositive = app.add_subcommand("copositive", "copositive map from inputs, outputs and beta");
    need(c_copositive, "input", "copositive input JSON");
    auto *c_mean = app.add_subcommand("mean", "geometric mean of positive operators");
    need(c_mean, "a", "operator JSON");
    need(c_mean, "b", "operator JSON");
    auto *c_modular = app.add_subcommand("modular", "modular objects of a bipartite vector");
    need(c_modular, "psi", "bipartite JSON");
    auto *c_teleport = app.add_subcommand("teleport", "apply the teleportation map");
    need(c_teleport, "psi", "bipartite JSON on A x B");
    need(c_teleport, "phi", "bipartite JSON on B x C");
    need(c_teleport, "input", "vector JSON on A");
    auto *c_fidelity = app.add_subcommand("fidelity", "trace norm of the teleportation map");
    need(c_fidelity, "psi", "bipartite JSON on A x B");
    need(c_fidelity, "phi", "bipartite JSON on B x C");
    auto *c_swap = app.add_subcommand("swap", "entanglement swapping");
    need(c_swap, "phi23", "bipartite JSON");
    need(c_swap, "phi45", "bipartite JSON");
    need(c_swap, "psi34", "bipartite JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    Context ctx;
    if (tol_opt->count() > 0) {
        ctx.tol = tol;
    } else if (const char *env = std::getenv("ANTILIN_TOL")) {
        char *end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0)) {
            std::cerr << "error: ANTILIN_TOL is not a positive number\n";
            return kExitParse;
        }
        ctx.tol = v;
    }

    CLI::App *sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    Outcome out;
    try {
        if (sub == c_classify) out = cmd_classify(ctx, f["op"]);
        else if (sub == c_decompose) out = cmd_decompose(ctx, f["op"]);
        else if (sub == c_polar) out = cmd_polar(ctx, f["op"]);
        else if (sub == c_maslov) out = cmd_maslov(ctx, f["curve"], guard);
        else if (sub == c_copositive) out = cmd_copositive(ctx, f["input"]);
        else if (sub == c_mean) out = cmd_mean(ctx, f["a"], f["b"]);
        else if (sub == c_modular) out = cmd_modular(ctx, f["psi"]);
        else if (sub == c_teleport) out = cmd_teleport(ctx, f["psi"], f["phi"], f["input"]);
        else if (sub == c_fidelity) out = cmd_fidelity(ctx, f["psi"], f["phi"]);
        else out = cmd_swap(ctx, f["phi23"], f["phi45"], f["psi34"]);
    } catch (const io::ParseError &e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return kExitParse;
    } catch (const ToleranceError &e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kExitTolerance;
    } catch (const Error &e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kExitLibrary;
    }

    json report = {{"command", cmd},
                   {"inputs_digest", ctx.digest()},
                   {"result", out.result},
                   {"diagnostics", ctx.diagnostics}};
    std::string text = json_out ? report.dump(2) + "\n" : human(report);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream o(output, std::ios::binary);
        if (!o) {
            std::cerr << "error: cannot write " << output << "\n";
            return kExitParse;
        }
        o << text;
    }
    return out.tolerance_failure ? kExitTolerance : 0;
}
