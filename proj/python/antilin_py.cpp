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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "antilin/antilin.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace antilin;

namespace {

std::map<std::string, PyObject *> &error_types() {
    static std::map<std::string, PyObject *> types;
    return types;
}

void add_error(py::module_ &m, const std::string &name, PyObject *base) {
    std::string full = "antilin._core." + name;
    PyObject *t = PyErr_NewException(full.c_str(), base, nullptr);
    error_types()[name] = t;
    m.attr(name.c_str()) = py::handle(t);
}

std::vector<AntiOp> antis(const std::vector<Mat> &ms) {
    std::vector<AntiOp> out;
    for (const auto &m : ms) out.emplace_back(m);
    return out;
}

std::vector<Mat> mats(const std::vector<AntiOp> &ops) {
    std::vector<Mat> out;
    for (const auto &o : ops) out.push_back(o.mat);
    return out;
}

ConjugationCurve curve_of(const std::vector<Mat> &samples) { return {antis(samples), true}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Antilinear operator calculus";
    m.attr("__version__") = "0.1.0";
    m.attr("DEFAULT_TOL") = kDefaultTol;

    add_error(m, "Error", PyExc_RuntimeError);
    add_error(m, "ToleranceError", error_types()["Error"]);
    for (const char *name : {"DimError", "ZeroVectorError", "UnsupportedDimError", "NotNormalError",
                             "NotInvolutionError", "NotUnitaryError", "NotHermitianError", "CommutationError",
                             "NotConjugationError", "NotClosedError", "NotLagrangianError",
                             "DegenerateInputError", "BetaError", "UndefinedPhaseError", "BasisError",
                             "NotPositiveError", "NotSeparatingError", "NotUnimodularError",
                             "NotNormalizedError", "IncompatibleError", "DecompositionError"}) {
        add_error(m, name, error_types()["Error"]);
    }
    add_error(m, "SamplingTooCoarse", error_types()["ToleranceError"]);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            auto it = error_types().find(e.name());
            PyErr_SetString(it != error_types().end() ? it->second : error_types()["Error"], e.what());
        }
    });

    // Matrices are numpy complex arrays. An antilinear operator M acts as v -> M conj(v).
    m.def("apply_anti", [](const Mat &a, const Vec &v) { return AntiOp(a)(v); });
    m.def("compose_anti", [](const Mat &a, const Mat &b) { return compose(AntiOp(a), AntiOp(b)).mat; },
          "matrix of the linear operator a∘b for antilinear a, b");
    m.def("canonical_form", [](const Mat &a, const Mat &b) { return canonical_form(AntiOp(a), AntiOp(b)); });
    m.def("classify", [](const Mat &a, double tol) { return std::string(to_string(classify(AntiOp(a), tol))); },
          py::arg("theta"), py::arg("tol") = kDefaultTol);
    m.def(
        "polar",
        [](const Mat &a, double tol) {
            PolarParts p = polar_anti(AntiOp(a), tol);
            return py::dict("left"_a = p.left.mat, "modulus"_a = p.modulus.mat, "right"_a = p.right.mat,
                            "modulus_right"_a = p.modulus_right.mat);
        },
        py::arg("theta"), py::arg("tol") = kDefaultTol);
    m.def(
        "whv_decompose",
        [](const Mat &a, double tol) {
            WhvForm f = whv_decompose(AntiOp(a), tol);
            return py::dict("blocks1d"_a = f.blocks_1d, "blocks2d"_a = f.blocks_2d, "basis"_a = f.basis);
        },
        py::arg("theta"), py::arg("tol") = kDefaultTol);
    m.def("whv_reassemble", [](const std::vector<double> &b1, const std::vector<cplx> &b2, const Mat &basis) {
        return whv_reassemble(WhvForm{b1, b2, basis}).mat;
    });

    m.def("maslov_index", [](const std::vector<Mat> &s, double guard, double tol) {
        return maslov_index(curve_of(s), guard, tol);
    }, py::arg("samples"), py::arg("guard") = 0.1, py::arg("tol") = kDefaultTol);
    m.def("maslov_sum", [](const std::vector<Mat> &s, double tol) { return maslov_sum(curve_of(s), tol); },
          py::arg("samples"), py::arg("tol") = kDefaultTol);
    m.def(
        "acq_samples",
        [](const Mat &theta0, const Mat &h, double t0, double t1, int n) {
            return mats(sample_closed(make_acq_line(AntiOp(theta0), LinOp(h)), t0, t1, n).samples);
        },
        "n samples of t -> exp(itH) theta0 exp(-itH) on [t0, t1)");

    m.def("uet_test_dim3", [](const Mat &x, double tol) { return uet_test_dim3(LinOp(x), tol); },
          py::arg("x"), py::arg("tol") = kDefaultTol);
    m.def(
        "build_copositive",
        [](const std::vector<Vec> &in, const std::vector<Vec> &out, const Mat &beta, double tol) {
            CopositiveMap t = build_copositive(in, out, beta, tol);
            return py::dict("kraus"_a = mats(t.kraus_anti), "K"_a = t.k_op.mat, "length"_a = t.length());
        },
        py::arg("inputs"), py::arg("outputs"), py::arg("beta"), py::arg("tol") = kDefaultTol);
    m.def("apply_copositive", [](const std::vector<Mat> &kraus, const Mat &x) {
        return apply_copositive(make_copositive(antis(kraus)), LinOp(x)).mat;
    });
    m.def("geometric_phase", [](const std::vector<Mat> &ps, double tol) {
        std::vector<LinOp> ops(ps.begin(), ps.end());
        return geometric_phase(ops, tol);
    }, py::arg("projections"), py::arg("tol") = kDefaultTol);

    m.def("geometric_mean", [](const Mat &a, const Mat &b, double tol) {
        return geometric_mean(PositiveOp(a, tol), PositiveOp(b, tol)).mat;
    }, py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol);
    m.def(
        "modular_from_bipartite",
        [](const Mat &c, double tol) {
            ModularTriple t = modular_from_bipartite(c, tol);
            return py::make_tuple(t.s.mat, t.delta.mat, t.j.mat);
        },
        py::arg("coeffs"), py::arg("tol") = kDefaultTol, "(S, Delta, J) on the row-major product space");

    m.def("smap_ba", [](const Mat &c) { return smap_ba(BipartiteVector(c)).mat; });
    m.def("smap_ab", [](const Mat &c) { return smap_ab(BipartiteVector(c)).mat; });
    m.def("teleport_map", [](const Mat &phi_bc, const Mat &psi_ab) {
        return teleport_map(BipartiteVector(phi_bc), BipartiteVector(psi_ab)).mat;
    });
    m.def("teleport_fidelity", [](const Mat &phi_bc, const Mat &psi_ab, double tol) {
        return teleport_fidelity(BipartiteVector(phi_bc), BipartiteVector(psi_ab), tol);
    }, py::arg("phi_bc"), py::arg("psi_ab"), py::arg("tol") = kDefaultTol);
    m.def("uhlmann_fidelity", &uhlmann_fidelity, py::arg("rho1"), py::arg("rho2"), py::arg("tol") = kDefaultTol);
    m.def("entanglement_swap", [](const Mat &phi23, const Mat &phi45, const Mat &psi34) {
        return entanglement_swap(BipartiteVector(phi23), BipartiteVector(phi45), BipartiteVector(psi34)).coeffs;
    });
}
