#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgfrft/filtering.hpp"
#include "hgfrft/graph.hpp"
#include "hgfrft/linalg.hpp"
#include "hgfrft/sampling.hpp"
#include "hgfrft/signals.hpp"
#include "hgfrft/transform.hpp"

namespace py = pybind11;
using namespace hgfrft;

namespace {

FrequencyRegion make_region(const std::vector<std::pair<Index, Index>>& pairs, Index m, Index n)
{
    return FrequencyRegion(pairs, m, n);
}

}  // namespace

PYBIND11_MODULE(_hgfrft, mod)
{
    mod.doc() = "Joint Hilbert-space / graph fractional Fourier transforms";

    static py::exception<Error> error_type(mod, "HgfrftError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, e.what());
        }
    });

    py::enum_<ShiftKind>(mod, "ShiftKind")
        .value("Adjacency", ShiftKind::Adjacency)
        .value("Laplacian", ShiftKind::Laplacian)
        .value("CyclicShift", ShiftKind::CyclicShift);

    py::class_<Graph>(mod, "Graph")
        .def(py::init([](Index n, const std::vector<std::tuple<Index, Index, double>>& edges, bool directed) {
                 std::vector<Edge> list;
                 for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
                 return Graph(n, std::move(list), directed);
             }),
             py::arg("n"), py::arg("edges"), py::arg("directed") = false)
        .def_property_readonly("n", &Graph::size)
        .def_property_readonly("directed", &Graph::directed)
        .def("adjacency", &Graph::adjacency)
        .def("connected", &Graph::connected)
        .def("edges", [](const Graph& g) {
            std::vector<std::tuple<Index, Index, double>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
            return out;
        });

    mod.def("path_graph", &path_graph, py::arg("n"));
    mod.def("cycle_graph", &cycle_graph, py::arg("n"), py::arg("directed") = false);
    mod.def("cartesian_product", &cartesian_product);
    mod.def("random_geometric_graph",
            [](Index n, double radius, std::uint64_t seed) { return random_geometric_graph(n, radius, seed).graph; },
            py::arg("n"), py::arg("radius"), py::arg("seed"));
    mod.def("shift_matrix", &shift_matrix, py::arg("graph"), py::arg("kind") = ShiftKind::Laplacian);

    mod.def("principal_log", &linalg::principal_log);
    mod.def(
        "frac_power", [](const ComplexMatrix& a, double beta) { return linalg::frac_power(linalg::eig_normal(a), beta); },
        py::arg("a"), py::arg("beta"));

    py::class_<OperatorFamily, std::shared_ptr<OperatorFamily>>(mod, "OperatorFamily")
        .def_property_readonly("base", &OperatorFamily::base)
        .def_property_readonly("frequencies", &OperatorFamily::frequencies)
        .def_property_readonly("name", &OperatorFamily::name)
        .def("power", [](const OperatorFamily& f, double order) { return f.at_order(order).mat(); });

    auto as_mut = [](OperatorFamilyPtr p) { return std::const_pointer_cast<OperatorFamily>(p); };
    mod.def(
        "gft_operator", [as_mut](const Graph& g, ShiftKind kind) { return as_mut(gft_operator(g, kind)); },
        py::arg("graph"), py::arg("kind") = ShiftKind::Laplacian);
    mod.def("dft_operator", [as_mut](Index m) { return as_mut(dft_operator(m)); }, py::arg("m"));

    mod.def(
        "hgfrft",
        [](const ComplexMatrix& x, const OperatorFamily& h, const OperatorFamily& g, double alpha, double beta) {
            return hgfrft::hgfrft(JointSignal{x}, h.at_order(alpha), g.at_order(beta)).coeff;
        },
        py::arg("x"), py::arg("hilbert"), py::arg("graph"), py::arg("alpha"), py::arg("beta"));
    mod.def(
        "inverse_hgfrft",
        [](const ComplexMatrix& y, const OperatorFamily& h, const OperatorFamily& g, double alpha, double beta) {
            return inverse_hgfrft(JointSpectrum{y, alpha, beta}, h.at_order(-alpha), g.at_order(-beta)).x;
        },
        py::arg("y"), py::arg("hilbert"), py::arg("graph"), py::arg("alpha"), py::arg("beta"));
    mod.def(
        "bandpass",
        [](const ComplexMatrix& x, const std::vector<std::pair<Index, Index>>& region, const OperatorFamily& h,
           const OperatorFamily& g, double alpha, double beta) {
            return bandpass(JointSignal{x}, make_region(region, x.rows(), x.cols()), h.at_order(alpha),
                            g.at_order(beta))
                .x;
        },
        py::arg("x"), py::arg("region"), py::arg("hilbert"), py::arg("graph"), py::arg("alpha"), py::arg("beta"));

    mod.def(
        "greedy_sample",
        [](const OperatorFamily& h, const OperatorFamily& g, double alpha, double beta,
           const std::vector<std::pair<Index, Index>>& support, Index num_samples) {
            return greedy_plan(h.at_order(alpha), g.at_order(beta), make_region(support, h.dim(), g.dim()),
                               num_samples)
                .w;
        },
        py::arg("hilbert"), py::arg("graph"), py::arg("alpha"), py::arg("beta"), py::arg("support"),
        py::arg("num_samples") = -1);
    mod.def(
        "recover",
        [](const ComplexVector& samples, const std::vector<Index>& w, const OperatorFamily& h,
           const OperatorFamily& g, double alpha, double beta, const std::vector<std::pair<Index, Index>>& support) {
            const SamplingPlan plan =
                make_plan(h.at_order(alpha), g.at_order(beta), make_region(support, h.dim(), g.dim()), w);
            return recover(samples, plan).x;
        },
        py::arg("samples"), py::arg("w"), py::arg("hilbert"), py::arg("graph"), py::arg("alpha"), py::arg("beta"),
        py::arg("support"));
    mod.def("greedy_rows", &greedy_sample, py::arg("basis"), py::arg("num_samples"));
}
