#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pjacobi/bounds.hpp"
#include "pjacobi/discriminant.hpp"
#include "pjacobi/errors.hpp"
#include "pjacobi/io.hpp"
#include "pjacobi/quasimomentum.hpp"
#include "pjacobi/spectrum.hpp"

namespace py = pybind11;
using namespace pjacobi;

namespace {

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

std::pair<double, double> as_pair(const Interval& i) { return {i.lo, i.hi}; }

std::vector<std::pair<double, double>> as_pairs(const std::vector<Interval>& v) {
    std::vector<std::pair<double, double>> out;
    for (const Interval& i : v) out.push_back(as_pair(i));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Periodic Jacobi matrices: discriminant, bands, quasimomentum and gap bounds";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<PeriodicJacobi>(m, "PeriodicJacobi")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("a"), py::arg("b"))
        .def_property_readonly("q", &PeriodicJacobi::period)
        .def_property_readonly("a", [](const PeriodicJacobi& J) { return to_vec(J.a()); })
        .def_property_readonly("b", [](const PeriodicJacobi& J) { return to_vec(J.b()); })
        .def_property_readonly("capacity", &PeriodicJacobi::capacity)
        .def("__repr__", [](const PeriodicJacobi& J) { return "<PeriodicJacobi q=" + std::to_string(J.period()) + ">"; });

    m.def("make_jacobi", &make_jacobi, py::arg("q"), py::arg("a"), py::arg("b"));
    m.def("harper", &harper, py::arg("p"), py::arg("q"), py::arg("theta") = 0.0);
    m.def("shift_diagonal", &shift_diagonal, py::arg("J"), py::arg("s"));
    m.def("trace_powers", [](const PeriodicJacobi& J, int jmax) { return trace_powers(build_L(J), jmax); },
          py::arg("J"), py::arg("jmax"));

    m.def("discriminant", py::overload_cast<const PeriodicJacobi&, double>(&discriminant_value), py::arg("J"),
          py::arg("lam"));
    m.def("discriminant_complex", py::overload_cast<const PeriodicJacobi&, cplx>(&discriminant_value),
          py::arg("J"), py::arg("lam"));
    m.def("discriminant_coefficients", [](const PeriodicJacobi& J) { return discriminant_poly(J).poly.coeffs; });
    m.def("critical_points", &critical_points);
    m.def(
        "reconstruct",
        [](const PeriodicJacobi& J) {
            const MonicPair mp = monic_pair(J);
            return reconstruct_from_monic_pair(mp.phi_hat_q1, mp.phi_hat_q, mp.leading);
        },
        py::arg("J"), "Round trip through the monic orthogonal polynomial pair.");

    py::class_<BandStructure>(m, "BandStructure")
        .def_readonly("edges", &BandStructure::edges)
        .def_readonly("closed", &BandStructure::closed)
        .def_readonly("critical_points", &BandStructure::critical_points)
        .def_readonly("c", &BandStructure::c)
        .def_readonly("capacity", &BandStructure::capacity)
        .def_readonly("shift", &BandStructure::shift)
        .def_property_readonly("bands", [](const BandStructure& B) { return as_pairs(B.bands()); })
        .def_property_readonly("gaps", [](const BandStructure& B) { return as_pairs(B.gaps()); });

    m.def("band_edges", [](const PeriodicJacobi& J) { return band_edges(J); });
    m.def("normalize", [](const PeriodicJacobi& J) {
        NormalizedOperator N = normalize(J);
        return py::make_tuple(N.op, N.bands);
    });
    m.def("bloch_oracle", [](const PeriodicJacobi& J, int n) { return as_pairs(bloch_oracle(J, n)); },
          py::arg("J"), py::arg("n_theta") = 721);

    py::class_<MomentCheck>(m, "MomentCheck")
        .def_readonly("n", &MomentCheck::n)
        .def_readonly("lhs", &MomentCheck::lhs)
        .def_readonly("rhs", &MomentCheck::rhs)
        .def_readonly("residual", &MomentCheck::residual);
    py::class_<DirichletResult>(m, "DirichletResult")
        .def_readonly("integral", &DirichletResult::integral)
        .def_readonly("reference", &DirichletResult::reference)
        .def_readonly("residual", &DirichletResult::residual)
        .def_readonly("relative_residual", &DirichletResult::relative_residual)
        .def_readonly("quadrature_error", &DirichletResult::quadrature_error);
    py::class_<VerticalCheck>(m, "VerticalCheck")
        .def_readonly("lhs", &VerticalCheck::lhs)
        .def_readonly("rhs", &VerticalCheck::rhs)
        .def_readonly("residual", &VerticalCheck::residual);

    py::class_<QuasimomentumModel>(m, "Quasimomentum")
        .def(py::init([](const PeriodicJacobi& J) { return QuasimomentumModel::build(J); }), py::arg("J"))
        .def_property_readonly("op", &QuasimomentumModel::op)
        .def_property_readonly("bands", &QuasimomentumModel::bands)
        .def_property_readonly("c", &QuasimomentumModel::c)
        .def_property_readonly("capacity", &QuasimomentumModel::capacity)
        .def_property_readonly("Q", [](const QuasimomentumModel& M) { return to_vec(M.Q()); })
        .def_property_readonly("h", [](const QuasimomentumModel& M) { return to_vec(M.slit_heights()); })
        .def_property_readonly("h_plus", &QuasimomentumModel::h_plus)
        .def_property_readonly("z_gaps", [](const QuasimomentumModel& M) { return as_pairs(M.z_gaps().gaps); })
        .def("u", &QuasimomentumModel::u_of_x, py::arg("x"))
        .def("v", &QuasimomentumModel::v_of_x, py::arg("x"))
        .def("k", &QuasimomentumModel::k, py::arg("z"))
        .def("k_derivative", &QuasimomentumModel::k_derivative, py::arg("z"))
        .def("herglotz_k", [](const QuasimomentumModel& M, cplx z, int n) { return herglotz_k(M, z, n); },
             py::arg("z"), py::arg("n_grid") = 4096)
        .def("trace_moment", [](const QuasimomentumModel& M, int n) { return trace_moment_check(M, n); })
        .def("dirichlet_1", [](const QuasimomentumModel& M, double ymax) {
            DirichletOptions o;
            o.ymax = ymax;
            return dirichlet_integral_1(M, o);
        }, py::arg("ymax") = 12.0)
        .def("dirichlet_2", [](const QuasimomentumModel& M, double ymax) {
            DirichletOptions o;
            o.ymax = ymax;
            return dirichlet_integral_2(M, o);
        }, py::arg("ymax") = 12.0)
        .def("vertical_identity", [](const QuasimomentumModel& M) { return vertical_identity_check(M); })
        .def("sample_csv", [](const QuasimomentumModel& M, int n) { return io::sample_csv(M, n); });

    m.def("certify_json", [](const PeriodicJacobi& J) { return io::dump(io::bounds_json(certify(J))); });
    m.def(
        "analyze_json",
        [](const PeriodicJacobi& J, bool skip_dirichlet, bool skip_herglotz) {
            io::AnalyzeOptions o;
            o.skip_dirichlet = skip_dirichlet;
            o.skip_herglotz = skip_herglotz;
            return io::dump(io::analysis_json({J, std::nullopt}, o));
        },
        py::arg("J"), py::arg("skip_dirichlet") = false, py::arg("skip_herglotz") = false);
    m.def("harper_lower_bound", &harper_lower_bound);
    m.def("harper_bound_demo", [](int p, int q, double theta) {
        const HarperBoundResult r = harper_bound_demo(p, q, theta);
        py::dict d;
        d["c"] = r.c;
        d["lower_bound"] = r.lower_bound;
        d["trace_L2"] = r.trace_L2;
        d["holds"] = r.holds;
        return d;
    }, py::arg("p"), py::arg("q"), py::arg("theta") = 0.0);
}
