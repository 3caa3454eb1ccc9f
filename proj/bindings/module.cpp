#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "twistedmoyal/report.hpp"

namespace py = pybind11;
using namespace tmoyal;

namespace {

Side side_from(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw py::value_error("side must be 'left' or 'right'");
}

StateSide state_side_from(const std::string& s) {
    if (s == "left") return StateSide::left;
    if (s == "right") return StateSide::right;
    throw py::value_error("side must be 'left' or 'right'");
}

Gen gen_from(const std::string& s) {
    if (s == "a") return Gen::a;
    if (s == "abar") return Gen::abar;
    if (s == "x1") return Gen::x1;
    if (s == "x2") return Gen::x2;
    throw py::value_error("generator must be one of a, abar, x1, x2");
}

HMethod method_from(const std::string& s) {
    if (s == "series") return HMethod::series;
    if (s == "mu_operator" || s == "mu") return HMethod::mu_operator;
    if (s == "bracket") return HMethod::bracket;
    throw py::value_error("method must be one of series, mu_operator, bracket");
}

Var var_from(const std::string& s) {
    if (s == "a") return Var::a;
    if (s == "abar") return Var::abar;
    throw py::value_error("variable must be a or abar");
}

EnergyKind energy_kind_from(const std::string& s) {
    if (s == "right_m") return EnergyKind::right_m;
    if (s == "left_n") return EnergyKind::left_n;
    if (s == "lambda11_R") return EnergyKind::lambda11_R;
    if (s == "lambda11_L") return EnergyKind::lambda11_L;
    if (s == "lambda_mk_R") return EnergyKind::lambda_mk_R;
    if (s == "lambda_nl_L") return EnergyKind::lambda_nl_L;
    throw py::value_error("unknown energy kind '" + s + "'");
}

NumericPoint point_from(double x1, double x2, double theta, std::complex<double> omega) {
    return NumericPoint::from_x(x1, x2, theta, omega);
}

}  // namespace

PYBIND11_MODULE(_twistedmoyal, m) {
    m.doc() = "exact first-order twisted Moyal algebra with numeric cross-checks";
    m.attr("__version__") = kEngineVersion;

    // translators run newest-first, so the base class goes in first
    py::register_exception<AlgebraError>(m, "AlgebraError");
    py::register_exception<NotAUnit>(m, "NotAUnit");
    py::register_exception<NonTerminating>(m, "NonTerminating");
    py::register_exception<NotProportional>(m, "NotProportional");
    py::register_exception<LevelTooLarge>(m, "LevelTooLarge");
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange");

    py::class_<TwistedElement>(m, "Element")
        .def(py::init<>())
        .def_static("zero", &TwistedElement::zero)
        .def_static("one", &TwistedElement::one)
        .def_static("a", &TwistedElement::gen_a)
        .def_static("abar", &TwistedElement::gen_abar)
        .def_static("w", &TwistedElement::twist_w)
        .def_static("wbar", &TwistedElement::twist_wbar)
        .def_static("theta", &TwistedElement::theta, py::arg("power") = 1)
        .def_static("gaussian", &TwistedElement::gaussian, py::arg("weight") = 1)
        .def_static("e_inverse", &TwistedElement::e_inverse)
        .def_static("e_factor", &TwistedElement::e_factor)
        .def_static("parse", &parse_element)
        .def("text", [](const TwistedElement& f) { return to_text(f); })
        .def("json", [](const TwistedElement& f) { return element_to_json(f).dump(); })
        .def("is_zero", &TwistedElement::is_zero)
        .def("__len__", &TwistedElement::size)
        .def("__eq__", [](const TwistedElement& a, const TwistedElement& b) { return a == b; })
        .def("__add__", [](const TwistedElement& a, const TwistedElement& b) { return a + b; })
        .def("__sub__", [](const TwistedElement& a, const TwistedElement& b) { return a - b; })
        .def("__mul__", [](const TwistedElement& a, const TwistedElement& b) { return a * b; })
        .def("__neg__", [](const TwistedElement& a) { return -a; })
        .def("__repr__", [](const TwistedElement& f) { return "Element(" + to_text(f) + ")"; })
        .def("scaled",
             [](const TwistedElement& f, long num, long den, int theta_pow) {
                 return f.scaled(CRat(num, den), theta_pow);
             },
             py::arg("num"), py::arg("den") = 1, py::arg("theta_power") = 0);

    m.def("add", &add);
    m.def("mul_pointwise", &mul_pointwise);
    m.def("derive",
          [](const TwistedElement& f, const std::string& v) { return derive(f, var_from(v)); });
    m.def("limit_omega_zero", &limit_omega_zero);
    m.def("invert_unit", &invert_unit);
    m.def("mirror", &mirror);
    m.def("divide_exact", &divide_exact);

    m.def("star_gen_left", [](const std::string& g, const TwistedElement& f) {
        return star_gen_left(gen_from(g), f);
    });
    m.def("star_gen_right", [](const TwistedElement& f, const std::string& g) {
        return star_gen_right(f, gen_from(g));
    });
    m.def("star_series",
          [](const TwistedElement& P, const TwistedElement& f, const std::string& side) {
              return star_series(P, f, side_from(side));
          },
          py::arg("P"), py::arg("f"), py::arg("side") = "left");
    m.def("star_series_frozen",
          [](const TwistedElement& P, const TwistedElement& f, const std::string& side) {
              return star_series_frozen(P, f, side_from(side));
          },
          py::arg("P"), py::arg("f"), py::arg("side") = "left");
    m.def("commutator_star", &commutator_star);
    m.def("anticommutator_star", &anticommutator_star);
    m.def("hamiltonian_left", [](const TwistedElement& f, const std::string& method) {
        return hamiltonian_left(f, method_from(method));
    }, py::arg("f"), py::arg("method") = "series");
    m.def("hamiltonian_right", [](const TwistedElement& f, const std::string& method) {
        return hamiltonian_right(f, method_from(method));
    }, py::arg("f"), py::arg("method") = "series");
    m.def("vector_field_apply", &vector_field_apply);
    m.def("associator", &associator);

    py::class_<LadderState>(m, "LadderState")
        .def_readonly("body", &LadderState::body)
        .def_readonly("level", &LadderState::level)
        .def_property_readonly("side",
                               [](const LadderState& s) {
                                   return s.side == StateSide::right ? "right" : "left";
                               })
        .def_property_readonly("norm", [](const LadderState& s) {
            return py::make_tuple(s.norm.m, s.norm.n);
        });

    m.def("fundamental",
          [](const std::string& side) { return fundamental(state_side_from(side)); });
    m.def("ladder", [](const std::string& side, int level) {
        return ladder(state_side_from(side), level);
    });
    m.def("closed_form", [](const std::string& side, int level) {
        return closed_form(state_side_from(side), level);
    });
    m.def("u_sequence", [](int mm) { return rat_str(u_sequence(mm)); });
    m.def("ladder_u_coefficient", [](const std::string& side, int mm) {
        return rat_str(ladder_u_coefficient(state_side_from(side), mm));
    });
    m.def("extract_eigenvalue", &extract_eigenvalue);
    m.def("paper_energy",
          [](const std::string& kind, int i1, int i2) {
              return paper_energy(energy_kind_from(kind), i1, i2);
          },
          py::arg("kind"), py::arg("i1"), py::arg("i2") = 0);
    m.def("apply_ladder_lowering",
          [](const std::string& side, const LadderState& st, int power) {
              return apply_ladder_lowering(state_side_from(side), st, power);
          });
    m.def("appendix_a_expression", [](const std::string& side, int mm, int kk) {
        return appendix_a_expression(state_side_from(side), mm, kk);
    });

    m.def("eval",
          [](const TwistedElement& f, double x1, double x2, double theta,
             std::complex<double> omega, int norm_m, int norm_n) {
              return eval(f, point_from(x1, x2, theta, omega), NormTag{norm_m, norm_n});
          },
          py::arg("f"), py::arg("x1"), py::arg("x2"), py::arg("theta") = 1.0,
          py::arg("omega") = std::complex<double>{0.0, 0.0}, py::arg("norm_m") = 0,
          py::arg("norm_n") = 0);
    m.def("star_quadrature",
          [](const TwistedElement& f, const TwistedElement& g, double x1, double x2, double theta,
             std::complex<double> omega, int nodes) {
              NumericConfig cfg;
              cfg.theta_val = theta;
              cfg.omega_val = omega;
              cfg.quadrature_nodes = nodes;
              return star_quadrature(f, g, point_from(x1, x2, theta, omega), cfg);
          },
          py::arg("f"), py::arg("g"), py::arg("x1"), py::arg("x2"), py::arg("theta") = 1.0,
          py::arg("omega") = std::complex<double>{0.0, 0.0}, py::arg("nodes") = 48);
    m.def("plane_wave_check",
          [](std::pair<double, double> k, std::pair<double, double> q, double x1, double x2,
             double theta, std::complex<double> omega, int series_terms) {
              NumericConfig cfg;
              cfg.theta_val = theta;
              cfg.omega_val = omega;
              cfg.series_terms = series_terms;
              double ka[2] = {k.first, k.second};
              double qa[2] = {q.first, q.second};
              auto r = plane_wave_check(ka, qa, point_from(x1, x2, theta, omega), cfg);
              return py::make_tuple(r.series_value, r.formula_value);
          },
          py::arg("k"), py::arg("q"), py::arg("x1") = 0.0, py::arg("x2") = 0.0,
          py::arg("theta") = 1.0, py::arg("omega") = std::complex<double>{0.0, 0.0},
          py::arg("series_terms") = 30);

    m.def("suite_names", &suite_names);
    m.def("run_suite",
          [](const std::string& name, int max_level, std::uint64_t seed, double theta,
             std::complex<double> omega, int nodes) {
              SuiteConfig cfg;
              cfg.max_level = max_level;
              cfg.seed = seed;
              cfg.theta = theta;
              cfg.omega = omega;
              cfg.nodes = nodes;
              return run_suite(name, cfg).to_json().dump();
          },
          py::arg("name"), py::arg("max_level") = 8, py::arg("seed") = 20100527,
          py::arg("theta") = 1.0, py::arg("omega") = std::complex<double>{0.0, 0.0},
          py::arg("nodes") = 48);
    m.def("spectrum_table",
          [](const std::string& side, int max_level, bool omega_zero) {
              return spectrum_table(state_side_from(side), max_level, omega_zero).to_json().dump();
          },
          py::arg("side") = "right", py::arg("max_level") = 8, py::arg("omega_zero") = false);
    m.def("jacobi_check", [] {
        ConformanceCase c = jacobi_check();
        return c.status == Verdict::PASS;
    });
}
