#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "atomwalk/catalog.hpp"
#include "atomwalk/cli.hpp"
#include "atomwalk/errors.hpp"
#include "atomwalk/oracle.hpp"
#include "atomwalk/planner.hpp"

namespace py = pybind11;
using namespace atomwalk;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coherent walking of two-level atoms in a travelling light field";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CoverageError>(m, "CoverageError", domain.ptr());
  py::register_exception<DegenerateBlockError>(m, "DegenerateBlockError", domain.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", domain.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.attr("HBAR") = kHbar;
  m.attr("PLANCK") = kPlanck;
  m.attr("NANOMETRE") = kNanometre;

  py::enum_<ConstantSet>(m, "ConstantSet").value("paper", ConstantSet::paper).value("codata", ConstantSet::codata);
  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def_readonly("h", &PhysicalConstants::h)
      .def_readonly("hbar", &PhysicalConstants::hbar)
      .def_readonly("u", &PhysicalConstants::u)
      .def_readonly("c", &PhysicalConstants::c)
      .def_static("paper", &PhysicalConstants::paper)
      .def_static("codata", &PhysicalConstants::codata);
  m.def("constants_for", &constants_for);
  m.def("mass_to_si", &mass_to_si, py::arg("mass_u"), py::arg("consts") = PhysicalConstants::paper());
  m.def("wavenumber", &wavenumber, py::arg("wavelength_m"));

  py::class_<Species>(m, "Species")
      .def(py::init<std::string, double, std::string, double>(), py::arg("name"), py::arg("mass_u"),
           py::arg("transition_label"), py::arg("wavelength_nm"))
      .def_readwrite("name", &Species::name)
      .def_readwrite("mass_u", &Species::mass_u)
      .def_readwrite("transition_label", &Species::transition_label)
      .def_readwrite("wavelength_nm", &Species::wavelength_nm)
      .def(py::self == py::self)
      .def("__repr__", [](const Species& s) { return "Species('" + s.name + "')"; });

  py::class_<Catalog>(m, "Catalog")
      .def(py::init<std::vector<Species>, std::string>(), py::arg("entries"), py::arg("source_tag") = "python")
      .def_property_readonly("entries", &Catalog::entries)
      .def_property_readonly("source_tag", &Catalog::source_tag)
      .def("__len__", &Catalog::size)
      .def("find", &Catalog::find)
      .def("at", &Catalog::at, py::return_value_policy::copy);
  m.def("parse_catalog", [](const std::string& text) { return parse_catalog(text); });
  m.def("load_catalog", &load_catalog);
  m.def("serialize_catalog", &serialize_catalog);
  m.def("embedded_table", &embedded_table1, py::return_value_policy::reference);

  py::enum_<Direction>(m, "Direction").value("forward", Direction::forward).value("backward", Direction::backward);
  py::class_<LightField>(m, "LightField")
      .def_static("make", &LightField::make, py::arg("wavelength_m"), py::arg("rabi"), py::arg("detuning") = 0.0,
                  py::arg("direction") = Direction::forward)
      .def_static("for_species", &LightField::for_species, py::arg("species"), py::arg("rabi"),
                  py::arg("detuning") = 0.0, py::arg("direction") = Direction::forward)
      .def_readwrite("wavelength", &LightField::wavelength)
      .def_readwrite("k", &LightField::k)
      .def_readwrite("rabi", &LightField::rabi)
      .def_readwrite("detuning", &LightField::detuning)
      .def("reversed", &LightField::reversed)
      .def("photon_momentum", &LightField::photon_momentum);

  py::class_<WavepacketSpec>(m, "WavepacketSpec")
      .def_static("with_populations", &WavepacketSpec::with_populations, py::arg("p_c"), py::arg("pi_width"),
                  py::arg("c0_sq") = 1.0, py::arg("x0") = 0.0)
      .def_readwrite("p_c", &WavepacketSpec::p_c)
      .def_readwrite("pi_width", &WavepacketSpec::pi_width)
      .def_readwrite("c0", &WavepacketSpec::c0)
      .def_readwrite("c1", &WavepacketSpec::c1)
      .def_readwrite("x0", &WavepacketSpec::x0);

  py::class_<MomentumGrid>(m, "MomentumGrid")
      .def_static("centered", &MomentumGrid::centered)
      .def_static("default_for", &MomentumGrid::default_for)
      .def_readonly("p_min", &MomentumGrid::p_min)
      .def_readonly("p_max", &MomentumGrid::p_max)
      .def_readonly("n_points", &MomentumGrid::n_points)
      .def("at", &MomentumGrid::at);

  py::class_<BlockAmplitudes>(m, "BlockAmplitudes")
      .def(py::init<double, Complex, Complex>(), py::arg("p"), py::arg("phi0"), py::arg("phi1"))
      .def_readwrite("p", &BlockAmplitudes::p)
      .def_readwrite("phi0", &BlockAmplitudes::phi0)
      .def_readwrite("phi1", &BlockAmplitudes::phi1)
      .def("norm", &BlockAmplitudes::norm);

  py::class_<BandPoint>(m, "BandPoint")
      .def_readonly("p", &BandPoint::p)
      .def_readonly("w0", &BandPoint::w0)
      .def_readonly("w1", &BandPoint::w1)
      .def_readonly("bare0", &BandPoint::bare0)
      .def_readonly("bare1", &BandPoint::bare1);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("mean_p", &Trajectory::mean_p)
      .def_readonly("mean_v", &Trajectory::mean_v)
      .def_readonly("mean_x", &Trajectory::mean_x)
      .def_readonly("norm", &Trajectory::norm)
      .def_readonly("pop_excited", &Trajectory::pop_excited);

  m.def("shift_delta", &shift_delta, py::arg("p"), py::arg("field"), py::arg("mass_kg"));
  m.def("effective_rabi", &effective_rabi, py::arg("delta"), py::arg("rabi"));
  m.def(
      "dressed_frequencies",
      [](double p, const LightField& f, double mass) {
        const auto w = dressed_frequencies(p, f, mass);
        return py::make_tuple(w.w0, w.w1);
      },
      py::arg("p"), py::arg("field"), py::arg("mass_kg"));
  m.def("band_structure", &band_structure, py::arg("grid"), py::arg("field"), py::arg("mass_kg"));
  m.def("evolve_block_analytic", &evolve_block_analytic, py::arg("init"), py::arg("field"), py::arg("mass_kg"),
        py::arg("t"));
  m.def(
      "evolve_block_numeric",
      [](const BlockAmplitudes& init, const LightField& f, double mass, double t, double dt) {
        return evolve_block_numeric(init, f, mass, t, IntegratorConfig{dt});
      },
      py::arg("init"), py::arg("field"), py::arg("mass_kg"), py::arg("t"), py::arg("dt"));
  m.def(
      "simulate",
      [](const WavepacketSpec& spec, const MomentumGrid& grid, const LightField& f, double mass,
         const std::vector<double>& times) { return simulate(spec, grid, f, mass, times); },
      py::arg("spec"), py::arg("grid"), py::arg("field"), py::arg("mass_kg"), py::arg("times"));
  m.def("uniform_times", &uniform_times, py::arg("t_max"), py::arg("steps"));
  m.def("closed_form_displacement", &closed_form_displacement, py::arg("t"), py::arg("spec"), py::arg("field"),
        py::arg("mass_kg"));
  m.def("closed_form_velocity", &closed_form_velocity, py::arg("t"), py::arg("spec"), py::arg("field"),
        py::arg("mass_kg"));
  m.def("average_speed", &average_speed, py::arg("species"), py::arg("c0_sq") = 1.0, py::arg("c1_sq") = 0.0,
        py::arg("p_c") = 0.0, py::arg("consts") = PhysicalConstants::paper());

  py::class_<MixtureMember>(m, "MixtureMember")
      .def(py::init([](const Species& s, double c0_sq, double p_c) { return MixtureMember{s, c0_sq, 1.0 - c0_sq, p_c}; }),
           py::arg("species"), py::arg("c0_sq") = 1.0, py::arg("p_c") = 0.0)
      .def_readwrite("species", &MixtureMember::species)
      .def_readwrite("c0_sq", &MixtureMember::c0_sq)
      .def_readwrite("c1_sq", &MixtureMember::c1_sq)
      .def_readwrite("p_c", &MixtureMember::p_c);
  py::class_<SpeedRow>(m, "SpeedRow")
      .def_readonly("name", &SpeedRow::name)
      .def_readonly("mass_u", &SpeedRow::mass_u)
      .def_readonly("wavelength_nm", &SpeedRow::wavelength_nm)
      .def_readonly("vbar", &SpeedRow::vbar);
  py::class_<PairReport>(m, "PairReport")
      .def_readonly("name_i", &PairReport::name_i)
      .def_readonly("name_j", &PairReport::name_j)
      .def_readonly("delta_v", &PairReport::delta_v)
      .def_readonly("gap", &PairReport::gap)
      .def_readonly("width_i", &PairReport::width_i)
      .def_readonly("width_j", &PairReport::width_j)
      .def_readonly("resolvable", &PairReport::resolvable)
      .def_readonly("t_required", &PairReport::t_required);
  py::class_<SeparationReport>(m, "SeparationReport")
      .def_readonly("t", &SeparationReport::t)
      .def_readonly("kappa", &SeparationReport::kappa)
      .def_readonly("pi_width", &SeparationReport::pi_width)
      .def_readonly("pairs", &SeparationReport::pairs);

  m.def("speed_table", &speed_table, py::arg("catalog"), py::arg("consts") = PhysicalConstants::paper());
  m.def("pairwise_gap", &pairwise_gap, py::arg("a"), py::arg("b"), py::arg("t"),
        py::arg("consts") = PhysicalConstants::paper());
  m.def("packet_width", &packet_width, py::arg("spec"), py::arg("mass_kg"), py::arg("t"));
  m.def(
      "separation_report",
      [](const std::vector<MixtureMember>& mix, double t, double kappa, double pi_width,
         const PhysicalConstants& consts) { return separation_report(mix, t, kappa, pi_width, consts); },
      py::arg("mixture"), py::arg("t"), py::arg("kappa"), py::arg("pi_width"),
      py::arg("consts") = PhysicalConstants::paper());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
