#include <cstdio>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tpsi/bbm.hpp"
#include "tpsi/fermat.hpp"
#include "tpsi/geometry.hpp"
#include "tpsi/planar.hpp"
#include "tpsi/verify.hpp"

namespace py = pybind11;

namespace {

using namespace tpsi;

// Dense weight tensor as an N x ... x N complex array, axes in label order.
py::array_t<complex> to_array(const WeightTensor& t) {
  const int n = t.modulus().value();
  std::vector<py::ssize_t> shape(t.rank(), n);
  py::array_t<complex> out(shape);
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

SweepOptions options(const std::string& mode, std::size_t samples, std::uint64_t seed, unsigned threads) {
  SweepOptions o;
  if (mode == "full") {
    o.mode = SweepMode::full;
  } else if (mode == "sampled") {
    o.mode = SweepMode::sampled;
  } else {
    throw py::value_error("mode must be 'full' or 'sampled'");
  }
  o.samples = samples;
  o.seed = seed;
  o.threads = threads;
  return o;
}

Model model(const std::string& name) {
  if (name == "bbm") return Model::bbm;
  if (name == "planar") return Model::planar;
  throw py::value_error("model must be 'bbm' or 'planar'");
}

}  // namespace

PYBIND11_MODULE(_tpsi, m) {
  m.doc() = "Fermat-curve weights and tetrahedron-equation residuals";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<FermatPoint>(m, "FermatPoint")
      .def(py::init([](complex x, complex y, complex z, int n) { return FermatPoint{x, y, z, Modulus(n)}; }),
           py::arg("x"), py::arg("y"), py::arg("z"), py::arg("n"))
      .def_readonly("x", &FermatPoint::x)
      .def_readonly("y", &FermatPoint::y)
      .def_readonly("z", &FermatPoint::z)
      .def_property_readonly("n", [](const FermatPoint& p) { return p.n.value(); })
      .def("curve_residual", &FermatPoint::curve_residual);

  m.def("in_region", &in_region, py::arg("p"));
  m.def("apply_O", &apply_O, py::arg("p"));
  m.def("w_zero", &w_zero, py::arg("p"));
  m.def("w_zero_dual", &w_zero_dual, py::arg("p"));
  m.def(
      "w", [](const FermatPoint& p, long long a) { return w_eval(p, CyclicSpin(a, p.n)); }, py::arg("p"),
      py::arg("a"));
  m.def(
      "w_table",
      [](const FermatPoint& p) {
        const WTable t(p);
        return std::vector<complex>(t.values().begin(), t.values().end());
      },
      py::arg("p"));
  m.def(
      "phi_tilde", [](long long a, int n) { return phi_tilde(CyclicSpin(a, Modulus(n))); }, py::arg("a"),
      py::arg("n"));
  m.def(
      "d", [](complex x, int n) { return d_eval(x, Modulus(n)); }, py::arg("x"), py::arg("n"));

  py::class_<Trihedron>(m, "Trihedron")
      .def_static("from_dihedral", &Trihedron::from_dihedral, py::arg("theta"))
      .def_static("from_planar", &Trihedron::from_planar, py::arg("a"))
      .def_readonly("theta", &Trihedron::theta)
      .def_readonly("a", &Trihedron::a)
      .def_readonly("beta", &Trihedron::beta);

  py::class_<TetrahedronAngles>(m, "TetrahedronAngles")
      .def(py::init([](std::array<double, 6> theta) { return TetrahedronAngles{theta, std::nullopt}; }),
           py::arg("theta"))
      .def_readonly("theta", &TetrahedronAngles::theta)
      .def_readonly("vertices", &TetrahedronAngles::vertices);

  m.def("planar_from_dihedral", &planar_from_dihedral, py::arg("theta"));
  m.def("dihedral_from_planar", &dihedral_from_planar, py::arg("a"));
  m.def("excesses", &excesses, py::arg("a"));
  m.def("tetrahedron_from_vertices", &tetrahedron_from_vertices, py::arg("vertices"));
  m.def("sample_tetrahedron", &sample_tetrahedron, py::arg("seed"));
  m.def(
      "te_weight_angles", [](const TetrahedronAngles& t) { return te_weight_angles(t); }, py::arg("t"));
  m.def("sample_planar_quad", &sample_planar_quad, py::arg("seed"));
  m.def("planar_weight_angles", &planar_weight_angles, py::arg("quad"));

  m.def(
      "r_vertex", [](const Trihedron& t, int n) { return to_array(r_vertex(t, Modulus(n))); }, py::arg("tri"),
      py::arg("n"), "Vertex weight R[j1, j2, j3, i1, i2, i3].");
  m.def(
      "r_planar_vertex", [](const Trihedron& t, int n) { return to_array(r_planar_vertex(t, Modulus(n))); },
      py::arg("tri"), py::arg("n"));
  m.def(
      "w_irc",
      [](const Trihedron& t, int n, const IrcSpins& s) { return w_irc(t, Modulus(n))(s); }, py::arg("tri"),
      py::arg("n"), py::arg("spins"), "IRC weight at spins (a, e, f, g, b, c, d, h).");

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("max_abs_diff", &ResidualReport::max_abs_diff)
      .def_readonly("rel_diff", &ResidualReport::rel_diff)
      .def_readonly("ratio_mean", &ResidualReport::ratio_mean)
      .def_readonly("ratio_spread", &ResidualReport::ratio_spread)
      .def_readonly("ratio_entries", &ResidualReport::ratio_entries)
      .def_readonly("entries_checked", &ResidualReport::entries_checked)
      .def_property_readonly("mode", [](const ResidualReport& r) { return std::string(to_string(r.mode)); })
      .def("__repr__", [](const ResidualReport& r) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "ResidualReport(rel_diff=%.3e, entries_checked=%zu)", r.rel_diff,
                      r.entries_checked);
        return std::string(buf);
      });


  m.def(
      "te_vertex_residual",
      [](const std::array<Trihedron, 4>& tri, int n, const std::string& mode, std::size_t samples,
         std::uint64_t seed, unsigned threads) {
        return te_vertex_residual(tri, Modulus(n), options(mode, samples, seed, threads));
      },
      py::arg("tri"), py::arg("n"), py::arg("mode") = "full", py::arg("samples") = 10000, py::arg("seed") = 0,
      py::arg("threads") = 1);
  m.def(
      "te_irc_residual",
      [](const std::array<Trihedron, 4>& tri, int n, const std::string& mode, std::size_t samples,
         std::uint64_t seed, unsigned threads) {
        return te_irc_residual(tri, Modulus(n), options(mode, samples, seed, threads));
      },
      py::arg("tri"), py::arg("n"), py::arg("mode") = "full", py::arg("samples") = 10000, py::arg("seed") = 0,
      py::arg("threads") = 1);
  m.def(
      "psi_eq_residual",
      [](const std::array<Trihedron, 4>& tri, int n, const std::string& m, const std::string& mode,
         std::size_t samples, std::uint64_t seed, unsigned threads) {
        return psi_eq_residual(tri, Modulus(n), model(m), options(mode, samples, seed, threads));
      },
      py::arg("tri"), py::arg("n"), py::arg("model") = "bbm", py::arg("mode") = "full", py::arg("samples") = 10000,
      py::arg("seed") = 0, py::arg("threads") = 1);
  m.def(
      "psibar_eq_residual",
      [](const std::array<Trihedron, 4>& tri, int n, const std::string& m, const std::string& mode,
         std::size_t samples, std::uint64_t seed, unsigned threads) {
        return psibar_eq_residual(tri, Modulus(n), model(m), options(mode, samples, seed, threads));
      },
      py::arg("tri"), py::arg("n"), py::arg("model") = "bbm", py::arg("mode") = "full", py::arg("samples") = 10000,
      py::arg("seed") = 0, py::arg("threads") = 1);
  m.def(
      "self_duality_check",
      [](const Trihedron& tri, int n, unsigned threads) { return self_duality_check(tri, Modulus(n), threads); },
      py::arg("tri"), py::arg("n"), py::arg("threads") = 1);
  m.def(
      "decompose_check",
      [](const Trihedron& tri, int n, const std::string& mode, std::size_t samples, std::uint64_t seed,
         unsigned threads) {
        return decompose_check(tri, Modulus(n), PhaseChoice::second, options(mode, samples, seed, threads));
      },
      py::arg("tri"), py::arg("n"), py::arg("mode") = "full", py::arg("samples") = 10000, py::arg("seed") = 0,
      py::arg("threads") = 1);
}
