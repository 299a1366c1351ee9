// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liepolar/linalg.hpp"
#include "liepolar/lorentz.hpp"
#include "liepolar/pseudo.hpp"
#include "liepolar/sl2c.hpp"
#include "liepolar/so3.hpp"
#include "liepolar/verify.hpp"

namespace py = pybind11;

namespace {

using namespace liepolar;

using Rows = std::vector<std::vector<double>>;
using CRows = std::vector<std::vector<Complex>>;
using Axis = std::array<double, 3>;

Vec3 to_vec(const Axis& a) { return {a[0], a[1], a[2]}; }
Axis from_vec(const Vec3& v) { return {v.x, v.y, v.z}; }

MatC2 to_mat2c(const CRows& rows) {
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
    throw DimensionMismatchError("expected a 2x2 complex matrix");
  }
  MatC2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

CRows from_mat2c(const MatC2& m) {
  return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

py::dict lorentz_factors_dict(const LorentzPolarFactors& f) {
  py::dict d;
  d["U"] = f.u.m.rows();
  d["P"] = f.p.m.rows();
  d["Pprime"] = f.pprime.m.rows();
  d["chi"] = f.boost.chi;
  d["boost_axis"] = from_vec(f.boost.axis);
  d["theta"] = f.rotation.theta;
  d["rot_axis"] = from_vec(f.rotation.axis);
  d["reconstruction_residual"] = f.reconstruction_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polar decomposition in the Lorentz group, SL(2,C) and pseudo-orthogonal groups";

  // so3
  m.def(
      "exp_so3",
      [](double theta, const Axis& axis) { return exp_so3(theta, to_vec(axis)).rows(); },
      py::arg("theta"), py::arg("axis"));
  m.def(
      "log_so3",
      [](const Rows& rows, double tol) {
        const AxisAngle a = log_so3(MatR::from_rows(rows), tol);
        return py::make_tuple(a.theta, from_vec(a.axis));
      },
      py::arg("rows"), py::arg("tol") = kDefaultTol);

  // linalg
  m.def(
      "sqrt_spd",
      [](const Rows& rows, double tol) { return sqrt_spd(MatR::from_rows(rows), tol).rows(); },
      py::arg("rows"), py::arg("tol") = kDefaultTol);
  m.def(
      "expm", [](const Rows& rows) { return expm(MatR::from_rows(rows)).rows(); },
      py::arg("rows"));
  m.def(
      "polar",
      [](const Rows& rows, double tol) {
        const PolarFactors f = polar(MatR::from_rows(rows), tol);
        return py::make_tuple(f.u.rows(), f.p.rows(), f.pprime.rows());
      },
      py::arg("rows"), py::arg("tol") = kDefaultTol);

  // lorentz
  m.def(
      "boost_matrix",
      [](double chi, const Axis& axis) { return boost_matrix(chi, to_vec(axis)).m.rows(); },
      py::arg("chi"), py::arg("axis"));
  m.def(
      "rotation_matrix",
      [](double theta, const Axis& axis) { return rotation_matrix4(theta, to_vec(axis)).m.rows(); },
      py::arg("theta"), py::arg("axis"));
  m.def(
      "boost_params",
      [](const Rows& rows, double tol) {
        const BoostParams b = boost_params(MatR::from_rows(rows), tol);
        return py::make_tuple(b.chi, from_vec(b.axis));
      },
      py::arg("rows"), py::arg("tol") = kDefaultTol);
  m.def(
      "polar_decompose_lorentz",
      [](const Rows& rows, double tol) {
        return lorentz_factors_dict(polar_decompose(validate_lorentz(MatR::from_rows(rows), tol), tol));
      },
      py::arg("rows"), py::arg("tol") = kDefaultTol);
  m.def(
      "rapidity_to_velocity",
      [](double chi, const Axis& axis, double c) {
        return from_vec(rapidity_to_velocity(make_boost_params(chi, to_vec(axis)), c));
      },
      py::arg("chi"), py::arg("axis"), py::arg("c") = 1.0);
  m.def(
      "random_lorentz", [](std::uint64_t seed) { return random_lorentz(seed).m.rows(); },
      py::arg("seed"));

  // sl2c
  m.def(
      "exp_herm",
      [](double chi, const Axis& axis) { return from_mat2c(exp_herm(chi, to_vec(axis))); },
      py::arg("chi"), py::arg("axis"));
  m.def(
      "exp_su2",
      [](double theta, const Axis& axis) { return from_mat2c(exp_su2(theta, to_vec(axis))); },
      py::arg("theta"), py::arg("axis"));
  m.def(
      "covering_map",
      [](const CRows& rows, double tol) { return covering_map(to_mat2c(rows), tol).m.rows(); },
      py::arg("rows"), py::arg("tol") = kDefaultTol);
  m.def(
      "polar_decompose_sl2c",
      [](const CRows& rows) {
        const SpinorPolarFactors f = polar_decompose_sl2c(to_mat2c(rows));
        py::dict d;
        d["P"] = from_mat2c(f.p);
        d["U"] = from_mat2c(f.u);
        d["Pprime"] = from_mat2c(f.pprime);
        d["chi"] = f.herm.chi;
        d["herm_axis"] = from_vec(f.herm.axis);
        d["theta"] = f.su2.theta;
        d["su2_axis"] = from_vec(f.su2.axis);
        d["reconstruction_residual"] = f.reconstruction_residual;
        return d;
      },
      py::arg("rows"));
  m.def(
      "polar_compatibility",
      [](const CRows& rows) {
        const CoveringCompatibility rep = check_polar_compatibility(to_mat2c(rows));
        return py::make_tuple(rep.boost_residual, rep.rotation_residual);
      },
      py::arg("rows"));

  // pseudo
  m.def(
      "ge_residual",
      [](const Rows& rows, const std::vector<int>& signs) {
        return ge_residual(MatR::from_rows(rows), make_signature(signs));
      },
      py::arg("rows"), py::arg("signs"));
  m.def(
      "random_ge",
      [](const std::vector<int>& signs, std::uint64_t seed) {
        return random_ge(make_signature(signs), seed).rows();
      },
      py::arg("signs"), py::arg("seed"));
  m.def(
      "polar_decompose_ge",
      [](const Rows& rows, const std::vector<int>& signs, double tol) {
        const GEPolarFactors f = polar_decompose_ge(MatR::from_rows(rows), make_signature(signs), tol);
        py::dict d;
        d["U"] = f.u.rows();
        d["P"] = f.p.rows();
        d["Pprime"] = f.pprime.rows();
        d["membership_residual"] = f.membership_residual;
        d["commutation_residual"] = f.commutation_residual;
        return d;
      },
      py::arg("rows"), py::arg("signs"), py::arg("tol") = kDefaultTol);

  // verify
  m.def(
      "run_suite",
      [](const std::string& name, long long samples, std::uint64_t seed) {
        const auto suite = suite_from_name(name);
        if (!suite) throw Error("unknown suite: " + name);
        const SuiteReport report = run_suite(*suite, samples, seed);
        py::list rows;
        for (const PropertyResult& p : report.properties) {
          py::dict d;
          d["name"] = p.name;
          d["samples"] = p.samples;
          d["max_residual"] = p.max_residual;
          d["tolerance"] = p.tolerance;
          d["pass"] = p.pass;
          rows.append(d);
        }
        return rows;
      },
      py::arg("suite"), py::arg("samples") = 100, py::arg("seed") = 0);

#ifdef LIEPOLAR_VERSION
  m.attr("__version__") = LIEPOLAR_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
