// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "liepolar/linalg.hpp"
#include "liepolar/lorentz.hpp"
#include "liepolar/matrix_io.hpp"
#include "liepolar/pseudo.hpp"
#include "liepolar/sl2c.hpp"
#include "liepolar/so3.hpp"
#include "liepolar/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace liepolar;

constexpr int kExitPass = 0;
constexpr int kExitResidualFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Json document_json(const MatrixDocument& doc) {
  // Re-parse of the emitted text keeps one serialization path.
  return Json::parse(emit_document(doc));
}

std::pair<double, Vec3> parse_param_quad(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(flag + ": cannot parse number \"" + item + "\"");
    }
  }
  if (values.size() != 4) throw ParseError(flag + ": expected 4 comma-separated numbers");
  const Vec3 axis{values[1], values[2], values[3]};
  if (axis.norm() <= 1e-12) throw ParseError(flag + ": axis is not normalizable");
  return {values[0], axis.normalized()};
}

struct ReportResiduals {
  double reconstruction = 0.0;
  double metric = 0.0;
  double det = 0.0;
  double orthochronous = 0.0;
  double commutation = 0.0;

  double worst() const {
    return std::fmax(reconstruction,
                     std::fmax(metric, std::fmax(det, std::fmax(orthochronous, commutation))));
  }
};

Json report_json(const std::string& kind, const std::string& order, const Json& factors,
                 const Json& params, const ReportResiduals& r, double tol) {
  Json doc;
  doc["kind"] = kind;
  doc["order"] = order;
  doc["factors"] = factors;
  doc["params"] = params;
  doc["residuals"] = {{"reconstruction", r.reconstruction},
                      {"metric", r.metric},
                      {"det", r.det},
                      {"orthochronous", r.orthochronous},
                      {"commutation", r.commutation}};
  doc["verdict"] = r.worst() <= tol ? "pass" : "fail";
  return doc;
}

int emit_report(const Json& report) {
  std::cout << report.dump(2) << "\n";
  return report["verdict"] == "pass" ? kExitPass : kExitResidualFail;
}

int run_decompose_lorentz(const MatrixDocument& doc, const std::string& order, double tol) {
  const LorentzMat l = validate_lorentz(doc.real, tol);
  const LorentzPolarFactors f = polar_decompose(l, tol);

  Json factors;
  factors["U"] = document_json(lorentz_document(f.u.m));
  factors["P"] = document_json(lorentz_document(f.p.m));
  factors["Pprime"] = document_json(lorentz_document(f.pprime.m));

  const BoostParams bp = order == "up" ? f.boost : boost_params(f.pprime.m, tol);
  Json params;
  params["chi"] = bp.chi;
  params["boost_axis"] = vec_json(bp.axis);
  params["theta"] = f.rotation.theta;
  params["rot_axis"] = vec_json(f.rotation.axis);

  ReportResiduals r;
  r.reconstruction = f.reconstruction_residual;
  const MatR& eta = minkowski_metric();
  for (const LorentzMat* fac : {&f.u, &f.p, &f.pprime}) {
    r.metric = std::fmax(r.metric, fac->residuals.metric);
    r.det = std::fmax(r.det, fac->residuals.det);
    r.orthochronous = std::fmax(r.orthochronous, fac->residuals.orientation);
  }
  r.commutation = max_abs_diff(f.u.m * eta, eta * f.u.m);
  return emit_report(report_json("lorentz", order, factors, params, r, tol));
}

int run_decompose_sl2c(const MatrixDocument& doc, const std::string& order, double tol) {
  validate_spinor(doc.complex2, std::fmax(tol, 1e-10));
  const SpinorPolarFactors f = polar_decompose_sl2c(doc.complex2, std::fmax(tol, 1e-10));

  Json factors;
  factors["U"] = document_json(sl2c_document(f.u));
  factors["P"] = document_json(sl2c_document(f.p));
  factors["Pprime"] = document_json(sl2c_document(f.pprime));

  // l = P u = u Pprime: "pu" reads the left factor, "up" the right one.
  const HermParams hp = order == "pu" ? f.herm : herm_params(f.pprime);
  Json params;
  params["chi"] = hp.chi;
  params["boost_axis"] = vec_json(hp.axis);
  params["theta"] = f.su2.theta;
  params["rot_axis"] = vec_json(f.su2.axis);

  ReportResiduals r;
  r.reconstruction = f.reconstruction_residual;
  r.metric = max_abs_diff(f.u * f.u.adjoint(), MatC2::identity());
  for (const MatC2* fac : {&f.p, &f.u, &f.pprime}) {
    r.det = std::fmax(r.det, std::abs(fac->det() - Complex(1.0)));
  }
  return emit_report(report_json("sl2c", order, factors, params, r, tol));
}

int run_decompose_pseudo(const MatrixDocument& doc, const std::string& order, double tol) {
  const Signature sig = make_signature(doc.signs);
  const GEPolarFactors f = polar_decompose_ge(doc.real, sig, tol);

  Json factors;
  factors["U"] = document_json(pseudo_document(f.u, doc.signs));
  factors["P"] = document_json(pseudo_document(f.p, doc.signs));
  factors["Pprime"] = document_json(pseudo_document(f.pprime, doc.signs));

  Json params;
  params["chi"] = nullptr;
  params["boost_axis"] = nullptr;
  params["theta"] = nullptr;
  params["rot_axis"] = nullptr;

  ReportResiduals r;
  const double scale = std::fmax(1.0, doc.real.max_abs());
  r.reconstruction = std::fmax(max_abs_diff(f.u * f.p, doc.real),
                               max_abs_diff(f.pprime * f.u, doc.real)) /
                     scale;
  r.metric = f.membership_residual;
  r.commutation = f.commutation_residual;
  return emit_report(report_json("pseudo", order, factors, params, r, tol));
}

int run_decompose(const std::string& path, const std::string& order, double tol) {
  const MatrixDocument doc = parse_document(read_input(path));
  switch (doc.kind) {
    case MatrixDocument::Kind::Lorentz: return run_decompose_lorentz(doc, order, tol);
    case MatrixDocument::Kind::Sl2c: return run_decompose_sl2c(doc, order, tol);
    case MatrixDocument::Kind::Pseudo: return run_decompose_pseudo(doc, order, tol);
  }
  return kExitUsage;
}

int run_compose(const std::string& boost_text, const std::string& rotation_text,
                const std::string& order) {
  const auto [chi, boost_axis] = parse_param_quad(boost_text, "--boost");
  const auto [theta, rot_axis] = parse_param_quad(rotation_text, "--rotation");
  const MatR b = boost_matrix(chi, boost_axis).m;
  const MatR r = rotation_matrix4(theta, rot_axis).m;
  const MatR product = order == "up" ? r * b : b * r;
  std::cout << emit_document(lorentz_document(product));
  return kExitPass;
}

int run_cover(const std::string& path, double tol) {
  const MatrixDocument doc = parse_document(read_input(path));
  if (doc.kind != MatrixDocument::Kind::Sl2c) {
    throw ParseError("kind: cover expects an sl2c document");
  }
  validate_spinor(doc.complex2, 1e-8);
  const LorentzMat image = covering_map(doc.complex2, tol);

  Json out = document_json(lorentz_document(image.m));
  out["residuals"] = {{"metric", image.residuals.metric},
                      {"det", image.residuals.det},
                      {"orthochronous", image.residuals.orientation}};
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int run_generate(const std::string& kind, const std::string& signs, std::uint64_t seed) {
  if (kind == "lorentz") {
    std::cout << emit_document(lorentz_document(random_lorentz(seed).m));
    return kExitPass;
  }
  if (kind == "sl2c") {
    SplitMix64 rng(seed);
    std::cout << emit_document(sl2c_document(random_spinor(rng)));
    return kExitPass;
  }
  const Signature sig = signature_from_string(signs);
  std::cout << emit_document(pseudo_document(random_ge(sig, seed), sig.signs));
  return kExitPass;
}

int run_verify(const std::string& suite_text, long long samples, std::uint64_t seed) {
  const auto suite = suite_from_name(suite_text);
  if (!suite) throw ParseError("--suite: unknown suite \"" + suite_text + "\"");
  std::cout << "suite: " << suite_name(*suite) << "   samples: " << samples
            << "   seed: " << seed << "\n";
  const SuiteReport report = run_suite(*suite, samples, seed);
  print_report(report, std::cout);
  return report.all_pass() ? kExitPass : kExitResidualFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar decomposition toolkit for the Lorentz group, SL(2,C) and G_E"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string order = "up";
  double tol = kDefaultTol;
  auto* decompose = app.add_subcommand(
      "decompose", "Split a group element into rotation and positive factors");
  decompose->add_option("--in", in_path, "Input document, \"-\" for stdin")->required();
  decompose->add_option("--order", order, "Factor order: up (U*P) or pu (P'*U)")
      ->check(CLI::IsMember({"up", "pu"}));
  decompose->add_option("--tol", tol, "Residual tolerance");

  std::string boost_text;
  std::string rotation_text;
  std::string compose_order = "up";
  auto* compose = app.add_subcommand("compose", "Build rotation*boost (or boost*rotation)");
  compose->add_option("--boost", boost_text, "chi,nx,ny,nz")->required();
  compose->add_option("--rotation", rotation_text, "theta,mx,my,mz")->required();
  compose->add_option("--order", compose_order, "up: rotation*boost, pu: boost*rotation")
      ->check(CLI::IsMember({"up", "pu"}));

  std::string cover_path = "-";
  double cover_tol = kDefaultTol;
  auto* cover = app.add_subcommand("cover", "Map an SL(2,C) element to SO(1,3)^up");
  cover->add_option("--in", cover_path, "Input sl2c document, \"-\" for stdin")->required();
  cover->add_option("--tol", cover_tol, "Validation tolerance for the image");

  std::string suite_text = "all";
  long long samples = 1000;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "Run the property sweeps and print a table");
  verify->add_option("--suite", suite_text, "all|linalg|so3|lorentz|sl2c|pseudo");
  verify->add_option("--samples", samples, "Sweep size scale (full sizes at 1000)")
      ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()));
  verify->add_option("--seed", verify_seed, "Random seed");

  std::string gen_kind = "lorentz";
  std::string gen_signs = "-+++";
  std::uint64_t gen_seed = 0;
  auto* generate = app.add_subcommand("generate", "Emit a random group element document");
  generate->add_option("--kind", gen_kind, "lorentz|sl2c|pseudo")
      ->check(CLI::IsMember({"lorentz", "sl2c", "pseudo"}));
  generate->add_option("--signs", gen_signs, "Signature string such as -+++ (pseudo only)");
  generate->add_option("--seed", gen_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*decompose) return run_decompose(in_path, order, tol);
    if (*compose) return run_compose(boost_text, rotation_text, compose_order);
    if (*cover) return run_cover(cover_path, cover_tol);
    if (*verify) return run_verify(suite_text, samples, verify_seed);
    if (*generate) return run_generate(gen_kind, gen_signs, gen_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
