#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhyper/qhyper.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kInvalidInput = 2;
constexpr int kPrecondition = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(std::complex<double> z) {
  std::string s = fmt(z.real());
  s += z.imag() < 0 ? " - " : " + ";
  s += fmt(std::abs(z.imag()));
  s += "i";
  return s;
}

int emit(const std::string& text, const std::string& out_path) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_path.empty()) {
    std::cout << body;
    return kOk;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kInvalidInput;
  }
  f << body;
  return kOk;
}

struct BasisArgs {
  int n = 0, alpha = 0, beta = 0, gamma = 0;
  std::string format = "json";
  std::string out;
};

int run_basis(const BasisArgs& a) {
  qhyper::Params p(a.n, a.alpha, a.beta, a.gamma);
  if (a.format == "json") {
    return emit(qhyper::basis_document(p).dump(2), a.out);
  }
  auto [ps2, res] = qhyper::psi2_resolved(p);
  qhyper::SolutionElement ps1 = qhyper::psi1(p);
  std::ostringstream os;
  os << "% " << p.to_string() << "\n";
  os << "% case: " << qhyper::case_name(qhyper::case_of(p)) << "\n";
  os << "% case3 start index: " << res.label() << "\n";
  os << "\\Psi_1 = " << qhyper::to_latex(ps1) << "\n";
  os << "\\Psi_2 = " << qhyper::to_latex(ps2) << "\n";
  return emit(os.str(), a.out);
}

struct VerifyArgs {
  int n_min = 2;
  int n_max = 8;
  std::optional<int> alpha, beta, gamma;
  bool condition2_only = false;
  int jobs = 0;
  double tol = 1e-6;
  std::vector<double> xs{0.3, 0.5, 0.7};
  std::string out;
};

qhyper::SweepSpec to_spec(const VerifyArgs& a) {
  qhyper::SweepSpec spec;
  spec.n_min = a.n_min;
  spec.n_max = a.n_max;
  spec.alpha = a.alpha;
  spec.beta = a.beta;
  spec.gamma = a.gamma;
  spec.condition2_only = a.condition2_only;
  spec.jobs = a.jobs;
  return spec;
}

int run_verify_thm2(const VerifyArgs& a) {
  qhyper::SweepSpec spec = to_spec(a);
  const auto tuples = qhyper::sweep_tuples(spec);
  if (tuples.empty()) {
    std::cerr << "warning: 0 tuples match the sweep filters\n";
    return emit("checked 0 tuples", a.out);
  }
  qhyper::Theorem2Sweep sweep = qhyper::run_theorem2_sweep(spec);
  qhyper::Json failures = qhyper::Json::array();
  int n_fail = 0;
  for (const auto& rep : sweep.reports) {
    if (!rep.all_pass()) {
      ++n_fail;
      failures.push_back(qhyper::to_json(rep));
    }
  }
  qhyper::Json doc;
  doc["checked"] = sweep.reports.size();
  doc["failed"] = n_fail;
  doc["pass"] = sweep.all_pass;
  doc["failures"] = failures;
  int rc = emit(doc.dump(2), a.out);
  if (rc != kOk) return rc;
  return sweep.all_pass ? kOk : kVerifyFail;
}

int run_verify_thm3(const VerifyArgs& a) {
  qhyper::SweepSpec spec = to_spec(a);
  spec.condition2_only = true;
  const auto tuples = qhyper::sweep_tuples(spec);
  if (tuples.empty()) {
    std::cerr << "warning: 0 tuples match the sweep filters\n";
    return emit("checked 0 tuples", a.out);
  }
  qhyper::Theorem3Sweep sweep = qhyper::run_theorem3_sweep(spec, a.xs, a.tol);
  qhyper::Json failures = qhyper::Json::array();
  int n_fail = 0;
  for (const auto& rep : sweep.reports) {
    if (!rep.pass) {
      ++n_fail;
      failures.push_back(qhyper::theorem3_records(rep));
    }
  }
  qhyper::Json doc;
  doc["checked"] = sweep.reports.size();
  doc["failed"] = n_fail;
  doc["tol"] = a.tol;
  doc["pass"] = sweep.all_pass;
  doc["failures"] = failures;
  int rc = emit(doc.dump(2), a.out);
  if (rc != kOk) return rc;
  return sweep.all_pass ? kOk : kVerifyFail;
}

struct IntegralArgs {
  int n = 0, alpha = 0, beta = 0, gamma = 0;
  std::vector<double> xs{0.5};
  double tol = 1e-6;
  std::string out;
};

int run_integral(const IntegralArgs& a) {
  qhyper::Params p(a.n, a.alpha, a.beta, a.gamma);
  std::vector<std::complex<double>> xs(a.xs.begin(), a.xs.end());
  qhyper::Theorem3Report rep = qhyper::verify_theorem3(p, xs, a.tol);
  if (!rep.error.empty()) {
    std::cerr << "error: " << rep.error << "\n";
    return kPrecondition;
  }
  std::ostringstream os;
  os << p.to_string() << "  (" << qhyper::case_name(rep.tag) << ")\n";
  for (const auto& e : rep.entries) {
    os << "x = " << fmt(e.x) << "\n";
    os << "  integral    = " << fmt(e.integral) << "  (quadrature error "
       << fmt(e.integral_error) << ")\n";
    os << "  residue sum = " << fmt(e.residue) << "\n";
    os << "  closed form = " << fmt(e.closed_form) << "\n";
    os << "  |integral - closed|    = " << fmt(e.dev_integral_closed) << "\n";
    os << "  |residue - closed|     = " << fmt(e.dev_residue_closed) << "\n";
    os << "  |integral - residue|   = " << fmt(e.dev_integral_residue) << "\n";
  }
  int rc = emit(os.str(), a.out);
  if (rc != kOk) return rc;
  return rep.pass ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact basis construction and numeric verification for the "
      "q-hypergeometric difference equation at q = e^(2 pi i / N)"};
  app.require_subcommand(1);

  BasisArgs ba;
  CLI::App* basis = app.add_subcommand(
      "basis", "Construct the two-element solution basis and print it");
  basis->add_option("--N", ba.n, "Root-of-unity order (N >= 2)")->required();
  basis->add_option("--alpha", ba.alpha, "alpha in 1..N")->required();
  basis->add_option("--beta", ba.beta, "beta in 1..N")->required();
  basis->add_option("--gamma", ba.gamma, "gamma in 1..N")->required();
  basis->add_option("--format", ba.format, "Output format")
      ->check(CLI::IsMember({"json", "latex"}))
      ->capture_default_str();
  basis->add_option("--out", ba.out, "Write output to this file");

  VerifyArgs va;
  CLI::App* verify =
      app.add_subcommand("verify", "Run a verification sweep over tuples");
  verify->require_subcommand(1);
  CLI::App* thm2 = verify->add_subcommand(
      "thm2", "Exact checks: annihilation, independence, case structure");
  CLI::App* thm3 = verify->add_subcommand(
      "thm3", "Numeric checks: integral vs residue sum vs closed form");
  for (CLI::App* sub : {thm2, thm3}) {
    sub->add_option("--N-min", va.n_min, "Smallest N")->capture_default_str();
    sub->add_option("--N-max", va.n_max, "Largest N")->capture_default_str();
    sub->add_option("--alpha", va.alpha, "Fix alpha (normalized, beta <= alpha)");
    sub->add_option("--beta", va.beta, "Fix beta (normalized)");
    sub->add_option("--gamma", va.gamma, "Fix gamma");
    sub->add_option("--jobs", va.jobs, "Worker threads (0 = all cores)")
        ->envname("QHYPER_JOBS")
        ->capture_default_str();
    sub->add_option("--out", va.out, "Write the JSON summary to this file");
  }
  thm2->add_flag("--condition2-only", va.condition2_only,
                 "Restrict to tuples with alpha + beta <= N - gamma");
  thm3->add_option("--tol", va.tol, "Agreement tolerance")
      ->capture_default_str();
  thm3->add_option("--x", va.xs, "Evaluation points, comma separated")
      ->delimiter(',')
      ->capture_default_str();

  IntegralArgs ia;
  CLI::App* integral = app.add_subcommand(
      "integral",
      "Evaluate contour integral, residue sum, and closed form at given x");
  integral->add_option("--N", ia.n, "Root-of-unity order (N >= 2)")->required();
  integral->add_option("--alpha", ia.alpha, "alpha in 1..N")->required();
  integral->add_option("--beta", ia.beta, "beta in 1..N")->required();
  integral->add_option("--gamma", ia.gamma, "gamma in 1..N")->required();
  integral->add_option("--x", ia.xs, "Evaluation points, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  integral->add_option("--tol", ia.tol, "Agreement tolerance")
      ->capture_default_str();
  integral->add_option("--out", ia.out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  try {
    if (basis->parsed()) return run_basis(ba);
    if (verify->parsed()) {
      if (thm2->parsed()) return run_verify_thm2(va);
      return run_verify_thm3(va);
    }
    return run_integral(ia);
  } catch (const qhyper::InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const qhyper::NotConvergentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const qhyper::SingularXError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const qhyper::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvalidInput;
  }
}
