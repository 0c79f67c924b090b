// k3lat: command line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "k3lat/arithmetic.hpp"
#include "k3lat/certificate_io.hpp"
#include "k3lat/checker.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/lattice_io.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const k3lat::IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ')';
  return out.str();
}

k3lat::IntegralLattice load(const std::string& path) {
  try {
    return k3lat::read_lattice_file(path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int lattice_info(const std::string& path) {
  const k3lat::IntegralLattice l = load(path);
  const k3lat::Integer d = k3lat::discriminant(l);
  std::cout << "label:       " << (l.label().empty() ? "-" : l.label()) << '\n'
            << "rank:        " << l.rank() << '\n'
            << "det:         " << d << '\n'
            << "even:        " << (k3lat::is_even(l) ? "yes" : "no") << '\n';
  if (d == 0) {
    std::cout << "signature:   degenerate\n";
    return kPass;
  }
  const k3lat::Signature s = k3lat::signature(l);
  const k3lat::DiscriminantGroup g = k3lat::discriminant_group(l);
  std::cout << "signature:   (" << s.plus << ", " << s.minus << ")\n"
            << "divisors:    " << join(g.divisors) << '\n'
            << "elementary:  " << join(k3lat::elementary_divisors(g)) << '\n';
  return kPass;
}

int lattice_roots(const std::string& path, long norm, bool quiet) {
  const k3lat::IntegralLattice l = load(path);
  if (norm == 0) throw UsageError("--norm must be nonzero");
  k3lat::ShortVectorReport r;
  try {
    r = k3lat::short_vectors(l, k3lat::Integer(std::labs(norm)));
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  std::size_t count = 0;
  std::ostringstream list;
  for (const auto& v : r.vectors) {
    if (v.norm != norm) continue;
    ++count;
    list << join(v.coords) << '\n';
  }
  std::cout << "norm " << norm << ": " << count << " vectors\n";
  if (!quiet) std::cout << list.str();
  return kPass;
}

int case_build(int sigma, long d, const std::string& out) {
  if (sigma < 2 || sigma > 5) throw UsageError("--sigma must be in 2..5");
  if (d < 1) throw UsageError("--d must be positive");
  const k3lat::CaseCertificate cert = k3lat::build_case(sigma, k3lat::Integer(d));
  const std::string text = k3lat::certificate_to_json(cert) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
    std::cout << "sigma=" << sigma << " d=" << d << ": " << (cert.passed() ? "PASS" : "FAIL")
              << " -> " << out << '\n';
  }
  for (const auto& c : cert.checks)
    if (!c.passed) std::cerr << "failed check: " << c.name << '\n';
  return cert.passed() ? kPass : kFail;
}

int case_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  k3lat::CaseCertificate cert;
  try {
    cert = k3lat::certificate_from_json(ss.str());
  } catch (const std::exception& e) {
    std::cout << "FAIL: malformed certificate: " << e.what() << '\n';
    return kFail;
  }
  k3lat::VerificationResult r;
  try {
    r = k3lat::verify_certificate(cert);
  } catch (const std::exception& e) {
    r.ok = false;
    r.failures.push_back(e.what());
  }
  if (r.ok) {
    std::cout << "PASS: sigma=" << cert.sigma << " d=" << cert.d << ", " << cert.checks.size()
              << " checks re-derived\n";
    return kPass;
  }
  std::cout << "FAIL\n";
  for (const auto& f : r.failures) std::cout << "  " << f << '\n';
  return kFail;
}

int decide(long p, int sigma, bool json) {
  k3lat::Verdict v;
  try {
    v = k3lat::decide_enriques(p, sigma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json) {
    std::cout << k3lat::verdict_to_json(v) << '\n';
    return kPass;
  }
  std::cout << "p=" << v.p << " sigma=" << v.sigma << ": " << k3lat::to_string(v.answer) << " ("
            << k3lat::to_string(v.reason) << ")\n";
  if (v.d) std::cout << "  d = " << *v.d << '\n';
  if (v.arth_crosscheck) {
    std::cout << "  residue rule: " << (v.arth_crosscheck->residue_rule ? "true" : "false")
              << ", Arth on d(NS) = " << v.arth_crosscheck->ns_discriminant << ": "
              << (v.arth_crosscheck->arth_on_ns ? "true" : "false") << '\n';
  }
  if (v.sigma6_arth) std::cout << "  arth(p, 6, -1024) = " << (*v.sigma6_arth ? "true" : "false") << '\n';
  if (v.certificate) {
    std::cout << "  certificate: " << (v.certificate->passed() ? "all checks pass" : "failing checks")
              << " (" << v.certificate->checks.size() << ")\n";
  }
  if (!v.note.empty()) std::cout << "  " << v.note << '\n';
  return kPass;
}

int survey(long pmax, const std::string& csv) {
  if (pmax < 3) throw UsageError("--pmax must be at least 3");
  const k3lat::SurveyReport r = k3lat::survey(pmax);
  std::cout << k3lat::survey_summary(r);
  if (!csv.empty()) write_text(csv, k3lat::survey_to_csv(r));
  return r.pattern_holds() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice toolkit for Enriques involutions on supersingular K3 surfaces"};
  app.require_subcommand(1);

  auto* lattice = app.add_subcommand("lattice", "Inspect a lattice file");
  lattice->require_subcommand(1);
  std::string lattice_path;
  auto* info = lattice->add_subcommand("info", "Rank, determinant, signature, discriminant group");
  info->add_option("file", lattice_path, "Lattice document")->required();
  auto* roots = lattice->add_subcommand("roots", "Vectors of a given norm (definite lattices)");
  long norm = -2;
  bool quiet = false;
  roots->add_option("file", lattice_path, "Lattice document")->required();
  roots->add_option("--norm", norm, "Target norm")->capture_default_str();
  roots->add_flag("--count-only", quiet, "Print only the count");

  auto* cases = app.add_subcommand("case", "Explicit (sigma, d) constructions");
  cases->require_subcommand(1);
  auto* build = cases->add_subcommand("build", "Build and check a case certificate");
  int sigma = 0;
  long d = 0;
  std::string out;
  build->add_option("--sigma", sigma, "Artin invariant, 2..5")->required();
  build->add_option("--d", d, "Positive parameter d")->required();
  build->add_option("--out", out, "Certificate file (default: stdout)");
  auto* verify = cases->add_subcommand("verify", "Re-derive every check of a certificate");
  std::string cert_path;
  verify->add_option("file", cert_path, "Certificate document")->required();

  auto* dec = app.add_subcommand("decide", "Enriques verdict for (p, sigma)");
  long p = 0;
  bool json = false;
  dec->add_option("--p", p, "Odd prime")->required();
  dec->add_option("--sigma", sigma, "Artin invariant, 1..10")->required();
  dec->add_flag("--json", json, "Emit the verdict as JSON");

  auto* sur = app.add_subcommand("survey", "Verdicts for all odd primes up to pmax");
  long pmax = 0;
  std::string csv;
  sur->add_option("--pmax", pmax, "Largest prime to include")->required();
  sur->add_option("--csv", csv, "Write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return lattice_info(lattice_path);
    if (*roots) return lattice_roots(lattice_path, norm, quiet);
    if (*build) return case_build(sigma, d, out);
    if (*verify) return case_verify(cert_path);
    if (*dec) return decide(p, sigma, json);
    if (*sur) return survey(pmax, csv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
