// Command-line front end: transform / verify / roots / demo / trajectory.
//
// Exit codes are a stable contract:
//   0  success
//   1  usage, I/O or schema problems
//   2  breakdown (zero divisor inside an evolution)
//   3  verification failure

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gevp/io.hpp"
#include "gevp/polyseq.hpp"
#include "gevp/transform.hpp"
#include "gevp/verify.hpp"

namespace {

using gevp::PencilDocument;
using gevp::PencilSpec;
using gevp::Rational;
using gevp::ResultDocument;
using gevp::TodaRun;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBreakdown = 2;
constexpr int kExitVerifyFailed = 3;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open output file: " + path);
  out << text;
}

enum class Algorithm { automatic, relativistic, elementary, hungry };

gevp::ScalarMode parse_mode(const std::string& name) {
  return name == "f64" ? gevp::ScalarMode::f64 : gevp::ScalarMode::exact;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "auto") return Algorithm::automatic;
  if (name == "relativistic") return Algorithm::relativistic;
  if (name == "elementary") return Algorithm::elementary;
  return Algorithm::hungry;
}

template <typename S>
Algorithm resolve_algorithm(const PencilSpec<S>& spec, Algorithm algo) {
  if (algo != Algorithm::automatic) return algo;
  if (spec.factor_count == 1 && spec.epsilon.all_ones()) return Algorithm::relativistic;
  if (spec.factor_count == 1) return Algorithm::elementary;
  return Algorithm::hungry;
}

/// Dispatches to the most specific kernel that fits, or honors an override.
template <typename S>
TodaRun<S> run_transform_kernel(const PencilSpec<S>& spec, Algorithm algo,
                                std::size_t extra_levels = 0) {
  switch (resolve_algorithm(spec, algo)) {
    case Algorithm::relativistic:
      if (spec.factor_count != 1 || !spec.epsilon.all_ones())
        throw IoFailure("the relativistic kernel requires M = 1 and an all-ones epsilon");
      return gevp::relativistic_toda(spec.q[0], spec.e, extra_levels);
    case Algorithm::elementary:
      if (spec.factor_count != 1) throw IoFailure("the elementary kernel requires M = 1");
      return gevp::elementary_toda(spec.q[0], spec.e, spec.epsilon, extra_levels);
    default:
      return gevp::hungry_toda(spec, extra_levels);
  }
}

std::vector<std::string> charpoly_strings(const gevp::Polynomial<Rational>& p, std::size_t order) {
  std::vector<std::string> out;
  out.reserve(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out.push_back(p.coeff(i).str());
  return out;
}

int cmd_transform(const std::string& input, const std::string& output, gevp::ScalarMode mode,
                  bool verify, const std::string& algorithm) {
  const PencilDocument doc = gevp::read_pencil_document(read_input(input));
  const Algorithm algo = parse_algorithm(algorithm);

  if (mode == gevp::ScalarMode::f64) {
    const auto spec = gevp::to_spec<double>(doc);
    const auto run = run_transform_kernel(spec, algo);
    write_output(output, gevp::write_result_document(gevp::from_result(run.result)));
    return kExitOk;
  }

  const auto spec = gevp::to_spec<Rational>(doc);
  const auto run = run_transform_kernel(spec, algo);
  ResultDocument out = gevp::from_result(run.result);
  bool verified = true;
  if (verify) {
    const auto report = gevp::verify_isospectral(spec, run.result);
    out.charpoly = charpoly_strings(report.pencil_charpoly, spec.order);
    out.verified = report.equal;
    verified = report.equal;
    if (!verified)
      std::cerr << "verification failed: pencil and output characteristic polynomials differ\n";
  }
  write_output(output, gevp::write_result_document(out));
  return verified ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& input, const std::string& output) {
  const PencilDocument doc = gevp::read_pencil_document(read_input(input));
  const auto spec = gevp::to_spec<Rational>(doc);

  // Extra time levels give the polynomial identity checks room to bite.
  const std::size_t extra = (spec.order + 2) * spec.factor_count + 2;
  const auto run = run_transform_kernel(spec, Algorithm::automatic, extra);

  std::ostringstream report;
  bool ok = true;
  const auto iso = gevp::verify_isospectral(spec, run.result);
  report << (iso.equal ? "ok  " : "FAIL") << "  isospectrality (exact charpoly equality)\n";
  ok = ok && iso.equal;

  const gevp::PolyFamily family =
      spec.factor_count == 1 ? gevp::build_family_m1(run.trajectory, spec.epsilon)
                             : gevp::build_family_general(run.trajectory);
  const auto identities = gevp::check_identities(family, run.trajectory, run.result);
  for (const auto& check : identities.checks) {
    report << (check.pass ? "ok  " : "FAIL") << "  identity: " << check.name << " ("
           << check.points << " points)";
    if (!check.pass)
      report << " first failure at (k=" << check.fail_k << ", n=" << check.fail_n << ")";
    report << "\n";
    ok = ok && check.pass;
  }

  if (spec.factor_count == 1) {
    try {
      const auto taus = gevp::check_tau_formulas(run.result);
      std::size_t passed = 0;
      for (const auto& c : taus.checks) passed += c.pass ? 1 : 0;
      report << (taus.all_pass() ? "ok  " : "FAIL") << "  tau ratio closed forms (" << passed
             << "/" << taus.checks.size() << ")\n";
      ok = ok && taus.all_pass();
    } catch (const gevp::TauBreakdown& err) {
      report << "FAIL  tau ratio closed forms (" << err.what() << ")\n";
      ok = false;
    }
  }

  write_output(output, report.str());
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_roots(const std::string& input, const std::string& output, double tol) {
  const std::string text = read_input(input);
  const std::string format = gevp::document_format(text);

  gevp::Polynomial<Rational> poly;
  if (format == "gevp-pencil/1") {
    const auto spec = gevp::to_spec<Rational>(gevp::read_pencil_document(text));
    const auto [a, b] = gevp::assemble_pencil(spec);
    poly = gevp::charpoly(a, b);
  } else if (format == "gevp-result/1") {
    const auto result = gevp::to_result<Rational>(gevp::read_result_document(text));
    poly = gevp::charpoly(gevp::assemble_result(result));
  } else {
    throw gevp::SchemaError("format", "expected a pencil or result document");
  }

  const auto report = gevp::real_roots(poly, tol);
  std::ostringstream out;
  char buf[64];
  for (const auto& root : report.roots) {
    std::snprintf(buf, sizeof buf, "%.12g", root.value);
    out << buf;
    if (root.multiplicity != 1) out << " (multiplicity " << root.multiplicity << ")";
    out << "\n";
  }
  if (report.complex_count > 0) out << "non-real roots: " << report.complex_count << "\n";
  write_output(output, out.str());
  return kExitOk;
}

int cmd_demo(int section, const std::string& output) {
  PencilDocument doc;
  if (section == 2) {
    doc.order = 5;
    doc.factor_count = 1;
    doc.epsilon = {1, 1, 1, 1};
    doc.q = {{"1", "2", "3", "4", "5"}};
    doc.e = {"6", "7", "8", "9"};
  } else if (section == 3) {
    doc.order = 6;
    doc.factor_count = 1;
    doc.epsilon = {1, 1, 1, 0, 0};
    doc.q = {{"1", "2", "3", "4", "5", "6"}};
    doc.e = {"7", "8", "9", "10", "11"};
  } else {
    doc.order = 6;
    doc.factor_count = 3;
    doc.epsilon = {1, 1, 1, 0, 0};
    doc.q = {{"1", "2", "3", "4", "5", "6"},
             {"2", "3", "4", "5", "6", "7"},
             {"3", "4", "5", "6", "7", "8"}};
    doc.e = {"7", "8", "9", "10", "11"};
  }
  write_output(output, gevp::write_pencil_document(doc));
  return kExitOk;
}

template <typename S>
std::string trajectory_csv(const gevp::Trajectory<S>& t) {
  std::ostringstream out;
  out << "k,n,q,e,f,d\n";
  for (std::size_t k = 0; k < t.f.size(); ++k)
    for (std::size_t n = 0; n < t.order; ++n) {
      out << k << "," << n << ",";
      out << gevp::ScalarIo<S>::str(t.q[k][n]) << ",";
      if (n + 1 < t.order && k < t.e.size()) out << gevp::ScalarIo<S>::str(t.e[k][n]);
      out << "," << gevp::ScalarIo<S>::str(t.f[k][n]) << ",";
      if (k < t.d.size() && !t.d[k].empty()) out << gevp::ScalarIo<S>::str(t.d[k][n]);
      out << "\n";
    }
  return out.str();
}

template <typename S>
int trajectory_for_mode(const PencilDocument& doc, const std::string& output,
                        const std::string& algorithm) {
  const auto spec = gevp::to_spec<S>(doc);
  const Algorithm algo = parse_algorithm(algorithm);
  try {
    const auto run = run_transform_kernel(spec, algo);
    write_output(output, trajectory_csv(run.trajectory));
    return kExitOk;
  } catch (const gevp::BreakdownError& err) {
    // Flush the table up to the last fully completed level, then report.
    std::cerr << err.what() << "\n";
    gevp::Trajectory<S> partial;
    switch (resolve_algorithm(spec, algo)) {
      case Algorithm::relativistic:
        partial = gevp::evolve_relativistic(spec.q[0], spec.e, err.level);
        break;
      case Algorithm::elementary:
        partial = gevp::evolve_elementary(spec.q[0], spec.e, spec.epsilon, err.level);
        break;
      default:
        partial = gevp::evolve_hungry(spec, err.level);
        break;
    }
    write_output(output, trajectory_csv(partial));
    return kExitBreakdown;
  }
}

int cmd_trajectory(const std::string& input, const std::string& output, gevp::ScalarMode mode,
                   const std::string& algorithm) {
  const PencilDocument doc = gevp::read_pencil_document(read_input(input));
  if (mode == gevp::ScalarMode::f64) return trajectory_for_mode<double>(doc, output, algorithm);
  return trajectory_for_mode<Rational>(doc, output, algorithm);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subtraction-free isospectral transformations of structured matrix pencils"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string mode = "exact";
  std::string algorithm = "auto";
  bool verify = false;
  double tol = 1e-10;
  int section = 0;

  auto* transform = app.add_subcommand("transform", "Transform a pencil document into an EVP");
  transform->add_option("-i,--input", input, "Pencil document (JSON), or - for stdin")->required();
  transform->add_option("-o,--output", output, "Output path (default stdout)");
  transform->add_option("--mode", mode, "Computation mode")->check(CLI::IsMember({"exact", "f64"}));
  transform->add_flag("--verify", verify, "Certify isospectrality exactly (exact mode only)");
  transform->add_option("--algorithm", algorithm, "Kernel override (cross-checking aid)")
      ->check(CLI::IsMember({"auto", "relativistic", "elementary", "hungry"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the full exact verification report");
  verify_cmd->add_option("-i,--input", input, "Pencil document (JSON), or - for stdin")->required();
  verify_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  auto* roots = app.add_subcommand("roots", "Real eigenvalues via Sturm bisection (exact charpoly)");
  roots->add_option("-i,--input", input, "Pencil or result document, or - for stdin")->required();
  roots->add_option("-o,--output", output, "Output path (default stdout)");
  roots->add_option("--tol", tol, "Bracket width for root refinement")->check(CLI::PositiveNumber);

  auto* demo = app.add_subcommand("demo", "Emit a built-in example pencil document");
  demo->add_option("--section", section, "Which example: 2, 3 or 4")
      ->required()
      ->check(CLI::IsMember({2, 3, 4}));
  demo->add_option("-o,--output", output, "Output path (default stdout)");

  auto* trajectory = app.add_subcommand("trajectory", "Dump the full evolution table as CSV");
  trajectory->add_option("-i,--input", input, "Pencil document (JSON), or - for stdin")->required();
  trajectory->add_option("-o,--output", output, "Output path (default stdout)");
  trajectory->add_option("--mode", mode, "Computation mode")
      ->check(CLI::IsMember({"exact", "f64"}));
  trajectory->add_option("--algorithm", algorithm, "Kernel override")
      ->check(CLI::IsMember({"auto", "relativistic", "elementary", "hungry"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform) {
      if (verify && parse_mode(mode) == gevp::ScalarMode::f64) {
        std::cerr << "--verify requires exact mode: approximate comparisons certify nothing\n";
        return kExitUsage;
      }
      return cmd_transform(input, output, parse_mode(mode), verify, algorithm);
    }
    if (*verify_cmd) return cmd_verify(input, output);
    if (*roots) return cmd_roots(input, output, tol);
    if (*demo) return cmd_demo(section, output);
    if (*trajectory) return cmd_trajectory(input, output, parse_mode(mode), algorithm);
  } catch (const gevp::BreakdownError& err) {
    std::cerr << err.what() << "\n";
    return kExitBreakdown;
  } catch (const gevp::SchemaError& err) {
    std::cerr << "schema error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const gevp::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const IoFailure& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
