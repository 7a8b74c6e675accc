// mlfw: runs the verification suites and writes JSON reports.
//
// Exit status: 0 when every check passes, 1 when some check fails (the report
// is still written), 2 on usage errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlfw/lubin_tate.hpp"
#include "mlfw/padic.hpp"
#include "mlfw/suites.hpp"

namespace {

constexpr int kUsage = 2;

struct Flags {
  std::string d = "2..9";
  std::string g;
  std::string p = "3,5";
  int precision = 0;
  int degree = 8;
  std::string f = "1,2";
  std::string mod = "2,3";
  std::size_t samples = 20;
  std::uint64_t seed = 42;
  std::string report;
  bool allow_large = false;
  bool timings = false;
  bool quiet = false;
};

mlfw::RunConfig to_config(const std::string& suite, const Flags& fl) {
  mlfw::RunConfig c;
  c.suite = suite;
  c.d = mlfw::parse_range(fl.d);
  if (!fl.g.empty()) c.g = mlfw::parse_range(fl.g);
  c.primes = mlfw::parse_list(fl.p);
  if (fl.precision != 0) c.precision = fl.precision;
  c.degree = fl.degree;
  c.residue_degrees.clear();
  for (auto f : mlfw::parse_list(fl.f)) c.residue_degrees.push_back(static_cast<int>(f));
  c.moduli = mlfw::parse_list(fl.mod);
  c.samples = fl.samples;
  c.seed = fl.seed;
  c.allow_large = fl.allow_large;
  c.timings = fl.timings;
  return c;
}

// --report wins; otherwise $MLFW_REPORT_DIR/<suite>.json; otherwise none.
std::string report_path(const std::string& explicit_path, const std::string& suite) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* dir = std::getenv("MLFW_REPORT_DIR"); dir && *dir) {
    return (std::filesystem::path(dir) / (suite + ".json")).string();
  }
  return {};
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << text;
}

int run_verify(const std::string& suite, const Flags& fl) {
  const mlfw::Report rep = mlfw::run_suite(to_config(suite, fl));
  write_file(report_path(fl.report, suite), rep.to_json());
  if (!fl.quiet) std::cout << rep.summary();
  return rep.passed() ? 0 : 1;
}

int run_lubin_tate(std::uint32_t p, int f, const std::string& pi_text, int degree, int precision,
                   const std::string& report) {
  using json = nlohmann::ordered_json;
  mlfw::CoefficientRing ring(p, f, precision);
  std::int64_t pi_value = 0;
  if (pi_text == "p") {
    pi_value = p;
  } else {
    try {
      pi_value = std::stoll(pi_text);
    } catch (const std::exception&) {
      throw mlfw::UsageError("--pi must be 'p' or an integer");
    }
  }
  const auto law = mlfw::lubin_tate_law(ring, ring.from_integer(pi_value), ring.residue_field_size(), degree);
  const auto pi_endo = mlfw::lt_endomorphism(law, ring.from_integer(pi_value), degree);
  const auto lg = mlfw::formal_log(law, degree);
  json checks = json::object();
  bool ok = true;
  for (const auto& c : mlfw::check_law(law)) {
    checks[c.name] = c.passed;
    ok = ok && c.passed;
  }
  json modulus = json::array();
  for (auto m : ring.polynomial()) modulus.push_back(m);
  json doc{{"tool", "mlfw"},
           {"version", mlfw::tool_version()},
           {"p", p},
           {"f", f},
           {"q", ring.residue_field_size()},
           {"modulus_polynomial_low_to_high", modulus},
           {"pi", pi_value},
           {"degree", degree},
           {"precision", precision},
           {"law", json::parse(law.law.reduced_to(law.ring).to_json())},
           {"pi_endomorphism", json::parse(pi_endo.reduced_to(law.ring).to_json())},
           {"log", {{"scale_exponent", lg.scale}, {"scaled_series", json::parse(lg.series.reduced_to(law.ring).to_json())}}},
           {"checks", checks},
           {"verdict", ok ? "pass" : "fail"}};
  const std::string text = doc.dump(2) + "\n";
  if (report.empty()) {
    std::cout << text;
  } else {
    write_file(report, text);
    for (const auto& [name, passed] : checks.items())
      std::cout << (passed.get<bool>() ? "PASS  " : "FAIL  ") << name << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mlfw: verification workbench for mixed-characteristic local field computations"};
  app.set_version_flag("--version", mlfw::tool_version());
  app.require_subcommand(1);

  Flags fl;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("suite", suite, "words|symplectic|sp-quotient|trace-kernel|padic|lubin-tate|finite-groups|all")
      ->required();
  verify->add_option("--d", fl.d, "degree range, e.g. 2..9");
  verify->add_option("--g", fl.g, "genus range (suite-specific default)");
  verify->add_option("--p", fl.p, "odd primes, e.g. 3,5");
  verify->add_option("--precision", fl.precision, "p-adic precision N (default 16; 8 for lubin-tate)");
  verify->add_option("--degree", fl.degree, "series degree cutoff D");
  verify->add_option("--f", fl.f, "residue degrees for lubin-tate, e.g. 1,2");
  verify->add_option("--mod", fl.mod, "prime-power moduli for sp-quotient, e.g. 2,3");
  verify->add_option("--samples", fl.samples, "random samples per check");
  verify->add_option("--seed", fl.seed, "RNG seed, recorded in the report");
  verify->add_option("--report", fl.report, "report path (default $MLFW_REPORT_DIR/<suite>.json)");
  verify->add_flag("--allow-large", fl.allow_large, "lift the default size caps");
  verify->add_flag("--timings", fl.timings, "include per-check runtimes (makes reports nondeterministic)");
  verify->add_flag("--quiet", fl.quiet, "no summary on stdout");

  Flags tk;
  auto* trace = app.add_subcommand("trace-kernel", "trace-kernel suite (same as verify trace-kernel)");
  trace->add_option("--d", tk.d, "degree range");
  trace->add_option("--samples", tk.samples, "random samples per check");
  trace->add_option("--seed", tk.seed, "RNG seed");
  trace->add_option("--report", tk.report, "report path");

  std::uint32_t lt_p = 5;
  int lt_f = 1, lt_degree = 12, lt_precision = 8;
  std::string lt_pi = "p", lt_report;
  auto* lt = app.add_subcommand("lubin-tate", "print the Lubin-Tate law, [pi] and the scaled formal log");
  lt->add_option("--p", lt_p, "odd prime");
  lt->add_option("--f", lt_f, "residue degree");
  lt->add_option("--pi", lt_pi, "uniformizer: 'p' or an integer of valuation 1");
  lt->add_option("--degree", lt_degree, "degree cutoff D");
  lt->add_option("--precision", lt_precision, "p-adic precision N");
  lt->add_option("--report", lt_report, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return run_verify(suite, fl);
    if (*trace) return run_verify("trace-kernel", tk);
    if (*lt) return run_lubin_tate(lt_p, lt_f, lt_pi, lt_degree, lt_precision, lt_report);
  } catch (const mlfw::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
