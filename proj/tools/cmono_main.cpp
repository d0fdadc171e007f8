#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmono/errors.hpp"
#include "cmono/generate.hpp"
#include "cmono/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) cmono::fail(cmono::ErrorCode::Parse, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_analyze(const std::string& input, bool oracle, const std::string& emit,
                long long ell, long long power) {
  cmono::InputDocument doc = cmono::InputDocument::from_text(slurp(input));
  cmono::ReportOptions options;
  options.run_oracle = oracle;
  if (ell > 0) {
    options.ell = ell;
    options.power = power;
  }
  cmono::AnalysisReport report = cmono::run_report(doc, options);
  if (emit == "json")
    std::cout << report.json.dump(2) << "\n";
  else if (emit == "dot")
    std::cout << report.to_dot();
  else
    std::cout << report.to_text();
  return report.exit_code;
}

int run_gen(long long p, long long h, const std::string& vp, std::uint64_t seed) {
  cmono::InputDocument doc = cmono::generate_instance(p, h, cmono::parse_rational(vp), seed);
  std::cout << doc.to_json().dump(2) << "\n";
  return 0;
}

int run_check(long long seeds, bool oracle) {
  const long long ps[] = {2, 3, 5};
  const char* vps[] = {"0", "1", "3/2"};
  long long total = 0, failed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (long long p : ps)
    for (long long h = 1; h <= 5; ++h)
      for (const char* vp : vps)
        for (long long seed = 1; seed <= seeds; ++seed) {
          ++total;
          try {
            cmono::InputDocument doc =
                cmono::generate_instance(p, h, cmono::parse_rational(vp), seed);
            cmono::ReportOptions options;
            options.run_oracle = oracle;
            cmono::AnalysisReport report = cmono::run_report(doc, options);
            if (report.exit_code != 0) {
              ++failed;
              std::cerr << "FAIL p=" << p << " h=" << h << " vp=" << vp << " seed=" << seed
                        << ": verdict failure\n"
                        << report.json["invariants"].dump(2) << "\n";
            }
          } catch (const cmono::AnalysisError& e) {
            ++failed;
            std::cerr << "FAIL p=" << p << " h=" << h << " vp=" << vp << " seed=" << seed << ": "
                      << e.what() << "\n";
          }
        }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::cout << "checked " << total << " instances in " << elapsed.count() << " ms; " << failed
            << " failures\n";
  return failed == 0 ? 0 : static_cast<int>(cmono::ErrorCode::Verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster-picture monodromy calculator for split degenerate superelliptic curves"};
  app.set_help_flag("--help", "print help");  // frees -h/--h for the pair count
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze one input document");
  std::string input;
  bool oracle = false;
  std::string emit = "text";
  long long ell = 0, power = 1;
  analyze->add_option("--input", input, "input document (JSON)")->required();
  analyze->add_flag("--oracle", oracle, "also run the path-intersection oracle");
  analyze->add_option("--emit", emit, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  analyze->add_option("--ell", ell, "display the monodromy block reduced mod ell^power");
  analyze->add_option("--power", power, "exponent for --ell");

  auto* gen = app.add_subcommand("gen", "generate a pseudo-random instance");
  long long gp = 2, gh = 1;
  std::string gvp = "0";
  std::uint64_t seed = 1;
  gen->add_option("--p", gp, "prime p")->required();
  gen->add_option("--h", gh, "number of branch pairs")->required();
  gen->add_option("--vp", gvp, "valuation of p (rational)");
  gen->add_option("--seed", seed, "random seed");

  auto* check = app.add_subcommand("check", "run the invariant corpus");
  long long seeds = 4;
  bool check_no_oracle = false;
  check->add_option("--seeds", seeds, "seeds per (p, h, vp) combination");
  check->add_flag("--no-oracle", check_no_oracle, "skip the path-intersection oracle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(input, oracle, emit, ell, power);
    if (gen->parsed()) return run_gen(gp, gh, gvp, seed);
    return run_check(seeds, !check_no_oracle);
  } catch (const cmono::AnalysisError& e) {
    nlohmann::ordered_json err;
    err["error"]["code"] = e.exit_code();
    err["error"]["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
