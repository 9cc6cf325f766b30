// jones-verify: command-line front-end for the verification library.
//
//   jones-verify spectrum --n-max 24 --format csv
//   jones-verify verify tl --t 1 --m 3
//   jones-verify verify laurent --depth 12
//   jones-verify walkthrough --format json

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "jones/commands.hpp"

namespace {

jones::Format format_or_throw(const std::string& s) {
  try {
    return jones::parse_format(s);
  } catch (const jones::ParseError& e) {
    throw CLI::ValidationError("--format", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of the cluster-algebra computations behind the Jones index spectrum"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string output;
  std::uint64_t rng_seed = jones::kDefaultRngSeed;

  jones::SpectrumOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "Discrete spectrum 4cos^2(pi/n) and the continuous branch");
  spectrum->add_option("--n-max", spectrum_opt.n_max, "Largest n (>= 3)")->capture_default_str();

  jones::VerifyOptions verify_opt;
  std::string t_text;
  std::string path_text;
  std::string seed_file;
  auto* verify = app.add_subcommand("verify", "Run one verifier: tl, laurent, chebyshev, casimir, bratteli, audit");
  verify->add_option("kind", verify_opt.kind, "Verifier to run")->required();
  verify->add_option("--t", t_text, "Parameter t: 3, 7/2, 0.25, root:n, root:k/n, complex:RE,IM");
  verify->add_option("--m", verify_opt.m, "Tower size / Powers truncation level")->capture_default_str();
  verify->add_option("--depth", verify_opt.depth, "Mutation depth")->capture_default_str();
  verify->add_option("--n", verify_opt.n, "Largest Chebyshev degree")->capture_default_str();
  verify->add_option("--levels", verify_opt.levels, "Bratteli levels")->capture_default_str();
  verify->add_option("--lambda", verify_opt.lambda, "Powers product parameter in (0, 1)")->capture_default_str();
  verify->add_option("--tol", verify_opt.tol, "Tolerance")->capture_default_str();
  verify->add_option("--seed", seed_file, "JSON seed file {\"rank\", \"B\", \"cluster\"}");
  verify->add_option("--path", path_text, "Mutation path, e.g. 1,2,1");

  jones::WalkthroughOptions walk_opt;
  std::string expect_fail;
  auto* walkthrough = app.add_subcommand("walkthrough", "Every computational step of the admissible-index argument");
  walkthrough->add_option("--expect-fail", expect_fail, "Inject a known fault: audit-as-projection");

  for (auto* sub : {spectrum, verify, walkthrough}) {
    sub->add_option("--format", format, "table, json or csv")->capture_default_str();
    sub->add_option("--output,-o", output, "Write output to a file instead of stdout");
    sub->add_option("--seed-rng", rng_seed, "Seed for randomized checks")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
    spectrum_opt.format = walk_opt.format = verify_opt.format = format_or_throw(format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return jones::kExitUsage;
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "cannot open " << output << " for writing\n";
      return jones::kExitUsage;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file;

  if (spectrum->parsed()) return jones::cmd_spectrum(spectrum_opt, out, std::cerr);
  if (verify->parsed()) {
    if (!t_text.empty()) verify_opt.t = t_text;
    if (!path_text.empty()) verify_opt.path = path_text;
    if (!seed_file.empty()) verify_opt.seed_file = seed_file;
    verify_opt.rng_seed = rng_seed;
    return jones::cmd_verify(verify_opt, out, std::cerr);
  }
  if (!expect_fail.empty()) walk_opt.expect_fail = expect_fail;
  return jones::cmd_walkthrough(walk_opt, out, std::cerr);
}
