#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wordsys/experiment.hpp"

namespace ex = wordsys::experiment;
namespace io = wordsys::io;

namespace
{

constexpr char const *exitCodeHelp =
  "Exit codes:\n"
  "  0  ok\n"
  "  1  usage, parse or precondition error\n"
  "  2  NotObeying: some (n, m) has no obeys witness within the search bound\n"
  "  3  WitnessNotFound: a solver query found no witness\n"
  "  4  BadDSeq: the d-sequence is not a valid null sequence (also NotNull, NoBound)\n"
  "  5  verification failure: a report recorded a failed check";

// "transpositions" names the builtin; anything else is a file path.
std::optional<io::Json> dSpecArg(std::string const &arg)
{
  if (arg.empty() || arg == "transpositions")
    return std::nullopt;
  return io::readJsonFile(arg);
}

void emit(io::Json const &report, std::string const &out)
{
  if (out.empty())
    std::cout << report.dump(2) << '\n';
  else
    io::writeJsonFile(out, report);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Word-equation systems over permutation groups and free groups"};
  app.footer(exitCodeHelp);
  app.require_subcommand(1);

  ex::ExperimentConfig cfg;
  std::string dArg, nuArg, scaleArg, outArg;
  std::vector<std::size_t> window{4, 16};
  std::size_t scaleCount = 10;

  auto *scale = app.add_subcommand("scale", "Print the first entries of the scale j");
  scale->add_option("--d", dArg, "d-sequence file, or 'transpositions'");
  scale->add_option("--budget", cfg.budget, "Variable budget B")->capture_default_str();
  scale->add_option("--count", scaleCount, "Number of entries")->capture_default_str();

  auto *solve = app.add_subcommand("solve", "Solve an obeying system over Sym(N)");
  solve->add_option("--d", dArg, "d-sequence file, or 'transpositions'");
  solve->add_option("--nu", nuArg, "nu file; random obeying nu from --seed if omitted");
  solve->add_option("--budget", cfg.budget, "Variable budget B")->capture_default_str();
  solve->add_option("--window", window, "N,M: check b*_n(m) for n < N, m < M")
    ->delimiter(',')
    ->expected(2);
  solve->add_option("--search-bound", cfg.searchBound, "Witness search bound")
    ->capture_default_str();
  solve->add_option("--structure", cfg.structure, "Closure check: trivial or matching")
    ->check(CLI::IsMember({"trivial", "matching"}))
    ->capture_default_str();
  solve->add_option("--seed", cfg.seed, "Seed for the random nu")->capture_default_str();
  solve->add_option("--out", outArg, "Report path (stdout if omitted)");

  auto *diag = app.add_subcommand("diagonalize", "Build a nu blocking every target in H");
  diag->add_option("--basis", cfg.basis, "H = F(z1..zN)")->capture_default_str();
  diag->add_option("--count", cfg.count, "Number of targets")->capture_default_str();
  diag->add_option("--scale", scaleArg, "Scale file (array, or {d, budget})");
  diag->add_option("--budget", cfg.budget, "Budget of the default scale")->capture_default_str();
  diag->add_option("--out", outArg, "Output path (stdout if omitted)");

  auto *verify = app.add_subcommand("verify-blocked", "Re-run every chain of a diagonal nu");
  verify->add_option("--nu", nuArg, "Output of diagonalize")->required();
  verify->add_option("--basis", cfg.basis, "H = F(z1..zN)")->capture_default_str();
  verify->add_option("--count", cfg.count, "Number of targets")->capture_default_str();
  verify->add_option("--scale", scaleArg, "Scale file (array, or {d, budget})");
  verify->add_option("--budget", cfg.budget, "Budget of the default scale")->capture_default_str();
  verify->add_option("--out", outArg, "Report path (stdout if omitted)");

  auto *contrast = app.add_subcommand("contrast", "Solve one system and block another");
  contrast->add_option("--d", dArg, "d-sequence file, or 'transpositions'");
  contrast->add_option("--nu", nuArg, "nu file; random obeying nu from --seed if omitted");
  contrast->add_option("--budget", cfg.budget, "Variable budget B")->capture_default_str();
  contrast->add_option("--window", window, "N,M")->delimiter(',')->expected(2);
  contrast->add_option("--count", cfg.count, "Number of targets")->capture_default_str();
  contrast->add_option("--basis", cfg.basis, "H = F(z1..zN)")->capture_default_str();
  contrast->add_option("--scale", scaleArg, "Free-side scale file");
  contrast->add_option("--search-bound", cfg.searchBound, "Witness search bound")
    ->capture_default_str();
  contrast->add_option("--structure", cfg.structure, "trivial or matching")
    ->check(CLI::IsMember({"trivial", "matching"}))
    ->capture_default_str();
  contrast->add_option("--seed", cfg.seed, "Seed for the random nu")->capture_default_str();
  contrast->add_option("--out", outArg, "Report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? ex::Ok : ex::Usage;
  }

  try {
    cfg.dSpec = dSpecArg(dArg);
    if (!nuArg.empty() && !verify->parsed())
      cfg.nuSpec = io::readJsonFile(nuArg);
    if (!scaleArg.empty())
      cfg.scaleSpec = io::readJsonFile(scaleArg);
    cfg.nWindow = window.at(0);
    cfg.mWindow = window.at(1);

    io::Json report;
    if (scale->parsed()) {
      std::cout << ex::runScale(cfg, scaleCount).dump() << '\n';
      return ex::Ok;
    }
    if (solve->parsed())
      report = ex::runSolve(cfg);
    else if (diag->parsed())
      report = ex::runDiagonalize(cfg);
    else if (verify->parsed())
      report = ex::runVerifyBlocked(io::readJsonFile(nuArg), cfg);
    else
      report = ex::runContrast(cfg);

    emit(report, outArg);
    return ex::reportFailed(report) ? ex::VerificationFailed : ex::Ok;
  } catch (wordsys::Error const &e) {
    std::cerr << "error: " << wordsys::to_string(e.kind()) << ": " << e.what() << '\n';
    return ex::exitCodeFor(e.kind());
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return ex::Usage;
  }
}
