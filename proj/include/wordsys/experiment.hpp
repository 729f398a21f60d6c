#ifndef WORDSYS_EXPERIMENT_HPP
#define WORDSYS_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "wordsys/error.hpp"
#include "wordsys/json_io.hpp"

namespace wordsys::experiment
{

using io::Json;

/// Process exit codes shared by the CLI and its documentation.
enum ExitCode : int
{
  Ok = 0,
  Usage = 1,
  NotObeying = 2,
  WitnessNotFound = 3,
  BadDSeq = 4,
  VerificationFailed = 5
};

int exitCodeFor(ErrorKind kind);

struct ExperimentConfig
{
  std::optional<Json> dSpec;      // d-sequence file contents; transpositions if unset
  std::optional<Json> nuSpec;     // nu file contents; seeded random if unset
  std::optional<Json> scaleSpec;  // free-side scale; transpositions at `budget` if unset
  unsigned budget = 1;
  std::size_t nWindow = 4;
  std::size_t mWindow = 16;
  std::size_t count = 20;
  freegrp::Gen basis = 4;
  std::uint64_t seed = 1;
  std::size_t searchBound = 1024;
  std::string structure = "trivial";  // or "matching"
};

/// A nu with random entries in [0, maxEntry] interleaved with zero
/// stretches that witness (r, r) for r < rounds, then zeros.
words::Nu randomObeyingNu(std::uint64_t seed, scale::Scale const &s,
                          std::size_t rounds = 3, std::uint64_t maxEntry = 3);

/// The first `count` scale entries as a JSON array.
Json runScale(ExperimentConfig const &cfg, std::size_t count);

/// {"j", "witnesses", "bStar", "equationCheck"[, "closure"]}. Throws
/// NotObeyingError when a window cell has no witness.
Json runSolve(ExperimentConfig const &cfg);

/// {"entries", "log", "verdicts", "reverify"}
Json runDiagonalize(ExperimentConfig const &cfg);

/// Re-runs every chain of a diagonalization output independently.
/// {"targets", "badSegments", "verdict"}
Json runVerifyBlocked(Json const &nuPrefix, ExperimentConfig const &cfg);

/// Both halves from one config, plus a machine-checkable summary.
Json runContrast(ExperimentConfig const &cfg);

/// Whether a report produced above records a verification failure.
bool reportFailed(Json const &report);

} // namespace wordsys::experiment

#endif // WORDSYS_EXPERIMENT_HPP
