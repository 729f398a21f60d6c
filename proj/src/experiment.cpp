#include "wordsys/experiment.hpp"

#include <algorithm>
#include <random>

namespace wordsys::experiment
{

int exitCodeFor(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::NotObeying:
    return NotObeying;
  case ErrorKind::WitnessNotFound:
    return WitnessNotFound;
  case ErrorKind::BadDSeq:
  case ErrorKind::NotNull:
  case ErrorKind::NoBound:
    return BadDSeq;
  default:
    return Usage;
  }
}

words::Nu randomObeyingNu(std::uint64_t seed, scale::Scale const &s, std::size_t rounds,
                          std::uint64_t maxEntry)
{
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> entries;
  for (std::size_t r = 0; r < rounds; ++r) {
    std::size_t burst = 1 + static_cast<std::size_t>(rng() % 6);
    for (std::size_t i = 0; i < burst; ++i)
      entries.push_back(rng() % (maxEntry + 1));
    freegrp::appendObeysStretch(entries, s, r, r, 0);
  }
  return words::Nu(std::move(entries), words::Nu::Tail::Zero);
}

namespace
{

perm::DSeq dseqOf(ExperimentConfig const &cfg)
{ return cfg.dSpec ? io::dseqFromJson(*cfg.dSpec) : perm::DSeq::transpositions(); }

scale::Scale freeScaleOf(ExperimentConfig const &cfg)
{
  if (cfg.scaleSpec)
    return io::scaleFromJson(*cfg.scaleSpec, cfg.budget);
  return scale::Scale(perm::DSeq::transpositions(), cfg.budget);
}

perm::Structure structureOf(std::string const &name)
{
  if (name == "trivial")
    return perm::trivialStructure();
  if (name == "matching")
    return perm::matchingStructure();
  throw Error(ErrorKind::Precondition, "unknown structure '" + name + "'");
}

Json verdictsJson(freegrp::BlockingReport const &rep)
{
  Json out = Json::array();
  for (auto const &v : rep.targets)
    out.push_back({{"target", v.target},
                   {"element", freegrp::toString(v.element)},
                   {"chain", io::toJson(v.state)}});
  return out;
}

Json failureJson(freegrp::BlockingReport const &rep)
{
  if (rep.ok())
    return "ok";
  Json out = Json::object();
  if (rep.firstSurviving) {
    out["firstSurviving"] = *rep.firstSurviving;
    out["element"] = freegrp::toString(rep.targets.at(*rep.firstSurviving).element);
  }
  out["badSegments"] = rep.badSegments;
  return out;
}

freegrp::BlockingReport blockingReport(freegrp::NuPrefix const &p, ExperimentConfig const &cfg,
                                       scale::Scale const &s)
{
  auto Z = freegrp::SubBasis::firstN(cfg.basis);
  freegrp::Enumeration enumeration = [Z](std::size_t r) { return freegrp::enumerateH(Z, r); };
  return freegrp::verifyBlocking(p, freegrp::generatorParams(), s, enumeration, cfg.count);
}

} // namespace

Json runScale(ExperimentConfig const &cfg, std::size_t count)
{
  auto d = dseqOf(cfg);
  auto s = scale::buildScale(d, cfg.budget, count);
  return s.prefix(count);
}

Json runSolve(ExperimentConfig const &cfg)
{
  auto d = dseqOf(cfg);
  scale::Scale s(d, cfg.budget);
  words::Nu nu = cfg.nuSpec ? io::nuFromJson(*cfg.nuSpec) : randomObeyingNu(cfg.seed, s);
  auto S = structureOf(cfg.structure);
  solver::LimitAutomorphism L(d, words::nuWords(nu), s, cfg.searchBound);

  Json out;
  out["j"] = Json::array();

  Json witnesses = Json::array();
  for (std::size_t n = 0; n < cfg.nWindow; ++n) {
    for (std::size_t m = 0; m < cfg.mWindow; ++m) {
      auto wit = scale::findWitness(L.words(), s, n, m, cfg.searchBound);
      if (!wit)
        throw NotObeyingError(n, m);
      witnesses.push_back(io::toJson(*wit));
    }
  }
  out["witnesses"] = std::move(witnesses);

  Json bStar = Json::array();
  for (std::size_t n = 0; n < cfg.nWindow; ++n) {
    Json row = Json::array();
    for (std::size_t m = 0; m < cfg.mWindow; ++m)
      row.push_back({m, L.apply(n, m)});
    bStar.push_back({n, row});
  }
  out["bStar"] = std::move(bStar);

  auto rep = solver::verifySolution(L, cfg.nWindow, cfg.mWindow);
  if (rep.ok()) {
    out["equationCheck"] = "ok";
  } else {
    Json bad = Json::array();
    for (auto const &dsc : rep.discrepancies)
      bad.push_back({{"n", dsc.n}, {"m", dsc.m}, {"lhs", dsc.lhs}, {"rhs", dsc.rhs}});
    out["equationCheck"] = std::move(bad);
  }

  if (cfg.structure != "trivial")
    out["closure"] = solver::closureCheck(L, S, cfg.mWindow) ? "ok" : "failed";

  out["d"] = io::toJson(d);
  out["nu"] = io::toJson(nu);
  out["budget"] = cfg.budget;
  out["j"] = s.materialized();
  return out;
}

Json runDiagonalize(ExperimentConfig const &cfg)
{
  auto s = freeScaleOf(cfg);
  auto Z = freegrp::SubBasis::firstN(cfg.basis);
  freegrp::Enumeration enumeration = [Z](std::size_t r) { return freegrp::enumerateH(Z, r); };
  auto p = freegrp::diagonalize(freegrp::generatorParams(), s, enumeration, cfg.count);

  Json out = io::toJson(p);
  auto rep = blockingReport(p, cfg, s);
  out["verdicts"] = verdictsJson(rep);
  out["reverify"] = failureJson(rep);
  return out;
}

Json runVerifyBlocked(Json const &nuPrefix, ExperimentConfig const &cfg)
{
  auto p = io::nuPrefixFromJson(nuPrefix);
  auto s = freeScaleOf(cfg);
  auto rep = blockingReport(p, cfg, s);
  return {{"targets", verdictsJson(rep)},
          {"badSegments", rep.badSegments},
          {"verdict", failureJson(rep)}};
}

Json runContrast(ExperimentConfig const &cfg)
{
  Json out;
  out["permutationSide"] = nullptr;
  out["freeSide"] = nullptr;

  Json solve;
  std::string permSide = "solved";
  try {
    solve = runSolve(cfg);
    if (reportFailed(solve))
      permSide = "failed";
  } catch (Error const &e) {
    permSide = std::string("failed: ") + e.what();
  }

  Json diag = runDiagonalize(cfg);
  std::size_t blocked = 0;
  for (auto const &v : diag["verdicts"])
    blocked += v["chain"]["status"] == "dead";
  std::string freeSide = "blocked(" + std::to_string(blocked) + ")";
  if (blocked != cfg.count || diag["reverify"] != "ok")
    freeSide = "blocked(" + std::to_string(blocked) + "/" + std::to_string(cfg.count) + ")";

  out["permutationSide"] = permSide;
  out["freeSide"] = freeSide;
  if (solve.contains("closure"))
    out["closure"] = solve["closure"];
  out["config"] = {{"budget", cfg.budget},
                   {"window", {cfg.nWindow, cfg.mWindow}},
                   {"count", cfg.count},
                   {"basis", cfg.basis},
                   {"seed", cfg.seed},
                   {"structure", cfg.structure}};
  out["solve"] = std::move(solve);
  out["diagonalize"] = std::move(diag);
  return out;
}

bool reportFailed(Json const &report)
{
  auto notOk = [&](char const *key) { return report.contains(key) && report[key] != "ok"; };
  if (notOk("equationCheck") || notOk("reverify") || notOk("verdict") || notOk("closure"))
    return true;
  if (report.contains("permutationSide") && report["permutationSide"] != "solved")
    return true;
  if (report.contains("freeSide") &&
      report["freeSide"].get<std::string>().find('/') != std::string::npos)
    return true;
  return false;
}

} // namespace wordsys::experiment
