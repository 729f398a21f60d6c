// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "support/generators.hpp"
#include "wordsys/experiment.hpp"
#include "wordsys/freegrp.hpp"
#include "wordsys/solver.hpp"

using namespace wordsys;
using perm::FinSupportPerm;
using perm::Point;

namespace
{

struct Outcome
{
  bool pass;
  std::string detail;
};

struct Instance
{
  words::Nu nu;
  words::WordSeq w;
  scale::Scale s;
};

perm::DSeq const d = perm::DSeq::transpositions();

// Criterion 3-5 corpus: 50 seeded random obeying nu over the transpositions.
std::vector<Instance> const &corpus()
{
  static std::vector<Instance> instances = [] {
    std::vector<Instance> out;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      scale::Scale s(d, 1);
      auto nu = experiment::randomObeyingNu(seed, s, 4, 3);
      out.push_back({nu, words::nuWords(nu), s});
    }
    return out;
  }();
  return instances;
}

Outcome metricSuite()
{
  gen::Rng rng(1001);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    auto f = gen::perm(rng, 8, 16);
    auto g = gen::perm(rng, 8, 16);
    auto h = gen::perm(rng, 8, 16);
    auto fg = perm::metric(f, g);
    bool ok = perm::metric(f, f).isZero() && fg.isZero() == (f == g) &&
              fg == perm::metric(g, f) &&
              perm::metric(f, h) <= std::max(fg, perm::metric(g, h));
    failures += !ok;
  }
  return {failures == 0, std::to_string(failures) + " failures on 1000 pairs"};
}

Outcome scaleGolden()
{
  auto s = scale::buildScale(d, 1, 10);
  std::vector<std::size_t> golden{0, 2, 4, 6, 8, 10, 12, 14, 16, 18};
  auto violation = scale::firstScaleViolation(d, s, 9);
  bool ok = s.prefix(10) == golden && !violation;
  return {ok, violation ? *violation : std::string("j = <0,2,...,18>, minimal")};
}

Outcome solverOracle()
{
  std::size_t mismatches = 0;
  std::size_t compared = 0;
  for (auto const &inst : corpus()) {
    solver::LimitAutomorphism L(d, inst.w, inst.s, 1024);
    std::map<std::size_t, solver::ApproxTable> tables;
    auto table = [&](std::size_t k) -> solver::ApproxTable const & {
      auto it = tables.find(k);
      if (it == tables.end())
        it = tables.emplace(k, solver::approx(d, inst.w, k)).first;
      return it->second;
    };
    for (std::size_t n = 0; n < 4; ++n) {
      for (Point m = 0; m < 16; ++m) {
        auto kStar = solver::stabilizationBound(L.witness(n, m), inst.s);
        Point limit = solver::limitApply(L, n, m);
        for (std::size_t k = kStar; k <= kStar + 8; ++k) {
          ++compared;
          mismatches += table(k).row(n)(m) != limit;
        }
      }
    }
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " mismatches in " + std::to_string(compared) + " cells"};
}

Outcome equationCheck()
{
  std::size_t discrepancies = 0;
  std::size_t closureFailures = 0;
  for (auto const &inst : corpus()) {
    solver::LimitAutomorphism L(d, inst.w, inst.s, 1024);
    discrepancies += solver::verifySolution(L, 4, 16).discrepancies.size();
    closureFailures += !solver::closureCheck(L, perm::matchingStructure(), 16);
  }
  return {discrepancies == 0 && closureFailures == 0,
          std::to_string(discrepancies) + " discrepancies, " + std::to_string(closureFailures) +
            " closure failures over 50 instances"};
}

Outcome trivialStretchRows()
{
  std::size_t violations = 0;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    auto const &inst = corpus()[i];
    for (std::size_t n = 0; n < 4; ++n) {
      auto wit = scale::findWitness(inst.w, inst.s, n, n, 1024);
      if (!wit) {
        ++violations;
        continue;
      }
      auto kStar = solver::stabilizationBound(*wit, inst.s);
      Point range = inst.s.at(wit->i1 - 1);
      for (std::size_t k = kStar; k <= kStar + 4; ++k) {
        auto tab = solver::approx(d, inst.w, k);
        for (std::size_t row = inst.s.at(wit->i0); row <= inst.s.at(wit->i1); ++row) {
          for (Point m = 0; m < range; ++m) {
            ++checked;
            violations += tab.row(row)(m) != m;
          }
        }
      }
    }
  }
  return {violations == 0,
          std::to_string(violations) + " violations in " + std::to_string(checked) + " points"};
}

Outcome rootOracle()
{
  using freegrp::FreeElem;
  std::vector<FreeElem> all;
  for (std::size_t len = 0; len <= 6; ++len) {
    auto layer = gen::allReduced(3, len);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  // r^t = g forces length(r) <= length(g), so roots of words up to length 6
  // are among these.
  std::map<std::pair<FreeElem, std::uint64_t>, FreeElem> powers;
  for (auto const &r : all) {
    for (std::uint64_t t = 2; t <= 4; ++t)
      powers.emplace(std::pair{freegrp::power(r, t), t}, r);
  }
  std::size_t disagreements = 0;
  for (auto const &g : all) {
    for (std::uint64_t t = 2; t <= 4; ++t) {
      auto it = powers.find({g, t});
      auto root = freegrp::hasRoot(g, t);
      bool agree = it == powers.end() ? !root : (root && *root == it->second);
      disagreements += !agree;
    }
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements on " +
                                std::to_string(all.size()) + " words x 3 exponents"};
}

Outcome projectionLaws()
{
  gen::Rng rng(1007);
  auto Z = freegrp::SubBasis::firstN(4);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    auto g = gen::freeElem(rng, 7, 12);
    auto h = gen::freeElem(rng, 7, 12);
    auto pg = freegrp::project(g, Z);
    failures += freegrp::project(pg, Z) != pg;
    failures += freegrp::project(g * h, Z) != pg * freegrp::project(h, Z);
  }
  for (std::size_t n = 0; n < 200; ++n) {
    auto x = freegrp::enumerateH(Z, n);
    failures += freegrp::project(x, Z) != x;
  }
  return {failures == 0, std::to_string(failures) + " failures"};
}

Outcome diagonalization()
{
  auto params = freegrp::generatorParams();
  scale::Scale s(d, 1);
  auto Z = freegrp::SubBasis::firstN(4);
  freegrp::Enumeration en = [Z](std::size_t r) { return freegrp::enumerateH(Z, r); };
  auto p = freegrp::diagonalize(params, s, en, 20);

  std::size_t dead = 0;
  for (std::size_t r = 0; r < 20; ++r)
    dead += !freegrp::chainRun(en(r), params, p.entries).alive();

  // Recheck each obeys segment in the zero-tailed word sequence.
  auto w = words::nuWords(words::Nu(p.entries));
  std::size_t segments = 0;
  std::size_t badSegments = 0;
  for (auto const &seg : p.log) {
    if (auto const *o = std::get_if<freegrp::ObeysSegment>(&seg)) {
      ++segments;
      badSegments += !scale::witnessClausesHold(w, s, o->nStar, o->mStar, o->i0, o->i1);
      badSegments += !scale::findWitness(w, s, o->nStar, o->mStar, o->i1 + 1);
    }
  }
  auto rep = freegrp::verifyBlocking(p, params, s, en, 20);
  bool ok = dead == 20 && segments == 20 && badSegments == 0 && rep.ok();
  return {ok, std::to_string(dead) + "/20 dead, " + std::to_string(badSegments) +
                " bad of " + std::to_string(segments) + " obeys segments, prefix length " +
                std::to_string(p.entries.size())};
}

Outcome contrast()
{
  experiment::ExperimentConfig cfg;
  cfg.seed = 20;
  auto a = experiment::runContrast(cfg).dump(2);
  auto b = experiment::runContrast(cfg).dump(2);
  auto r = io::Json::parse(a);
  bool ok = a == b && r["permutationSide"] == "solved" && r["freeSide"] == "blocked(20)";
  return {ok, r["permutationSide"].get<std::string>() + ", " +
                r["freeSide"].get<std::string>() + (a == b ? ", identical bytes" : ", bytes differ")};
}

} // namespace

int main()
{
  std::vector<std::pair<char const *, std::function<Outcome()>>> criteria{
    {"metric axioms", metricSuite},
    {"scale golden values", scaleGolden},
    {"limit equals approximants", solverOracle},
    {"equation and closure check", equationCheck},
    {"trivial-stretch rows fix small points", trivialStretchRows},
    {"root oracle", rootOracle},
    {"projection laws", projectionLaws},
    {"diagonalization blocks all targets", diagonalization},
    {"contrast report", contrast},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (std::exception const &e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, out.detail.c_str(), secs);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
