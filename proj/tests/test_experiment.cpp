#include <doctest.h>

#include "wordsys/experiment.hpp"

using namespace wordsys;
using namespace wordsys::experiment;
using io::Json;

TEST_CASE("json round trips")
{
  auto f = perm::FinSupportPerm::cycle({0, 3, 1});
  CHECK(io::permFromJson(io::toJson(f)) == f);
  CHECK(io::toJson(f).dump() == "[[0,3],[1,0],[3,1]]");
  CHECK_THROWS_AS(io::permFromJson(Json::parse("[[0,1]]")), Error);
  CHECK_THROWS_AS(io::permFromJson(Json::parse("{\"a\":1}")), Error);

  words::Nu nu({2, 0, 1}, words::Nu::Tail::Cycle);
  auto back = io::nuFromJson(io::toJson(nu));
  CHECK(back.prefix() == nu.prefix());
  CHECK(back.tail() == nu.tail());
  CHECK_THROWS_AS(io::nuFromJson(Json::parse(R"({"prefix":[1],"tail":"x"})")), Error);

  auto d = io::dseqFromJson(Json::parse(R"({"kind":"explicit","perms":[[[0,1],[1,0]]]})"));
  CHECK(d.at(0) == perm::FinSupportPerm::transposition(0, 1));
  CHECK(io::toJson(io::dseqFromJson(io::toJson(d))) == io::toJson(d));
  CHECK_THROWS_AS(io::dseqFromJson(Json::parse(R"({"kind":"nope"})")), Error);

  auto c = io::dseqFromJson(Json::parse(
    R"({"kind":"cauchy","c":[[[0,1],[1,0]],[[0,1],[1,0],[2,3],[3,2]]]})"));
  CHECK(c.at(0) == perm::FinSupportPerm::transposition(2, 3));

  auto s = io::scaleFromJson(Json::parse("[0,2,4]"), 1);
  CHECK(s.at(2) == 4);
  auto lazy = io::scaleFromJson(Json::parse(R"({"d":{"kind":"transpositions"},"budget":0})"), 1);
  CHECK(lazy.at(3) == 3);
}

TEST_CASE("nu prefix round trip")
{
  freegrp::NuPrefix p;
  p.entries = {0, 2, 0, 0};
  p.log = {freegrp::ObeysSegment{0, 0, 1, 5}, freegrp::BlockSegment{0, {2}}};
  auto j = io::toJson(p);
  CHECK(io::nuPrefixFromJson(j) == p);
  CHECK(j["log"][0]["kind"] == "obeys");
  CHECK_THROWS_AS(io::nuPrefixFromJson(Json::parse(R"({"entries":[],"log":[{"kind":"?"}]})")),
                  Error);
}

TEST_CASE("exit codes")
{
  CHECK(exitCodeFor(ErrorKind::NotObeying) == 2);
  CHECK(exitCodeFor(ErrorKind::WitnessNotFound) == 3);
  CHECK(exitCodeFor(ErrorKind::BadDSeq) == 4);
  CHECK(exitCodeFor(ErrorKind::NotNull) == 4);
  CHECK(exitCodeFor(ErrorKind::Parse) == 1);
}

TEST_CASE("runScale")
{
  ExperimentConfig cfg;
  CHECK(runScale(cfg, 4).dump() == "[0,2,4,6]");
}

TEST_CASE("runSolve")
{
  ExperimentConfig cfg;
  cfg.nuSpec = Json::parse(R"({"prefix":[1]})");
  auto r = runSolve(cfg);
  CHECK(r["equationCheck"] == "ok");
  CHECK(r["bStar"][0][0] == 0);
  CHECK(r["bStar"][0][1][2] == Json::parse("[2,3]"));
  CHECK(r["witnesses"].size() == 64);
  CHECK(!reportFailed(r));

  cfg.nuSpec = Json::parse(R"({"prefix":[1],"tail":"cycle"})");
  try {
    runSolve(cfg);
    FAIL("expected NotObeying");
  } catch (NotObeyingError const &e) {
    CHECK(e.nStar() == 0);
    CHECK(e.mStar() == 0);
  }

  cfg.nuSpec.reset();
  cfg.nWindow = cfg.mWindow = 0;
  auto empty = runSolve(cfg);
  CHECK(empty["bStar"].empty());
  CHECK(empty["equationCheck"] == "ok");
}

TEST_CASE("random obeying nu obeys on the window")
{
  scale::Scale s(perm::DSeq::transpositions(), 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto nu = randomObeyingNu(seed, s);
    auto w = words::nuWords(nu);
    CHECK(scale::obeysCertificate(w, s, 3, 512).size() == 9);
    CHECK(randomObeyingNu(seed, s).prefix() == nu.prefix());
  }
}

TEST_CASE("runDiagonalize")
{
  ExperimentConfig cfg;
  cfg.count = 10;
  auto r = runDiagonalize(cfg);
  CHECK(r["verdicts"].size() == 10);
  for (auto const &v : r["verdicts"])
    CHECK(v["chain"]["status"] == "dead");
  CHECK(r["reverify"] == "ok");

  cfg.count = 0;
  auto none = runDiagonalize(cfg);
  CHECK(none["log"].empty());
  CHECK(none["entries"].empty());
}

TEST_CASE("runVerifyBlocked detects tampering")
{
  ExperimentConfig cfg;
  cfg.count = 6;
  auto r = runDiagonalize(cfg);
  auto good = runVerifyBlocked(r, cfg);
  CHECK(good["verdict"] == "ok");

  auto tampered = r;
  for (auto &x : tampered["entries"])
    x = 0;
  auto bad = runVerifyBlocked(tampered, cfg);
  CHECK(bad["verdict"]["firstSurviving"] == 0);
  CHECK(reportFailed(bad));
}

TEST_CASE("runContrast")
{
  ExperimentConfig cfg;
  auto a = runContrast(cfg);
  CHECK(a["permutationSide"] == "solved");
  CHECK(a["freeSide"] == "blocked(20)");
  CHECK(!a.contains("closure"));
  CHECK(runContrast(cfg).dump() == a.dump());

  cfg.structure = "matching";
  CHECK(runContrast(cfg)["closure"] == "ok");

  ExperimentConfig empty;
  empty.count = 0;
  empty.nWindow = empty.mWindow = 0;
  auto e = runContrast(empty);
  CHECK(e["solve"]["bStar"].empty());
  CHECK(e["diagonalize"]["log"].empty());
  CHECK(e["freeSide"] == "blocked(0)");
}
