#include <doctest.h>

#include <thread>

#include "support/generators.hpp"
#include "wordsys/error.hpp"
#include "wordsys/experiment.hpp"
#include "wordsys/solver.hpp"

using namespace wordsys;
using namespace wordsys::solver;
using perm::DSeq;
using words::Nu;
using words::nuWords;

namespace
{

FinSupportPerm t(perm::Point a)
{ return FinSupportPerm::transposition(a, a + 1); }

} // namespace

TEST_CASE("approx by downward recursion")
{
  auto d = DSeq::transpositions();
  auto zeros = approx(d, nuWords(Nu{}), 6);
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(zeros.row(n).isIdentity());

  auto a = approx(d, nuWords(Nu({1})), 3);
  CHECK(a.k == 3);
  CHECK(a.row(0) == t(2));
  CHECK(a.row(1).isIdentity());
  CHECK(a.row(3).isIdentity());

  auto b = approx(d, nuWords(Nu({2, 1})), 5);
  CHECK(b.row(1) == t(4));
  CHECK(b.row(0) == t(2));
}

TEST_CASE("unit factors multiply out to the row")
{
  auto d = DSeq::transpositions();
  auto w = nuWords(Nu({2, 1, 3}));
  auto tab = approx(d, w, 6);
  for (std::size_t s = 0; s < 6; ++s) {
    auto v = prefixProducts(d, w, tab, s);
    REQUIRE(v.size() == words::length(w.at(s)) + 1);
    CHECK(v.front().isIdentity());
    CHECK(v.back() == tab.row(s));
    CHECK(unitFactors(d, w, tab, s).size() == words::length(w.at(s)));
  }
}

TEST_CASE("stabilizationBound")
{
  scale::Scale const s(DSeq::transpositions(), 1);
  scale::ObeysWitness wit;
  wit.i1 = 4;
  CHECK(stabilizationBound(wit, s) == 10);
  wit.i1 = 1;
  CHECK(stabilizationBound(wit, s) == 4);
}

TEST_CASE("limit values")
{
  auto d = DSeq::transpositions();
  LimitAutomorphism L(d, nuWords(Nu({1})), scale::Scale(d, 1), 256);
  CHECK(limitApply(L, 0, 2) == 3);
  CHECK(limitApply(L, 1, 2) == 2);
  for (std::size_t n = 0; n < 4; ++n) {
    for (perm::Point m = 0; m < 16; ++m) {
      CHECK(limitInverseApply(L, n, limitApply(L, n, m)) == m);
      CHECK(limitApply(L, n, limitInverseApply(L, n, m)) == m);
    }
  }
}

TEST_CASE("a missing witness is reported")
{
  auto d = DSeq::transpositions();
  LimitAutomorphism L(d, nuWords(Nu({1}, Nu::Tail::Cycle)), scale::Scale(d, 1), 64);
  CHECK_THROWS_AS(L.apply(0, 0), Error);
  try {
    L.witness(0, 0);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::WitnessNotFound);
  }
}

TEST_CASE("verifySolution")
{
  auto d = DSeq::transpositions();
  LimitAutomorphism L(d, nuWords(Nu({1})), scale::Scale(d, 1), 256);
  auto rep = verifySolution(L, 4, 16);
  CHECK(rep.ok());
  CHECK(rep.cellsChecked == 64);
  CHECK(verifySolution(L, 0, 0).cellsChecked == 0);
  CHECK(verifySolution(L, 0, 0).ok());

  L.overrideCachedImage(0, 2, 7);
  auto bad = verifySolution(L, 4, 16);
  CHECK(!bad.ok());
  REQUIRE(!bad.discrepancies.empty());
  CHECK(bad.discrepancies.front().n == 0);
  CHECK(bad.discrepancies.front().m == 2);
}

TEST_CASE("verifyStabilization")
{
  auto d = DSeq::transpositions();
  scale::Scale s(d, 1);
  auto w = nuWords(Nu({2, 1, 0, 3}));
  CHECK(verifyStabilization(d, w, s, 0, 3, 8, 256));
  CHECK(verifyStabilization(d, w, s, 1, 5, 0, 256));
  CHECK_THROWS_AS(verifyStabilization(d, nuWords(Nu({1}, Nu::Tail::Cycle)), s, 0, 0, 2, 64),
                  Error);
}

TEST_CASE("closureCheck")
{
  auto d = DSeq::transpositions();
  LimitAutomorphism L(d, nuWords(Nu({3, 1, 2})), scale::Scale(d, 1), 256);
  CHECK(closureCheck(L, perm::matchingStructure(), 16));
  CHECK(closureCheck(L, perm::trivialStructure(), 16));
  CHECK(closureCheck(L, perm::matchingStructure(), 0));

  // d_n = (2n+1 2n+2) breaks the matching, and so does b*_0 = d_1.
  DSeq shifted([](std::size_t n) { return FinSupportPerm::transposition(2 * n + 1, 2 * n + 2); },
               [](perm::Point m) -> std::size_t { return m / 2 + 1; });
  LimitAutomorphism bad(shifted, nuWords(Nu({1})), scale::Scale(shifted, 1), 256);
  CHECK(!closureCheck(bad, perm::matchingStructure(), 16));
}

TEST_CASE("limit agrees with approximants past the stabilization bound")
{
  gen::Rng rng(29);
  auto d = DSeq::transpositions();
  for (int iter = 0; iter < 10; ++iter) {
    scale::Scale s(d, 1);
    auto nu = experiment::randomObeyingNu(rng(), s);
    auto w = nuWords(nu);
    LimitAutomorphism L(d, w, s, 1024);
    for (std::size_t n = 0; n < 3; ++n) {
      for (perm::Point m = 0; m < 10; ++m) {
        auto kStar = stabilizationBound(L.witness(n, m), s);
        for (std::size_t k = kStar; k <= kStar + 3; ++k)
          CHECK(approx(d, w, k).row(n)(m) == L.apply(n, m));
      }
    }
  }
}

TEST_CASE("limit values only depend on nu below the stabilization bound")
{
  gen::Rng rng(31);
  auto d = DSeq::transpositions();
  for (int iter = 0; iter < 10; ++iter) {
    scale::Scale s(d, 1);
    auto nu = experiment::randomObeyingNu(rng(), s);
    LimitAutomorphism L(d, nuWords(nu), s, 1024);
    for (std::size_t n = 0; n < 3; ++n) {
      for (perm::Point m = 0; m < 8; ++m) {
        auto kStar = stabilizationBound(L.witness(n, m), s);
        // Making later words non-trivial cannot create an earlier witness.
        auto prefix = nu.prefix();
        prefix.resize(std::max(prefix.size(), kStar + 6), 0);
        for (std::size_t i = kStar; i < prefix.size(); ++i)
          prefix[i] = 1 + gen::below(rng, 3);
        LimitAutomorphism M(d, nuWords(Nu(prefix)), s, 1024);
        CHECK(M.apply(n, m) == L.apply(n, m));
      }
    }
  }
}

TEST_CASE("rows in the trivial stretch fix small points")
{
  auto d = DSeq::transpositions();
  scale::Scale s(d, 1);
  auto w = nuWords(experiment::randomObeyingNu(5, s));
  for (std::size_t n = 0; n < 3; ++n) {
    auto wit = *scale::findWitness(w, s, n, n, 1024);
    auto kStar = stabilizationBound(wit, s);
    auto tab = approx(d, w, kStar + 2);
    for (std::size_t row = s.at(wit.i0); row <= s.at(wit.i1); ++row) {
      CHECK(guardedRange(wit, s, row) == s.at(wit.i1 - 1));
      for (perm::Point m = 0; m < s.at(wit.i1 - 1); ++m)
        CHECK(tab.row(row)(m) == m);
    }
  }
}

TEST_CASE("concurrent queries agree with a sequential run")
{
  auto d = DSeq::transpositions();
  scale::Scale s(d, 1);
  auto nu = experiment::randomObeyingNu(9, s);
  LimitAutomorphism shared(d, nuWords(nu), scale::Scale(d, 1), 1024);
  LimitAutomorphism fresh(d, nuWords(nu), scale::Scale(d, 1), 1024);

  std::vector<std::vector<perm::Point>> results(4);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t n = 0; n < 4; ++n) {
        for (perm::Point m = 0; m < 16; ++m)
          results[t].push_back(shared.apply(n, (m + 5 * t) % 16));
      }
    });
  }
  for (auto &w : workers)
    w.join();

  for (std::size_t t = 0; t < 4; ++t) {
    std::size_t i = 0;
    for (std::size_t n = 0; n < 4; ++n) {
      for (perm::Point m = 0; m < 16; ++m)
        CHECK(results[t][i++] == fresh.apply(n, (m + 5 * t) % 16));
    }
  }
}
