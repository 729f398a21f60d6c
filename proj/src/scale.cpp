#include "wordsys/scale.hpp"

#include <algorithm>

#include "wordsys/error.hpp"

namespace wordsys::scale
{

Scale::Scale(perm::DSeq d, unsigned varBudget)
: _state(std::make_shared<State>()), _varBudget(varBudget)
{
  _state->j.push_back(0);
  _state->d.emplace(std::move(d));
}

Scale Scale::fromValues(std::vector<std::size_t> values, unsigned varBudget)
{
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1])
      throw Error(ErrorKind::Precondition, "scale values must be strictly increasing");
  }
  auto state = std::make_shared<State>();
  state->j = std::move(values);
  return Scale(std::move(state), varBudget);
}

std::size_t Scale::at(std::size_t n) const
{
  std::lock_guard lock(_state->mu);
  auto &j = _state->j;
  while (j.size() <= n) {
    if (!_state->d)
      throw Error(ErrorKind::Precondition,
                  "scale index " + std::to_string(n) +
                  " is past the end of a fixed prefix of length " +
                  std::to_string(j.size()));
    j.push_back(nextScaleEntry(*_state->d, j, _varBudget));
  }
  return j[n];
}

std::vector<std::size_t> Scale::prefix(std::size_t count) const
{
  if (count > 0)
    at(count - 1);
  std::lock_guard lock(_state->mu);
  return {_state->j.begin(), _state->j.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<std::size_t> Scale::materialized() const
{
  std::lock_guard lock(_state->mu);
  return _state->j;
}

bool Scale::extensible() const noexcept
{ return _state->d.has_value(); }

std::size_t Scale::firstIndexAtLeast(std::size_t value) const
{
  std::size_t n = 0;
  while (at(n) < value)
    ++n;
  return n;
}

std::size_t nextScaleEntry(perm::DSeq const &d, std::span<std::size_t const> j,
                           unsigned varBudget)
{
  std::size_t const n = j.size() - 1;
  std::size_t const jn = j[n];

  // Every clause is a lower bound on j, so the least admissible j is their
  // maximum. Unmoved points m < j_n stay below j_n and constrain nothing.
  std::size_t lower = jn + varBudget + 1;
  for (std::size_t l = 0; l <= n; ++l) {
    auto dl = d.at(l);
    for (auto const &[p, q] : dl.moves()) {
      if (p < jn)
        lower = std::max<std::size_t>(lower, q + 1);
      if (q < jn)
        lower = std::max<std::size_t>(lower, p + 1);
    }
  }
  for (perm::Point m = 0; m < jn; ++m)
    lower = std::max(lower, d.moverBound(m));
  return lower;
}

Scale buildScale(perm::DSeq const &d, unsigned varBudget, std::size_t count)
{
  Scale s(d, varBudget);
  if (count > 0)
    s.at(count - 1);
  return s;
}

namespace
{

// The literal clauses, evaluated point by point.
std::optional<std::string> admissible(perm::DSeq const &d, std::size_t n,
                                      std::size_t jn, std::size_t j,
                                      unsigned varBudget)
{
  if (j <= jn)
    return "not increasing";
  if (j - jn <= varBudget)
    return "gap " + std::to_string(j - jn) + " <= budget";
  for (std::size_t l = 0; l <= n; ++l) {
    auto dl = d.at(l);
    for (perm::Point m = 0; m < jn; ++m) {
      if (dl(m) >= j || dl.preimage(m) >= j)
        return "d_" + std::to_string(l) + " sends " + std::to_string(m) + " past " +
               std::to_string(j);
    }
  }
  for (perm::Point m = 0; m < jn; ++m) {
    if (d.moverBound(m) > j)
      return "K(" + std::to_string(m) + ") > " + std::to_string(j);
  }
  return std::nullopt;
}

} // namespace

std::optional<std::string> firstScaleViolation(perm::DSeq const &d, Scale const &s,
                                               std::size_t upTo)
{
  if (s.at(0) != 0)
    return "j_0 != 0";

  for (std::size_t n = 0; n < upTo; ++n) {
    std::size_t jn = s.at(n);
    std::size_t next = s.at(n + 1);
    std::string where = "j_" + std::to_string(n + 1) + " = " + std::to_string(next);
    if (auto why = admissible(d, n, jn, next, s.varBudget()))
      return where + ": " + *why;
    for (std::size_t smaller = jn + 1; smaller < next; ++smaller) {
      if (!admissible(d, n, jn, smaller, s.varBudget()))
        return where + ": not minimal, " + std::to_string(smaller) + " is admissible";
    }
  }
  return std::nullopt;
}

namespace
{

std::vector<std::uint64_t> cumulativeLengths(words::WordSeq const &w, std::size_t from,
                                             std::size_t through)
{
  std::vector<std::uint64_t> cum;
  std::uint64_t acc = 0;
  for (std::size_t i = from; i <= through; ++i) {
    cum.push_back(acc);
    acc += words::length(w.at(i));
  }
  cum.push_back(acc);
  return cum;
}

} // namespace

std::optional<ObeysWitness> findWitness(words::WordSeq const &w, Scale const &s,
                                        std::size_t nStar, std::size_t mStar,
                                        std::size_t searchBound)
{
  if (w.varBudget() > s.varBudget())
    throw Error(ErrorKind::Precondition,
                "word budget " + std::to_string(w.varBudget()) +
                " exceeds scale budget " + std::to_string(s.varBudget()));

  // For a fixed i0 the sum clause only gets easier as i1 grows while the
  // triviality clause only gets harder, so the least candidate i1 decides.
  // The least candidate is strictly increasing in i0.
  std::uint64_t sum = 0;       // sum of length(w_i) for nStar <= i < summedTo
  std::size_t summedTo = nStar;
  for (std::size_t i0 = mStar + 1; i0 + 1 < searchBound; ++i0) {
    std::size_t ji0 = s.at(i0);
    for (; summedTo <= ji0; ++summedTo)
      sum += words::length(w.at(summedTo));

    std::uint64_t i1 = std::max<std::uint64_t>({i0 + 1, nStar + 1, i0 + sum + 1});
    if (i1 >= searchBound)
      break;

    std::size_t ji1 = s.at(i1);
    bool trivial = true;
    for (std::size_t t = ji0; t <= ji1 && trivial; ++t)
      trivial = words::isTrivial(w.at(t));
    if (!trivial)
      continue;

    ObeysWitness wit{nStar, mStar, i0, static_cast<std::size_t>(i1), {}};
    if (nStar <= ji0) {
      wit.cumLengths = cumulativeLengths(w, nStar, ji0);
      wit.cumLengths.pop_back();
    }
    return wit;
  }
  return std::nullopt;
}

bool witnessClausesHold(words::WordSeq const &w, Scale const &s, std::size_t nStar,
                        std::size_t mStar, std::size_t i0, std::size_t i1)
{
  if (!(mStar < i0 && nStar < i1 && i0 < i1))
    return false;

  std::size_t ji0 = s.at(i0);
  std::size_t ji1 = s.at(i1);
  for (std::size_t t = ji0; t <= ji1; ++t) {
    if (!words::isTrivial(w.at(t)))
      return false;
  }

  std::uint64_t sum = 0;
  for (std::size_t i = nStar; i <= ji0; ++i)
    sum += words::length(w.at(i));
  return sum < i1 - i0;
}

bool checkWitness(words::WordSeq const &w, Scale const &s, ObeysWitness const &wit)
{
  if (!witnessClausesHold(w, s, wit.nStar, wit.mStar, wit.i0, wit.i1))
    return false;

  std::size_t ji0 = s.at(wit.i0);
  if (wit.nStar > ji0)
    return wit.cumLengths.empty();
  auto cum = cumulativeLengths(w, wit.nStar, ji0);
  cum.pop_back();
  return cum == wit.cumLengths;
}

std::vector<ObeysWitness> obeysCertificate(words::WordSeq const &w, Scale const &s,
                                           std::size_t upTo, std::size_t searchBound)
{
  std::vector<ObeysWitness> res;
  res.reserve(upTo * upTo);
  for (std::size_t nStar = 0; nStar < upTo; ++nStar) {
    for (std::size_t mStar = 0; mStar < upTo; ++mStar) {
      auto wit = findWitness(w, s, nStar, mStar, searchBound);
      if (!wit)
        throw NotObeyingError(nStar, mStar);
      res.push_back(std::move(*wit));
    }
  }
  return res;
}

} // namespace wordsys::scale
