#ifndef WORDSYS_SCALE_HPP
#define WORDSYS_SCALE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wordsys/perm.hpp"
#include "wordsys/words.hpp"

namespace wordsys::scale
{

/// The strictly increasing sequence j_0 = 0 < j_1 < ... calibrated to a
/// d-sequence, with gaps larger than a variable budget B.
///
/// A scale built from a d-sequence extends itself on demand; a scale built
/// from explicit values is a fixed prefix. Copies share the memo, which is
/// guarded by a mutex, so concurrent readers see the same values a fresh
/// recomputation would produce.
class Scale
{
public:
  Scale(perm::DSeq d, unsigned varBudget);

  /// Throws Error(Precondition) unless the values strictly increase.
  static Scale fromValues(std::vector<std::size_t> values, unsigned varBudget);

  /// j_n. Throws Error(Precondition) past the end of a fixed prefix.
  std::size_t at(std::size_t n) const;

  std::size_t operator[](std::size_t n) const
  { return at(n); }

  std::vector<std::size_t> prefix(std::size_t count) const;

  /// Entries computed so far.
  std::vector<std::size_t> materialized() const;

  unsigned varBudget() const noexcept
  { return _varBudget; }

  bool extensible() const noexcept;

  /// Least n with j_n >= value.
  std::size_t firstIndexAtLeast(std::size_t value) const;

private:
  struct State
  {
    std::mutex mu;
    std::vector<std::size_t> j;
    std::optional<perm::DSeq> d;
  };

  Scale(std::shared_ptr<State> state, unsigned varBudget)
  : _state(std::move(state)), _varBudget(varBudget)
  {}

  std::shared_ptr<State> _state;
  unsigned _varBudget;
};

/// Least j > j.back() such that, with n = j.size() - 1:
///   every d_l (l <= n) maps [0, j_n) into [0, j) in both directions,
///   every m < j_n has K(m) <= j, and
///   j - j_n > B.
std::size_t nextScaleEntry(perm::DSeq const &d, std::span<std::size_t const> j,
                           unsigned varBudget);

Scale buildScale(perm::DSeq const &d, unsigned varBudget, std::size_t count);

/// Clause-by-clause recheck of j_0 .. j_upTo, including minimality of each
/// entry. Returns a description of the first violation.
std::optional<std::string> firstScaleViolation(perm::DSeq const &d, Scale const &s,
                                               std::size_t upTo);

inline bool verifyScale(perm::DSeq const &d, Scale const &s, std::size_t upTo)
{ return !firstScaleViolation(d, s, upTo); }

/// Evidence that a word sequence obeys a scale at (nStar, mStar):
/// mStar < i0, nStar < i1, i0 < i1, every w_t with j_i0 <= t <= j_i1 is
/// trivial, and sum_{i = nStar .. j_i0} length(w_i) < i1 - i0.
struct ObeysWitness
{
  std::size_t nStar = 0;
  std::size_t mStar = 0;
  std::size_t i0 = 0;
  std::size_t i1 = 0;
  /// t(n) = sum_{i = nStar .. n-1} length(w_i) for n in [nStar, j_i0],
  /// stored at offset n - nStar. Empty when nStar > j_i0.
  std::vector<std::uint64_t> cumLengths;

  std::uint64_t t(std::size_t n) const
  { return cumLengths.at(n - nStar); }

  bool operator==(ObeysWitness const &) const = default;
};

/// Lexicographically least (i0, i1) with i0 < i1 < searchBound.
std::optional<ObeysWitness> findWitness(words::WordSeq const &w, Scale const &s,
                                        std::size_t nStar, std::size_t mStar,
                                        std::size_t searchBound);

/// The order, triviality and sum clauses for the given indices.
bool witnessClausesHold(words::WordSeq const &w, Scale const &s, std::size_t nStar,
                        std::size_t mStar, std::size_t i0, std::size_t i1);

/// Rechecks every clause of a witness, including its cumulative lengths.
bool checkWitness(words::WordSeq const &w, Scale const &s, ObeysWitness const &wit);

/// Witnesses for every nStar, mStar < upTo (nStar-major). Throws
/// NotObeyingError at the first pair without one.
std::vector<ObeysWitness> obeysCertificate(words::WordSeq const &w, Scale const &s,
                                           std::size_t upTo, std::size_t searchBound);

} // namespace wordsys::scale

#endif // WORDSYS_SCALE_HPP
