#ifndef WORDSYS_SOLVER_HPP
#define WORDSYS_SOLVER_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "wordsys/perm.hpp"
#include "wordsys/scale.hpp"
#include "wordsys/words.hpp"

namespace wordsys::solver
{

using perm::FinSupportPerm;
using perm::Point;

/// The k-th approximate solution: b_n = e for n > k and
/// b_n = w_n(d_{n+1}, ..., d_{n+l1}; b_{n+1}, ..., b_{n+l2}) for n <= k.
struct ApproxTable
{
  std::size_t k = 0;
  std::vector<FinSupportPerm> rows;  // rows[n] = b_n for n <= k

  FinSupportPerm row(std::size_t n) const
  { return n < rows.size() ? rows[n] : FinSupportPerm{}; }
};

ApproxTable approx(perm::DSeq const &d, words::WordSeq const &w, std::size_t k);

/// w_s expanded into single-letter factors u_1 ... u_L (each a d, a b from
/// the table, or an inverse of one), evaluated against table t.
std::vector<FinSupportPerm> unitFactors(perm::DSeq const &d, words::WordSeq const &w,
                                        ApproxTable const &t, std::size_t s);

/// v_r = u_1 ... u_r for r = 0 .. L.
std::vector<FinSupportPerm> prefixProducts(perm::DSeq const &d, words::WordSeq const &w,
                                           ApproxTable const &t, std::size_t s);

/// k(*) = j_{i1+1}: approximants with k >= k(*) agree at the witnessed point.
inline std::size_t stabilizationBound(scale::ObeysWitness const &wit,
                                      scale::Scale const &s)
{ return s.at(wit.i1 + 1); }

/// Range of points on which row s is claimed stable for k >= k(*):
/// m < j_{i1-1} for s >= j_i0, and additionally m < j_{i0 + t(s)} below j_i0.
/// Requires nStar <= s.
std::size_t guardedRange(scale::ObeysWitness const &wit, scale::Scale const &s,
                         std::size_t row);

/// The limit solution b*_n, evaluated one point at a time.
///
/// apply(n, m) finds an obeys witness for (n, m), then reads b^k_n(m) at
/// k = k(*). A missing witness raises Error(WitnessNotFound). Witnesses,
/// tables and point values are memoized behind a mutex; concurrent callers
/// may race to fill an entry but always store the same value.
class LimitAutomorphism
{
public:
  LimitAutomorphism(perm::DSeq d, words::WordSeq w, scale::Scale s,
                    std::size_t searchBound);

  Point apply(std::size_t n, Point m) const;
  Point inverseApply(std::size_t n, Point m) const;

  scale::ObeysWitness witness(std::size_t n, Point m) const;

  perm::DSeq const &d() const noexcept { return _d; }
  words::WordSeq const &words() const noexcept { return _w; }
  scale::Scale const &scale() const noexcept { return _s; }
  std::size_t searchBound() const noexcept { return _searchBound; }

  /// Test hook: overwrites a memoized forward value.
  void overrideCachedImage(std::size_t n, Point m, Point image);

private:
  std::shared_ptr<ApproxTable const> table(std::size_t k) const;

  perm::DSeq _d;
  words::WordSeq _w;
  scale::Scale _s;
  std::size_t _searchBound;

  struct Memo
  {
    std::mutex mu;
    std::map<std::pair<std::size_t, Point>, scale::ObeysWitness> witnesses;
    std::map<std::size_t, std::shared_ptr<ApproxTable const>> tables;
    std::map<std::pair<std::size_t, Point>, Point> fwd;
    std::map<std::pair<std::size_t, Point>, Point> inv;
  };
  std::unique_ptr<Memo> _memo;
};

inline Point limitApply(LimitAutomorphism const &L, std::size_t n, Point m)
{ return L.apply(n, m); }

inline Point limitInverseApply(LimitAutomorphism const &L, std::size_t n, Point m)
{ return L.inverseApply(n, m); }

struct Discrepancy
{
  std::size_t n;
  Point m;
  Point lhs;  // b*_n(m)
  Point rhs;  // w_n(d..., b*...)(m)

  bool operator==(Discrepancy const &) const = default;
};

struct SolutionReport
{
  std::size_t cellsChecked = 0;
  std::vector<Discrepancy> discrepancies;

  bool ok() const noexcept { return discrepancies.empty(); }
};

/// Checks b*_n(m) == w_n(d_{n+1}, ...; b*_{n+1}, ...)(m) for n < nWindow,
/// m < mWindow, evaluating the right side pointwise.
SolutionReport verifySolution(LimitAutomorphism const &L, std::size_t nWindow,
                              std::size_t mWindow);

/// True iff b^k_n(m) and (b^k_n)^-1(m) are constant for k in
/// [k(*), k(*) + delta]. Throws Error(WitnessNotFound) without a witness.
bool verifyStabilization(perm::DSeq const &d, words::WordSeq const &w,
                         scale::Scale const &s, std::size_t n, Point m,
                         std::size_t delta, std::size_t searchBound);

/// The structure test holds for every b*_n, n < window, on points < window.
bool closureCheck(LimitAutomorphism const &L, perm::Structure const &S,
                  std::size_t window);

} // namespace wordsys::solver

#endif // WORDSYS_SOLVER_HPP
