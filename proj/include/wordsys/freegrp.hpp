#ifndef WORDSYS_FREEGRP_HPP
#define WORDSYS_FREEGRP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wordsys/scale.hpp"

namespace wordsys::freegrp
{

/// Basis elements are z1, z2, ...
using Gen = std::uint32_t;

struct Syllable
{
  Gen gen;
  std::int64_t exp;

  auto operator<=>(Syllable const &) const = default;
};

/// A freely reduced word in the basis: adjacent syllables have distinct
/// generators and no exponent is zero.
class FreeElem
{
public:
  FreeElem() = default;

  static FreeElem reduce(std::span<Syllable const> raw);
  static FreeElem reduce(std::initializer_list<Syllable> raw)
  { return reduce(std::span<Syllable const>(raw.begin(), raw.size())); }

  static FreeElem generator(Gen g, std::int64_t exp = 1)
  { return reduce({{g, exp}}); }

  std::span<Syllable const> syllables() const noexcept
  { return _syl; }

  bool isIdentity() const noexcept
  { return _syl.empty(); }

  /// Number of letters (sum of absolute exponents).
  std::uint64_t length() const noexcept;

  auto operator<=>(FreeElem const &) const = default;

private:
  std::vector<Syllable> _syl;
};

FreeElem multiply(FreeElem const &a, FreeElem const &b);
FreeElem invert(FreeElem const &a);
FreeElem power(FreeElem const &a, std::uint64_t t);

inline FreeElem operator*(FreeElem const &a, FreeElem const &b)
{ return multiply(a, b); }

/// "z1 z2^-3"; the identity prints as "e". Parsing accepts "e" or "".
std::string toString(FreeElem const &g);
FreeElem parseFreeElem(std::string_view text);

struct CyclicDecomposition
{
  FreeElem conjugator;
  FreeElem core;
};

/// g = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicDecomposition cyclicReduce(FreeElem const &g);

/// The unique r with r^t == g, if any. t == 0 only has the identity as a
/// power, so it returns a root exactly when g is the identity.
std::optional<FreeElem> hasRoot(FreeElem const &g, std::uint64_t t);

/// Least t > 1 such that g has no t-th root. Throws Error(IdentityInput)
/// for the identity.
std::uint64_t noRootExponent(FreeElem const &g);

/// A set of basis indices, finite or cofinite.
class SubBasis
{
public:
  static SubBasis finite(std::set<Gen> indices);
  static SubBasis cofinite(std::set<Gen> excluded);
  /// {1, ..., n}
  static SubBasis firstN(Gen n);

  bool contains(Gen g) const
  { return _cofinite != (_indices.count(g) > 0); }

  bool isFinite() const noexcept
  { return !_cofinite; }

  /// The listed indices: members if finite, exclusions if cofinite.
  std::set<Gen> const &indices() const noexcept
  { return _indices; }

private:
  SubBasis(std::set<Gen> indices, bool cofinite)
  : _indices(std::move(indices)), _cofinite(cofinite)
  {}

  std::set<Gen> _indices;
  bool _cofinite;
};

/// The retraction onto <Z>: generators outside Z go to the identity.
FreeElem project(FreeElem const &g, SubBasis const &Z);

/// The n-th reduced word over a finite Z, ordered by length and then
/// lexicographically with letters z_a < z_a^-1 < z_b < ... for a < b.
/// enumerateH(Z, 0) is the identity.
FreeElem enumerateH(SubBasis const &Z, std::uint64_t n);

/// params(n) is the parameter consumed by equation n, so with
/// w_n = x1 y1^t the equation reads b_n = params(n) * b_{n+1}^t.
using ParamSeq = std::function<FreeElem(std::size_t)>;

/// params(n) = z_{n+1}.
ParamSeq generatorParams();

struct Alive
{
  FreeElem residual;  // the forced value of b_position

  bool operator==(Alive const &) const = default;
};

struct NoRoot
{
  std::uint64_t t;  // the exponent whose root did not exist

  bool operator==(NoRoot const &) const = default;
};

/// The forward-determined chain b_0 = a, b_1, ... for a given nu. Once
/// dead, a chain absorbs further steps unchanged.
struct ChainState
{
  std::size_t position = 0;  // alive: index of the residual; dead: the failed equation
  std::variant<Alive, NoRoot> status;

  static ChainState start(FreeElem a)
  { return {0, Alive{std::move(a)}}; }

  bool alive() const noexcept
  { return std::holds_alternative<Alive>(status); }

  bool operator==(ChainState const &) const = default;
};

/// One equation: nuN == 0 copies b_{n+1} = b_n; nuN == t >= 1 needs
/// b_{n+1}^t = dNext^-1 b_n. Throws Error(BadDSeq) if dNext is the identity.
ChainState chainStep(ChainState const &st, FreeElem const &dNext, std::uint64_t nuN);

ChainState chainRun(FreeElem const &a, ParamSeq const &params,
                    std::span<std::uint64_t const> nu);

struct ObeysSegment
{
  std::size_t nStar, mStar, i0, i1;

  bool operator==(ObeysSegment const &) const = default;
};

struct BlockSegment
{
  std::size_t target;
  std::vector<std::uint64_t> appended;  // empty if the chain was already dead

  bool operator==(BlockSegment const &) const = default;
};

using Segment = std::variant<ObeysSegment, BlockSegment>;

struct NuPrefix
{
  std::vector<std::uint64_t> entries;
  std::vector<Segment> log;

  bool operator==(NuPrefix const &) const = default;
};

/// Extends the prefix so that the chain from a dies: by one entry
/// noRootExponent(params(L)^-1 r) when that quotient is non-trivial, and
/// otherwise by a 0 followed by noRootExponent(params(L+1)^-1 r). Leaves the
/// prefix unchanged if the chain is already dead. Throws Error(BadDSeq) if
/// params(L+1) == params(L) is needed and fails. The log is not touched.
NuPrefix block(FreeElem const &a, NuPrefix prefix, ParamSeq const &params);

/// Appends zeros so that [j_i0, j_i1] is a zero stretch witnessing
/// (nStar, mStar) in every extension of `entries`, with i0 >= minI0 and
/// j_i0 >= entries.size(). Returns the indices used.
ObeysSegment appendObeysStretch(std::vector<std::uint64_t> &entries, scale::Scale const &s,
                                std::size_t nStar, std::size_t mStar, std::size_t minI0);

using Enumeration = std::function<FreeElem(std::size_t)>;

/// For r < count: an obeys segment for (r, r) followed by a blocking
/// extension for enumeration(r).
///
/// The obeys segment reuses a zero stretch already fixed in the prefix when
/// one witnesses (r, r); otherwise it appends one sized so that i0 >= count,
/// which keeps it valid for every later round.
NuPrefix diagonalize(ParamSeq const &params, scale::Scale const &s,
                     Enumeration const &enumeration, std::size_t count);

struct TargetVerdict
{
  std::size_t target;
  FreeElem element;
  ChainState state;
};

struct BlockingReport
{
  std::vector<TargetVerdict> targets;
  std::optional<std::size_t> firstSurviving;
  std::vector<std::size_t> badSegments;  // log indices failing the recheck

  bool ok() const noexcept
  { return !firstSurviving && badSegments.empty(); }
};

/// Re-runs every chain from scratch and rechecks every obeys segment both
/// clause by clause and via findWitness on the zero-tailed prefix.
BlockingReport verifyBlocking(NuPrefix const &nu, ParamSeq const &params,
                              scale::Scale const &s, Enumeration const &enumeration,
                              std::size_t count);

} // namespace wordsys::freegrp

#endif // WORDSYS_FREEGRP_HPP
