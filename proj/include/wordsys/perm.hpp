#ifndef WORDSYS_PERM_HPP
#define WORDSYS_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wordsys::perm
{

using Point = std::uint64_t;

/// A bijection of the naturals that moves finitely many points.
///
/// Only moved points are stored, so two permutations are equal iff their
/// move tables are equal. Both directions are kept sorted, which makes
/// apply and inverse apply logarithmic in the support size.
class FinSupportPerm
{
public:
  using Move = std::pair<Point, Point>;

  FinSupportPerm() = default;

  /// Builds from (point, image) pairs in any order. Pairs with point ==
  /// image are dropped. Throws Error(Precondition) unless the pairs form
  /// a bijection of their key set.
  static FinSupportPerm fromMoves(std::vector<Move> moves);

  /// The cycle a0 -> a1 -> ... -> a0.
  static FinSupportPerm cycle(std::initializer_list<Point> points);
  static FinSupportPerm cycle(std::span<Point const> points);

  static FinSupportPerm transposition(Point a, Point b)
  { return cycle({a, b}); }

  Point operator()(Point m) const;
  Point preimage(Point m) const;

  bool isIdentity() const noexcept
  { return _fwd.empty(); }

  std::span<Move const> moves() const noexcept
  { return _fwd; }

  std::size_t supportSize() const noexcept
  { return _fwd.size(); }

  std::vector<Point> support() const;

  /// Largest moved point; 0 for the identity.
  Point maxMoved() const noexcept
  { return _fwd.empty() ? 0 : _fwd.back().first; }

  bool operator==(FinSupportPerm const &other) const
  { return _fwd == other._fwd; }

private:
  explicit FinSupportPerm(std::vector<Move> sortedFwd);

  std::vector<Move> _fwd;  // (point, image) sorted by point
  std::vector<Move> _inv;  // (image, point) sorted by image
};

std::ostream &operator<<(std::ostream &os, FinSupportPerm const &f);

/// Cycle notation, e.g. "(0 1 2)(4 5)"; "()" for the identity.
std::string toCycleString(FinSupportPerm const &f);

/// result(m) = f(g(m)).
FinSupportPerm compose(FinSupportPerm const &f, FinSupportPerm const &g);
FinSupportPerm inverse(FinSupportPerm const &f);
FinSupportPerm power(FinSupportPerm const &f, std::int64_t exponent);

inline Point apply(FinSupportPerm const &f, Point m)
{ return f(m); }

inline Point inverseApply(FinSupportPerm const &f, Point m)
{ return f.preimage(m); }

/// A value of the form 2^-exponent, or exactly zero.
struct Dyadic
{
  std::optional<std::uint64_t> exponent;

  static Dyadic zero() { return {}; }
  static Dyadic pow2neg(std::uint64_t e) { return {e}; }

  bool isZero() const noexcept { return !exponent.has_value(); }
  double toDouble() const;

  std::strong_ordering operator<=>(Dyadic const &other) const;
  bool operator==(Dyadic const &other) const = default;
};

std::ostream &operator<<(std::ostream &os, Dyadic const &d);

/// 2^-n for the least n with f(n) != g(n) or f^-1(n) != g^-1(n); zero if
/// f == g.
Dyadic metric(FinSupportPerm const &f, FinSupportPerm const &g);

/// Least point on which f and g (or their inverses) disagree.
std::optional<Point> firstDisagreement(FinSupportPerm const &f,
                                       FinSupportPerm const &g);

/// Which built-in family a DSeq came from; used for serialization.
namespace source
{
struct Transpositions {};
struct Explicit
{
  std::vector<FinSupportPerm> perms;
  std::vector<std::pair<Point, std::size_t>> declaredBounds;
};
struct Cauchy
{
  std::vector<FinSupportPerm> c;
};
struct Custom {};
} // namespace source

using DSeqSource = std::variant<source::Transpositions,
                                source::Explicit,
                                source::Cauchy,
                                source::Custom>;

/// A null sequence d_0, d_1, ... of non-identity permutations together with
/// a mover bound K: d_k(m) == m for every k >= K(m).
///
/// Sequences may be infinite (generator-backed) or a finite prefix; reading
/// past the end of a prefix throws Error(BadDSeq).
class DSeq
{
public:
  using Generator = std::function<FinSupportPerm(std::size_t)>;
  using MoverBound = std::function<std::size_t(Point)>;

  /// Unvalidated construction from functions. The built-in factories below
  /// validate what they can; this one trusts the caller.
  DSeq(Generator gen, MoverBound bound,
       std::optional<std::size_t> length = std::nullopt,
       DSeqSource source = source::Custom{});

  /// d_n = (2n 2n+1), K(m) = floor(m/2) + 1.
  static DSeq transpositions();

  /// A finite prefix with optional declared bounds. Undeclared bounds are
  /// read off the prefix. Throws NotNull for an identity entry and NoBound
  /// when a declared bound is contradicted by the prefix.
  static DSeq fromExplicit(std::vector<FinSupportPerm> perms,
                           std::vector<std::pair<Point, std::size_t>> declaredBounds = {});

  /// Throws BadDSeq if n is past the end of a finite prefix and NotNull if
  /// the generator produces the identity.
  FinSupportPerm at(std::size_t n) const;

  std::size_t moverBound(Point m) const
  { return _bound(m); }

  std::optional<std::size_t> length() const noexcept
  { return _length; }

  DSeqSource const &source() const noexcept
  { return _source; }

private:
  Generator _gen;
  MoverBound _bound;
  std::optional<std::size_t> _length;
  DSeqSource _source;
};

/// d_n = c_{2n}^-1 c_{2n+1} for every complete pair in c.
///
/// Throws NotNull if some c_{2n} == c_{2n+1} and BadDSeq if the c's are
/// otherwise not pairwise distinct.
DSeq cauchyToNull(std::span<FinSupportPerm const> c);

/// Confirms the mover bound on a finite window: for every m < window and
/// every k in [K(m), window) covered by the sequence, d_k(m) == m.
bool checkNull(DSeq const &d, std::size_t window);

using PointMap = std::function<Point(Point)>;

/// A countable structure on the naturals, given by its automorphism test.
struct Structure
{
  std::string name;
  std::function<bool(FinSupportPerm const &)> check;
  /// Windowed test for maps known only pointwise (e.g. limits).
  std::function<bool(PointMap const &, std::size_t window)> checkWindow;
};

/// All permutations are automorphisms (the full symmetric group).
Structure trivialStructure();

/// The perfect matching {2n, 2n+1}.
Structure matchingStructure();

inline bool isAutomorphism(Structure const &s, FinSupportPerm const &f)
{ return s.check(f); }

} // namespace wordsys::perm

#endif // WORDSYS_PERM_HPP
