#ifndef WORDSYS_WORDS_HPP
#define WORDSYS_WORDS_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordsys/error.hpp"
#include "wordsys/perm.hpp"

namespace wordsys::words
{

/// Parameters are X(i), unknowns are Y(i); indices start at 1.
enum class VarKind : std::uint8_t { X, Y };

struct Var
{
  VarKind kind;
  unsigned index;

  auto operator<=>(Var const &) const = default;
};

inline Var X(unsigned i) { return {VarKind::X, i}; }
inline Var Y(unsigned i) { return {VarKind::Y, i}; }

struct Factor
{
  Var var;
  std::int64_t exponent;

  bool operator==(Factor const &) const = default;
};

/// A group word in canonical form: no zero exponents and no two adjacent
/// factors on the same variable.
class Word
{
public:
  Word() = default;

  /// Merges adjacent equal variables and drops zero exponents until nothing
  /// changes. Throws Error(Precondition) for a variable index of 0.
  static Word canonicalize(std::span<Factor const> raw);
  static Word canonicalize(std::initializer_list<Factor> raw)
  { return canonicalize(std::span<Factor const>(raw.begin(), raw.size())); }

  std::span<Factor const> factors() const noexcept
  { return _factors; }

  bool empty() const noexcept
  { return _factors.empty(); }

  /// Largest X index used (0 if none).
  unsigned xArity() const noexcept;
  /// Largest Y index used (0 if none).
  unsigned yArity() const noexcept;

  bool operator==(Word const &) const = default;

private:
  std::vector<Factor> _factors;
};

/// Sum of absolute exponents.
std::uint64_t length(Word const &w);

/// True iff w is the single factor y1.
bool isTrivial(Word const &w);

Word concat(Word const &a, Word const &b);

/// Text form: space-separated factors ("x"|"y") index ["^" integer],
/// e.g. "x1 y1^3". The empty word is the empty string.
Word parseWord(std::string_view text);
std::string toString(Word const &w);

template<typename Ops, typename G>
concept GroupOps = requires(Ops const &ops, G const &a, G const &b) {
  { ops.identity() } -> std::convertible_to<G>;
  { ops.multiply(a, b) } -> std::convertible_to<G>;
  { ops.inverse(a) } -> std::convertible_to<G>;
};

/// Substitutes xs[i-1] for X(i) and ys[i-1] for Y(i) and multiplies out in
/// order. Throws Error(Arity) when a needed slot is missing.
template<typename G, typename Ops>
  requires GroupOps<Ops, G>
G evaluate(Word const &w, std::span<G const> xs, std::span<G const> ys,
           Ops const &ops)
{
  if (w.xArity() > xs.size() || w.yArity() > ys.size())
    throw Error(ErrorKind::Arity,
                "word " + toString(w) + " needs " + std::to_string(w.xArity()) +
                " parameters and " + std::to_string(w.yArity()) + " unknowns");

  G res = ops.identity();
  for (auto const &f : w.factors()) {
    G const &slot = f.var.kind == VarKind::X ? xs[f.var.index - 1]
                                             : ys[f.var.index - 1];
    G base = f.exponent < 0 ? ops.inverse(slot) : slot;
    std::int64_t reps = f.exponent < 0 ? -f.exponent : f.exponent;
    for (std::int64_t r = 0; r < reps; ++r)
      res = ops.multiply(res, base);
  }
  return res;
}

/// Group structure of Sym(N) restricted to finite support; multiply is
/// composition (right factor acts first).
struct PermOps
{
  perm::FinSupportPerm identity() const { return {}; }
  perm::FinSupportPerm multiply(perm::FinSupportPerm const &a,
                                perm::FinSupportPerm const &b) const
  { return perm::compose(a, b); }
  perm::FinSupportPerm inverse(perm::FinSupportPerm const &a) const
  { return perm::inverse(a); }
};

/// Pointwise access to a slot: image (or preimage, when inverse is set) of
/// point m under the permutation bound to variable `index`.
using SlotAction = std::function<perm::Point(unsigned index, perm::Point m, bool inverse)>;

/// w(m) for permutation-valued slots known only pointwise.
perm::Point evaluateAt(Word const &w, perm::Point m,
                       SlotAction const &xs, SlotAction const &ys);

/// w^-1(m), same conventions.
perm::Point evaluateInverseAt(Word const &w, perm::Point m,
                              SlotAction const &xs, SlotAction const &ys);

/// A sequence of naturals: an explicit prefix followed by zeros, or by the
/// prefix repeated forever.
class Nu
{
public:
  enum class Tail { Zero, Cycle };

  Nu() = default;
  explicit Nu(std::vector<std::uint64_t> prefix, Tail tail = Tail::Zero)
  : _prefix(std::move(prefix)), _tail(tail)
  {}

  std::uint64_t operator()(std::size_t n) const
  {
    if (n < _prefix.size())
      return _prefix[n];
    if (_tail == Tail::Cycle && !_prefix.empty())
      return _prefix[n % _prefix.size()];
    return 0;
  }

  std::vector<std::uint64_t> const &prefix() const noexcept { return _prefix; }
  Tail tail() const noexcept { return _tail; }

private:
  std::vector<std::uint64_t> _prefix;
  Tail _tail = Tail::Zero;
};

/// An infinite sequence of words with a common bound on variable indices.
class WordSeq
{
public:
  using Generator = std::function<Word(std::size_t)>;

  WordSeq(Generator gen, unsigned varBudget)
  : _gen(std::move(gen)), _varBudget(varBudget)
  {}

  /// Throws Error(Precondition) if gen(n) exceeds the variable budget.
  Word at(std::size_t n) const;

  unsigned varBudget() const noexcept
  { return _varBudget; }

private:
  Generator _gen;
  unsigned _varBudget;
};

/// gen(n) = y1 when nu(n) == 0 and x1 y1^nu(n) otherwise; budget 1.
WordSeq nuWords(Nu nu);

} // namespace wordsys::words

#endif // WORDSYS_WORDS_HPP
