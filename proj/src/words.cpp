#include "wordsys/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace wordsys::words
{

Word Word::canonicalize(std::span<Factor const> raw)
{
  // Stack reduction reaches the fixpoint in one pass: a merge that cancels
  // exposes the previous factor to the next incoming one.
  Word w;
  for (auto const &f : raw) {
    if (f.var.index == 0)
      throw Error(ErrorKind::Precondition, "variable indices start at 1");
    if (f.exponent == 0)
      continue;
    if (!w._factors.empty() && w._factors.back().var == f.var) {
      w._factors.back().exponent += f.exponent;
      if (w._factors.back().exponent == 0)
        w._factors.pop_back();
    } else {
      w._factors.push_back(f);
    }
  }
  return w;
}

unsigned Word::xArity() const noexcept
{
  unsigned res = 0;
  for (auto const &f : _factors) {
    if (f.var.kind == VarKind::X)
      res = std::max(res, f.var.index);
  }
  return res;
}

unsigned Word::yArity() const noexcept
{
  unsigned res = 0;
  for (auto const &f : _factors) {
    if (f.var.kind == VarKind::Y)
      res = std::max(res, f.var.index);
  }
  return res;
}

std::uint64_t length(Word const &w)
{
  std::uint64_t res = 0;
  for (auto const &f : w.factors())
    res += static_cast<std::uint64_t>(f.exponent < 0 ? -f.exponent : f.exponent);
  return res;
}

bool isTrivial(Word const &w)
{
  auto fs = w.factors();
  return fs.size() == 1 && fs[0].var == Y(1) && fs[0].exponent == 1;
}

Word concat(Word const &a, Word const &b)
{
  std::vector<Factor> raw(a.factors().begin(), a.factors().end());
  raw.insert(raw.end(), b.factors().begin(), b.factors().end());
  return Word::canonicalize(raw);
}

namespace
{

template<typename T>
T parseNumber(std::string_view text, std::string_view token)
{
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "bad number in factor '" + std::string(token) + "'");
  return value;
}

} // namespace

Word parseWord(std::string_view text)
{
  std::vector<Factor> raw;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    pos = end + 1;
    if (token.empty())
      throw Error(ErrorKind::Parse, "factors must be separated by single spaces");

    VarKind kind;
    if (token[0] == 'x')
      kind = VarKind::X;
    else if (token[0] == 'y')
      kind = VarKind::Y;
    else
      throw Error(ErrorKind::Parse, "unknown variable in factor '" + std::string(token) + "'");

    std::string_view rest = token.substr(1);
    std::size_t caret = rest.find('^');
    auto index = parseNumber<unsigned>(rest.substr(0, caret), token);
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos)
      exponent = parseNumber<std::int64_t>(rest.substr(caret + 1), token);
    if (index == 0)
      throw Error(ErrorKind::Parse, "variable indices start at 1");
    raw.push_back({{kind, index}, exponent});
  }
  return Word::canonicalize(raw);
}

std::string toString(Word const &w)
{
  std::ostringstream os;
  bool first = true;
  for (auto const &f : w.factors()) {
    if (!first)
      os << ' ';
    first = false;
    os << (f.var.kind == VarKind::X ? 'x' : 'y') << f.var.index;
    if (f.exponent != 1)
      os << '^' << f.exponent;
  }
  return os.str();
}

namespace
{

perm::Point applyFactor(Factor const &f, perm::Point m, bool invert,
                        SlotAction const &xs, SlotAction const &ys)
{
  SlotAction const &slot = f.var.kind == VarKind::X ? xs : ys;
  bool slotInverse = (f.exponent < 0) != invert;
  std::int64_t reps = f.exponent < 0 ? -f.exponent : f.exponent;
  for (std::int64_t r = 0; r < reps; ++r)
    m = slot(f.var.index, m, slotInverse);
  return m;
}

} // namespace

perm::Point evaluateAt(Word const &w, perm::Point m,
                       SlotAction const &xs, SlotAction const &ys)
{
  auto fs = w.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it)
    m = applyFactor(*it, m, false, xs, ys);
  return m;
}

perm::Point evaluateInverseAt(Word const &w, perm::Point m,
                              SlotAction const &xs, SlotAction const &ys)
{
  for (auto const &f : w.factors())
    m = applyFactor(f, m, true, xs, ys);
  return m;
}

Word WordSeq::at(std::size_t n) const
{
  Word w = _gen(n);
  if (w.xArity() > _varBudget || w.yArity() > _varBudget)
    throw Error(ErrorKind::Precondition,
                "w_" + std::to_string(n) + " = " + toString(w) +
                " exceeds the variable budget " + std::to_string(_varBudget));
  return w;
}

WordSeq nuWords(Nu nu)
{
  return WordSeq(
    [nu = std::move(nu)](std::size_t n) {
      std::uint64_t t = nu(n);
      if (t == 0)
        return Word::canonicalize({{Y(1), 1}});
      return Word::canonicalize({{X(1), 1}, {Y(1), static_cast<std::int64_t>(t)}});
    },
    1);
}

} // namespace wordsys::words
