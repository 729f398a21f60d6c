#include "wordsys/freegrp.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "wordsys/error.hpp"
#include "wordsys/words.hpp"

namespace wordsys::freegrp
{

FreeElem FreeElem::reduce(std::span<Syllable const> raw)
{
  FreeElem g;
  for (auto const &s : raw) {
    if (s.gen == 0)
      throw Error(ErrorKind::Precondition, "generator indices start at 1");
    if (s.exp == 0)
      continue;
    if (!g._syl.empty() && g._syl.back().gen == s.gen) {
      g._syl.back().exp += s.exp;
      if (g._syl.back().exp == 0)
        g._syl.pop_back();
    } else {
      g._syl.push_back(s);
    }
  }
  return g;
}

std::uint64_t FreeElem::length() const noexcept
{
  std::uint64_t res = 0;
  for (auto const &s : _syl)
    res += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return res;
}

FreeElem multiply(FreeElem const &a, FreeElem const &b)
{
  std::vector<Syllable> raw(a.syllables().begin(), a.syllables().end());
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return FreeElem::reduce(raw);
}

FreeElem invert(FreeElem const &a)
{
  std::vector<Syllable> raw;
  auto syl = a.syllables();
  raw.reserve(syl.size());
  for (auto it = syl.rbegin(); it != syl.rend(); ++it)
    raw.push_back({it->gen, -it->exp});
  return FreeElem::reduce(raw);
}

FreeElem power(FreeElem const &a, std::uint64_t t)
{
  FreeElem res;
  for (std::uint64_t i = 0; i < t; ++i)
    res = multiply(res, a);
  return res;
}

std::string toString(FreeElem const &g)
{
  if (g.isIdentity())
    return "e";
  std::ostringstream os;
  bool first = true;
  for (auto const &s : g.syllables()) {
    if (!first)
      os << ' ';
    first = false;
    os << 'z' << s.gen;
    if (s.exp != 1)
      os << '^' << s.exp;
  }
  return os.str();
}

FreeElem parseFreeElem(std::string_view text)
{
  if (text.empty() || text == "e")
    return {};

  // Same grammar as group words, with a single variable letter.
  std::vector<Syllable> raw;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = std::min(text.find(' ', pos), text.size());
    std::string_view token = text.substr(pos, end - pos);
    pos = end + 1;
    if (token.size() < 2 || token[0] != 'z')
      throw Error(ErrorKind::Parse, "bad free group factor '" + std::string(token) + "'");

    std::string_view rest = token.substr(1);
    std::size_t caret = rest.find('^');
    std::string_view idx = rest.substr(0, caret);
    Gen gen{};
    auto r1 = std::from_chars(idx.data(), idx.data() + idx.size(), gen);
    if (r1.ec != std::errc() || r1.ptr != idx.data() + idx.size() || gen == 0)
      throw Error(ErrorKind::Parse, "bad generator in '" + std::string(token) + "'");

    std::int64_t exp = 1;
    if (caret != std::string_view::npos) {
      std::string_view e = rest.substr(caret + 1);
      auto r2 = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (r2.ec != std::errc() || r2.ptr != e.data() + e.size())
        throw Error(ErrorKind::Parse, "bad exponent in '" + std::string(token) + "'");
    }
    raw.push_back({gen, exp});
  }
  return FreeElem::reduce(raw);
}

CyclicDecomposition cyclicReduce(FreeElem const &g)
{
  std::vector<Syllable> syl(g.syllables().begin(), g.syllables().end());
  std::vector<Syllable> conj;
  std::size_t lo = 0;
  std::size_t hi = syl.empty() ? 0 : syl.size() - 1;

  // Peel z^a ... z^b with a, b of opposite signs off both ends.
  while (lo < hi && syl[lo].gen == syl[hi].gen &&
         (syl[lo].exp < 0) != (syl[hi].exp < 0)) {
    std::int64_t a = syl[lo].exp;
    std::int64_t b = syl[hi].exp;
    std::int64_t m = std::min(a < 0 ? -a : a, b < 0 ? -b : b);
    std::int64_t sa = a < 0 ? -m : m;
    conj.push_back({syl[lo].gen, sa});
    syl[lo].exp -= sa;
    syl[hi].exp += sa;
    if (syl[lo].exp == 0)
      ++lo;
    if (syl[hi].exp == 0)
      --hi;
  }

  CyclicDecomposition res;
  res.conjugator = FreeElem::reduce(conj);
  if (!syl.empty() && lo <= hi)
    res.core = FreeElem::reduce(std::span<Syllable const>(syl.data() + lo, hi - lo + 1));
  return res;
}

std::optional<FreeElem> hasRoot(FreeElem const &g, std::uint64_t t)
{
  if (g.isIdentity())
    return FreeElem{};
  if (t == 0)
    return std::nullopt;
  if (t == 1)
    return g;

  auto [u, core] = cyclicReduce(g);
  auto conjugate = [&u = u](FreeElem const &x) { return u * x * invert(u); };

  auto syl = core.syllables();
  if (syl.size() == 1) {
    std::int64_t e = syl[0].exp;
    if (static_cast<std::uint64_t>(e < 0 ? -e : e) % t != 0)
      return std::nullopt;
    return conjugate(FreeElem::generator(syl[0].gen, e / static_cast<std::int64_t>(t)));
  }

  // A cyclically reduced t-th power is its root's letters repeated t times.
  std::vector<Syllable> letters;
  for (auto const &s : syl) {
    Syllable unit{s.gen, s.exp < 0 ? -1 : 1};
    for (std::int64_t i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i)
      letters.push_back(unit);
  }
  if (letters.size() % t != 0)
    return std::nullopt;
  std::size_t period = letters.size() / t;
  for (std::size_t i = period; i < letters.size(); ++i) {
    if (letters[i] != letters[i - period])
      return std::nullopt;
  }
  return conjugate(FreeElem::reduce(std::span<Syllable const>(letters.data(), period)));
}

std::uint64_t noRootExponent(FreeElem const &g)
{
  if (g.isIdentity())
    throw Error(ErrorKind::IdentityInput, "the identity has roots of every order");
  // A root of order t > length(core) would need fewer than one letter.
  for (std::uint64_t t = 2;; ++t) {
    if (!hasRoot(g, t))
      return t;
  }
}

SubBasis SubBasis::finite(std::set<Gen> indices)
{
  if (indices.empty())
    throw Error(ErrorKind::Precondition, "a sub-basis must be nonempty");
  if (indices.count(0))
    throw Error(ErrorKind::Precondition, "generator indices start at 1");
  return SubBasis(std::move(indices), false);
}

SubBasis SubBasis::cofinite(std::set<Gen> excluded)
{ return SubBasis(std::move(excluded), true); }

SubBasis SubBasis::firstN(Gen n)
{
  std::set<Gen> idx;
  for (Gen g = 1; g <= n; ++g)
    idx.insert(g);
  return finite(std::move(idx));
}

FreeElem project(FreeElem const &g, SubBasis const &Z)
{
  std::vector<Syllable> kept;
  for (auto const &s : g.syllables()) {
    if (Z.contains(s.gen))
      kept.push_back(s);
  }
  return FreeElem::reduce(kept);
}

namespace
{

std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b)
{
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturatingPow(std::uint64_t base, std::uint64_t e)
{
  std::uint64_t res = 1;
  for (std::uint64_t i = 0; i < e; ++i)
    res = saturatingMul(res, base);
  return res;
}

} // namespace

FreeElem enumerateH(SubBasis const &Z, std::uint64_t n)
{
  if (!Z.isFinite())
    throw Error(ErrorKind::Precondition, "enumerateH needs a finite sub-basis");

  std::vector<Gen> gens(Z.indices().begin(), Z.indices().end());
  std::uint64_t const letters = 2 * gens.size();
  // Letter 2i is gens[i], letter 2i+1 its inverse.

  if (n == 0)
    return {};
  n -= 1;

  std::uint64_t len = 1;
  for (;; ++len) {
    std::uint64_t count = saturatingMul(letters, saturatingPow(letters - 1, len - 1));
    if (n < count)
      break;
    n -= count;
  }

  std::vector<Syllable> raw;
  std::uint64_t prev = letters;  // none
  for (std::uint64_t pos = 0; pos < len; ++pos) {
    std::uint64_t block = saturatingPow(letters - 1, len - 1 - pos);
    for (std::uint64_t l = 0; l < letters; ++l) {
      if (prev != letters && l == (prev ^ 1))
        continue;
      if (n < block) {
        raw.push_back({gens[l / 2], (l & 1) ? -1 : 1});
        prev = l;
        break;
      }
      n -= block;
    }
  }
  return FreeElem::reduce(raw);
}

ParamSeq generatorParams()
{
  return [](std::size_t n) { return FreeElem::generator(static_cast<Gen>(n + 1)); };
}

ChainState chainStep(ChainState const &st, FreeElem const &dNext, std::uint64_t nuN)
{
  if (!st.alive())
    return st;
  if (dNext.isIdentity())
    throw Error(ErrorKind::BadDSeq,
                "parameter for equation " + std::to_string(st.position) +
                " is the identity");

  auto const &b = std::get<Alive>(st.status).residual;
  if (nuN == 0)
    return {st.position + 1, Alive{b}};

  FreeElem c = invert(dNext) * b;
  if (auto r = hasRoot(c, nuN))
    return {st.position + 1, Alive{std::move(*r)}};
  return {st.position, NoRoot{nuN}};
}

ChainState chainRun(FreeElem const &a, ParamSeq const &params,
                    std::span<std::uint64_t const> nu)
{
  ChainState st = ChainState::start(a);
  for (std::size_t n = 0; n < nu.size() && st.alive(); ++n)
    st = chainStep(st, params(n), nu[n]);
  return st;
}

NuPrefix block(FreeElem const &a, NuPrefix prefix, ParamSeq const &params)
{
  ChainState st = chainRun(a, params, prefix.entries);
  if (!st.alive())
    return prefix;

  std::size_t const L = prefix.entries.size();
  auto const &r = std::get<Alive>(st.status).residual;
  FreeElem dl = params(L);
  FreeElem c = invert(dl) * r;
  if (!c.isIdentity()) {
    prefix.entries.push_back(noRootExponent(c));
    return prefix;
  }

  FreeElem dn = params(L + 1);
  if (dn == dl)
    throw Error(ErrorKind::BadDSeq,
                "parameters " + std::to_string(L) + " and " + std::to_string(L + 1) +
                " coincide");
  prefix.entries.push_back(0);
  prefix.entries.push_back(noRootExponent(invert(dn) * r));
  return prefix;
}

namespace
{

std::uint64_t wordLength(std::uint64_t nuEntry)
{ return nuEntry == 0 ? 1 : 1 + nuEntry; }

// Words for a prefix whose continuation is not yet fixed: entries past the
// end read as x1 y1, which is never trivial. A witness found here therefore
// survives every extension of the prefix.
words::WordSeq fixedPartWords(std::vector<std::uint64_t> const &entries)
{
  return words::WordSeq(
    [entries](std::size_t n) {
      std::uint64_t t = n < entries.size() ? entries[n] : 1;
      if (t == 0)
        return words::Word::canonicalize({{words::Y(1), 1}});
      return words::Word::canonicalize(
        {{words::X(1), 1}, {words::Y(1), static_cast<std::int64_t>(t)}});
    },
    1);
}

ObeysSegment obeysStep(NuPrefix &p, scale::Scale const &s, std::size_t r,
                       std::size_t count)
{
  std::size_t const L = p.entries.size();
  std::size_t bound = s.firstIndexAtLeast(L) + 1;
  if (auto wit = scale::findWitness(fixedPartWords(p.entries), s, r, r, bound))
    return {r, r, wit->i0, wit->i1};

  return appendObeysStretch(p.entries, s, r, r, count);
}

} // namespace

ObeysSegment appendObeysStretch(std::vector<std::uint64_t> &entries, scale::Scale const &s,
                                std::size_t nStar, std::size_t mStar, std::size_t minI0)
{
  std::size_t i0 = std::max({mStar + 1, s.firstIndexAtLeast(entries.size()), minI0});
  std::size_t ji0 = s.at(i0);
  entries.resize(ji0 + 1, 0);

  std::uint64_t sum = 0;
  for (std::size_t i = nStar; i <= ji0; ++i)
    sum += wordLength(entries[i]);
  std::size_t i1 = std::max<std::size_t>(i0 + sum + 1, nStar + 1);
  entries.resize(s.at(i1) + 1, 0);
  return {nStar, mStar, i0, i1};
}

NuPrefix diagonalize(ParamSeq const &params, scale::Scale const &s,
                     Enumeration const &enumeration, std::size_t count)
{
  if (s.varBudget() < 1)
    throw Error(ErrorKind::Precondition, "the nu-family needs a scale budget >= 1");

  NuPrefix p;
  for (std::size_t r = 0; r < count; ++r) {
    p.log.emplace_back(obeysStep(p, s, r, count));

    std::size_t before = p.entries.size();
    p = block(enumeration(r), std::move(p), params);
    p.log.emplace_back(BlockSegment{
      r, std::vector<std::uint64_t>(p.entries.begin() + static_cast<std::ptrdiff_t>(before),
                                    p.entries.end())});
  }
  return p;
}

BlockingReport verifyBlocking(NuPrefix const &nu, ParamSeq const &params,
                              scale::Scale const &s, Enumeration const &enumeration,
                              std::size_t count)
{
  BlockingReport report;
  for (std::size_t r = 0; r < count; ++r) {
    FreeElem a = enumeration(r);
    ChainState st = chainRun(a, params, nu.entries);
    if (st.alive() && !report.firstSurviving)
      report.firstSurviving = r;
    report.targets.push_back({r, std::move(a), std::move(st)});
  }

  auto w = words::nuWords(words::Nu(nu.entries));
  for (std::size_t i = 0; i < nu.log.size(); ++i) {
    auto const *seg = std::get_if<ObeysSegment>(&nu.log[i]);
    if (!seg)
      continue;
    bool ok = scale::witnessClausesHold(w, s, seg->nStar, seg->mStar, seg->i0, seg->i1) &&
              scale::findWitness(w, s, seg->nStar, seg->mStar, seg->i1 + 1).has_value();
    if (!ok)
      report.badSegments.push_back(i);
  }
  return report;
}

} // namespace wordsys::freegrp
