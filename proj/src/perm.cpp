#include "wordsys/perm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "wordsys/error.hpp"

namespace wordsys::perm
{

namespace
{

Point lookup(std::vector<FinSupportPerm::Move> const &table, Point m)
{
  auto it = std::lower_bound(table.begin(), table.end(), m,
                             [](auto const &mv, Point p) { return mv.first < p; });
  return (it != table.end() && it->first == m) ? it->second : m;
}

} // namespace

FinSupportPerm::FinSupportPerm(std::vector<Move> sortedFwd)
: _fwd(std::move(sortedFwd))
{
  _inv.reserve(_fwd.size());
  for (auto const &[p, q] : _fwd)
    _inv.emplace_back(q, p);
  std::sort(_inv.begin(), _inv.end());
}

FinSupportPerm FinSupportPerm::fromMoves(std::vector<Move> moves)
{
  std::erase_if(moves, [](Move const &mv) { return mv.first == mv.second; });
  std::sort(moves.begin(), moves.end());

  for (std::size_t i = 1; i < moves.size(); ++i) {
    if (moves[i].first == moves[i - 1].first)
      throw Error(ErrorKind::Precondition,
                  "point " + std::to_string(moves[i].first) + " listed twice");
  }

  std::vector<Point> keys, values;
  keys.reserve(moves.size());
  values.reserve(moves.size());
  for (auto const &[p, q] : moves) {
    keys.push_back(p);
    values.push_back(q);
  }
  std::sort(values.begin(), values.end());
  if (keys != values)
    throw Error(ErrorKind::Precondition,
                "moves do not form a bijection of their support");

  return FinSupportPerm(std::move(moves));
}

FinSupportPerm FinSupportPerm::cycle(std::initializer_list<Point> points)
{ return cycle(std::span<Point const>(points.begin(), points.size())); }

FinSupportPerm FinSupportPerm::cycle(std::span<Point const> points)
{
  std::vector<Move> moves;
  if (points.size() >= 2) {
    for (std::size_t i = 0; i < points.size(); ++i)
      moves.emplace_back(points[i], points[(i + 1) % points.size()]);
  }
  return fromMoves(std::move(moves));
}

Point FinSupportPerm::operator()(Point m) const
{ return lookup(_fwd, m); }

Point FinSupportPerm::preimage(Point m) const
{ return lookup(_inv, m); }

std::vector<Point> FinSupportPerm::support() const
{
  std::vector<Point> res;
  res.reserve(_fwd.size());
  for (auto const &mv : _fwd)
    res.push_back(mv.first);
  return res;
}

std::string toCycleString(FinSupportPerm const &f)
{
  if (f.isIdentity())
    return "()";

  std::ostringstream os;
  std::set<Point> seen;
  for (auto const &[start, image] : f.moves()) {
    if (seen.count(start))
      continue;
    os << '(' << start;
    seen.insert(start);
    for (Point p = image; p != start; p = f(p)) {
      os << ' ' << p;
      seen.insert(p);
    }
    os << ')';
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, FinSupportPerm const &f)
{ return os << toCycleString(f); }

FinSupportPerm compose(FinSupportPerm const &f, FinSupportPerm const &g)
{
  std::vector<Point> pts;
  pts.reserve(f.supportSize() + g.supportSize());
  for (auto const &mv : f.moves())
    pts.push_back(mv.first);
  for (auto const &mv : g.moves())
    pts.push_back(mv.first);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<FinSupportPerm::Move> moves;
  for (Point p : pts) {
    Point q = f(g(p));
    if (q != p)
      moves.emplace_back(p, q);
  }
  return FinSupportPerm::fromMoves(std::move(moves));
}

FinSupportPerm inverse(FinSupportPerm const &f)
{
  std::vector<FinSupportPerm::Move> moves;
  moves.reserve(f.supportSize());
  for (auto const &[p, q] : f.moves())
    moves.emplace_back(q, p);
  return FinSupportPerm::fromMoves(std::move(moves));
}

FinSupportPerm power(FinSupportPerm const &f, std::int64_t exponent)
{
  FinSupportPerm base = exponent < 0 ? inverse(f) : f;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  FinSupportPerm res;
  while (e) {
    if (e & 1)
      res = compose(res, base);
    base = compose(base, base);
    e >>= 1;
  }
  return res;
}

double Dyadic::toDouble() const
{ return exponent ? std::ldexp(1.0, -static_cast<int>(*exponent)) : 0.0; }

std::strong_ordering Dyadic::operator<=>(Dyadic const &other) const
{
  if (isZero() || other.isZero())
    return other.isZero() <=> isZero();
  // A larger exponent is a smaller value.
  return *other.exponent <=> *exponent;
}

std::ostream &operator<<(std::ostream &os, Dyadic const &d)
{
  if (d.isZero())
    return os << "0";
  return os << "2^-" << *d.exponent;
}

std::optional<Point> firstDisagreement(FinSupportPerm const &f,
                                       FinSupportPerm const &g)
{
  // Disagreements can only occur on the union of the supports.
  std::optional<Point> best;
  auto consider = [&](Point p) {
    if (best && *best <= p)
      return;
    if (f(p) != g(p) || f.preimage(p) != g.preimage(p))
      best = p;
  };
  for (auto const &mv : f.moves())
    consider(mv.first);
  for (auto const &mv : g.moves())
    consider(mv.first);
  return best;
}

Dyadic metric(FinSupportPerm const &f, FinSupportPerm const &g)
{
  auto n = firstDisagreement(f, g);
  return n ? Dyadic::pow2neg(*n) : Dyadic::zero();
}

DSeq::DSeq(Generator gen, MoverBound bound, std::optional<std::size_t> length,
           DSeqSource source)
: _gen(std::move(gen)),
  _bound(std::move(bound)),
  _length(length),
  _source(std::move(source))
{}

DSeq DSeq::transpositions()
{
  return DSeq(
    [](std::size_t n) {
      return FinSupportPerm::transposition(2 * n, 2 * n + 1);
    },
    [](Point m) { return static_cast<std::size_t>(m / 2 + 1); },
    std::nullopt,
    source::Transpositions{});
}

namespace
{

// K(m) read off a finite prefix: one past the last index that moves m.
std::map<Point, std::size_t> prefixBounds(std::vector<FinSupportPerm> const &perms)
{
  std::map<Point, std::size_t> bounds;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (auto const &mv : perms[k].moves())
      bounds[mv.first] = k + 1;
  }
  return bounds;
}

} // namespace

DSeq DSeq::fromExplicit(std::vector<FinSupportPerm> perms,
                        std::vector<std::pair<Point, std::size_t>> declaredBounds)
{
  for (std::size_t n = 0; n < perms.size(); ++n) {
    if (perms[n].isIdentity())
      throw Error(ErrorKind::NotNull,
                  "d_" + std::to_string(n) + " is the identity");
  }

  auto bounds = prefixBounds(perms);
  for (auto const &[m, declared] : declaredBounds) {
    for (std::size_t k = declared; k < perms.size(); ++k) {
      if (perms[k](m) != m)
        throw Error(ErrorKind::NoBound,
                    "declared bound K(" + std::to_string(m) + ") = " +
                    std::to_string(declared) + " but d_" + std::to_string(k) +
                    " moves it");
    }
    bounds[m] = declared;
  }

  std::size_t len = perms.size();
  source::Explicit src{perms, std::move(declaredBounds)};
  return DSeq(
    [perms = std::move(perms)](std::size_t n) { return perms[n]; },
    [bounds = std::move(bounds)](Point m) -> std::size_t {
      auto it = bounds.find(m);
      return it == bounds.end() ? 0 : it->second;
    },
    len,
    std::move(src));
}

FinSupportPerm DSeq::at(std::size_t n) const
{
  if (_length && n >= *_length)
    throw Error(ErrorKind::BadDSeq,
                "d-sequence index " + std::to_string(n) +
                " is past the end of a prefix of length " +
                std::to_string(*_length));
  FinSupportPerm f = _gen(n);
  if (f.isIdentity())
    throw Error(ErrorKind::NotNull, "d_" + std::to_string(n) + " is the identity");
  return f;
}

DSeq cauchyToNull(std::span<FinSupportPerm const> c)
{
  std::vector<FinSupportPerm> d;
  for (std::size_t n = 0; 2 * n + 1 < c.size(); ++n) {
    if (c[2 * n] == c[2 * n + 1])
      throw Error(ErrorKind::NotNull,
                  "c_" + std::to_string(2 * n) + " == c_" +
                  std::to_string(2 * n + 1) + ", so d_" + std::to_string(n) +
                  " is the identity");
    d.push_back(compose(inverse(c[2 * n]), c[2 * n + 1]));
  }

  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (c[a] == c[b])
        throw Error(ErrorKind::BadDSeq,
                    "c_" + std::to_string(a) + " == c_" + std::to_string(b));
    }
  }

  auto bounds = prefixBounds(d);
  std::size_t len = d.size();
  return DSeq(
    [d = std::move(d)](std::size_t n) { return d[n]; },
    [bounds = std::move(bounds)](Point m) -> std::size_t {
      auto it = bounds.find(m);
      return it == bounds.end() ? 0 : it->second;
    },
    len,
    source::Cauchy{std::vector<FinSupportPerm>(c.begin(), c.end())});
}

bool checkNull(DSeq const &d, std::size_t window)
{
  std::size_t kEnd = d.length() ? std::min(window, *d.length()) : window;
  for (Point m = 0; m < window; ++m) {
    for (std::size_t k = d.moverBound(m); k < kEnd; ++k) {
      if (d.at(k)(m) != m)
        return false;
    }
  }
  return true;
}

Structure trivialStructure()
{
  return {"trivial",
          [](FinSupportPerm const &) { return true; },
          [](PointMap const &, std::size_t) { return true; }};
}

Structure matchingStructure()
{
  // f preserves the matching iff partners go to partners: f(p ^ 1) == f(p) ^ 1.
  // A moved point whose partner is fixed fails this on its own, so checking
  // the support is enough.
  return {"matching",
          [](FinSupportPerm const &f) {
            for (auto const &[p, q] : f.moves()) {
              if (f(p ^ 1) != (q ^ 1))
                return false;
            }
            return true;
          },
          [](PointMap const &f, std::size_t window) {
            for (Point p = 0; p + 1 < window; p += 2) {
              if (f(p + 1) != (f(p) ^ 1))
                return false;
            }
            return true;
          }};
}

} // namespace wordsys::perm
