#include "wordsys/solver.hpp"

#include "wordsys/error.hpp"

namespace wordsys::solver
{

namespace
{

std::vector<FinSupportPerm> params(perm::DSeq const &d, words::Word const &w,
                                   std::size_t n)
{
  std::vector<FinSupportPerm> xs;
  xs.reserve(w.xArity());
  for (unsigned i = 1; i <= w.xArity(); ++i)
    xs.push_back(d.at(n + i));
  return xs;
}

std::vector<FinSupportPerm> unknowns(ApproxTable const &t, words::Word const &w,
                                     std::size_t n)
{
  std::vector<FinSupportPerm> ys;
  ys.reserve(w.yArity());
  for (unsigned i = 1; i <= w.yArity(); ++i)
    ys.push_back(t.row(n + i));
  return ys;
}

} // namespace

ApproxTable approx(perm::DSeq const &d, words::WordSeq const &w, std::size_t k)
{
  ApproxTable t;
  t.k = k;
  t.rows.resize(k + 1);
  for (std::size_t n = k + 1; n-- > 0;) {
    words::Word wn = w.at(n);
    auto xs = params(d, wn, n);
    auto ys = unknowns(t, wn, n);
    t.rows[n] = words::evaluate<FinSupportPerm>(wn, xs, ys, words::PermOps{});
  }
  return t;
}

std::vector<FinSupportPerm> unitFactors(perm::DSeq const &d, words::WordSeq const &w,
                                        ApproxTable const &t, std::size_t s)
{
  words::Word ws = w.at(s);
  auto xs = params(d, ws, s);
  auto ys = unknowns(t, ws, s);

  std::vector<FinSupportPerm> units;
  for (auto const &f : ws.factors()) {
    auto const &slot = f.var.kind == words::VarKind::X ? xs[f.var.index - 1]
                                                       : ys[f.var.index - 1];
    FinSupportPerm u = f.exponent < 0 ? perm::inverse(slot) : slot;
    for (std::int64_t r = 0; r < (f.exponent < 0 ? -f.exponent : f.exponent); ++r)
      units.push_back(u);
  }
  return units;
}

std::vector<FinSupportPerm> prefixProducts(perm::DSeq const &d, words::WordSeq const &w,
                                           ApproxTable const &t, std::size_t s)
{
  auto units = unitFactors(d, w, t, s);
  std::vector<FinSupportPerm> v{FinSupportPerm{}};
  for (auto const &u : units)
    v.push_back(perm::compose(v.back(), u));
  return v;
}

std::size_t guardedRange(scale::ObeysWitness const &wit, scale::Scale const &s,
                         std::size_t row)
{
  std::size_t top = s.at(wit.i1 - 1);
  if (row >= s.at(wit.i0))
    return top;
  return std::min(top, s.at(wit.i0 + wit.t(row)));
}

LimitAutomorphism::LimitAutomorphism(perm::DSeq d, words::WordSeq w, scale::Scale s,
                                     std::size_t searchBound)
: _d(std::move(d)),
  _w(std::move(w)),
  _s(std::move(s)),
  _searchBound(searchBound),
  _memo(std::make_unique<Memo>())
{}

scale::ObeysWitness LimitAutomorphism::witness(std::size_t n, Point m) const
{
  {
    std::lock_guard lock(_memo->mu);
    auto it = _memo->witnesses.find({n, m});
    if (it != _memo->witnesses.end())
      return it->second;
  }

  auto wit = scale::findWitness(_w, _s, n, static_cast<std::size_t>(m), _searchBound);
  if (!wit)
    throw Error(ErrorKind::WitnessNotFound,
                "WitnessNotFound(" + std::to_string(n) + ", " + std::to_string(m) +
                ") within search bound " + std::to_string(_searchBound));

  std::lock_guard lock(_memo->mu);
  return _memo->witnesses.emplace(std::pair{n, m}, std::move(*wit)).first->second;
}

std::shared_ptr<ApproxTable const> LimitAutomorphism::table(std::size_t k) const
{
  {
    std::lock_guard lock(_memo->mu);
    auto it = _memo->tables.find(k);
    if (it != _memo->tables.end())
      return it->second;
  }

  auto t = std::make_shared<ApproxTable const>(approx(_d, _w, k));

  std::lock_guard lock(_memo->mu);
  return _memo->tables.emplace(k, std::move(t)).first->second;
}

Point LimitAutomorphism::apply(std::size_t n, Point m) const
{
  {
    std::lock_guard lock(_memo->mu);
    auto it = _memo->fwd.find({n, m});
    if (it != _memo->fwd.end())
      return it->second;
  }

  Point image = table(stabilizationBound(witness(n, m), _s))->row(n)(m);

  std::lock_guard lock(_memo->mu);
  return _memo->fwd.emplace(std::pair{n, m}, image).first->second;
}

Point LimitAutomorphism::inverseApply(std::size_t n, Point m) const
{
  {
    std::lock_guard lock(_memo->mu);
    auto it = _memo->inv.find({n, m});
    if (it != _memo->inv.end())
      return it->second;
  }

  Point pre = table(stabilizationBound(witness(n, m), _s))->row(n).preimage(m);

  std::lock_guard lock(_memo->mu);
  return _memo->inv.emplace(std::pair{n, m}, pre).first->second;
}

void LimitAutomorphism::overrideCachedImage(std::size_t n, Point m, Point image)
{
  std::lock_guard lock(_memo->mu);
  _memo->fwd[{n, m}] = image;
}

SolutionReport verifySolution(LimitAutomorphism const &L, std::size_t nWindow,
                              std::size_t mWindow)
{
  SolutionReport report;
  for (std::size_t n = 0; n < nWindow; ++n) {
    words::Word wn = L.words().at(n);
    words::SlotAction xs = [&](unsigned i, Point p, bool inv) {
      auto dn = L.d().at(n + i);
      return inv ? dn.preimage(p) : dn(p);
    };
    words::SlotAction ys = [&](unsigned i, Point p, bool inv) {
      return inv ? L.inverseApply(n + i, p) : L.apply(n + i, p);
    };
    for (Point m = 0; m < mWindow; ++m) {
      Point lhs = L.apply(n, m);
      Point rhs = words::evaluateAt(wn, m, xs, ys);
      ++report.cellsChecked;
      if (lhs != rhs)
        report.discrepancies.push_back({n, m, lhs, rhs});
    }
  }
  return report;
}

bool verifyStabilization(perm::DSeq const &d, words::WordSeq const &w,
                         scale::Scale const &s, std::size_t n, Point m,
                         std::size_t delta, std::size_t searchBound)
{
  auto wit = scale::findWitness(w, s, n, static_cast<std::size_t>(m), searchBound);
  if (!wit)
    throw Error(ErrorKind::WitnessNotFound,
                "WitnessNotFound(" + std::to_string(n) + ", " + std::to_string(m) + ")");

  std::size_t kStar = stabilizationBound(*wit, s);
  auto ref = approx(d, w, kStar).row(n);
  for (std::size_t k = kStar + 1; k <= kStar + delta; ++k) {
    auto b = approx(d, w, k).row(n);
    if (b(m) != ref(m) || b.preimage(m) != ref.preimage(m))
      return false;
  }
  return true;
}

bool closureCheck(LimitAutomorphism const &L, perm::Structure const &S,
                  std::size_t window)
{
  for (std::size_t n = 0; n < window; ++n) {
    if (!S.checkWindow([&](Point p) { return L.apply(n, p); }, window))
      return false;
  }
  return true;
}

} // namespace wordsys::solver
