#include "wordsys/json_io.hpp"

#include <fstream>

#include "wordsys/error.hpp"

namespace wordsys::io
{

namespace
{

[[noreturn]] void parseFail(std::string const &what)
{ throw Error(ErrorKind::Parse, what); }

template<typename F>
auto guarded(char const *what, F &&f)
{
  try {
    return f();
  } catch (nlohmann::json::exception const &e) {
    parseFail(std::string(what) + ": " + e.what());
  }
}

} // namespace

Json readJsonFile(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    parseFail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (nlohmann::json::exception const &e) {
    parseFail(path.string() + ": " + e.what());
  }
}

void writeJsonFile(std::filesystem::path const &path, Json const &j)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::Precondition, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Json toJson(perm::FinSupportPerm const &f)
{
  Json res = Json::array();
  for (auto const &[p, q] : f.moves())
    res.push_back({p, q});
  return res;
}

perm::FinSupportPerm permFromJson(Json const &j)
{
  return guarded("permutation", [&] {
    if (!j.is_array())
      parseFail("permutation must be an array of [point, image] pairs");
    std::vector<perm::FinSupportPerm::Move> moves;
    for (auto const &pair : j) {
      if (!pair.is_array() || pair.size() != 2)
        parseFail("permutation entries must be [point, image] pairs");
      moves.emplace_back(pair[0].get<perm::Point>(), pair[1].get<perm::Point>());
    }
    return perm::FinSupportPerm::fromMoves(std::move(moves));
  });
}

perm::DSeq dseqFromJson(Json const &j)
{
  return guarded("d-sequence", [&] {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "transpositions")
      return perm::DSeq::transpositions();

    if (kind == "explicit") {
      std::vector<perm::FinSupportPerm> perms;
      for (auto const &p : j.at("perms"))
        perms.push_back(permFromJson(p));
      std::vector<std::pair<perm::Point, std::size_t>> bounds;
      if (j.contains("moverBound")) {
        for (auto const &b : j.at("moverBound"))
          bounds.emplace_back(b.at(0).get<perm::Point>(), b.at(1).get<std::size_t>());
      }
      return perm::DSeq::fromExplicit(std::move(perms), std::move(bounds));
    }

    if (kind == "cauchy") {
      std::vector<perm::FinSupportPerm> c;
      for (auto const &p : j.at("c"))
        c.push_back(permFromJson(p));
      return perm::cauchyToNull(c);
    }

    parseFail("unknown d-sequence kind '" + kind + "'");
  });
}

Json toJson(perm::DSeq const &d)
{
  return std::visit(
    [](auto const &src) -> Json {
      using T = std::decay_t<decltype(src)>;
      if constexpr (std::is_same_v<T, perm::source::Transpositions>) {
        return {{"kind", "transpositions"}};
      } else if constexpr (std::is_same_v<T, perm::source::Explicit>) {
        Json perms = Json::array();
        for (auto const &p : src.perms)
          perms.push_back(toJson(p));
        Json bounds = Json::array();
        for (auto const &[m, k] : src.declaredBounds)
          bounds.push_back({m, k});
        return {{"kind", "explicit"}, {"perms", perms}, {"moverBound", bounds}};
      } else if constexpr (std::is_same_v<T, perm::source::Cauchy>) {
        Json c = Json::array();
        for (auto const &p : src.c)
          c.push_back(toJson(p));
        return {{"kind", "cauchy"}, {"c", c}};
      } else {
        throw Error(ErrorKind::Precondition, "custom d-sequences have no file form");
      }
    },
    d.source());
}

words::Nu nuFromJson(Json const &j)
{
  return guarded("nu", [&] {
    auto prefix = j.at("prefix").get<std::vector<std::uint64_t>>();
    std::string tail = j.value("tail", std::string("zero"));
    if (tail == "zero")
      return words::Nu(std::move(prefix), words::Nu::Tail::Zero);
    if (tail == "cycle")
      return words::Nu(std::move(prefix), words::Nu::Tail::Cycle);
    parseFail("unknown nu tail '" + tail + "'");
  });
}

Json toJson(words::Nu const &nu)
{
  return {{"prefix", nu.prefix()},
          {"tail", nu.tail() == words::Nu::Tail::Zero ? "zero" : "cycle"}};
}

scale::Scale scaleFromJson(Json const &j, unsigned defaultBudget)
{
  return guarded("scale", [&] {
    if (j.is_array())
      return scale::Scale::fromValues(j.get<std::vector<std::size_t>>(), defaultBudget);
    unsigned budget = j.value("budget", defaultBudget);
    return scale::Scale(dseqFromJson(j.at("d")), budget);
  });
}

Json toJson(scale::ObeysWitness const &wit)
{
  return {{"nStar", wit.nStar}, {"mStar", wit.mStar}, {"i0", wit.i0}, {"i1", wit.i1}};
}

Json toJson(freegrp::ChainState const &st)
{
  if (st.alive())
    return {{"status", "alive"},
            {"position", st.position},
            {"residual", freegrp::toString(std::get<freegrp::Alive>(st.status).residual)}};
  return {{"status", "dead"},
          {"position", st.position},
          {"reason", {{"noRoot", std::get<freegrp::NoRoot>(st.status).t}}}};
}

Json toJson(freegrp::NuPrefix const &p)
{
  Json log = Json::array();
  for (auto const &seg : p.log) {
    if (auto const *o = std::get_if<freegrp::ObeysSegment>(&seg)) {
      log.push_back({{"kind", "obeys"},
                     {"nStar", o->nStar},
                     {"mStar", o->mStar},
                     {"i0", o->i0},
                     {"i1", o->i1}});
    } else {
      auto const &b = std::get<freegrp::BlockSegment>(seg);
      log.push_back({{"kind", "block"}, {"target", b.target}, {"appended", b.appended}});
    }
  }
  return {{"entries", p.entries}, {"log", log}};
}

freegrp::NuPrefix nuPrefixFromJson(Json const &j)
{
  return guarded("nu prefix", [&] {
    freegrp::NuPrefix p;
    p.entries = j.at("entries").get<std::vector<std::uint64_t>>();
    if (j.contains("log")) {
      for (auto const &seg : j.at("log")) {
        std::string kind = seg.at("kind").get<std::string>();
        if (kind == "obeys") {
          p.log.emplace_back(freegrp::ObeysSegment{
            seg.at("nStar").get<std::size_t>(), seg.at("mStar").get<std::size_t>(),
            seg.at("i0").get<std::size_t>(), seg.at("i1").get<std::size_t>()});
        } else if (kind == "block") {
          p.log.emplace_back(freegrp::BlockSegment{
            seg.at("target").get<std::size_t>(),
            seg.at("appended").get<std::vector<std::uint64_t>>()});
        } else {
          parseFail("unknown log segment kind '" + kind + "'");
        }
      }
    }
    return p;
  });
}

} // namespace wordsys::io
