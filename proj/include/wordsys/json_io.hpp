#ifndef WORDSYS_JSON_IO_HPP
#define WORDSYS_JSON_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wordsys/freegrp.hpp"
#include "wordsys/perm.hpp"
#include "wordsys/scale.hpp"
#include "wordsys/solver.hpp"
#include "wordsys/words.hpp"

namespace wordsys::io
{

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; Error(Parse) on failure.
Json readJsonFile(std::filesystem::path const &path);
void writeJsonFile(std::filesystem::path const &path, Json const &j);

/// [[point, image], ...] sorted by point, fixed points omitted.
Json toJson(perm::FinSupportPerm const &f);
perm::FinSupportPerm permFromJson(Json const &j);

/// {"kind": "transpositions"} | {"kind": "explicit", "perms": [...],
/// "moverBound": [[m, K], ...]} | {"kind": "cauchy", "c": [...]}
perm::DSeq dseqFromJson(Json const &j);
Json toJson(perm::DSeq const &d);

/// {"prefix": [...], "tail": "zero"}; "cycle" repeats the prefix.
words::Nu nuFromJson(Json const &j);
Json toJson(words::Nu const &nu);

/// A JSON array of j values, or {"d": <d-sequence>, "budget": B} for a
/// scale that extends itself on demand.
scale::Scale scaleFromJson(Json const &j, unsigned defaultBudget);

/// {nStar, mStar, i0, i1}
Json toJson(scale::ObeysWitness const &wit);

Json toJson(freegrp::ChainState const &st);

/// {"entries": [...], "log": [{"kind": "obeys", ...} | {"kind": "block", ...}]}
Json toJson(freegrp::NuPrefix const &p);
freegrp::NuPrefix nuPrefixFromJson(Json const &j);

} // namespace wordsys::io

#endif // WORDSYS_JSON_IO_HPP
