#pragma once

#include <json.hpp>

#include <string>

#include "jordan/imagealg.hpp"
#include "jordan/qmatrix.hpp"
#include "jordan/reps.hpp"
#include "jordan/strata.hpp"

namespace jordan {

using Json = nlohmann::ordered_json;

/// {"rows": r, "cols": c, "entries": [["0", "1/2"], ...]}
Json matrix_to_json(const QMatrix& m);
/// Throws ParseError on a malformed document.
QMatrix matrix_from_json(const Json& j);

/// Bare entry grid [["0", "1/2"], ...] as used inside RepPair documents.
Json grid_to_json(const QMatrix& m);
QMatrix grid_from_json(const Json& j, std::size_t n);

/// {"n": n, "X": [[...]], "Y": [[...]], "partition": [...]}; partition only when known.
Json rep_to_json(const RepPair& rep);
/// Parses and verifies. Throws ParseError, SizeMismatch, RelationViolated.
RepPair rep_from_json(const Json& j);

/// {"vertices": ["0", ...], "arrows": [[2]]}
Json quiver_to_json(const QuiverData& q);

/// {"partition": [...], "fiber_dim": .., "base_dim": .., "stratum_dim": ..,
///  "image_dim_bound": .., "tame": "tame|wild|unknown"}
Json stratum_to_json(const StratumInfo& s);

/// Reads a file and parses it as JSON. Throws IoError or ParseError.
Json read_json_file(const std::string& path);

}  // namespace jordan
