#include "jordan/json_io.hpp"

#include <fstream>
#include <sstream>

#include "jordan/error.hpp"

namespace jordan {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("matrix entry must be a rational string, got " + j.dump());
}

std::size_t count_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw ParseError(std::string("missing or invalid '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

Json grid_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix grid_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw SizeMismatch("expected " + std::to_string(n) + " rows");
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw SizeMismatch("expected " + std::to_string(n) + " columns");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json matrix_to_json(const QMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = grid_to_json(m);
  return j;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix document must be an object");
  const std::size_t rows = count_from_json(j, "rows");
  const std::size_t cols = count_from_json(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows)
    throw ParseError("'entries' must have one array per row");
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j["entries"][r];
    if (!row.is_array() || row.size() != cols) throw ParseError("row length differs from 'cols'");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c]);
  }
  return m;
}

Json rep_to_json(const RepPair& rep) {
  Json j;
  j["n"] = rep.n();
  j["X"] = grid_to_json(rep.X());
  j["Y"] = grid_to_json(rep.Y());
  if (rep.partition()) j["partition"] = rep.partition()->parts();
  return j;
}

RepPair rep_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("rep document must be an object");
  const std::size_t n = count_from_json(j, "n");
  if (!j.contains("X") || !j.contains("Y")) throw ParseError("rep document needs 'X' and 'Y'");
  QMatrix x = grid_from_json(j["X"], n);
  QMatrix y = grid_from_json(j["Y"], n);
  std::optional<Partition> partition;
  if (j.contains("partition")) {
    if (!j["partition"].is_array()) throw ParseError("'partition' must be an array");
    partition = Partition(j["partition"].get<std::vector<std::size_t>>());
    if (y != jordan_matrix(*partition))
      throw SizeMismatch("'partition' does not match the Jordan form of Y");
  }
  return RepPair::make(std::move(x), std::move(y), std::move(partition));
}

Json quiver_to_json(const QuiverData& q) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : q.vertices) j["vertices"].push_back(v.str());
  j["arrows"] = q.arrows;
  return j;
}

Json stratum_to_json(const StratumInfo& s) {
  Json j;
  j["partition"] = s.partition.parts();
  j["fiber_dim"] = s.fiber_dim;
  j["base_dim"] = s.base_dim;
  j["stratum_dim"] = s.stratum_dim;
  j["image_dim_bound"] = s.image_dim_bound;
  j["tame"] = to_string(s.tame_label);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace jordan
