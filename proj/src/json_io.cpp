#include "elnet/json_io.hpp"

namespace elnet {

using nlohmann::json;

json mat_to_json(const Mat& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Mat mat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw ParseError("matrix JSON needs rows, cols, data");
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& data = j.at("data");
  if (!data.is_array() || data.size() != rows)
    throw ParseError("matrix data has wrong row count");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols)
      throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t jj = 0; jj < cols; ++jj)
      m.at(i, jj) = rat_from_string(data[i][jj].get<std::string>());
  }
  return m;
}

json network_to_json(const Network& n) {
  json edges = json::array();
  for (const auto& e : n.edges())
    edges.push_back(json{{"u", e.u}, {"v", e.v}, {"w", to_string(e.w)}});
  return json{{"boundary", n.boundary_count()},
              {"interior", n.interior()},
              {"edges", std::move(edges)}};
}

Network network_from_json(const json& j) {
  if (!j.is_object() || !j.contains("boundary") || !j.contains("interior") ||
      !j.contains("edges"))
    throw ParseError("network JSON needs boundary, interior, edges");
  std::size_t boundary = j.at("boundary").get<std::size_t>();
  std::vector<std::string> interior;
  for (const auto& v : j.at("interior")) interior.push_back(v.get<std::string>());
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.contains("u") || !e.contains("v") || !e.contains("w"))
      throw ParseError("edge JSON needs u, v, w");
    edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                     rat_from_string(e.at("w").get<std::string>())});
  }
  return Network(boundary, std::move(interior), std::move(edges));
}

}  // namespace elnet
