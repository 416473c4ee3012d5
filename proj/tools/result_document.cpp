#include "result_document.hpp"

#include "json.hpp"
#include "malign/errors.hpp"

namespace malign::io {

namespace {

using nlohmann::json;

json grid_to_json(const Grid& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.cols; ++c) row.push_back(g.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Grid grid_from_json(const json& rows) {
  Grid g(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < g.rows; ++r) {
    const json& row = rows.at(r);
    if (row.size() != g.cols) {
      throw ValidationError("ragged gradient grid in result document");
    }
    for (std::size_t c = 0; c < g.cols; ++c) {
      g.at(r, c) = row.at(c).get<double>();
    }
  }
  return g;
}

}  // namespace

std::string ResultDocument::serialize() const {
  json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  doc["solver"] = solver;
  doc["metric"] = metric;
  doc["n"] = n;
  doc["m"] = m;
  doc["dim"] = dim;
  doc["loss"] = loss;
  doc["path"] = path;
  if (elapsed_ms) doc["elapsed_ms"] = *elapsed_ms;
  if (d_audio) doc["d_audio"] = grid_to_json(*d_audio);
  if (d_text) doc["d_text"] = grid_to_json(*d_text);
  if (noise_sigma) doc["noise_sigma"] = *noise_sigma;
  if (seed) doc["seed"] = *seed;
  return doc.dump(2) + "\n";
}

ResultDocument ResultDocument::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("result document: ") + e.what());
  }
  ResultDocument out;
  try {
    out.schema_version = doc.at("schema_version").get<int>();
    out.command = doc.at("command").get<std::string>();
    out.solver = doc.at("solver").get<std::string>();
    out.metric = doc.at("metric").get<std::string>();
    out.n = doc.at("n").get<std::size_t>();
    out.m = doc.at("m").get<std::size_t>();
    out.dim = doc.at("dim").get<std::size_t>();
    out.loss = doc.at("loss").get<double>();
    out.path = doc.at("path").get<std::vector<std::size_t>>();
    if (doc.contains("elapsed_ms")) {
      out.elapsed_ms = doc["elapsed_ms"].get<double>();
    }
    if (doc.contains("d_audio")) out.d_audio = grid_from_json(doc["d_audio"]);
    if (doc.contains("d_text")) out.d_text = grid_from_json(doc["d_text"]);
    if (doc.contains("noise_sigma")) {
      out.noise_sigma = doc["noise_sigma"].get<double>();
    }
    if (doc.contains("seed")) out.seed = doc["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("result document: ") + e.what());
  }
  return out;
}

}  // namespace malign::io
