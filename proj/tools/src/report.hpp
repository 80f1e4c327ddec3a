#pragma once

#include <string>

#include "json.hpp"

namespace s2s2::cli {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t grid = 200;
  double tolerance = 1e-10;
  std::string out;
};

/// Report skeleton: command, topic, inputs, metadata; results and claims are filled by the caller.
class Report {
 public:
  Report(std::string command, std::string topic, const Settings& s);

  Json& inputs() { return doc_["inputs"]; }
  Json& results() { return doc_["results"]; }
  Json& metadata() { return doc_["metadata"]; }
  /// Records a named result with its provenance: "computed", "reference" or "assumption".
  void claim(const std::string& name, Json value, const std::string& provenance);
  const Json& json() const { return doc_; }

  std::string render(const std::string& format) const;

 private:
  Json doc_;
};

/// Indented "key: value" rendering of a JSON document; scalars are printed exactly as in JSON.
std::string render_text(const Json& doc);

}  // namespace s2s2::cli
