#include "report.hpp"

#include <sstream>

namespace s2s2::cli {

Report::Report(std::string command, std::string topic, const Settings& s) {
  doc_["command"] = std::move(command);
  doc_["topic"] = std::move(topic);
  doc_["inputs"] = Json::object();
  doc_["metadata"] = {{"seed", s.seed}, {"grid", s.grid}, {"tolerance", s.tolerance}, {"format", s.format}};
  doc_["results"] = Json::object();
  doc_["claims"] = Json::array();
}

void Report::claim(const std::string& name, Json value, const std::string& provenance) {
  doc_["claims"].push_back({{"name", name}, {"value", std::move(value)}, {"provenance", provenance}});
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return doc_.dump(2) + "\n";
  return render_text(doc_);
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string() && v.get<std::string>().find('\n') == std::string::npos) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void emit(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << pad << k << ": " << scalar(v) << "\n";
      } else if (is_scalar_array(v)) {
        os << pad << k << ": " << v.dump() << "\n";
      } else if (v.empty()) {
        os << pad << k << ": " << v.dump() << "\n";
      } else {
        os << pad << k << ":\n";
        emit(os, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || is_scalar_array(v)) {
        os << pad << "- " << (is_scalar_array(v) ? v.dump() : scalar(v)) << "\n";
      } else {
        os << pad << "-\n";
        emit(os, v, indent + 1);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  emit(os, doc, 0);
  return os.str();
}

}  // namespace s2s2::cli
