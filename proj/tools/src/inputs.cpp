#include "inputs.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "s2s2/catalog.hpp"

namespace s2s2::cli {

using linalg::IntMatrix;

linalg::IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<linalg::Integer>> rows;
  std::string row;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == '\n') c = ';';
  std::istringstream rs(normalized);
  while (std::getline(rs, row, ';')) {
    for (char& c : row)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream es(row);
    std::vector<linalg::Integer> entries;
    std::string tok;
    while (es >> tok) {
      linalg::Integer v;
      if (v.set_str(tok, 10) != 0) throw MalformedInput("matrix entry is not an integer: " + tok);
      entries.push_back(v);
    }
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw MalformedInput("empty matrix");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw MalformedInput("matrix rows have different lengths");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = m(r, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw MalformedInput("not an integer list: " + text);
    }
  }
  return out;
}

homalg::FiniteAbelianGroup parse_group(const std::string& text) {
  try {
    return homalg::FiniteAbelianGroup::parse(text);
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

const std::map<std::string, homalg::GroupModule (*)()>& catalog_modules() {
  static const std::map<std::string, homalg::GroupModule (*)()> m = {
      {"z4-pi2", &catalog::z4_pi2},
      {"z4-pi3", &catalog::z4_pi3},
      {"rp2xrp2-pi2", &catalog::rp2xrp2_pi2},
      {"s2xrp2-pi2", &catalog::s2xrp2_pi2},
  };
  return m;
}

const std::map<std::string, std::string (*)()>& catalog_rings() {
  static const std::map<std::string, std::string (*)()> m = {
      {"rp2xrp2", &catalog::rp2xrp2_ring},
      {"rp2-twisted-rp2", &catalog::rp2_twisted_rp2_ring},
      {"rp2-twisted-rp2-wx", &catalog::rp2_twisted_rp2_wx_ring},
      {"z4", &catalog::z4_group_ring},
      {"s4", &catalog::s4_ring},
      {"s2xrp2", &catalog::s2xrp2_ring},
      {"s2-twisted-rp2", &catalog::s2_twisted_rp2_ring},
      {"trivial", &catalog::trivial_group_ring},
  };
  return m;
}

homalg::GroupModule module_from_json(const Json& j) {
  homalg::GroupModule m;
  try {
    std::vector<IntMatrix> actions;
    for (const auto& a : j.at("actions")) {
      const auto rows = a.get<std::vector<std::vector<long>>>();
      if (rows.empty()) throw MalformedInput("empty action matrix");
      IntMatrix mat(rows.size(), rows[0].size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw MalformedInput("ragged action matrix");
        for (std::size_t c = 0; c < rows[r].size(); ++c) mat(r, c) = rows[r][c];
      }
      actions.push_back(std::move(mat));
    }
    std::vector<int> weight = j.value("weight", std::vector<int>{});
    m = homalg::GroupModule::from_actions(std::move(actions), std::move(weight));
    m.modulus = j.value("modulus", 0L);
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string("module file: ") + e.what());
  }
  return m;
}

}  // namespace

homalg::GroupModule load_module(const std::string& name, const homalg::FiniteAbelianGroup& g,
                                const std::vector<int>& orientation) {
  homalg::GroupModule m;
  if (name == "Z") {
    m = homalg::GroupModule::trivial_integers(g);
  } else if (name == "Zw") {
    if (orientation.size() != g.generator_count())
      throw MalformedInput("Zw needs --orientation with one sign per group generator");
    m = homalg::GroupModule::twisted_integers(g, orientation);
  } else if (name.rfind("Z/", 0) == 0) {
    const auto n = parse_int_list(name.substr(2));
    if (n.size() != 1 || n[0] < 2) throw MalformedInput("bad cyclic coefficient " + name);
    m = homalg::GroupModule::trivial_cyclic(g, n[0]);
  } else if (auto it = catalog_modules().find(name); it != catalog_modules().end()) {
    m = it->second();
  } else if (std::filesystem::exists(name)) {
    try {
      m = module_from_json(Json::parse(read_file(name)));
    } catch (const Json::parse_error& e) {
      throw MalformedInput(std::string("module file: ") + e.what());
    }
  } else {
    throw MalformedInput("unknown module " + name);
  }
  try {
    m.validate(g);
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
  return m;
}

std::vector<std::string> module_names() {
  std::vector<std::string> out{"Z", "Zw", "Z/n"};
  for (const auto& [k, v] : catalog_modules()) out.push_back(k);
  return out;
}

std::string ring_text(const std::string& name) {
  if (auto it = catalog_rings().find(name); it != catalog_rings().end()) return it->second();
  if (std::filesystem::exists(name)) return read_file(name);
  throw MalformedInput("unknown ring " + name);
}

ring::GradedF2Algebra load_ring(const std::string& name) {
  const std::string text = ring_text(name);
  try {
    return ring::build_ring(text);
  } catch (const PresentationError& e) {
    throw MalformedInput(e.what());
  } catch (const InconsistentPresentation& e) {
    throw MalformedInput(e.what());
  }
}

std::vector<std::string> ring_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : catalog_rings()) out.push_back(k);
  return out;
}

}  // namespace s2s2::cli
