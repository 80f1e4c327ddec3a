#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "s2s2/error.hpp"
#include "s2s2/f2_ring.hpp"
#include "s2s2/group_homalg.hpp"

namespace s2s2::cli {

/// Bad user input; maps to exit code 2.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Rows separated by ';' or newlines, entries by spaces or commas.
linalg::IntMatrix parse_matrix(const std::string& text);
Json matrix_json(const linalg::IntMatrix& m);
std::vector<int> parse_int_list(const std::string& text);

homalg::FiniteAbelianGroup parse_group(const std::string& text);

/// Named module ("Z", "Zw", "Z/n", catalog names) or a JSON file
/// {"actions": [...], "weight": [...], "modulus": n}.
homalg::GroupModule load_module(const std::string& name, const homalg::FiniteAbelianGroup& g,
                                const std::vector<int>& orientation);
std::vector<std::string> module_names();

/// Catalog ring name or path to a presentation file.
ring::GradedF2Algebra load_ring(const std::string& name);
std::string ring_text(const std::string& name);
std::vector<std::string> ring_names();

std::string read_file(const std::string& path);

}  // namespace s2s2::cli
