#pragma once

// Double points of catalog immersed spheres in the three free Z/2 quotients
// of S^2 x S^2, and the resulting values of the KKR quadratic function.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "s2s2/quat_geom.hpp"

namespace s2s2::kkr {

enum class Quotient { S2xRP2, S2TwistedRP2, RP4SumRP4 };

/// "s2xrp2", "s2xtrp2", "rp4rp4".
std::string to_string(Quotient q);
Quotient parse_quotient(const std::string& name);
std::vector<Quotient> all_quotients();

struct ImmersedSphere {
  Quotient quotient = Quotient::S2xRP2;
  /// "0", "x", "y" or "x+y".
  std::string cls;
  std::string description;
  /// Normal Euler number of the lift, taken from the geometric argument.
  int euler_number = 0;
  /// Map S^2 -> S^2 x S^2; one factor is the identity of the parameter.
  std::function<geom::ProductPoint(const geom::S2Point&)> map;
  /// Which factor of `map` equals the parameter (0 or 1).
  int parameter_factor = 0;
  /// Free involution of S^2 x S^2 defining the quotient.
  std::function<geom::ProductPoint(const geom::ProductPoint&)> deck;
};

/// Isotoped diagonal s -> normalize(s + eps * rho(z) * i), rho = 1 for z >= 0,
/// smoothstep down to 0 at z = -1/2.
geom::S2Point isotoped_diagonal(const geom::S2Point& s, double eps);

/// Catalog lookup; throws UnsupportedImmersion for classes without a representative.
ImmersedSphere immersion(Quotient q, const std::string& cls, double eps = 0.1);

struct Witness {
  geom::S2Point parameter;
  geom::S2Point partner;
  double residual = 0;
  double min_singular_value = 0;
  /// Disc coordinates of the parameter, for parameters in the upper hemisphere.
  std::optional<geom::DiscCoord> disc;
};

struct DoublePointReport {
  std::string quotient;
  std::string cls;
  int euler_number = 0;
  std::size_t count = 0;
  std::vector<Witness> witnesses;
  std::size_t grid = 0;
  std::size_t candidates = 0;
  std::size_t discarded = 0;
};

struct SolveOptions {
  std::size_t grid = 200;
  /// Converged residual accepted as a solution.
  double accept = 1e-10;
  /// Residuals between `accept` and this throw SolverDiverged.
  double diverge = 1e-6;
  double transversality = 1e-6;
};

/// Throws NonTransverseDoublePoint or SolverDiverged.
DoublePointReport double_points(const ImmersedSphere& s, const SolveOptions& opts = {});

/// (e + 2 * count) mod 4; the zero class gives 0.
int q_kkr(const ImmersedSphere& s, const SolveOptions& opts = {});

struct DistinctionRow {
  std::string quotient;
  bool v2_nonzero = false;
  /// "ring" when computed from the cohomology ring, "reference" otherwise.
  std::string v2_source;
  std::string v2_class;
  /// q on x, y, x+y; absent where no catalog representative exists.
  std::vector<std::optional<int>> q_values;
};

struct DistinctionTable {
  std::vector<DistinctionRow> rows;
  bool pairwise_distinct = false;
};

DistinctionTable distinguish_quotients(const SolveOptions& opts = {});

}  // namespace s2s2::kkr
