#pragma once

// Whitehead's quadratic functor on free modules with group action, twisted
// coinvariants and orbit counting on their torsion.

#include <cstddef>
#include <string>
#include <vector>

#include "s2s2/exact_linalg.hpp"
#include "s2s2/group_homalg.hpp"

namespace s2s2::gamma {

using linalg::AbelianInvariants;
using linalg::Integer;
using linalg::IntMatrix;

/// Basis labels gamma(e1)..gamma(en), then [ei,ej] for i < j.
std::vector<std::string> gamma_labels(std::size_t base_rank);

/// Matrix of Gamma(A) on the basis above.
IntMatrix induced_matrix(const IntMatrix& a);

struct GammaModule {
  homalg::FiniteAbelianGroup group;
  homalg::GroupModule base;
  std::vector<std::string> labels;
  /// Induced matrices Gamma(A_g), one per group generator.
  std::vector<IntMatrix> actions;
  /// Orientation character w on the generators.
  std::vector<int> weight;

  std::size_t rank() const { return labels.size(); }
};

/// `m` carries the action on the base module; `orientation` is w.
GammaModule gamma_functor(const homalg::FiniteAbelianGroup& g, const homalg::GroupModule& m,
                          std::vector<int> orientation);

/// Z^w (x)_Lambda Gamma: cokernel of the stacked maps w(g) Gamma(A_g) - I.
AbelianInvariants twisted_coinvariants(const GammaModule& gm);

/// Automorphism of the base module used to identify polarizations.
struct Symmetry {
  std::string name;
  IntMatrix matrix;
};

struct PolarizationOrbitReport {
  AbelianInvariants torsion;
  std::vector<std::string> symmetries;
  /// Each torsion generator written in the Gamma basis.
  std::vector<std::string> torsion_generators;
  /// Orbits as lists of torsion elements in generator coordinates.
  std::vector<std::vector<std::vector<Integer>>> orbits;

  std::size_t orbit_count() const { return orbits.size(); }
};

/// Orbits of the torsion of the twisted coinvariants under the induced symmetries.
/// Throws SymmetryNotInduced if a symmetry does not normalize the action.
PolarizationOrbitReport torsion_orbit_count(const GammaModule& gm, const std::vector<Symmetry>& symmetries);

}  // namespace s2s2::gamma
