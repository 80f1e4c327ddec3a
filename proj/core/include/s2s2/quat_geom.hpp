#pragma once

// Explicit maps on S^2 x S^2 built from quaternions, and numerical checks of
// the identities they satisfy.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "s2s2/quaternion.hpp"

namespace s2s2::geom {

/// Point r e^{2 pi i t} of the closed unit disc, identified with the upper hemisphere.
struct DiscCoord {
  double r = 0;
  double t = 0;
};

enum class Hemisphere { Upper, Lower };

/// Chart of the upper hemisphere: r = (2/pi) * polar angle, t = azimuth / 2pi.
DiscCoord disc_coord(const S2Point& d);
S2Point disc_point(const DiscCoord& d);
/// Rotation by pi about the k-axis on the disc: t -> t + 1/2.
DiscCoord rotate_half_turn(const DiscCoord& d);

/// q v q^{-1}; throws NonUnitQuaternion if |q| differs from 1 by more than 1e-9.
S2Point rotate_by_conjugation(const Quaternion& q, const S2Point& v);
/// Conjugation by k.
S2Point half_turn(const S2Point& v);
inline S2Point antipode(const S2Point& v) { return -v; }
/// Reflection z -> -z.
S2Point reflect(const S2Point& v);

/// sin(pi r/2) e^{2 pi i t} + cos(pi r/2) j.
Quaternion v_map(const DiscCoord& d);
/// Closed form of V(R d)^{-1} V(d).
Quaternion twist_factor_closed_form(const DiscCoord& d);
/// V(R d)^{-1} V(d) by quaternion arithmetic, checked against the closed form
/// (ClosedFormMismatch beyond 1e-10).
Quaternion twist_factor(const DiscCoord& d);

/// The free involution of S^2 x S^2 with quotient RP^4 #_{S^1} RP^4.
ProductPoint psi(const ProductPoint& p, Hemisphere h);
/// Hemisphere inferred from the sign of the second factor's z-coordinate.
ProductPoint psi(const ProductPoint& p);

ProductPoint sigma(const ProductPoint& p);

using PointMap = std::function<ProductPoint(const ProductPoint&)>;

struct RegisteredAction {
  std::string name;
  std::string description;
  /// Generators and their claimed orders.
  std::vector<std::string> generator_names;
  std::vector<PointMap> generators;
  std::vector<int> orders;
  /// Lipschitz constant of every group element, when known exactly.
  bool isometric = true;
};

/// sigma, sigma2, psi, z2xz2, f-lift, identity.
const std::vector<RegisteredAction>& registered_actions();
const RegisteredAction& find_action(const std::string& name);

struct VerifyOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  /// Grid points per axis of each S^2 factor for the displacement bound.
  std::size_t grid = 48;
};

struct ActionReport {
  std::string action;
  std::vector<int> orders;
  bool order_ok = false;
  double max_order_error = 0;
  bool commutes = true;
  double max_commutator_error = 0;
  /// Minimum displacement over nontrivial group elements, refined locally.
  double min_displacement = 0;
  ProductPoint worst_point;
  std::string worst_element;
  /// min over the grid - (1 + L) * covering radius.
  double certified_lower_bound = 0;
  double lipschitz = 1;
  bool lipschitz_exact = true;
  double covering_radius = 0;
  bool free = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Throws OrderFailed or FixedPointFound (with witness).
ActionReport verify_action(const RegisteredAction& action, const VerifyOptions& opts = {});

struct CoverReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double max_c0_error = 0;
  double max_sign_error = 0;
  double max_lift_error = 0;
  double max_injectivity_error = 0;
  int lift_order = 0;
  bool lift_fourth_power_identity = false;
};

/// f(q) = (q i q^{-1}, q j q^{-1}) on unit quaternions.
ProductPoint cover_map(const Quaternion& q);
/// Recovers +-q from f(q).
Quaternion cover_preimage(const ProductPoint& p);
/// Checks the covering identities; throws IdentityViolated beyond `tolerance`.
CoverReport covering_check(std::size_t samples = 10000, std::uint64_t seed = 0, double tolerance = 1e-10);

/// Max |f(xi(p)) - xi(f(p))| for f(s,x) = (-s,x), xi(s,x) = (e^{pi i t} s e^{-pi i t}, x) on S^2 x S^1.
double boundary_commutation_error(std::size_t samples = 1000, std::uint64_t seed = 0);

/// Self-intersection 2ab of the class (a,b) in H_2(S^2 x S^2).
long homological_self_intersection(long a, long b);

S2Point random_s2(std::mt19937_64& rng);
Quaternion random_unit_quaternion(std::mt19937_64& rng);

}  // namespace s2s2::geom
