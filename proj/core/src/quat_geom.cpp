#include "s2s2/quat_geom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "s2s2/error.hpp"

namespace s2s2::geom {

using std::numbers::pi;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double wrap01(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

}  // namespace

// ---------------------------------------------------------------- basic types

Quaternion Quaternion::inverse() const {
  const double n2 = norm2();
  if (n2 == 0) throw Error("inverse of the zero quaternion");
  return (1.0 / n2) * conj();
}

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0) throw Error("cannot normalize the zero quaternion");
  return (1.0 / n) * *this;
}

std::string Quaternion::to_string() const {
  return "(" + fmt(w) + ", " + fmt(x) + ", " + fmt(y) + ", " + fmt(z) + ")";
}

S2Point::S2Point(const Quaternion& q) {
  const double n = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (n == 0) throw Error("S2Point: zero vector");
  q_ = {0.0, q.x / n, q.y / n, q.z / n};
}

std::string S2Point::to_string() const { return "(" + fmt(x()) + ", " + fmt(y()) + ", " + fmt(z()) + ")"; }

std::string ProductPoint::to_string() const { return "[" + first.to_string() + ", " + second.to_string() + "]"; }

// ---------------------------------------------------------------- disc chart and rotations

DiscCoord disc_coord(const S2Point& d) {
  const double z = std::clamp(d.z(), -1.0, 1.0);
  const double r = (2.0 / pi) * std::acos(z);
  const double t = (d.x() == 0 && d.y() == 0) ? 0.0 : wrap01(std::atan2(d.y(), d.x()) / (2 * pi));
  return {r, t};
}

S2Point disc_point(const DiscCoord& d) {
  const double polar = d.r * pi / 2;
  return S2Point(std::sin(polar) * std::cos(2 * pi * d.t), std::sin(polar) * std::sin(2 * pi * d.t), std::cos(polar));
}

DiscCoord rotate_half_turn(const DiscCoord& d) { return {d.r, wrap01(d.t + 0.5)}; }

S2Point rotate_by_conjugation(const Quaternion& q, const S2Point& v) {
  if (std::abs(q.norm() - 1.0) > 1e-9) throw NonUnitQuaternion("conjugation needs a unit quaternion, |q| = " + fmt(q.norm()));
  return S2Point(q * v.q() * q.conj());
}

S2Point half_turn(const S2Point& v) { return S2Point(-v.x(), -v.y(), v.z()); }

S2Point reflect(const S2Point& v) { return S2Point(v.x(), v.y(), -v.z()); }

Quaternion v_map(const DiscCoord& d) {
  const double a = std::sin(pi * d.r / 2);
  const double b = std::cos(pi * d.r / 2);
  return {a * std::cos(2 * pi * d.t), a * std::sin(2 * pi * d.t), b, 0.0};
}

Quaternion twist_factor_closed_form(const DiscCoord& d) {
  const double s = std::sin(pi * d.r);
  return {std::cos(pi * d.r), 0.0, -s * std::cos(2 * pi * d.t), s * std::sin(2 * pi * d.t)};
}

Quaternion twist_factor(const DiscCoord& d) {
  const Quaternion computed = v_map(rotate_half_turn(d)).inverse() * v_map(d);
  const Quaternion closed = twist_factor_closed_form(d);
  if (distance(computed, closed) > 1e-10)
    throw ClosedFormMismatch("twist factor at r=" + fmt(d.r) + ", t=" + fmt(d.t) + ": " + computed.to_string() +
                             " vs closed form " + closed.to_string());
  return computed;
}

ProductPoint psi(const ProductPoint& p, Hemisphere h) {
  if (h == Hemisphere::Lower) return {-p.first, half_turn(p.second)};
  const Quaternion q = twist_factor(disc_coord(p.second));
  return {rotate_by_conjugation(q, -p.first), half_turn(p.second)};
}

ProductPoint psi(const ProductPoint& p) { return psi(p, p.second.z() >= 0 ? Hemisphere::Upper : Hemisphere::Lower); }

ProductPoint sigma(const ProductPoint& p) { return {p.second, -p.first}; }

// ---------------------------------------------------------------- registry

const std::vector<RegisteredAction>& registered_actions() {
  static const std::vector<RegisteredAction> actions = {
      {"sigma", "(s,t) -> (t,-s)", {"sigma"}, {sigma}, {4}, true},
      {"sigma2", "(s,t) -> (-s,-t)", {"sigma2"}, {[](const ProductPoint& p) { return sigma(sigma(p)); }}, {2}, true},
      {"psi", "involution with quotient RP4 #_S1 RP4", {"psi"}, {[](const ProductPoint& p) { return psi(p); }}, {2},
       false},
      {"z2xz2",
       "t(s,s') = (-s,s'), u(s,s') = (R s,-s') with R the half turn about k",
       {"t", "u"},
       {[](const ProductPoint& p) { return ProductPoint{-p.first, p.second}; },
        [](const ProductPoint& p) { return ProductPoint{half_turn(p.first), -p.second}; }},
       {2, 2},
       true},
      {"f-lift", "(s,s') -> (-s, reflection of s' in z = 0)", {"f"},
       {[](const ProductPoint& p) { return ProductPoint{-p.first, reflect(p.second)}; }}, {2}, true},
      {"identity", "(s,t) -> (s,t)", {"id"}, {[](const ProductPoint& p) { return p; }}, {1}, true},
  };
  return actions;
}

const RegisteredAction& find_action(const std::string& name) {
  for (const auto& a : registered_actions())
    if (a.name == name) return a;
  throw Error("unknown action '" + name + "'");
}

S2Point random_s2(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const double x = n(rng), y = n(rng), z = n(rng);
    if (x * x + y * y + z * z > 1e-12) return S2Point(x, y, z);
  }
}

Quaternion random_unit_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Quaternion q{n(rng), n(rng), n(rng), n(rng)};
    if (q.norm2() > 1e-12) return q.normalized();
  }
}

// ---------------------------------------------------------------- action verification

namespace {

struct Element {
  std::string name;
  std::vector<int> exponents;
};

ProductPoint apply(const RegisteredAction& a, const std::vector<int>& exps, ProductPoint p) {
  for (std::size_t g = 0; g < exps.size(); ++g)
    for (int k = 0; k < exps[g]; ++k) p = a.generators[g](p);
  return p;
}

std::vector<Element> nontrivial_elements(const RegisteredAction& a) {
  std::vector<Element> out;
  std::vector<int> exps(a.generators.size(), 0);
  for (;;) {
    std::size_t g = 0;
    while (g < exps.size() && ++exps[g] == a.orders[g]) exps[g++] = 0;
    if (g == exps.size()) break;
    std::string name;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!name.empty()) name += "*";
      name += a.generator_names[i];
      if (exps[i] > 1) name += "^" + std::to_string(exps[i]);
    }
    out.push_back({name, exps});
  }
  if (out.empty()) out.push_back({a.generator_names.front(), std::vector<int>(a.generators.size(), 1)});
  return out;
}

/// Point on S^2 moved along its tangent plane by (a, b) and renormalized.
S2Point nudge(const S2Point& s, double a, double b) {
  const Quaternion n = s.q();
  Quaternion helper = std::abs(n.x) < 0.9 ? Quaternion::i() : Quaternion::j();
  // e1 = n x helper, e2 = n x e1 (vector parts of quaternion products)
  Quaternion e1 = n * helper;
  e1.w = 0;
  e1 = e1.normalized();
  Quaternion e2 = n * e1;
  e2.w = 0;
  return S2Point(n + a * e1 + b * e2);
}

ProductPoint nudge(const ProductPoint& p, const std::array<double, 4>& d) {
  return {nudge(p.first, d[0], d[1]), nudge(p.second, d[2], d[3])};
}

std::vector<S2Point> sphere_grid(std::size_t n) {
  std::vector<S2Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = (static_cast<double>(i) + 0.5) * pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double phi = static_cast<double>(j) * 2 * pi / static_cast<double>(n);
      out.emplace_back(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
    }
  }
  return out;
}

}  // namespace

ActionReport verify_action(const RegisteredAction& action, const VerifyOptions& opts) {
  ActionReport rep;
  rep.action = action.name;
  rep.orders = action.orders;
  rep.samples = opts.samples;
  rep.seed = opts.seed;
  rep.lipschitz_exact = action.isometric;

  std::mt19937_64 rng(opts.seed);
  std::vector<ProductPoint> samples;
  samples.reserve(opts.samples);
  for (std::size_t i = 0; i < opts.samples; ++i) samples.push_back({random_s2(rng), random_s2(rng)});

  // Orders: g^n = id everywhere, g^k != id for 0 < k < n.
  for (std::size_t g = 0; g < action.generators.size(); ++g) {
    const int n = action.orders[g];
    std::vector<double> max_dev(static_cast<std::size_t>(n) + 1, 0.0);
    for (const auto& p : samples) {
      ProductPoint x = p;
      for (int k = 1; k <= n; ++k) {
        x = action.generators[g](x);
        max_dev[k] = std::max(max_dev[k], distance(x, p));
      }
    }
    rep.max_order_error = std::max(rep.max_order_error, max_dev[n]);
    if (max_dev[n] > 1e-9)
      throw OrderFailed(action.generator_names[g] + "^" + std::to_string(n) + " differs from the identity by " +
                        fmt(max_dev[n]));
    for (int k = 1; k < n; ++k)
      if (n % k == 0 && max_dev[k] <= 1e-6)
        throw OrderFailed(action.generator_names[g] + "^" + std::to_string(k) + " is already the identity");
  }
  rep.order_ok = true;

  for (std::size_t g = 0; g < action.generators.size(); ++g)
    for (std::size_t h = g + 1; h < action.generators.size(); ++h)
      for (const auto& p : samples) {
        const double e = distance(action.generators[g](action.generators[h](p)),
                                  action.generators[h](action.generators[g](p)));
        rep.max_commutator_error = std::max(rep.max_commutator_error, e);
      }
  rep.commutes = rep.max_commutator_error <= 1e-9;
  if (!rep.commutes) throw OrderFailed("generators do not commute (error " + fmt(rep.max_commutator_error) + ")");

  const auto elements = nontrivial_elements(action);

  // Lipschitz constant: exact for isometries, otherwise a finite-difference estimate.
  rep.lipschitz = 1.0;
  if (!action.isometric) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double h = 1e-4;
    for (const auto& el : elements)
      for (std::size_t i = 0; i < std::min<std::size_t>(samples.size(), 2000); ++i) {
        const auto& p = samples[i];
        ProductPoint q = nudge(p, {h * u(rng), h * u(rng), h * u(rng), h * u(rng)});
        const double base = distance(p, q);
        if (base < 1e-12) continue;
        rep.lipschitz = std::max(rep.lipschitz, distance(apply(action, el.exponents, p), apply(action, el.exponents, q)) / base);
      }
  }

  // Grid bound: every point lies within 3 pi / (2n) of a grid point on each factor.
  const auto grid = sphere_grid(opts.grid);
  rep.covering_radius = std::sqrt(2.0) * 3 * pi / (2.0 * static_cast<double>(opts.grid));
  double grid_min = std::numeric_limits<double>::infinity();
  ProductPoint best;
  std::string best_element;
  std::vector<int> best_exps;
  for (const auto& el : elements)
    for (const auto& a : grid)
      for (const auto& b : grid) {
        const ProductPoint p{a, b};
        const double d = distance(apply(action, el.exponents, p), p);
        if (d < grid_min) {
          grid_min = d;
          best = p;
          best_element = el.name;
          best_exps = el.exponents;
        }
      }
  double best_value = grid_min;
  for (const auto& el : elements)
    for (const auto& p : samples) {
      const double d = distance(apply(action, el.exponents, p), p);
      if (d < best_value) {
        best_value = d;
        best = p;
        best_element = el.name;
        best_exps = el.exponents;
      }
    }
  rep.certified_lower_bound = grid_min - (1.0 + rep.lipschitz) * rep.covering_radius;

  // Compass search from the best point.
  double current = best_value;
  for (double step = 0.1; step > 1e-9; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int axis = 0; axis < 4; ++axis)
        for (double sign : {1.0, -1.0}) {
          std::array<double, 4> d{0, 0, 0, 0};
          d[axis] = sign * step;
          const ProductPoint q = nudge(best, d);
          const double v = distance(apply(action, best_exps, q), q);
          if (v < current) {
            current = v;
            best = q;
            improved = true;
          }
        }
    }
  }
  rep.min_displacement = current;
  rep.worst_point = best;
  rep.worst_element = best_element;
  if (current <= 1e-6)
    throw FixedPointFound("action '" + action.name + "': " + best_element + " fixes a point (displacement " +
                              fmt(current) + ")",
                          best.to_string());
  rep.free = rep.certified_lower_bound > 0;
  return rep;
}

// ---------------------------------------------------------------- covering

ProductPoint cover_map(const Quaternion& q) {
  return {rotate_by_conjugation(q, S2Point(1, 0, 0)), rotate_by_conjugation(q, S2Point(0, 1, 0))};
}

Quaternion cover_preimage(const ProductPoint& p) {
  const auto& s = p.first;
  const auto& t = p.second;
  // Columns of the rotation matrix: images of i, j and k = i x j.
  const double ux = s.y() * t.z() - s.z() * t.y();
  const double uy = s.z() * t.x() - s.x() * t.z();
  const double uz = s.x() * t.y() - s.y() * t.x();
  const double m[3][3] = {{s.x(), t.x(), ux}, {s.y(), t.y(), uy}, {s.z(), t.z(), uz}};
  const double trace = m[0][0] + m[1][1] + m[2][2];
  Quaternion q;
  if (trace > 0) {
    const double r = std::sqrt(trace + 1.0) * 2;
    q = {r / 4, (m[2][1] - m[1][2]) / r, (m[0][2] - m[2][0]) / r, (m[1][0] - m[0][1]) / r};
  } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
    const double r = std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]) * 2;
    q = {(m[2][1] - m[1][2]) / r, r / 4, (m[0][1] + m[1][0]) / r, (m[0][2] + m[2][0]) / r};
  } else if (m[1][1] > m[2][2]) {
    const double r = std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]) * 2;
    q = {(m[0][2] - m[2][0]) / r, (m[0][1] + m[1][0]) / r, r / 4, (m[1][2] + m[2][1]) / r};
  } else {
    const double r = std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]) * 2;
    q = {(m[1][0] - m[0][1]) / r, (m[0][2] + m[2][0]) / r, (m[1][2] + m[2][1]) / r, r / 4};
  }
  return q.normalized();
}

CoverReport covering_check(std::size_t samples, std::uint64_t seed, double tolerance) {
  CoverReport rep;
  rep.samples = samples;
  rep.seed = seed;
  const Quaternion c = (1.0 / std::sqrt(2.0)) * (Quaternion::one() + Quaternion::k());
  std::mt19937_64 rng(seed);
  auto violated = [&](const std::string& what, double err, const Quaternion& q) {
    if (err > tolerance)
      throw IdentityViolated(what + " fails with error " + fmt(err) + " at q = " + q.to_string());
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const Quaternion q = random_unit_quaternion(rng);
    const ProductPoint f = cover_map(q);
    const double c0 = std::abs(dot(f.first.q(), f.second.q()));
    const double sign = distance(cover_map(-q), f);
    const double lift = distance(cover_map(q * c), sigma(f));
    const Quaternion back = cover_preimage(f);
    const double inj = std::min(distance(back, q), distance(back, -q));
    violated("f(q) in C0", c0, q);
    violated("f(-q) = f(q)", sign, q);
    violated("lift of sigma", lift, q);
    violated("injectivity up to sign", inj, q);
    rep.max_c0_error = std::max(rep.max_c0_error, c0);
    rep.max_sign_error = std::max(rep.max_sign_error, sign);
    rep.max_lift_error = std::max(rep.max_lift_error, lift);
    rep.max_injectivity_error = std::max(rep.max_injectivity_error, inj);
  }
  Quaternion power = Quaternion::one();
  for (int n = 1; n <= 16; ++n) {
    power = power * c;
    if (n == 4) rep.lift_fourth_power_identity = distance(power, Quaternion::one()) < 1e-12;
    if (distance(power, Quaternion::one()) < 1e-12) {
      rep.lift_order = n;
      break;
    }
  }
  return rep;
}

double boundary_commutation_error(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const S2Point s = random_s2(rng);
    const double t = unit(rng);
    const Quaternion half{std::cos(pi * t), std::sin(pi * t), 0, 0};
    auto xi = [&](const S2Point& v) { return rotate_by_conjugation(half, v); };
    auto f = [](const S2Point& v) { return -v; };
    worst = std::max(worst, distance(f(xi(s)), xi(f(s))));
  }
  return worst;
}

long homological_self_intersection(long a, long b) { return 2 * a * b; }

}  // namespace s2s2::geom
