#include "s2s2/kkr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "s2s2/catalog.hpp"
#include "s2s2/error.hpp"
#include "s2s2/f2_ring.hpp"

namespace s2s2::kkr {

using geom::ProductPoint;
using geom::Quaternion;
using geom::S2Point;
using std::numbers::pi;

std::string to_string(Quotient q) {
  switch (q) {
    case Quotient::S2xRP2: return "s2xrp2";
    case Quotient::S2TwistedRP2: return "s2xtrp2";
    case Quotient::RP4SumRP4: return "rp4rp4";
  }
  return "?";
}

Quotient parse_quotient(const std::string& name) {
  for (auto q : all_quotients())
    if (to_string(q) == name) return q;
  throw Error("unknown quotient '" + name + "' (expected s2xrp2, s2xtrp2 or rp4rp4)");
}

std::vector<Quotient> all_quotients() { return {Quotient::S2xRP2, Quotient::S2TwistedRP2, Quotient::RP4SumRP4}; }

S2Point isotoped_diagonal(const S2Point& s, double eps) {
  double rho = 1.0;
  if (s.z() < 0) {
    const double u = std::clamp((s.z() + 0.5) / 0.5, 0.0, 1.0);
    rho = u * u * (3 - 2 * u);
  }
  return S2Point(s.q() + eps * rho * Quaternion::i());
}

ImmersedSphere immersion(Quotient q, const std::string& cls, double eps) {
  if (cls != "0" && cls != "x" && cls != "y" && cls != "x+y")
    throw UnsupportedImmersion("class must be one of 0, x, y, x+y; got '" + cls + "'");
  ImmersedSphere s;
  s.quotient = q;
  s.cls = cls;
  const S2Point i(1, 0, 0), j(0, 1, 0);
  switch (q) {
    case Quotient::S2xRP2:
      s.deck = [](const ProductPoint& p) { return ProductPoint{p.first, -p.second}; };
      break;
    case Quotient::S2TwistedRP2:
      s.deck = [](const ProductPoint& p) { return ProductPoint{-p.first, geom::half_turn(p.second)}; };
      break;
    case Quotient::RP4SumRP4:
      s.deck = [](const ProductPoint& p) { return geom::psi(p); };
      break;
  }

  if (cls == "0") {
    s.description = "zero class";
    return s;
  }
  if (q == Quotient::S2xRP2) {
    if (cls == "x") {
      const S2Point t0 = S2Point(0.3, -0.5, 0.8);
      s.description = "fibre sphere s -> (s, t0)";
      s.map = [t0](const S2Point& a) { return ProductPoint{a, t0}; };
      s.parameter_factor = 0;
    } else if (cls == "y") {
      s.description = "folded sphere s -> (f(s), s), f(x,y,z) = (x,y,|z|)";
      s.map = [](const S2Point& a) { return ProductPoint{S2Point(a.x(), a.y(), std::abs(a.z())), a}; };
      s.parameter_factor = 1;
    } else {
      s.description = "diagonal s -> (s, s)";
      s.euler_number = 2;
      s.map = [](const S2Point& a) { return ProductPoint{a, a}; };
      s.parameter_factor = 0;
    }
  } else if (q == Quotient::S2TwistedRP2) {
    if (cls == "x") {
      s.description = "fibre sphere s -> (s, i)";
      s.map = [i](const S2Point& a) { return ProductPoint{a, i}; };
      s.parameter_factor = 0;
    } else if (cls == "y") {
      s.description = "sphere s -> (j, s)";
      s.map = [j](const S2Point& a) { return ProductPoint{j, a}; };
      s.parameter_factor = 1;
    } else {
      s.description = "isotoped diagonal s -> (s, h_eps(s))";
      s.euler_number = 2;
      s.map = [eps](const S2Point& a) { return ProductPoint{a, isotoped_diagonal(a, eps)}; };
      s.parameter_factor = 0;
    }
  } else {
    if (cls == "x") {
      const S2Point d0 = S2Point(0.4, 0.3, -0.6);
      s.description = "fibre sphere s -> (s, d0), d0 in the lower hemisphere";
      s.map = [d0](const S2Point& a) { return ProductPoint{a, d0}; };
      s.parameter_factor = 0;
    } else if (cls == "y") {
      s.description = "sphere d -> (j, d)";
      s.map = [j](const S2Point& a) { return ProductPoint{j, a}; };
      s.parameter_factor = 1;
    } else {
      throw UnsupportedImmersion("no catalog representative for class x+y in rp4rp4");
    }
  }
  return s;
}

namespace {

struct Frame {
  Quaternion e1, e2;
};

Frame tangent_frame(const S2Point& s) {
  const Quaternion n = s.q();
  const Quaternion helper = std::abs(n.x) < 0.9 ? Quaternion::i() : Quaternion::j();
  Quaternion e1 = n * helper;
  e1.w = 0;
  e1 = e1.normalized();
  Quaternion e2 = n * e1;
  e2.w = 0;
  return {e1, e2.normalized()};
}

const S2Point& factor(const ProductPoint& p, int k) { return k == 0 ? p.first : p.second; }

/// Partner b of a (from the parameter factor of deck(map(a))) and the residual
/// in the other factor.
struct Coincidence {
  S2Point partner;
  std::array<double, 3> residual;
  double norm() const {
    return std::sqrt(residual[0] * residual[0] + residual[1] * residual[1] + residual[2] * residual[2]);
  }
};

Coincidence coincidence(const ImmersedSphere& s, const S2Point& a) {
  const ProductPoint image = s.deck(s.map(a));
  const S2Point b = factor(image, s.parameter_factor);
  const S2Point& lhs = factor(s.map(b), 1 - s.parameter_factor);
  const S2Point& rhs = factor(image, 1 - s.parameter_factor);
  return {b, {lhs.x() - rhs.x(), lhs.y() - rhs.y(), lhs.z() - rhs.z()}};
}

S2Point move(const S2Point& a, const Frame& f, double u, double v) { return S2Point(a.q() + u * f.e1 + v * f.e2); }

/// 3x2 finite-difference Jacobian in tangent coordinates at a.
std::array<std::array<double, 2>, 3> jacobian(const ImmersedSphere& s, const S2Point& a) {
  const Frame f = tangent_frame(a);
  const double h = 1e-7;
  std::array<std::array<double, 2>, 3> j{};
  for (int c = 0; c < 2; ++c) {
    const auto plus = coincidence(s, move(a, f, c == 0 ? h : 0, c == 1 ? h : 0)).residual;
    const auto minus = coincidence(s, move(a, f, c == 0 ? -h : 0, c == 1 ? -h : 0)).residual;
    for (int r = 0; r < 3; ++r) j[r][c] = (plus[r] - minus[r]) / (2 * h);
  }
  return j;
}

double min_singular_value(const std::array<std::array<double, 2>, 3>& j) {
  double a = 0, b = 0, c = 0;  // J^T J = [a b; b c]
  for (int r = 0; r < 3; ++r) {
    a += j[r][0] * j[r][0];
    b += j[r][0] * j[r][1];
    c += j[r][1] * j[r][1];
  }
  const double tr = a + c;
  const double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4 * b * b));
  return std::sqrt(std::max(0.0, (tr - disc) / 2));
}

S2Point gauss_newton(const ImmersedSphere& s, S2Point a) {
  double current = coincidence(s, a).norm();
  for (int iter = 0; iter < 60 && current > 1e-15; ++iter) {
    const auto j = jacobian(s, a);
    const auto r = coincidence(s, a).residual;
    double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
    for (int k = 0; k < 3; ++k) {
      a11 += j[k][0] * j[k][0];
      a12 += j[k][0] * j[k][1];
      a22 += j[k][1] * j[k][1];
      g1 += j[k][0] * r[k];
      g2 += j[k][1] * r[k];
    }
    const double det = a11 * a22 - a12 * a12;
    if (std::abs(det) < 1e-300) break;
    double du = -(a22 * g1 - a12 * g2) / det;
    double dv = -(a11 * g2 - a12 * g1) / det;
    // Damped step: halve until the residual decreases.
    const Frame f = tangent_frame(a);
    bool improved = false;
    for (int k = 0; k < 30; ++k) {
      const S2Point trial = move(a, f, du, dv);
      const double value = coincidence(s, trial).norm();
      if (value < current) {
        a = trial;
        current = value;
        improved = true;
        break;
      }
      du /= 2;
      dv /= 2;
    }
    if (!improved) break;
  }
  return a;
}

}  // namespace

DoublePointReport double_points(const ImmersedSphere& s, const SolveOptions& opts) {
  DoublePointReport rep;
  rep.quotient = to_string(s.quotient);
  rep.cls = s.cls;
  rep.euler_number = s.euler_number;
  rep.grid = opts.grid;
  if (s.cls == "0") return rep;
  if (opts.grid < 4) throw Error("double_points: grid must be at least 4");

  const std::size_t n = opts.grid;
  std::vector<double> values(n * n);
  std::vector<S2Point> points(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = (static_cast<double>(i) + 0.5) * pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double phi = static_cast<double>(k) * 2 * pi / static_cast<double>(n);
      const S2Point a(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
      points[i * n + k] = a;
      values[i * n + k] = coincidence(s, a).norm();
    }
  }
  // Residual grows at most linearly away from a root; generous seed threshold.
  const double threshold = 16.0 * pi / static_cast<double>(n);

  std::vector<S2Point> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double v = values[i * n + k];
      if (v > threshold) continue;
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di)
        for (int dk = -1; dk <= 1 && minimum; ++dk) {
          if (di == 0 && dk == 0) continue;
          const long ii = static_cast<long>(i) + di;
          if (ii < 0 || ii >= static_cast<long>(n)) continue;
          const std::size_t kk = (k + n + static_cast<std::size_t>(dk + 1) - 1) % n;
          if (values[static_cast<std::size_t>(ii) * n + kk] < v) minimum = false;
        }
      if (!minimum) continue;
      ++rep.candidates;
      const S2Point a = gauss_newton(s, points[i * n + k]);
      const double residual = coincidence(s, a).norm();
      if (residual > opts.diverge) {
        ++rep.discarded;
        continue;
      }
      if (residual > opts.accept)
        throw SolverDiverged("Gauss-Newton stalled at residual " + std::to_string(residual) + " near " +
                             a.to_string());
      const bool seen = std::any_of(roots.begin(), roots.end(),
                                    [&](const S2Point& r) { return geom::distance(r, a) < 1e-6; });
      if (!seen) roots.push_back(a);
    }

  for (const auto& a : roots) {
    Witness w;
    w.parameter = a;
    const auto c = coincidence(s, a);
    w.partner = c.partner;
    w.residual = c.norm();
    w.min_singular_value = min_singular_value(jacobian(s, a));
    if (a.z() >= 0) w.disc = geom::disc_coord(a);
    if (w.min_singular_value <= opts.transversality)
      throw NonTransverseDoublePoint("coincidence map is rank deficient at " + a.to_string() +
                                     " (smallest singular value " + std::to_string(w.min_singular_value) + ")");
    rep.witnesses.push_back(w);
  }
  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = x + 1; y < roots.size(); ++y)
      if (geom::distance(roots[x], roots[y]) < 1e-3)
        throw SolverDiverged("witnesses closer than 1e-3: " + roots[x].to_string() + ", " + roots[y].to_string());
  // Each double point is seen once from each of its two preimages.
  if (roots.size() % 2 != 0)
    throw SolverDiverged("odd number of coincidence solutions (" + std::to_string(roots.size()) + ")");
  rep.count = roots.size() / 2;
  return rep;
}

int q_kkr(const ImmersedSphere& s, const SolveOptions& opts) {
  if (s.cls == "0") return 0;
  const auto rep = double_points(s, opts);
  const long v = (static_cast<long>(s.euler_number) + 2 * static_cast<long>(rep.count)) % 4;
  return static_cast<int>(v < 0 ? v + 4 : v);
}

DistinctionTable distinguish_quotients(const SolveOptions& opts) {
  DistinctionTable table;
  for (auto q : all_quotients()) {
    DistinctionRow row;
    row.quotient = to_string(q);
    if (q == Quotient::RP4SumRP4) {
      row.v2_nonzero = true;
      row.v2_source = "reference";
      row.v2_class = "nonzero";
    } else {
      const auto r = ring::build_ring(q == Quotient::S2xRP2 ? catalog::s2xrp2_ring() : catalog::s2_twisted_rp2_ring());
      const auto v2 = r.wu_class(2);
      row.v2_nonzero = !v2.is_zero();
      row.v2_source = "ring";
      row.v2_class = r.to_string(v2);
    }
    for (const std::string cls : {"x", "y", "x+y"}) {
      try {
        row.q_values.push_back(q_kkr(immersion(q, cls), opts));
      } catch (const UnsupportedImmersion&) {
        row.q_values.push_back(std::nullopt);
      }
    }
    table.rows.push_back(std::move(row));
  }
  auto differ = [](const DistinctionRow& a, const DistinctionRow& b) {
    if (a.v2_nonzero != b.v2_nonzero) return true;
    for (std::size_t i = 0; i < a.q_values.size(); ++i)
      if (a.q_values[i] && b.q_values[i] && *a.q_values[i] != *b.q_values[i]) return true;
    return false;
  };
  table.pairwise_distinct = true;
  for (std::size_t a = 0; a < table.rows.size(); ++a)
    for (std::size_t b = a + 1; b < table.rows.size(); ++b)
      if (!differ(table.rows[a], table.rows[b])) table.pairwise_distinct = false;
  return table;
}

}  // namespace s2s2::kkr
