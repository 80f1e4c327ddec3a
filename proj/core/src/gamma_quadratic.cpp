#include "s2s2/gamma_quadratic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "s2s2/error.hpp"

namespace s2s2::gamma {

namespace {

std::size_t bracket_index(std::size_t n, std::size_t i, std::size_t j) {
  // position of [ei,ej], i < j, after the n gamma entries
  std::size_t idx = n;
  for (std::size_t a = 0; a < i; ++a) idx += n - 1 - a;
  return idx + (j - i - 1);
}

IntMatrix twisted(const IntMatrix& a, int w) {
  IntMatrix out = a;
  if (w < 0)
    for (std::size_t r = 0; r < out.rows(); ++r) out.negate_row(r);
  return out;
}

std::string vector_label(const std::vector<std::string>& labels, const IntMatrix& col) {
  std::string s;
  for (std::size_t i = 0; i < col.rows(); ++i) {
    const Integer& c = col(i, 0);
    if (sgn(c) == 0) continue;
    if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) s += "-";
    Integer m = abs(c);
    if (m != 1) s += m.get_str() + "*";
    s += labels[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::vector<std::string> gamma_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("gamma(e" + std::to_string(i + 1) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back("[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "]");
  return out;
}

IntMatrix induced_matrix(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("induced_matrix: matrix must be square");
  const std::size_t n = a.rows();
  const std::size_t big = n * (n + 1) / 2;
  IntMatrix out(big, big);
  // gamma(A e_k) = sum_i a_ik^2 gamma(e_i) + sum_{i<j} a_ik a_jk [e_i,e_j]
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) out(i, k) = a(i, k) * a(i, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out(bracket_index(n, i, j), k) = a(i, k) * a(j, k);
  }
  // [A e_k, A e_l], with [e_i,e_i] = 2 gamma(e_i) and [e_j,e_i] = [e_i,e_j]
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      const std::size_t col = bracket_index(n, k, l);
      for (std::size_t i = 0; i < n; ++i) out(i, col) = 2 * a(i, k) * a(i, l);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          out(bracket_index(n, i, j), col) = a(i, k) * a(j, l) + a(j, k) * a(i, l);
    }
  return out;
}

GammaModule gamma_functor(const homalg::FiniteAbelianGroup& g, const homalg::GroupModule& m,
                          std::vector<int> orientation) {
  if (sgn(m.modulus) != 0) throw Error("gamma_functor: module must be free over Z");
  if (std::any_of(m.weight.begin(), m.weight.end(), [](int w) { return w != 1; }))
    throw Error("gamma_functor: pass the orientation character separately, not as a module twist");
  m.validate(g);
  homalg::GroupModule::twisted_integers(g, orientation).validate(g);
  GammaModule gm{g, m, gamma_labels(m.rank), {}, std::move(orientation)};
  for (const auto& a : m.actions) gm.actions.push_back(induced_matrix(a));
  return gm;
}

namespace {

IntMatrix coinvariant_relations(const GammaModule& gm) {
  IntMatrix rel(gm.rank(), 0);
  for (std::size_t i = 0; i < gm.actions.size(); ++i)
    rel = rel.hstack(twisted(gm.actions[i], gm.weight[i]) - IntMatrix::identity(gm.rank()));
  return rel;
}

}  // namespace

AbelianInvariants twisted_coinvariants(const GammaModule& gm) {
  return linalg::cokernel_invariants(coinvariant_relations(gm));
}

PolarizationOrbitReport torsion_orbit_count(const GammaModule& gm, const std::vector<Symmetry>& symmetries) {
  const std::size_t n = gm.base.rank;
  const auto& g = gm.group;

  // Each symmetry must conjugate every generator to an element of the same weight.
  std::vector<IntMatrix> element_actions;
  std::vector<int> element_weights;
  for (std::size_t e = 0; e < g.order(); ++e) {
    homalg::GroupModule untwisted = gm.base;
    std::fill(untwisted.weight.begin(), untwisted.weight.end(), 1);
    element_actions.push_back(untwisted.element_action(g, e));
    int w = 1;
    auto ex = g.element(e);
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (gm.weight[i] < 0 && ex[i] % 2 != 0) w = -w;
    element_weights.push_back(w);
  }
  for (const auto& s : symmetries) {
    if (s.matrix.rows() != n || s.matrix.cols() != n)
      throw SymmetryNotInduced("symmetry '" + s.name + "' has the wrong shape");
    IntMatrix inv;
    try {
      inv = linalg::unimodular_inverse(s.matrix);
    } catch (const Error&) {
      throw SymmetryNotInduced("symmetry '" + s.name + "' is not invertible over Z");
    }
    for (std::size_t i = 0; i < gm.actions.size(); ++i) {
      IntMatrix conj = s.matrix * gm.base.actions[i] * inv;
      bool found = false;
      for (std::size_t e = 0; e < element_actions.size() && !found; ++e)
        found = element_actions[e] == conj && element_weights[e] == gm.weight[i];
      if (!found)
        throw SymmetryNotInduced("symmetry '" + s.name + "' does not normalize the action of generator " +
                                 std::to_string(i + 1));
    }
  }

  const IntMatrix rel = coinvariant_relations(gm);
  const auto snf = linalg::smith_normal_form(rel);
  const IntMatrix u_inv = linalg::unimodular_inverse(snf.u);
  const std::size_t big = gm.rank();

  std::vector<std::size_t> torsion_rows;
  std::vector<Integer> orders;
  std::vector<bool> is_free(big, true);
  for (std::size_t i = 0; i < big; ++i) {
    Integer d = i < std::min(rel.rows(), rel.cols()) ? snf.d(i, i) : Integer(0);
    if (sgn(d) != 0) is_free[i] = false;
    if (d > 1) {
      torsion_rows.push_back(i);
      orders.push_back(d);
    }
  }

  PolarizationOrbitReport report;
  report.torsion = AbelianInvariants::from_cyclic_orders(orders);
  for (const auto& s : symmetries) report.symmetries.push_back(s.name);
  for (auto r : torsion_rows) {
    IntMatrix col = u_inv.block(0, r, big, 1);
    for (std::size_t i = 0; i < big; ++i) {
      if (sgn(col(i, 0)) == 0) continue;
      if (sgn(col(i, 0)) < 0)
        for (std::size_t j = 0; j < big; ++j) col.negate_row(j);
      break;
    }
    report.torsion_generators.push_back(vector_label(gm.labels, col));
  }

  std::size_t count = 1;
  for (const auto& o : orders) {
    if (!o.fits_ulong_p() || o.get_ui() > 4096) throw Error("torsion_orbit_count: torsion subgroup too large");
    count *= o.get_ui();
    if (count > (1u << 20)) throw Error("torsion_orbit_count: torsion subgroup too large");
  }

  auto decode = [&](std::size_t idx) {
    std::vector<Integer> c(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      c[i] = static_cast<unsigned long>(idx % orders[i].get_ui());
      idx /= orders[i].get_ui();
    }
    return c;
  };
  auto encode = [&](const std::vector<Integer>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i].get_ui() + c[i].get_ui();
    return idx;
  };

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& s : symmetries) {
    // Action on the cokernel in SNF coordinates.
    const IntMatrix t = snf.u * induced_matrix(s.matrix) * u_inv;
    for (std::size_t idx = 0; idx < count; ++idx) {
      auto c = decode(idx);
      IntMatrix x(big, 1);
      for (std::size_t i = 0; i < torsion_rows.size(); ++i) x(torsion_rows[i], 0) = c[i];
      IntMatrix y = t * x;
      for (std::size_t i = 0; i < big; ++i)
        if (is_free[i] && sgn(y(i, 0)) != 0)
          throw SymmetryNotInduced("symmetry '" + s.name + "' does not preserve the torsion subgroup");
      std::vector<Integer> img(orders.size());
      for (std::size_t i = 0; i < torsion_rows.size(); ++i) {
        Integer r = y(torsion_rows[i], 0) % orders[i];
        if (sgn(r) < 0) r += orders[i];
        img[i] = r;
      }
      parent[find(idx)] = find(encode(img));
    }
  }

  std::vector<std::vector<std::vector<Integer>>> orbits;
  std::vector<long> orbit_of_root(count, -1);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t root = find(idx);
    if (orbit_of_root[root] < 0) {
      orbit_of_root[root] = static_cast<long>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(orbit_of_root[root])].push_back(decode(idx));
  }
  report.orbits = std::move(orbits);
  return report;
}

}  // namespace s2s2::gamma
