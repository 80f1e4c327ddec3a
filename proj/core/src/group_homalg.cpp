#include "s2s2/group_homalg.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "s2s2/error.hpp"

namespace s2s2::homalg {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (int n : orders_)
    if (n < 2) throw Error("FiniteAbelianGroup: cyclic orders must be >= 2");
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
  if (text == "1" || text == "trivial" || text.empty()) return trivial();
  std::vector<int> orders;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, 'x')) {
    if (token.size() < 2 || token[0] != 'Z') throw Error("cannot parse group '" + text + "'");
    auto caret = token.find('^');
    int n = 0, k = 1;
    try {
      std::size_t used = 0;
      const auto order = token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
      n = std::stoi(order, &used);
      if (used != order.size()) throw std::invalid_argument(order);
      if (caret != std::string::npos) {
        const auto power = token.substr(caret + 1);
        k = std::stoi(power, &used);
        if (used != power.size()) throw std::invalid_argument(power);
      }
    } catch (const std::logic_error&) {
      throw Error("cannot parse group '" + text + "'");
    }
    if (n < 1 || k < 0) throw Error("cannot parse group '" + text + "'");
    for (int i = 0; i < k; ++i) orders.push_back(n);
  }
  return FiniteAbelianGroup(std::move(orders));
}

std::size_t FiniteAbelianGroup::order() const {
  return std::accumulate(orders_.begin(), orders_.end(), std::size_t{1},
                         [](std::size_t a, int n) { return a * static_cast<std::size_t>(n); });
}

std::vector<int> FiniteAbelianGroup::element(std::size_t index) const {
  std::vector<int> e(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    e[i] = static_cast<int>(index % orders_[i]);
    index /= orders_[i];
  }
  return e;
}

std::size_t FiniteAbelianGroup::index(const std::vector<int>& exponents) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int e = ((exponents[i] % orders_[i]) + orders_[i]) % orders_[i];
    idx = idx * orders_[i] + static_cast<std::size_t>(e);
  }
  return idx;
}

std::size_t FiniteAbelianGroup::multiply(std::size_t a, std::size_t b) const {
  auto ea = element(a);
  auto eb = element(b);
  for (std::size_t i = 0; i < ea.size(); ++i) ea[i] += eb[i];
  return index(ea);
}

std::size_t FiniteAbelianGroup::inverse(std::size_t a) const {
  auto e = element(a);
  for (auto& x : e) x = -x;
  return index(e);
}

std::string FiniteAbelianGroup::to_string() const {
  if (orders_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += 'x';
    s += "Z" + std::to_string(orders_[i]);
  }
  return s;
}

// ---------------------------------------------------------------- modules

GroupModule GroupModule::trivial_integers(const FiniteAbelianGroup& g) {
  return twisted_integers(g, std::vector<int>(g.generator_count(), 1));
}

GroupModule GroupModule::twisted_integers(const FiniteAbelianGroup& g, std::vector<int> weight) {
  GroupModule m;
  m.rank = 1;
  m.actions.assign(g.generator_count(), IntMatrix::identity(1));
  m.weight = std::move(weight);
  return m;
}

GroupModule GroupModule::trivial_cyclic(const FiniteAbelianGroup& g, long modulus) {
  GroupModule m = trivial_integers(g);
  m.modulus = modulus;
  return m;
}

GroupModule GroupModule::from_actions(std::vector<IntMatrix> actions, std::vector<int> weight) {
  GroupModule m;
  m.rank = actions.empty() ? 0 : actions.front().rows();
  if (weight.empty()) weight.assign(actions.size(), 1);
  m.actions = std::move(actions);
  m.weight = std::move(weight);
  return m;
}

namespace {

IntMatrix matrix_power(const IntMatrix& a, int k) {
  IntMatrix out = IntMatrix::identity(a.rows());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

bool congruent(const IntMatrix& a, const IntMatrix& b, const Integer& modulus) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  IntMatrix diff = a - b;
  for (std::size_t r = 0; r < diff.rows(); ++r)
    for (std::size_t c = 0; c < diff.cols(); ++c) {
      if (sgn(modulus) == 0) {
        if (sgn(diff(r, c)) != 0) return false;
      } else if (!mpz_divisible_p(diff(r, c).get_mpz_t(), modulus.get_mpz_t())) {
        return false;
      }
    }
  return true;
}

}  // namespace

IntMatrix GroupModule::element_action(const FiniteAbelianGroup& g, std::size_t element) const {
  auto e = g.element(element);
  IntMatrix out = IntMatrix::identity(rank);
  int sign = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    out = out * matrix_power(actions[i], e[i]);
    if (weight[i] < 0 && (e[i] % 2) != 0) sign = -sign;
  }
  if (sign < 0)
    for (std::size_t r = 0; r < rank; ++r) out.negate_row(r);
  return out;
}

IntMatrix GroupModule::ring_action(const FiniteAbelianGroup& g, const GroupRingElement& a) const {
  IntMatrix out(rank, rank);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    IntMatrix act = element_action(g, x);
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < rank; ++c) out(r, c) += Integer(a[x]) * act(r, c);
  }
  return out;
}

void GroupModule::validate(const FiniteAbelianGroup& g) const {
  if (actions.size() != g.generator_count() || weight.size() != g.generator_count())
    throw Error("GroupModule: need one action matrix and one weight per generator");
  const auto& orders = g.cyclic_orders();
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& a = actions[i];
    if (a.rows() != rank || a.cols() != rank) throw Error("GroupModule: action matrix has wrong shape");
    if (sgn(modulus) == 0 && abs(linalg::determinant(a)) != 1)
      throw Error("GroupModule: action matrix not invertible over Z");
    if (!congruent(matrix_power(a, orders[i]), IntMatrix::identity(rank), modulus))
      throw Error("GroupModule: action does not respect the generator order");
    if (weight[i] != 1 && weight[i] != -1) throw Error("GroupModule: weights must be +1 or -1");
    if (weight[i] == -1 && orders[i] % 2 != 0) throw Error("GroupModule: weight is not a homomorphism");
    for (std::size_t j = i + 1; j < actions.size(); ++j)
      if (!congruent(a * actions[j], actions[j] * a, modulus))
        throw Error("GroupModule: action matrices do not commute");
  }
}

// ---------------------------------------------------------------- resolutions

IntMatrix regular_matrix(const FiniteAbelianGroup& g, const GroupRingElement& a) {
  const std::size_t n = g.order();
  IntMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    for (std::size_t h = 0; h < n; ++h) m(g.multiply(x, h), h) += a[x];
  }
  return m;
}

IntMatrix ResolutionSegment::regular_boundary(std::size_t k) const {
  const std::size_t n = group.order();
  if (k == 0) return IntMatrix(0, ranks[0] * n);
  IntMatrix out(ranks[k - 1] * n, ranks[k] * n);
  for (std::size_t i = 0; i < ranks[k - 1]; ++i)
    for (std::size_t j = 0; j < ranks[k]; ++j) out.set_block(i * n, j * n, regular_matrix(group, boundaries[k][i][j]));
  return out;
}

namespace {

void enumerate_multi_indices(std::size_t slots, std::size_t total, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == slots) {
    cur.push_back(static_cast<int>(total));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t first = total + 1; first-- > 0;) {
    cur.push_back(static_cast<int>(first));
    enumerate_multi_indices(slots, total - first, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> multi_indices(std::size_t slots, std::size_t total) {
  std::vector<std::vector<int>> out;
  if (slots == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  enumerate_multi_indices(slots, total, cur, out);
  return out;
}

ResolutionSegment build_resolution(const FiniteAbelianGroup& g, std::size_t length) {
  const std::size_t order = g.order();
  const std::size_t m = g.generator_count();
  ResolutionSegment res;
  res.group = g;

  // Factor boundaries: (t_i - 1) in odd degree, the norm N_i in even degree.
  std::vector<GroupRingElement> diff_odd(m, GroupRingElement(order, 0));
  std::vector<GroupRingElement> norm(m, GroupRingElement(order, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> e(m, 0);
    diff_odd[i][g.index(e)] -= 1;
    e[i] = 1;
    diff_odd[i][g.index(e)] += 1;
    for (int p = 0; p < g.cyclic_orders()[i]; ++p) {
      e[i] = p;
      norm[i][g.index(e)] += 1;
    }
  }

  std::vector<std::vector<std::vector<int>>> bases;
  for (std::size_t k = 0; k <= length; ++k) {
    bases.push_back(multi_indices(m, k));
    res.ranks.push_back(bases.back().size());
  }
  res.boundaries.resize(length + 1);
  for (std::size_t k = 1; k <= length; ++k) {
    std::map<std::vector<int>, std::size_t> target_index;
    for (std::size_t i = 0; i < bases[k - 1].size(); ++i) target_index[bases[k - 1][i]] = i;
    auto& d = res.boundaries[k];
    d.assign(res.ranks[k - 1], std::vector<GroupRingElement>(res.ranks[k], GroupRingElement(order, 0)));
    for (std::size_t col = 0; col < bases[k].size(); ++col) {
      const auto& idx = bases[k][col];
      int preceding = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (idx[i] >= 1) {
          auto target = idx;
          --target[i];
          std::size_t row = target_index.at(target);
          const auto& factor = (idx[i] % 2 == 1) ? diff_odd[i] : norm[i];
          const long sign = (preceding % 2 == 0) ? 1 : -1;  // Koszul sign
          for (std::size_t x = 0; x < order; ++x) d[row][col][x] += sign * factor[x];
        }
        preceding += idx[i];
      }
    }
  }
  return res;
}

void check_resolution(const ResolutionSegment& res) {
  const std::size_t len = res.length();
  for (std::size_t k = 1; k < len; ++k)
    if (!(res.regular_boundary(k) * res.regular_boundary(k + 1)).is_zero())
      throw Error("resolution: d o d != 0 at degree " + std::to_string(k));
  if (len >= 1) {
    if (linalg::cokernel_invariants(res.regular_boundary(1)) != AbelianInvariants::z())
      throw Error("resolution: H_0 is not Z");
  }
  for (std::size_t k = 1; k < len; ++k) {
    auto h = linalg::subquotient_invariants(res.regular_boundary(k + 1), res.regular_boundary(k));
    if (!h.is_trivial()) throw Error("resolution: not exact at degree " + std::to_string(k));
  }
}

}  // namespace

std::shared_ptr<const ResolutionSegment> resolution(const FiniteAbelianGroup& g, std::size_t length) {
  if (length < 1) throw Error("resolution: length must be >= 1");
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::size_t>, std::shared_ptr<const ResolutionSegment>> cache;
  const auto key = std::make_pair(g.cyclic_orders(), length);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto res = std::make_shared<const ResolutionSegment>(build_resolution(g, length));
  check_resolution(*res);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(res)).first->second;
}

// ---------------------------------------------------------------- (co)homology

IntMatrix cochain_differential(const ResolutionSegment& res, const GroupModule& m, std::size_t k) {
  const std::size_t r = m.rank;
  if (k == 0) return IntMatrix(res.ranks[0] * r, 0);
  IntMatrix out(res.ranks[k] * r, res.ranks[k - 1] * r);
  // (delta phi)(e_j) = phi(d e_j) = sum_i a_ij . phi(e_i)
  for (std::size_t i = 0; i < res.ranks[k - 1]; ++i)
    for (std::size_t j = 0; j < res.ranks[k]; ++j)
      out.set_block(j * r, i * r, m.ring_action(res.group, res.boundaries[k][i][j]));
  return out;
}

IntMatrix chain_differential(const ResolutionSegment& res, const GroupModule& m, std::size_t k) {
  const std::size_t r = m.rank;
  if (k == 0) return IntMatrix(0, res.ranks[0] * r);
  IntMatrix out(res.ranks[k - 1] * r, res.ranks[k] * r);
  const auto& g = res.group;
  for (std::size_t i = 0; i < res.ranks[k - 1]; ++i)
    for (std::size_t j = 0; j < res.ranks[k]; ++j) {
      // F is a right module via f.g = g^{-1} f, so the coefficient is conjugated.
      const auto& a = res.boundaries[k][i][j];
      GroupRingElement conj(a.size(), 0);
      for (std::size_t x = 0; x < a.size(); ++x) conj[g.inverse(x)] += a[x];
      out.set_block(i * r, j * r, m.ring_action(g, conj));
    }
  return out;
}

AbelianInvariants group_cohomology(const FiniteAbelianGroup& g, const GroupModule& m, std::size_t n) {
  m.validate(g);
  auto res = resolution(g, n + 1);
  return linalg::subquotient_invariants_mod(cochain_differential(*res, m, n), cochain_differential(*res, m, n + 1),
                                            m.modulus);
}

AbelianInvariants group_homology(const FiniteAbelianGroup& g, const GroupModule& m, std::size_t n) {
  m.validate(g);
  auto res = resolution(g, n + 1);
  return linalg::subquotient_invariants_mod(chain_differential(*res, m, n + 1), chain_differential(*res, m, n),
                                            m.modulus);
}

}  // namespace s2s2::homalg
