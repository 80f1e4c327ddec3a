#include "s2s2/f2_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "s2s2/error.hpp"

namespace s2s2::ring {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream is(s);
  while (std::getline(is, token, sep)) out.push_back(trim(token));
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw PresentationError("expected an integer in " + context + ", got '" + s + "'");
  }
}

/// Cancels repeated monomials in pairs and sorts.
Polynomial normalize(Polynomial p) {
  std::sort(p.begin(), p.end());
  Polynomial out;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(p[i]);
    i = j;
  }
  return out;
}

void enumerate(const std::vector<Generator>& gens, std::size_t g, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (g == gens.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = remaining / gens[g].degree; e >= 0; --e) {
    cur[g] = e;
    enumerate(gens, g + 1, remaining - e * gens[g].degree, cur, out);
  }
  cur[g] = 0;
}

}  // namespace

// ---------------------------------------------------------------- presentation text

Presentation Presentation::parse(const std::string& text) {
  Presentation p;
  p.top_degree = -1;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    const std::string where = "line " + std::to_string(lineno);
    if (key == "gen") {
      auto parts = split(rest, ' ');
      parts.erase(std::remove(parts.begin(), parts.end(), ""), parts.end());
      if (parts.size() != 2) throw PresentationError(where + ": expected 'gen <name> <degree>'");
      p.generators.push_back({parts[0], parse_int(parts[1], where)});
    } else if (key == "rel") {
      if (rest.empty()) throw PresentationError(where + ": empty relation");
      p.relations.push_back(rest);
    } else if (key == "sq1") {
      auto sp = rest.find(' ');
      if (sp == std::string::npos) throw PresentationError(where + ": expected 'sq1 <generator> <polynomial>'");
      p.sq1[trim(rest.substr(0, sp))] = trim(rest.substr(sp + 1));
    } else if (key == "top") {
      p.top_degree = parse_int(rest, where);
    } else if (key == "fundamental") {
      p.fundamental = rest;
    } else {
      throw PresentationError(where + ": unknown keyword '" + key + "'");
    }
  }
  if (p.generators.empty()) throw PresentationError("presentation has no generators");
  if (p.top_degree < 0) throw PresentationError("presentation has no 'top' line");
  return p;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  for (const auto& g : generators) os << "gen " << g.name << ' ' << g.degree << '\n';
  for (const auto& r : relations) os << "rel " << r << '\n';
  for (const auto& [g, v] : sq1) os << "sq1 " << g << ' ' << v << '\n';
  os << "top " << top_degree << '\n';
  if (fundamental) os << "fundamental " << *fundamental << '\n';
  return os.str();
}

bool F2Class::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::uint8_t b) { return b == 0; });
}

// ---------------------------------------------------------------- construction

GradedF2Algebra::GradedF2Algebra(Presentation p) : pres_(std::move(p)) {
  if (pres_.top_degree < 0) throw PresentationError("top degree must be >= 0");
  std::set<std::string> names;
  for (const auto& g : pres_.generators) {
    if (!valid_name(g.name)) throw PresentationError("invalid generator name '" + g.name + "'");
    if (g.degree < 1) throw PresentationError("generator '" + g.name + "' must have positive degree");
    if (!names.insert(g.name).second) throw PresentationError("duplicate generator '" + g.name + "'");
  }
  const std::size_t ng = pres_.generators.size();

  std::vector<std::pair<int, Polynomial>> relations;
  for (const auto& text : pres_.relations) {
    Polynomial r = parse_polynomial(text);
    if (r.empty()) continue;
    int d = monomial_degree(r.front());
    for (const auto& m : r)
      if (monomial_degree(m) != d) throw PresentationError("relation '" + text + "' is not homogeneous");
    relations.emplace_back(d, std::move(r));
  }

  degrees_.resize(static_cast<std::size_t>(pres_.top_degree) + 1);
  for (int d = 0; d <= pres_.top_degree; ++d) {
    auto& data = degrees_[d];
    Monomial cur(ng, 0);
    enumerate(pres_.generators, 0, d, cur, data.monomials);
    for (std::size_t i = 0; i < data.monomials.size(); ++i) data.monomial_index[data.monomials[i]] = i;

    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& [rd, rel] : relations) {
      if (rd > d) continue;
      for (const auto& mult : degrees_[d - rd].monomials) {
        std::vector<std::uint8_t> row(data.monomials.size(), 0);
        for (const auto& term : rel) {
          Monomial prod = term;
          for (std::size_t g = 0; g < ng; ++g) prod[g] += mult[g];
          row[data.monomial_index.at(prod)] ^= 1;
        }
        rows.push_back(std::move(row));
      }
    }
    linalg::F2Matrix m(rows.size(), data.monomials.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    auto ech = linalg::f2_row_reduce(m);
    data.pivots = ech.pivots;
    data.relations_rref = linalg::F2Matrix(ech.pivots.size(), data.monomials.size());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      for (std::size_t c = 0; c < data.monomials.size(); ++c) data.relations_rref.set(r, c, ech.reduced(r, c));
    std::vector<bool> is_pivot(data.monomials.size(), false);
    for (auto pc : ech.pivots) is_pivot[pc] = true;
    for (std::size_t c = 0; c < data.monomials.size(); ++c)
      if (!is_pivot[c]) {
        data.standard.push_back(c);
        data.basis.push_back(data.monomials[c]);
      }
  }
  if (degrees_[0].basis.empty()) throw InconsistentPresentation("relations force 1 = 0");

  sq1_.resize(ng);
  for (const auto& [name, text] : pres_.sq1) {
    auto it = std::find_if(pres_.generators.begin(), pres_.generators.end(),
                           [&](const Generator& g) { return g.name == name; });
    if (it == pres_.generators.end()) throw PresentationError("sq1 given for unknown generator '" + name + "'");
    std::size_t g = static_cast<std::size_t>(it - pres_.generators.begin());
    Polynomial v = parse_polynomial(text);
    for (const auto& m : v)
      if (monomial_degree(m) != it->degree + 1)
        throw PresentationError("sq1 of '" + name + "' must have degree " + std::to_string(it->degree + 1));
    sq1_[g] = std::move(v);
  }
  for (std::size_t g = 0; g < ng; ++g) {
    if (pres_.generators[g].degree != 1) continue;
    Monomial sq(ng, 0);
    sq[g] = 2;
    if (pres_.sq1.count(pres_.generators[g].name) && reduce(sq1_[g]) != reduce(Polynomial{sq}))
      throw InconsistentPresentation("Sq^1 of degree-1 generator '" + pres_.generators[g].name +
                                     "' must be its square");
    sq1_[g] = Polynomial{sq};
  }

  if (pres_.fundamental) {
    Polynomial f = parse_polynomial(*pres_.fundamental);
    if (f.size() != 1 || monomial_degree(f.front()) != pres_.top_degree)
      throw PresentationError("fundamental class must be a single monomial of the top degree");
    if (dimension(pres_.top_degree) != 1)
      throw InconsistentPresentation("fundamental class needs a one-dimensional top degree, got dimension " +
                                     std::to_string(dimension(pres_.top_degree)));
    F2Class c = reduce(f);
    if (c.is_zero()) throw InconsistentPresentation("fundamental class reduces to zero");
    fundamental_ = c;
  }
}

GradedF2Algebra build_ring(const Presentation& p) { return GradedF2Algebra(p); }
GradedF2Algebra build_ring(const std::string& text) { return GradedF2Algebra(Presentation::parse(text)); }

// ---------------------------------------------------------------- basis and parsing

const F2Class& GradedF2Algebra::fundamental_class() const {
  if (!fundamental_) throw SingularPairing("ring has no fundamental class");
  return *fundamental_;
}

std::size_t GradedF2Algebra::dimension(int degree) const {
  if (degree < 0 || degree > pres_.top_degree) return 0;
  return degrees_[degree].basis.size();
}

std::vector<std::size_t> GradedF2Algebra::dimensions() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= pres_.top_degree; ++d) out.push_back(dimension(d));
  return out;
}

const std::vector<Monomial>& GradedF2Algebra::basis(int degree) const {
  static const std::vector<Monomial> empty;
  if (degree < 0 || degree > pres_.top_degree) return empty;
  return degrees_[degree].basis;
}

int GradedF2Algebra::monomial_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t g = 0; g < m.size(); ++g) d += m[g] * pres_.generators[g].degree;
  return d;
}

std::string GradedF2Algebra::monomial_name(const Monomial& m) const {
  std::string s;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!s.empty()) s += '*';
    s += pres_.generators[g].name;
    if (m[g] > 1) s += '^' + std::to_string(m[g]);
  }
  return s.empty() ? "1" : s;
}

Polynomial GradedF2Algebra::parse_polynomial(const std::string& text) const {
  Polynomial out;
  const std::size_t ng = pres_.generators.size();
  for (const auto& term : split(text, '+')) {
    if (term.empty()) throw PresentationError("empty term in '" + text + "'");
    if (term == "0") continue;
    Monomial m(ng, 0);
    if (term != "1") {
      for (const auto& factor : split(term, '*')) {
        auto caret = factor.find('^');
        std::string name = trim(factor.substr(0, caret));
        int e = caret == std::string::npos ? 1 : parse_int(trim(factor.substr(caret + 1)), "'" + text + "'");
        if (e < 0) throw PresentationError("negative exponent in '" + text + "'");
        auto it = std::find_if(pres_.generators.begin(), pres_.generators.end(),
                               [&](const Generator& g) { return g.name == name; });
        if (it == pres_.generators.end()) throw PresentationError("unknown generator '" + name + "' in '" + text + "'");
        m[static_cast<std::size_t>(it - pres_.generators.begin())] += e;
      }
    }
    out.push_back(std::move(m));
  }
  return normalize(std::move(out));
}

F2Class GradedF2Algebra::zero(int degree) const {
  if (degree < 0) throw Error("negative degree");
  return F2Class{degree, std::vector<std::uint8_t>(dimension(degree), 0)};
}

F2Class GradedF2Algebra::one() const { return basis_element(0, 0); }

F2Class GradedF2Algebra::basis_element(int degree, std::size_t index) const {
  F2Class c = zero(degree);
  if (index >= c.coords.size()) throw Error("basis index out of range");
  c.coords[index] = 1;
  return c;
}

F2Class GradedF2Algebra::generator(std::size_t index) const {
  Monomial m(pres_.generators.size(), 0);
  m.at(index) = 1;
  return reduce(Polynomial{m});
}

F2Class GradedF2Algebra::generator(const std::string& name) const {
  for (std::size_t g = 0; g < pres_.generators.size(); ++g)
    if (pres_.generators[g].name == name) return generator(g);
  throw PresentationError("unknown generator '" + name + "'");
}

F2Class GradedF2Algebra::reduce(const Polynomial& p) const {
  Polynomial q = normalize(p);
  if (q.empty()) return zero(0);
  const int d = monomial_degree(q.front());
  for (const auto& m : q)
    if (monomial_degree(m) != d) throw PresentationError("class is not homogeneous");
  if (d > pres_.top_degree) return zero(d);
  const auto& data = degrees_[d];
  std::vector<std::uint8_t> v(data.monomials.size(), 0);
  for (const auto& m : q) v[data.monomial_index.at(m)] ^= 1;
  for (std::size_t r = 0; r < data.pivots.size(); ++r)
    if (v[data.pivots[r]])
      for (std::size_t c = 0; c < v.size(); ++c) v[c] ^= data.relations_rref(r, c);
  F2Class out{d, {}};
  for (auto c : data.standard) out.coords.push_back(v[c]);
  return out;
}

F2Class GradedF2Algebra::parse_class(const std::string& text) const { return reduce(parse_polynomial(text)); }

Polynomial GradedF2Algebra::lift(const F2Class& c) const {
  Polynomial out;
  const auto& b = basis(c.degree);
  for (std::size_t i = 0; i < c.coords.size(); ++i)
    if (c.coords[i]) out.push_back(b[i]);
  return out;
}

std::string GradedF2Algebra::to_string(const F2Class& c) const {
  std::string s;
  for (const auto& m : lift(c)) s += (s.empty() ? "" : " + ") + monomial_name(m);
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- products

F2Class GradedF2Algebra::add(const F2Class& a, const F2Class& b) const {
  if (a.degree != b.degree) throw Error("cannot add classes of different degrees");
  F2Class out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] ^= b.coords[i];
  return out;
}

F2Class GradedF2Algebra::multiply(const F2Class& a, const F2Class& b) const {
  const int d = a.degree + b.degree;
  if (d > pres_.top_degree) return zero(d);
  Polynomial prod;
  for (const auto& x : lift(a))
    for (const auto& y : lift(b)) {
      Monomial m = x;
      for (std::size_t g = 0; g < m.size(); ++g) m[g] += y[g];
      prod.push_back(std::move(m));
    }
  F2Class out = reduce(prod);
  out.degree = d;
  if (out.coords.size() != dimension(d)) out = zero(d);
  return out;
}

F2Class GradedF2Algebra::cup(const F2Class& a, const F2Class& b) const {
  if (a.degree + b.degree > pres_.top_degree)
    throw DegreeOverflow("cup product lands in degree " + std::to_string(a.degree + b.degree) +
                         " above the top degree " + std::to_string(pres_.top_degree));
  return multiply(a, b);
}

F2Class GradedF2Algebra::power(const F2Class& a, int n) const {
  F2Class out = one();
  for (int i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

// ---------------------------------------------------------------- Steenrod squares

F2Class GradedF2Algebra::sq_generator(int i, std::size_t g) const {
  const int deg = pres_.generators[g].degree;
  F2Class x = generator(g);
  if (i == 0) return x;
  if (i > deg) return zero(deg + i);
  if (i == deg) return multiply(x, x);
  if (i == 1) {
    F2Class v = reduce(sq1_[g]);
    return sq1_[g].empty() ? zero(deg + 1) : v;
  }
  return zero(deg + i);
}

F2Class GradedF2Algebra::sq_monomial(int i, const Monomial& m) const {
  const int d = monomial_degree(m);
  auto g = std::find_if(m.begin(), m.end(), [](int e) { return e > 0; });
  if (g == m.end()) return i == 0 ? one() : zero(i);
  const std::size_t gi = static_cast<std::size_t>(g - m.begin());
  Monomial rest = m;
  --rest[gi];
  // Cartan: Sq^i(x * rest) = sum_j Sq^j x * Sq^{i-j} rest
  F2Class out = zero(d + i);
  for (int j = 0; j <= i; ++j) out = add(out, multiply(sq_generator(j, gi), sq_monomial(i - j, rest)));
  return out;
}

F2Class GradedF2Algebra::sq(int i, const F2Class& a) const {
  if (i < 0) throw Error("negative Steenrod square");
  F2Class out = zero(a.degree + i);
  for (const auto& m : lift(a)) out = add(out, sq_monomial(i, m));
  return out;
}

// ---------------------------------------------------------------- duality

int GradedF2Algebra::evaluate(const F2Class& c) const {
  const F2Class& f = fundamental_class();
  if (c.degree != pres_.top_degree) throw Error("evaluation needs a top-degree class");
  // The top degree is one-dimensional and f is its nonzero element.
  (void)f;
  return c.coords.empty() ? 0 : c.coords[0];
}

linalg::F2Matrix GradedF2Algebra::pairing_matrix(int k) const {
  const int n = pres_.top_degree;
  linalg::F2Matrix m(dimension(k), dimension(n - k));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.set(i, j, evaluate(cup(basis_element(k, i), basis_element(n - k, j))));
  return m;
}

bool GradedF2Algebra::poincare_duality() const {
  if (!fundamental_) return false;
  for (int k = 0; k <= pres_.top_degree; ++k) {
    auto m = pairing_matrix(k);
    if (m.rows() != m.cols() || linalg::f2_rank(m) != m.rows()) return false;
  }
  return true;
}

F2Class GradedF2Algebra::wu_class(int k) const {
  const int n = pres_.top_degree;
  if (!fundamental_) throw SingularPairing("Wu classes need a fundamental class");
  if (k < 0 || k > n) throw Error("Wu class index out of range");
  auto p = pairing_matrix(k);
  if (p.rows() != p.cols() || linalg::f2_rank(p) != p.rows())
    throw SingularPairing("pairing between degrees " + std::to_string(k) + " and " + std::to_string(n - k) +
                          " is degenerate");
  // sum_i v_i <b_i y_j> = <Sq^k y_j> for every basis element y_j of degree n-k
  std::vector<std::uint8_t> rhs(dimension(n - k));
  for (std::size_t j = 0; j < rhs.size(); ++j)
    rhs[j] = static_cast<std::uint8_t>(evaluate(sq(k, basis_element(n - k, j))));
  std::vector<std::uint8_t> v;
  if (!linalg::f2_solve(p.transpose(), rhs, v)) throw SingularPairing("Wu equation has no solution");
  return F2Class{k, v};
}

GradedF2Algebra GradedF2Algebra::truncated(int k) const {
  Presentation p = pres_;
  p.top_degree = k;
  p.fundamental.reset();
  return GradedF2Algebra(std::move(p));
}

// ---------------------------------------------------------------- isomorphism

namespace {

std::vector<F2Class> all_classes(const GradedF2Algebra& r, int degree) {
  const std::size_t dim = r.dimension(degree);
  std::vector<F2Class> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << dim); ++bits) {
    F2Class c = r.zero(degree);
    for (std::size_t i = 0; i < dim; ++i) c.coords[i] = (bits >> i) & 1;
    out.push_back(std::move(c));
  }
  return out;
}

F2Class image_of_monomial(const GradedF2Algebra& target, const Monomial& m, const std::vector<F2Class>& images) {
  F2Class out = target.one();
  for (std::size_t g = 0; g < m.size(); ++g)
    for (int e = 0; e < m[g]; ++e) out = target.multiply(out, images[g]);
  return out;
}

}  // namespace

IsomorphismResult ring_isomorphic(const GradedF2Algebra& a, const GradedF2Algebra& b) {
  IsomorphismResult result;
  const int top = std::max(a.top_degree(), b.top_degree());
  for (int d = 0; d <= top; ++d)
    if (a.dimension(d) != b.dimension(d)) {
      result.reason = "dimensions differ in degree " + std::to_string(d) + " (" + std::to_string(a.dimension(d)) +
                      " vs " + std::to_string(b.dimension(d)) + ")";
      return result;
    }

  const auto& gens = a.generators();
  std::vector<std::vector<F2Class>> candidates;
  std::size_t total = 1;
  for (const auto& g : gens) {
    candidates.push_back(all_classes(b, g.degree));
    total *= candidates.back().size();
    if (total > (std::size_t{1} << 24)) throw Error("ring_isomorphic: search space too large");
  }

  std::vector<Polynomial> relations;
  for (const auto& text : a.presentation().relations) relations.push_back(a.parse_polynomial(text));

  std::vector<F2Class> images(gens.size());
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rem = code;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      images[g] = candidates[g][rem % candidates[g].size()];
      rem /= candidates[g].size();
    }
    bool ok = true;
    for (const auto& rel : relations) {
      if (rel.empty()) continue;
      F2Class sum = image_of_monomial(b, rel.front(), images);
      for (std::size_t t = 1; t < rel.size(); ++t) sum = b.add(sum, image_of_monomial(b, rel[t], images));
      if (!sum.is_zero()) {
        ok = false;
        break;
      }
    }
    for (int d = 0; ok && d <= a.top_degree(); ++d) {
      const auto& basis = a.basis(d);
      linalg::F2Matrix m(b.dimension(d), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        F2Class img = image_of_monomial(b, basis[c], images);
        for (std::size_t r = 0; r < img.coords.size(); ++r) m.set(r, c, img.coords[r]);
      }
      if (linalg::f2_rank(m) != basis.size()) ok = false;
    }
    if (ok) {
      result.isomorphic = true;
      result.generator_images = images;
      result.reason = "generator assignment found";
      return result;
    }
  }
  result.reason = "no degree-preserving generator assignment is a ring isomorphism (" + std::to_string(total) +
                  " candidates checked)";
  return result;
}

}  // namespace s2s2::ring
