#include "s2s2/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "s2s2/error.hpp"

namespace s2s2::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (right.rows_ != rows_) throw Error("hstack: row mismatch");
  IntMatrix out(rows_, cols_ + right.cols_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, right);
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (below.cols_ != cols_) throw Error("vstack: column mismatch");
  IntMatrix out(rows_ + below.rows_, cols_);
  out.set_block(0, 0, *this);
  out.set_block(rows_, 0, below);
  return out;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("IntMatrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("IntMatrix sum: dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("IntMatrix difference: dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).get_str();
    }
  }
  os << ']';
  return os.str();
}

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
  return diag;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (sgn(x) != 0) ++r;
  return r;
}

namespace {

struct SnfWork {
  IntMatrix d, u, v, v_inv;
};

// Pivot rule: smallest nonzero |entry| in the trailing block, ties broken by
// lowest row then lowest column.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = k; i < d.rows(); ++i)
    for (std::size_t j = k; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      Integer a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

SnfWork snf_with_inverse(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols())};
  IntMatrix& d = w.d;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t k = 0; k < n; ++k) {
    bool settled = false;
    while (!settled) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(d, k, pr, pc)) return w;
      d.swap_rows(k, pr);
      w.u.swap_rows(k, pr);
      d.swap_cols(k, pc);
      w.v.swap_cols(k, pc);
      w.v_inv.swap_rows(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (sgn(d(i, k)) == 0) continue;
        Integer q = d(i, k) / d(k, k);
        d.add_row_multiple(i, k, -q);
        w.u.add_row_multiple(i, k, -q);
        if (sgn(d(i, k)) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (sgn(d(k, j)) == 0) continue;
        Integer q = d(k, j) / d(k, k);
        d.add_col_multiple(j, k, -q);
        w.v.add_col_multiple(j, k, -q);
        w.v_inv.add_row_multiple(k, j, q);
        if (sgn(d(k, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row k and go again.
      bool divisible = true;
      for (std::size_t i = k + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = k + 1; j < d.cols(); ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
            d.add_row_multiple(k, i, 1);
            w.u.add_row_multiple(k, i, 1);
            divisible = false;
            break;
          }
        }
      settled = divisible;
    }
    if (sgn(d(k, k)) < 0) {
      d.negate_row(k);
      w.u.negate_row(k);
    }
  }
  return w;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  auto w = snf_with_inverse(m);
  return {std::move(w.d), std::move(w.u), std::move(w.v)};
}

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::vector<Integer> diag;
  for (const auto& o : orders) diag.push_back(abs(o));
  auto snf = smith_normal_form(IntMatrix::diagonal(diag));
  AbelianInvariants out;
  for (const auto& x : snf.diagonal()) {
    if (sgn(x) == 0)
      ++out.free_rank;
    else if (x > 1)
      out.torsion.push_back(x);
  }
  return out;
}

std::size_t AbelianInvariants::mod2_dimension() const {
  std::size_t n = free_rank;
  for (const auto& t : torsion)
    if (mpz_even_p(t.get_mpz_t())) ++n;
  return n;
}

bool AbelianInvariants::is_elementary_2group() const {
  return free_rank == 0 && std::all_of(torsion.begin(), torsion.end(), [](const Integer& t) { return t == 2; });
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

AbelianInvariants AbelianInvariants::parse(const std::string& text) {
  std::vector<Integer> orders;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, '+')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty() || token == "0") continue;
    if (token[0] != 'Z') throw Error("cannot parse abelian group summand '" + token + "'");
    if (token.size() == 1) {
      orders.emplace_back(0);
    } else if (token[1] == '^') {
      long k = std::stol(token.substr(2));
      for (long i = 0; i < k; ++i) orders.emplace_back(0);
    } else if (token[1] == '/') {
      auto caret = token.find('^');
      Integer n(token.substr(2, caret == std::string::npos ? std::string::npos : caret - 2));
      long k = caret == std::string::npos ? 1 : std::stol(token.substr(caret + 1));
      for (long i = 0; i < k; ++i) orders.push_back(n);
    } else {
      throw Error("cannot parse abelian group summand '" + token + "'");
    }
  }
  return from_cyclic_orders(orders);
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  AbelianInvariants out;
  std::size_t r = 0;
  for (const auto& x : snf.diagonal()) {
    if (sgn(x) == 0) continue;
    ++r;
    if (x > 1) out.torsion.push_back(x);
  }
  out.free_rank = m.rows() - r;
  return out;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  std::size_t r = snf.rank();
  return snf.v.block(0, r, m.cols(), m.cols() - r);
}

AbelianInvariants lattice_quotient(const IntMatrix& lattice, const IntMatrix& generators) {
  const std::size_t z = lattice.cols();
  if (generators.rows() != lattice.rows()) throw Error("lattice_quotient: ambient dimension mismatch");
  if (z == 0) {
    if (!generators.is_zero()) throw Error("lattice_quotient: generators outside the zero lattice");
    return {};
  }
  // lattice = u^{-1} d v^{-1}; solve lattice * X = generators.
  auto w = snf_with_inverse(lattice);
  IntMatrix ub = w.u * generators;
  IntMatrix y(z, generators.cols());
  for (std::size_t i = 0; i < ub.rows(); ++i)
    for (std::size_t j = 0; j < ub.cols(); ++j) {
      if (i >= z) {
        if (sgn(ub(i, j)) != 0) throw Error("lattice_quotient: generators not in the lattice span");
        continue;
      }
      const Integer& di = w.d(i, i);
      if (sgn(di) == 0) throw Error("lattice_quotient: lattice basis is rank deficient");
      if (!mpz_divisible_p(ub(i, j).get_mpz_t(), di.get_mpz_t()))
        throw Error("lattice_quotient: generators not in the lattice");
      y(i, j) = ub(i, j) / di;
    }
  return cokernel_invariants(w.v * y);
}

AbelianInvariants subquotient_invariants(const IntMatrix& boundary_in, const IntMatrix& boundary_out) {
  if (boundary_in.rows() != boundary_out.cols()) throw Error("subquotient: boundary dimensions do not chain");
  if (!(boundary_out * boundary_in).is_zero()) throw CompositionNonzero();
  return lattice_quotient(integer_kernel_basis(boundary_out), boundary_in);
}

AbelianInvariants subquotient_invariants_mod(const IntMatrix& boundary_in, const IntMatrix& boundary_out,
                                             const Integer& modulus) {
  if (sgn(modulus) == 0) return subquotient_invariants(boundary_in, boundary_out);
  const std::size_t n = boundary_in.rows();
  if (n != boundary_out.cols()) throw Error("subquotient: boundary dimensions do not chain");
  IntMatrix comp = boundary_out * boundary_in;
  for (std::size_t i = 0; i < comp.rows(); ++i)
    for (std::size_t j = 0; j < comp.cols(); ++j)
      if (!mpz_divisible_p(comp(i, j).get_mpz_t(), modulus.get_mpz_t())) throw CompositionNonzero();

  const std::size_t b = boundary_out.rows();
  IntMatrix scaled_b = IntMatrix::identity(b);
  IntMatrix scaled_n = IntMatrix::identity(n);
  for (std::size_t i = 0; i < b; ++i) scaled_b(i, i) = modulus;
  for (std::size_t i = 0; i < n; ++i) scaled_n(i, i) = modulus;

  // Cycles: x with out*x in modulus*Z^b. Projection of ker[out | m I] is injective.
  IntMatrix cycles = integer_kernel_basis(boundary_out.hstack(scaled_b));
  IntMatrix z = cycles.block(0, 0, n, cycles.cols());
  return lattice_quotient(z, boundary_in.hstack(scaled_n));
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("unimodular_inverse: matrix is not square");
  auto w = snf_with_inverse(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (w.d(i, i) != 1) throw Error("unimodular_inverse: matrix is not invertible over Z");
  // u m v = 1, so m^{-1} = v u
  return w.v * w.u;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------- F2

F2Matrix::F2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("F2Matrix: ragged initializer");
    for (int v : r) bits_.push_back(static_cast<std::uint8_t>(v & 1));
  }
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::reduce(const IntMatrix& m) {
  F2Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, mpz_odd_p(m(r, c).get_mpz_t()));
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

std::vector<std::uint8_t> F2Matrix::apply(const std::vector<std::uint8_t>& x) const {
  if (x.size() != cols_) throw Error("F2Matrix::apply: dimension mismatch");
  std::vector<std::uint8_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] ^= static_cast<std::uint8_t>((*this)(r, c) & x[c]);
  return y;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("F2Matrix product: dimension mismatch");
  F2Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k))
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j)) out.flip(i, j);
  return out;
}

F2Echelon f2_row_reduce(const F2Matrix& m) {
  F2Echelon e{m, {}};
  F2Matrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && !a(p, col)) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        bool t = a(row, c);
        a.set(row, c, a(p, c));
        a.set(p, c, t);
      }
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != row && a(r, col))
        for (std::size_t c = col; c < a.cols(); ++c)
          if (a(row, c)) a.flip(r, c);
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t f2_rank(const F2Matrix& m) { return f2_row_reduce(m).pivots.size(); }

std::vector<std::vector<std::uint8_t>> f2_kernel_basis(const F2Matrix& m) {
  auto e = f2_row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (e.reduced(r, f)) v[e.pivots[r]] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t f2_quotient_dim(const F2Matrix& m) { return m.rows() - f2_rank(m); }

bool f2_solve(const F2Matrix& m, const std::vector<std::uint8_t>& b, std::vector<std::uint8_t>& x) {
  if (b.size() != m.rows()) throw Error("f2_solve: dimension mismatch");
  F2Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
    aug.set(r, m.cols(), b[r] & 1);
  }
  auto e = f2_row_reduce(aug);
  x.assign(m.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return false;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return true;
}

}  // namespace s2s2::linalg
