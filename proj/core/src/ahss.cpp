#include "s2s2/ahss.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "s2s2/error.hpp"

namespace s2s2::ahss {

using linalg::F2Matrix;

Coefficient Coefficient::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "Z") return integers(false);
  if (text == "Zw") return integers(true);
  if (text == "Z/2" || text == "Z2") return mod2();
  throw Error("unknown coefficient '" + text + "' (expected 0, Z, Zw or Z/2)");
}

std::string Coefficient::to_string() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Integers: return twisted ? "Zw" : "Z";
    case Kind::Mod2: return "Z/2";
  }
  return "?";
}

std::vector<Coefficient> default_coefficient_row() {
  return {Coefficient::integers(true), Coefficient::mod2(), Coefficient::mod2(), Coefficient::zero(),
          Coefficient::integers(true)};
}

void BordismInput::validate() const {
  if (w1.degree != 1 || w1.coords.size() != ring.dimension(1)) throw Error("w1 must be a degree-1 class of the ring");
  if (w2.degree != 2 || w2.coords.size() != ring.dimension(2)) throw Error("w2 must be a degree-2 class of the ring");
  if (orientation.size() != group.generator_count())
    throw Error("orientation character needs one sign per group generator");
  const bool twisted = std::any_of(orientation.begin(), orientation.end(), [](int w) { return w < 0; });
  if (twisted == w1.is_zero()) throw Error("orientation character and w1 disagree on orientability");
}

const PageEntry* SpectralPage::find(int p, int q) const {
  for (const auto& e : entries)
    if (e.p == p && e.q == q) return &e;
  return nullptr;
}

ring::F2Class d2_dual(const ring::F2Class& alpha, const BordismInput& in) {
  const auto& r = in.ring;
  auto out = r.sq(2, alpha);
  out = r.add(out, r.cup(r.sq(1, alpha), in.w1));
  out = r.add(out, r.cup(alpha, in.w2));
  if (out.degree > r.top_degree())
    throw DegreeOverflow("d-hat lands in degree " + std::to_string(out.degree) + " above the ring's top degree");
  return out;
}

F2Matrix d2_dual_matrix(const BordismInput& in, int k) {
  const auto& r = in.ring;
  F2Matrix m(r.dimension(k + 2), r.dimension(k));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto img = d2_dual(r.basis_element(k, c), in);
    for (std::size_t row = 0; row < m.rows(); ++row) m.set(row, c, img.coords[row]);
  }
  return m;
}

namespace {

AbelianInvariants homology(const BordismInput& in, const Coefficient& c, int p) {
  using homalg::GroupModule;
  switch (c.kind) {
    case Coefficient::Kind::Zero: return AbelianInvariants::trivial();
    case Coefficient::Kind::Integers: {
      std::vector<int> w = c.twisted ? in.orientation : std::vector<int>(in.group.generator_count(), 1);
      return homalg::group_homology(in.group, GroupModule::twisted_integers(in.group, w), p);
    }
    case Coefficient::Kind::Mod2:
      return homalg::group_homology(in.group, GroupModule::trivial_cyclic(in.group, 2), p);
  }
  return AbelianInvariants::trivial();
}

Coefficient coefficient_at(const BordismInput& in, int q, std::vector<std::string>* flags) {
  if (q < static_cast<int>(in.coefficient_row.size())) return in.coefficient_row[q];
  if (flags) flags->push_back("coefficient beyond the supplied row taken as 0");
  return Coefficient::zero();
}

std::string dual_name(const ring::GradedF2Algebra& r, int p, std::size_t i) {
  return "dual(" + r.monomial_name(r.basis(p)[i]) + ")";
}

std::string vector_name(const ring::GradedF2Algebra& r, int p, const std::vector<std::uint8_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s += (s.empty() ? "" : " + ") + dual_name(r, p, i);
  return s.empty() ? "0" : s;
}

/// d2 out of E_{p,q} as an F2 matrix on H_p(pi;F2)-coordinates.
struct D2 {
  Differential info;
  std::optional<F2Matrix> matrix;
};

class Builder {
 public:
  Builder(const BordismInput& in, int max_total) : in_(in), max_total_(max_total) {
    in_.validate();
    for (int p = 0; p <= std::min(in_.ring.top_degree(), max_total_); ++p) {
      auto h = homology(in_, Coefficient::mod2(), p);
      if (!h.is_elementary_2group() || h.mod2_dimension() != in_.ring.dimension(p))
        throw InconsistentPresentation("ring dimension in degree " + std::to_string(p) +
                                       " does not match H_" + std::to_string(p) + "(pi;F2) = " + h.to_string());
    }
  }

  const PageEntry& e2(int p, int q) {
    auto key = std::make_pair(p, q);
    if (auto it = e2_.find(key); it != e2_.end()) return it->second;
    PageEntry e;
    e.p = p;
    e.q = q;
    e.coefficient = coefficient_at(in_, q, &e.flags);
    e.value = homology(in_, e.coefficient, p);
    if (e.coefficient.kind == Coefficient::Kind::Mod2 && p <= in_.ring.top_degree())
      for (std::size_t i = 0; i < in_.ring.dimension(p); ++i) e.basis.push_back(dual_name(in_.ring, p, i));
    return e2_.emplace(key, std::move(e)).first->second;
  }

  const D2& d2(int p, int q) {
    auto key = std::make_pair(p, q);
    if (auto it = d2_.find(key); it != d2_.end()) return it->second;
    D2 d;
    d.info = {p, q, p - 2, q + 1, std::nullopt, "computed", ""};
    const auto& src = e2(p, q);
    const bool target_exists = p - 2 >= 0;
    const bool src_zero = src.value && src.value->is_trivial();
    const bool tgt_zero = !target_exists || (e2(p - 2, q + 1).value && e2(p - 2, q + 1).value->is_trivial());
    const auto top = in_.ring.top_degree();
    if (src_zero || tgt_zero) {
      d.info.rank = 0;
      d.info.note = "source or target vanishes";
      if (target_exists) d.matrix = F2Matrix(f2_dim(p - 2, q + 1), f2_dim(p, q));
    } else if (p > top) {
      d.info.provenance = "not computed";
      d.info.note = "needs the cohomology ring above its top degree";
    } else if (q == 1 && src.coefficient.kind == Coefficient::Kind::Mod2 &&
               e2(p - 2, 2).coefficient.kind == Coefficient::Kind::Mod2) {
      d.matrix = d2_dual_matrix(in_, p - 2).transpose();
      d.info.rank = linalg::f2_rank(*d.matrix);
      if (p == 3) {
        d.info.provenance = "reference";
      } else {
        d.info.note = "dual of d-hat; this case is derived from the formula and not confirmed independently";
      }
    } else if (q == 0 && src.coefficient.kind == Coefficient::Kind::Integers &&
               e2(p - 2, 1).coefficient.kind == Coefficient::Kind::Mod2) {
      // Reduction H_p(Z^w) -> H_p(F2) is injective on H_p(Z^w) (x) F2.
      const std::size_t reduced = src.value->mod2_dimension();
      const std::size_t full = in_.ring.dimension(p);
      F2Matrix dual = d2_dual_matrix(in_, p - 2).transpose();
      if (reduced == 0) {
        d.info.rank = 0;
        d.info.note = "reduction mod 2 is zero";
        d.matrix = F2Matrix(dual.rows(), 0);
      } else if (reduced == full) {
        d.matrix = dual;
        d.info.rank = linalg::f2_rank(dual);
        d.info.note = "reduction mod 2 followed by the dual of d-hat";
      } else {
        d.info.provenance = "not computed";
        d.info.note = "reduction mod 2 is neither zero nor onto";
      }
    } else {
      d.info.provenance = "not computed";
      d.info.note = "no formula for d2 between these coefficients";
    }
    return d2_.emplace(key, std::move(d)).first->second;
  }

  PageEntry e3(int p, int q) {
    PageEntry e = e2(p, q);
    if (!e.value || e.value->is_trivial()) return e;
    const bool has_out = p - 2 >= 0;
    const D2* out = has_out ? &d2(p, q) : nullptr;
    const bool has_in = q - 1 >= 0;
    const D2* in = has_in ? &d2(p + 2, q - 1) : nullptr;
    auto undetermined = [&](const std::string& why) {
      e.value.reset();
      e.basis.clear();
      e.flags.push_back(why);
      return e;
    };
    if ((out && !out->info.rank) || (in && !in->info.rank))
      return undetermined("adjacent d2 not computed");

    if (e.coefficient.kind == Coefficient::Kind::Mod2) {
      const std::size_t m = e.value->mod2_dimension();
      F2Matrix out_m = (out && out->matrix) ? *out->matrix : F2Matrix(0, m);
      F2Matrix in_m = (in && in->matrix) ? *in->matrix : F2Matrix(m, 0);
      if (!(out_m * in_m == F2Matrix(out_m.rows(), in_m.cols()))) throw Error("d2 o d2 != 0");
      auto kernel = linalg::f2_kernel_basis(out_m);
      // Representatives: kernel vectors independent modulo the image.
      std::vector<std::vector<std::uint8_t>> span;
      for (std::size_t c = 0; c < in_m.cols(); ++c) {
        std::vector<std::uint8_t> v(m);
        for (std::size_t r = 0; r < m; ++r) v[r] = in_m(r, c);
        span.push_back(v);
      }
      auto rank_of = [m](const std::vector<std::vector<std::uint8_t>>& vs) {
        F2Matrix a(m, vs.size());
        for (std::size_t c = 0; c < vs.size(); ++c)
          for (std::size_t r = 0; r < m; ++r) a.set(r, c, vs[c][r]);
        return linalg::f2_rank(a);
      };
      std::size_t rank = rank_of(span);
      std::vector<std::string> reps;
      for (const auto& k : kernel) {
        span.push_back(k);
        std::size_t next = rank_of(span);
        if (next > rank) {
          rank = next;
          reps.push_back(p <= in_.ring.top_degree() ? vector_name(in_.ring, p, k) : "");
        } else {
          span.pop_back();
        }
      }
      e.value = AbelianInvariants::from_cyclic_orders(std::vector<linalg::Integer>(reps.size(), 2));
      e.basis = p <= in_.ring.top_degree() ? reps : std::vector<std::string>{};
      return e;
    }

    // Integer rows are never d2 targets here; only the outgoing map matters.
    if (in && in->info.rank != 0u) return undetermined("incoming d2 into an integer row not supported");
    if (!out || out->info.rank == 0u) return e;
    if (!e.value->is_elementary_2group()) return undetermined("kernel of d2 on a non-elementary group not computed");
    const std::size_t dim = e.value->mod2_dimension() - *out->info.rank;
    e.value = AbelianInvariants::from_cyclic_orders(std::vector<linalg::Integer>(dim, 2));
    return e;
  }

  std::vector<Differential> differentials() const {
    std::vector<Differential> out;
    for (const auto& [k, d] : d2_) out.push_back(d.info);
    return out;
  }

 private:
  std::size_t f2_dim(int p, int q) {
    const auto& e = e2(p, q);
    return e.value ? e.value->mod2_dimension() : 0;
  }

  const BordismInput& in_;
  int max_total_;
  std::map<std::pair<int, int>, PageEntry> e2_;
  std::map<std::pair<int, int>, D2> d2_;
};

}  // namespace

SpectralPage e2_page(const BordismInput& in, int max_total_degree) {
  if (max_total_degree < 0 || max_total_degree > 6) throw Error("e2_page: total degree must be in 0..6");
  Builder b(in, max_total_degree);
  SpectralPage page;
  page.page = 2;
  page.max_total_degree = max_total_degree;
  for (int n = 0; n <= max_total_degree; ++n)
    for (int p = n; p >= 0; --p) page.entries.push_back(b.e2(p, n - p));
  return page;
}

SpectralPage e3_page(const BordismInput& in, int max_total_degree) {
  if (max_total_degree < 0 || max_total_degree > 5) throw Error("e3_page: total degree must be in 0..5");
  Builder b(in, max_total_degree + 1);
  SpectralPage page;
  page.page = 3;
  page.max_total_degree = max_total_degree;
  for (int n = 0; n <= max_total_degree; ++n)
    for (int p = n; p >= 0; --p) page.entries.push_back(b.e3(p, n - p));
  page.differentials = b.differentials();

  // d3 : E_{p,q} -> E_{p-3,q+2} from the line p+q = 5 into the line p+q = 4.
  for (const auto& src : page.entries) {
    if (src.p + src.q != 5 || src.p < 3) continue;
    if (src.value && src.value->is_trivial()) continue;
    const PageEntry* tgt = page.find(src.p - 3, src.q + 2);
    D3Audit a{src.p, src.q, src.p - 3, src.q + 2, src.value ? src.value->to_string() : "undetermined",
              tgt ? (tgt->value ? tgt->value->to_string() : "undetermined") : "0"};
    page.d3_audit.push_back(std::move(a));
  }
  return page;
}

BordismReport bordism_answer(const BordismInput& in) {
  auto page = e3_page(in, 5);
  BordismReport report;
  report.d3_audit = page.d3_audit;
  std::vector<linalg::Integer> orders;
  std::size_t free_rank = 0;
  for (const auto& e : page.entries) {
    if (e.p + e.q != 4) continue;
    if (!e.value) {
      report.complete = false;
      continue;
    }
    if (e.value->is_trivial()) continue;
    Summand s{e.p, e.q, *e.value, false};
    if (e.p == 4 && e.q == 0) {
      s.assumption_dependent = true;
      if (!in.assume_e40_survives) {
        report.assumptions.push_back("E^3_{4,0} is not assumed to survive; its summand is omitted");
        continue;
      }
      report.assumptions.push_back("E^3_{4,0} survives to E^infinity (E8 manifold detected in TopSpin^c bordism)");
    }
    free_rank += e.value->free_rank;
    for (const auto& t : e.value->torsion) orders.push_back(t);
    report.summands.push_back(std::move(s));
  }
  for (const auto& a : page.d3_audit)
    if (a.target != "0")
      report.assumptions.push_back("d3 from (" + std::to_string(a.source_p) + "," + std::to_string(a.source_q) +
                                   ") to (" + std::to_string(a.target_p) + "," + std::to_string(a.target_q) +
                                   ") is not computed; source " + a.source + ", target " + a.target);
  report.assumptions.push_back("extensions between E^infinity terms split");
  std::vector<linalg::Integer> all = orders;
  for (std::size_t i = 0; i < free_rank; ++i) all.push_back(0);
  report.total = AbelianInvariants::from_cyclic_orders(all);
  return report;
}

}  // namespace s2s2::ahss
