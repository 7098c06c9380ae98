#include "regext/free_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace regext {

GradedFreeModule GradedFreeModule::dual() const {
  GradedFreeModule d;
  for (int a : twists) d.twists.push_back(-a);
  return d;
}

GradedFreeModule GradedFreeModule::shifted(int s) const {
  GradedFreeModule d;
  for (int a : twists) d.twists.push_back(a + s);
  return d;
}

long long GradedFreeModule::dim_in_degree(int nvars, int t) const {
  long long total = 0;
  for (int a : twists) {
    int k = t - a;
    if (k < 0) continue;
    // C(k + n - 1, n - 1)
    long long c = 1;
    for (int i = 1; i <= nvars - 1; ++i) c = c * (k + i) / i;
    total += c;
  }
  return total;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule s = a;
  s.twists.insert(s.twists.end(), b.twists.begin(), b.twists.end());
  return s;
}

ModuleVector ModuleVector::from_terms(const PrimeField& f, std::vector<VecTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const VecTerm& a, const VecTerm& b) { return term_cmp(a, b) > 0; });
  ModuleVector v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().mon == t.mon) {
      v.terms_.back().coef = f.add(v.terms_.back().coef, t.coef);
      if (v.terms_.back().coef == 0) v.terms_.pop_back();
    } else if (t.coef != 0) {
      v.terms_.push_back(t);
    }
  }
  return v;
}

ModuleVector ModuleVector::from_sorted(std::vector<VecTerm> terms) {
  ModuleVector v;
  v.terms_ = std::move(terms);
  return v;
}

ModuleVector ModuleVector::unit(int nvars, std::uint32_t comp) {
  ModuleVector v;
  v.terms_.push_back({Monomial(nvars), comp, 1});
  return v;
}

ModuleVector ModuleVector::from_polynomial(const Polynomial& p, std::uint32_t comp) {
  ModuleVector v;
  for (const auto& t : p.terms()) v.terms_.push_back({t.mon, comp, t.coef});
  return v;
}

Polynomial ModuleVector::component(std::uint32_t comp) const {
  auto lo = std::lower_bound(terms_.begin(), terms_.end(), comp,
                             [](const VecTerm& t, std::uint32_t c) { return t.comp < c; });
  std::vector<PolyTerm> out;
  for (auto it = lo; it != terms_.end() && it->comp == comp; ++it) out.push_back({it->mon, it->coef});
  return Polynomial::from_sorted(std::move(out));
}

std::optional<int> ModuleVector::degree(const GradedFreeModule& ambient) const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().mon.degree() + ambient.twists.at(terms_.front().comp);
  for (const auto& t : terms_) {
    if (t.comp >= ambient.twists.size()) return std::nullopt;
    if (t.mon.degree() + ambient.twists[t.comp] != d) return std::nullopt;
  }
  return d;
}

bool ModuleVector::is_homogeneous(const GradedFreeModule& ambient) const {
  return terms_.empty() || degree(ambient).has_value();
}

std::uint32_t ModuleVector::comp_bound() const {
  std::uint32_t b = 0;
  for (const auto& t : terms_) b = std::max(b, t.comp + 1);
  return b;
}

namespace {
// a + c*m*b; m == nullptr means the identity monomial
ModuleVector merge_mul(const PrimeField& f, const ModuleVector& a, Coeff c, const Monomial* m,
                       const ModuleVector& b) {
  std::vector<VecTerm> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  VecTerm cur;
  bool have = false;
  auto load = [&]() {
    if (ib != eb) {
      cur = {m ? ib->mon * *m : ib->mon, ib->comp, f.mul(ib->coef, c)};
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (ia != ea || have) {
    int cmp = ia == ea ? -1 : !have ? 1 : term_cmp(*ia, cur);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      out.push_back(cur);
      ++ib;
      load();
    } else {
      Coeff s = f.add(ia->coef, cur.coef);
      if (s != 0) out.push_back({ia->mon, ia->comp, s});
      ++ia;
      ++ib;
      load();
    }
  }
  return ModuleVector::from_sorted(std::move(out));
}
}  // namespace

ModuleVector add(const PrimeField& f, const ModuleVector& a, const ModuleVector& b) {
  return merge_mul(f, a, 1, nullptr, b);
}
ModuleVector sub(const PrimeField& f, const ModuleVector& a, const ModuleVector& b) {
  return merge_mul(f, a, f.neg(1), nullptr, b);
}
ModuleVector add_mul(const PrimeField& f, const ModuleVector& a, Coeff c, const Monomial& m,
                     const ModuleVector& b) {
  if (c == 0) return a;
  return merge_mul(f, a, c, &m, b);
}

ModuleVector scale(const PrimeField& f, const ModuleVector& a, Coeff c) {
  if (c == 0) return {};
  std::vector<VecTerm> out = a.terms();
  for (auto& t : out) t.coef = f.mul(t.coef, c);
  return ModuleVector::from_sorted(std::move(out));
}

ModuleVector mul_poly(const PrimeField& f, const ModuleVector& a, const Polynomial& p) {
  ModuleVector acc;
  for (const auto& t : p.terms()) acc = add_mul(f, acc, t.coef, t.mon, a);
  return acc;
}

ModuleVector shift_components(const ModuleVector& a, int offset) {
  std::vector<VecTerm> out = a.terms();
  for (auto& t : out) t.comp = static_cast<std::uint32_t>(static_cast<int>(t.comp) + offset);
  return ModuleVector::from_sorted(std::move(out));
}

ModuleVector restrict_components(const ModuleVector& a, std::uint32_t lo, std::uint32_t hi) {
  std::vector<VecTerm> out;
  for (const auto& t : a.terms()) {
    if (t.comp >= lo && t.comp < hi) out.push_back({t.mon, t.comp - lo, t.coef});
  }
  return ModuleVector::from_sorted(std::move(out));
}

ModuleVector make_monic(const PrimeField& f, const ModuleVector& a) {
  if (a.is_zero() || a.lead().coef == 1) return a;
  return scale(f, a, f.inv(a.lead().coef));
}

std::string to_string(const ModuleVector& v, const PolynomialRing& ring) {
  if (v.is_zero()) return "0";
  std::string s;
  std::uint32_t bound = v.comp_bound();
  for (std::uint32_t c = 0; c < bound; ++c) {
    Polynomial p = v.component(c);
    if (p.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(p, ring) + ")*e" + std::to_string(c);
  }
  return s;
}

GradedMap::GradedMap(PolynomialRing ring, GradedFreeModule source, GradedFreeModule target,
                     std::vector<ModuleVector> columns)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != source_.rank()) {
    throw std::invalid_argument("graded map needs one column per source generator");
  }
  for (const auto& c : columns_) {
    if (c.comp_bound() > static_cast<std::uint32_t>(target_.rank())) {
      throw std::invalid_argument("graded map column exceeds target rank");
    }
  }
}

GradedMap GradedMap::zero(PolynomialRing ring, GradedFreeModule source, GradedFreeModule target) {
  std::vector<ModuleVector> cols(source.twists.size());
  return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(cols));
}

GradedMap GradedMap::identity(PolynomialRing ring, GradedFreeModule module) {
  std::vector<ModuleVector> cols;
  for (int j = 0; j < module.rank(); ++j) cols.push_back(ModuleVector::unit(ring.nvars(), j));
  return GradedMap(std::move(ring), module, module, std::move(cols));
}

GradedMap GradedMap::from_entries(PolynomialRing ring, GradedFreeModule source, GradedFreeModule target,
                                  const std::vector<std::vector<Polynomial>>& rows) {
  if (static_cast<int>(rows.size()) != target.rank()) throw std::invalid_argument("row count mismatch");
  std::vector<ModuleVector> cols(source.twists.size());
  for (int j = 0; j < source.rank(); ++j) {
    std::vector<VecTerm> terms;
    for (int i = 0; i < target.rank(); ++i) {
      if (static_cast<int>(rows[i].size()) != source.rank()) throw std::invalid_argument("column count mismatch");
      for (const auto& t : rows[i][j].terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(i), t.coef});
    }
    cols[j] = ModuleVector::from_terms(ring.field(), std::move(terms));
  }
  return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(cols));
}

bool GradedMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const ModuleVector& c) { return c.is_zero(); });
}

bool GradedMap::has_unit_entry() const {
  for (const auto& c : columns_) {
    for (const auto& t : c.terms()) {
      if (t.mon.is_one()) return true;
    }
  }
  return false;
}

bool map_is_homogeneous(const GradedMap& f) {
  for (int j = 0; j < f.source().rank(); ++j) {
    for (const auto& t : f.column(j).terms()) {
      if (t.mon.degree() != f.source().twists[j] - f.target().twists[t.comp]) return false;
    }
  }
  return true;
}

ModuleVector apply(const GradedMap& f, const ModuleVector& v) {
  const auto& fld = f.ring().field();
  ModuleVector acc;
  for (const auto& t : v.terms()) {
    if (t.comp >= f.columns().size()) throw std::invalid_argument("vector outside map source");
    acc = add_mul(fld, acc, t.coef, t.mon, f.column(static_cast<int>(t.comp)));
  }
  return acc;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!(f.source() == g.target())) throw std::invalid_argument("compose: shape mismatch");
  std::vector<ModuleVector> cols;
  cols.reserve(g.columns().size());
  for (const auto& c : g.columns()) cols.push_back(apply(f, c));
  return GradedMap(f.ring(), g.source(), f.target(), std::move(cols));
}

GradedMap dual_map(const GradedMap& f) {
  std::vector<std::vector<VecTerm>> cols(f.target().rank());
  for (int j = 0; j < f.source().rank(); ++j) {
    for (const auto& t : f.column(j).terms()) cols[t.comp].push_back({t.mon, static_cast<std::uint32_t>(j), t.coef});
  }
  std::vector<ModuleVector> out;
  for (auto& c : cols) out.push_back(ModuleVector::from_terms(f.ring().field(), std::move(c)));
  return GradedMap(f.ring(), f.target().dual(), f.source().dual(), std::move(out));
}

}  // namespace regext
