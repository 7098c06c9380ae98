#include "regext/strand.hpp"

namespace regext {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(const PrimeField& f, std::vector<Coeff>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
    }
    Coeff inv = f.inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = f.mul(a[r * cols + k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Coeff m = a[i * cols + c];
      if (m == 0) continue;
      Coeff nm = f.neg(m);
      for (std::size_t k = c; k < cols; ++k) {
        if (a[r * cols + k] != 0) a[i * cols + k] = f.add(a[i * cols + k], f.mul(nm, a[r * cols + k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t DenseMatrix::rank(const PrimeField& f) const {
  std::vector<Coeff> a = data_;
  return eliminate(f, a, rows_, cols_).size();
}

std::vector<std::vector<Coeff>> DenseMatrix::nullspace(const PrimeField& f) const {
  std::vector<Coeff> a = data_;
  auto pivots = eliminate(f, a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> x(cols_, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(a[r * cols_ + free]);
    out.push_back(std::move(x));
  }
  return out;
}

GradedPiece::GradedPiece(const ModuleGB& gb, int t) : gb_(&gb), degree_(t) {
  const auto& tw = gb.ambient().twists;
  const int n = gb.ring().nvars();
  for (std::uint32_t c = 0; c < tw.size(); ++c) {
    if (t < tw[c]) continue;
    for (const auto& m : monomials_of_degree(n, t - tw[c])) {
      if (!gb.is_standard(m, c)) continue;
      index_.emplace(Key{m, c}, basis_.size());
      basis_.emplace_back(m, c);
    }
  }
}

std::vector<Coeff> GradedPiece::coordinates(const ModuleVector& v) const {
  std::vector<Coeff> x(basis_.size(), 0);
  ModuleVector nf = gb_->normal_form(v);
  for (const auto& t : nf.terms()) x[index_.at(Key{t.mon, t.comp})] = t.coef;
  return x;
}

ModuleVector GradedPiece::element(const std::vector<Coeff>& coords) const {
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) terms.push_back({basis_[i].first, basis_[i].second, coords[i]});
  }
  return ModuleVector::from_terms(gb_->ring().field(), std::move(terms));
}

long long count_standard_monomials(const ModuleGB& gb, int t) {
  const auto& tw = gb.ambient().twists;
  const int n = gb.ring().nvars();
  long long count = 0;
  for (std::uint32_t c = 0; c < tw.size(); ++c) {
    if (t < tw[c]) continue;
    if (gb.lead_monomials(c).empty()) {
      count += GradedFreeModule({tw[c]}).dim_in_degree(n, t);
      continue;
    }
    for (const auto& m : monomials_of_degree(n, t - tw[c])) {
      if (gb.is_standard(m, c)) ++count;
    }
  }
  return count;
}

long long hilbert_function(const GradedModulePresentation& m, int t) {
  return count_standard_monomials(m.relation_gb(), t);
}

StrandRanks strand_ranks(const GradedMap& f, int t) {
  const auto& field = f.ring().field();
  const int n = f.ring().nvars();
  ModuleGB zero(f.ring(), f.target(), {});
  GradedPiece tgt(zero, t);
  std::vector<std::vector<Coeff>> cols;
  for (int j = 0; j < f.source().rank(); ++j) {
    int k = t - f.source().twists[j];
    if (k < 0) continue;
    for (const auto& m : monomials_of_degree(n, k)) {
      ModuleVector img = add_mul(field, ModuleVector(), 1, m, f.column(j));
      cols.push_back(tgt.coordinates(img));
    }
  }
  DenseMatrix a(tgt.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < tgt.size(); ++r) a.at(r, c) = cols[c][r];
  return {static_cast<long long>(cols.size()), static_cast<long long>(a.rank(field))};
}

std::vector<ModuleVector> socle_in_degree(const ModuleGB& relations, int t) {
  const auto& field = relations.ring().field();
  const int n = relations.ring().nvars();
  GradedPiece here(relations, t);
  if (here.size() == 0) return {};
  GradedPiece next(relations, t + 1);
  DenseMatrix a(static_cast<std::size_t>(n) * next.size(), here.size());
  for (std::size_t j = 0; j < here.size(); ++j) {
    const auto& [mon, comp] = here.basis()[j];
    for (int v = 0; v < n; ++v) {
      ModuleVector prod = ModuleVector::from_sorted({VecTerm{mon * Monomial::variable(n, v), comp, 1}});
      auto x = next.coordinates(prod);
      for (std::size_t r = 0; r < x.size(); ++r) a.at(v * next.size() + r, j) = x[r];
    }
  }
  std::vector<ModuleVector> out;
  for (const auto& x : a.nullspace(field)) out.push_back(here.element(x));
  return out;
}

}  // namespace regext
