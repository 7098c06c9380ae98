#include "regext/degrees.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "regext/cohomology.hpp"

namespace regext {

bool is_filter_regular(const Saturation& sat, const Polynomial& l) {
  const auto& mbar = sat.lifted;
  if (mbar.gens().is_zero()) return true;
  const auto& ring = mbar.ring();
  const auto& f = ring.field();
  // multiplication by l on the generator module, then (Ubar : l) = Ubar
  std::vector<ModuleVector> cols;
  for (int j = 0; j < mbar.gens().rank(); ++j) {
    cols.push_back(mul_poly(f, ModuleVector::unit(ring.nvars(), j), l));
  }
  GradedMap mult(ring, mbar.gens().shifted(1), mbar.gens(), std::move(cols));
  ModuleGB gb = mbar.relation_gb();
  for (const auto& v : preimage(mult, mbar.relation_vectors())) {
    if (!gb.contains(v)) return false;
  }
  return true;
}

GradedModulePresentation quotient_by_form(const GradedModulePresentation& m, const Polynomial& l) {
  std::vector<ModuleVector> extra;
  for (int j = 0; j < m.gens().rank(); ++j) extra.push_back(ModuleVector::from_polynomial(l, j));
  return minimize(m.with_relations(extra));
}

FilterRegularData filter_regular_sequence(const GradedModulePresentation& m, std::uint64_t seed) {
  FilterRegularData out;
  out.seed = seed;
  const auto& ring = m.ring();
  const auto& f = ring.field();
  const int n = ring.nvars();
  std::mt19937_64 rng(seed);
  GradedModulePresentation cur = minimize(m);
  ModuleData md = analyze(cur);
  const int d = md.hilbert.dim();
  out.quotients.push_back(cur);
  for (int j = 0;; ++j) {
    Saturation sat = md.is_zero() ? saturate_h0(cur, kNegInf) : saturate_h0(cur, md.inv.reg);
    ModuleData bar = analyze(sat.mbar);
    out.rbar.push_back(bar.inv.reg);
    out.hbar.push_back(bar.is_zero() ? 0 : bar.h(bar.inv.reg));
    if (j == d || d < 0) break;
    Polynomial l;
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kFilterRegularRetries) {
        throw std::runtime_error("no filter-regular linear form found after " +
                                 std::to_string(kFilterRegularRetries) + " draws");
      }
      std::vector<PolyTerm> terms;
      for (int v = 0; v < n; ++v) terms.push_back({Monomial::variable(n, v), static_cast<Coeff>(rng() % f.p())});
      l = Polynomial::from_terms(f, std::move(terms));
      if (!l.is_zero() && is_filter_regular(sat, l)) break;
    }
    out.retries += attempt;
    out.forms.push_back(l);
    cur = quotient_by_form(cur, l);
    md = analyze(cur);
    out.quotients.push_back(cur);
  }
  if (d >= 0) {
    if (md.hilbert.dim() > 0) throw std::logic_error("quotient by the filter-regular sequence is not of finite length");
    out.B = static_cast<long long>(md.hilbert.degree());
  }
  return out;
}

std::string canonical_key(const GradedModulePresentation& m) {
  std::ostringstream os;
  os << m.ring().nvars() << ':';
  for (int a : m.gens().twists) os << a << ',';
  os << '|';
  for (const auto& v : m.relation_vectors()) {
    for (const auto& t : v.terms()) {
      os << t.comp << '.' << t.coef << '.';
      for (int e : t.mon.exponents()) os << e << '_';
    }
    os << ';';
  }
  return os.str();
}

HdegResult HdegCalculator::compute(const GradedModulePresentation& m) {
  GradedModulePresentation mm = minimize(m);
  std::string key = canonical_key(mm);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  ModuleData md = analyze(mm);
  HdegResult r;
  r.dim = md.hilbert.dim();
  r.degree = md.hilbert.degree();
  if (r.dim <= 0) {
    r.value = r.degree;
  } else {
    const int n = md.nvars();
    const int d = r.dim;
    r.value = r.degree;
    for (int i = 0; i <= d - 1; ++i) {
      int idx = n + i + 1 - d;
      ExtModule e = ext_into_ring(md.res, idx);
      HdegResult sub = compute(e.presentation);
      if (sub.dim >= d) throw std::logic_error("deficiency module does not drop dimension");
      BigInt c = binomial(d - 1, i);
      r.value += c * sub.value;
      r.terms.push_back({idx, c, sub.value});
    }
  }
  memo_.emplace(std::move(key), r);
  return r;
}

HdegResult hdeg(const GradedModulePresentation& m) {
  HdegCalculator calc;
  return calc.compute(m);
}

bool hdeg_note_b_check(const GradedModulePresentation& m) {
  HdegCalculator calc;
  Saturation sat = saturate_h0(m);
  return calc.value(m) == calc.value(sat.mbar) + sat.h0_length();
}

}  // namespace regext
