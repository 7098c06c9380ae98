#include "regext/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "regext/resolution.hpp"

namespace regext {

namespace {

BigInt max_of(const std::vector<BigInt>& v) { return *std::max_element(v.begin(), v.end()); }

/// base^{2^e}
BigInt pow_pow2(const BigInt& base, long long e) { return power(base, pow2(e)); }

}  // namespace

BigInt bound_reg_homology(const ComplexShape& c, int i, int n) {
  if (n < 2) throw std::invalid_argument("regularity bound needs at least two variables");
  if (!c.has(i)) return kNegInf;
  const auto& ci = c.at(i);
  std::vector<BigInt> terms{ci.b};
  if (c.has(i + 1)) {
    const auto& cn = c.at(i + 1);
    terms.push_back(cn.b);
    terms.push_back(pow_pow2(BigInt(cn.rank) * (ci.b - cn.f), n - 2) + cn.f + 2);
  }
  if (c.has(i - 1)) {
    const auto& cp = c.at(i - 1);
    terms.push_back(pow_pow2(BigInt(ci.rank) * (cp.b - ci.f), n - 2) + ci.f);
  }
  return max_of(terms);
}

BigInt bound_dim_homology(const ComplexShape& c, int i, int n, int mu) {
  if (!c.has(i)) return 0;
  const auto& ci = c.at(i);
  return BigInt(ci.rank) * binomial(static_cast<long long>(mu) - ci.f + n - 1, n - 1);
}

BigInt bound_dim_tor(const ComplexShape& c, int i, int j, int n, int mu) {
  if (!c.has(i)) return 0;
  const auto& ci = c.at(i);
  return BigInt(ci.rank) * binomial(n, j) * binomial(static_cast<long long>(mu) - ci.f - j + n - 1, n - 1);
}

ComplexShape dual_shape(const std::map<int, ComplexShape::Term>& rows) {
  ComplexShape c;
  for (const auto& [i, t] : rows) c.terms[i] = {-t.b, -t.f, t.rank};
  return c;
}

BigInt hom_rank(const std::vector<long long>& tm, const std::vector<long long>& tn, int i) {
  BigInt s = 0;
  for (int p = 0; p < static_cast<int>(tm.size()); ++p) {
    int q = p - i;
    if (q >= 0 && q < static_cast<int>(tn.size())) s += BigInt(tm[p]) * tn[q];
  }
  return s;
}

BigInt bound_reg_ext_pair(int reg_m, int reg_n, const BigInt& ti, const BigInt& ti1, int delta, int n) {
  if (n < 2) throw std::invalid_argument("regularity bound needs at least two variables");
  BigInt e = pow2(n - 2);
  return power(BigInt(reg_m) + reg_n + 1, e) * power(std::max(ti, ti1), e) + 1 - delta;
}

BigInt bound_betti(long long mu, int n, int i, int reg, int indeg) {
  return BigInt(mu) * binomial(n, i) * binomial(static_cast<long long>(reg) - indeg + n, n);
}

BigInt betti_from_hilbert(const HilbertPolynomial& p, int n, int d, int r, int i) {
  BigInt s = 0;
  for (int l = 0; l <= std::min(i, d - 1); ++l) {
    BigInt term = binomial(n - l - 1, i - l) * p.delta(l)(static_cast<long long>(r) + l);
    if (l % 2) s -= term;
    else s += term;
  }
  return s;
}

BigInt c_dj(int d, int j) { return std::max(binomial(d - 1, j), binomial(d - 1, j + 1)); }

BigInt bound_reg_ext_top(int d, int i, const BigInt& p_at_rbar, int rbar) {
  return pow_pow2(c_dj(d, d - i) * p_at_rbar, d - 2) - rbar + 1;
}

BigInt bound_hdeg_betti(long long mu, int n, int reg, int indeg, int d) {
  BigInt base = BigInt(mu) * binomial(static_cast<long long>(reg) - indeg + n, n);
  return pow_pow2(base, static_cast<long long>(d - 1) * (d - 1));
}

BigInt bound_hdeg_hilbert(const BigInt& h0_length, const BigInt& p_at_rbar, int d) {
  return h0_length + pow_pow2(p_at_rbar, static_cast<long long>(d - 1) * (d - 1));
}

BigInt bound_hdeg_cyclic(int n, int reg, int d) {
  return pow_pow2(binomial(static_cast<long long>(reg) + n, n), static_cast<long long>(d - 1) * (d - 1));
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "Lemma2.1.1", "Lemma2.1.2", "Lemma2.1.3", "Lemma2.1.4", "Thm2.3.1",   "Thm2.3.2",   "Thm2.3.3",
      "Thm2.3.4",   "Lemma2.4",   "Rem3.1.i",   "Rem3.1.ii",  "Rem3.1.iii", "Rem3.1.iv",  "Rem3.1.v",
      "Prop3.3",    "Cor3.4",     "Thm3.5.1",   "Thm3.5.2a",  "Thm3.5.2b",  "Thm3.5.2c",  "EGS",
      "Lemma4.1.i", "Lemma4.1.ii", "Thm4.2",    "Cor4.3",     "Lemma4.4.i", "Lemma4.4.ii", "Thm4.5.i",
      "Thm4.5.ii",  "Thm4.6",     "Def5.1.a",   "Def5.1.b",   "Thm5.2",     "Lemma5.3",   "Lemma5.4.i",
      "Lemma5.4.ii", "Thm5.5",    "Cor5.6",     "DGV-reg"};
  return ids;
}

int claim_index(const std::string& claim) {
  const auto& ids = claim_ids();
  auto it = std::find(ids.begin(), ids.end(), claim);
  if (it == ids.end()) throw std::invalid_argument("unknown claim id " + claim);
  return static_cast<int>(it - ids.begin());
}

void sort_reports(std::vector<BoundReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const BoundReport& a, const BoundReport& b) {
    int ca = claim_index(a.claim), cb = claim_index(b.claim);
    if (ca != cb) return ca < cb;
    if (a.instance != b.instance) return a.instance < b.instance;
    return a.label < b.label;
  });
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "==";
  }
  return "?";
}

std::string to_string(CheckKind k) { return k == CheckKind::Check ? "check" : "advisory"; }

long long InstanceResult::failures() const {
  return std::count_if(reports.begin(), reports.end(), [](const BoundReport& r) { return r.is_failure(); });
}

std::uint64_t instance_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

GradedModulePresentation restrict_to_hyperplane(const GradedModulePresentation& m, const Polynomial& l) {
  const auto& ring = m.ring();
  const auto& f = ring.field();
  const int n = ring.nvars();
  if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous()) {
    throw std::invalid_argument("restriction needs a nonzero linear form");
  }
  std::vector<Coeff> c(n, 0);
  for (const auto& t : l.terms())
    for (int v = 0; v < n; ++v)
      if (t.mon[v] == 1) c[v] = t.coef;
  int k = n - 1;
  while (c[k] == 0) --k;
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v)
    if (v != k) names.push_back(ring.names()[v]);
  PolynomialRing target(f.p(), names);
  std::vector<Polynomial> images(n);
  std::vector<PolyTerm> solved;
  for (int v = 0, w = 0; v < n; ++v) {
    if (v == k) continue;
    images[v] = Polynomial::monomial(Monomial::variable(n - 1, w), 1);
    if (c[v] != 0) solved.push_back({Monomial::variable(n - 1, w), f.neg(f.div(c[v], c[k]))});
    ++w;
  }
  images[k] = Polynomial::from_terms(f, std::move(solved));
  std::vector<ModuleVector> rels;
  for (const auto& v : m.relation_vectors()) {
    std::vector<VecTerm> terms;
    for (std::uint32_t comp = 0; comp < v.comp_bound(); ++comp) {
      Polynomial p = substitute(f, v.component(comp), images, n - 1);
      for (const auto& t : p.terms()) terms.push_back({t.mon, comp, t.coef});
    }
    ModuleVector w = ModuleVector::from_terms(f, std::move(terms));
    if (!w.is_zero()) rels.push_back(std::move(w));
  }
  return minimize(GradedModulePresentation::from_relations(target, m.gens(), rels));
}

}  // namespace regext
