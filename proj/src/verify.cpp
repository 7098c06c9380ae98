#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "regext/bounds.hpp"
#include "regext/cohomology.hpp"
#include "regext/degrees.hpp"
#include "regext/saturation.hpp"

namespace regext {

namespace {

bool holds(Relation r, const BigInt& a, const BigInt& b) {
  switch (r) {
    case Relation::LessEq: return a <= b;
    case Relation::GreaterEq: return a >= b;
    case Relation::Equal: return a == b;
  }
  return false;
}

std::string label(const std::string& key, long long v) { return key + "=" + std::to_string(v); }

std::pair<int, int> ext_window(const ModuleData& e) { return {e.inv.indeg - 2, e.inv.reg + 2}; }

std::pair<int, int> join(const std::vector<const ModuleData*>& ms) {
  int lo = kPosInf, hi = kNegInf;
  for (const auto* m : ms) {
    if (m->is_zero()) continue;
    lo = std::min(lo, m->inv.indeg - 2);
    hi = std::max(hi, m->inv.reg + 2);
  }
  return {lo, hi};
}

long long length(const ModuleData& m) { return m.is_zero() ? 0 : static_cast<long long>(m.hilbert.degree()); }

class Collector {
 public:
  explicit Collector(std::string instance) : instance_(std::move(instance)) {}

  void check(const std::string& claim, const std::string& lab, Relation rel, std::vector<BigInt> lhs,
             std::vector<BigInt> rhs, std::optional<std::pair<int, int>> window = std::nullopt,
             CheckKind kind = CheckKind::Check) {
    BoundReport r;
    r.claim = claim;
    r.instance = instance_;
    r.label = lab;
    r.kind = kind;
    r.relation = rel;
    r.window = window;
    if (lhs.size() != rhs.size()) {
      r.pass = false;
      r.context["shape"] = "lhs and rhs lengths differ";
    } else {
      for (std::size_t k = 0; k < lhs.size(); ++k) r.pass = r.pass && holds(rel, lhs[k], rhs[k]);
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    out_.push_back(std::move(r));
  }

  void scalar(const std::string& claim, const std::string& lab, Relation rel, const BigInt& lhs, const BigInt& rhs,
              CheckKind kind = CheckKind::Check) {
    check(claim, lab, rel, {lhs}, {rhs}, std::nullopt, kind);
  }

  /// lhs(mu) rel rhs(mu) for mu in [lo, hi]; vacuous when the window is empty.
  void window(const std::string& claim, const std::string& lab, Relation rel, int lo, int hi,
              const std::function<BigInt(int)>& lhs, const std::function<BigInt(int)>& rhs) {
    if (lo > hi) {
      vacuous(claim, lab, "empty window");
      return;
    }
    std::vector<BigInt> l, r;
    for (int mu = lo; mu <= hi; ++mu) {
      l.push_back(lhs(mu));
      r.push_back(rhs(mu));
    }
    check(claim, lab, rel, std::move(l), std::move(r), std::make_pair(lo, hi));
  }

  void vacuous(const std::string& claim, const std::string& lab, const std::string& reason) {
    BoundReport r;
    r.claim = claim;
    r.instance = instance_;
    r.label = lab;
    r.vacuous = true;
    r.context["reason"] = reason;
    out_.push_back(std::move(r));
  }

  void error(const std::string& claim, const std::string& what) {
    BoundReport r;
    r.claim = claim;
    r.instance = instance_;
    r.label = "error";
    r.pass = false;
    r.context["error"] = what;
    out_.push_back(std::move(r));
  }

  void set_context(const std::string& key, const std::string& value) { out_.back().context[key] = value; }

  std::vector<BoundReport> take() { return std::move(out_); }

 private:
  std::string instance_;
  std::vector<BoundReport> out_;
};

/// Everything the claim groups share, computed once.
struct Instance {
  GradedModulePresentation m;
  ModuleData md;
  int n;
  int d;
  std::vector<ModuleData> exts;
  Saturation sat;
  ModuleData bar;
  int rbar;
  std::pair<int, int> window;
  std::uint64_t seed;

  Instance(const GradedModulePresentation& input, const VerifyOptions& o)
      : m(minimize(input)),
        md(analyze(m)),
        n(m.ring().nvars()),
        d(md.hilbert.dim()),
        exts(ext_into_ring_all(md.res)),
        sat(saturate_h0(m, md.inv.reg)),
        bar(analyze(sat.mbar)),
        rbar(bar.inv.reg),
        window(o.window.value_or(std::make_pair(md.inv.indeg - 2, md.inv.reg + 5))),
        seed(o.seed) {}

  const HilbertPolynomial& P() const { return md.hilbert.poly(); }
  long long h0() const { return sat.h0_length(); }
  BigInt hbar_at_rbar() const { return bar.is_zero() ? BigInt(0) : BigInt(bar.h(rbar)); }
};

void lemma_2_1(const Instance& x, Collector& c) {
  std::map<int, ComplexShape::Term> rows;
  for (int i = 0; i <= x.md.betti.pd(); ++i) {
    rows[i] = {*x.md.betti.min_shift(i), *x.md.betti.max_shift(i), x.md.betti.total(i)};
  }
  ComplexShape shape = dual_shape(rows);
  for (int i = 0; i <= x.n; ++i) {
    const auto& e = x.exts[i];
    std::string lab = label("i", i);
    if (e.is_zero()) {
      for (const char* id : {"Lemma2.1.1", "Lemma2.1.2", "Lemma2.1.3", "Lemma2.1.4"}) c.vacuous(id, lab, "H^i = 0");
      continue;
    }
    if (!shape.has(i)) {
      c.error("Lemma2.1.1", "nonzero cohomology at a zero term, i=" + std::to_string(i));
      continue;
    }
    const int f = shape.at(i).f;
    c.scalar("Lemma2.1.1", lab, Relation::GreaterEq, e.inv.indeg, f);
    c.scalar("Lemma2.1.2", lab, Relation::LessEq, e.inv.reg, bound_reg_homology(shape, i, x.n));
    auto [lo, hi] = ext_window(e);
    c.window("Lemma2.1.3", lab, Relation::LessEq, std::max(lo, f), hi, [&](int mu) { return BigInt(e.h(mu)); },
             [&](int mu) { return bound_dim_homology(shape, i, x.n, mu); });
    std::vector<BigInt> lhs, rhs;
    std::string where;
    for (const auto& [jm, v] : e.betti.entries()) {
      auto [j, mu] = jm;
      lhs.push_back(v);
      rhs.push_back(mu >= f + j ? bound_dim_tor(shape, i, j, x.n, mu) : BigInt(0));
      where += std::to_string(j) + ":" + std::to_string(mu) + " ";
    }
    c.check("Lemma2.1.4", lab, Relation::LessEq, std::move(lhs), std::move(rhs));
    c.set_context("entries", where);
  }
}

std::vector<long long> betti_totals(const BettiTable& b) {
  std::vector<long long> t;
  for (int i = 0; i <= b.pd(); ++i) t.push_back(b.total(i));
  return t;
}

void thm_2_3(const Instance& x, const std::string& name, const GradedModulePresentation& npres, Collector& c) {
  ModuleData nd = analyze(npres);
  std::string pl = "N=" + name;
  if (nd.is_zero()) {
    for (const char* id : {"Thm2.3.1", "Thm2.3.2", "Thm2.3.3", "Thm2.3.4"}) c.vacuous(id, pl, "N = 0");
    return;
  }
  HomComplex hc = hom_complex(x.md.res, nd.res);
  auto tm = betti_totals(x.md.betti), tn = betti_totals(nd.betti);
  const int rm = x.md.inv.reg - x.md.inv.indeg, rn = nd.inv.reg - nd.inv.indeg;
  const int delta = x.md.inv.indeg - nd.inv.indeg;
  BigInt gap;
  bool any = false;
  for (int i = 0; i <= x.n; ++i) {
    const int k = i - hc.low;
    const int len = static_cast<int>(hc.terms.size());
    ModuleData e = analyze(GradedModulePresentation::free(x.m.ring(), GradedFreeModule()));
    if (k >= 0 && k < len) {
      const GradedMap* in = k >= 1 ? &hc.maps[k - 1] : nullptr;
      const GradedMap* out = k + 1 < len ? &hc.maps[k] : nullptr;
      e = analyze(cohomology_at(x.m.ring(), hc.terms[k], in, out));
    }
    std::string lab = pl + "," + label("i", i);
    if (e.is_zero()) {
      for (const char* id : {"Thm2.3.1", "Thm2.3.2", "Thm2.3.3", "Thm2.3.4"}) c.vacuous(id, lab, "Ext^i = 0");
      continue;
    }
    const long long ei = static_cast<long long>(nd.inv.indeg) - x.md.inv.reg - i;
    BigInt ti = hom_rank(tm, tn, i), ti1 = hom_rank(tm, tn, i + 1);
    c.scalar("Thm2.3.1", lab, Relation::GreaterEq, e.inv.indeg, ei);
    BigInt g = BigInt(e.inv.indeg) - ei;
    if (!any || g < gap) gap = g;
    any = true;
    c.scalar("Thm2.3.2", lab, Relation::LessEq, BigInt(e.inv.reg) + i,
             bound_reg_ext_pair(rm, rn, ti, ti1, delta, x.n));
    auto [lo, hi] = ext_window(e);
    c.window("Thm2.3.3", lab, Relation::LessEq, static_cast<int>(std::max<long long>(lo, ei)), hi,
             [&](int mu) { return BigInt(e.h(mu)); },
             [&](int mu) { return ti * binomial(mu - ei + x.n - 1, x.n - 1); });
    std::vector<BigInt> lhs, rhs;
    for (const auto& [jm, v] : e.betti.entries()) {
      auto [j, mu] = jm;
      lhs.push_back(v);
      rhs.push_back(mu >= ei + j ? ti * binomial(x.n, j) * binomial(mu - ei - j + x.n - 1, x.n - 1) : BigInt(0));
    }
    c.check("Thm2.3.4", lab, Relation::LessEq, std::move(lhs), std::move(rhs));
  }
  if (any) {
    c.scalar("Thm2.3.1", pl + ",attained", Relation::Equal, gap, 0, CheckKind::Advisory);
  }
}

void lemma_2_4(const Instance& x, Collector& c) {
  for (int i = 0; i <= x.n; ++i) {
    c.scalar("Lemma2.4", label("i", i), Relation::LessEq, x.md.betti.total(i),
             bound_betti(x.md.inv.mu, x.n, i, x.md.inv.reg, x.md.inv.indeg));
  }
}

void remark_3_1(const Instance& x, int offset, Collector& c) {
  const int reg = x.md.inv.reg, indeg = x.md.inv.indeg, n = x.n;
  std::vector<int> ts{indeg, reg, reg + offset};
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (int t : ts) {
    ModuleData mt = analyze(truncate(x.m, t));
    std::string lab = label("t", t);
    if (mt.is_zero()) {
      c.vacuous("Rem3.1.i", lab, "truncation is zero");
    } else {
      c.scalar("Rem3.1.i", lab, Relation::Equal, mt.inv.reg, std::max(t, reg));
    }
    if (t == reg) {
      c.scalar("Rem3.1.i", "mu(M>=reg)", Relation::Equal, mt.inv.mu, x.md.h(reg));
    }
    auto et = ext_into_ring_all(mt.res);
    for (int i = 0; i < n - 1; ++i) {
      auto [lo, hi] = join({&x.exts[i], &et[i]});
      std::string li = lab + "," + label("i", i);
      if (x.exts[i].is_zero() && et[i].is_zero()) {
        c.vacuous("Rem3.1.ii", li, "both Ext modules are zero");
        continue;
      }
      c.window("Rem3.1.ii", li, Relation::Equal, lo, hi, [&](int mu) { return BigInt(et[i].h(mu)); },
               [&](int mu) { return BigInt(x.exts[i].h(mu)); });
    }
    if (x.exts[n - 1].is_zero()) {
      c.vacuous("Rem3.1.iii", lab, "Ext^{n-1} = 0");
    } else {
      // the cokernel Hom(Mbar, k)_{>-t}[n] ends in degree -indeg(Mbar) - n, which enters reg with a +1
      const int tail = x.bar.is_zero() || t <= indeg ? kNegInf : -x.bar.inv.indeg - n + 1;
      c.scalar("Rem3.1.iii", lab, Relation::LessEq, x.exts[n - 1].inv.reg, std::max(et[n - 1].inv.reg, tail));
      c.scalar("Rem3.1.iii", "printed," + lab, Relation::LessEq, x.exts[n - 1].inv.reg,
               std::max(et[n - 1].inv.reg, -indeg - n), CheckKind::Advisory);
    }
    auto [lo, hi] = join({&x.exts[n], &et[n]});
    if (x.exts[n].is_zero() && et[n].is_zero()) {
      c.vacuous("Rem3.1.iv", lab, "both Ext^n are zero");
    } else {
      c.window("Rem3.1.iv", lab, Relation::Equal, lo, hi, [&](int mu) { return BigInt(et[n].h(mu)); },
               [&](int mu) { return BigInt(mu <= -n - t ? x.exts[n].h(mu) : 0); });
    }
  }
  const auto& top = x.exts[n];
  if (x.sat.h0_is_zero()) {
    c.scalar("Rem3.1.v", "h0=0", Relation::Equal, length(top), 0);
  } else {
    c.scalar("Rem3.1.v", "indeg", Relation::Equal, top.inv.indeg, -x.sat.h0_end() - n);
    c.scalar("Rem3.1.v", "reg", Relation::Equal, top.inv.reg, -x.sat.h0_indeg() - n);
    auto h0 = [&](int t) {
      auto it = x.sat.h0_dims.find(t);
      return BigInt(it == x.sat.h0_dims.end() ? 0 : it->second);
    };
    c.window("Rem3.1.v", "dims", Relation::Equal, -x.sat.h0_end() - n - 2, -x.sat.h0_indeg() - n + 2,
             [&](int mu) { return BigInt(top.h(mu)); }, [&](int mu) { return h0(-mu - n); });
  }
  auto lc = local_cohomology_dims(x.exts, n, x.window.first, x.window.second);
  c.window("Rem3.1.v", "h0-duality", Relation::Equal, x.window.first, x.window.second,
           [&](int t) { return BigInt(lc(0, t)); },
           [&](int t) {
             auto it = x.sat.h0_dims.find(t);
             return BigInt(it == x.sat.h0_dims.end() ? 0 : it->second);
           });
}

void linear_truncation(const Instance& x, Collector& c) {
  if (x.d < 1) {
    c.vacuous("Prop3.3", "dim", "finite length");
    c.vacuous("Cor3.4", "dim", "finite length");
    return;
  }
  const int n = x.n, d = x.d, r = x.rbar;
  GradedModulePresentation lp = truncate(x.sat.mbar, r);
  ModuleData l = analyze(lp);
  c.scalar("Cor3.4", "precondition:reg", Relation::Equal, l.inv.reg, r);
  c.scalar("Cor3.4", "precondition:indeg", Relation::Equal, l.inv.indeg, r);
  for (int i = 0; i <= n; ++i) {
    c.scalar("Cor3.4", label("i", i), Relation::Equal, l.betti.total(i), betti_from_hilbert(x.P(), n, d, r, i));
  }
  Saturation ls = saturate_h0(lp, r);
  c.scalar("Prop3.3", "precondition:h0", Relation::Equal, ls.h0_length(), 0);
  const auto& f = lp.ring().field();
  std::mt19937_64 rng(x.seed ^ 0x5bd1e995ULL);
  Polynomial form;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kFilterRegularRetries) throw std::runtime_error("no non-zero-divisor found");
    std::vector<PolyTerm> terms;
    for (int v = 0; v < n; ++v) terms.push_back({Monomial::variable(n, v), static_cast<Coeff>(rng() % f.p())});
    form = Polynomial::from_terms(f, std::move(terms));
    if (!form.is_zero() && is_filter_regular(ls, form)) break;
  }
  ModuleData mq = analyze(truncate(restrict_to_hyperplane(lp, form), r + 1));
  BigInt p_r = x.P()(r);
  for (int i = 0; i <= n; ++i) {
    long long prev = i >= 1 ? mq.betti.total(i - 1) : 0;
    c.scalar("Prop3.3", label("i", i), Relation::Equal, l.betti.total(i), binomial(n - 1, i) * p_r - prev);
    c.set_context("quotient", mq.is_zero() ? "zero" : "nonzero");
    c.set_context("dim", std::to_string(d));
  }
}

void thm_3_5(const Instance& x, Collector& c) {
  const int n = x.n, d = x.d, indeg = x.md.inv.indeg;
  if (d < 2) {
    for (int i = 0; i <= n; ++i) {
      const auto& e = x.exts[i];
      if (e.is_zero()) c.vacuous("Thm3.5.1", label("i", i), "Ext^i = 0");
      else c.scalar("Thm3.5.1", label("i", i), Relation::LessEq, BigInt(e.inv.reg) + i, -indeg);
    }
    return;
  }
  const int r = x.rbar;
  if (x.exts[n].is_zero()) c.vacuous("Thm3.5.2a", "i=0", "Ext^n = 0");
  else c.scalar("Thm3.5.2a", "i=0", Relation::LessEq, BigInt(x.exts[n].inv.reg) + n, -indeg);
  if (x.exts[n - 1].is_zero()) {
    c.vacuous("Thm3.5.2b", "i=1", "Ext^{n-1} = 0");
  } else {
    BigInt rhs = std::max(x.P()(r) - x.P().delta(1)(r) - r, BigInt(-indeg - 1));
    c.scalar("Thm3.5.2b", "i=1", Relation::LessEq, BigInt(x.exts[n - 1].inv.reg) + n - 1, rhs);
  }
  for (int i = 2; i <= n; ++i) {
    const auto& e = x.exts[n - i];
    if (e.is_zero()) {
      c.vacuous("Thm3.5.2c", label("i", i), "Ext^{n-i} = 0");
    } else if (i > d) {
      c.error("Thm3.5.2c", "Ext^{n-i} nonzero above the dimension, i=" + std::to_string(i));
    } else {
      c.scalar("Thm3.5.2c", label("i", i), Relation::LessEq, BigInt(e.inv.reg) + n - i,
               bound_reg_ext_top(d, i, x.P()(r), r));
    }
  }
}

void euler_characteristic(const Instance& x, Collector& c) {
  auto [lo, hi] = x.window;
  auto lc = local_cohomology_dims(x.exts, x.n, lo, hi);
  c.window("EGS", "window", Relation::Equal, lo, hi, [&](int t) { return BigInt(x.md.h(t)) - x.P()(t); },
           [&](int t) {
             BigInt s = 0;
             for (int i = 0; i <= x.n; ++i) s += (i % 2 ? -1 : 1) * BigInt(lc(i, t));
             return s;
           });
}

void lemma_4_1(const Instance& x, Collector& c) {
  if (x.d < 1) {
    c.vacuous("Lemma4.1.i", "dim", "finite length");
    c.vacuous("Lemma4.1.ii", "dim", "finite length");
    return;
  }
  const int r = x.rbar;
  c.window("Lemma4.1.i", "hilbert", Relation::Equal, r, r + 5, [&](int t) { return BigInt(x.bar.h(t)); },
           [&](int t) { return x.P()(t); });
  c.window("Lemma4.1.i", "monotone", Relation::LessEq, r - 1, r + 4, [&](int t) { return x.P()(t); },
           [&](int t) { return x.P()(t + 1); });
  c.scalar("Lemma4.1.ii", "deg", Relation::GreaterEq, x.hbar_at_rbar(), x.md.hilbert.degree());
}

void degree_bounds(const Instance& x, const FilterRegularData& fr, Collector& c) {
  const int n = x.n, d = x.d;
  if (d < 1) {
    for (const char* id : {"Thm4.2", "Cor4.3", "Lemma4.4.i", "Lemma4.4.ii", "Thm4.5.i", "Thm4.5.ii", "Thm4.6"})
      c.vacuous(id, "dim", "finite length");
    return;
  }
  for (int i = 1; i <= d; ++i) {
    const auto& e = x.exts[n - i];
    const long long r0 = fr.rbar[i - 1];
    const int r1 = fr.rbar[i];
    HilbertPolynomial dp = x.P().delta(i - 1);
    BigInt dval = r1 == kNegInf ? dp(0) : dp(r1 - 1);
    std::string lab = label("i", i);
    std::vector<BigInt> got = analyze(fr.quotients[i - 1]).hilbert.poly().coeffs();
    std::vector<BigInt> want = dp.coeffs();
    got.resize(std::max(got.size(), want.size()));
    want.resize(got.size());
    c.check("Thm4.2", "poly," + lab, Relation::Equal, got, want);
    if (e.is_zero()) {
      c.vacuous("Thm4.2", lab, "Ext^{n-i} = 0");
      c.vacuous("Cor4.3", lab, "Ext^{n-i} = 0");
      continue;
    }
    c.scalar("Thm4.2", "indeg," + lab, Relation::GreaterEq, e.inv.indeg, -r0 - n + 1);
    c.scalar("Thm4.2", "indeg-sharp," + lab, Relation::GreaterEq, e.inv.indeg, -r0 - n + i, CheckKind::Advisory);
    auto [lo, hi] = ext_window(e);
    auto lhs = [&](int mu) { return BigInt(e.h(mu)); };
    c.window("Thm4.2", "dim," + lab, Relation::LessEq, lo, hi, lhs,
             [&](int mu) { return binomial(mu + r0 + n - 1, i - 1) * dval; });
    c.window("Cor4.3", "first," + lab, Relation::LessEq, lo, hi, lhs,
             [&](int mu) { return binomial(mu + r0 + n - 1, i - 1) * fr.hbar[i - 1]; });
    c.window("Cor4.3", "second," + lab, Relation::LessEq, lo, hi, lhs,
             [&](int mu) { return binomial(static_cast<long long>(mu) + x.rbar + n - 1, i - 1) * x.hbar_at_rbar(); });
  }

  // indeg-normalized: M' = M shifted so that indeg M' = 0
  const int s = x.md.inv.indeg;
  const BigInt B = fr.B;
  const int span = x.md.inv.reg - s;
  c.window("Lemma4.4.i", "window", Relation::LessEq, -2, span + 5, [&](int mu) { return BigInt(x.md.h(mu + s)); },
           [&](int mu) { return B * binomial(mu + d - 1, d - 1); });
  c.window("Lemma4.4.ii", "window", Relation::LessEq, -2, span + 5, [&](int mu) { return BigInt(x.md.h(mu + s)); },
           [&](int mu) { return BigInt(x.md.inv.mu) * binomial(mu + n - 1, n - 1); });
  for (int i = 1; i <= n; ++i) {
    const auto& e = x.exts[n - i];
    std::string lab = label("i", i);
    if (e.is_zero()) {
      c.vacuous("Thm4.5.i", lab, "Ext^{n-i} = 0");
      c.vacuous("Thm4.5.ii", lab, "H^i = 0");
      continue;
    }
    const long long rp = i - 1 <= d ? static_cast<long long>(fr.rbar[i - 1]) - s : 0;
    const BigInt k = B * binomial(rp + d - i, d - i);
    auto [lo, hi] = ext_window(e);
    c.window("Thm4.5.i", lab, Relation::LessEq, lo + s, hi + s, [&](int mu) { return BigInt(e.h(mu - s)); },
             [&](int mu) { return k * binomial(mu + rp + n - 1, i - 1); });
    c.window("Thm4.5.ii", lab, Relation::LessEq, -hi - s - n, -lo - s - n,
             [&](int nu) { return BigInt(e.h(-nu - s - n)); },
             [&](int nu) { return k * binomial(-nu + rp - 1, i - 1); });
  }
  const HilbertData shifted = x.md.hilbert.shifted(-s);
  const auto& e = shifted.coefficients();
  const BigInt rp1 = BigInt(x.rbar) - s + 1;
  for (int i = 0; i < d; ++i) {
    c.scalar("Thm4.6", label("i", i), Relation::LessEq, abs(e[i]), B * power(rp1, i));
  }
}

BigInt hdeg_bounds(const Instance& x, Collector& c) {
  HdegCalculator calc;
  const HdegResult hm = calc.compute(x.m);
  const BigInt hd = hm.value, deg = x.md.hilbert.degree();
  const BigInt hb = x.bar.is_zero() ? BigInt(0) : calc.value(x.sat.mbar);
  const int n = x.n, d = x.d, reg = x.md.inv.reg, indeg = x.md.inv.indeg;
  const long long mu = x.md.inv.mu;
  const bool cm = x.md.inv.depth == d;
  c.scalar("Def5.1.a", "ge", Relation::GreaterEq, hd, deg);
  c.scalar("Def5.1.a", "cm-iff", Relation::Equal, hd == deg ? 1 : 0, cm ? 1 : 0);
  c.scalar("Def5.1.b", "split", Relation::Equal, hd, hb + x.h0());
  if (d > 0) c.scalar("Thm5.2", "bound", Relation::LessEq, hd, bound_hdeg_betti(mu, n, reg, indeg, d));
  else c.vacuous("Thm5.2", "bound", "finite length");
  BigInt sum = 0;
  for (int t = indeg; t <= reg; ++t) sum += x.md.h(t);
  BigInt degbar = x.bar.is_zero() ? BigInt(0) : x.bar.hilbert.degree();
  c.scalar("Lemma5.3", "lower", Relation::LessEq, degbar + x.h0(), sum);
  c.scalar("Lemma5.3", "upper", Relation::LessEq, sum, BigInt(mu) * binomial(reg - indeg + n, n));
  if (d <= 1) {
    c.scalar("Lemma5.4.i", "value", Relation::Equal, hd, x.h0() + x.hbar_at_rbar());
  } else {
    const auto& e = x.exts[n - 1];
    if (e.is_zero()) {
      c.vacuous("Lemma5.4.ii", "bound", "Ext^{n-1} = 0");
    } else {
      BigInt hr = x.hbar_at_rbar();
      c.scalar("Lemma5.4.ii", "bound", Relation::LessEq, calc.value(e.pres), (hr - deg) * hr);
    }
  }
  if (d >= 1) c.scalar("Thm5.5", "bound", Relation::LessEq, hd, bound_hdeg_hilbert(x.h0(), x.P()(x.rbar), d));
  else c.vacuous("Thm5.5", "bound", "finite length");
  if (mu == 1 && x.m.gens().twists[0] == 0 && d >= 1) {
    c.scalar("Cor5.6", "bound", Relation::LessEq, hd, bound_hdeg_cyclic(n, reg, d));
  } else {
    c.vacuous("Cor5.6", "bound", "not a positive-dimensional R/I");
  }
  c.scalar("DGV-reg", "bound", Relation::LessEq, reg, BigInt(x.md.inv.gen) + hd - 1);
  return hd;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int a : v) s += (s.empty() ? "" : ",") + (a == kNegInf ? std::string("-inf") : std::to_string(a));
  return s;
}

}  // namespace

InstanceResult verify_instance(const GradedModulePresentation& input, const VerifyOptions& options) {
  InstanceResult res;
  res.id = options.instance_id;
  Collector c(options.instance_id);
  const Instance x(input, options);
  auto& sf = res.summary.fields;
  sf["n"] = std::to_string(x.n);
  if (x.md.is_zero()) {
    sf["dim"] = "-1";
    for (const auto& id : claim_ids()) c.vacuous(id, "zero module", "M = 0");
    res.reports = c.take();
    return res;
  }

  const auto& inv = x.md.inv;
  sf["dim"] = std::to_string(x.d);
  sf["depth"] = std::to_string(inv.depth);
  sf["pd"] = std::to_string(inv.pd);
  sf["reg"] = std::to_string(inv.reg);
  sf["indeg"] = std::to_string(inv.indeg);
  sf["mu"] = std::to_string(inv.mu);
  sf["gen"] = std::to_string(inv.gen);
  sf["deg"] = to_decimal(x.md.hilbert.degree());
  sf["h0_length"] = std::to_string(x.h0());
  sf["reg_bar"] = x.bar.is_zero() ? "-inf" : std::to_string(x.rbar);
  std::string e;
  for (const auto& v : x.md.hilbert.coefficients()) e += (e.empty() ? "" : ",") + to_decimal(v);
  sf["e"] = e;
  res.summary.betti = x.md.betti.entries();

  auto guard = [&](const std::string& claim, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      c.error(claim, ex.what());
      res.errors.push_back(claim + ": " + ex.what());
    }
  };

  guard("Lemma2.1.1", [&] { lemma_2_1(x, c); });
  guard("Thm2.3.1", [&] {
    thm_2_3(x, "R", GradedModulePresentation::free(x.m.ring(), GradedFreeModule({0})), c);
    for (const auto& [name, p] : options.partners) thm_2_3(x, name, p, c);
  });
  guard("Lemma2.4", [&] { lemma_2_4(x, c); });
  guard("Rem3.1.i", [&] { remark_3_1(x, options.truncation_offset, c); });
  guard("Prop3.3", [&] { linear_truncation(x, c); });
  guard("Thm3.5.1", [&] { thm_3_5(x, c); });
  guard("EGS", [&] { euler_characteristic(x, c); });
  guard("Lemma4.1.i", [&] { lemma_4_1(x, c); });
  guard("Thm4.2", [&] {
    FilterRegularData fr = filter_regular_sequence(x.m, x.seed);
    res.summary.rbar = fr.rbar;
    sf["B"] = std::to_string(fr.B);
    sf["rbar"] = join_ints(fr.rbar);
    sf["forms_retries"] = std::to_string(fr.retries);
    degree_bounds(x, fr, c);
  });
  guard("Def5.1.a", [&] {
    sf["hdeg"] = to_decimal(hdeg_bounds(x, c));
  });

  res.reports = c.take();
  sort_reports(res.reports);
  return res;
}

std::vector<InstanceResult> verify_corpus(
    const std::vector<std::pair<std::string, GradedModulePresentation>>& instances, std::uint64_t seed, int jobs) {
  std::vector<std::optional<InstanceResult>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < instances.size();) {
      const auto& [id, m] = instances[k];
      VerifyOptions opt;
      opt.instance_id = id;
      opt.seed = instance_seed(seed, id);
      for (std::size_t j = k; j-- > 0;) {
        if (instances[j].second.ring() == m.ring()) {
          opt.partners.push_back(instances[j]);
          break;
        }
      }
      results[k] = verify_instance(m, opt);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<InstanceResult> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace regext
