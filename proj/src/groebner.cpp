#include "regext/groebner.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <span>
#include <stdexcept>
#include <unordered_set>

namespace regext {

namespace {

// work[pos..] + c*m*b as a fresh sorted term list
std::vector<VecTerm> merge_tail(const PrimeField& f, std::span<const VecTerm> a, Coeff c, const Monomial& m,
                                const ModuleVector& b) {
  std::vector<VecTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0;
  auto ib = b.terms().begin(), eb = b.terms().end();
  VecTerm cur;
  bool have = false;
  auto load = [&]() {
    have = ib != eb;
    if (have) cur = {ib->mon * m, ib->comp, f.mul(ib->coef, c)};
  };
  load();
  while (ia < a.size() || have) {
    int cmp = ia == a.size() ? -1 : !have ? 1 : term_cmp(a[ia], cur);
    if (cmp > 0) {
      out.push_back(a[ia++]);
    } else if (cmp < 0) {
      out.push_back(cur);
      ++ib;
      load();
    } else {
      Coeff s = f.add(a[ia].coef, cur.coef);
      if (s != 0) out.push_back({a[ia].mon, a[ia].comp, s});
      ++ia;
      ++ib;
      load();
    }
  }
  return out;
}

/// Positions of one degree D in a graded free module: (comp, monomial) with
/// deg(monomial) + twist[comp] = D, numbered in decreasing module order.
class Slice {
 public:
  Slice(int nvars, const std::vector<int>& twists, long long degree)
      : n_(nvars), degree_(degree), twists_(twists) {
    long long top = 0;
    for (int a : twists) top = std::max(top, degree - a);
    binom_.assign((top + n_ + 1) * (n_ + 1), 0);
    for (long long a = 0; a <= top + n_; ++a) {
      for (int b = 0; b <= n_ && b <= a; ++b) {
        binom_[a * (n_ + 1) + b] = (b == 0 || b == a) ? 1 : C(a - 1, b - 1) + C(a - 1, b);
      }
    }
    offsets_.reserve(twists.size() + 1);
    std::size_t total = 0;
    for (int a : twists) {
      offsets_.push_back(total);
      long long k = degree - a;
      if (k >= 0) total += C(k + n_ - 1, n_ - 1);
    }
    offsets_.push_back(total);
    size_ = total;
  }

  /// Number of positions that a dense accumulator for degree D needs, or 0 when not worth it.
  static std::size_t estimate(int nvars, const std::vector<int>& twists, long long degree, std::size_t cap) {
    double total = 0;
    for (int a : twists) {
      long long k = degree - a;
      if (k < 0) continue;
      double c = 1;
      for (int j = 1; j < nvars; ++j) c = c * static_cast<double>(k + j) / j;
      total += c;
      if (total > static_cast<double>(cap)) return 0;
    }
    return static_cast<std::size_t>(total);
  }

  std::size_t size() const { return size_; }

  std::size_t index(const Monomial& m, std::uint32_t comp) const {
    std::size_t r = 0;
    long long k = m.degree();
    for (int v = n_ - 1; v >= 1; --v) {
      const int e = m[v];
      r += C(k + v, v) - C(k - e + v, v);
      k -= e;
    }
    return offsets_[comp] + r;
  }

  std::pair<Monomial, std::uint32_t> term_at(std::size_t pos) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), pos);
    std::uint32_t comp = static_cast<std::uint32_t>(it - offsets_.begin() - 1);
    while (offsets_[comp + 1] == offsets_[comp]) ++comp;
    std::size_t r = pos - offsets_[comp];
    std::array<int, kMaxVars> e{};
    long long k = degree_ - twists_[comp];
    for (int v = n_ - 1; v >= 1; --v) {
      int ev = 0;
      while (C(k + v, v) - C(k - (ev + 1) + v, v) <= r) ++ev;
      r -= C(k + v, v) - C(k - ev + v, v);
      e[v] = ev;
      k -= ev;
    }
    e[0] = static_cast<int>(k);
    return {Monomial(n_, std::span<const int>(e.data(), n_)), comp};
  }

 private:
  std::uint64_t C(long long a, long long b) const {
    if (b < 0 || a < b || a < 0) return 0;
    return binom_[a * (n_ + 1) + b];
  }

  int n_;
  long long degree_;
  const std::vector<int>& twists_;
  std::vector<std::uint64_t> binom_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

constexpr std::size_t kDenseCap = 1u << 20;

// One reduction step: the working vector received c * q * basis[g].
struct Step {
  int g;
  Coeff c;
  Monomial q;
};

// sum of c * q * v over the parts, all of the given degree in `ambient`
ModuleVector combine(const PrimeField& f, const GradedFreeModule& ambient, int degree,
                     const std::vector<std::tuple<Coeff, Monomial, const ModuleVector*>>& parts) {
  const int n = [&] {
    for (const auto& [c, q, v] : parts)
      if (!v->is_zero()) return v->lead().mon.nvars();
    return 0;
  }();
  if (n == 0) return {};
  if (Slice::estimate(n, ambient.twists, degree, kDenseCap) == 0) {
    ModuleVector out;
    for (const auto& [c, q, v] : parts) out = add_mul(f, out, c, q, *v);
    return out;
  }
  Slice slice(n, ambient.twists, degree);
  std::vector<Coeff> acc(slice.size(), 0);
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& [c, q, v] : parts) {
    for (const auto& t : v->terms()) {
      std::size_t k = slice.index(t.mon * q, t.comp);
      acc[k] = f.add(acc[k], f.mul(c, t.coef));
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
  }
  std::vector<VecTerm> out;
  for (std::size_t k = lo; k <= hi && lo != SIZE_MAX; ++k) {
    if (acc[k] == 0) continue;
    auto [mon, comp] = slice.term_at(k);
    out.push_back({mon, comp, acc[k]});
  }
  return ModuleVector::from_sorted(std::move(out));
}

// Lead-term divisor lookup over a growing monic basis.
class Reducer {
 public:
  Reducer(const PrimeField& f, const std::vector<ModuleVector>& basis, const GradedFreeModule& ambient)
      : f_(f), basis_(basis), ambient_(ambient), by_comp_(ambient.twists.size()) {}

  // Registers basis[k]; elements must be registered in index order.
  void add(int k) { by_comp_[basis_[k].lead().comp].push_back(k); }

  int find_divisor(const Monomial& m, std::uint32_t comp, int skip = -1) const {
    for (int idx : by_comp_[comp]) {
      if (idx == skip) continue;
      if (basis_[idx].lead().mon.divides(m)) return idx;
    }
    return -1;
  }

  // Full reduction; `skip` excludes one basis element (used when interreducing).
  ModuleVector reduce(const ModuleVector& v, int skip = -1, std::vector<Step>* steps = nullptr) const {
    if (v.is_zero()) return v;
    auto deg = v.degree(ambient_);
    if (deg && Slice::estimate(v.lead().mon.nvars(), ambient_.twists, *deg, kDenseCap) > 0) {
      return reduce_dense(v, *deg, skip, steps);
    }
    return reduce_merge(v, skip, steps);
  }

 private:
  ModuleVector reduce_dense(const ModuleVector& v, int degree, int skip, std::vector<Step>* steps) const {
    const int n = v.lead().mon.nvars();
    Slice slice(n, ambient_.twists, degree);
    std::vector<Coeff> acc(slice.size(), 0);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& t : v.terms()) {
      std::size_t k = slice.index(t.mon, t.comp);
      acc[k] = t.coef;
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    std::vector<VecTerm> result;
    for (std::size_t pos = lo; pos <= hi; ++pos) {
      if (acc[pos] == 0) continue;
      auto [mon, comp] = slice.term_at(pos);
      int g = find_divisor(mon, comp, skip);
      if (g < 0) {
        result.push_back({mon, comp, acc[pos]});
        continue;
      }
      const ModuleVector& gv = basis_[g];
      const Coeff c = f_.neg(acc[pos]);  // basis is monic
      const Monomial q = mon / gv.lead().mon;
      if (steps) steps->push_back({g, c, q});
      acc[pos] = 0;
      for (auto it = gv.terms().begin() + 1; it != gv.terms().end(); ++it) {
        std::size_t k = slice.index(it->mon * q, it->comp);
        acc[k] = f_.add(acc[k], f_.mul(c, it->coef));
        hi = std::max(hi, k);
      }
    }
    return ModuleVector::from_sorted(std::move(result));
  }

  ModuleVector reduce_merge(const ModuleVector& v, int skip, std::vector<Step>* steps) const {
    std::vector<VecTerm> work = v.terms();
    std::vector<VecTerm> result;
    while (!work.empty()) {
      const VecTerm& t = work.front();
      int g = find_divisor(t.mon, t.comp, skip);
      if (g < 0) {
        result.push_back(t);
        work.erase(work.begin());
        continue;
      }
      const ModuleVector& gv = basis_[g];
      Coeff c = f_.neg(t.coef);  // basis is monic
      Monomial q = t.mon / gv.lead().mon;
      if (steps) steps->push_back({g, c, q});
      work = merge_tail(f_, work, c, q, gv);
    }
    return ModuleVector::from_sorted(std::move(result));
  }

  const PrimeField& f_;
  const std::vector<ModuleVector>& basis_;
  const GradedFreeModule& ambient_;
  std::vector<std::vector<int>> by_comp_;
};

int vector_degree(const ModuleVector& v, const GradedFreeModule& ambient) {
  auto d = v.degree(ambient);
  if (!d) throw std::invalid_argument("inhomogeneous vector in Groebner basis input");
  return *d;
}

// Homogeneous Buchberger, degree by degree. Inputs and S-pairs of degree D are handled
// only after everything of lower degree, so inputs that do not reduce to zero form a
// minimal generating set.
// With a tracking module, every basis element carries its expression in the inputs.
class Buchberger {
 public:
  Buchberger(const PolynomialRing& ring, const GradedFreeModule& ambient, const GradedFreeModule* tracking = nullptr)
      : f_(ring.field()),
        ambient_(ambient),
        reducer_(f_, basis_, ambient_),
        tracking_(tracking ? std::optional<GradedFreeModule>(*tracking) : std::nullopt) {}

  // `rep` is the input's expression in the tracking module (ignored without one).
  void add_input(const ModuleVector& v, ModuleVector rep = {}) {
    if (v.is_zero()) return;
    if (v.comp_bound() > static_cast<std::uint32_t>(ambient_.rank())) {
      throw std::invalid_argument("vector outside the ambient free module");
    }
    inputs_[vector_degree(v, ambient_)].push_back({v, std::move(rep)});
  }

  // With inputs_only, stops once every input has been seen; enough to decide minimality.
  void run(bool inputs_only = false) {
    while (!inputs_.empty() || (!inputs_only && !pairs_.empty())) {
      int d_pair = pairs_.empty() ? INT32_MAX : pairs_.begin()->first;
      int d_in = inputs_.empty() ? INT32_MAX : inputs_.begin()->first;
      int D = std::min(d_pair, d_in);
      if (d_pair == D) {
        std::vector<Pair> batch = std::move(pairs_.begin()->second);
        pairs_.erase(pairs_.begin());
        for (const Pair& p : batch) {
          pending_.erase(key(p.i, p.j));
          if (chain_criterion(p)) continue;
          std::vector<Step> steps;
          ModuleVector r = reducer_.reduce(spoly(p), -1, tracking_ ? &steps : nullptr);
          if (r.is_zero()) continue;
          ModuleVector rep;
          if (tracking_) {
            auto parts = pair_parts(p);
            append(parts, steps);
            rep = combine(f_, *tracking_, D, parts);
          }
          insert(r, std::move(rep));
        }
        // pairs created in this degree are impossible: a new element's lead is reduced,
        // so lcm with an existing lead has strictly larger degree
      }
      if (d_in == D) {
        auto batch = std::move(inputs_.begin()->second);
        inputs_.erase(inputs_.begin());
        for (auto& [v, rep] : batch) {
          std::vector<Step> steps;
          ModuleVector r = reducer_.reduce(v, -1, tracking_ ? &steps : nullptr);
          ModuleVector full;
          if (tracking_) {
            std::vector<std::tuple<Coeff, Monomial, const ModuleVector*>> parts{
                {1, Monomial(v.lead().mon.nvars()), &rep}};
            append(parts, steps);
            full = combine(f_, *tracking_, D, parts);
          }
          if (r.is_zero()) {
            if (tracking_ && !full.is_zero()) zero_reductions_.push_back(std::move(full));
            continue;
          }
          minimal_.push_back(v);
          insert(r, std::move(full));
        }
      }
    }
  }

  std::vector<ModuleVector> reduced_basis() {
    // The basis arrives in non-decreasing degree with reduced leads, so it is already
    // minimal; interreduce tails against every other element.
    std::vector<ModuleVector> out;
    out.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const ModuleVector& g = basis_[i];
      std::vector<VecTerm> tail(g.terms().begin() + 1, g.terms().end());
      ModuleVector t = reducer_.reduce(ModuleVector::from_sorted(std::move(tail)), static_cast<int>(i));
      std::vector<VecTerm> terms;
      terms.reserve(t.size() + 1);
      terms.push_back(g.lead());
      terms.insert(terms.end(), t.terms().begin(), t.terms().end());
      out.push_back(ModuleVector::from_sorted(std::move(terms)));
    }
    return out;
  }

  const std::vector<ModuleVector>& minimal() const { return minimal_; }

  // Relations among the inputs, in the tracking module: inputs that reduced to zero, and
  // for each basis element g_k the S-pairs (i, k), i < k, whose lead quotients are minimal.
  std::vector<ModuleVector> relations() const {
    std::vector<ModuleVector> out = zero_reductions_;
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      const VecTerm& lk = basis_[k].lead();
      std::vector<std::pair<int, Monomial>> cand;
      for (int i = 0; i < k; ++i) {
        const VecTerm& li = basis_[i].lead();
        if (li.comp != lk.comp) continue;
        cand.push_back({i, li.mon.lcm(lk.mon) / lk.mon});
      }
      for (std::size_t a = 0; a < cand.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
          if (a == b || !cand[b].second.divides(cand[a].second)) continue;
          redundant = !(cand[b].second == cand[a].second) || b < a;
        }
        if (redundant) continue;
        const int i = cand[a].first;
        Pair p{i, k, basis_[i].lead().mon.lcm(lk.mon)};
        std::vector<Step> steps;
        ModuleVector r = reducer_.reduce(spoly(p), -1, &steps);
        if (!r.is_zero()) throw std::logic_error("S-pair of a Groebner basis did not reduce to zero");
        auto parts = pair_parts(p);
        append(parts, steps);
        ModuleVector v = combine(f_, *tracking_, p.lcm.degree() + ambient_.twists[lk.comp], parts);
        if (!v.is_zero()) out.push_back(std::move(v));
      }
    }
    return out;
  }

 private:
  struct Pair {
    int i, j;
    Monomial lcm;
  };
  using Parts = std::vector<std::tuple<Coeff, Monomial, const ModuleVector*>>;

  static std::uint64_t key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  }

  Parts pair_parts(const Pair& p) const {
    return {{1, p.lcm / basis_[p.i].lead().mon, &rep_[p.i]}, {f_.neg(1), p.lcm / basis_[p.j].lead().mon, &rep_[p.j]}};
  }

  void append(Parts& parts, const std::vector<Step>& steps) const {
    for (const Step& s : steps) parts.push_back({s.c, s.q, &rep_[s.g]});
  }

  void insert(const ModuleVector& r, ModuleVector rep) {
    const Coeff inv = f_.inv(r.lead().coef);
    basis_.push_back(scale(f_, r, inv));
    rep_.push_back(tracking_ ? scale(f_, rep, inv) : ModuleVector());
    int k = static_cast<int>(basis_.size()) - 1;
    reducer_.add(k);
    const ModuleVector& gk = basis_[k];
    std::uint32_t comp = gk.lead().comp;
    bool ideal_case = ambient_.rank() == 1;
    for (int i = 0; i < k; ++i) {
      const ModuleVector& gi = basis_[i];
      if (gi.lead().comp != comp) continue;
      // coprime leads: the product criterion, valid only for ideals
      if (ideal_case && gi.lead().mon.coprime(gk.lead().mon)) continue;
      Monomial l = gi.lead().mon.lcm(gk.lead().mon);
      int deg = l.degree() + ambient_.twists[comp];
      pairs_[deg].push_back({i, k, l});
      pending_.insert(key(i, k));
    }
  }

  bool chain_criterion(const Pair& p) const {
    std::uint32_t comp = basis_[p.i].lead().comp;
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis_[k].lead().comp != comp) continue;
      if (!basis_[k].lead().mon.divides(p.lcm)) continue;
      if (pending_.count(key(p.i, k)) || pending_.count(key(p.j, k))) continue;
      return true;
    }
    return false;
  }

  ModuleVector spoly(const Pair& p) const {
    const ModuleVector& a = basis_[p.i];
    const ModuleVector& b = basis_[p.j];
    ModuleVector s = add_mul(f_, ModuleVector(), 1, p.lcm / a.lead().mon, a);
    return add_mul(f_, s, f_.neg(1), p.lcm / b.lead().mon, b);
  }

  const PrimeField& f_;
  GradedFreeModule ambient_;
  std::vector<ModuleVector> basis_;
  std::vector<ModuleVector> rep_;
  Reducer reducer_;
  std::optional<GradedFreeModule> tracking_;
  std::map<int, std::vector<Pair>> pairs_;
  std::unordered_set<std::uint64_t> pending_;
  std::map<int, std::vector<std::pair<ModuleVector, ModuleVector>>> inputs_;
  std::vector<ModuleVector> minimal_;
  std::vector<ModuleVector> zero_reductions_;
};

}  // namespace

ModuleGB::ModuleGB(PolynomialRing ring, GradedFreeModule ambient, std::vector<ModuleVector> basis)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), basis_(std::move(basis)) {
  leads_.resize(ambient_.twists.size());
  by_comp_.resize(ambient_.twists.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& l = basis_[i].lead();
    leads_[l.comp].push_back(l.mon);
    by_comp_[l.comp].push_back(static_cast<int>(i));
  }
}

ModuleVector ModuleGB::normal_form(const ModuleVector& v) const {
  Reducer r(ring_.field(), basis_, ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) r.add(static_cast<int>(k));
  return r.reduce(v);
}

bool ModuleGB::is_standard(const Monomial& m, std::uint32_t c) const {
  for (const auto& l : leads_[c]) {
    if (l.divides(m)) return false;
  }
  return true;
}

ModuleVector normal_form(const ModuleVector& v, const ModuleGB& gb) { return gb.normal_form(v); }

ModuleGB groebner_basis(const PolynomialRing& ring, const GradedFreeModule& ambient,
                        const std::vector<ModuleVector>& generators) {
  Buchberger bb(ring, ambient);
  for (const auto& g : generators) bb.add_input(g);
  bb.run();
  return ModuleGB(ring, ambient, bb.reduced_basis());
}

std::vector<ModuleVector> minimal_generators(const PolynomialRing& ring, const GradedFreeModule& ambient,
                                             const std::vector<ModuleVector>& generators) {
  Buchberger bb(ring, ambient);
  for (const auto& g : generators) bb.add_input(g);
  bb.run(true);
  return bb.minimal();
}

GradedMap syzygy_module(const GradedMap& f) {
  const auto& ring = f.ring();
  const int s = f.source().rank();
  Buchberger bb(ring, f.target(), &f.source());
  std::vector<ModuleVector> kernel;
  for (int j = 0; j < s; ++j) {
    ModuleVector e = ModuleVector::unit(ring.nvars(), j);
    if (f.column(j).is_zero()) kernel.push_back(std::move(e));
    else bb.add_input(f.column(j), std::move(e));
  }
  bb.run();
  for (auto& v : bb.relations()) kernel.push_back(std::move(v));
  std::vector<ModuleVector> mins = minimal_generators(ring, f.source(), kernel);
  GradedFreeModule src;
  for (const auto& v : mins) src.twists.push_back(*v.degree(f.source()));
  return GradedMap(ring, std::move(src), f.source(), std::move(mins));
}

std::vector<ModuleVector> preimage(const GradedMap& f, const std::vector<ModuleVector>& sub) {
  const auto& ring = f.ring();
  GradedFreeModule extra;
  std::vector<ModuleVector> cols = f.columns();
  for (const auto& w : sub) {
    if (w.is_zero()) continue;
    extra.twists.push_back(*w.degree(f.target()));
    cols.push_back(w);
  }
  GradedMap combined(ring, direct_sum(f.source(), extra), f.target(), std::move(cols));
  GradedMap ker = syzygy_module(combined);
  std::vector<ModuleVector> out;
  const auto s = static_cast<std::uint32_t>(f.source().rank());
  for (const auto& v : ker.columns()) {
    ModuleVector p = restrict_components(v, 0, s);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

GradedModulePresentation::GradedModulePresentation(GradedMap rels) : rels_(std::move(rels)) {
  if (!map_is_homogeneous(rels_)) throw std::invalid_argument("presentation relations must be homogeneous");
}

GradedModulePresentation GradedModulePresentation::free(const PolynomialRing& ring, GradedFreeModule gens) {
  return GradedModulePresentation(GradedMap::zero(ring, GradedFreeModule(), std::move(gens)));
}

GradedModulePresentation GradedModulePresentation::cyclic(const PolynomialRing& ring,
                                                          const std::vector<Polynomial>& ideal, int twist) {
  std::vector<ModuleVector> rels;
  for (const auto& p : ideal) {
    if (!p.is_zero()) rels.push_back(ModuleVector::from_polynomial(p, 0));
  }
  return from_relations(ring, GradedFreeModule({twist}), rels);
}

GradedModulePresentation GradedModulePresentation::from_relations(const PolynomialRing& ring, GradedFreeModule gens,
                                                                  const std::vector<ModuleVector>& relations) {
  GradedFreeModule src;
  std::vector<ModuleVector> cols;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    auto d = r.degree(gens);
    if (!d) throw std::invalid_argument("inhomogeneous relation");
    src.twists.push_back(*d);
    cols.push_back(r);
  }
  return GradedModulePresentation(GradedMap(ring, std::move(src), std::move(gens), std::move(cols)));
}

GradedModulePresentation GradedModulePresentation::shifted(int s) const {
  return GradedModulePresentation(
      GradedMap(ring(), rels_.source().shifted(s), rels_.target().shifted(s), rels_.columns()));
}

GradedModulePresentation GradedModulePresentation::with_relations(const std::vector<ModuleVector>& extra) const {
  std::vector<ModuleVector> all = rels_.columns();
  all.insert(all.end(), extra.begin(), extra.end());
  return from_relations(ring(), gens(), all);
}

ModuleGB GradedModulePresentation::relation_gb() const { return groebner_basis(ring(), gens(), rels_.columns()); }

GradedModulePresentation minimize(const GradedModulePresentation& m) {
  const auto& ring = m.ring();
  const auto& f = ring.field();
  std::vector<int> twists = m.gens().twists;
  std::vector<ModuleVector> cols;
  for (const auto& c : m.relation_vectors()) {
    if (!c.is_zero()) cols.push_back(c);
  }
  for (;;) {
    int col = -1;
    std::uint32_t row = 0;
    Coeff unit = 0;
    for (int j = 0; j < static_cast<int>(cols.size()) && col < 0; ++j) {
      for (const auto& t : cols[j].terms()) {
        if (t.mon.is_one()) {
          col = j;
          row = t.comp;
          unit = t.coef;
          break;
        }
      }
    }
    if (col < 0) break;
    ModuleVector pivot = scale(f, cols[col], f.inv(unit));  // entry at row is now 1
    std::vector<ModuleVector> next;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
      if (j == col) continue;
      Polynomial e = cols[j].component(row);
      ModuleVector c = e.is_zero() ? cols[j] : sub(f, cols[j], mul_poly(f, pivot, e));
      std::vector<VecTerm> terms;
      for (const auto& t : c.terms()) {
        if (t.comp == row) continue;
        terms.push_back({t.mon, t.comp > row ? t.comp - 1 : t.comp, t.coef});
      }
      if (!terms.empty()) next.push_back(ModuleVector::from_sorted(std::move(terms)));
    }
    twists.erase(twists.begin() + row);
    cols = std::move(next);
  }
  GradedFreeModule gens(std::move(twists));
  std::vector<ModuleVector> mins = minimal_generators(ring, gens, cols);
  return GradedModulePresentation::from_relations(ring, gens, mins);
}

}  // namespace regext
