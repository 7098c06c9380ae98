#include "regext/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "regext/hilbert.hpp"

namespace regext {

FreeResolution minimal_resolution(const GradedModulePresentation& m) {
  GradedModulePresentation mm = minimize(m);
  FreeResolution res{mm.ring(), {mm.gens()}, {}};
  if (mm.gens().is_zero()) return res;
  GradedMap d = mm.rels();
  const int n = mm.ring().nvars();
  while (d.source().rank() > 0) {
    res.modules.push_back(d.source());
    res.maps.push_back(d);
    if (res.length() > n) throw std::logic_error("resolution longer than the number of variables");
    d = syzygy_module(d);
  }
  return res;
}

BettiTable::BettiTable(const FreeResolution& res) {
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int a : res.modules[i].twists) {
      ++entries_[{static_cast<int>(i), a}];
      pd_ = std::max(pd_, static_cast<int>(i));
    }
  }
}

long long BettiTable::operator()(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) s += v;
  return s;
}

std::optional<int> BettiTable::min_shift(int i) const {
  auto it = entries_.lower_bound({i, INT_MIN});
  if (it == entries_.end() || it->first.first != i) return std::nullopt;
  return it->first.second;
}

std::optional<int> BettiTable::max_shift(int i) const {
  std::optional<int> out;
  for (auto it = entries_.lower_bound({i, INT_MIN}); it != entries_.end() && it->first.first == i; ++it)
    out = it->first.second;
  return out;
}

int BettiTable::reg() const {
  int r = kNegInf;
  for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
  return r;
}

int BettiTable::indeg() const {
  auto f = min_shift(0);
  return f ? *f : kPosInf;
}

BettiTable betti_table(const GradedModulePresentation& m) { return BettiTable(minimal_resolution(m)); }

CochainComplex dual_complex(const FreeResolution& res) {
  CochainComplex c{res.ring, {}, {}};
  for (const auto& f : res.modules) c.terms.push_back(f.dual());
  for (const auto& d : res.maps) c.maps.push_back(dual_map(d));
  return c;
}

ModuleInvariants invariants(const FreeResolution& res) {
  BettiTable b(res);
  ModuleInvariants inv;
  if (b.is_zero()) return inv;
  const int n = res.ring.nvars();
  inv.reg = b.reg();
  inv.indeg = b.indeg();
  inv.pd = b.pd();
  inv.depth = n - inv.pd;
  inv.mu = b.total(0);
  inv.gen = *b.max_shift(0);
  inv.dim = HilbertData(b, n).dim();
  return inv;
}

ModuleInvariants invariants(const GradedModulePresentation& m) { return invariants(minimal_resolution(m)); }

}  // namespace regext
