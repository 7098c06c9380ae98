#pragma once

// Independent reference computations used to cross-check the engine.

#include <map>
#include <vector>

#include "regext/groebner.hpp"
#include "regext/strand.hpp"

namespace regext::oracle {

using Numerator = std::map<int, long long>;

inline void add_into(Numerator& a, const Numerator& b, long long sign, int shift) {
  for (const auto& [j, v] : b) a[j + shift] += sign * v;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) redundant = true;
    if (!redundant) out.push_back(g);
  }
  return out;
}

// K-polynomial of S/I for a monomial ideal: N(I) = N(I') - z^{deg m} N(I' : m).
inline Numerator monomial_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {{0, 1}};
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / g.gcd(m));
  Numerator out = monomial_numerator(gens);
  add_into(out, monomial_numerator(colon), -1, m.degree());
  return out;
}

// Hilbert numerator of F/U from the lead terms of a Gröbner basis of U.
inline Numerator lead_term_numerator(const ModuleGB& gb) {
  Numerator out;
  const auto& tw = gb.ambient().twists;
  for (std::uint32_t c = 0; c < tw.size(); ++c) add_into(out, monomial_numerator(gb.lead_monomials(c)), 1, tw[c]);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// dim_k (F/U)_t by counting monomials of F_t outside the lead terms of a Gröbner basis of U.
inline long long standard_monomial_count(const ModuleGB& gb, int t) {
  const auto& tw = gb.ambient().twists;
  const int n = gb.ring().nvars();
  long long count = 0;
  for (std::uint32_t c = 0; c < tw.size(); ++c) {
    if (t < tw[c]) continue;
    for (const auto& m : monomials_of_degree(n, t - tw[c])) count += gb.is_standard(m, c);
  }
  return count;
}

// Dimension of H^i of a cochain complex of free modules in internal degree t,
// from the ranks of the maps on graded strands.
template <class Complex>
long long cohomology_dim(const Complex& c, int i, int t) {
  const int n = c.ring.nvars();
  if (i < 0 || i >= static_cast<int>(c.terms.size())) return 0;
  long long dim = c.terms[i].dim_in_degree(n, t);
  long long out_rank = i < static_cast<int>(c.maps.size()) ? strand_ranks(c.maps[i], t).rank : 0;
  long long in_rank = i >= 1 ? strand_ranks(c.maps[i - 1], t).rank : 0;
  return dim - out_rank - in_rank;
}

}  // namespace regext::oracle
