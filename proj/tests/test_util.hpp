#pragma once

#include <random>
#include <string>
#include <vector>

#include "regext/free_module.hpp"
#include "regext/polynomial.hpp"

namespace regext::testing {

// Parses a tiny polynomial syntax: terms "c*x^a*y^b" joined by + or -.
inline Polynomial poly(const PolynomialRing& ring, const std::string& text) {
  const auto& f = ring.field();
  std::vector<PolyTerm> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  int sign = 1;
  skip();
  while (i < text.size()) {
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    long long c = 1;
    std::vector<int> e(ring.nvars(), 0);
    bool first = true;
    while (i < text.size() && text[i] != '+' && text[i] != '-') {
      if (!first) {
        if (text[i] != '*') break;
        ++i;
      }
      first = false;
      skip();
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        c *= std::stoll(text.substr(i, j - i));
        i = j;
      } else {
        std::size_t j = i;
        while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
        int v = *ring.variable_index(text.substr(i, j - i));
        i = j;
        int p = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t k = i;
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          p = std::stoi(text.substr(i, k - i));
          i = k;
        }
        e[v] += p;
      }
      skip();
    }
    terms.push_back({Monomial(ring.nvars(), e), f.from_int(sign * c)});
    sign = 1;
  }
  return Polynomial::from_terms(f, std::move(terms));
}

inline std::vector<Polynomial> polys(const PolynomialRing& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(ring, t));
  return out;
}

inline ModuleVector vec(const PolynomialRing& ring, const std::vector<std::string>& entries) {
  ModuleVector v;
  for (std::size_t c = 0; c < entries.size(); ++c) {
    v = add(ring.field(), v, ModuleVector::from_polynomial(poly(ring, entries[c]), static_cast<std::uint32_t>(c)));
  }
  return v;
}

inline Polynomial random_homogeneous(const PolynomialRing& ring, int degree, std::mt19937_64& rng, int density = 3) {
  auto mons = monomials_of_degree(ring.nvars(), degree);
  std::vector<PolyTerm> terms;
  for (int k = 0; k < density; ++k) {
    const auto& m = mons[rng() % mons.size()];
    terms.push_back({m, static_cast<Coeff>(rng() % ring.field().p())});
  }
  return Polynomial::from_terms(ring.field(), std::move(terms));
}

}  // namespace regext::testing
