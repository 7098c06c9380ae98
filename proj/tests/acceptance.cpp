// Acceptance gate: one PASS/FAIL line per criterion over a fixed-seed corpus.
// Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "regext/bounds.hpp"
#include "regext/cohomology.hpp"
#include "regext/degrees.hpp"
#include "regext/io.hpp"
#include "regext/module_data.hpp"
#include "regext/saturation.hpp"

using namespace regext;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Corpus {
  std::vector<CorpusInstance> instances;
  std::vector<InstanceResult> results;
};

const std::vector<std::string> kInequalityPrefixes = {
    "Lemma2.1.", "Thm2.3.", "Lemma2.4", "Thm3.5.", "Thm4.2", "Cor4.3",  "Lemma4.4.", "Thm4.5.",
    "Thm4.6",    "Lemma5.3", "Lemma5.4.", "Thm5.2", "Thm5.5", "Cor5.6"};

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

GradedModulePresentation cyclic(const PolynomialRing& ring, const std::vector<Polynomial>& ideal) {
  return GradedModulePresentation::cyclic(ring, ideal);
}

Polynomial var_power(int n, int v, int e) {
  Monomial m(n);
  for (int k = 0; k < e; ++k) m = m * Monomial::variable(n, v);
  return Polynomial::monomial(m, 1);
}

// Tallies reports of the claims selected by `pick`; lists the first few failures.
Outcome tally(const Corpus& c, const std::function<bool(const std::string&)>& pick, std::map<std::string, long long>* seen) {
  long long checked = 0, vacuous = 0, failed = 0;
  std::ostringstream bad;
  for (const auto& r : c.results) {
    for (const auto& b : r.reports) {
      if (!pick(b.claim) || b.kind != CheckKind::Check) continue;
      if (b.vacuous) {
        ++vacuous;
        continue;
      }
      ++checked;
      if (seen) ++(*seen)[b.claim];
      if (!b.pass) {
        if (failed < 5) bad << " [" << b.claim << " " << b.instance << " " << b.label << "]";
        ++failed;
      }
    }
  }
  std::ostringstream os;
  os << checked << " checks, " << vacuous << " vacuous, " << failed << " failed" << bad.str();
  return {failed == 0 && checked > 0, os.str()};
}

Outcome betti_from_hilbert_exact(const Corpus& c) {
  long long instances = 0, mismatches = 0;
  for (const auto& inst : c.instances) {
    const int n = inst.pres.ring().nvars();
    Saturation s = saturate_h0(inst.pres);
    ModuleData bar = analyze(s.mbar);
    if (bar.is_zero()) continue;
    GradedModulePresentation l = truncate(s.mbar, bar.inv.reg);
    ModuleData ld = analyze(l);
    if (ld.inv.reg != ld.inv.indeg || !saturate_h0(l).h0_is_zero()) {
      ++mismatches;
      continue;
    }
    for (int i = 0; i <= n; ++i) {
      if (BigInt(ld.betti.total(i)) != betti_from_hilbert(ld.hilbert.poly(), n, ld.inv.dim, ld.inv.reg, i)) ++mismatches;
    }
    ++instances;
  }
  Outcome o = tally(c, [](const std::string& id) { return id == "Cor3.4"; }, nullptr);
  std::ostringstream os;
  os << instances << " truncated saturations, " << mismatches << " mismatches; reports: " << o.detail;
  return {instances >= 50 && mismatches == 0 && o.pass, os.str()};
}

Outcome linear_recursion(const Corpus& c) {
  std::set<std::string> instances, degenerate;
  for (const auto& r : c.results) {
    for (const auto& b : r.reports) {
      if (b.claim != "Prop3.3" || b.vacuous || !starts_with(b.label, "i=")) continue;
      instances.insert(r.id);
      auto q = b.context.find("quotient");
      auto d = b.context.find("dim");
      if (q != b.context.end() && q->second == "zero" && d != b.context.end() && d->second == "1") degenerate.insert(r.id);
    }
  }
  Outcome o = tally(c, [](const std::string& id) { return id == "Prop3.3"; }, nullptr);
  std::ostringstream os;
  os << instances.size() << " instances, " << degenerate.size() << " with dim 1 and M' = 0; " << o.detail;
  return {o.pass && instances.size() >= 20 && !degenerate.empty(), os.str()};
}

Outcome every_instance(const Corpus& c, const std::string& claim) {
  std::set<std::string> covered;
  for (const auto& r : c.results)
    for (const auto& b : r.reports)
      if (b.claim == claim && !b.vacuous) covered.insert(r.id);
  Outcome o = tally(c, [&](const std::string& id) { return id == claim; }, nullptr);
  std::ostringstream os;
  os << covered.size() << "/" << c.results.size() << " instances; " << o.detail;
  return {o.pass && covered.size() == c.results.size(), os.str()};
}

Outcome remark_suite(const Corpus& c) {
  std::map<std::string, long long> seen;
  Outcome o = tally(c, [](const std::string& id) { return starts_with(id, "Rem3.1."); }, &seen);
  long long mu_checks = 0;
  for (const auto& r : c.results)
    for (const auto& b : r.reports)
      if (b.claim == "Rem3.1.i" && b.label == "mu(M>=reg)" && !b.vacuous) ++mu_checks;
  bool all_parts = true;
  for (const char* id : {"Rem3.1.i", "Rem3.1.ii", "Rem3.1.iii", "Rem3.1.iv", "Rem3.1.v"}) all_parts = all_parts && seen[id] > 0;
  std::ostringstream os;
  os << o.detail << "; mu(M>=reg) on " << mu_checks << " instances";
  return {o.pass && all_parts && mu_checks == static_cast<long long>(c.results.size()), os.str()};
}

Outcome hdeg_suite(const Corpus& c) {
  Outcome o = tally(c, [](const std::string& id) { return id == "Def5.1.a" || id == "Def5.1.b" || id == "DGV-reg"; },
                    nullptr);
  auto r2 = PolynomialRing::standard(2);
  const int n = 2;
  std::vector<std::pair<std::string, std::pair<GradedModulePresentation, int>>> named = {
      {"R", {GradedModulePresentation::free(r2, GradedFreeModule({0})), 1}},
      {"R/(x^2,xy)",
       {cyclic(r2, {var_power(n, 0, 2), Polynomial::monomial(Monomial::variable(n, 0) * Monomial::variable(n, 1), 1)}),
        2}},
      {"R/(x^2,y^2)", {cyclic(r2, {var_power(n, 0, 2), var_power(n, 1, 2)}), 4}},
  };
  bool ok = o.pass;
  std::ostringstream os;
  os << o.detail << ";";
  for (const auto& [name, mv] : named) {
    BigInt h = hdeg(mv.first).value;
    ok = ok && h == mv.second;
    os << " hdeg(" << name << ")=" << to_decimal(h);
  }
  return {ok, os.str()};
}

Outcome closed_forms() {
  long long checked = 0, bad = 0;
  std::ostringstream os;
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    // complete intersections x_1^{a_1}, ..., x_c^{a_c} with 1 <= a_i <= 4
    for (int c = 1; c <= n; ++c) {
      std::vector<int> a(c, 1);
      for (;;) {
        std::vector<Polynomial> ideal;
        int want = 0;
        for (int v = 0; v < c; ++v) {
          ideal.push_back(var_power(n, v, a[v]));
          want += a[v] - 1;
        }
        ++checked;
        if (invariants(cyclic(ring, ideal)).reg != want) ++bad;
        int k = 0;
        while (k < c && a[k] == 4) a[k++] = 1;
        if (k == c) break;
        ++a[k];
      }
    }
    for (int t = 1; t <= 4; ++t) {
      std::vector<Polynomial> ideal;
      for (const auto& m : monomials_of_degree(n, t)) ideal.push_back(Polynomial::monomial(m, 1));
      ++checked;
      if (invariants(cyclic(ring, ideal)).reg != t - 1) ++bad;
    }
    std::vector<Polynomial> vars;
    for (int v = 0; v < n; ++v) vars.push_back(var_power(n, v, 1));
    ModuleData e = analyze(ext_into_ring(cyclic(ring, vars), n).presentation);
    ++checked;
    long long total = 0;
    for (int t = -n - 3; t <= 3; ++t) total += e.h(t);
    if (e.h(-n) != 1 || total != 1 || e.inv.dim != 0) ++bad;
  }
  os << checked << " closed forms, " << bad << " mismatches";
  return {bad == 0, os.str()};
}

Outcome determinism(const Corpus& c) {
  std::vector<std::pair<std::string, GradedModulePresentation>> named;
  for (const auto& inst : c.instances) named.push_back({inst.id, inst.pres});
  ReportConfig cfg{kSeed, {{"corpus", "acceptance"}}};
  const std::string a = canonical_dump(report_document(c.results, cfg));
  const std::string b = canonical_dump(report_document(verify_corpus(named, kSeed, 4), cfg));
  std::ostringstream os;
  os << "serial vs 4 workers: " << a.size() << " and " << b.size() << " bytes";
  return {a == b, os.str()};
}

Outcome oracles(const Corpus& c) {
  long long hilbert_instances = 0, hilbert_bad = 0, strand_instances = 0, strand_bad = 0;
  for (const auto& inst : c.instances) {
    ModuleData md = analyze(inst.pres);
    const int n = md.nvars();
    if (md.inv.reg > 6) continue;
    ModuleGB gb = md.pres.relation_gb();
    for (int t = md.inv.indeg - 2; t <= md.inv.reg + 5; ++t) {
      long long alt = 0;
      for (const auto& [ij, b] : md.betti.entries()) {
        const long long k = static_cast<long long>(binomial(t - ij.second + n - 1, n - 1));
        alt += (ij.first % 2 ? -1 : 1) * b * k;
      }
      if (oracle::standard_monomial_count(gb, t) != alt) ++hilbert_bad;
    }
    ++hilbert_instances;
    long long betti_sum = 0;
    for (const auto& [ij, b] : md.betti.entries()) betti_sum += b;
    if (strand_instances >= 12 || betti_sum > 12) continue;
    CochainComplex dual = dual_complex(md.res);
    for (int i = 0; i <= n; ++i) {
      ModuleData e = analyze(ext_into_ring(md.res, i).presentation);
      for (int t = -md.inv.reg - n - 2; t <= -md.inv.indeg + 2; ++t) {
        if (e.h(t) != oracle::cohomology_dim(dual, i, t)) ++strand_bad;
      }
    }
    ++strand_instances;
  }
  std::ostringstream os;
  os << "standard monomials vs Betti sums on " << hilbert_instances << " instances (" << hilbert_bad
     << " mismatches); strand ranks vs Ext on " << strand_instances << " instances (" << strand_bad << " mismatches)";
  return {hilbert_bad == 0 && strand_bad == 0 && strand_instances >= 10, os.str()};
}

}  // namespace

int main() {
  CorpusParams params;
  params.n_min = 2;
  params.n_max = 4;
  params.max_deg = 4;
  params.max_gens = 3;
  params.max_rels = 4;
  params.count = 200;
  Corpus c;
  c.instances = generate_corpus(params, kSeed);
  std::vector<std::pair<std::string, GradedModulePresentation>> named;
  for (const auto& inst : c.instances) named.push_back({inst.id, inst.pres});
  c.results = verify_corpus(named, kSeed, 1);
  std::printf("corpus: %zu instances, seed %llu\n", c.instances.size(), static_cast<unsigned long long>(kSeed));

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact Betti numbers from the Hilbert polynomial", [&] { return betti_from_hilbert_exact(c); }},
      {"linear-resolution recursion", [&] { return linear_recursion(c); }},
      {"Grothendieck-Serre identity", [&] { return every_instance(c, "EGS"); }},
      {"truncation identities", [&] { return remark_suite(c); }},
      {"inequality suite",
       [&] {
         return tally(c,
                      [](const std::string& id) {
                        for (const auto& p : kInequalityPrefixes)
                          if (starts_with(id, p)) return true;
                        return false;
                      },
                      nullptr);
       }},
      {"hdeg identities", [&] { return hdeg_suite(c); }},
      {"closed-form regressions", [] { return closed_forms(); }},
      {"determinism", [&] { return determinism(c); }},
      {"oracle cross-checks", [&] { return oracles(c); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%s)\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.c_str());
  }
  return failed ? 1 : 0;
}
