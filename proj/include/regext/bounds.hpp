#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regext/bigint.hpp"
#include "regext/groebner.hpp"
#include "regext/hilbert.hpp"

namespace regext {

// ---------------------------------------------------------------------------
// Closed-form bounds. Pure functions of integers; no module computations.

/// Shape of a complex of free modules: per cohomological index the smallest twist f,
/// largest twist b and rank T. Missing indices are zero terms.
struct ComplexShape {
  struct Term {
    int f = 0;
    int b = 0;
    long long rank = 0;
  };
  std::map<int, Term> terms;

  bool has(int i) const {
    auto it = terms.find(i);
    return it != terms.end() && it->second.rank > 0;
  }
  const Term& at(int i) const { return terms.at(i); }
};

/// Upper bound for reg H^i of a complex with the given shape in n variables (n >= 2).
/// Terms of the max that involve a zero term of the complex drop out; kNegInf when C^i = 0.
BigInt bound_reg_homology(const ComplexShape& c, int i, int n);
/// dim H^i_mu <= T^i C(mu - f^i + n - 1, n - 1), for mu >= f^i.
BigInt bound_dim_homology(const ComplexShape& c, int i, int n, int mu);
/// dim Tor_j(H^i, k)_mu <= T^i C(n, j) C(mu - f^i - j + n - 1, n - 1), for mu >= f^i + j.
BigInt bound_dim_tor(const ComplexShape& c, int i, int j, int n, int mu);

/// The dual of a resolution with Betti-table rows (f_i, b_i, T_i): f^i = -b_i, b^i = -f_i, T^i = T_i.
ComplexShape dual_shape(const std::map<int, ComplexShape::Term>& resolution_rows);

/// Total ranks of Hom(F^M, F^N) in cohomological degree i: sum over p - q = i of T_p^M T_q^N.
BigInt hom_rank(const std::vector<long long>& tm, const std::vector<long long>& tn, int i);

/// (r_M + r_N + 1)^{2^{n-2}} max{T^i, T^{i+1}}^{2^{n-2}} + 1 - delta.
BigInt bound_reg_ext_pair(int reg_m, int reg_n, const BigInt& ti, const BigInt& ti1, int delta, int n);

/// mu C(n, i) C(reg - indeg + n, n).
BigInt bound_betti(long long mu, int n, int i, int reg, int indeg);

/// Total Betti numbers of a module with a linear resolution in degree r, positive depth
/// and dimension d: sum_{l=0}^{min(i, d-1)} (-1)^l C(n-l-1, i-l) Delta^l P(r + l).
BigInt betti_from_hilbert(const HilbertPolynomial& p, int n, int d, int r, int i);

/// max{C(d-1, j), C(d-1, j+1)}.
BigInt c_dj(int d, int j);

/// [C_{d,d-i} P(rbar)]^{2^{d-2}} - rbar + 1, for d >= 2 and 1 < i <= d.
BigInt bound_reg_ext_top(int d, int i, const BigInt& p_at_rbar, int rbar);

/// [mu C(reg - indeg + n, n)]^{2^{(d-1)^2}}.
BigInt bound_hdeg_betti(long long mu, int n, int reg, int indeg, int d);
/// dim H^0 + P(rbar)^{2^{(d-1)^2}}.
BigInt bound_hdeg_hilbert(const BigInt& h0_length, const BigInt& p_at_rbar, int d);
/// C(reg + n, n)^{2^{(d-1)^2}} for cyclic modules R/I.
BigInt bound_hdeg_cyclic(int n, int reg, int d);

// ---------------------------------------------------------------------------
// Reports.

enum class Relation { LessEq, GreaterEq, Equal };
enum class CheckKind { Check, Advisory };

struct BoundReport {
  std::string claim;
  std::string instance;
  std::string label;
  CheckKind kind = CheckKind::Check;
  Relation relation = Relation::LessEq;
  /// Componentwise checks carry one entry per degree of `window`; scalar checks one entry.
  std::vector<BigInt> lhs;
  std::vector<BigInt> rhs;
  std::optional<std::pair<int, int>> window;
  bool pass = true;
  bool vacuous = false;
  std::map<std::string, std::string> context;

  bool is_failure() const { return kind == CheckKind::Check && !vacuous && !pass; }
};

/// Every claim identifier, in report order.
const std::vector<std::string>& claim_ids();
/// Position in claim_ids(); throws std::invalid_argument for unknown ids.
int claim_index(const std::string& claim);

/// Sorts by (claim order, instance, label) and keeps the original order among ties.
void sort_reports(std::vector<BoundReport>& reports);

std::string to_string(Relation r);
std::string to_string(CheckKind k);

// ---------------------------------------------------------------------------
// Instance verification.

struct VerifyOptions {
  std::string instance_id = "M";
  std::uint64_t seed = 0;
  /// Overrides the Hilbert-function window [indeg - 2, reg + 5].
  std::optional<std::pair<int, int>> window;
  /// Second arguments for Ext(M, N); the ring itself is always included.
  std::vector<std::pair<std::string, GradedModulePresentation>> partners;
  /// Truncation degrees t for the truncation checks are indeg, reg and reg + offset.
  int truncation_offset = 2;
};

struct InstanceSummary {
  std::map<std::string, std::string> fields;
  std::map<std::pair<int, int>, long long> betti;
  std::vector<int> rbar;
};

struct InstanceResult {
  std::string id;
  InstanceSummary summary;
  std::vector<BoundReport> reports;
  /// Claim groups that threw; each also appears as a failing report.
  std::vector<std::string> errors;

  long long failures() const;
};

InstanceResult verify_instance(const GradedModulePresentation& m, const VerifyOptions& options);

/// Verifies each named instance with Ext(M, N) partners R and the previous instance over the
/// same ring. Results are in input order for any number of worker threads.
std::vector<InstanceResult> verify_corpus(
    const std::vector<std::pair<std::string, GradedModulePresentation>>& instances, std::uint64_t seed,
    int jobs = 1);

/// Stable 64-bit seed for an instance: FNV-1a of the id mixed with the run seed.
std::uint64_t instance_seed(std::uint64_t seed, const std::string& id);

/// M/lM over R/(l), identified with the polynomial ring on the variables other than the last
/// one appearing in l.
GradedModulePresentation restrict_to_hyperplane(const GradedModulePresentation& m, const Polynomial& l);

// ---------------------------------------------------------------------------
// Random corpus.

struct CorpusParams {
  int n_min = 2;
  int n_max = 4;
  int max_deg = 3;
  int max_gens = 2;
  int max_rels = 3;
  int count = 20;
  /// Instances with reg - indeg above this are redrawn.
  int max_reg_span = 5;
  /// Instances with more than this many total Betti numbers are redrawn.
  long long max_betti_sum = 40;
};

struct CorpusInstance {
  std::string id;
  std::string stratum;
  GradedModulePresentation pres;
};

/// Strata cycle through monomial cyclic, complete intersection, finite length,
/// nonzero H^0, truncation and random presentations. Deterministic in (params, seed).
std::vector<CorpusInstance> generate_corpus(const CorpusParams& params, std::uint64_t seed);

}  // namespace regext
