#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regext/bigint.hpp"
#include "regext/module_data.hpp"
#include "regext/saturation.hpp"

namespace regext {

struct FilterRegularData {
  std::uint64_t seed = 0;
  std::vector<Polynomial> forms;                   // l_1 .. l_d
  std::vector<GradedModulePresentation> quotients;  // M_0 = M, M_j = M_{j-1} / l_j M_{j-1}
  std::vector<int> rbar;                            // reg(M_j / H^0_m(M_j)), j = 0..d
  std::vector<long long> hbar;                      // H_{M_j / H^0_m(M_j)}(rbar_j), 0 when that module is zero
  long long B = 0;                                  // dim_k M_d
  int retries = 0;
};

inline constexpr int kFilterRegularRetries = 32;

/// True when (0 :_M l) has finite length, i.e. l is a non-zero-divisor on M/H^0_m(M).
bool is_filter_regular(const Saturation& sat, const Polynomial& l);

/// d = dim M random linear forms, each verified filter-regular on the running quotient.
/// Throws std::runtime_error after kFilterRegularRetries failed draws for one form.
FilterRegularData filter_regular_sequence(const GradedModulePresentation& m, std::uint64_t seed);

/// M / l M.
GradedModulePresentation quotient_by_form(const GradedModulePresentation& m, const Polynomial& l);

struct HdegTerm {
  int ext_index;      // Ext^{ext_index}(M, R)
  BigInt binomial;    // C(d-1, i)
  BigInt hdeg;        // hdeg of that Ext module
};

struct HdegResult {
  BigInt value;
  BigInt degree;  // deg(M), with the length convention at d = 0
  int dim = -1;
  std::vector<HdegTerm> terms;
};

/// Homological degree with a memo keyed by the canonical text of minimized presentations.
/// One instance per module family; not shared across threads.
class HdegCalculator {
 public:
  HdegResult compute(const GradedModulePresentation& m);
  BigInt value(const GradedModulePresentation& m) { return compute(m).value; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<std::string, HdegResult> memo_;
};

HdegResult hdeg(const GradedModulePresentation& m);

/// hdeg(M) = hdeg(Mbar) + dim_k H^0_m(M).
bool hdeg_note_b_check(const GradedModulePresentation& m);

/// Text form used as a memo key: generator twists and relation terms of the minimized presentation.
std::string canonical_key(const GradedModulePresentation& m);

}  // namespace regext
