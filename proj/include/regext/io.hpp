#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "regext/bounds.hpp"
#include "regext/module_data.hpp"

namespace regext {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// Line-based module format:
///   RING p v1 v2 ...
///   GENS a1 a2 ...        generator j sits in degree a_j, i.e. F = ⊕ R(-a_j)
///   REL f1 | f2 | ...     one relation, one entry per generator, deg(f_j) + a_j constant
/// `#` starts a comment. Coefficients are reduced mod p.
GradedModulePresentation parse_presentation(const std::string& text);
Polynomial parse_polynomial(const std::string& text, const PolynomialRing& ring);

std::string emit_presentation(const GradedModulePresentation& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Integers that fit in 64 bits as JSON numbers, others as decimal strings; sentinels as "-inf"/"+inf".
nlohmann::json int_json(long long v);
nlohmann::json big_json(const BigInt& v);

nlohmann::json report_json(const BoundReport& r);
nlohmann::json summary_json(const InstanceResult& r);
/// Invariants, Betti table and Hilbert data of a module, plus hdeg when given.
nlohmann::json module_json(const ModuleData& md, const std::string* hdeg = nullptr);

struct ReportConfig {
  std::uint64_t seed = 0;
  std::map<std::string, std::string> settings;
};

/// Full report document; instances are assumed already in a deterministic order.
nlohmann::json report_document(const std::vector<InstanceResult>& results, const ReportConfig& config);
/// Sorted-key JSON text with a trailing newline.
std::string canonical_dump(const nlohmann::json& j);

/// One CSV row per report: claim, instance, label, kind, relation, window, lhs, rhs, pass, vacuous.
std::string reports_csv(const std::vector<InstanceResult>& results);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace regext
