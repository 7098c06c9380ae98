#include "regext/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "regext/resolution.hpp"

namespace regext {

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

namespace {

/// Cursor over one line; columns are reported 1-based relative to the original line.
class Scanner {
 public:
  Scanner(const std::string& s, int line, int col0) : s_(s), line_(line), col0_(col0) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void advance() { ++pos_; }
  int col() const { return col0_ + static_cast<int>(pos_); }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(col(), msg); }
  [[noreturn]] void fail_at(int col, const std::string& msg) const { throw ParseError(line_, col, msg); }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected a variable name");
    return s_.substr(start, pos_ - start);
  }

  /// Digits as a decimal string.
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  int line_, col0_;
  std::size_t pos_ = 0;
};

Coeff reduce_digits(const std::string& d, const PrimeField& f) {
  std::uint64_t v = 0;
  for (char ch : d) v = (v * 10 + static_cast<unsigned>(ch - '0')) % f.p();
  return static_cast<Coeff>(v);
}

int small_int(Scanner& sc, const std::string& d) {
  if (d.size() > 6) sc.fail("integer too large: " + d);
  return std::stoi(d);
}

Polynomial parse_poly(Scanner& sc, const PolynomialRing& ring) {
  const auto& f = ring.field();
  const int n = ring.nvars();
  std::vector<PolyTerm> terms;
  bool first = true;
  while (!sc.done()) {
    char ch = sc.peek();
    bool negative = false;
    if (ch == '+' || ch == '-') {
      negative = ch == '-';
      sc.advance();
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    Coeff c = 1;
    std::vector<int> exps(n, 0);
    for (bool more = true; more;) {
      ch = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = f.mul(c, reduce_digits(sc.digits(), f));
      } else {
        int col = sc.col();
        std::string name = sc.ident();
        auto idx = ring.variable_index(name);
        if (!idx) sc.fail_at(col, "unknown variable " + name);
        int e = 1;
        if (sc.peek() == '^') {
          sc.advance();
          e = small_int(sc, sc.digits());
        }
        exps[*idx] += e;
      }
      more = sc.peek() == '*';
      if (more) sc.advance();
    }
    if (negative) c = f.neg(c);
    if (c != 0) terms.push_back({Monomial(n, exps), c});
  }
  if (first) sc.fail("empty polynomial");
  return Polynomial::from_terms(f, std::move(terms));
}

std::string strip_comment(const std::string& line) {
  auto k = line.find('#');
  return k == std::string::npos ? line : line.substr(0, k);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int column_of(const std::string& line, const std::string& word, std::size_t from = 0) {
  return static_cast<int>(line.find(word, from)) + 1;
}

bool parse_int(const std::string& w, long long& out) {
  if (w.empty()) return false;
  std::size_t k = (w[0] == '-' || w[0] == '+') ? 1 : 0;
  if (k == w.size() || w.size() > 12) return false;
  for (std::size_t j = k; j < w.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(w[j]))) return false;
  out = std::stoll(w);
  return true;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolynomialRing& ring) {
  Scanner sc(text, 1, 1);
  return parse_poly(sc, ring);
}

GradedModulePresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::optional<PolynomialRing> ring;
  std::optional<GradedFreeModule> gens;
  std::vector<ModuleVector> rels;
  std::string raw;
  for (int lineno = 1; std::getline(in, raw); ++lineno) {
    std::string line = strip_comment(raw);
    auto w = words(line);
    if (w.empty()) continue;
    const std::string& kw = w[0];
    const int kwcol = column_of(line, kw);
    if (kw == "RING") {
      if (ring) throw ParseError(lineno, kwcol, "duplicate RING line");
      if (w.size() < 3) throw ParseError(lineno, kwcol, "RING needs a prime and at least one variable");
      long long p = 0;
      if (!parse_int(w[1], p) || p < 2) throw ParseError(lineno, column_of(line, w[1], kwcol), "bad modulus " + w[1]);
      if (p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
        throw ParseError(lineno, column_of(line, w[1], kwcol), "modulus " + w[1] + " is not a supported prime");
      }
      std::vector<std::string> names(w.begin() + 2, w.end());
      if (static_cast<int>(names.size()) > kMaxVars) {
        throw ParseError(lineno, kwcol, "at most " + std::to_string(kMaxVars) + " variables are supported");
      }
      std::size_t from = kwcol;
      for (std::size_t k = 0; k < names.size(); ++k) {
        int col = column_of(line, names[k], from);
        from = col;
        const auto& nm = names[k];
        bool ok = std::isalpha(static_cast<unsigned char>(nm[0])) || nm[0] == '_';
        for (char ch : nm) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
        if (!ok) throw ParseError(lineno, col, "bad variable name " + nm);
        for (std::size_t j = 0; j < k; ++j)
          if (names[j] == nm) throw ParseError(lineno, col, "duplicate variable " + nm);
      }
      ring.emplace(static_cast<std::uint32_t>(p), names);
    } else if (kw == "GENS") {
      if (!ring) throw ParseError(lineno, kwcol, "GENS before RING");
      if (gens) throw ParseError(lineno, kwcol, "duplicate GENS line");
      GradedFreeModule g;
      std::size_t from = kwcol + 3;
      for (std::size_t k = 1; k < w.size(); ++k) {
        int col = column_of(line, w[k], from);
        from = col;
        long long a = 0;
        if (!parse_int(w[k], a) || a > 100000 || a < -100000) throw ParseError(lineno, col, "bad twist " + w[k]);
        g.twists.push_back(static_cast<int>(a));
      }
      gens = g;
    } else if (kw == "REL") {
      if (!gens) throw ParseError(lineno, kwcol, "REL before GENS");
      const std::size_t body = line.find("REL") + 3;
      std::vector<std::pair<std::string, int>> entries;  // text, starting column
      std::size_t start = body;
      for (std::size_t k = body; k <= line.size(); ++k) {
        if (k == line.size() || line[k] == '|') {
          std::size_t lead = start;
          while (lead < k && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
          entries.push_back({line.substr(lead, k - lead), static_cast<int>(lead) + 1});
          start = k + 1;
        }
      }
      if (static_cast<int>(entries.size()) != gens->rank()) {
        throw ParseError(lineno, kwcol,
                         "relation has " + std::to_string(entries.size()) + " entries for " +
                             std::to_string(gens->rank()) + " generators");
      }
      std::vector<VecTerm> terms;
      std::optional<int> degree;
      for (std::size_t j = 0; j < entries.size(); ++j) {
        Scanner sc(entries[j].first, lineno, entries[j].second);
        Polynomial p = parse_poly(sc, *ring);
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) throw ParseError(lineno, entries[j].second, "inhomogeneous entry");
        int deg = *p.degree() + gens->twists[j];
        if (degree && *degree != deg) {
          throw ParseError(lineno, entries[j].second,
                           "degree mismatch: entry has degree " + std::to_string(deg) + " in the relation, expected " +
                               std::to_string(*degree));
        }
        degree = deg;
        for (const auto& t : p.terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(j), t.coef});
      }
      ModuleVector v = ModuleVector::from_terms(ring->field(), std::move(terms));
      if (!v.is_zero()) rels.push_back(std::move(v));
    } else {
      throw ParseError(lineno, kwcol, "unknown directive " + kw);
    }
  }
  if (!ring) throw ParseError(1, 1, "missing RING line");
  if (!gens) throw ParseError(1, 1, "missing GENS line");
  return GradedModulePresentation::from_relations(*ring, *gens, rels);
}

std::string emit_presentation(const GradedModulePresentation& m) {
  std::ostringstream os;
  const auto& ring = m.ring();
  os << "RING " << ring.field().p();
  for (const auto& nm : ring.names()) os << ' ' << nm;
  os << "\nGENS";
  for (int a : m.gens().twists) os << ' ' << a;
  os << '\n';
  for (const auto& v : m.relation_vectors()) {
    os << "REL ";
    for (int j = 0; j < m.gens().rank(); ++j) {
      if (j) os << " | ";
      os << to_string(v.component(j), ring);
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

nlohmann::json int_json(long long v) {
  if (v <= kNegInf) return "-inf";
  if (v >= kPosInf) return "+inf";
  return v;
}

nlohmann::json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_decimal(v);
}

nlohmann::json report_json(const BoundReport& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["label"] = r.label;
  j["kind"] = to_string(r.kind);
  j["pass"] = r.pass;
  j["vacuous"] = r.vacuous;
  if (!r.vacuous) {
    j["relation"] = to_string(r.relation);
    auto side = [&](const std::vector<BigInt>& v) {
      if (!r.window && v.size() == 1) return nlohmann::json(to_decimal(v[0]));
      nlohmann::json a = nlohmann::json::array();
      for (const auto& x : v) a.push_back(to_decimal(x));
      return a;
    };
    j["lhs"] = side(r.lhs);
    j["rhs"] = side(r.rhs);
  }
  if (r.window) j["window"] = {r.window->first, r.window->second};
  if (!r.context.empty()) j["context"] = r.context;
  return j;
}

nlohmann::json summary_json(const InstanceResult& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["invariants"] = r.summary.fields;
  nlohmann::json b = nlohmann::json::array();
  for (const auto& [ij, v] : r.summary.betti) b.push_back({ij.first, ij.second, v});
  j["betti"] = b;
  nlohmann::json rb = nlohmann::json::array();
  for (int v : r.summary.rbar) rb.push_back(int_json(v));
  j["rbar"] = rb;
  j["failures"] = r.failures();
  j["errors"] = r.errors;
  return j;
}

nlohmann::json module_json(const ModuleData& md, const std::string* hdeg) {
  nlohmann::json j;
  const auto& inv = md.inv;
  j["n"] = md.nvars();
  j["reg"] = int_json(inv.reg);
  j["indeg"] = int_json(inv.indeg);
  j["pd"] = inv.pd;
  j["depth"] = int_json(inv.depth);
  j["dim"] = inv.dim;
  j["mu"] = inv.mu;
  j["gen"] = int_json(inv.gen);
  j["gens"] = md.pres.gens().twists;
  nlohmann::json b = nlohmann::json::array();
  for (const auto& [ij, v] : md.betti.entries()) b.push_back({ij.first, ij.second, v});
  j["betti"] = b;
  nlohmann::json h;
  nlohmann::json num = nlohmann::json::object();
  for (const auto& [k, v] : md.hilbert.numerator()) num[std::to_string(k)] = v;
  h["numerator"] = num;
  nlohmann::json e = nlohmann::json::array();
  for (const auto& v : md.hilbert.coefficients()) e.push_back(big_json(v));
  h["e"] = e;
  h["degree"] = big_json(md.hilbert.degree());
  if (!md.is_zero()) {
    nlohmann::json vals = nlohmann::json::array();
    nlohmann::json poly = nlohmann::json::array();
    for (int t = inv.indeg - 1; t <= inv.reg + 3; ++t) {
      vals.push_back({t, md.h(t)});
      poly.push_back({t, big_json(md.hilbert.poly()(t))});
    }
    h["function"] = vals;
    h["polynomial"] = poly;
  }
  j["hilbert"] = h;
  if (hdeg) j["hdeg"] = big_json(BigInt(*hdeg));
  return j;
}

nlohmann::json report_document(const std::vector<InstanceResult>& results, const ReportConfig& config) {
  nlohmann::json doc;
  doc["tool"] = "regext";
  doc["version"] = kToolVersion;
  doc["seed"] = config.seed;
  doc["config"] = config.settings;
  nlohmann::json inst = nlohmann::json::array();
  std::vector<BoundReport> all;
  long long failures = 0, vacuous = 0, advisory_misses = 0, errors = 0;
  for (const auto& r : results) {
    inst.push_back(summary_json(r));
    errors += static_cast<long long>(r.errors.size());
    for (const auto& b : r.reports) {
      all.push_back(b);
      if (b.is_failure()) ++failures;
      if (b.vacuous) ++vacuous;
      if (b.kind == CheckKind::Advisory && !b.pass) ++advisory_misses;
    }
  }
  sort_reports(all);
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& b : all) reps.push_back(report_json(b));
  doc["instances"] = inst;
  doc["reports"] = reps;
  doc["totals"] = {{"instances", results.size()},
                   {"reports", all.size()},
                   {"failures", failures},
                   {"vacuous", vacuous},
                   {"advisory_misses", advisory_misses},
                   {"errors", errors}};
  return doc;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump() + "\n"; }

std::string reports_csv(const std::vector<InstanceResult>& results) {
  std::vector<BoundReport> all;
  for (const auto& r : results) all.insert(all.end(), r.reports.begin(), r.reports.end());
  sort_reports(all);
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  auto join = [](const std::vector<BigInt>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + to_decimal(x);
    return s;
  };
  std::ostringstream os;
  os << "claim,instance,label,kind,relation,window,lhs,rhs,pass,vacuous\n";
  for (const auto& b : all) {
    std::string window = b.window ? std::to_string(b.window->first) + ".." + std::to_string(b.window->second) : "";
    os << quote(b.claim) << ',' << quote(b.instance) << ',' << quote(b.label) << ',' << to_string(b.kind) << ','
       << quote(b.vacuous ? "" : to_string(b.relation)) << ',' << quote(window) << ',' << quote(join(b.lhs)) << ','
       << quote(join(b.rhs)) << ',' << (b.pass ? 1 : 0) << ',' << (b.vacuous ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace regext
