#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "regext/bounds.hpp"
#include "regext/cohomology.hpp"
#include "regext/degrees.hpp"
#include "regext/io.hpp"

namespace fs = std::filesystem;
using namespace regext;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("REGEXT_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("REGEXT_SEED is not an unsigned integer: ") + env);
  }
}

GradedModulePresentation load(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  try {
    return parse_presentation(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.col()) + ": " +
                     std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
  auto k = s.find("..");
  try {
    if (k == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, k)), std::stoi(s.substr(k + 2))};
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " range: " + s);
  }
}

void emit(const nlohmann::json& j, const std::string& path) {
  std::string text = canonical_dump(j);
  if (path.empty()) std::cout << text;
  else write_file(path, text);
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

int summarize(const std::vector<InstanceResult>& results) {
  long long fails = 0, reports = 0, vac = 0;
  for (const auto& r : results) {
    fails += r.failures();
    reports += static_cast<long long>(r.reports.size());
    for (const auto& b : r.reports) vac += b.vacuous;
    for (const auto& b : r.reports)
      if (b.is_failure()) std::cerr << "FAIL " << b.claim << " " << b.instance << " " << b.label << "\n";
  }
  std::cerr << results.size() << " instance(s), " << reports << " report(s), " << vac << " vacuous, " << fails
            << " failure(s)\n";
  return fails ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regext: graded modules, Ext, local cohomology and degree bounds"};
  app.require_subcommand(1);

  std::string file, against, out, report, csv, window, nrange = "2..4", dir;
  int index = 0, jobs = 1, max_deg = 3, count = 20, max_gens = 2, max_rels = 3;
  std::uint64_t seed = 0;

  auto* compute = app.add_subcommand("compute", "invariants, Hilbert data and Betti table as JSON");
  compute->add_option("file", file, "module file")->required();

  auto* ext = app.add_subcommand("ext", "Ext^i(M, R) or Ext^i(M, N)");
  ext->add_option("file", file, "module file")->required();
  ext->add_option("--i", index, "cohomological index")->required();
  ext->add_option("--against", against, "second module file");

  auto* hd = app.add_subcommand("hdeg", "homological degree");
  hd->add_option("file", file, "module file")->required();
  hd->add_option("--seed", seed, "seed for the filter-regular sequence");

  auto* verify = app.add_subcommand("verify", "check every bound on one module");
  verify->add_option("file", file, "module file")->required();
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--window", window, "Hilbert-function window a..b");
  verify->add_option("--report", report, "write the JSON report here instead of stdout");

  auto* corpus = app.add_subcommand("corpus", "write a random corpus");
  corpus->add_option("--n", nrange, "number of variables, N or a..b");
  corpus->add_option("--max-deg", max_deg, "largest relation degree");
  corpus->add_option("--count", count, "number of modules");
  corpus->add_option("--max-gens", max_gens, "largest number of generators");
  corpus->add_option("--max-rels", max_rels, "largest number of relations");
  corpus->add_option("--seed", seed, "seed");
  corpus->add_option("--out", out, "output directory")->required();

  auto* vcorpus = app.add_subcommand("verify-corpus", "check every bound on every module of a directory");
  vcorpus->add_option("dir", dir, "corpus directory")->required();
  vcorpus->add_option("--report", report, "JSON report path")->required();
  vcorpus->add_option("--csv", csv, "also write a CSV of the reports");
  vcorpus->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  vcorpus->add_option("--seed", seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    for (auto* sub : {hd, verify, corpus, vcorpus}) {
      if (sub->parsed() && sub->count("--seed") == 0) seed = default_seed();
    }

    if (compute->parsed()) {
      GradedModulePresentation m = load(file);
      ModuleData md = analyze(m);
      std::string h = to_decimal(hdeg(m).value);
      emit(module_json(md, &h), "");
      return 0;
    }

    if (ext->parsed()) {
      GradedModulePresentation m = load(file);
      ExtModule e = against.empty() ? ext_into_ring(m, index) : ext_module(m, load(against), index);
      ModuleData md = analyze(e.presentation);
      nlohmann::json j = module_json(md);
      j["i"] = index;
      j["against"] = against.empty() ? "R" : against;
      j["presentation"] = emit_presentation(md.pres);
      emit(j, "");
      return 0;
    }

    if (hd->parsed()) {
      GradedModulePresentation m = load(file);
      HdegResult r = hdeg(m);
      nlohmann::json j;
      j["hdeg"] = big_json(r.value);
      j["deg"] = big_json(r.degree);
      j["dim"] = r.dim;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : r.terms) {
        terms.push_back({{"ext", t.ext_index}, {"binomial", big_json(t.binomial)}, {"hdeg", big_json(t.hdeg)}});
      }
      j["terms"] = terms;
      if (r.dim >= 0) {
        FilterRegularData fr = filter_regular_sequence(m, seed);
        j["seed"] = seed;
        j["B"] = fr.B;
        nlohmann::json rb = nlohmann::json::array();
        for (int v : fr.rbar) rb.push_back(int_json(v));
        j["rbar"] = rb;
      }
      emit(j, "");
      return 0;
    }

    if (verify->parsed()) {
      GradedModulePresentation m = load(file);
      VerifyOptions opt;
      opt.instance_id = stem(file);
      opt.seed = instance_seed(seed, opt.instance_id);
      if (!window.empty()) opt.window = parse_range(window, "window");
      opt.partners.push_back({"M", m});
      std::vector<InstanceResult> results{verify_instance(m, opt)};
      ReportConfig cfg{seed, {{"window", window.empty() ? "default" : window}, {"partners", "R,M"}}};
      emit(report_document(results, cfg), report);
      return summarize(results);
    }

    if (corpus->parsed()) {
      CorpusParams p;
      std::tie(p.n_min, p.n_max) = parse_range(nrange, "n");
      if (p.n_min < 2 || p.n_max > 4 || p.n_min > p.n_max) throw UsageError("--n must lie in 2..4");
      if (count < 0 || max_deg < 1) throw UsageError("--count must be >= 0 and --max-deg >= 1");
      p.max_deg = max_deg;
      p.count = count;
      p.max_gens = max_gens;
      p.max_rels = max_rels;
      fs::create_directories(out);
      for (const auto& inst : generate_corpus(p, seed)) {
        write_file((fs::path(out) / (inst.id + ".mod")).string(),
                   "# stratum " + inst.stratum + "\n" + emit_presentation(inst.pres));
      }
      std::cerr << "wrote " << count << " module(s) to " << out << "\n";
      return 0;
    }

    if (vcorpus->parsed()) {
      if (!fs::is_directory(dir)) throw UsageError("not a directory: " + dir);
      std::vector<std::string> paths;
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".mod") paths.push_back(e.path().string());
      std::sort(paths.begin(), paths.end());
      std::vector<std::pair<std::string, GradedModulePresentation>> mods;
      for (const auto& p : paths) mods.push_back({stem(p), load(p)});
      std::vector<InstanceResult> done = verify_corpus(mods, seed, jobs);
      ReportConfig cfg{seed, {{"corpus", fs::path(dir).filename().string()}, {"partners", "R,previous"}}};
      emit(report_document(done, cfg), report);
      if (!csv.empty()) write_file(csv, reports_csv(done));
      return summarize(done);
    }
  } catch (const UsageError& e) {
    std::cerr << "regext: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "regext: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
