#include "infmult/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "infmult/clifford.hpp"
#include "infmult/constructions.hpp"
#include "infmult/orbits.hpp"

namespace infmult {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "skipped";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

void to_json(nlohmann::json& j, const CheckRecord& r) {
  j = {{"id", r.id}, {"statement", r.statement}, {"paper_ref", r.paper_ref}, {"status", to_string(r.status)},
       {"details", r.details}};
}

void from_json(const nlohmann::json& j, CheckRecord& r) {
  r.id = j.at("id").get<std::string>();
  r.statement = j.at("statement").get<std::string>();
  r.paper_ref = j.at("paper_ref").get<std::string>();
  r.status = check_status_from_string(j.at("status").get<std::string>());
  r.details = j.value("details", nlohmann::json::object());
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "lemma-d", "invariance", "independence",
                                                 "support", "orbits",  "complex-orbits", "all"};
  return names;
}

void RunConfig::validate() const {
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  if (n > 8) throw std::invalid_argument("--n must be at most 8");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  if (n == 2 && lambda && *lambda != 2) {
    throw std::invalid_argument("for n = 2 the families are defined at lambda = 2 only");
  }
  if (jobs == 0) throw std::invalid_argument("--jobs must be positive");
}

nlohmann::json RunConfig::to_json() const {
  return {{"n", n},
          {"lmax", lmax},
          {"lambda", lambda ? infmult::to_string(*lambda) : "formal"},
          {"seed", seed},
          {"samples", samples},
          {"suite", suite}};
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

namespace {

using Task = std::function<std::vector<CheckRecord>()>;

struct SuiteTask {
  std::string suite;
  Task run;
};

CheckRecord not_applicable(const std::string& id, const std::string& why) {
  CheckRecord r;
  r.id = id;
  r.statement = why;
  r.paper_ref = "none";
  r.status = CheckStatus::skipped;
  return r;
}

std::vector<SuiteTask> build_tasks(const RunConfig& c) {
  std::vector<SuiteTask> tasks;
  auto add = [&](const std::string& suite, std::function<CheckRecord()> f) {
    tasks.push_back({suite, [f] { return std::vector<CheckRecord>{f()}; }});
  };
  const std::size_t n = c.n;

  add("algebra", [] { return clifford_relations_check(); });
  add("algebra", [=] { return iota_multiplicativity_check(n, c.samples, c.seed); });
  add("algebra", [=] { return h_det_check(n); });
  add("algebra", [=] { return h_closure_check(n, c.samples, c.seed); });

  if (n >= 3) {
    add("lemma-d", [=] { return verify_lemma_d(n, FieldKind::D); });
  } else {
    add("lemma-d", [=] { return verify_lemma_d(n, FieldKind::Dprime); });
  }

  std::vector<FamilySpec> families;
  if (n >= 3) {
    families.push_back({n, FamilyKind::T, 0, c.lmax, c.lambda});
    families.push_back({n, FamilyKind::Tbar, 0, c.lmax, c.lambda});
    for (std::size_t j = 2; j + 1 <= n; ++j) families.push_back({n, FamilyKind::Tj, j, c.lmax, c.lambda});
  } else {
    families.push_back({n, FamilyKind::T2, 0, c.lmax, std::nullopt});
  }
  for (const FamilySpec& spec : families) {
    add("invariance", [=] { return verify_invariance(spec, {20, c.seed, true}); });
  }
  add("independence", [=] { return verify_independence(families.front(), c.lmax); });

  if (n >= 3) {
    for (std::size_t j = 2; j + 1 <= n; ++j) {
      add("support", [=] { return verify_support_filtration(n, j, c.lmax); });
    }
  } else {
    add("support", [] { return not_applicable("support.n2", "support filtration needs n >= 3"); });
  }

  add("orbits", [=] { return orbit_census_check(n, c.samples, c.seed); });
  add("complex-orbits", [=] {
    return complex_orbit_check(n, default_zetas(100), std::max<std::size_t>(1, c.samples / 10), c.seed);
  });
  tasks.push_back({"theorem", [=] { return theorem_main_report(n, c.lmax, std::min<std::size_t>(c.samples, 50), c.seed); }});
  return tasks;
}

}  // namespace

Report run_suite(const RunConfig& config) {
  config.validate();
  Report report;
  report.config = config.to_json();

  std::vector<SuiteTask> selected;
  std::vector<std::string> skipped_suites;
  for (SuiteTask& t : build_tasks(config)) {
    const bool chosen = config.suite == "all" || t.suite == config.suite;
    if (chosen) {
      selected.push_back(std::move(t));
    } else if (std::find(skipped_suites.begin(), skipped_suites.end(), t.suite) == skipped_suites.end()) {
      skipped_suites.push_back(t.suite);
    }
  }

  std::vector<std::vector<CheckRecord>> results(selected.size());
  std::vector<double> elapsed(selected.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = selected[i].run();
      } catch (const std::exception& e) {
        CheckRecord r;
        r.id = selected[i].suite + ".error." + std::to_string(i);
        r.statement = "check raised an exception";
        r.paper_ref = "none";
        r.status = CheckStatus::fail;
        r.details = {{"error", e.what()}};
        results[i] = {r};
      }
      elapsed[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned threads = std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (CheckRecord& r : results[i]) {
      if (config.timing) report.wall_ms[r.id] = elapsed[i];
      report.checks.push_back(std::move(r));
    }
  }
  for (const std::string& s : skipped_suites) {
    CheckRecord r = not_applicable(s, "suite not selected");
    report.checks.push_back(std::move(r));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return report;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["version"] = r.version;
  j["schema"] = r.schema;
  j["config"] = r.config;
  j["checks"] = r.checks;
  j["summary"] = {{"pass", r.count(CheckStatus::pass)},
                  {"fail", r.count(CheckStatus::fail)},
                  {"skipped", r.count(CheckStatus::skipped)}};
  if (!r.wall_ms.empty()) j["wall_ms"] = r.wall_ms;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  r.schema = j.at("schema").get<int>();
  r.config = j.at("config");
  r.checks = j.at("checks").get<std::vector<CheckRecord>>();
  if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<std::map<std::string, double>>();
  return r;
}

std::string emit_report(const Report& r, OutputFormat format) {
  if (format == OutputFormat::json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "infmult " << r.version << "  config " << r.config.dump() << "\n";
  for (const CheckRecord& c : r.checks) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
    out << "[" << tag << "] " << c.id << ": " << c.statement << " (" << c.paper_ref << ")";
    if (auto it = r.wall_ms.find(c.id); it != r.wall_ms.end()) out << " [" << it->second << " ms]";
    out << "\n";
    if (c.status == CheckStatus::fail) out << "       details: " << c.details.dump() << "\n";
  }
  out << "summary: " << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail) << " failed, "
      << r.count(CheckStatus::skipped) << " skipped\n";
  return out.str();
}

}  // namespace infmult
