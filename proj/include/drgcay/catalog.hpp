#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "drgcay/serialize.hpp"

namespace drgcay {

// Where an expected value comes from: a published result, an independent
// computation, or a definition.
enum class Provenance { literature, derived, trivial };
const char* to_string(Provenance p);

enum class Outcome { pass, fail, timeout };
const char* to_string(Outcome o);

struct Expectation {
  std::string kind;
  Json expected;
  Json observed;
  Provenance provenance = Provenance::derived;
  Outcome verdict = Outcome::fail;
};

class CaseContext {
 public:
  explicit CaseContext(std::chrono::steady_clock::time_point deadline) : deadline_(deadline) {}

  // Records an expectation; the verdict is expected == observed.
  void expect(std::string kind, Json expected, Json observed, Provenance p);
  // Records an expectation with an explicit verdict (tolerance checks).
  void expect_that(std::string kind, Json expected, Json observed, Provenance p, bool pass);
  void expect_timeout(std::string kind, Json expected, Provenance p);

  std::chrono::milliseconds remaining() const;
  std::vector<Expectation>& expectations() { return expectations_; }

 private:
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Expectation> expectations_;
};

struct CaseSpec {
  std::string name;
  std::string summary;
  std::chrono::milliseconds budget{60000};
  std::function<void(CaseContext&)> recipe;
};

struct CaseReport {
  std::string name;
  std::vector<Expectation> expectations;
  double runtime_ms = 0;
  bool pass = false;
  bool timeout = false;

  // Schema {case, expectations: [{kind, expected, observed, provenance,
  // verdict}], runtime_ms, pass}; runtime_ms is omitted when !with_timing so
  // repeated runs compare byte for byte.
  Json to_json(bool with_timing = true) const;
};

const std::vector<CaseSpec>& catalog_cases();

// Never throws on expectation failure; a recipe exception becomes a failed
// "error" expectation.
CaseReport run_case(const CaseSpec& spec);
// Throws std::out_of_range("unregistered case: ...") for unknown names.
CaseReport run_case(const std::string& name);

// Cases whose name matches `pattern` (shell glob, empty = all), in catalog
// order regardless of `workers`.
std::vector<CaseReport> run_all(int workers = 1, const std::string& pattern = "");

}  // namespace drgcay
