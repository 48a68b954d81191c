#include "euler/check.hpp"

#include <chrono>

namespace euler {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::Invalid: return "invalid";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

template <class F>
auto timed(std::vector<std::pair<std::string, double>>& timings, const char* phase, F&& f) {
  auto start = std::chrono::steady_clock::now();
  auto result = f();
  std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
  timings.emplace_back(phase, took.count());
  return result;
}

}  // namespace

CheckReport check(const Inference& inf, const CheckOptions& options) {
  CheckReport report;
  auto proved = timed(report.timings_ms, "prove", [&] { return prove(inf); });
  if (proved.status == ProveStatus::Proved) {
    report.verdict = Verdict::Valid;
    report.proof = std::move(proved.proof);
  } else if (proved.status == ProveStatus::InconsistentPremises) {
    report.note = "premises are inconsistent; no diagrammatic verdict";
  } else {
    auto refuted = timed(report.timings_ms, "disprove", [&] { return disprove(inf); });
    switch (refuted.status) {
      case DisproveStatus::Disproved:
        report.verdict = Verdict::Invalid;
        report.counter = std::move(refuted.counter_model);
        break;
      case DisproveStatus::NonRelationalConclusion:
        report.note = "conclusion is not relational; no counter-d-proof attempted";
        break;
      case DisproveStatus::InconsistentPremises:
        report.note = "premises are inconsistent; no diagrammatic verdict";
        break;
      case DisproveStatus::CannotDisprove:
        report.note = "neither a d-proof nor a counter-d-proof was found";
        break;
    }
  }

  if (options.use_oracle && predicates_of(inf).size() <= kOracleMaxPredicates) {
    bool valid = timed(report.timings_ms, "oracle", [&] { return oracle_valid(inf); });
    report.oracle_valid = valid;
    if ((report.verdict == Verdict::Valid && !valid) || (report.verdict == Verdict::Invalid && valid)) {
      report.defect = true;
      report.note = std::string("diagrammatic verdict '") + to_string(report.verdict) +
                    "' contradicts the semantic oracle";
    }
  }
  return report;
}

}  // namespace euler
