#ifndef LATREG_REPORT_HPP
#define LATREG_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace latreg {

using Json = nlohmann::ordered_json;

/// Machine-readable verdict of one check. Tolerances and the seed are always
/// embedded so a failure can be replayed from the report alone.
struct Report {
  std::string check;
  bool passed = true;
  std::optional<double> lambda_min;  // worst minimal eigenvalue, when numeric
  Json witness;                      // failing instance, null when none
  Json tolerances = Json::object();
  std::uint64_t seed = 0;
  long long runtime_ms = 0;
  Json details = Json::object();

  Json to_json() const;
};

/// Runs fn(), stamps the elapsed wall time into the report it returns.
template <typename Fn>
Report timed_report(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = fn();
  const auto t1 = std::chrono::steady_clock::now();
  r.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

}  // namespace latreg

#endif
