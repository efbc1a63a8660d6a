#include "latreg/report.hpp"

namespace latreg {

Json Report::to_json() const {
  Json j;
  j["check"] = check;
  j["verdict"] = passed ? "pass" : "fail";
  j["lambda_min"] = lambda_min ? Json(*lambda_min) : Json(nullptr);
  j["witness"] = witness.is_null() ? Json(nullptr) : witness;
  j["tolerances"] = tolerances;
  j["seed"] = seed;
  j["runtime_ms"] = runtime_ms;
  j["details"] = details;
  return j;
}

}  // namespace latreg
