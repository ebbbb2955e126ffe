#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qpi {

enum class Mode { kExact, kCertified, kLimit };
enum class Outcome { kExactEqual, kWithinBound, kMismatch, kError };

std::string to_string(Mode m);
std::string to_string(Outcome o);

struct VerificationReport {
  std::string id;
  Mode mode = Mode::kCertified;
  // Human-readable description of the point(s) tested.
  std::vector<std::string> points;
  Outcome result = Outcome::kMismatch;
  // Decimal strings; empty when not applicable (exact mode).
  std::string residual;
  std::string err_budget;
  long terms = 0;
  double millis = 0;
  // Mismatch location, exception text, extrapolation warnings.
  std::string detail;

  bool passed() const {
    return result == Outcome::kExactEqual || result == Outcome::kWithinBound;
  }

  // Schema-1 object.  millis is null unless `timing` is set, so identical
  // runs serialize identically.
  nlohmann::ordered_json to_json(bool timing = false) const;
  std::string to_text() const;
};

}  // namespace qpi
