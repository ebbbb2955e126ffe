#include "qpi/report.hpp"

#include <sstream>

namespace qpi {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::kExact: return "exact";
    case Mode::kCertified: return "certified";
    case Mode::kLimit: return "limit";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kExactEqual: return "exact-equal";
    case Outcome::kWithinBound: return "within-bound";
    case Outcome::kMismatch: return "mismatch";
    case Outcome::kError: return "error";
  }
  return "?";
}

nlohmann::ordered_json VerificationReport::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["id"] = id;
  j["mode"] = to_string(mode);
  j["point"] = points;
  j["result"] = to_string(result);
  j["pass"] = passed();
  j["residual"] = residual.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(residual);
  j["err_budget"] =
      err_budget.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(err_budget);
  j["terms"] = terms;
  j["millis"] = timing ? nlohmann::ordered_json(millis) : nlohmann::ordered_json();
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << (passed() ? "PASS " : "FAIL ") << id << "  [" << to_string(mode) << "] "
     << to_string(result);
  if (!residual.empty()) os << "  residual=" << residual;
  if (!err_budget.empty()) os << "  budget=" << err_budget;
  os << "  terms=" << terms;
  for (const auto& p : points) os << "\n    at " << p;
  if (!detail.empty()) os << "\n    " << detail;
  return os.str();
}

}  // namespace qpi
