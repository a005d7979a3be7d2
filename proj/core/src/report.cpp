#include "cpx/report.hpp"

#include <algorithm>
#include <cstdio>

namespace cpx {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::report_only:
      return "report-only";
  }
  return "?";
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(std::size_t x) { return std::to_string(x); }

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::fail; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j{{"name", c.name}, {"status", to_string(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  return {{"section", section_}, {"passed", passed()}, {"assertions", list}};
}

}  // namespace cpx
