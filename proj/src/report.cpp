#include "billiard/report.hpp"

#include <algorithm>

namespace billiard {

void Report::add(std::string check, std::string subject, bool pass, std::string detail) {
  checks_.push_back({std::move(check), std::move(subject), pass, std::move(detail)});
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t Report::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::vector<CheckResult> Report::failed() const {
  std::vector<CheckResult> out;
  std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out), [](const CheckResult& c) { return !c.pass; });
  return out;
}

std::size_t Report::count(const std::string& name) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.check == name; }));
}

}  // namespace billiard
