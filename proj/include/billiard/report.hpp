#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace billiard {

struct CheckResult {
  std::string check;
  std::string subject;
  bool pass = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Verification outcome. Failures are entries, never exceptions, so a caller
// sees every violated condition at once.
class Report {
 public:
  void add(std::string check, std::string subject, bool pass, std::string detail = {});
  void append(const Report& other);

  bool passed() const noexcept { return failures() == 0; }
  std::size_t failures() const noexcept;
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  std::vector<CheckResult> failed() const;
  // Number of entries whose `check` equals `name`.
  std::size_t count(const std::string& name) const;

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace billiard
