#include "billiard/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace billiard {

namespace {

std::string center(const std::string& text, std::size_t width) {
  const std::size_t pad = width > text.size() ? width - text.size() : 0;
  return std::string(pad / 2, ' ') + text + std::string(pad - pad / 2, ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

std::string render_triangle(unsigned d, const std::function<std::string(const Location&)>& cell) {
  const auto all = locations(d);
  std::vector<std::string> cells;
  cells.reserve(all.size());
  std::size_t width = 0;
  for (const Location& loc : all) {
    cells.push_back(cell(loc));
    width = std::max(width, cells.back().size());
  }
  std::string out;
  std::size_t k = 0;
  for (unsigned row = 0; row <= d; ++row) {
    std::string line((d - row) * (width + 1) / 2, ' ');
    for (unsigned col = 0; col <= row; ++col, ++k) {
      if (col) line += ' ';
      line += center(cells[k], width);
    }
    out += rstrip(std::move(line)) + "\n";
  }
  return out;
}

std::string compact_label(const Location& loc) {
  return std::to_string(loc.r) + std::to_string(loc.s) + std::to_string(loc.t);
}

std::string render_report(const Report& report) {
  std::ostringstream os;
  for (const CheckResult& c : report.checks()) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.check << "  " << c.subject;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  os << "verdict: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks().size() << " checks, "
     << report.failures() << " failed)\n";
  return os.str();
}

}  // namespace billiard
