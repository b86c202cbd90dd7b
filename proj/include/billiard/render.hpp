#pragma once

#include <functional>
#include <string>

#include "billiard/report.hpp"
#include "billiard/simplex.hpp"

namespace billiard {

// Lays Delta_d out as a centered triangle in picture order, one row per
// value of s (top row s = d). Cells are padded to the widest cell.
std::string render_triangle(unsigned d, const std::function<std::string(const Location&)>& cell);

// "030"-style label; only unambiguous for d < 10.
std::string compact_label(const Location& loc);

// One line per check plus a verdict line.
std::string render_report(const Report& report);

}  // namespace billiard
