#pragma once

// Combinatorics of the triangular grid Delta_d = {(r,s,t) in N^3 : r+s+t = d}.
//
// Picture order (used by locations() and the text renderer) lists the
// triangle top-down: row k holds the locations with s = d - k, left to right
// by increasing t. For d = 3:
//
//         030
//       120 021
//     210 111 012
//   300 201 102 003

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace billiard {

struct Location {
  unsigned r = 0;
  unsigned s = 0;
  unsigned t = 0;

  unsigned diameter() const noexcept { return r + s + t; }
  std::string to_string() const;

  friend auto operator<=>(const Location&, const Location&) = default;
};

enum class Axis { R, S, T };

char axis_name(Axis axis) noexcept;
unsigned coordinate(const Location& loc, Axis axis) noexcept;

struct Line {
  Axis axis = Axis::R;
  unsigned value = 0;
  // Ordered lexicographically by (r, t).
  std::vector<Location> members;

  std::string name() const;  // e.g. "S=1"
};

enum class CliqueColor { Black, White };

struct Clique {
  CliqueColor color = CliqueColor::Black;
  std::array<Location, 3> members;
};

// Differ by exactly 1 in two coordinates (and so agree in the third).
bool adjacent(const Location& a, const Location& b) noexcept;

std::vector<Location> locations(unsigned d);
// Position of loc within locations(d).
std::size_t picture_index(const Location& loc) noexcept;
std::size_t location_count(unsigned d) noexcept;

std::vector<Location> neighbors(const Location& loc);

// The 3(d+1) maximal lines: axis R, S, T in turn, values 0..d.
std::vector<Line> maximal_lines(unsigned d);

// {(r,s,t), (r+1,s-1,t), (r,s-1,t+1)} for every (r,s,t) with s >= 1. The
// members keep that order: base, then the r-step, then the t-step.
std::vector<Clique> black_cliques(unsigned d);

// (r,s,t) in Delta_{d-2} -> {(r+1,s+1,t), (r,s+1,t+1), (r+1,s,t+1)}. The
// members are listed clockwise in the picture: upper-left, upper-right,
// bottom.
std::vector<std::pair<Location, Clique>> white_cliques(unsigned d);

// All unordered adjacent pairs, each as (smaller, larger).
std::vector<std::pair<Location, Location>> edges(unsigned d);

}  // namespace billiard
