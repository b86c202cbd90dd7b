#include "billiard/simplex.hpp"

#include <algorithm>
#include <cstdlib>

namespace billiard {

std::string Location::to_string() const {
  return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
}

char axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::R: return 'R';
    case Axis::S: return 'S';
    case Axis::T: return 'T';
  }
  return '?';
}

unsigned coordinate(const Location& loc, Axis axis) noexcept {
  switch (axis) {
    case Axis::R: return loc.r;
    case Axis::S: return loc.s;
    case Axis::T: return loc.t;
  }
  return 0;
}

std::string Line::name() const { return std::string(1, axis_name(axis)) + "=" + std::to_string(value); }

bool adjacent(const Location& a, const Location& b) noexcept {
  if (a.diameter() != b.diameter()) return false;
  const int dr = std::abs(static_cast<int>(a.r) - static_cast<int>(b.r));
  const int ds = std::abs(static_cast<int>(a.s) - static_cast<int>(b.s));
  const int dt = std::abs(static_cast<int>(a.t) - static_cast<int>(b.t));
  return dr + ds + dt == 2 && dr <= 1 && ds <= 1 && dt <= 1;
}

std::vector<Location> locations(unsigned d) {
  std::vector<Location> out;
  out.reserve(location_count(d));
  for (unsigned row = 0; row <= d; ++row) {
    const unsigned s = d - row;
    for (unsigned t = 0; t <= row; ++t) out.push_back({row - t, s, t});
  }
  return out;
}

std::size_t picture_index(const Location& loc) noexcept {
  const std::size_t row = loc.r + loc.t;
  return row * (row + 1) / 2 + loc.t;
}

std::size_t location_count(unsigned d) noexcept { return static_cast<std::size_t>(d + 1) * (d + 2) / 2; }

std::vector<Location> neighbors(const Location& loc) {
  std::vector<Location> out;
  auto push = [&](int dr, int ds, int dt) {
    const int r = static_cast<int>(loc.r) + dr;
    const int s = static_cast<int>(loc.s) + ds;
    const int t = static_cast<int>(loc.t) + dt;
    if (r >= 0 && s >= 0 && t >= 0) out.push_back({unsigned(r), unsigned(s), unsigned(t)});
  };
  push(1, -1, 0);
  push(-1, 1, 0);
  push(1, 0, -1);
  push(-1, 0, 1);
  push(0, 1, -1);
  push(0, -1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Line> maximal_lines(unsigned d) {
  std::vector<Line> out;
  const auto all = locations(d);
  for (Axis axis : {Axis::R, Axis::S, Axis::T}) {
    for (unsigned k = 0; k <= d; ++k) {
      Line line{axis, k, {}};
      for (const Location& loc : all) {
        if (coordinate(loc, axis) == k) line.members.push_back(loc);
      }
      std::sort(line.members.begin(), line.members.end(),
                [](const Location& a, const Location& b) { return std::pair(a.r, a.t) < std::pair(b.r, b.t); });
      out.push_back(std::move(line));
    }
  }
  return out;
}

std::vector<Clique> black_cliques(unsigned d) {
  std::vector<Clique> out;
  for (const Location& loc : locations(d)) {
    if (loc.s == 0) continue;
    out.push_back({CliqueColor::Black,
                   {loc, Location{loc.r + 1, loc.s - 1, loc.t}, Location{loc.r, loc.s - 1, loc.t + 1}}});
  }
  return out;
}

std::vector<std::pair<Location, Clique>> white_cliques(unsigned d) {
  std::vector<std::pair<Location, Clique>> out;
  if (d < 2) return out;
  for (const Location& loc : locations(d - 2)) {
    const auto [r, s, t] = loc;
    out.push_back({loc,
                   {CliqueColor::White,
                    {Location{r + 1, s + 1, t}, Location{r, s + 1, t + 1}, Location{r + 1, s, t + 1}}}});
  }
  return out;
}

std::vector<std::pair<Location, Location>> edges(unsigned d) {
  std::vector<std::pair<Location, Location>> out;
  for (const Location& a : locations(d)) {
    for (const Location& b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace billiard
