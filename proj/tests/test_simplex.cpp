#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "billiard/simplex.hpp"

using namespace billiard;

namespace {

// Every location of Delta_d by brute force over the cube [0, d]^3.
std::set<Location> cube_filter(unsigned d) {
  std::set<Location> out;
  for (unsigned r = 0; r <= d; ++r)
    for (unsigned s = 0; s <= d; ++s)
      for (unsigned t = 0; t <= d; ++t)
        if (r + s + t == d) out.insert({r, s, t});
  return out;
}

std::array<Location, 3> sorted(std::array<Location, 3> m) {
  std::sort(m.begin(), m.end());
  return m;
}

// Mutually adjacent triples, found without using any clique constructor.
std::set<std::array<Location, 3>> brute_triangles(unsigned d) {
  const std::set<Location> cube = cube_filter(d);
  const std::vector<Location> all(cube.begin(), cube.end());
  std::set<std::array<Location, 3>> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      for (std::size_t k = j + 1; k < all.size(); ++k)
        if (adjacent(all[i], all[j]) && adjacent(all[j], all[k]) && adjacent(all[i], all[k]))
          out.insert({all[i], all[j], all[k]});
  return out;
}

}  // namespace

TEST_CASE("locations in picture order") {
  const auto d3 = locations(3);
  std::vector<std::string> names;
  for (const Location& loc : d3) names.push_back(std::to_string(loc.r) + std::to_string(loc.s) + std::to_string(loc.t));
  CHECK(names == std::vector<std::string>{"030", "120", "021", "210", "111", "012", "300", "201", "102", "003"});
  for (unsigned d = 0; d <= 12; ++d) {
    const auto locs = locations(d);
    CHECK(locs.size() == location_count(d));
    CHECK(locs.size() == (d + 1) * (d + 2) / 2);
    CHECK(std::set<Location>(locs.begin(), locs.end()) == cube_filter(d));
    for (std::size_t i = 0; i < locs.size(); ++i) CHECK(picture_index(locs[i]) == i);
  }
  CHECK(locations(0) == std::vector<Location>{{0, 0, 0}});
}

TEST_CASE("adjacency") {
  CHECK(adjacent({1, 1, 0}, {0, 1, 1}));
  CHECK(adjacent({0, 2, 0}, {1, 1, 0}));
  CHECK_FALSE(adjacent({2, 0, 0}, {0, 0, 2}));
  CHECK_FALSE(adjacent({1, 1, 0}, {1, 1, 0}));
  CHECK_FALSE(adjacent({1, 1, 0}, {1, 1, 1}));
  for (unsigned d = 0; d <= 7; ++d) {
    for (const Location& loc : locations(d)) {
      const auto ns = neighbors(loc);
      CHECK(ns.size() <= 6);
      for (const Location& n : ns) {
        CHECK(adjacent(loc, n));
        CHECK(adjacent(n, loc));
      }
      std::size_t brute = 0;
      for (const Location& other : locations(d)) brute += adjacent(loc, other) ? 1 : 0;
      CHECK(ns.size() == brute);
    }
  }
  // Interior of Delta_3: the single point (1,1,1) has six neighbors.
  CHECK(neighbors({1, 1, 1}).size() == 6);
  CHECK(neighbors({3, 0, 0}).size() == 2);
}

TEST_CASE("maximal lines") {
  const auto lines2 = maximal_lines(2);
  REQUIRE(lines2.size() == 9);
  const auto s0 = std::find_if(lines2.begin(), lines2.end(), [](const Line& l) { return l.name() == "S=0"; });
  REQUIRE(s0 != lines2.end());
  CHECK(s0->members == std::vector<Location>{{0, 0, 2}, {1, 0, 1}, {2, 0, 0}});
  CHECK(maximal_lines(1).size() == 6);
  CHECK(maximal_lines(0).size() == 3);
  for (unsigned d = 0; d <= 8; ++d) {
    const auto lines = maximal_lines(d);
    CHECK(lines.size() == 3 * (d + 1));
    std::map<Location, int> hits;
    for (const Line& line : lines) {
      CHECK(line.members.size() == d + 1 - line.value);
      for (const Location& loc : line.members) {
        CHECK(coordinate(loc, line.axis) == line.value);
        ++hits[loc];
      }
    }
    CHECK(hits.size() == location_count(d));
    for (const auto& [loc, n] : hits) CHECK(n == 3);
  }
}

TEST_CASE("black and white cliques partition the unit triangles") {
  for (unsigned d = 0; d <= 6; ++d) {
    const auto triangles = brute_triangles(d);
    const auto black = black_cliques(d);
    const auto white = white_cliques(d);
    CHECK(black.size() == d * (d + 1) / 2);
    CHECK(white.size() == (d < 2 ? 0 : (d - 1) * d / 2));
    CHECK(triangles.size() == black.size() + white.size());
    std::set<std::array<Location, 3>> seen;
    for (const Clique& c : black) {
      CHECK(c.color == CliqueColor::Black);
      CHECK(triangles.count(sorted(c.members)) == 1);
      CHECK(seen.insert(sorted(c.members)).second);
      // Upward triangle: two members share the smaller s.
      const auto [l, m, n] = c.members;
      CHECK(m == Location{l.r + 1, l.s - 1, l.t});
      CHECK(n == Location{l.r, l.s - 1, l.t + 1});
    }
    for (const auto& [base, c] : white) {
      CHECK(c.color == CliqueColor::White);
      CHECK(base.diameter() + 2 == d);
      CHECK(triangles.count(sorted(c.members)) == 1);
      CHECK(seen.insert(sorted(c.members)).second);
      const std::array<Location, 3> expected = {Location{base.r + 1, base.s + 1, base.t},
                                                Location{base.r, base.s + 1, base.t + 1},
                                                Location{base.r + 1, base.s, base.t + 1}};
      CHECK(c.members == expected);
    }
    CHECK(seen == triangles);
  }
}

TEST_CASE("white cliques are listed clockwise in the picture") {
  // Picture coordinates: row = r + t (downward), column = t - r (rightward).
  for (unsigned d = 2; d <= 6; ++d) {
    for (const auto& [base, c] : white_cliques(d)) {
      auto row = [](const Location& x) { return static_cast<int>(x.r + x.t); };
      auto col = [](const Location& x) { return static_cast<int>(x.t) - static_cast<int>(x.r); };
      const auto [a, b, e] = c.members;
      CHECK(row(a) == row(b));
      CHECK(col(a) < col(b));
      CHECK(row(e) == row(a) + 1);
      // Signed area with y pointing down is positive for a clockwise turn.
      const int cross = (col(b) - col(a)) * (row(e) - row(a)) - (row(b) - row(a)) * (col(e) - col(a));
      CHECK(cross > 0);
    }
  }
}

TEST_CASE("edges and their black cliques") {
  for (unsigned d = 0; d <= 7; ++d) {
    const auto es = edges(d);
    CHECK(es.size() == 3 * d * (d + 1) / 2);
    std::map<std::pair<Location, Location>, int> black_hits, white_hits;
    for (const Clique& c : black_cliques(d))
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) ++black_hits[std::minmax(c.members[i], c.members[j])];
    for (const auto& [base, c] : white_cliques(d))
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) ++white_hits[std::minmax(c.members[i], c.members[j])];
    for (const auto& e : es) {
      CHECK(e.first < e.second);
      CHECK(adjacent(e.first, e.second));
      CHECK(black_hits[e] == 1);
      // Boundary edges (both ends on one side) lie on no white clique.
      const bool boundary = (e.first.r == 0 && e.second.r == 0) || (e.first.s == 0 && e.second.s == 0) ||
                            (e.first.t == 0 && e.second.t == 0);
      CHECK(white_hits[e] == (boundary ? 0 : 1));
    }
    CHECK(black_hits.size() == es.size());
  }
}
