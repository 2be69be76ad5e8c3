#include <map>
#include <set>

#include "floer/one_one.hpp"

namespace floer {

namespace {

Point pt(long xn, long xd, long yn, long yd) { return {Rational(xn, xd), Rational(yn, yd)}; }

}  // namespace

std::optional<OneOneDiagram> annulus_diagram(int points, int rainbows, int bottom_gap, int top_gap, int twist) {
  const int n = points;
  const int r = rainbows;
  if (n < 1 || r < 0 || 2 * r >= n) return std::nullopt;
  auto mod = [n](int i) { return ((i % n) + n) % n; };
  auto x_of = [n](int i) { return Rational(2 * i + 1, 2 * n); };

  // partner on each side: target index and the x-displacement in the cover
  struct Arc {
    int to = -1;
    Rational dx;
    bool rainbow = false;
    Rational depth;  // rainbow height measured from its alpha line
  };
  std::vector<Arc> bottom(static_cast<std::size_t>(n));
  std::vector<Arc> top(static_cast<std::size_t>(n));
  auto place_rainbows = [&](std::vector<Arc>& side, int gap) {
    for (int k = 0; k < r; ++k) {
      const int lo = gap - k;  // unwrapped indices
      const int hi = gap + 1 + k;
      const Rational depth(k + 1, 4 * r + 4);
      const Rational span = x_of(hi) - x_of(lo);
      side[static_cast<std::size_t>(mod(lo))] = {mod(hi), span, true, depth};
      side[static_cast<std::size_t>(mod(hi))] = {mod(lo), -span, true, depth};
    }
  };
  place_rainbows(bottom, bottom_gap);
  place_rainbows(top, top_gap);

  // free points in cyclic order after the rainbow blocks, unwrapped
  auto free_points = [&](int gap) {
    std::vector<int> out;
    for (int k = 0; k < n - 2 * r; ++k) out.push_back(gap + r + 1 + k);
    return out;
  };
  const auto fb = free_points(bottom_gap);
  const auto ft = free_points(top_gap);
  const int v = n - 2 * r;
  for (int k = 0; k < v; ++k) {
    const int t = k + twist;
    const int wraps = t >= 0 ? t / v : -((-t + v - 1) / v);
    const int tu = ft[static_cast<std::size_t>(t - wraps * v)] + wraps * n;
    const Rational dx = x_of(tu) - x_of(fb[static_cast<std::size_t>(k)]);
    bottom[static_cast<std::size_t>(mod(fb[static_cast<std::size_t>(k)]))] = {mod(tu), dx, false, 0};
    top[static_cast<std::size_t>(mod(tu))] = {mod(fb[static_cast<std::size_t>(k)]), -dx, false, 0};
  }

  OneOneDiagram d;
  // walk from the bottom side of point 0, heading up
  int idx = 0;
  Rational x = x_of(0);
  Rational y = 0;
  bool on_bottom = true;
  std::set<std::pair<int, bool>> visited;
  while (true) {
    if (!visited.insert({idx, on_bottom}).second) return std::nullopt;
    if (on_bottom) {
      const Arc& a = bottom[static_cast<std::size_t>(idx)];
      if (a.rainbow) {
        d.beta.push_back({x, y + a.depth});
        d.beta.push_back({x + a.dx, y + a.depth});
        x += a.dx;
        y -= 1;  // cross downward; now on the top side of the square below
        on_bottom = false;
      } else {
        d.beta.push_back({x, y + Rational(2, 5)});
        d.beta.push_back({x + a.dx, y + Rational(3, 5)});
        x += a.dx;
        y += 1;
      }
      idx = a.to;
    } else {
      const Arc& a = top[static_cast<std::size_t>(idx)];
      if (a.rainbow) {
        d.beta.push_back({x, y + 1 - a.depth});
        d.beta.push_back({x + a.dx, y + 1 - a.depth});
        x += a.dx;
        y += 1;
        on_bottom = true;
      } else {
        d.beta.push_back({x, y + Rational(3, 5)});
        d.beta.push_back({x + a.dx, y + Rational(2, 5)});
        x += a.dx;
        y -= 1;
      }
      idx = a.to;
    }
    if (idx == 0 && on_bottom) break;
  }
  if (static_cast<int>(visited.size()) != n) return std::nullopt;
  const Rational mx = x - x_of(0);
  if (boost::multiprecision::denominator(mx) != 1 || boost::multiprecision::denominator(y) != 1) return std::nullopt;
  d.translation = {mx.convert_to<int>(), y.convert_to<int>()};
  if (d.translation.second != 1 && d.translation.second != -1) return std::nullopt;

  const Rational inner = r > 0 ? Rational(1, 8 * r + 8) : Rational(1, 8);
  const Rational wx = r > 0 ? (x_of(bottom_gap) + x_of(bottom_gap + 1)) / 2 : Rational(0);
  const Rational zx = r > 0 ? (x_of(top_gap) + x_of(top_gap + 1)) / 2 : Rational(0);
  d.w = {wx, inner};
  d.z = {zx, 1 - inner};
  return d;
}

OneOneDiagram trefoil_diagram() {
  OneOneDiagram d;
  d.beta = {pt(1, 1, 1, 2), pt(6, 5, 13, 10), pt(3, 2, 13, 10), pt(3, 2, 7, 10), pt(9, 5, 7, 10), pt(9, 5, 13, 10)};
  d.translation = {1, 1};
  d.w = pt(27, 20, 23, 20);
  d.z = pt(33, 20, 17, 20);
  d.labels = {"a", "b", "c"};
  return d;
}

OneOneDiagram figure_eight_diagram() {
  OneOneDiagram d;
  d.beta = {pt(1, 10, 1, 12),  pt(3, 10, 1, 12),   pt(3, 10, -1, 12), pt(1, 2, -1, 12),   pt(1, 2, 1, 6),
            pt(-1, 10, 1, 6),  pt(-1, 10, -2, 5),  pt(-3, 10, -3, 5), pt(-3, 10, -7, 6), pt(-9, 10, -7, 6)};
  d.translation = {-1, -1};
  d.w = pt(1, 5, 1, 24);
  d.z = pt(2, 5, 23, 24);
  return d;
}

OneOneDiagram unknot_diagram() {
  OneOneDiagram d;
  d.beta = {pt(1, 2, 1, 2)};
  d.translation = {0, 1};
  d.w = pt(1, 4, 1, 2);
  d.z = pt(3, 4, 1, 2);
  return d;
}

}  // namespace floer
