#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floer/complex.hpp"

namespace floer {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

/// Genus-1 doubly pointed diagram on R^2 / Z^2. The alpha curve lifts to the
/// horizontal lines y = k; `beta` is one period of a lift of the beta curve,
/// which continues as beta + j * translation. A trailing copy of
/// beta.front() + translation is tolerated and dropped by normalize().
struct OneOneDiagram {
  std::vector<Point> beta;
  std::pair<int, int> translation{0, 1};
  Point w;
  Point z;
  std::vector<std::string> labels;  ///< optional generator names in path order

  OneOneDiagram normalized() const;
};

struct DiagramValidation {
  std::vector<std::string> problems;
  int generator_count = 0;
  bool ok() const { return problems.empty(); }
};

DiagramValidation validate_diagram(const OneOneDiagram& d);

/// An alpha-beta intersection: the crossing of the period with a line y = height.
struct DiagramGenerator {
  std::string label;
  int segment = 0;  ///< index of the beta segment containing it
  int height = 0;
  Point point;
  int sign = 0;     ///< +1 when beta crosses upward
};

std::vector<DiagramGenerator> enumerate_generators(const OneOneDiagram& d);

struct Bigon {
  int from = 0;
  int to = 0;
  int n_w = 0;
  int n_z = 0;
  bool operator==(const Bigon&) const = default;
};

/// Embedded bigons with convex corners, from x to y: the domain lies to the
/// left of the alpha arc traversed from x to y.
std::vector<Bigon> count_bigons(const OneOneDiagram& d);

/// Relative data of the unique domain joining x to y in the universal cover.
struct DomainData {
  Rational maslov;
  int n_w = 0;
  int n_z = 0;
};
DomainData connecting_domain(const OneOneDiagram& d, int x, int y);

/// CFK over F[U,V] from the diagram; throws DomainError for invalid diagrams
/// or diagrams that do not present a knot in S^3, InternalError on a failed
/// consistency check.
BigradedComplex cfk_from_diagram(const OneOneDiagram& d);

/// Diagram assembled on the annulus obtained by cutting along alpha: `points`
/// intersection points, `rainbows` nested arcs on each side (around the gap
/// after point `bottom_gap` containing w, and after `top_gap` containing z),
/// and the remaining strands joined with a cyclic shift `twist`. Empty when
/// the resulting curve has several components or is not an S^3 diagram.
std::optional<OneOneDiagram> annulus_diagram(int points, int rainbows, int bottom_gap, int top_gap, int twist);

/// The trefoil diagram with generators a, b, c.
OneOneDiagram trefoil_diagram();
/// A five-generator diagram of the figure-eight knot.
OneOneDiagram figure_eight_diagram();
/// beta vertical: one generator, no bigons.
OneOneDiagram unknot_diagram();

}  // namespace floer
