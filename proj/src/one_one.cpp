#include "floer/one_one.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "floer/errors.hpp"
#include "floer/module.hpp"
#include "floer/specialize.hpp"

namespace floer {

namespace {

using boost::multiprecision::cpp_int;

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
Point scaled(const Point& p, const Rational& s) { return {p.x * s, p.y * s}; }
int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

cpp_int floor_of(const Rational& q) {
  cpp_int n = boost::multiprecision::numerator(q);
  cpp_int d = boost::multiprecision::denominator(q);
  cpp_int f = n / d;
  if (f * d != n && n < 0) f -= 1;
  return f;
}

cpp_int ceil_of(const Rational& q) { return -floor_of(-q); }

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

int to_int(const cpp_int& v) { return v.convert_to<int>(); }

std::string format(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(b - a, p - a) != 0) return false;
  return dot(p - a, p - b) <= 0;
}

// closed segments [a,b] and [c,d] meet
bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int d1 = sign_of(cross(b - a, c - a));
  const int d2 = sign_of(cross(b - a, d - a));
  const int d3 = sign_of(cross(d - c, a - c));
  const int d4 = sign_of(cross(d - c, b - c));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(c, a, b)) || (d2 == 0 && on_segment(d, a, b)) ||
         (d3 == 0 && on_segment(a, c, d)) || (d4 == 0 && on_segment(b, c, d));
}

Rational squared_distance(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  Rational t = dot(p - a, ab) / dot(ab, ab);
  t = std::clamp(t, Rational(0), Rational(1));
  const Point q = a + scaled(ab, t);
  return dot(p - q, p - q);
}

int winding_number(const std::vector<Point>& poly, const Point& p) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const Rational side = cross(b - a, p - a);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++wn;
    } else if (b.y <= p.y && side < 0) {
      --wn;
    }
  }
  return wn;
}

Rational signed_area(const std::vector<Point>& poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
  return s / 2;
}

// Sum of winding numbers about every lattice translate of q.
int lattice_count(const std::vector<Point>& poly, const Point& q) {
  Rational xmin = poly.front().x, xmax = xmin, ymin = poly.front().y, ymax = ymin;
  for (const auto& p : poly) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  int total = 0;
  for (cpp_int i = ceil_of(xmin - q.x); i <= floor_of(xmax - q.x); ++i) {
    for (cpp_int j = ceil_of(ymin - q.y); j <= floor_of(ymax - q.y); ++j) {
      total += winding_number(poly, {q.x + Rational(i), q.y + Rational(j)});
    }
  }
  return total;
}

// Turning number of a closed polygon with no reversals.
int turning_number(const std::vector<Point>& poly) {
  const std::size_t n = poly.size();
  std::vector<Point> dirs;
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(poly[(i + 1) % n] - poly[i]);
  Point ref{1, 0};
  for (int k = 1;; ++k) {
    ref = {Rational(k * 7 + 3), Rational(k * 5 + 11) / Rational(k + 1)};
    bool parallel = false;
    for (const auto& d : dirs) parallel = parallel || cross(d, ref) == 0;
    if (!parallel) break;
  }
  int rot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = dirs[(i + n - 1) % n];
    const Point& b = dirs[i];
    const int turn = sign_of(cross(a, b));
    if (turn > 0 && cross(a, ref) > 0 && cross(ref, b) > 0) ++rot;
    if (turn < 0 && cross(a, ref) < 0 && cross(ref, b) < 0) --rot;
  }
  return rot;
}

struct Lift {
  const OneOneDiagram& d;
  int period;
  Point shift;

  explicit Lift(const OneOneDiagram& diagram)
      : d(diagram),
        period(static_cast<int>(diagram.beta.size())),
        shift{Rational(diagram.translation.first), Rational(diagram.translation.second)} {}

  // vertex g of the infinite path
  Point vertex(long g) const {
    long l = g >= 0 ? g / period : -((-g + period - 1) / period);
    const long i = g - l * period;
    return d.beta[static_cast<std::size_t>(i)] + scaled(shift, Rational(l));
  }
};

struct Candidate {
  std::vector<Point> polygon;  // x, y, beta vertices back towards x
  Point beta_dir_x;
  Point beta_dir_y;
  bool alpha_clear = true;     // beta arc avoids the open alpha segment
};

Candidate candidate(const OneOneDiagram& d, const std::vector<DiagramGenerator>& gens, int x, int y) {
  const Lift lift(d);
  const auto& gx = gens[static_cast<std::size_t>(x)];
  const auto& gy = gens[static_cast<std::size_t>(y)];
  const int l = (gx.height - gy.height) * d.translation.second;
  const Point px = gx.point;
  const Point py = gy.point + scaled(lift.shift, Rational(l));
  const long seg_x = gx.segment;
  const long seg_y = gy.segment + static_cast<long>(l) * lift.period;

  Candidate c;
  c.beta_dir_x = lift.vertex(seg_x + 1) - lift.vertex(seg_x);
  c.beta_dir_y = lift.vertex(seg_y + 1) - lift.vertex(seg_y);
  c.polygon = {px, py};
  std::vector<Point> arc{py};
  if (seg_y < seg_x) {
    for (long g = seg_y + 1; g <= seg_x; ++g) arc.push_back(lift.vertex(g));
  } else {
    for (long g = seg_y; g > seg_x; --g) arc.push_back(lift.vertex(g));
  }
  arc.push_back(px);
  c.polygon.insert(c.polygon.end(), arc.begin() + 1, arc.end() - 1);

  const Rational h = px.y;
  const Rational lo = std::min(px.x, py.x);
  const Rational hi = std::max(px.x, py.x);
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    const Point& a = arc[i];
    const Point& b = arc[i + 1];
    if ((a.y - h) * (b.y - h) >= 0) continue;
    const Rational cx = a.x + (h - a.y) / (b.y - a.y) * (b.x - a.x);
    if (cx > lo && cx < hi) c.alpha_clear = false;
  }
  return c;
}

// Average multiplicity of the four quadrants at polygon vertex `corner`.
Rational corner_multiplicity(const std::vector<Point>& poly, std::size_t corner, const Point& beta_dir) {
  const std::size_t n = poly.size();
  const Point& p = poly[corner];
  Rational dist;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (i == corner || j == corner) continue;
    const Rational dd = squared_distance(p, poly[i], poly[j]);
    if (first || dd < dist) dist = dd;
    first = false;
  }
  const Point a{1, 0};
  const Rational reach = 2 * (1 + dot(beta_dir, beta_dir));
  Rational eps = 1;
  while (!first && eps * eps * reach >= dist) eps /= 2;
  int total = 0;
  for (int sa : {-1, 1}) {
    for (int sb : {-1, 1}) {
      const Point offset = scaled(a, Rational(sa)) + scaled(beta_dir, Rational(sb));
      total += winding_number(poly, p + scaled(offset, eps));
    }
  }
  return Rational(total) / 4;
}

}  // namespace

OneOneDiagram OneOneDiagram::normalized() const {
  OneOneDiagram out = *this;
  const Point t{Rational(translation.first), Rational(translation.second)};
  if (out.beta.size() >= 2 && out.beta.back() == out.beta.front() + t) out.beta.pop_back();
  return out;
}

DiagramValidation validate_diagram(const OneOneDiagram& input) {
  DiagramValidation report;
  const OneOneDiagram d = input.normalized();
  if (d.beta.empty()) {
    report.problems.push_back("beta path is empty");
    return report;
  }
  const auto [m, n] = d.translation;
  if (n != 1 && n != -1) {
    report.problems.push_back("translation (" + std::to_string(m) + ", " + std::to_string(n) +
                              ") meets alpha algebraically " + std::to_string(n) + " times; S^3 needs +-1");
    return report;
  }
  for (std::size_t i = 0; i < d.beta.size(); ++i) {
    if (is_integer(d.beta[i].y)) {
      report.problems.push_back("beta vertex " + std::to_string(i) + " lies on an alpha line (not transverse)");
    }
  }
  const Lift lift(d);
  const long period = lift.period;
  for (long g = 0; g < period; ++g) {
    if (lift.vertex(g) == lift.vertex(g + 1)) {
      report.problems.push_back("beta segment " + std::to_string(g) + " has zero length");
    }
  }
  if (!report.problems.empty()) return report;

  Rational xmin = d.beta.front().x, xmax = xmin, ymin = d.beta.front().y, ymax = ymin;
  for (long g = 0; g <= period; ++g) {
    const Point v = lift.vertex(g);
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const int yspan = to_int(ceil_of(ymax - ymin)) + 1;
  const int xspan = to_int(ceil_of(xmax - xmin)) + 1;

  // translates S_j + l*T + (k, 0) of period segments that can reach S_i
  auto for_each_translate = [&](auto&& visit) {
    for (int l = -yspan; l <= yspan; ++l) {
      const int kmax = xspan + std::abs(m * l) + 1;
      for (int k = -kmax; k <= kmax; ++k) {
        if (!visit(l, k)) return;
      }
    }
  };

  bool simple = true;
  for (long i = 0; i < period && simple; ++i) {
    const Point a = lift.vertex(i);
    const Point b = lift.vertex(i + 1);
    for (long j = 0; j < period && simple; ++j) {
      for_each_translate([&](int l, int k) {
        const Point off = scaled(lift.shift, Rational(l)) + Point{Rational(k), 0};
        const long gj = j + l * period;
        if (k == 0 && gj == i) return true;
        const Point c = lift.vertex(j) + off;
        const Point e = lift.vertex(j + 1) + off;
        if (k == 0 && (gj == i + 1 || gj + 1 == i)) {
          const Point d1 = b - a;
          const Point d2 = e - c;
          if (cross(d1, d2) == 0 && dot(d1, d2) < 0) simple = false;
          return simple;
        }
        if (segments_meet(a, b, c, e)) simple = false;
        return simple;
      });
    }
  }
  if (!simple) report.problems.push_back("beta is not simple: its lifts meet themselves or each other");

  for (const auto& [name, q] : {std::pair{"w", d.w}, std::pair{"z", d.z}}) {
    if (is_integer(q.y)) report.problems.push_back(std::string("basepoint ") + name + " lies on alpha");
    bool hit = false;
    for (long j = 0; j < period && !hit; ++j) {
      for_each_translate([&](int l, int k) {
        const Point off = scaled(lift.shift, Rational(l)) + Point{Rational(k), 0};
        if (on_segment(q, lift.vertex(j) + off, lift.vertex(j + 1) + off)) hit = true;
        return !hit;
      });
    }
    if (hit) report.problems.push_back(std::string("basepoint ") + name + " lies on beta");
  }

  if (report.problems.empty()) {
    report.generator_count = static_cast<int>(enumerate_generators(d).size());
    if (!d.labels.empty() && static_cast<int>(d.labels.size()) != report.generator_count) {
      report.problems.push_back("diagram has " + std::to_string(report.generator_count) + " generators but " +
                                std::to_string(d.labels.size()) + " labels");
    }
  }
  return report;
}

std::vector<DiagramGenerator> enumerate_generators(const OneOneDiagram& input) {
  const OneOneDiagram d = input.normalized();
  const Lift lift(d);
  std::vector<DiagramGenerator> out;
  for (long g = 0; g < lift.period; ++g) {
    const Point a = lift.vertex(g);
    const Point b = lift.vertex(g + 1);
    const bool up = b.y > a.y;
    int lo = to_int(floor_of(std::min(a.y, b.y))) + 1;
    int hi = to_int(ceil_of(std::max(a.y, b.y))) - 1;
    std::vector<int> heights;
    for (int h = lo; h <= hi; ++h) heights.push_back(h);
    if (!up) std::reverse(heights.begin(), heights.end());
    for (int h : heights) {
      DiagramGenerator gen;
      gen.segment = static_cast<int>(g);
      gen.height = h;
      gen.sign = up ? 1 : -1;
      const Rational t = (Rational(h) - a.y) / (b.y - a.y);
      gen.point = a + scaled(b - a, t);
      out.push_back(gen);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].label = i < d.labels.size() ? d.labels[i] : "x" + std::to_string(i);
  }
  return out;
}

std::vector<Bigon> count_bigons(const OneOneDiagram& input) {
  const OneOneDiagram d = input.normalized();
  const auto gens = enumerate_generators(d);
  std::vector<Bigon> out;
  const int n = static_cast<int>(gens.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const Candidate c = candidate(d, gens, x, y);
      if (!c.alpha_clear || signed_area(c.polygon) <= 0) continue;
      const auto& poly = c.polygon;
      const Point alpha_dir = poly[1] - poly[0];
      if (cross(poly[0] - poly.back(), alpha_dir) <= 0) continue;
      if (cross(alpha_dir, poly[2 % poly.size()] - poly[1]) <= 0) continue;
      out.push_back({x, y, lattice_count(poly, d.w), lattice_count(poly, d.z)});
    }
  }
  return out;
}

DomainData connecting_domain(const OneOneDiagram& input, int x, int y) {
  const OneOneDiagram d = input.normalized();
  const auto gens = enumerate_generators(d);
  if (x == y) return {Rational(0), 0, 0};
  const Candidate c = candidate(d, gens, x, y);
  const auto& poly = c.polygon;
  const Point alpha_dir = poly[1] - poly[0];
  const int sx = sign_of(cross(poly[0] - poly.back(), alpha_dir));
  const int sy = sign_of(cross(alpha_dir, poly[2 % poly.size()] - poly[1]));
  DomainData out;
  out.maslov = Rational(turning_number(poly)) - Rational(sx + sy, 4) + corner_multiplicity(poly, 0, c.beta_dir_x) +
               corner_multiplicity(poly, 1, c.beta_dir_y);
  out.n_w = lattice_count(poly, d.w);
  out.n_z = lattice_count(poly, d.z);
  return out;
}

BigradedComplex cfk_from_diagram(const OneOneDiagram& input) {
  const auto report = validate_diagram(input);
  if (!report.ok()) {
    std::string msg = "invalid diagram:";
    for (const auto& p : report.problems) msg += " " + p + ";";
    throw DomainError(msg);
  }
  const OneOneDiagram d = input.normalized();
  const auto gens = enumerate_generators(d);
  const int n = static_cast<int>(gens.size());

  std::vector<Generator> cgens;
  for (int i = 0; i < n; ++i) {
    const DomainData dom = connecting_domain(d, 0, i);
    if (!is_integer(dom.maslov)) throw InternalError("non-integral Maslov index " + format(dom.maslov));
    const int mu = dom.maslov.convert_to<int>();
    cgens.push_back({gens[static_cast<std::size_t>(i)].label, {2 * dom.n_w - mu, 2 * dom.n_z - mu}});
  }
  BigradedComplex c(std::move(cgens));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const DomainData dom = connecting_domain(d, i, j);
      const Rational du = dom.maslov - 2 * dom.n_w;
      const Rational dv = dom.maslov - 2 * dom.n_z;
      if (du != c.grading(i).gr_u - c.grading(j).gr_u || dv != c.grading(i).gr_v - c.grading(j).gr_v) {
        throw InternalError("inconsistent relative gradings between " + c.label(i) + " and " + c.label(j));
      }
    }
  }
  for (const auto& b : count_bigons(d)) {
    if (connecting_domain(d, b.from, b.to).maslov != 1) {
      throw InternalError("bigon " + c.label(b.from) + " -> " + c.label(b.to) + " does not have index one");
    }
    c.add_term(b.from, b.to, PolyUV(Monomial{b.n_w, b.n_z}));
  }
  if (!(c.differential * c.differential).is_zero()) {
    throw InternalError("d^2 != 0 for the bigon count of this diagram");
  }

  const auto tower = [](const OneVarComplex& oc, const char* name) {
    const auto h = homology_dvr(oc).module;
    if (h.free_rank() != 1 || !h.torsion().empty()) {
      throw DomainError(std::string("diagram does not present a knot in S^3: ") + name + " homology is " +
                        h.to_string());
    }
    return h.free_gradings().front();
  };
  const int du = tower(specialize_one_var(c, SpecializeMode::V1), "V=1");
  const int dv = tower(specialize_one_var(c, SpecializeMode::U1), "U=1");
  for (auto& g : c.generators) {
    g.grading.gr_u -= du;
    g.grading.gr_v -= dv;
  }
  const auto check = validate_complex(c);
  if (!check.ok()) {
    std::string msg = "diagram complex failed validation:";
    for (const auto& p : check.problems) msg += " " + p + ";";
    throw InternalError(msg);
  }
  return c;
}

}  // namespace floer
