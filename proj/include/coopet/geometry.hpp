// Exact planar geometry kernel: convex hulls, Minkowski sums of a convex
// region with segments (zonotope construction), Pareto-maximal boundaries
// under the component-wise order, and segment/chain intersections.
//
// Every predicate is an exact rational computation; there are no epsilons
// anywhere. Regions are canonical (counterclockwise, lexicographically
// smallest vertex first, no three consecutive collinear vertices) so value
// equality is meaningful and output is deterministic.

#ifndef COOPET_GEOMETRY_HPP
#define COOPET_GEOMETRY_HPP

#include "coopet/rational.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coopet {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator-() const { return {-x, -y}; }

  friend Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

  friend std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << "(" << p.x << ", " << p.y << ")";
  }
};

inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

inline bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// a >= b component-wise. Equal points weakly dominate each other.
inline bool weakly_dominates(const Point2& a, const Point2& b) {
  return a.x >= b.x && a.y >= b.y;
}

/// a >= b component-wise and a != b. Equal points do not dominate.
inline bool strictly_dominates(const Point2& a, const Point2& b) {
  return weakly_dominates(a, b) && a != b;
}

class ConvexRegion;
ConvexRegion convex_hull(std::vector<Point2> points);

/// Convex polygon in canonical form: strict counterclockwise vertex order,
/// lexicographically smallest vertex first. A single point and a segment
/// (two vertices) are legal degenerate regions. Construct via convex_hull
/// or minkowski_sum_with_segments; the invariant then holds by construction.
class ConvexRegion {
 public:
  const std::vector<Point2>& vertices() const { return verts_; }

  friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;

  /// Exact point membership (boundary counts as inside).
  bool contains(const Point2& p) const {
    const std::size_t n = verts_.size();
    if (n == 1) return p == verts_[0];
    if (n == 2) return on_segment(verts_[0], verts_[1], p);
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = verts_[i];
      const Point2& b = verts_[(i + 1) % n];
      if (cross(b - a, p - a) < 0) return false;
    }
    return true;
  }

  /// p lies on the closed segment [a, b].
  static bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    if (cross(b - a, p - a) != 0) return false;
    const Rational t = dot(p - a, b - a);
    return t >= 0 && t <= dot(b - a, b - a);
  }

 private:
  friend ConvexRegion convex_hull(std::vector<Point2> points);
  explicit ConvexRegion(std::vector<Point2> verts) : verts_(std::move(verts)) {}

  std::vector<Point2> verts_;
};

/// Convex hull in canonical counterclockwise order (monotone chain).
/// Collinear and duplicate points are removed; collinear input collapses to
/// a two-vertex segment, a single repeated point to a one-vertex region.
inline ConvexRegion convex_hull(std::vector<Point2> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");

  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return ConvexRegion(std::move(points));

  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = points[i];
  }
  const std::size_t lower_size = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
    while (k >= lower_size && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point equals the first
  return ConvexRegion(std::move(hull));
}

/// Minkowski sum of a convex region with unit-interval-scaled segments:
/// { b + sum_i t_i * g_i : b in base, t_i in [0,1] }. Generator order does
/// not affect the result; zero generators are skipped.
inline ConvexRegion minkowski_sum_with_segments(const ConvexRegion& base,
                                                std::span<const Point2> generators) {
  std::vector<Point2> verts = base.vertices();
  for (const Point2& g : generators) {
    if (g.x == 0 && g.y == 0) continue;
    std::vector<Point2> shifted;
    shifted.reserve(2 * verts.size());
    for (const Point2& v : verts) {
      shifted.push_back(v);
      shifted.push_back(v + g);
    }
    verts = convex_hull(std::move(shifted)).vertices();
  }
  return convex_hull(std::move(verts));
}

/// Pareto-maximal boundary stored as a piecewise-linear chain: first
/// coordinates strictly increasing, second strictly decreasing, so every
/// segment has negative slope and no chain point dominates another.
class ParetoFrontier {
 public:
  explicit ParetoFrontier(std::vector<Point2> chain) : chain_(std::move(chain)) {
    if (chain_.empty()) throw std::invalid_argument("empty chain");
    for (std::size_t i = 1; i < chain_.size(); ++i) {
      if (!(chain_[i].x > chain_[i - 1].x && chain_[i].y < chain_[i - 1].y)) {
        throw std::invalid_argument("chain is not strictly monotone");
      }
    }
  }

  const std::vector<Point2>& chain() const { return chain_; }

  friend bool operator==(const ParetoFrontier&, const ParetoFrontier&) = default;

  /// Height of the chain at abscissa x, if x lies within the chain's span.
  std::optional<Rational> y_at(const Rational& x) const {
    if (x < chain_.front().x || x > chain_.back().x) return std::nullopt;
    for (std::size_t i = 1; i < chain_.size(); ++i) {
      const Point2& p = chain_[i - 1];
      const Point2& q = chain_[i];
      if (x <= q.x) return p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
    }
    return chain_.back().y;  // single-point chain, x == front().x
  }

  /// p lies exactly on the chain.
  bool on_chain(const Point2& p) const {
    const auto y = y_at(p.x);
    return y.has_value() && *y == p.y;
  }

  /// Some chain point weakly dominates p.
  bool weakly_dominates_point(const Point2& p) const {
    if (p.x > chain_.back().x) return false;
    const Rational x = p.x < chain_.front().x ? chain_.front().x : p.x;
    return p.y <= *y_at(x);
  }

  /// A chain point strictly dominated by p, if one exists. The candidate to
  /// beat is the chain point with the largest abscissa not exceeding p.x:
  /// chain points further left only have larger second coordinates.
  std::optional<Point2> dominated_witness(const Point2& p) const {
    if (p.x < chain_.front().x) return std::nullopt;
    const Rational x = p.x > chain_.back().x ? chain_.back().x : p.x;
    const Point2 c{x, *y_at(x)};
    if (strictly_dominates(p, c)) return c;
    return std::nullopt;
  }

 private:
  std::vector<Point2> chain_;
};

/// Pareto-maximal boundary of a convex region. Walks the hull from the
/// rightmost vertex (topmost among ties) counterclockwise to the topmost
/// vertex (rightmost among ties); those are exactly the negative-slope
/// edges. A region with a unique component-wise maximum yields that point.
inline ParetoFrontier pareto_max_boundary(const ConvexRegion& region) {
  const auto& v = region.vertices();
  std::size_t top = 0, right = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y > v[top].y || (v[i].y == v[top].y && v[i].x > v[top].x)) top = i;
    if (v[i].x > v[right].x || (v[i].x == v[right].x && v[i].y > v[right].y)) right = i;
  }
  if (top == right) return ParetoFrontier({v[top]});

  std::vector<Point2> chain;
  for (std::size_t i = right;; i = (i + 1) % v.size()) {
    chain.push_back(v[i]);
    if (i == top) break;
  }
  std::reverse(chain.begin(), chain.end());
  return ParetoFrontier(std::move(chain));
}

/// Component-wise supremum of the chain; need not lie on the frontier.
inline Point2 supremum(const ParetoFrontier& frontier) {
  return {frontier.chain().back().x, frontier.chain().front().y};
}

/// Component-wise infimum of the chain.
inline Point2 infimum(const ParetoFrontier& frontier) {
  return {frontier.chain().front().x, frontier.chain().back().y};
}

/// Restriction of the chain to the points weakly dominating threat, with
/// endpoints clipped exactly at the dominance boundary.
inline ParetoFrontier frontier_above(const ParetoFrontier& frontier, const Point2& threat) {
  const auto& c = frontier.chain();
  std::vector<Point2> clipped;
  const auto push = [&](const Point2& p) {
    if (clipped.empty() || clipped.back() != p) clipped.push_back(p);
  };

  if (c.size() == 1) {
    if (weakly_dominates(c[0], threat)) push(c[0]);
  }
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Point2& p = c[i - 1];
    const Point2& q = c[i];
    // x rises and y falls along the segment: x >= threat.x holds from some
    // parameter lo on, y >= threat.y up to some parameter hi.
    Rational lo = 0, hi = 1;
    if (p.x < threat.x) lo = (threat.x - p.x) / (q.x - p.x);
    if (q.y < threat.y) hi = (threat.y - p.y) / (q.y - p.y);
    if (lo > 1 || hi < 0 || lo > hi) continue;
    push(p + lo * (q - p));
    if (hi > lo) push(p + hi * (q - p));
  }

  if (clipped.empty()) throw std::domain_error("threat dominates frontier");
  return ParetoFrontier(std::move(clipped));
}

/// Unique intersection point of segment [a, b] with the chain.
inline Point2 intersect_segment_chain(const Point2& a, const Point2& b,
                                      const ParetoFrontier& frontier) {
  if (a == b) throw std::invalid_argument("degenerate segment");
  const Point2 d = b - a;
  const Rational len2 = dot(d, d);

  std::vector<Point2> hits;
  const auto record = [&](const Point2& p) {
    if (std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
  };
  const auto param_on_ab = [&](const Point2& p) { return dot(p - a, d) / len2; };

  const auto& c = frontier.chain();
  if (c.size() == 1) {
    if (ConvexRegion::on_segment(a, b, c[0])) record(c[0]);
  }
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Point2& p = c[i - 1];
    const Point2 e = c[i] - p;
    const Rational denom = cross(d, e);
    if (denom != 0) {
      const Rational t = cross(p - a, e) / denom;
      const Rational u = cross(p - a, d) / denom;
      if (t >= 0 && t <= 1 && u >= 0 && u <= 1) record(a + t * d);
    } else if (cross(p - a, d) == 0) {
      // Collinear overlap. More than a point is ambiguous by contract.
      const Rational tp = param_on_ab(p);
      const Rational tq = param_on_ab(c[i]);
      const Rational lo = std::max(Rational(0), std::min(tp, tq));
      const Rational hi = std::min(Rational(1), std::max(tp, tq));
      if (lo > hi) continue;
      if (lo < hi) throw std::domain_error("non-unique intersection");
      record(a + lo * d);
    }
  }

  if (hits.empty()) throw std::domain_error("no intersection");
  if (hits.size() > 1) throw std::domain_error("non-unique intersection");
  return hits[0];
}

}  // namespace coopet

#endif  // COOPET_GEOMETRY_HPP
