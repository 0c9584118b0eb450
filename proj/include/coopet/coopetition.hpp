// The coopetitive game: a pair of marginal-benefit 3-vectors (m, n) that
// shift the base duopoly payoffs by v(z) = sum_i z_i (m_i, n_i) for a shared
// cooperative strategy z in the unit cube. Fixing z translates the base
// game, so the whole analysis reduces to translating base-game objects:
//
//   coopetitive space  = base Pareto boundary  (+) zonotope of (m_i, n_i)
//   Nash path          = Nash payoff           (+) the same zonotope
//
// recover_strategy inverts the payoff map: given a target payoff it finds a
// strategy triple realizing it, selecting among the underdetermined
// cooperative strategies the minimum-Euclidean-norm solution (ties broken
// lexicographically). In super-cooperative mode the boundary bi-strategy is
// additionally free; the smallest feasible boundary parameter is chosen.

#ifndef COOPET_COOPETITION_HPP
#define COOPET_COOPETITION_HPP

#include "coopet/cournot.hpp"
#include "coopet/geometry.hpp"
#include "coopet/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace coopet {

inline constexpr std::size_t kCooperativeDims = 3;

struct CoopetitiveGame {
  std::array<Rational, kCooperativeDims> m;
  std::array<Rational, kCooperativeDims> n;

  std::vector<Point2> generators() const {
    std::vector<Point2> g;
    g.reserve(kCooperativeDims);
    for (std::size_t i = 0; i < kCooperativeDims; ++i) g.push_back({m[i], n[i]});
    return g;
  }

  friend bool operator==(const CoopetitiveGame&, const CoopetitiveGame&) = default;
};

struct CooperativeStrategy {
  std::array<Rational, kCooperativeDims> z;

  friend bool operator==(const CooperativeStrategy&, const CooperativeStrategy&) = default;
};

struct CoopetitiveTriple {
  BiStrategy s;
  CooperativeStrategy z;

  friend bool operator==(const CoopetitiveTriple&, const CoopetitiveTriple&) = default;
};

/// v(z) = sum_i z_i (m_i, n_i).
inline Point2 translation_vector(const CoopetitiveGame& g, const CooperativeStrategy& zs) {
  Point2 v{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < kCooperativeDims; ++i) v = v + zs.z[i] * Point2{g.m[i], g.n[i]};
  return v;
}

/// Full payoff: base quadratic plus the cooperative translation.
inline PayoffPair payoff(const CoopetitiveGame& g, const CoopetitiveTriple& t) {
  for (const Rational& zi : t.z.z) {
    if (!in_unit_interval(zi)) throw std::invalid_argument("strategy out of bounds");
  }
  const PayoffPair base = payoff_base(t.s);
  const Point2 shifted = base.point() + translation_vector(g, t.z);
  return {shifted.x, shifted.y};
}

/// Union over the cube of the translated base Pareto boundaries: the
/// boundary segment swept by the zonotope of the generators.
inline ConvexRegion coopetitive_space(const CoopetitiveGame& g) {
  const auto gens = g.generators();
  const ParetoFrontier boundary = base_pareto_boundary();
  return minkowski_sum_with_segments(convex_hull(boundary.chain()), gens);
}

/// Union over the cube of the translated Nash payoffs.
inline ConvexRegion nash_path(const CoopetitiveGame& g) {
  const auto gens = g.generators();
  return minkowski_sum_with_segments(convex_hull({nash_equilibrium().payoff.point()}), gens);
}

inline ParetoFrontier coopetitive_pareto_boundary(const CoopetitiveGame& g) {
  return pareto_max_boundary(coopetitive_space(g));
}

inline ParetoFrontier nash_path_pareto_boundary(const CoopetitiveGame& g) {
  return pareto_max_boundary(nash_path(g));
}

/// The conservative simplex swept by the zonotope: the full region the
/// sampled payoff cloud settles into for nonnegative base payoffs. Used for
/// plotting and for the envelope comparison note.
inline ConvexRegion full_payoff_space(const CoopetitiveGame& g) {
  const auto gens = g.generators();
  return minkowski_sum_with_segments(conservative_part(), gens);
}

/// Hull of the simplex corners and their translations by the partial sums
/// v(1,0,0), v(1,1,0), v(1,1,1) only. Coincides with full_payoff_space
/// exactly when those three translates already generate the sweep.
inline ConvexRegion partial_sum_envelope(const CoopetitiveGame& g) {
  const auto gens = g.generators();
  std::vector<Point2> pts = conservative_part().vertices();
  Point2 shift{Rational(0), Rational(0)};
  const std::size_t base_count = pts.size();
  for (const Point2& gen : gens) {
    shift = shift + gen;
    for (std::size_t i = 0; i < base_count; ++i) pts.push_back(pts[i] + shift);
  }
  return convex_hull(pts);
}

namespace detail {

struct CubeSolution {
  std::array<Rational, kCooperativeDims> z;
  Rational norm2;
};

inline bool better_candidate(const CubeSolution& a, const CubeSolution& b) {
  if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
  return a.z < b.z;
}

/// Minimum-norm point of the affine set {A_F t = rhs} for up to three free
/// columns; returns nullopt when the system is inconsistent. Bounds are not
/// applied here: bound-active optima surface through other fixing patterns.
inline std::optional<std::vector<Rational>> min_norm_affine(const std::vector<Point2>& cols,
                                                            const Point2& rhs) {
  const std::size_t k = cols.size();
  if (k == 0) {
    if (rhs.x == 0 && rhs.y == 0) return std::vector<Rational>{};
    return std::nullopt;
  }
  if (k == 1) {
    const Point2& a = cols[0];
    if (a.x == 0 && a.y == 0) {
      if (rhs.x == 0 && rhs.y == 0) return std::vector<Rational>{Rational(0)};
      return std::nullopt;
    }
    const Rational t = a.x != 0 ? rhs.x / a.x : rhs.y / a.y;
    if (t * a.x == rhs.x && t * a.y == rhs.y) return std::vector<Rational>{t};
    return std::nullopt;
  }

  // Split on the rank of the 2 x k column matrix.
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < k; ++i) {
    if (cols[i].x != 0 || cols[i].y != 0) {
      pivot = i;
      break;
    }
  }
  if (!pivot) {  // zero matrix
    if (rhs.x == 0 && rhs.y == 0) return std::vector<Rational>(k, Rational(0));
    return std::nullopt;
  }
  bool rank_one = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (cross(cols[*pivot], cols[i]) != 0) {
      rank_one = false;
      break;
    }
  }

  if (rank_one) {
    // All columns along one direction d: the system collapses to a single
    // scalar equation sum c_i t_i = s with g_i = c_i d, rhs = s d.
    const Point2 d = cols[*pivot];
    if (cross(d, rhs) != 0) return std::nullopt;
    const auto along = [&](const Point2& p) { return d.x != 0 ? p.x / d.x : p.y / d.y; };
    std::vector<Rational> c(k);
    Rational c_norm2 = 0;
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = along(cols[i]);
      c_norm2 += c[i] * c[i];
    }
    const Rational s = along(rhs);
    std::vector<Rational> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = s * c[i] / c_norm2;
    return t;
  }

  if (k == 2) {
    const Rational det = cross(cols[0], cols[1]);
    const Rational t0 = cross(rhs, cols[1]) / det;
    const Rational t1 = cross(cols[0], rhs) / det;
    return std::vector<Rational>{t0, t1};
  }

  // k == 3, rank 2: t = A^T (A A^T)^{-1} rhs.
  Rational gxx = 0, gxy = 0, gyy = 0;
  for (const Point2& col : cols) {
    gxx += col.x * col.x;
    gxy += col.x * col.y;
    gyy += col.y * col.y;
  }
  const Rational det = gxx * gyy - gxy * gxy;
  const Rational wx = (gyy * rhs.x - gxy * rhs.y) / det;
  const Rational wy = (gxx * rhs.y - gxy * rhs.x) / det;
  std::vector<Rational> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = cols[i].x * wx + cols[i].y * wy;
  return t;
}

/// Minimum-norm z in the cube with sum_i z_i (m_i, n_i) = offset, by
/// enumerating which coordinates sit at a bound (3^3 patterns). The free
/// coordinates of the optimum are the projection of the origin onto the
/// remaining affine set, so the optimum is among the candidates.
inline std::optional<CooperativeStrategy> min_norm_cube_solution(const CoopetitiveGame& g,
                                                                 const Point2& offset) {
  const auto gens = g.generators();
  std::optional<CubeSolution> best;

  for (int pattern = 0; pattern < 27; ++pattern) {
    std::array<int, kCooperativeDims> state;  // 0 free, 1 at 0, 2 at 1
    int rest = pattern;
    for (std::size_t i = 0; i < kCooperativeDims; ++i) {
      state[i] = rest % 3;
      rest /= 3;
    }

    Point2 rhs = offset;
    std::vector<Point2> free_cols;
    std::vector<std::size_t> free_idx;
    for (std::size_t i = 0; i < kCooperativeDims; ++i) {
      if (state[i] == 0) {
        free_cols.push_back(gens[i]);
        free_idx.push_back(i);
      } else if (state[i] == 2) {
        rhs = rhs - gens[i];
      }
    }

    const auto free_vals = min_norm_affine(free_cols, rhs);
    if (!free_vals) continue;

    CubeSolution cand{};
    for (std::size_t i = 0; i < kCooperativeDims; ++i) cand.z[i] = state[i] == 2 ? 1 : 0;
    for (std::size_t j = 0; j < free_idx.size(); ++j) cand.z[free_idx[j]] = (*free_vals)[j];

    bool feasible = true;
    Point2 check{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < kCooperativeDims; ++i) {
      if (!in_unit_interval(cand.z[i])) {
        feasible = false;
        break;
      }
      check = check + cand.z[i] * gens[i];
    }
    if (!feasible || !(check == offset)) continue;

    cand.norm2 = 0;
    for (const Rational& zi : cand.z) cand.norm2 += zi * zi;
    if (!best || better_candidate(cand, *best)) best = cand;
  }

  if (!best) return std::nullopt;
  return CooperativeStrategy{best->z};
}

/// Smallest boundary parameter a in [0, 1/2] such that
/// target - (2a, 1 - 2a) lies in the generators' zonotope.
inline std::optional<Rational> smallest_boundary_parameter(const CoopetitiveGame& g,
                                                           const Point2& target) {
  const auto gens = g.generators();
  const ConvexRegion zonotope =
      minkowski_sum_with_segments(convex_hull({{Rational(0), Rational(0)}}), gens);
  const auto& v = zonotope.vertices();

  // offset(a) = o0 + a * w must stay inside the zonotope.
  const Point2 o0{target.x, target.y - 1};
  const Point2 w{Rational(-2), Rational(2)};
  Rational lo = 0, hi = Rational(1) / 2;

  const auto clip_halfplane = [&](const Point2& u, const Point2& edge) -> bool {
    // cross(edge, offset(a) - u) >= 0, linear in a.
    const Rational alpha = cross(edge, o0 - u);
    const Rational beta = cross(edge, w);
    if (beta == 0) return alpha >= 0;
    const Rational bound = -alpha / beta;
    if (beta > 0) {
      if (bound > lo) lo = bound;
    } else {
      if (bound < hi) hi = bound;
    }
    return lo <= hi;
  };

  if (v.size() >= 3) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!clip_halfplane(v[i], v[(i + 1) % v.size()] - v[i])) return std::nullopt;
    }
  } else if (v.size() == 2) {
    const Point2 e = v[1] - v[0];
    const Rational alpha = cross(e, o0 - v[0]);
    const Rational beta = cross(e, w);
    if (beta == 0) {
      if (alpha != 0) return std::nullopt;
    } else {
      const Rational a = -alpha / beta;
      if (a < lo || a > hi) return std::nullopt;
      lo = hi = a;
    }
    // Stay within the segment: its parameter is linear in a; clip both ends.
    const Rational len2 = dot(e, e);
    const Rational salpha = dot(o0 - v[0], e);
    const Rational sbeta = dot(w, e);
    if (sbeta == 0) {
      if (salpha < 0 || salpha > len2) return std::nullopt;
    } else {
      Rational at_zero = -salpha / sbeta;
      Rational at_one = (len2 - salpha) / sbeta;
      if (at_zero > at_one) std::swap(at_zero, at_one);
      if (at_zero > lo) lo = at_zero;
      if (at_one < hi) hi = at_one;
      if (lo > hi) return std::nullopt;
    }
  } else {
    // Zonotope is a single point: offset(a) must equal it.
    const Point2 u = v[0];
    const Rational a = (u.x - o0.x) / w.x;
    if (a < lo || a > hi) return std::nullopt;
    if (!(o0 + a * w == u)) return std::nullopt;
    lo = hi = a;
  }

  return lo;
}

}  // namespace detail

enum class RecoveryMode { kPurelyCoopetitive, kSuperCooperative };

/// Inverts the payoff map onto a target point.
///
/// Purely coopetitive: the bi-strategy stays at the Nash equilibrium and z
/// alone reaches the target, which must lie on the Nash path.
/// Super cooperative: the bi-strategy moves along the base boundary family
/// (a, 1/2 - a) as well, and the target must lie in the coopetitive space.
inline CoopetitiveTriple recover_strategy(const CoopetitiveGame& g, const Point2& target,
                                          RecoveryMode mode) {
  if (mode == RecoveryMode::kPurelyCoopetitive) {
    if (!nash_path(g).contains(target)) throw std::domain_error("mode/region mismatch");
    const auto eq = nash_equilibrium();
    const auto z = detail::min_norm_cube_solution(g, target - eq.payoff.point());
    if (!z) throw std::domain_error("target not reachable");
    return {eq.strategy, *z};
  }

  if (!coopetitive_space(g).contains(target)) throw std::domain_error("mode/region mismatch");
  const auto a = detail::smallest_boundary_parameter(g, target);
  if (!a) throw std::domain_error("target not reachable");
  const BiStrategy s = boundary_bi_strategy(*a);
  const auto z = detail::min_norm_cube_solution(g, target - payoff_base(s).point());
  if (!z) throw std::domain_error("target not reachable");
  return {s, *z};
}

}  // namespace coopet

#endif  // COOPET_COOPETITION_HPP
