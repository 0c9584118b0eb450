// The base duopoly: quadratic payoffs 4x(1-x-y) per producer on the unit
// square, best responses in closed form, the Nash equilibrium, and the
// conservative part of the payoff space (the canonical 2-simplex) with its
// Pareto-maximal boundary, the segment [e1, e2].

#ifndef COOPET_COURNOT_HPP
#define COOPET_COURNOT_HPP

#include "coopet/geometry.hpp"
#include "coopet/rational.hpp"

#include <stdexcept>
#include <vector>

namespace coopet {

/// Production levels of the two players, rescaled to the unit interval.
struct BiStrategy {
  Rational x;
  Rational y;

  friend bool operator==(const BiStrategy&, const BiStrategy&) = default;
};

/// Payoffs of the two players.
struct PayoffPair {
  Rational u_c;
  Rational u_w;

  Point2 point() const { return {u_c, u_w}; }

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

// Scale of the quadratic profit term. The constructions below assume both
// players share it.
inline const Rational kPayoffScale = 4;

inline bool in_unit_interval(const Rational& v) { return v >= 0 && v <= 1; }

/// Base payoffs (4x(1-x-y), 4y(1-x-y)).
inline PayoffPair payoff_base(const BiStrategy& s) {
  if (!in_unit_interval(s.x) || !in_unit_interval(s.y)) {
    throw std::invalid_argument("strategy out of bounds");
  }
  const Rational slack = 1 - s.x - s.y;
  return {kPayoffScale * s.x * slack, kPayoffScale * s.y * slack};
}

/// argmax over x in [0,1] of 4x(1-x-y): the stationary point (1-y)/2,
/// clamped to the strategy interval.
inline Rational best_response_c(const Rational& y) {
  if (!in_unit_interval(y)) throw std::invalid_argument("strategy out of bounds");
  Rational br = (1 - y) / 2;
  if (br < 0) br = 0;
  if (br > 1) br = 1;
  return br;
}

/// Symmetric to best_response_c.
inline Rational best_response_w(const Rational& x) { return best_response_c(x); }

struct NashEquilibrium {
  BiStrategy strategy;
  PayoffPair payoff;
};

/// The unique fixed point of the best responses, (1/3, 1/3), with payoff
/// (4/9, 4/9).
inline NashEquilibrium nash_equilibrium() {
  const BiStrategy s{Rational(1) / 3, Rational(1) / 3};
  return {s, payoff_base(s)};
}

/// Payoffs weakly dominating (0,0): the triangle (0,0), (1,0), (0,1).
inline ConvexRegion conservative_part() {
  return convex_hull({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
}

/// Pareto-maximal boundary of the base payoff space: the segment [e2, e1].
inline ParetoFrontier base_pareto_boundary() {
  return ParetoFrontier({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

/// Bi-strategies along (x, 1/2 - x) realize exactly the boundary payoffs
/// (2x, 1 - 2x); x sweeps [0, 1/2].
inline BiStrategy boundary_bi_strategy(const Rational& x) {
  if (x < 0 || x > Rational(1) / 2) throw std::invalid_argument("strategy out of bounds");
  return {x, Rational(1) / 2 - x};
}

/// Payoffs of the resolution x resolution uniform grid over the unit
/// square, row-major (y outer, x inner).
inline std::vector<PayoffPair> sample_payoff_image(int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  std::vector<PayoffPair> image;
  image.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      image.push_back(payoff_base({Rational(i, resolution - 1), Rational(j, resolution - 1)}));
    }
  }
  return image;
}

}  // namespace coopet

#endif  // COOPET_COURNOT_HPP
