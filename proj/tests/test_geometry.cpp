#include "coopet/geometry.hpp"

#include <algorithm>
#include <array>
#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "test_support.hpp"

using namespace coopet;
using ts::P;
using ts::R;

namespace {

// Generators of the worked game: columns (m_i, n_i) of m=(-1,1,1), n=(2,1,-1).
const std::vector<Point2> kGens = {P("-1", "2"), P("1", "1"), P("1", "-1")};

// Zonotope of kGens, counterclockwise, hand-derived from the 8 subset sums:
// {(0,0),(-1,2),(1,1),(1,-1),(0,3),(0,1),(2,0),(1,2)} with (1,1),(0,1) interior.
const std::vector<Point2> kZonotopeVerts = {P("-1", "2"), P("0", "0"), P("1", "-1"),
                                            P("2", "0"),  P("1", "2"), P("0", "3")};

std::vector<Point2> subset_sums(const std::vector<Point2>& gens) {
  std::vector<Point2> sums;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    Point2 s = P("0", "0");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (mask & (1u << i)) s = s + gens[i];
    }
    sums.push_back(s);
  }
  return sums;
}

}  // namespace

TEST_CASE("convex_hull canonical form") {
  SECTION("triangle already a hull") {
    const auto hull = convex_hull({P("0", "0"), P("1", "0"), P("0", "1")});
    REQUIRE(hull.vertices() == std::vector<Point2>{P("0", "0"), P("1", "0"), P("0", "1")});
  }
  SECTION("interior point dropped") {
    const auto hull = convex_hull({P("0", "0"), P("1", "0"), P("0", "1"), P("1/4", "1/4")});
    REQUIRE(hull.vertices() == std::vector<Point2>{P("0", "0"), P("1", "0"), P("0", "1")});
  }
  SECTION("starts at lexicographically smallest vertex, counterclockwise") {
    const auto hull = convex_hull({P("1", "1"), P("0", "1"), P("1", "0"), P("0", "0")});
    REQUIRE(hull.vertices() ==
            std::vector<Point2>{P("0", "0"), P("1", "0"), P("1", "1"), P("0", "1")});
  }
  SECTION("input order does not matter") {
    std::vector<Point2> pts = {P("2", "-1"), P("0", "4"), P("1", "1"), P("3", "0"), P("-1", "3")};
    auto expected = convex_hull(pts).vertices();
    std::sort(pts.begin(), pts.end(), lex_less);
    do {
      REQUIRE(convex_hull(pts).vertices() == expected);
    } while (std::next_permutation(pts.begin(), pts.end(), lex_less));
  }
}

TEST_CASE("convex_hull of the twelve translated boundary corners") {
  // Base segment [e1, e2] corners summed with the zonotope vertices of kGens.
  std::vector<Point2> pts;
  for (const Point2& base : {P("1", "0"), P("0", "1")}) {
    for (const Point2& z : kZonotopeVerts) pts.push_back(base + z);
  }
  REQUIRE(pts.size() == 12);
  const auto hull = convex_hull(pts);

  const std::vector<Point2> expected = {P("-1", "3"), P("0", "1"), P("2", "-1"),
                                        P("3", "0"),  P("2", "2"), P("0", "4")};
  REQUIRE(hull.vertices() == expected);

  // (1,3) lies on the edge [(0,4),(2,2)] and must not survive as a vertex.
  const auto& v = hull.vertices();
  REQUIRE(std::find(v.begin(), v.end(), P("1", "3")) == v.end());

  // Membership cross-check against the frozen list, all 12 inputs inside.
  for (const Point2& p : pts) REQUIRE(ts::in_ccw_polygon(expected, p));
}

TEST_CASE("convex_hull degenerate inputs") {
  REQUIRE_THROWS_WITH(convex_hull({}), "empty point set");

  const auto point = convex_hull({P("2", "3"), P("2", "3")});
  REQUIRE(point.vertices() == std::vector<Point2>{P("2", "3")});
  REQUIRE(point.contains(P("2", "3")));
  REQUIRE_FALSE(point.contains(P("2", "4")));

  const auto seg = convex_hull({P("2", "2"), P("0", "0"), P("1", "1"), P("1/2", "1/2")});
  REQUIRE(seg.vertices() == std::vector<Point2>{P("0", "0"), P("2", "2")});
  REQUIRE(seg.contains(P("1/3", "1/3")));
  REQUIRE_FALSE(seg.contains(P("1/3", "1/2")));
}

TEST_CASE("minkowski_sum_with_segments basics") {
  SECTION("point plus axis segments is the unit square") {
    const auto base = convex_hull({P("0", "0")});
    const std::vector<Point2> gens = {P("1", "0"), P("0", "1")};
    const auto square = minkowski_sum_with_segments(base, gens);
    REQUIRE(square.vertices() ==
            std::vector<Point2>{P("0", "0"), P("1", "0"), P("1", "1"), P("0", "1")});
  }
  SECTION("empty generator list is the identity") {
    const auto seg = convex_hull({P("1", "0"), P("0", "1")});
    REQUIRE(minkowski_sum_with_segments(seg, {}) == seg);
  }
  SECTION("zero generators are no-ops") {
    const auto base = convex_hull({P("0", "0")});
    const std::vector<Point2> with_zero = {P("0", "0"), P("1", "0")};
    const std::vector<Point2> without = {P("1", "0")};
    REQUIRE(minkowski_sum_with_segments(base, with_zero) ==
            minkowski_sum_with_segments(base, without));
  }
}

TEST_CASE("minkowski_sum_with_segments hexagon around the Nash payoff") {
  const Point2 nash = P("4/9", "4/9");
  const auto region = minkowski_sum_with_segments(convex_hull({nash}), kGens);

  // Hand-derived corner offsets in counterclockwise canonical order.
  std::vector<Point2> expected;
  for (const Point2& z : kZonotopeVerts) expected.push_back(nash + z);
  REQUIRE(region.vertices() == expected);

  // Brute-force oracle: all 8 corner sums inside the frozen hexagon, and
  // every frozen vertex is itself one of the corner sums.
  const auto sums = subset_sums(kGens);
  for (const Point2& s : sums) REQUIRE(ts::in_ccw_polygon(expected, nash + s));
  for (const Point2& v : expected) {
    REQUIRE(std::find(sums.begin(), sums.end(), v - nash) != sums.end());
  }

  // Membership on a 21^3 grid of interval coefficients.
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      for (int k = 0; k <= 20; ++k) {
        const Point2 p = nash + Rational(i, 20) * kGens[0] + Rational(j, 20) * kGens[1] +
                         Rational(k, 20) * kGens[2];
        REQUIRE(region.contains(p));
      }
    }
  }
}

TEST_CASE("minkowski_sum_with_segments is order independent") {
  const auto base = convex_hull({P("1", "0"), P("0", "1")});
  std::array<std::size_t, 3> idx = {0, 1, 2};
  const auto reference = minkowski_sum_with_segments(base, kGens);
  do {
    const std::vector<Point2> permuted = {kGens[idx[0]], kGens[idx[1]], kGens[idx[2]]};
    REQUIRE(minkowski_sum_with_segments(base, permuted).vertices() == reference.vertices());
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("zonotope membership for random interval coefficients") {
  const auto base = convex_hull({P("1", "0"), P("0", "1")});
  const auto region = minkowski_sum_with_segments(base, kGens);
  ts::Rng rng;
  for (int sample = 0; sample < 1000; ++sample) {
    const Rational s = rng.grid_rational(100);  // point on the base segment
    Point2 p{1 - s, s};
    for (const Point2& g : kGens) p = p + rng.grid_rational(100) * g;
    REQUIRE(region.contains(p));
  }
}

TEST_CASE("pareto_max_boundary") {
  SECTION("unique maximum collapses to a point") {
    const auto square =
        convex_hull({P("0", "0"), P("1", "0"), P("1", "1"), P("0", "1")});
    REQUIRE(pareto_max_boundary(square).chain() == std::vector<Point2>{P("1", "1")});
  }
  SECTION("coopetitive payoff space of the worked game") {
    const auto space =
        minkowski_sum_with_segments(convex_hull({P("1", "0"), P("0", "1")}), kGens);
    REQUIRE(pareto_max_boundary(space).chain() ==
            std::vector<Point2>{P("0", "4"), P("2", "2"), P("3", "0")});
  }
  SECTION("hexagon around the Nash payoff") {
    const auto hexagon =
        minkowski_sum_with_segments(convex_hull({P("4/9", "4/9")}), kGens);
    REQUIRE(pareto_max_boundary(hexagon).chain() ==
            std::vector<Point2>{P("4/9", "31/9"), P("13/9", "22/9"), P("22/9", "4/9")});
  }
  SECTION("degenerate regions") {
    REQUIRE(pareto_max_boundary(convex_hull({P("1", "0"), P("0", "1")})).chain() ==
            std::vector<Point2>{P("0", "1"), P("1", "0")});
    REQUIRE(pareto_max_boundary(convex_hull({P("0", "0"), P("1", "1")})).chain() ==
            std::vector<Point2>{P("1", "1")});
    REQUIRE(pareto_max_boundary(convex_hull({P("0", "0"), P("1", "0")})).chain() ==
            std::vector<Point2>{P("1", "0")});
    REQUIRE(pareto_max_boundary(convex_hull({P("5", "5")})).chain() ==
            std::vector<Point2>{P("5", "5")});
  }
  SECTION("triangle") {
    const auto tri = convex_hull({P("0", "0"), P("1", "0"), P("0", "1")});
    REQUIRE(pareto_max_boundary(tri).chain() == std::vector<Point2>{P("0", "1"), P("1", "0")});
  }
}

TEST_CASE("pareto boundary soundness and completeness on samples") {
  const auto space =
      minkowski_sum_with_segments(convex_hull({P("1", "0"), P("0", "1")}), kGens);
  const auto frontier = pareto_max_boundary(space);

  ts::Rng rng;
  for (int sample = 0; sample < 10000; ++sample) {
    const Rational s = rng.grid_rational(100);
    Point2 p{1 - s, s};
    for (const Point2& g : kGens) p = p + rng.grid_rational(100) * g;

    // Soundness: no region point strictly dominates any chain point.
    REQUIRE_FALSE(frontier.dominated_witness(p).has_value());
    for (const Point2& c : frontier.chain()) REQUIRE_FALSE(strictly_dominates(p, c));
    // Completeness: every region point is weakly dominated by the chain.
    REQUIRE(frontier.weakly_dominates_point(p));
  }
}

TEST_CASE("supremum and infimum") {
  const ParetoFrontier coop({P("0", "4"), P("2", "2"), P("3", "0")});
  REQUIRE(supremum(coop) == P("3", "4"));
  REQUIRE(infimum(coop) == P("0", "0"));

  const ParetoFrontier single({P("2", "2")});
  REQUIRE(supremum(single) == P("2", "2"));

  const ParetoFrontier nash_chain({P("4/9", "31/9"), P("13/9", "22/9"), P("22/9", "4/9")});
  REQUIRE(supremum(nash_chain) == P("22/9", "31/9"));

  for (const auto& f : {coop, single, nash_chain}) {
    for (const Point2& c : f.chain()) REQUIRE(weakly_dominates(supremum(f), c));
  }
}

TEST_CASE("frontier_above") {
  const ParetoFrontier coop({P("0", "4"), P("2", "2"), P("3", "0")});

  SECTION("origin threat keeps the whole chain") {
    REQUIRE(frontier_above(coop, P("0", "0")) == coop);
  }
  SECTION("Nash threat keeps the whole hexagon frontier") {
    const ParetoFrontier nash_chain({P("4/9", "31/9"), P("13/9", "22/9"), P("22/9", "4/9")});
    REQUIRE(frontier_above(nash_chain, P("4/9", "4/9")) == nash_chain);
  }
  SECTION("interior threat clips both ends exactly") {
    const auto clipped = frontier_above(coop, P("1", "1"));
    REQUIRE(clipped.chain() == std::vector<Point2>{P("1", "3"), P("2", "2"), P("5/2", "1")});
  }
  SECTION("threat at a chain endpoint leaves a single point") {
    REQUIRE(frontier_above(coop, P("3", "0")).chain() == std::vector<Point2>{P("3", "0")});
    REQUIRE(frontier_above(coop, P("2", "2")).chain() == std::vector<Point2>{P("2", "2")});
  }
  SECTION("dominating threat is an error") {
    REQUIRE_THROWS_WITH(frontier_above(coop, P("5", "5")), "threat dominates frontier");
    REQUIRE_THROWS_WITH(frontier_above(coop, P("3", "1/2")), "threat dominates frontier");
  }
}

TEST_CASE("intersect_segment_chain") {
  const ParetoFrontier coop({P("0", "4"), P("2", "2"), P("3", "0")});

  SECTION("ray to the supremum hits the super-cooperative KS point") {
    REQUIRE(intersect_segment_chain(P("0", "0"), P("3", "4"), coop) == P("12/7", "16/7"));
  }
  SECTION("symmetric diagonal") {
    const ParetoFrontier sym({P("0", "2"), P("2", "0")});
    REQUIRE(intersect_segment_chain(P("0", "0"), P("1", "1"), sym) == P("1", "1"));
  }
  SECTION("Nash-path KS intersection, cross-checked by direct linear solves") {
    const ParetoFrontier nash_chain({P("4/9", "31/9"), P("13/9", "22/9"), P("22/9", "4/9")});
    const Point2 threat = P("4/9", "4/9");
    const Point2 utopia = P("22/9", "31/9");

    // Oracle: solve the two 2x2 systems segment-by-segment, keep the root
    // whose parameters land inside both segments.
    std::vector<Point2> in_range_roots;
    for (std::size_t i = 1; i < nash_chain.chain().size(); ++i) {
      const Point2 p = nash_chain.chain()[i - 1];
      const Point2 q = nash_chain.chain()[i];
      const auto hit = ts::line_intersection(threat, utopia, p, q);
      if (!hit) continue;
      if (hit->x >= p.x && hit->x <= q.x && hit->x >= threat.x && hit->x <= utopia.x) {
        in_range_roots.push_back(*hit);
      }
    }
    REQUIRE(in_range_roots == std::vector<Point2>{P("100/63", "136/63")});

    const Point2 got = intersect_segment_chain(threat, utopia, nash_chain);
    REQUIRE(got == P("100/63", "136/63"));

    // The result satisfies both parametric forms exactly.
    REQUIRE(nash_chain.on_chain(got));
    REQUIRE(ConvexRegion::on_segment(threat, utopia, got));
  }
  SECTION("missing the chain is an error") {
    REQUIRE_THROWS_WITH(intersect_segment_chain(P("0", "0"), P("1/10", "1/10"), coop),
                        "no intersection");
  }
  SECTION("overlap along a chain edge is ambiguous") {
    REQUIRE_THROWS_WITH(intersect_segment_chain(P("0", "4"), P("2", "2"), coop),
                        "non-unique intersection");
    REQUIRE_THROWS_WITH(intersect_segment_chain(P("-1", "5"), P("1", "3"), coop),
                        "non-unique intersection");
  }
  SECTION("degenerate segment is rejected") {
    REQUIRE_THROWS_WITH(intersect_segment_chain(P("1", "1"), P("1", "1"), coop),
                        "degenerate segment");
  }
  SECTION("single-point chain") {
    const ParetoFrontier single({P("1", "1")});
    REQUIRE(intersect_segment_chain(P("0", "0"), P("2", "2"), single) == P("1", "1"));
    REQUIRE_THROWS_WITH(intersect_segment_chain(P("0", "0"), P("1", "0"), single),
                        "no intersection");
  }
}

TEST_CASE("ParetoFrontier validates monotonicity") {
  REQUIRE_THROWS_AS(ParetoFrontier({}), std::invalid_argument);
  REQUIRE_THROWS_AS(ParetoFrontier({P("0", "0"), P("1", "1")}), std::invalid_argument);
  REQUIRE_THROWS_AS(ParetoFrontier({P("0", "2"), P("0", "1")}), std::invalid_argument);
  REQUIRE_THROWS_AS(ParetoFrontier({P("0", "2"), P("1", "2")}), std::invalid_argument);
}
