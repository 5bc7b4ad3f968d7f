#pragma once

// Closed-form file-size and dual-rank bounds for (n, k = n-1, d = n-1)
// codes, the achievable region, and normalized (alpha/B, beta/B) curves.
// Everything is evaluated in exact integer / rational arithmetic.

#include "regen/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace regen {

enum class Rounding { floor, ceil, none };

/// Which value to take where several pieces apply (at range boundaries).
enum class Envelope { min, max };

/// value = round((coeff_alpha * alpha + coeff_beta * beta) / denom),
/// valid for lo <= alpha / beta <= hi.
struct Piece {
  std::int64_t coeff_alpha = 0;
  std::int64_t coeff_beta = 0;
  std::int64_t denom = 1;
  Rounding rounding = Rounding::none;
  Rational lo;
  Rational hi;

  bool applies(const Rational& ratio) const { return lo <= ratio && ratio <= hi; }
  Rational exact(const Rational& alpha, const Rational& beta) const {
    return (coeff_alpha * alpha + coeff_beta * beta) / denom;
  }
};

struct PiecewiseBound {
  std::string label;
  Envelope envelope = Envelope::min;
  std::vector<Piece> pieces;

  /// Unrounded value; throws std::out_of_range when no piece applies.
  Rational exact(const Rational& alpha, const Rational& beta) const;
  /// Rounded value at integer (alpha, beta).
  BigInt value(std::int64_t alpha, std::int64_t beta) const;
  Rational domain_lo() const;
  Rational domain_hi() const;
};

/// Agreement of neighbouring pieces at a shared boundary alpha/beta = at.
struct BoundaryCheck {
  Rational at;
  Rational left;
  Rational right;
  bool agree = false;
};
std::vector<BoundaryCheck> piece_agreement(const PiecewiseBound& bound);

// --- integer evaluators -------------------------------------------------

/// B <= sum_{i=0}^{k-1} min(alpha, (d - i) beta).
std::int64_t cutset_bound(int n, int k, int d, std::int64_t alpha, std::int64_t beta);

/// rank(H) >= (n-k) alpha + sum_{j=n-k+1}^{n} (alpha - (j-1) beta)^+.
std::int64_t fr_rank_lower_bound(int n, int k, std::int64_t alpha, std::int64_t beta);

/// File-size upper bound for exact-repair linear codes, d = k = n - 1.
std::int64_t theorem1_bound(int n, std::int64_t alpha, std::int64_t beta);

/// Dual-rank lower bound; n alpha - theorem5_rank_bound = theorem1_bound.
std::int64_t theorem5_rank_bound(int n, std::int64_t alpha, std::int64_t beta);

/// (4,3,3): ceil((8 alpha - 6 beta)/3) for 1.5 beta <= alpha <= 3 beta,
/// 2 alpha - beta below.
std::int64_t rank_bound_433(std::int64_t alpha, std::int64_t beta);

/// (5,4,4): ceil(10(alpha - beta)/3), ceil((15 alpha - 10 beta)/6),
/// 2 alpha - beta on their respective ranges.
std::int64_t rank_bound_544(std::int64_t alpha, std::int64_t beta);

/// (5,4,4) specialization of the file-size bound.
std::int64_t file_size_bound_544(std::int64_t alpha, std::int64_t beta);

/// Comparison bounds for (5,4,4), restricted to linear codes.
std::int64_t sassenkum_544(std::int64_t alpha, std::int64_t beta);
std::int64_t duursma_544(std::int64_t alpha, std::int64_t beta);

// --- piecewise descriptions -------------------------------------------

PiecewiseBound cutset_pieces(int n);       ///< k = d = n - 1, exact
PiecewiseBound theorem1_pieces(int n);     ///< floor, min envelope
PiecewiseBound theorem5_pieces(int n);     ///< ceil, max envelope
PiecewiseBound sassenkum_544_pieces();
PiecewiseBound duursma_544_pieces();

// --- normalized trade-off ---------------------------------------------

struct NormalizedPoint {
  Rational alpha_over_B;
  Rational beta_over_B;

  bool operator==(const NormalizedPoint&) const = default;
};

struct TradeoffCurve {
  std::string label;
  std::vector<NormalizedPoint> points;  ///< beta/B strictly decreasing
};

/// Canonical-code points (r/(n(r-1)), r/(n(n-1))), 2 <= r <= n-1, plus the
/// MSR point (1/(n-1), 1/(n-1)); sorted by decreasing beta/B.
std::vector<NormalizedPoint> achievable_points(int n);

/// Deflection points of a homogeneous piecewise-linear bound, taken at
/// every piece boundary (unrounded), sorted by decreasing beta/B.
TradeoffCurve normalized_curve(const PiecewiseBound& bound);

TradeoffCurve achievable_curve(int n);
TradeoffCurve outer_curve(int n);
TradeoffCurve cutset_curve(int n);

/// Every curve emitted for n: FR cut-set, outer bound, achievable region,
/// and for n = 5 the two comparison bounds.
std::vector<TradeoffCurve> tradeoff_curves(int n);

struct SegmentCheck {
  int r = 0;  ///< r of the segment; n - 1 marks the MSR segment
  NormalizedPoint from;
  NormalizedPoint to;
  bool holds = false;
};

struct RegionMatchReport {
  bool pass = false;
  std::vector<SegmentCheck> segments;
  std::vector<NormalizedPoint> off_curve;  ///< achievable points not on the outer bound
};

/// Consecutive achievable points satisfy their segment equations and every
/// achievable point lies on the outer bound curve.
RegionMatchReport region_match(int n);

struct FrIdentityReport {
  bool pass = false;
  std::int64_t dual_form = 0;    ///< n alpha - fr_rank_lower_bound
  std::int64_t cutset_form = 0;  ///< cutset_bound
};

/// Checks n alpha - fr_rank_lower_bound == cutset_bound; needs d = n - 1.
FrIdentityReport fr_dual_identity_check(int n, int k, int d, std::int64_t alpha, std::int64_t beta);

}  // namespace regen
