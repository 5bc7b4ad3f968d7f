#include "regen/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regen {

namespace {

BigInt round_with(Rounding rounding, const Rational& x) {
  switch (rounding) {
    case Rounding::floor: return floor_of(x);
    case Rounding::ceil: return ceil_of(x);
    case Rounding::none:
      if (den(x) != 1) throw std::logic_error("unrounded piece produced a fraction");
      return num(x);
  }
  return 0;
}

void require_positive(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 1 || beta < 1) throw std::invalid_argument("alpha and beta must be positive");
}

void require_n(int n, int least) {
  if (n < least) {
    throw std::invalid_argument("n must be at least " + std::to_string(least) + " (got " +
                                std::to_string(n) + ")");
  }
}

Rational ratio(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

}  // namespace

Rational PiecewiseBound::exact(const Rational& alpha, const Rational& beta) const {
  const Rational x = alpha / beta;
  bool found = false;
  Rational best;
  for (const Piece& p : pieces) {
    if (!p.applies(x)) continue;
    const Rational v = p.exact(alpha, beta);
    if (!found || (envelope == Envelope::min ? v < best : v > best)) best = v;
    found = true;
  }
  if (!found) {
    throw std::out_of_range(label + ": alpha/beta = " + to_string(x) + " outside [" +
                            to_string(domain_lo()) + ", " + to_string(domain_hi()) + "]");
  }
  return best;
}

BigInt PiecewiseBound::value(std::int64_t alpha, std::int64_t beta) const {
  require_positive(alpha, beta);
  const Rational x = ratio(alpha, beta);
  bool found = false;
  BigInt best;
  for (const Piece& p : pieces) {
    if (!p.applies(x)) continue;
    const BigInt v = round_with(p.rounding, p.exact(alpha, beta));
    if (!found || (envelope == Envelope::min ? v < best : v > best)) best = v;
    found = true;
  }
  if (!found) {
    throw std::out_of_range(label + ": alpha/beta = " + to_string(x) + " outside [" +
                            to_string(domain_lo()) + ", " + to_string(domain_hi()) + "]");
  }
  return best;
}

Rational PiecewiseBound::domain_lo() const {
  Rational lo = pieces.front().lo;
  for (const Piece& p : pieces) lo = std::min(lo, p.lo);
  return lo;
}

Rational PiecewiseBound::domain_hi() const {
  Rational hi = pieces.front().hi;
  for (const Piece& p : pieces) hi = std::max(hi, p.hi);
  return hi;
}

std::vector<BoundaryCheck> piece_agreement(const PiecewiseBound& bound) {
  std::vector<BoundaryCheck> out;
  for (const Piece& left : bound.pieces) {
    for (const Piece& right : bound.pieces) {
      if (&left == &right || left.hi != right.lo) continue;
      const Rational at = left.hi;
      // Homogeneous pieces: evaluate at beta = 1, alpha = at.
      BoundaryCheck c{at, left.exact(at, 1), right.exact(at, 1), false};
      c.agree = c.left == c.right;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.at < b.at; });
  return out;
}

std::int64_t cutset_bound(int n, int k, int d, std::int64_t alpha, std::int64_t beta) {
  if (k < 1 || k > d || d > n - 1) throw std::invalid_argument("cut-set bound needs 1 <= k <= d <= n-1");
  require_positive(alpha, beta);
  std::int64_t total = 0;
  for (int i = 0; i < k; ++i) total += std::min(alpha, (d - i) * beta);
  return total;
}

std::int64_t fr_rank_lower_bound(int n, int k, std::int64_t alpha, std::int64_t beta) {
  std::int64_t total = (n - k) * alpha;
  for (int j = n - k + 1; j <= n; ++j) total += std::max<std::int64_t>(alpha - (j - 1) * beta, 0);
  return total;
}

FrIdentityReport fr_dual_identity_check(int n, int k, int d, std::int64_t alpha, std::int64_t beta) {
  if (d != n - 1) throw std::invalid_argument("the dual derivation assumes d = n - 1");
  FrIdentityReport r;
  r.dual_form = n * alpha - fr_rank_lower_bound(n, k, alpha, beta);
  r.cutset_form = cutset_bound(n, k, d, alpha, beta);
  r.pass = r.dual_form == r.cutset_form;
  return r;
}

PiecewiseBound cutset_pieces(int n) {
  require_n(n, 3);
  PiecewiseBound b{"fr_cutset", Envelope::min, {}};
  for (int m = 1; m <= n - 2; ++m) {
    b.pieces.push_back({n - 1 - m, m * (m + 1) / 2, 1, Rounding::none, Rational(m), Rational(m + 1)});
  }
  return b;
}

PiecewiseBound theorem1_pieces(int n) {
  require_n(n, 4);
  const int d = n - 1;
  PiecewiseBound b{"theorem1_outer", Envelope::min, {}};
  for (int r = 2; r <= n - 2; ++r) {
    b.pieces.push_back({std::int64_t{r} * (r - 1) * n, std::int64_t{n} * (n - 1), std::int64_t{r} * r + r,
                        Rounding::floor, ratio(d, r), ratio(d, r - 1)});
  }
  b.pieces.push_back({n - 2, 1, 1, Rounding::none, Rational(1), ratio(d, n - 2)});
  return b;
}

PiecewiseBound theorem5_pieces(int n) {
  require_n(n, 4);
  const int d = n - 1;
  PiecewiseBound b{"theorem5_rank", Envelope::max, {}};
  for (int r = 2; r <= n - 2; ++r) {
    b.pieces.push_back({std::int64_t{2} * r * n, -std::int64_t{n} * (n - 1), std::int64_t{r} * r + r,
                        Rounding::ceil, ratio(d, r), ratio(d, r - 1)});
  }
  b.pieces.push_back({2, -1, 1, Rounding::none, Rational(1), ratio(d, n - 2)});
  return b;
}

PiecewiseBound sassenkum_544_pieces() {
  return {"sassenkum_544",
          Envelope::min,
          {{7, 22, 5, Rounding::floor, ratio(18, 7), Rational(4)},
           {7, 6, 3, Rounding::floor, ratio(3, 2), ratio(18, 7)},
           {3, 1, 1, Rounding::none, Rational(1), ratio(3, 2)}}};
}

PiecewiseBound duursma_544_pieces() {
  return {"duursma_544",
          Envelope::min,
          {{7, 22, 5, Rounding::floor, ratio(23, 7), Rational(4)},
           {21, 57, 14, Rounding::floor, ratio(19, 7), ratio(23, 7)},
           {11, 19, 6, Rounding::floor, ratio(5, 2), ratio(19, 7)},
           {13, 14, 6, Rounding::floor, Rational(2), ratio(5, 2)},
           {7, 6, 3, Rounding::floor, ratio(3, 2), Rational(2)},
           {3, 1, 1, Rounding::none, Rational(1), ratio(3, 2)}}};
}

std::int64_t theorem1_bound(int n, std::int64_t alpha, std::int64_t beta) {
  return to_int64(theorem1_pieces(n).value(alpha, beta));
}

std::int64_t theorem5_rank_bound(int n, std::int64_t alpha, std::int64_t beta) {
  return to_int64(theorem5_pieces(n).value(alpha, beta));
}

std::int64_t sassenkum_544(std::int64_t alpha, std::int64_t beta) {
  return to_int64(sassenkum_544_pieces().value(alpha, beta));
}

std::int64_t duursma_544(std::int64_t alpha, std::int64_t beta) {
  return to_int64(duursma_544_pieces().value(alpha, beta));
}

namespace {

void require_range(std::int64_t alpha, std::int64_t beta, std::int64_t max_multiple) {
  require_positive(alpha, beta);
  if (alpha < beta || alpha > max_multiple * beta) {
    throw std::out_of_range("alpha must lie in [beta, " + std::to_string(max_multiple) + " beta]");
  }
}

}  // namespace

std::int64_t rank_bound_433(std::int64_t alpha, std::int64_t beta) {
  require_range(alpha, beta, 3);
  // 2 alpha >= 3 beta  <=>  alpha >= 1.5 beta
  if (2 * alpha >= 3 * beta) return to_int64(ceil_of(Rational(BigInt(8 * alpha - 6 * beta), BigInt(3))));
  return 2 * alpha - beta;
}

std::int64_t rank_bound_544(std::int64_t alpha, std::int64_t beta) {
  require_range(alpha, beta, 4);
  if (alpha >= 2 * beta) return to_int64(ceil_of(Rational(BigInt(10 * (alpha - beta)), BigInt(3))));
  if (3 * alpha >= 4 * beta) return to_int64(ceil_of(Rational(BigInt(15 * alpha - 10 * beta), BigInt(6))));
  return 2 * alpha - beta;
}

std::int64_t file_size_bound_544(std::int64_t alpha, std::int64_t beta) {
  require_range(alpha, beta, 4);
  if (alpha >= 2 * beta) return to_int64(floor_of(Rational(BigInt(5 * alpha + 10 * beta), BigInt(3))));
  if (3 * alpha >= 4 * beta) return to_int64(floor_of(Rational(BigInt(15 * alpha + 10 * beta), BigInt(6))));
  return 3 * alpha + beta;
}

std::vector<NormalizedPoint> achievable_points(int n) {
  require_n(n, 4);
  std::vector<NormalizedPoint> points;
  points.push_back({ratio(1, n - 1), ratio(1, n - 1)});
  for (int r = n - 1; r >= 2; --r) {
    points.push_back({ratio(r, std::int64_t{n} * (r - 1)), ratio(r, std::int64_t{n} * (n - 1))});
  }
  return points;
}

TradeoffCurve normalized_curve(const PiecewiseBound& bound) {
  std::vector<Rational> breaks;
  for (const Piece& p : bound.pieces) {
    breaks.push_back(p.lo);
    breaks.push_back(p.hi);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  TradeoffCurve curve{bound.label, {}};
  for (const Rational& x : breaks) {
    const Rational file_size = bound.exact(x, 1);
    curve.points.push_back({x / file_size, 1 / file_size});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const auto& a, const auto& b) { return a.beta_over_B > b.beta_over_B; });
  return curve;
}

TradeoffCurve achievable_curve(int n) { return {"achievable", achievable_points(n)}; }
TradeoffCurve outer_curve(int n) { return normalized_curve(theorem1_pieces(n)); }
TradeoffCurve cutset_curve(int n) { return normalized_curve(cutset_pieces(n)); }

std::vector<TradeoffCurve> tradeoff_curves(int n) {
  std::vector<TradeoffCurve> curves{cutset_curve(n), outer_curve(n), achievable_curve(n)};
  if (n == 5) {
    curves.push_back(normalized_curve(sassenkum_544_pieces()));
    curves.push_back(normalized_curve(duursma_544_pieces()));
  }
  return curves;
}

RegionMatchReport region_match(int n) {
  const auto points = achievable_points(n);
  RegionMatchReport report;

  // points[0] is MSR, points[1] is r = n-1, ..., points.back() is r = 2.
  auto msr_line = [n](const NormalizedPoint& p) {
    return (n - 2) * p.alpha_over_B + p.beta_over_B == 1;
  };
  report.segments.push_back(
      {n - 1, points[0], points[1], msr_line(points[0]) && msr_line(points[1])});

  for (int r = 2; r <= n - 2; ++r) {
    const NormalizedPoint& at_r = points[static_cast<std::size_t>(n - r)];
    const NormalizedPoint& at_next = points[static_cast<std::size_t>(n - r - 1)];
    auto line = [n, r](const NormalizedPoint& p) {
      return std::int64_t{r} * (r - 1) * n * p.alpha_over_B + std::int64_t{n} * (n - 1) * p.beta_over_B ==
             std::int64_t{r} * r + r;
    };
    report.segments.push_back({r, at_next, at_r, line(at_r) && line(at_next)});
  }

  const PiecewiseBound outer = theorem1_pieces(n);
  for (const NormalizedPoint& p : points) {
    // The unrounded bound is homogeneous of degree one, so a point on the
    // boundary evaluates to exactly 1.
    if (outer.exact(p.alpha_over_B, p.beta_over_B) != 1) report.off_curve.push_back(p);
  }

  report.pass = report.off_curve.empty() &&
                std::all_of(report.segments.begin(), report.segments.end(),
                            [](const SegmentCheck& s) { return s.holds; });
  return report;
}

}  // namespace regen
