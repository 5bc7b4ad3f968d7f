#pragma once

// The iterated intersection chain H^(n), H^(n-1), ..., H^(3) built from
// H_repair, and certifiers for the rank relations it must satisfy.
//
// Level t keeps thick columns j = n-t .. n-1 (0-based; n-t+1 .. n 1-based).
// Thick column j of level t spans
//     S(H^(t+1)_j) ∩ S(H^(t+1) restricted to thick columns n-t-1 .. j-1),
// and A^(t)[i][j] is the alpha-row slice i of that thick column.

#include "regen/code_model.hpp"
#include "regen/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regen {

struct ChainLevel {
  int t = 0;
  int first = 0;  ///< first thick column index (0-based) = n - t
  int alpha = 0;
  Matrix h;                     ///< n alpha rows
  std::vector<Index> offsets;   ///< column offset of each thick column, plus end

  Index offset(int j) const { return offsets.at(static_cast<std::size_t>(j - first)); }
  Index width(int j) const { return offset(j + 1) - offset(j); }
  auto thick(int j) const { return h.middleCols(offset(j), width(j)); }
  /// Thick columns from..to inclusive.
  auto thick_range(int from, int to) const {
    return h.middleCols(offset(from), offset(to + 1) - offset(from));
  }
  auto block(int i, int j) const { return h.block(Index{i} * alpha, offset(j), alpha, width(j)); }
};

struct LevelStats {
  int t = 0;
  int first = 0;
  Index rank = 0;  ///< rank of the whole level
  /// Indexed by absolute thick-column index; entries before `first` unused.
  std::vector<int> delta;
  std::vector<std::optional<int>> slack;    ///< defined for j > first
  std::vector<std::vector<int>> block_ranks;  ///< [i][j]
  std::vector<int> thick_ranks;             ///< rank of H^(t)_j
};

class DualChain {
 public:
  DualChain(PrimeField field, int n, int alpha, std::vector<ChainLevel> levels);

  const PrimeField& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int alpha() const noexcept { return alpha_; }
  /// Levels ordered t = n, n-1, ..., 3.
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }
  const ChainLevel& level(int t) const;
  const LevelStats& stats(int t) const;
  int top() const noexcept { return n_; }
  int bottom() const noexcept { return 3; }

 private:
  PrimeField field_;
  int n_;
  int alpha_;
  std::vector<ChainLevel> levels_;
  std::vector<LevelStats> stats_;
};

/// Throws std::invalid_argument when n < 4.
DualChain build_chain(const HRepair& hr);

LevelStats level_stats(const DualChain& chain, int t);

/// One evaluated relation. For equalities `holds` means lhs == rhs, for
/// inequalities lhs >= rhs (or lhs <= rhs where the relation is an upper
/// bound, recorded in `relation`). Indices t, j, s are 1-based as in the
/// usual notation; a value of 0 means "not applicable".
struct Check {
  std::string part;
  std::string relation;  ///< "==", ">=" or "<="
  int t = 0;
  int j = 0;
  int s = 0;
  Rational lhs;
  Rational rhs;
  bool holds = false;

  Rational margin() const { return lhs - rhs; }
};

struct CertificationReport {
  std::string name;
  std::vector<Check> checks;

  bool pass() const;
  std::vector<Check> violations() const;
  const Check* find(const std::string& part, int s, int t, int j = 0) const;
};

/// Per-level rank relations:
///  a: rho(H_j) = rho(A_jj)
///  b: rho(A_jj) = rho(A'_jj) - delta'_j        (primes: level t+1)
///  c: sum_{l<j} rho(A_jl) <= sum_{l<j} rho(A'_jl) - rho(A_jj)
CertificationReport certify_lemma4(const DualChain& chain);
/// rank(H^(t)) >= 2/((s+1)(s+2)) [(s+1) sum rho(A_jj) - sum_{l<j} rho(A_jl)]
/// for 1 <= s <= n-3, s+3 <= t <= n.
CertificationReport certify_theorem6(const DualChain& chain);
/// rank(H^(t)) >= rank(H^(t-1)).
CertificationReport certify_cascade(const DualChain& chain);
/// Slack values are non-negative and their sum at each level meets the
/// closed-form lower bounds used in the induction (start form for s = 1,
/// step form for s -> s+1).
CertificationReport certify_appendixB_slack(const DualChain& chain);

/// Right-hand side of the rank inequality checked by certify_theorem6.
Rational theorem6_rhs(const LevelStats& stats, int n, int s);
/// Lower bound on the slack sum at level t from the s = 1 start form.
Rational slack_bound_start(const LevelStats& stats, int n);
/// Lower bound on the slack sum at level t from the step form with index s.
Rational slack_bound_step(const LevelStats& stats, int n, int s);

struct ChainCertificate {
  CertificationReport lemma4;
  CertificationReport theorem6;
  CertificationReport cascade;
  CertificationReport slack;

  bool pass() const {
    return lemma4.pass() && theorem6.pass() && cascade.pass() && slack.pass();
  }
};

ChainCertificate certify_all(const DualChain& chain);

}  // namespace regen
