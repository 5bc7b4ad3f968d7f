#include "regen/dual_chain.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <string>

namespace regen {

namespace {

int irank(const PrimeField& field, const Matrix& m) { return static_cast<int>(rank(field, m)); }

int positive_part(int x) { return std::max(x, 0); }

}  // namespace

DualChain::DualChain(PrimeField field, int n, int alpha, std::vector<ChainLevel> levels)
    : field_(field), n_(n), alpha_(alpha), levels_(std::move(levels)) {
  stats_.reserve(levels_.size());
  for (const ChainLevel& level : levels_) stats_.push_back(level_stats(*this, level.t));
}

const ChainLevel& DualChain::level(int t) const {
  if (t < 3 || t > n_) throw std::out_of_range("chain has no level t = " + std::to_string(t));
  return levels_.at(static_cast<std::size_t>(n_ - t));
}

const LevelStats& DualChain::stats(int t) const {
  if (t < 3 || t > n_) throw std::out_of_range("chain has no level t = " + std::to_string(t));
  return stats_.at(static_cast<std::size_t>(n_ - t));
}

DualChain build_chain(const HRepair& hr) {
  if (hr.n < 4) {
    throw std::invalid_argument("dual chain needs n >= 4 (got n = " + std::to_string(hr.n) + ")");
  }
  const PrimeField& field = hr.field;
  const int n = hr.n;
  std::vector<ChainLevel> levels;
  levels.reserve(static_cast<std::size_t>(n - 2));

  ChainLevel top{n, 0, hr.alpha, hr.m, {}};
  for (int j = 0; j <= n; ++j) top.offsets.push_back(Index{j} * hr.alpha);
  levels.push_back(std::move(top));

  for (int t = n - 1; t >= 3; --t) {
    const ChainLevel& prev = levels.back();
    ChainLevel next{t, n - t, hr.alpha, Matrix(), {0}};
    std::vector<Matrix> columns;
    Index total = 0;
    for (int j = next.first; j < n; ++j) {
      const Subspace own = column_space(field, prev.thick(j));
      const Subspace before = column_space(field, prev.thick_range(prev.first, j - 1));
      columns.push_back(subspace_intersection(own, before).basis());
      total += columns.back().cols();
      next.offsets.push_back(total);
    }
    next.h.resize(Index{n} * hr.alpha, total);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      next.h.middleCols(next.offsets[c], columns[c].cols()) = columns[c];
    }
    spdlog::debug("chain level t={} has {} columns", t, total);
    levels.push_back(std::move(next));
  }
  return DualChain(field, n, hr.alpha, std::move(levels));
}

LevelStats level_stats(const DualChain& chain, int t) {
  const ChainLevel& level = chain.level(t);
  const PrimeField& field = chain.field();
  const int n = chain.n();
  const int f = level.first;
  const auto size = static_cast<std::size_t>(n);

  LevelStats s;
  s.t = t;
  s.first = f;
  s.rank = rank(field, level.h);
  s.delta.assign(size, 0);
  s.slack.assign(size, std::nullopt);
  s.thick_ranks.assign(size, 0);
  s.block_ranks.assign(size, std::vector<int>(size, 0));

  for (int j = f; j < n; ++j) {
    s.thick_ranks[static_cast<std::size_t>(j)] = irank(field, level.thick(j));
    for (int i = 0; i < n; ++i) {
      s.block_ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          irank(field, level.block(i, j));
    }
  }

  int previous = 0;
  for (int j = f; j < n; ++j) {
    const int prefix = irank(field, level.thick_range(f, j));
    s.delta[static_cast<std::size_t>(j)] = prefix - previous;
    previous = prefix;
  }

  for (int j = f + 1; j < n; ++j) {
    const auto& row = s.block_ranks[static_cast<std::size_t>(j)];
    int off_diagonal = 0;
    for (int l = f; l < j; ++l) off_diagonal += row[static_cast<std::size_t>(l)];
    s.slack[static_cast<std::size_t>(j)] =
        s.delta[static_cast<std::size_t>(j)] -
        positive_part(row[static_cast<std::size_t>(j)] - off_diagonal);
  }
  return s;
}

bool CertificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

std::vector<Check> CertificationReport::violations() const {
  std::vector<Check> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const Check& c) { return !c.holds; });
  return out;
}

const Check* CertificationReport::find(const std::string& part, int s, int t, int j) const {
  for (const Check& c : checks) {
    if (c.part == part && c.s == s && c.t == t && c.j == j) return &c;
  }
  return nullptr;
}

namespace {

Check make_check(std::string part, std::string relation, int t, int j, int s, Rational lhs,
                 Rational rhs) {
  bool holds = false;
  if (relation == "==") holds = lhs == rhs;
  else if (relation == ">=") holds = lhs >= rhs;
  else holds = lhs <= rhs;
  return {std::move(part), std::move(relation), t, j, s, std::move(lhs), std::move(rhs), holds};
}

// Accessors over absolute 0-based indices.
int diag(const LevelStats& s, int j) {
  return s.block_ranks[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
}
int off(const LevelStats& s, int j, int l) {
  return s.block_ranks[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
}
// Sum_{l = from}^{j-1} rho(A_{j,l}).
int row_sum(const LevelStats& s, int j, int from) {
  int total = 0;
  for (int l = from; l < j; ++l) total += off(s, j, l);
  return total;
}
// (rho(A_jj) - sum_{l = first}^{j-1} rho(A_jl))^+
int lower_part(const LevelStats& s, int j) { return positive_part(diag(s, j) - row_sum(s, j, s.first)); }

}  // namespace

CertificationReport certify_lemma4(const DualChain& chain) {
  CertificationReport report{"lemma4", {}};
  const int n = chain.n();
  for (int t = n; t >= 3; --t) {
    const LevelStats& s = chain.stats(t);
    for (int j = s.first; j < n; ++j) {
      report.checks.push_back(make_check("a", "==", t, j + 1, 0,
                                         s.thick_ranks[static_cast<std::size_t>(j)], diag(s, j)));
    }
  }
  for (int t = n - 1; t >= 3; --t) {
    const LevelStats& s = chain.stats(t);
    const LevelStats& up = chain.stats(t + 1);
    for (int j = s.first; j < n; ++j) {
      report.checks.push_back(make_check("b", "==", t, j + 1, 0, diag(s, j),
                                         diag(up, j) - up.delta[static_cast<std::size_t>(j)]));
    }
    for (int j = s.first + 1; j < n; ++j) {
      report.checks.push_back(make_check("c", "<=", t, j + 1, 0, row_sum(s, j, s.first),
                                         row_sum(up, j, up.first) - diag(s, j)));
    }
  }
  return report;
}

Rational theorem6_rhs(const LevelStats& stats, int n, int s) {
  const int f = stats.first;
  BigInt diagonal = 0;
  BigInt below = 0;
  for (int j = f; j < n; ++j) diagonal += diag(stats, j);
  for (int j = f + 1; j < n; ++j) below += row_sum(stats, j, f);
  return Rational(2 * ((s + 1) * diagonal - below), BigInt((s + 1) * (s + 2)));
}

CertificationReport certify_theorem6(const DualChain& chain) {
  CertificationReport report{"theorem6", {}};
  const int n = chain.n();
  for (int s = 1; s <= n - 3; ++s) {
    for (int t = s + 3; t <= n; ++t) {
      const LevelStats& stats = chain.stats(t);
      report.checks.push_back(make_check("bound", ">=", t, 0, s, Rational(stats.rank),
                                         theorem6_rhs(stats, n, s)));
    }
  }
  return report;
}

CertificationReport certify_cascade(const DualChain& chain) {
  CertificationReport report{"cascade", {}};
  for (int t = chain.n(); t >= 4; --t) {
    report.checks.push_back(make_check("order", ">=", t, 0, 0, Rational(chain.stats(t).rank),
                                       Rational(chain.stats(t - 1).rank)));
  }
  return report;
}

Rational slack_bound_start(const LevelStats& stats, int n) {
  const int f = stats.first;
  BigInt total = -diag(stats, f) + diag(stats, f + 1) - 2 * lower_part(stats, f + 1);
  for (int j = f + 2; j < n; ++j) {
    total += 2 * diag(stats, j) - 3 * lower_part(stats, j) - row_sum(stats, j, f);
  }
  return Rational(total, BigInt(3));
}

Rational slack_bound_step(const LevelStats& stats, int n, int s) {
  const int f = stats.first;
  BigInt total = -BigInt((s + 1) * (s + 2)) * diag(stats, f) + 2 * (s + 1) * diag(stats, f + 1) -
                 BigInt((s + 1) * (s + 4)) * lower_part(stats, f + 1);
  for (int j = f + 2; j < n; ++j) {
    total += 2 * (s + 2) * diag(stats, j) - (s + 2) * (s + 3) * lower_part(stats, j) -
             2 * row_sum(stats, j, f);
  }
  return Rational(total, BigInt((s + 2) * (s + 3)));
}

CertificationReport certify_appendixB_slack(const DualChain& chain) {
  CertificationReport report{"appendixB_slack", {}};
  const int n = chain.n();
  auto slack_sum = [&](const LevelStats& stats) {
    int total = 0;
    for (int j = stats.first + 1; j < n; ++j) total += *stats.slack[static_cast<std::size_t>(j)];
    return total;
  };

  for (int t = n; t >= 3; --t) {
    const LevelStats& stats = chain.stats(t);
    for (int j = stats.first + 1; j < n; ++j) {
      report.checks.push_back(make_check("nonnegative", ">=", t, j + 1, 0,
                                         *stats.slack[static_cast<std::size_t>(j)], 0));
    }
  }
  for (int t = n; t >= 4; --t) {
    const LevelStats& stats = chain.stats(t);
    report.checks.push_back(
        make_check("start", ">=", t, 0, 1, slack_sum(stats), slack_bound_start(stats, n)));
  }
  for (int s = 1; s <= n - 4; ++s) {
    for (int t = s + 4; t <= n; ++t) {
      const LevelStats& stats = chain.stats(t);
      report.checks.push_back(
          make_check("step", ">=", t, 0, s, slack_sum(stats), slack_bound_step(stats, n, s)));
    }
  }
  return report;
}

ChainCertificate certify_all(const DualChain& chain) {
  return {certify_lemma4(chain), certify_theorem6(chain), certify_cascade(chain),
          certify_appendixB_slack(chain)};
}

}  // namespace regen
