#include "oracles.hpp"

#include "regen/dual_chain.hpp"
#include "regen/instances.hpp"

#include <doctest.h>

#include <algorithm>

using namespace regen;

namespace {

// The chain recomputed by enumerating spans. Thick column spans are stored
// as explicit vector sets, so nothing here depends on a choice of basis.
struct OracleLevel {
  int t = 0;
  int first = 0;
  std::vector<oracle::SpanSet> thick;  // indexed by absolute j; empty before `first`
  std::vector<Matrix> basis;
};

struct OracleChain {
  int n = 0;
  int alpha = 0;
  Residue q = 2;
  std::vector<OracleLevel> levels;  // t = n .. 3

  const OracleLevel& at(int t) const { return levels.at(static_cast<std::size_t>(n - t)); }

  std::vector<oracle::Vec> columns(int t, int from, int to) const {
    std::vector<oracle::Vec> cols;
    for (int j = from; j <= to; ++j)
      for (const auto& c : oracle::columns_of(at(t).basis[static_cast<std::size_t>(j)])) cols.push_back(c);
    return cols;
  }
  Index prefix_rank(int t, int from, int to) const {
    if (to < from) return 0;
    return oracle::dim_of(q, oracle::span_set(q, columns(t, from, to), static_cast<std::size_t>(n * alpha)));
  }
  Index block_rank(int t, int i, int j) const {
    oracle::SpanSet projected;
    for (const auto& v : at(t).thick[static_cast<std::size_t>(j)]) {
      projected.insert(oracle::Vec(v.begin() + i * alpha, v.begin() + (i + 1) * alpha));
    }
    return oracle::dim_of(q, projected);
  }
};

OracleChain oracle_chain(const HRepair& hr) {
  OracleChain oc{hr.n, hr.alpha, hr.field.modulus(), {}};
  const int n = hr.n;
  const auto dim = static_cast<std::size_t>(n * hr.alpha);
  OracleLevel top{n, 0, {}, {}};
  for (int j = 0; j < n; ++j) {
    Matrix cols = hr.m.middleCols(Index{j} * hr.alpha, hr.alpha);
    top.thick.push_back(oracle::column_span(oc.q, cols));
    top.basis.push_back(oracle::basis_of(oc.q, top.thick.back(), dim));
  }
  oc.levels.push_back(top);
  for (int t = n - 1; t >= 3; --t) {
    OracleLevel next{t, n - t, std::vector<oracle::SpanSet>(static_cast<std::size_t>(n)),
                     std::vector<Matrix>(static_cast<std::size_t>(n))};
    const OracleLevel& prev = oc.levels.back();
    for (int j = next.first; j < n; ++j) {
      const oracle::SpanSet before = oracle::span_set(oc.q, oc.columns(t + 1, prev.first, j - 1), dim);
      next.thick[static_cast<std::size_t>(j)] = oracle::intersect(prev.thick[static_cast<std::size_t>(j)], before);
      next.basis[static_cast<std::size_t>(j)] =
          oracle::basis_of(oc.q, next.thick[static_cast<std::size_t>(j)], dim);
    }
    oc.levels.push_back(next);
  }
  return oc;
}

HRepair h_of(const SchemedCode& sc) { return extract_h_repair(sc.code, sc.scheme); }

std::vector<SchemedCode> corpus(int n, Residue q) {
  const SchemedCode msr = gen_msr_single_parity(n, q);
  const SchemedCode mbr = gen_mbr_repair_by_transfer(n, q);
  return {msr, mbr, direct_sum(msr, mbr), direct_sum(mbr, mbr), direct_sum(msr, msr)};
}

}  // namespace

TEST_CASE("chain matches the enumeration oracle") {
  std::vector<SchemedCode> cases{gen_msr_single_parity(4, 2), gen_mbr_repair_by_transfer(4, 2),
                                 gen_msr_single_parity(5, 3), gen_mbr_repair_by_transfer(5, 2),
                                 gen_msr_single_parity(6, 2), gen_mbr_repair_by_transfer(4, 3),
                                 direct_sum(gen_msr_single_parity(4, 2), gen_mbr_repair_by_transfer(4, 2))};
  for (const SchemedCode& sc : cases) {
    const HRepair hr = h_of(sc);
    const DualChain chain = build_chain(hr);
    const OracleChain oc = oracle_chain(hr);
    const int n = hr.n;
    CAPTURE(n);
    CAPTURE(hr.alpha);
    REQUIRE(chain.levels().size() == static_cast<std::size_t>(n - 2));
    for (int t = n; t >= 3; --t) {
      CAPTURE(t);
      const ChainLevel& level = chain.level(t);
      const LevelStats& s = chain.stats(t);
      CHECK(level.first == n - t);
      CHECK(s.rank == oc.prefix_rank(t, n - t, n - 1));
      Index delta_total = 0;
      for (int j = n - t; j < n; ++j) {
        CAPTURE(j);
        CHECK(oracle::column_span(oc.q, level.thick(j)) == oc.at(t).thick[static_cast<std::size_t>(j)]);
        CHECK(level.width(j) == rank(hr.field, level.thick(j)));
        CHECK(s.thick_ranks[static_cast<std::size_t>(j)] ==
              oracle::dim_of(oc.q, oc.at(t).thick[static_cast<std::size_t>(j)]));
        CHECK(s.delta[static_cast<std::size_t>(j)] ==
              oc.prefix_rank(t, n - t, j) - oc.prefix_rank(t, n - t, j - 1));
        delta_total += s.delta[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
          CHECK(s.block_ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == oc.block_rank(t, i, j));
        }
      }
      CHECK(delta_total == s.rank);
    }
  }
}

TEST_CASE("single parity n=4 over GF(2)") {
  const DualChain chain = build_chain(h_of(gen_msr_single_parity(4, 2)));
  CHECK(chain.stats(4).rank == 1);
  CHECK(chain.stats(3).rank == 1);
  const ChainLevel& bottom = chain.level(3);
  for (int j = 1; j < 4; ++j) CHECK(Matrix(bottom.thick(j)) == Matrix::Ones(4, 1));

  const LevelStats& top = chain.stats(4);
  CHECK(top.delta == std::vector<int>{1, 0, 0, 0});
  CHECK_FALSE(top.slack[0].has_value());
  for (int j = 1; j < 4; ++j) CHECK(top.slack[static_cast<std::size_t>(j)] == 0);

  const ChainCertificate cert = certify_all(chain);
  CHECK(cert.pass());
  for (int j = 2; j <= 4; ++j) {
    const Check* b = cert.lemma4.find("b", 0, 3, j);
    REQUIRE(b != nullptr);
    CHECK(b->lhs == 1);
    CHECK(b->rhs == 1);
  }
  const Check* bound = cert.theorem6.find("bound", 1, 4);
  REQUIRE(bound != nullptr);
  CHECK(bound->lhs == 1);
  CHECK(bound->rhs == Rational(2, 3));
  CHECK(bound->margin() == Rational(1, 3));
  const Check* start = cert.slack.find("start", 1, 4);
  REQUIRE(start != nullptr);
  CHECK(start->lhs == 0);
  CHECK(start->rhs < 0);
}

TEST_CASE("repair-by-transfer meets the rank bound with equality") {
  for (int n : {4, 5, 6}) {
    CAPTURE(n);
    const DualChain chain = build_chain(h_of(gen_mbr_repair_by_transfer(n, 2)));
    const int expected = n * (n - 1) / 2;  // n alpha - B
    CHECK(chain.stats(n).rank == expected);
    const ChainCertificate cert = certify_all(chain);
    CHECK(cert.pass());
    const Check* bound = cert.theorem6.find("bound", 1, n);
    REQUIRE(bound != nullptr);
    CHECK(bound->lhs == expected);
    CHECK(bound->margin() == 0);
    // Each prefix adds at least (alpha - (j-1) beta)^+.
    const LevelStats& top = chain.stats(n);
    for (int j = 0; j < n; ++j) CHECK(top.delta[static_cast<std::size_t>(j)] >= std::max(0, n - 1 - j));
  }
  const DualChain four = build_chain(h_of(gen_mbr_repair_by_transfer(4, 2)));
  const LevelStats& top = four.stats(4);
  CHECK(top.delta == std::vector<int>{3, 2, 1, 0});
  const Check* start = certify_appendixB_slack(four).find("start", 1, 4);
  REQUIRE(start != nullptr);
  CHECK(start->margin() == 0);
}

TEST_CASE("certification over the corpus") {
  for (Residue q : {2, 3}) {
    for (int n = 4; n <= 6; ++n) {
      for (const SchemedCode& sc : corpus(n, q)) {
        const CodeParams& p = sc.code.params();
        CAPTURE(n);
        CAPTURE(p.alpha);
        const DualChain chain = build_chain(h_of(sc));
        const ChainCertificate cert = certify_all(chain);
        CHECK(cert.lemma4.violations().empty());
        CHECK(cert.theorem6.violations().empty());
        CHECK(cert.cascade.violations().empty());
        CHECK(cert.slack.violations().empty());
        // H_repair spans the whole dual for these instances.
        CHECK(p.n * p.alpha - chain.stats(n).rank == p.B);
        CHECK(chain.stats(n).rank == rank(chain.field(), dual_parity(sc.code).h));
        // Report sizes follow the index ranges.
        CHECK(cert.theorem6.checks.size() == static_cast<std::size_t>((n - 3) * (n - 2) / 2));
        CHECK(cert.cascade.checks.size() == static_cast<std::size_t>(n - 3));
      }
    }
  }
}

TEST_CASE("closed-form slack bounds") {
  // step form with s = 0 reduces to the start form.
  for (int n = 4; n <= 6; ++n) {
    for (const SchemedCode& sc : corpus(n, 2)) {
      const DualChain chain = build_chain(h_of(sc));
      for (int t = n; t >= 4; --t) {
        CHECK(slack_bound_step(chain.stats(t), n, 0) == slack_bound_start(chain.stats(t), n));
      }
    }
  }

  // Hand-built statistics: f = 0, n = 4, diagonal ranks 3, off-diagonal ranks 1.
  LevelStats s;
  s.t = 4;
  s.first = 0;
  s.block_ranks.assign(4, std::vector<int>(4, 1));
  for (int j = 0; j < 4; ++j) s.block_ranks[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 3;
  // P = (-, 2, 1, 0), S = (-, 1, 2, 3)
  // start: (-3 + 3 - 2*2 + (6 - 3 - 2) + (6 - 0 - 3)) / 3 = 0
  CHECK(slack_bound_start(s, 4) == 0);
  // theorem 6, s = 1: (2/6)(2*12 - 6) = 6
  CHECK(theorem6_rhs(s, 4, 1) == 6);
  CHECK(theorem6_rhs(s, 4, 2) == Rational(2 * (3 * 12 - 6), 12));
}

TEST_CASE("build_chain preconditions") {
  CHECK_THROWS_AS(build_chain(h_of(gen_mbr_repair_by_transfer(3, 2))), std::invalid_argument);
  const DualChain chain = build_chain(h_of(gen_msr_single_parity(4, 2)));
  CHECK_THROWS_AS(chain.level(2), std::out_of_range);
  CHECK_THROWS_AS(chain.stats(5), std::out_of_range);
}
