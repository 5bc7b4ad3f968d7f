// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "regen/bounds.hpp"
#include "regen/cli.hpp"
#include "regen/dual_chain.hpp"
#include "regen/instances.hpp"
#include "regen/io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace regen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  }
  failures += o.pass ? 0 : 1;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << secs << " s)";
  if (!o.pass) std::cout << "  " << o.detail;
  std::cout << "\n";
}

Outcome deflection_points() {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  o.require(run_cli({"bounds", "--n", "5"}, out, err) == 0, "bounds --n 5 exited nonzero");
  std::istringstream in(out.str());
  const auto rows = parse_curves_csv(in);  // rejects unreduced fractions
  const std::vector<NormalizedPoint> expected{{Rational(1, 4), Rational(1, 4)},
                                              {Rational(4, 15), Rational(1, 5)},
                                              {Rational(3, 10), Rational(3, 20)},
                                              {Rational(2, 5), Rational(1, 10)}};
  for (const std::string label : {"theorem1_outer", "achievable"}) {
    std::vector<NormalizedPoint> got;
    for (const CurveRow& r : rows)
      if (r.label == label) got.push_back(r.point);
    o.require(got == expected, label + " points differ");
  }
  for (const std::string line : {"theorem1_outer,1,4,1,4", "theorem1_outer,4,15,1,5",
                                 "theorem1_outer,3,10,3,20", "theorem1_outer,2,5,1,10"}) {
    o.require(out.str().find(line + "\n") != std::string::npos, "missing row " + line);
  }
  return o;
}

Outcome duality_identity() {
  Outcome o;
  for (int n = 4; n <= 8; ++n)
    for (std::int64_t b = 1; b <= 12; ++b)
      for (std::int64_t a = b; a <= (n - 1) * b; ++a) {
        o.require(n * a - theorem5_rank_bound(n, a, b) == theorem1_bound(n, a, b),
                  "mismatch at n=" + std::to_string(n) + " alpha=" + std::to_string(a) +
                      " beta=" + std::to_string(b));
      }
  return o;
}

Outcome endpoint_tightness() {
  Outcome o;
  const std::int64_t expected_mbr[] = {6, 10, 15};
  for (int n = 4; n <= 6; ++n) {
    for (Residue q : {2, 3}) {
      const SchemedCode mbr = gen_mbr_repair_by_transfer(n, q);
      const Index mbr_rank = rank(mbr.code.field(), dual_parity(mbr.code).h);
      const Index chain_top = build_chain(extract_h_repair(mbr.code, mbr.scheme)).stats(n).rank;
      const std::int64_t bound = theorem5_rank_bound(n, n - 1, 1);
      o.require(mbr_rank == bound && chain_top == bound && bound == expected_mbr[n - 4],
                "MBR n=" + std::to_string(n) + " rank " + std::to_string(mbr_rank) + " vs bound " +
                    std::to_string(bound));

      const SchemedCode msr = gen_msr_single_parity(n, q);
      const Index msr_rank = rank(msr.code.field(), dual_parity(msr.code).h);
      o.require(msr_rank == 1 && theorem5_rank_bound(n, 1, 1) == 1,
                "MSR n=" + std::to_string(n) + " rank " + std::to_string(msr_rank));
    }
  }
  o.require(rank_bound_433(3, 1) == 6, "(4,3,3) rank bound at MBR");
  return o;
}

Outcome chain_certification() {
  Outcome o;
  int instances = 0;
  for (Residue q : {2, 3}) {
    for (int n = 4; n <= 6; ++n) {
      const SchemedCode msr = gen_msr_single_parity(n, q);
      const SchemedCode mbr = gen_mbr_repair_by_transfer(n, q);
      const std::vector<std::pair<std::string, SchemedCode>> corpus{
          {"msr", msr}, {"mbr", mbr}, {"msr+mbr", direct_sum(msr, mbr)},
          {"mbr+mbr", direct_sum(mbr, mbr)}, {"msr+msr", direct_sum(msr, msr)}};
      for (const auto& [name, sc] : corpus) {
        const std::string tag = name + " n=" + std::to_string(n) + " q=" + std::to_string(q);
        const DualChain chain = build_chain(extract_h_repair(sc.code, sc.scheme));
        const ChainCertificate cert = certify_all(chain);
        o.require(cert.lemma4.violations().empty(), tag + ": lemma4 violated");
        o.require(cert.cascade.violations().empty(), tag + ": cascade violated");
        o.require(cert.theorem6.violations().empty(), tag + ": theorem6 violated");
        o.require(cert.slack.violations().empty(), tag + ": slack bound violated");
        if (name == "mbr") {
          const Check* c = cert.theorem6.find("bound", 1, n);
          o.require(c != nullptr && c->margin() == 0, tag + ": margin at (s=1, t=n) is not 0");
        }
        ++instances;
      }
    }
  }
  o.require(instances == 30, "corpus incomplete");
  return o;
}

Outcome comparison_dominance() {
  Outcome o;
  for (std::int64_t b = 1; b <= 12; ++b)
    for (std::int64_t a = b; a <= 4 * b; ++a) {
      const std::int64_t ours = theorem1_bound(5, a, b);
      o.require(ours <= sassenkum_544(a, b) && ours <= duursma_544(a, b),
                "not dominated at alpha=" + std::to_string(a) + " beta=" + std::to_string(b));
    }
  o.require(theorem1_bound(5, 7, 3) == 21 && sassenkum_544(7, 3) == 22 && duursma_544(7, 3) == 22,
            "values at (7,3) are not 21 / 22 / 22");
  return o;
}

Outcome region() {
  Outcome o;
  for (int n = 5; n <= 7; ++n) {
    const RegionMatchReport r = region_match(n);
    o.require(r.pass && r.off_curve.empty(), "region_match fails for n=" + std::to_string(n));
    for (const SegmentCheck& s : r.segments) {
      for (const NormalizedPoint& p : {s.from, s.to}) {
        const Rational lhs = s.r == n - 1
                                 ? Rational((n - 2) * p.alpha_over_B + p.beta_over_B)
                                 : Rational(s.r * (s.r - 1) * n * p.alpha_over_B + n * (n - 1) * p.beta_over_B);
        const Rational rhs = s.r == n - 1 ? Rational(1) : Rational(s.r * s.r + s.r);
        o.require(lhs == rhs, "segment identity fails for n=" + std::to_string(n) + " r=" + std::to_string(s.r));
      }
    }
  }
  return o;
}

Outcome fr_identity() {
  Outcome o;
  for (int n = 4; n <= 8; ++n)
    for (std::int64_t b = 1; b <= 12; ++b)
      for (std::int64_t a = b; a <= (n - 1) * b; ++a) {
        o.require(fr_dual_identity_check(n, n - 1, n - 1, a, b).pass,
                  "fails at n=" + std::to_string(n) + " alpha=" + std::to_string(a) + " beta=" + std::to_string(b));
      }
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::mt19937_64 rng(0x5eed);
  int matrices = 0;
  for (Residue q : {2, 3, 5}) {
    const PrimeField f(q);
    const int count = q == 5 ? 168 : 166;  // 500 in total
    for (int it = 0; it < count; ++it, ++matrices) {
      std::uniform_int_distribution<Index> dim(1, 6);
      const Index rows = dim(rng);
      const Index cols = dim(rng);
      const Matrix m = oracle::random_matrix(rng, rows, cols, q);
      const Index r = rank(f, m);
      o.require(r == brute_rank_oracle(f, m), "rank differs from the minor oracle");
      o.require(r + kernel(f, m).dim() == cols, "rank-nullity fails");

      const Subspace s = Subspace::span(f, m);
      o.require(Subspace::span(f, s.basis()) == s, "canonical form is not idempotent");

      const Subspace u = Subspace::span(f, oracle::random_matrix(rng, rows, dim(rng), q));
      const Subspace v = Subspace::span(f, oracle::random_matrix(rng, rows, dim(rng), q));
      const Zassenhaus z = zassenhaus(u, v);
      o.require(z.sum.dim() + z.intersection.dim() == u.dim() + v.dim(), "Zassenhaus dimension formula fails");
    }
  }
  o.require(matrices == 500, "wrong sample count");
  return o;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);
  criterion(1, "deflection points of bounds --n 5", 1.0, deflection_points);
  criterion(2, "n alpha - rank bound = file-size bound on the grid", 5.0, duality_identity);
  criterion(3, "dual rank meets the rank bound at MBR and MSR", 5.0, endpoint_tightness);
  criterion(4, "chain certification over the corpus", 30.0, chain_certification);
  criterion(5, "dominance over the (5,4,4) comparison bounds", 2.0, comparison_dominance);
  criterion(6, "achievable region matches the outer bound", 1.0, region);
  criterion(7, "cut-set bound equals its dual form", 0.0, fr_identity);
  criterion(8, "linear algebra property suite", 10.0, property_suite);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
