#include "regen/code_model.hpp"

#include <numeric>
#include <string>

namespace regen {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

void CodeParams::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("code parameters: " + what); };
  if (n < 3) fail("n must be at least 3");
  if (k != n - 1 || d != n - 1) fail("only k = d = n - 1 is supported");
  if (!is_prime(q) || q > PrimeField::kMaxModulus) fail("q must be a prime below 2^31");
  if (is_zero_code()) return;
  if (beta < 1) fail("beta must be at least 1");
  if (alpha < beta) fail("alpha must be at least beta");
  if (alpha > (n - 1) * beta) fail("alpha must not exceed (n - 1) beta");
  if (B < 0 || B > n * alpha) fail("B must lie in [0, n alpha]");
}

RegenCode::RegenCode(CodeParams params, Matrix generator)
    : params_(params), generator_(std::move(generator)) {
  params_.validate();
  if (generator_.rows() != params_.B || generator_.cols() != params_.length()) {
    throw std::invalid_argument("generator is " + shape(generator_) + ", expected " +
                                std::to_string(params_.B) + "x" +
                                std::to_string(params_.length()));
  }
  if (!is_reduced(field(), generator_)) {
    throw std::invalid_argument("generator entries must be residues in [0, q)");
  }
}

Matrix RegenCode::restrict_to(const std::vector<int>& nodes) const {
  Matrix out(generator_.rows(), Index{params_.alpha} * static_cast<Index>(nodes.size()));
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    out.middleCols(static_cast<Index>(s) * params_.alpha, params_.alpha) = node(nodes[s]);
  }
  return out;
}

RepairScheme::RepairScheme(int n) : n_(n), maps_(static_cast<std::size_t>(n) * n) {}

std::size_t RepairScheme::slot(int failed, int helper) const {
  if (failed < 0 || failed >= n_ || helper < 0 || helper >= n_ || failed == helper) {
    throw std::out_of_range("repair scheme index (" + std::to_string(failed) + ", " +
                            std::to_string(helper) + ") out of range");
  }
  return static_cast<std::size_t>(failed) * n_ + helper;
}

void RepairScheme::set(int failed, int helper, RepairMaps maps) {
  maps_[slot(failed, helper)] = std::move(maps);
}

bool RepairScheme::has(int failed, int helper) const {
  return maps_[slot(failed, helper)].has_value();
}

const RepairMaps& RepairScheme::at(int failed, int helper) const {
  const auto& entry = maps_[slot(failed, helper)];
  if (!entry) {
    throw std::invalid_argument("repair scheme has no maps for node " + std::to_string(failed + 1) +
                                " from helper " + std::to_string(helper + 1));
  }
  return *entry;
}

DataCollectionReport check_data_collection(const RegenCode& code) {
  const CodeParams& p = code.params();
  const PrimeField field = code.field();
  DataCollectionReport report;
  report.generator_rank = rank(field, code.generator());

  // k = n - 1: each k-subset is "all nodes but one". Enumerate them in
  // lexicographic order, i.e. by decreasing excluded node.
  for (int excluded = p.n - 1; excluded >= 0; --excluded) {
    std::vector<int> subset;
    for (int j = 0; j < p.n; ++j) {
      if (j != excluded) subset.push_back(j);
    }
    if (rank(field, code.restrict_to(subset)) != p.B) {
      report.pass = false;
      report.failing_subsets.push_back(std::move(subset));
    }
  }
  return report;
}

namespace {

void check_scheme_shapes(const CodeParams& p, const RepairScheme& scheme) {
  if (scheme.n() != p.n) {
    throw std::invalid_argument("repair scheme covers " + std::to_string(scheme.n()) +
                                " nodes, code has " + std::to_string(p.n));
  }
  for (int j = 0; j < p.n; ++j) {
    for (int i = 0; i < p.n; ++i) {
      if (i == j) continue;
      const RepairMaps& maps = scheme.at(j, i);
      const auto where = "repair of node " + std::to_string(j + 1) + " from node " +
                         std::to_string(i + 1);
      if (maps.download.rows() != p.beta || maps.download.cols() != p.alpha) {
        throw std::invalid_argument(where + ": D is " + shape(maps.download) + ", expected " +
                                    std::to_string(p.beta) + "x" + std::to_string(p.alpha));
      }
      if (maps.combine.rows() != p.alpha || maps.combine.cols() != p.beta) {
        throw std::invalid_argument(where + ": C is " + shape(maps.combine) + ", expected " +
                                    std::to_string(p.alpha) + "x" + std::to_string(p.beta));
      }
    }
  }
}

}  // namespace

ExactRepairReport check_exact_repair(const RegenCode& code, const RepairScheme& scheme) {
  const CodeParams& p = code.params();
  check_scheme_shapes(p, scheme);
  const PrimeField field = code.field();

  ExactRepairReport report;
  for (int j = 0; j < p.n; ++j) {
    Matrix rebuilt = Matrix::Zero(p.B, p.alpha);
    for (int i = 0; i < p.n; ++i) {
      if (i == j) continue;
      const RepairMaps& maps = scheme.at(j, i);
      const Matrix transfer = multiply(field, maps.combine, maps.download);  // alpha x alpha
      rebuilt = reduced(field, rebuilt + multiply(field, code.node(i), transfer.transpose()));
    }
    if (rebuilt != code.node(j)) {
      report.pass = false;
      report.failing_nodes.push_back(j);
    }
  }
  return report;
}

DualMatrix dual_parity(const RegenCode& code) {
  const PrimeField field = code.field();
  if (rank(field, code.generator()) != code.params().B) {
    throw std::invalid_argument("generator is rank deficient; B != rank(G)");
  }
  return {kernel(field, code.generator()).basis().transpose()};
}

HRepair extract_h_repair(const RegenCode& code, const RepairScheme& scheme) {
  if (!check_exact_repair(code, scheme).pass) {
    throw std::domain_error("repair scheme does not certify exact repair");
  }
  const CodeParams& p = code.params();
  const PrimeField field = code.field();
  HRepair hr{field, p.n, p.alpha, p.beta, Matrix::Zero(p.length(), p.length())};
  for (int j = 0; j < p.n; ++j) {
    for (int i = 0; i < p.n; ++i) {
      if (i == j) {
        hr.m.block(Index{j} * p.alpha, Index{i} * p.alpha, p.alpha, p.alpha).setIdentity();
        continue;
      }
      const RepairMaps& maps = scheme.at(j, i);
      hr.m.block(Index{j} * p.alpha, Index{i} * p.alpha, p.alpha, p.alpha) =
          negate(field, multiply(field, maps.combine, maps.download));
    }
  }
  // Every row of H_repair is a dual codeword.
  if (!is_zero(multiply(field, code.generator(), hr.m.transpose()))) {
    throw std::logic_error("extracted H_repair rows are not orthogonal to the generator");
  }
  return hr;
}

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace

SchemedCode direct_sum(const SchemedCode& a, const SchemedCode& b) {
  const CodeParams& pa = a.code.params();
  const CodeParams& pb = b.code.params();
  if (pa.n != pb.n || pa.k != pb.k || pa.d != pb.d || pa.q != pb.q) {
    throw std::invalid_argument("direct_sum needs matching (n, k, d, q)");
  }
  CodeParams p = pa;
  p.alpha = pa.alpha + pb.alpha;
  p.beta = pa.beta + pb.beta;
  p.B = pa.B + pb.B;

  Matrix g = Matrix::Zero(p.B, p.length());
  for (int j = 0; j < p.n; ++j) {
    g.block(0, Index{j} * p.alpha, pa.B, pa.alpha) = a.code.node(j);
    g.block(pa.B, Index{j} * p.alpha + pa.alpha, pb.B, pb.alpha) = b.code.node(j);
  }

  RepairScheme scheme(p.n);
  for (int j = 0; j < p.n; ++j) {
    for (int i = 0; i < p.n; ++i) {
      if (i == j) continue;
      const RepairMaps& ma = a.scheme.at(j, i);
      const RepairMaps& mb = b.scheme.at(j, i);
      scheme.set(j, i, {block_diagonal(ma.download, mb.download),
                        block_diagonal(ma.combine, mb.combine)});
    }
  }
  return {RegenCode(p, std::move(g)), std::move(scheme)};
}

SchemedCode zero_code(int n, Residue q) {
  CodeParams p{n, n - 1, n - 1, 0, 0, q, 0};
  RepairScheme scheme(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i != j) scheme.set(j, i, {Matrix(0, 0), Matrix(0, 0)});
    }
  }
  return {RegenCode(p, Matrix(0, 0)), std::move(scheme)};
}

}  // namespace regen
