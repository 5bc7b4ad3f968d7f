#pragma once

// Exact-repair linear regenerating codes with k = d = n - 1.
//
// Orientation: a message is a row vector m of length B, the codeword is
// c = m G, and node j stores the alpha entries of thick column j of G
// (columns j*alpha .. (j+1)*alpha - 1, 0-based). Repair maps act on node
// contents as column vectors: helper i sends D[i->j] x_i, the replacement
// node rebuilds x_j = sum_i C[i->j] D[i->j] x_i.
//
// Node indices are 0-based in this API; the JSON format and reports shift
// them to 1-based.

#include "regen/gf_linalg.hpp"

#include <optional>
#include <vector>

namespace regen {

struct CodeParams {
  int n = 0;
  int k = 0;
  int d = 0;
  int alpha = 0;
  int beta = 0;
  Residue q = 2;
  int B = 0;

  /// Throws std::invalid_argument unless k = d = n-1, n >= 3,
  /// 1 <= beta <= alpha <= (n-1) beta and B <= n alpha, or the parameters
  /// describe the empty code (alpha = beta = B = 0).
  void validate() const;
  bool is_zero_code() const noexcept { return alpha == 0 && beta == 0 && B == 0; }
  int length() const noexcept { return n * alpha; }

  bool operator==(const CodeParams&) const = default;
};

class RegenCode {
 public:
  RegenCode(CodeParams params, Matrix generator);

  const CodeParams& params() const noexcept { return params_; }
  PrimeField field() const { return PrimeField(params_.q); }
  const Matrix& generator() const noexcept { return generator_; }

  /// Thick column j of the generator (B x alpha).
  auto node(int j) const { return generator_.middleCols(Index{j} * params_.alpha, params_.alpha); }

  /// Generator restricted to the thick columns in `nodes`, in that order.
  Matrix restrict_to(const std::vector<int>& nodes) const;

 private:
  CodeParams params_;
  Matrix generator_;
};

struct RepairMaps {
  Matrix download;  ///< D[i->j], beta x alpha
  Matrix combine;   ///< C[i->j], alpha x beta
};

/// Download/combine maps for every ordered (failed, helper) pair.
class RepairScheme {
 public:
  explicit RepairScheme(int n = 0);

  int n() const noexcept { return n_; }
  void set(int failed, int helper, RepairMaps maps);
  bool has(int failed, int helper) const;
  const RepairMaps& at(int failed, int helper) const;

 private:
  std::size_t slot(int failed, int helper) const;

  int n_;
  std::vector<std::optional<RepairMaps>> maps_;
};

/// A code bundled with a repair scheme certifying exact repair.
struct SchemedCode {
  RegenCode code;
  RepairScheme scheme;
};

struct DataCollectionReport {
  bool pass = true;
  Index generator_rank = 0;
  std::vector<std::vector<int>> failing_subsets;  ///< sorted, lexicographic
};

struct ExactRepairReport {
  bool pass = true;
  std::vector<int> failing_nodes;
};

struct DualMatrix {
  Matrix h;  ///< (n alpha - B) x n alpha, G h^T = 0
};

/// H_repair: n alpha x n alpha, identity diagonal blocks, row block j comes
/// from the repair of node j.
struct HRepair {
  PrimeField field;
  int n = 0;
  int alpha = 0;
  int beta = 0;
  Matrix m;

  auto block(int i, int j) const {
    return m.block(Index{i} * alpha, Index{j} * alpha, alpha, alpha);
  }
};

/// Every k-subset of nodes must give rank(G|_S) = B.
DataCollectionReport check_data_collection(const RegenCode& code);

/// Checks sum_{i != j} G_i D[i->j]^T C[i->j]^T = G_j for every node j.
/// Throws std::invalid_argument when the scheme's shapes do not match.
ExactRepairReport check_exact_repair(const RegenCode& code, const RepairScheme& scheme);

/// Parity-check matrix spanning the right kernel of G.
DualMatrix dual_parity(const RegenCode& code);

/// A[j][j] = I, A[j][i] = -C[i->j] D[i->j]. Throws std::domain_error if the
/// scheme does not certify exact repair.
HRepair extract_h_repair(const RegenCode& code, const RepairScheme& scheme);

/// Space sharing: per-node concatenation of two codes with the same (n, q).
SchemedCode direct_sum(const SchemedCode& a, const SchemedCode& b);

/// The empty code (alpha = beta = B = 0); identity element of direct_sum.
SchemedCode zero_code(int n, Residue q);

}  // namespace regen
