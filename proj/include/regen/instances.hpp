#pragma once

// Concrete exact-repair codes with repair schemes, used as the test corpus.

#include "regen/code_model.hpp"

#include <string>
#include <vector>

namespace regen {

/// (n, n-1) single-parity MDS code, alpha = beta = 1, B = n - 1 (MSR point).
/// Generator [I | 1]; a systematic node is repaired as parity minus the
/// other systematic symbols, the parity node as the sum of all others.
SchemedCode gen_msr_single_parity(int n, Residue q);

/// Repair-by-transfer MBR code: one independent symbol per edge of K_n,
/// each node stores the n-1 symbols of its incident edges.
/// alpha = n - 1, beta = 1, B = n(n-1)/2. Edges are numbered in
/// lexicographic (a, b), a < b order; within a node, slots follow edge order.
SchemedCode gen_mbr_repair_by_transfer(int n, Residue q);

SchemedCode gen_space_share(const SchemedCode& a, const SchemedCode& b);

enum class InstanceKind { msr_single_parity, mbr_repair_by_transfer, direct_sum };

struct InstanceRecipe {
  InstanceKind kind = InstanceKind::msr_single_parity;
  int n = 0;
  Residue q = 2;
  std::vector<InstanceRecipe> operands;  ///< two entries for direct_sum
};

SchemedCode build(const InstanceRecipe& recipe);

/// Parses "msr", "mbr" or "sum" followed by two operand kinds
/// (e.g. {"sum", "msr", "mbr"}). Throws std::invalid_argument.
InstanceRecipe parse_recipe(const std::vector<std::string>& words, int n, Residue q);

std::string describe(const InstanceRecipe& recipe);

}  // namespace regen
