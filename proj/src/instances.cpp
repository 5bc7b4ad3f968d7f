#include "regen/instances.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace regen {

namespace {

void require_instance_params(int n, Residue q) {
  if (n < 3) throw std::invalid_argument("instances need n >= 3");
  if (!is_prime(q)) throw std::invalid_argument("instances need a prime q");
}

Matrix single_entry(Index rows, Index cols, Index r, Index c, Residue value) {
  Matrix m = Matrix::Zero(rows, cols);
  m(r, c) = value;
  return m;
}

}  // namespace

SchemedCode gen_msr_single_parity(int n, Residue q) {
  require_instance_params(n, q);
  const PrimeField field(q);
  const int B = n - 1;
  CodeParams p{n, n - 1, n - 1, 1, 1, q, B};

  Matrix g = Matrix::Zero(B, n);
  g.leftCols(B).setIdentity();
  g.col(n - 1).setOnes();

  const int parity = n - 1;
  RepairScheme scheme(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const Residue sign = (j == parity || i == parity) ? 1 : field.neg(1);
      scheme.set(j, i, {Matrix::Constant(1, 1, 1), Matrix::Constant(1, 1, sign)});
    }
  }
  return {RegenCode(p, std::move(g)), std::move(scheme)};
}

SchemedCode gen_mbr_repair_by_transfer(int n, Residue q) {
  require_instance_params(n, q);
  const int alpha = n - 1;
  const int B = n * (n - 1) / 2;
  CodeParams p{n, n - 1, n - 1, alpha, 1, q, B};

  // edge[{a, b}] = symbol index; slot[{v, e}] = position of edge e in node v.
  std::map<std::pair<int, int>, int> edge;
  std::map<std::pair<int, int>, int> slot;
  std::vector<int> filled(static_cast<std::size_t>(n), 0);
  for (int a = 0, e = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++e) {
      edge[{a, b}] = e;
      slot[{a, e}] = filled[static_cast<std::size_t>(a)]++;
      slot[{b, e}] = filled[static_cast<std::size_t>(b)]++;
    }
  }

  Matrix g = Matrix::Zero(B, Index{n} * alpha);
  for (const auto& [key, position] : slot) {
    const auto [v, e] = key;
    g(e, Index{v} * alpha + position) = 1;
  }

  RepairScheme scheme(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const int e = edge.at({std::min(i, j), std::max(i, j)});
      scheme.set(j, i, {single_entry(1, alpha, 0, slot.at({i, e}), 1),
                        single_entry(alpha, 1, slot.at({j, e}), 0, 1)});
    }
  }
  return {RegenCode(p, std::move(g)), std::move(scheme)};
}

SchemedCode gen_space_share(const SchemedCode& a, const SchemedCode& b) {
  return direct_sum(a, b);
}

SchemedCode build(const InstanceRecipe& recipe) {
  switch (recipe.kind) {
    case InstanceKind::msr_single_parity:
      return gen_msr_single_parity(recipe.n, recipe.q);
    case InstanceKind::mbr_repair_by_transfer:
      return gen_mbr_repair_by_transfer(recipe.n, recipe.q);
    case InstanceKind::direct_sum:
      if (recipe.operands.size() != 2) {
        throw std::invalid_argument("direct sum recipe needs exactly two operands");
      }
      for (const auto& op : recipe.operands) {
        if (op.n != recipe.n || op.q != recipe.q) {
          throw std::invalid_argument("direct sum operands must share n and q");
        }
      }
      return gen_space_share(build(recipe.operands[0]), build(recipe.operands[1]));
  }
  throw std::invalid_argument("unknown instance kind");
}

InstanceRecipe parse_recipe(const std::vector<std::string>& words, int n, Residue q) {
  auto leaf = [&](const std::string& word) {
    if (word == "msr") return InstanceRecipe{InstanceKind::msr_single_parity, n, q, {}};
    if (word == "mbr") return InstanceRecipe{InstanceKind::mbr_repair_by_transfer, n, q, {}};
    throw std::invalid_argument("unknown instance kind '" + word + "' (expected msr, mbr or sum)");
  };
  if (words.empty()) throw std::invalid_argument("missing instance kind");
  if (words.front() == "sum") {
    if (words.size() != 3) throw std::invalid_argument("usage: sum <msr|mbr> <msr|mbr>");
    return {InstanceKind::direct_sum, n, q, {leaf(words[1]), leaf(words[2])}};
  }
  if (words.size() != 1) throw std::invalid_argument("unexpected operands after '" + words.front() + "'");
  return leaf(words.front());
}

std::string describe(const InstanceRecipe& recipe) {
  switch (recipe.kind) {
    case InstanceKind::msr_single_parity: return "msr(" + std::to_string(recipe.n) + ")";
    case InstanceKind::mbr_repair_by_transfer: return "mbr(" + std::to_string(recipe.n) + ")";
    case InstanceKind::direct_sum:
      return describe(recipe.operands.at(0)) + "+" + describe(recipe.operands.at(1));
  }
  return "?";
}

}  // namespace regen
