#pragma once

// Exact linear algebra over prime fields GF(q).
//
// Matrices are plain Eigen integer matrices whose entries are residues in
// [0, q). The field travels alongside as a PrimeField; every routine takes
// it explicitly. Routines accept arbitrary Eigen expressions (blocks,
// transposes, concatenations), so thick-column restrictions can be passed
// directly as `m.middleCols(j * alpha, alpha)`.

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace regen {

using Residue = std::int64_t;
using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Residue, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Residue, Eigen::Dynamic, 1>;

/// Arithmetic modulo a prime q. Primality is checked on construction.
class PrimeField {
 public:
  /// Largest accepted modulus; keeps products of two residues inside int64.
  static constexpr Residue kMaxModulus = (Residue{1} << 31) - 1;

  explicit PrimeField(Residue q = 2);

  Residue modulus() const noexcept { return q_; }

  Residue reduce(Residue x) const noexcept {
    Residue r = x % q_;
    return r < 0 ? r + q_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
  Residue neg(Residue a) const noexcept { return reduce(-a); }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }
  /// Multiplicative inverse; a must be non-zero mod q.
  Residue inv(Residue a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  Residue q_;
};

bool is_prime(Residue q) noexcept;

namespace detail {

template <typename Derived>
Matrix to_residues(const Eigen::MatrixBase<Derived>& m) {
  static_assert(std::is_integral_v<typename Derived::Scalar>,
                "field matrices hold integer residues");
  return m.template cast<Residue>();
}

}  // namespace detail

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<Index> pivots;
  Index rank() const noexcept { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. Pivot for each column is the first row (at or
/// below the current row) holding a non-zero entry.
Echelon row_reduce(const PrimeField& field, Matrix m);

/// Entries reduced into [0, q).
Matrix reduced(const PrimeField& field, Matrix m);
bool is_reduced(const PrimeField& field, const Matrix& m) noexcept;

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b);
Matrix negate(const PrimeField& field, const Matrix& m);
bool is_zero(const Matrix& m) noexcept;

template <typename Derived>
Index rank(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(field, detail::to_residues(m)).rank();
}

/// A linear subspace of GF(q)^ambient_dim.
///
/// The basis is stored in canonical form: its columns are the non-zero rows
/// of the reduced row echelon form of the spanning set. Two Subspace values
/// are equal exactly when they describe the same subspace.
class Subspace {
 public:
  /// Span of the columns of `spanning` (any column count, any rank).
  static Subspace span(const PrimeField& field, const Matrix& spanning);
  static Subspace zero(const PrimeField& field, Index ambient_dim);

  const PrimeField& field() const noexcept { return field_; }
  Index ambient_dim() const noexcept { return basis_.rows(); }
  Index dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(PrimeField field, Matrix basis)
      : field_(field), basis_(std::move(basis)) {}

  PrimeField field_;
  Matrix basis_;
};

template <typename Derived>
Subspace column_space(const PrimeField& field,
                      const Eigen::MatrixBase<Derived>& m) {
  return Subspace::span(field, detail::to_residues(m));
}

/// Right null space {x : m x = 0}.
Subspace kernel(const PrimeField& field, const Matrix& m);

template <typename Derived>
Subspace kernel(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  return kernel(field, detail::to_residues(m));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Intersection via the Zassenhaus stacked-matrix method.
Subspace subspace_intersection(const Subspace& u, const Subspace& v);

/// Sum and intersection from a single Zassenhaus elimination.
struct Zassenhaus {
  Subspace sum;
  Subspace intersection;
};
Zassenhaus zassenhaus(const Subspace& u, const Subspace& v);

/// Determinant by the Leibniz expansion (no elimination involved).
Residue leibniz_determinant(const PrimeField& field, const Matrix& square);

/// Rank as the order of the largest non-vanishing square minor, found by
/// enumerating every square submatrix. Limited to 8x8 inputs.
Index brute_rank_oracle(const PrimeField& field, const Matrix& m);

}  // namespace regen
