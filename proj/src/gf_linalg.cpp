#include "regen/gf_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace regen {

bool is_prime(Residue q) noexcept {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (Residue d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Residue q) : q_(q) {
  if (q > kMaxModulus || !is_prime(q)) {
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                std::to_string(q));
  }
}

Residue PrimeField::inv(Residue a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("inverse of zero in GF(q)");
  // Extended Euclid on (a, q).
  Residue r0 = q_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Residue quot = r0 / r1;
    r0 = std::exchange(r1, r0 - quot * r1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  return reduce(t0);
}

Matrix reduced(const PrimeField& field, Matrix m) {
  m = m.unaryExpr([&](Residue x) { return field.reduce(x); });
  return m;
}

bool is_reduced(const PrimeField& field, const Matrix& m) noexcept {
  return (m.array() >= 0).all() && (m.array() < field.modulus()).all();
}

bool is_zero(const Matrix& m) noexcept { return (m.array() == 0).all(); }

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Matrix negate(const PrimeField& field, const Matrix& m) {
  return m.unaryExpr([&](Residue x) { return field.neg(x); });
}

Echelon row_reduce(const PrimeField& field, Matrix m) {
  m = reduced(field, std::move(m));
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));

    const Residue scale = field.inv(m(row, col));
    for (Index j = col; j < m.cols(); ++j) m(row, j) = field.mul(m(row, j), scale);

    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Residue factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) {
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

Subspace Subspace::span(const PrimeField& field, const Matrix& spanning) {
  const Echelon e = row_reduce(field, spanning.transpose());
  Matrix basis = e.rref.topRows(e.rank()).transpose();
  return Subspace(field, std::move(basis));
}

Subspace Subspace::zero(const PrimeField& field, Index ambient_dim) {
  return Subspace(field, Matrix(ambient_dim, 0));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) {
    throw std::invalid_argument("vector length does not match ambient dimension");
  }
  Matrix stacked(ambient_dim(), dim() + 1);
  stacked << basis_, v;
  return rank(field_, stacked) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim() || !(other.field_ == field_)) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
  return subspace_sum(*this, other).dim() == dim();
}

Subspace kernel(const PrimeField& field, const Matrix& m) {
  const Echelon e = row_reduce(field, m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Matrix spanning(m.cols(), m.cols() - e.rank());
  Index out = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector x = Vector::Zero(m.cols());
    x(free) = 1;
    for (Index r = 0; r < e.rank(); ++r) {
      x(e.pivots[static_cast<std::size_t>(r)]) = field.neg(e.rref(r, free));
    }
    spanning.col(out++) = x;
  }
  return Subspace::span(field, spanning);
}

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw std::invalid_argument("subspace ambient dimension mismatch (" +
                                std::to_string(u.ambient_dim()) + " vs " +
                                std::to_string(v.ambient_dim()) + ")");
  }
  if (!(u.field() == v.field())) {
    throw std::invalid_argument("subspaces over different fields");
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  Matrix both(u.ambient_dim(), u.dim() + v.dim());
  both << u.basis(), v.basis();
  return Subspace::span(u.field(), both);
}

Zassenhaus zassenhaus(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  const Index n = u.ambient_dim();
  // Rows [u_i | u_i] and [v_j | 0]; after elimination, rows with a non-zero
  // left half span u + v and rows with a zero left half span u ∩ v.
  Matrix stacked = Matrix::Zero(u.dim() + v.dim(), 2 * n);
  stacked.topLeftCorner(u.dim(), n) = u.basis().transpose();
  stacked.topRightCorner(u.dim(), n) = u.basis().transpose();
  stacked.bottomLeftCorner(v.dim(), n) = v.basis().transpose();

  const Echelon e = row_reduce(u.field(), std::move(stacked));
  const auto left_rank = static_cast<Index>(
      std::count_if(e.pivots.begin(), e.pivots.end(), [n](Index p) { return p < n; }));

  Matrix sum_rows = e.rref.topLeftCorner(left_rank, n);
  Matrix meet_rows = e.rref.block(left_rank, n, e.rank() - left_rank, n);
  return {Subspace::span(u.field(), sum_rows.transpose()),
          Subspace::span(u.field(), meet_rows.transpose())};
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  return zassenhaus(u, v).intersection;
}

Residue leibniz_determinant(const PrimeField& field, const Matrix& square) {
  if (square.rows() != square.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  const auto k = static_cast<std::size_t>(square.rows());
  std::vector<Index> perm(k);
  std::iota(perm.begin(), perm.end(), Index{0});
  Residue det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    }
    Residue term = 1;
    for (std::size_t r = 0; r < k && term != 0; ++r) {
      term = field.mul(term, field.reduce(square(static_cast<Index>(r), perm[r])));
    }
    det = inversions % 2 == 0 ? field.add(det, term) : field.sub(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

// Calls visit(subset) for every size-k subset of {0..n-1} until it returns true.
template <typename Visit>
bool any_subset(Index n, Index k, Visit&& visit) {
  std::vector<Index> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), Index{0});
  while (true) {
    if (visit(idx)) return true;
    Index pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<std::size_t>(pos)];
    for (Index p = pos + 1; p < k; ++p) {
      idx[static_cast<std::size_t>(p)] = idx[static_cast<std::size_t>(p - 1)] + 1;
    }
  }
}

}  // namespace

Index brute_rank_oracle(const PrimeField& field, const Matrix& m) {
  if (m.rows() > 8 || m.cols() > 8) {
    throw std::length_error("brute_rank_oracle is limited to 8x8 matrices");
  }
  for (Index k = std::min(m.rows(), m.cols()); k > 0; --k) {
    Matrix minor(k, k);
    const bool found = any_subset(m.rows(), k, [&](const std::vector<Index>& rows) {
      return any_subset(m.cols(), k, [&](const std::vector<Index>& cols) {
        for (Index r = 0; r < k; ++r) {
          for (Index c = 0; c < k; ++c) {
            minor(r, c) = m(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
          }
        }
        return leibniz_determinant(field, minor) != 0;
      });
    });
    if (found) return k;
  }
  return 0;
}

}  // namespace regen
