#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the elimination code under test: spans are enumerated explicitly.

#include "regen/gf_linalg.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using regen::Index;
using regen::Matrix;
using regen::Residue;

using Vec = std::vector<Residue>;
using SpanSet = std::set<Vec>;

inline Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, Residue q) {
  std::uniform_int_distribution<Residue> dist(0, q - 1);
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

/// Random matrix of bounded rank: product of two random factors.
inline Matrix random_low_rank(std::mt19937_64& rng, Index rows, Index cols, Index inner, Residue q) {
  Matrix a = random_matrix(rng, rows, inner, q);
  Matrix b = random_matrix(rng, inner, cols, q);
  Matrix out = Matrix::Zero(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      for (Index k = 0; k < inner; ++k) out(r, c) = (out(r, c) + a(r, k) * b(k, c)) % q;
  return out;
}

inline Matrix mul(Residue q, const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < b.cols(); ++c) {
      Residue acc = 0;
      for (Index k = 0; k < a.cols(); ++k) acc = (acc + a(r, k) * b(k, c)) % q;
      out(r, c) = acc;
    }
  return out;
}

inline std::vector<Vec> columns_of(const Matrix& m) {
  std::vector<Vec> cols;
  for (Index c = 0; c < m.cols(); ++c) {
    Vec v(static_cast<std::size_t>(m.rows()));
    for (Index r = 0; r < m.rows(); ++r) v[static_cast<std::size_t>(r)] = m(r, c);
    cols.push_back(v);
  }
  return cols;
}

/// Every linear combination of `gens`, all of length `dim`.
inline SpanSet span_set(Residue q, const std::vector<Vec>& gens, std::size_t dim) {
  SpanSet out{Vec(dim, 0)};
  for (const Vec& g : gens) {
    SpanSet next;
    for (const Vec& v : out) {
      Vec w = v;
      for (Residue c = 0; c < q; ++c) {
        next.insert(w);
        for (std::size_t i = 0; i < dim; ++i) w[i] = (w[i] + g[i]) % q;
      }
    }
    out.swap(next);
  }
  return out;
}

inline SpanSet column_span(Residue q, const Matrix& m) {
  return span_set(q, columns_of(m), static_cast<std::size_t>(m.rows()));
}

/// log_q |set|; the set is a subspace so its size is a power of q.
inline Index dim_of(Residue q, const SpanSet& s) {
  Index d = 0;
  for (std::size_t size = s.size(); size > 1; size /= static_cast<std::size_t>(q)) ++d;
  return d;
}

inline Index rank_by_enumeration(Residue q, const Matrix& m) { return dim_of(q, column_span(q, m)); }

inline SpanSet intersect(const SpanSet& a, const SpanSet& b) {
  SpanSet out;
  for (const Vec& v : a)
    if (b.count(v)) out.insert(v);
  return out;
}

/// Some basis of an enumerated subspace, as matrix columns.
inline Matrix basis_of(Residue q, const SpanSet& s, std::size_t dim) {
  std::vector<Vec> chosen;
  SpanSet covered{Vec(dim, 0)};
  for (const Vec& v : s) {
    if (covered.count(v)) continue;
    chosen.push_back(v);
    covered = span_set(q, chosen, dim);
  }
  Matrix m(static_cast<Index>(dim), static_cast<Index>(chosen.size()));
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(static_cast<Index>(r), static_cast<Index>(c)) = chosen[c][r];
  return m;
}

inline Vec to_vec(const regen::Vector& v) { return Vec(v.data(), v.data() + v.size()); }

}  // namespace oracle
