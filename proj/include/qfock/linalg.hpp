#pragma once
// Fraction-free elimination over Z[v, v^-1].
//
// Bareiss one-step elimination: entries stay in the ring and every division
// is exact.  Used to reduce vectors against a relation span and to certify
// that designated "normal" coordinates stay independent.

#include <vector>

#include "qfock/laurent.hpp"

namespace qfock {

struct Echelon {
  std::vector<std::vector<Laurent>> rows;  // pivot entry first nonzero in row
  std::vector<int> pivot_col;              // per row, strictly increasing? no: per row
};

// In-place fraction-free row echelon; returns pivot column per kept row.
inline Echelon bareiss_echelon(std::vector<std::vector<Laurent>> m) {
  Echelon e;
  if (m.empty()) return e;
  const size_t cols = m[0].size();
  Laurent prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    // pick the sparsest nonzero pivot in column c
    size_t best = m.size();
    size_t best_sz = SIZE_MAX;
    for (size_t i = r; i < m.size(); ++i)
      if (!m[i][c].is_zero() && m[i][c].terms().size() < best_sz) {
        best = i;
        best_sz = m[i][c].terms().size();
      }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    for (size_t i = r + 1; i < m.size(); ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[r][j] * m[i][c]).divide_exact(prev);
      m[i][c] = Laurent();
    }
    prev = m[r][c];
    e.pivot_col.push_back((int)c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

// Eliminate the pivot coordinates from t; returns the cleared vector together
// with the accumulated denominator d, so that the reduced class is t/d.
inline std::pair<std::vector<Laurent>, Laurent> reduce_against(
    const Echelon& e, std::vector<Laurent> t) {
  Laurent den(1);
  for (size_t r = 0; r < e.rows.size(); ++r) {
    int c = e.pivot_col[r];
    if (t[c].is_zero()) continue;
    Laurent p = e.rows[r][c], f = t[c];
    for (size_t j = 0; j < t.size(); ++j)
      t[j] = t[j] * p - e.rows[r][(size_t)j] * f;
    den *= p;
  }
  return {std::move(t), std::move(den)};
}

}  // namespace qfock
