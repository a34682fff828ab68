#include "qfock/fields.hpp"

#include <functional>

namespace qfock {

long fp_inv(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  QF_CHECK(a != 0, "inverse of zero");
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return t < 0 ? t + p : t;
}

FpMat fp_mul(const FpMat& a, const FpMat& b, long p) {
  if (a.empty() || b.empty()) return {};
  size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  FpMat out(rows, FpRow(cols, 0));
  for (size_t i = 0; i < rows; ++i) {
    QF_CHECK(a[i].size() == inner, "shape mismatch");
    for (size_t k = 0; k < inner; ++k) {
      long f = a[i][k] % p;
      if (f == 0) continue;
      for (size_t j = 0; j < cols; ++j)
        out[i][j] = (out[i][j] + f * b[k][j]) % p;
    }
  }
  return out;
}

FpMat fp_rref(FpMat m, long p, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return m;
  size_t cols = m[0].size(), row = 0;
  for (auto& r : m)
    for (auto& e : r) {
      e %= p;
      if (e < 0) e += p;
    }
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    long inv = fp_inv(m[row][c], p);
    for (size_t j = c; j < cols; ++j) m[row][j] = (m[row][j] * inv) % p;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      long f = p - m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + f * m[row][j]) % p;
    }
    if (pivots) pivots->push_back((int)c);
    ++row;
  }
  m.resize(row);
  return m;
}

int fp_rank(const FpMat& m, long p) { return (int)fp_rref(m, p).size(); }

std::optional<FpRow> fp_coords(const FpMat& rref, const std::vector<int>& pivots,
                               const FpRow& v, long p) {
  QF_CHECK(rref.size() == pivots.size(), "basis needs its pivot columns");
  FpRow rest = v, coords(rref.size(), 0);
  for (auto& e : rest) {
    e %= p;
    if (e < 0) e += p;
  }
  for (size_t r = 0; r < rref.size(); ++r) {
    long c = rest[pivots[r]];
    coords[r] = c;
    if (c == 0) continue;
    long f = p - c;
    for (size_t j = 0; j < rest.size(); ++j)
      rest[j] = (rest[j] + f * rref[r][j]) % p;
  }
  for (long e : rest)
    if (e != 0) return std::nullopt;
  return coords;
}

std::vector<FpMat> fp_subspaces(int d, int k, long p) {
  std::vector<FpMat> out;
  if (k < 0 || k > d) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> piv;
  std::function<void(int, int)> choose = [&](int from, int left) {
    if (left == 0) {
      // fill the free entries: column c of row r is free when c > piv[r]
      // and c is not a pivot column
      std::vector<std::pair<int, int>> free_pos;
      std::vector<char> is_piv(d, 0);
      for (int c : piv) is_piv[c] = 1;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < d; ++c)
          if (!is_piv[c]) free_pos.emplace_back(r, c);
      FpMat m(k, FpRow(d, 0));
      for (int r = 0; r < k; ++r) m[r][piv[r]] = 1;
      std::function<void(size_t)> fill = [&](size_t t) {
        if (t == free_pos.size()) {
          out.push_back(m);
          return;
        }
        auto [r, c] = free_pos[t];
        for (long e = 0; e < p; ++e) {
          m[r][c] = e;
          fill(t + 1);
        }
        m[r][c] = 0;
      };
      fill(0);
      return;
    }
    for (int c = from; c <= d - left; ++c) {
      piv.push_back(c);
      choose(c + 1, left - 1);
      piv.pop_back();
    }
  };
  choose(0, k);
  return out;
}

std::vector<long> first_primes(int count) {
  std::vector<long> out;
  for (long x = 2; (int)out.size() < count; ++x) {
    bool ok = true;
    for (long d = 2; d * d <= x; ++d)
      if (x % d == 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace qfock
