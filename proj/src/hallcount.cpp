#include "qfock/hallcount.hpp"

#include <functional>
#include <mutex>

#include "qfock/linalg.hpp"

namespace qfock {

Rep rep_of_class(const Multisegment& c) {
  Rep r;
  r.n = c.n();
  r.dim = c.dim_vector();
  r.x.resize(r.n);
  for (int i = 0; i < r.n; ++i)
    r.x[i].assign(r.dim[i], FpRow(r.dim[(i + 1) % r.n], 0));
  std::vector<int> used(r.n, 0);
  for (const auto& s : c.segments()) {
    int prev = -1, prev_v = -1;
    for (int t = 0; t < s.length; ++t) {
      int v = (s.start + t) % r.n;
      int idx = used[v]++;
      if (t > 0) r.x[prev_v][prev][idx] = 1;
      prev = idx;
      prev_v = v;
    }
  }
  return r;
}

static const std::vector<Multisegment>& classes_memo(const std::vector<int>& d) {
  static std::map<std::vector<int>, std::vector<Multisegment>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(d);
  if (it == memo.end()) it = memo.emplace(d, classes_of_dim(d)).first;
  return it->second;
}

Multisegment classify_rep(const Rep& r, long p) {
  int deg = 0;
  for (int d : r.dim) deg += d;
  std::vector<std::vector<int>> prof(deg + 1, std::vector<int>(r.n, 0));
  for (int i = 0; i < r.n; ++i) {
    FpMat cur = r.x[i];
    int src = r.dim[i];
    for (int k = 1; k <= deg; ++k) {
      int tgt = r.dim[(i + k) % r.n];
      prof[k][i] = (src == 0 || tgt == 0) ? 0 : fp_rank(cur, p);
      if (prof[k][i] == 0) break;  // further powers stay zero
      cur = fp_mul(cur, r.x[(i + k) % r.n], p);
    }
  }
  for (const auto& c : classes_memo(r.dim))
    if (rank_profile(c) == prof) return c;
  QF_CHECK(false, "rank profile matches no class");
  return Multisegment();
}

long dim_orbit(const Multisegment& c) {
  static std::map<std::string, long> memo;
  static std::mutex mu;
  const std::string key = std::to_string(c.n()) + "|" + c.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Rep r = rep_of_class(c);
  std::vector<int> off(r.n + 1, 0);
  for (int i = 0; i < r.n; ++i) off[i + 1] = off[i] + r.dim[i] * r.dim[i];
  std::vector<std::vector<Laurent>> rows;
  for (int i = 0; i < r.n; ++i) {
    int j = (i + 1) % r.n;
    for (int a = 0; a < r.dim[i]; ++a)
      for (int b = 0; b < r.dim[j]; ++b) {
        // (x_i P_j - P_i x_i)[a][b] = 0
        std::vector<Laurent> row(off[r.n]);
        bool any = false;
        for (int k = 0; k < r.dim[j]; ++k)
          if (r.x[i][a][k]) {
            row[off[j] + k * r.dim[j] + b] += Laurent(1);
            any = true;
          }
        for (int k = 0; k < r.dim[i]; ++k)
          if (r.x[i][k][b]) {
            row[off[i] + a * r.dim[i] + k] += Laurent(-1);
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
  }
  long rank = (long)bareiss_echelon(std::move(rows)).rows.size();
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, rank);
  return rank;
}

std::string dims_key(const std::vector<std::vector<int>>& layers) {
  std::string s;
  for (const auto& d : layers) {
    for (int x : d) s += std::to_string(x) + ",";
    s += "|";
  }
  return s;
}

static std::vector<int> pivots_of(const FpMat& rref) {
  std::vector<int> piv;
  for (const auto& row : rref) {
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    QF_CHECK(c < row.size(), "zero row in a basis");
    piv.push_back((int)c);
  }
  return piv;
}

// basis of the left null space {v : v x = 0}
static FpMat left_null_space(const FpMat& x, int rows, long p) {
  if (rows == 0) return {};
  if (x.empty() || x[0].empty()) {
    FpMat id(rows, FpRow(rows, 0));
    for (int i = 0; i < rows; ++i) id[i][i] = 1;
    return id;
  }
  FpMat t(x[0].size(), FpRow(rows, 0));
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = 0; b < x[a].size(); ++b) t[b][a] = x[a][b];
  std::vector<int> piv;
  FpMat r = fp_rref(std::move(t), p, &piv);
  std::vector<char> is_piv(rows, 0);
  for (int c : piv) is_piv[c] = 1;
  FpMat out;
  for (int f = 0; f < rows; ++f) {
    if (is_piv[f]) continue;
    FpRow v(rows, 0);
    v[f] = 1;
    for (size_t row = 0; row < r.size(); ++row)
      v[piv[row]] = (p - r[row][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// quotient representation by a graded x-stable subspace given as rref bases
static Rep quotient_rep(const Rep& r, const std::vector<FpMat>& sub, long p) {
  Rep q;
  q.n = r.n;
  q.dim.resize(r.n);
  q.x.resize(r.n);
  std::vector<std::vector<int>> piv(r.n), comp(r.n);
  for (int i = 0; i < r.n; ++i) {
    piv[i] = pivots_of(sub[i]);
    std::vector<char> is_piv(r.dim[i], 0);
    for (int c : piv[i]) is_piv[c] = 1;
    for (int c = 0; c < r.dim[i]; ++c)
      if (!is_piv[c]) comp[i].push_back(c);
    q.dim[i] = (int)comp[i].size();
  }
  for (int i = 0; i < r.n; ++i) {
    int j = (i + 1) % r.n;
    q.x[i].assign(q.dim[i], FpRow(q.dim[j], 0));
    for (int a = 0; a < q.dim[i]; ++a) {
      FpRow v = r.x[i][comp[i][a]];
      for (size_t row = 0; row < sub[j].size(); ++row) {
        long f = v[piv[j][row]] % p;
        if (f == 0) continue;
        f = p - f;
        for (size_t t = 0; t < v.size(); ++t)
          v[t] = (v[t] + f * sub[j][row][t]) % p;
      }
      for (int b = 0; b < q.dim[j]; ++b) q.x[i][a][b] = v[comp[j][b]];
    }
  }
  return q;
}

mpz_class count_stable_flags(const Multisegment& c,
                             const std::vector<std::vector<int>>& layers,
                             long p, std::map<std::string, mpz_class>& memo) {
  const int n = c.n();
  auto dims = c.dim_vector();
  if (layers.empty()) return c.total_dim() == 0 ? 1 : 0;
  std::vector<int> tot(n, 0);
  for (const auto& l : layers) {
    QF_CHECK((int)l.size() == n, "layer has wrong size");
    for (int i = 0; i < n; ++i) tot[i] += l[i];
  }
  if (tot != dims) return 0;
  std::string key = c.str() + "#" + dims_key(layers) + "@" + std::to_string(p);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Rep r = rep_of_class(c);
  std::vector<FpMat> ker(n);
  for (int i = 0; i < n; ++i) {
    ker[i] = left_null_space(r.x[i], dims[i], p);
    if ((int)ker[i].size() < layers[0][i]) {
      memo.emplace(key, 0);
      return 0;
    }
  }
  std::vector<std::vector<FpMat>> choices(n);
  for (int i = 0; i < n; ++i)
    for (const auto& s : fp_subspaces((int)ker[i].size(), layers[0][i], p)) {
      // back to ambient coordinates
      FpMat amb = s.empty() ? FpMat{} : fp_mul(s, ker[i], p);
      choices[i].push_back(fp_rref(std::move(amb), p));
    }
  std::vector<std::vector<int>> rest(layers.begin() + 1, layers.end());
  mpz_class total = 0;
  std::vector<FpMat> pick(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Rep q = quotient_rep(r, pick, p);
      total += count_stable_flags(classify_rep(q, p), rest, p, memo);
      return;
    }
    for (const auto& s : choices[i]) {
      pick[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  memo.emplace(key, total);
  return total;
}

std::map<std::pair<std::string, std::string>, mpz_class>
count_subobjects_by_type(const Multisegment& c, const std::vector<int>& subdim,
                         long p) {
  const int n = c.n();
  auto dims = c.dim_vector();
  QF_CHECK((int)subdim.size() == n, "subspace dimension has wrong size");
  std::map<std::pair<std::string, std::string>, mpz_class> out;
  for (int i = 0; i < n; ++i)
    if (subdim[i] < 0 || subdim[i] > dims[i]) return out;
  Rep r = rep_of_class(c);
  std::vector<std::vector<std::pair<FpMat, std::vector<int>>>> choices(n);
  for (int i = 0; i < n; ++i)
    for (auto& s : fp_subspaces(dims[i], subdim[i], p))
      choices[i].emplace_back(s, pivots_of(s));

  std::vector<const std::pair<FpMat, std::vector<int>>*> pick(n);
  // sub[i] x[i] must land in sub[i+1]; the coordinates give x on the subspace
  std::vector<FpMat> subx(n);
  auto edge_ok = [&](int i) {
    int j = (i + 1) % n;
    const auto& [bi, pvi] = *pick[i];
    const auto& [bj, pvj] = *pick[j];
    subx[i].assign(bi.size(), FpRow(bj.size(), 0));
    for (size_t a = 0; a < bi.size(); ++a) {
      FpRow img(dims[j], 0);
      for (int t = 0; t < dims[i]; ++t) {
        long f = bi[a][t];
        if (f == 0) continue;
        for (int u = 0; u < dims[j]; ++u)
          img[u] = (img[u] + f * r.x[i][t][u]) % p;
      }
      auto co = fp_coords(bj, pvj, img, p);
      if (!co) return false;
      subx[i][a] = *co;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!edge_ok(n - 1)) return;
      Rep sub;
      sub.n = n;
      for (int t = 0; t < n; ++t) sub.dim.push_back((int)pick[t]->first.size());
      sub.x = subx;
      std::vector<FpMat> bases(n);
      for (int t = 0; t < n; ++t) bases[t] = pick[t]->first;
      Rep quot = quotient_rep(r, bases, p);
      out[{classify_rep(sub, p).str(), classify_rep(quot, p).str()}] += 1;
      return;
    }
    for (const auto& s : choices[i]) {
      pick[i] = &s;
      if (i > 0 && !edge_ok(i - 1)) continue;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace qfock
