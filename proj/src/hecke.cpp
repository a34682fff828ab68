#include "qfock/hecke.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "qfock/affine_perm.hpp"

namespace qfock {

void add_term(TensorVec& x, const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = x.find(w);
  if (it == x.end()) {
    x.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

TensorVec scale(const TensorVec& x, const Laurent& c) {
  TensorVec out;
  if (c.is_zero()) return out;
  for (const auto& [w, a] : x) out.emplace(w, a * c);
  return out;
}

TensorVec add(const TensorVec& x, const TensorVec& y) {
  TensorVec out = x;
  for (const auto& [w, a] : y) add_term(out, w, a);
  return out;
}

static long ceil_div(long x, long n) {
  return x >= 0 ? (x + n - 1) / n : -((-x) / n);
}

using PairExp = std::vector<std::pair<Laurent, std::pair<int, int>>>;

static PairExp pair_T_compute(int n, int a, int b) {
  if (a == b) return {{Laurent(1, -2), {a, b}}};
  // shift both entries so the first lands in the window (-n, 0]
  const int delta = (int)(-n * ceil_div(a, n));
  const int a0 = a + delta, b0 = b + delta;
  std::map<std::pair<int, int>, Laurent> acc;
  auto put = [&acc](const Laurent& c, int p, int q) {
    auto& slot = acc[{p, q}];
    slot += c;
    if (slot.is_zero()) acc.erase({p, q});
  };
  if (-n < b0 && b0 <= 0) {
    put(Laurent(1, -1), b0, a0);
    if (a0 > b0) put(Laurent(1, -2) - Laurent(1), a0, b0);
  } else if (b0 > 0) {
    // T x(a,b) = up1[T x(a,b-n)] + (1 - v^-2) x(a+n, b-n)
    for (const auto& [c, pq] : pair_T(n, a0, b0 - n))
      put(c, pq.first + n, pq.second);
    put(Laurent(1) - Laurent(1, -2), a0 + n, b0 - n);
  } else {
    // T x(a,b) = down1[T x(a,b+n)] - (1 - v^-2) x(a, b)
    for (const auto& [c, pq] : pair_T(n, a0, b0 + n))
      put(c, pq.first - n, pq.second);
    put(Laurent(1, -2) - Laurent(1), a0, b0);
  }
  PairExp out;
  for (const auto& [pq, c] : acc)
    out.push_back({c, {pq.first - delta, pq.second - delta}});
  return out;
}

const PairExp& pair_T(int n, int a, int b) {
  static std::map<std::tuple<int, int, int>, PairExp> cache;
  auto key = std::make_tuple(n, a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, pair_T_compute(n, a, b)).first->second;
}

TensorVec apply_T(const TensorVec& x, int k, int n) {
  TensorVec out;
  for (const auto& [w, c] : x) {
    QF_CHECK(1 <= k && k < (int)w.size(), "T position out of range");
    for (const auto& [coef, pq] : pair_T(n, w[k - 1], w[k])) {
      Word u = w;
      u[k - 1] = pq.first;
      u[k] = pq.second;
      add_term(out, u, c * coef);
    }
  }
  return out;
}

bool is_normal(const Word& w) {
  for (size_t k = 1; k < w.size(); ++k)
    if (w[k - 1] <= w[k]) return false;
  return true;
}

TensorVec straighten(const TensorVec& x, int n) {
  TensorVec out;
  std::vector<std::pair<Word, Laurent>> work(x.begin(), x.end());
  long steps = 0;
  while (!work.empty()) {
    QF_CHECK(++steps < 2000000, "straightening did not terminate");
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    size_t k = 1;
    while (k < w.size() && w[k - 1] > w[k]) ++k;
    if (k == w.size()) {
      add_term(out, w, c);
      continue;
    }
    if (w[k - 1] == w[k]) continue;  // repeated index dies in the wedge
    // the class satisfies [x_w] = -[T_k x_w]; solve for the self term
    Laurent self;
    std::vector<std::pair<Laurent, std::pair<int, int>>> rest;
    for (const auto& [coef, pq] : pair_T(n, w[k - 1], w[k])) {
      if (pq.first == w[k - 1] && pq.second == w[k])
        self = coef;
      else
        rest.push_back({coef, pq});
    }
    Laurent denom = Laurent(1) + self;
    QF_CHECK(!denom.is_zero(), "degenerate rewrite");
    for (const auto& [coef, pq] : rest) {
      Word u = w;
      u[k - 1] = pq.first;
      u[k] = pq.second;
      work.push_back({std::move(u), (-(c * coef)).divide_exact(denom)});
    }
  }
  return out;
}

TensorVec straighten_word(const Word& w, int n) {
  TensorVec x;
  x.emplace(w, Laurent(1));
  return straighten(x, n);
}

TensorVec psi_wedge(const TensorVec& x, int n) {
  TensorVec out;
  for (const auto& [w, c] : x) {
    QF_CHECK(is_normal(w), "bar involution needs wedge-basis input");
    const long l = (long)w.size();
    const long lw0 = l * (l - 1) / 2;
    Alcove al = alcove_decompose(w, n);
    long e = lw0 - stabilizer_longest_length(al.point);
    Word rev(w.rbegin(), w.rend());
    Laurent pref(lw0 % 2 ? -1 : 1, (int)e);
    out = add(out, scale(straighten_word(rev, n), c.bar() * pref));
  }
  return out;
}

// oracle

WedgeOracle::WedgeOracle(int n, int l, int box_lo, int box_hi)
    : n_(n), l_(l), lo_(box_lo), hi_(box_hi) {
  QF_CHECK(l_ >= 2 && hi_ > lo_, "bad oracle box");
}

static WedgeOracle::Key key_of(const Word& w, int n) {
  long sum = 0;
  std::vector<int> res;
  for (int x : w) {
    sum += x;
    res.push_back(((x % n) + n) % n);
  }
  std::sort(res.begin(), res.end());
  return {sum, res};
}

const WedgeOracle::Block& WedgeOracle::block_for(const Key& key) {
  auto it = blocks_.find(key);
  if (it != blocks_.end()) return it->second;
  Block blk;
  // enumerate words in the box matching the grading key
  Word cur(l_);
  std::vector<Word> box_words;
  std::function<void(int)> gen = [&](int pos) {
    if (pos == l_) {
      if (key_of(cur, n_) == key) box_words.push_back(cur);
      return;
    }
    for (int x = lo_; x <= hi_; ++x) {
      cur[pos] = x;
      gen(pos + 1);
    }
  };
  gen(0);
  std::vector<TensorVec> rels;
  for (const Word& j : box_words) {
    TensorVec base;
    base.emplace(j, Laurent(1));
    for (int k = 1; k < l_; ++k) {
      TensorVec rel = apply_T(base, k, n_);
      add_term(rel, j, Laurent(1));
      if (!rel.empty()) rels.push_back(std::move(rel));
    }
  }
  // column order: non-normal words first so a pivot in the normal range
  // would mean the relations made normal words dependent
  std::map<Word, size_t> support;
  for (const auto& r : rels)
    for (const auto& [w, c] : r) support.emplace(w, 0);
  for (const auto& [w, c] : support)
    if (!is_normal(w)) blk.cols.push_back(w);
  blk.normal_from = blk.cols.size();
  for (const auto& [w, c] : support)
    if (is_normal(w)) blk.cols.push_back(w);
  for (size_t c = 0; c < blk.cols.size(); ++c) blk.index[blk.cols[c]] = c;
  std::vector<std::vector<Laurent>> m(
      rels.size(), std::vector<Laurent>(blk.cols.size()));
  for (size_t r = 0; r < rels.size(); ++r)
    for (const auto& [w, c] : rels[r]) m[r][blk.index.at(w)] = c;
  blk.ech = bareiss_echelon(std::move(m));
  for (int pc : blk.ech.pivot_col)
    QF_CHECK((size_t)pc < blk.normal_from,
             "relations made normal words dependent");
  return blocks_.emplace(key, std::move(blk)).first->second;
}

TensorVec WedgeOracle::reduce(const Word& w) {
  QF_CHECK((int)w.size() == l_, "word length mismatch");
  for (int x : w)
    QF_CHECK(lo_ + n_ <= x && x <= hi_ - n_, "word outside oracle box margin");
  const Block& blk = block_for(key_of(w, n_));
  std::vector<Laurent> t(blk.cols.size());
  auto self = blk.index.find(w);
  if (self == blk.index.end()) {
    // untouched by every relation: already in normal position
    QF_CHECK(is_normal(w), "word missing from oracle block");
    TensorVec out;
    out.emplace(w, Laurent(1));
    return out;
  }
  t[self->second] = Laurent(1);
  auto [red, den] = reduce_against(blk.ech, std::move(t));
  TensorVec out;
  for (size_t c = 0; c < red.size(); ++c) {
    if (red[c].is_zero()) continue;
    QF_CHECK(c >= blk.normal_from, "oracle box too small to normalize word");
    out.emplace(blk.cols[c], red[c].divide_exact(den));
  }
  return out;
}

}  // namespace qfock
