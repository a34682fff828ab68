#include "qfock/affine_perm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qfock/laurent.hpp"

namespace qfock {

long AffinePerm::operator()(long k) const {
  const int n = l();
  long r = ((k - 1) % n + n) % n + 1;  // 1..l
  return win[r - 1] + (k - r);         // (k-r) is a multiple of l
}

AffinePerm AffinePerm::identity(int l) {
  AffinePerm w;
  for (int k = 1; k <= l; ++k) w.win.push_back(k);
  return w;
}

AffinePerm AffinePerm::gen(int l, int j) {
  QF_CHECK(l >= 2 && 0 <= j && j < l, "bad generator index");
  AffinePerm w = identity(l);
  if (j == 0) {
    w.win[0] = 0;
    w.win[l - 1] = l + 1;
  } else {
    w.win[j - 1] = j + 1;
    w.win[j] = j;
  }
  return w;
}

AffinePerm AffinePerm::rotation(int l) {
  AffinePerm w;
  for (int k = 1; k <= l; ++k) w.win.push_back(k + 1);
  return w;
}

AffinePerm AffinePerm::operator*(const AffinePerm& o) const {
  QF_CHECK(l() == o.l(), "mixed window sizes");
  AffinePerm r;
  for (int k = 1; k <= l(); ++k) r.win.push_back((*this)(o(k)));
  return r;
}

AffinePerm AffinePerm::inverse() const {
  AffinePerm r;
  r.win.resize(l());
  for (int k = 1; k <= l(); ++k) {
    long v = win[k - 1];
    long rr = ((v - 1) % l() + l()) % l() + 1;
    r.win[rr - 1] = k + (rr - v);
  }
  return r;
}

long AffinePerm::shift_index() const {
  long s = 0;
  for (int k = 1; k <= l(); ++k) s += win[k - 1] - k;
  QF_CHECK(s % l() == 0, "window is not a periodic permutation");
  return s / l();
}

AffinePerm AffinePerm::coxeter_part() const {
  long a = shift_index();
  AffinePerm r = *this;
  for (auto& v : r.win) v -= a;
  return r;
}

long AffinePerm::length() const {
  // number of inversions; per residue pair it is |floor((w(b)-w(a))/l)|
  long len = 0;
  for (int a = 1; a <= l(); ++a)
    for (int b = a + 1; b <= l(); ++b) {
      long d = win[b - 1] - win[a - 1];
      long fl = d >= 0 ? d / l() : -((-d + l() - 1) / l());
      len += fl < 0 ? -fl : fl;
    }
  return len;
}

bool AffinePerm::right_descent(int j) const {
  QF_CHECK(0 <= j && j < l(), "descent index out of range");
  return (*this)(j) > (*this)(j + 1);
}

std::optional<int> AffinePerm::any_right_descent() const {
  for (int j = 0; j < l(); ++j)
    if (right_descent(j)) return j;
  return std::nullopt;
}

std::vector<int> AffinePerm::reduced_word() const {
  QF_CHECK(shift_index() == 0, "reduced word needs shift index 0");
  AffinePerm w = *this;
  std::vector<int> rev;
  while (auto j = w.any_right_descent()) {
    w = w * gen(l(), *j);
    rev.push_back(*j);
  }
  QF_CHECK(w == identity(l()), "descent-free element is not the identity");
  std::reverse(rev.begin(), rev.end());
  QF_CHECK((long)rev.size() == length(), "reduced word length mismatch");
  return rev;
}

std::vector<int> seq_act(const std::vector<int>& i, int n, const AffinePerm& w) {
  const int l = w.l();
  QF_CHECK((int)i.size() == l, "sequence window size mismatch");
  std::vector<int> out(l);
  for (int k = 1; k <= l; ++k) {
    long t = w(k);
    long r = ((t - 1) % l + l) % l + 1;
    out[k - 1] = i[r - 1] + (int)((t - r) / l) * n;
  }
  return out;
}

bool bruhat_leq(const AffinePerm& u, const AffinePerm& w) {
  QF_CHECK(u.l() == w.l(), "mixed window sizes");
  if (u.shift_index() != w.shift_index()) return false;
  AffinePerm a = u.coxeter_part(), b = w.coxeter_part();
  while (true) {
    if (a == b) return true;
    if (a.length() >= b.length()) return false;
    int j = *b.any_right_descent();
    AffinePerm s = AffinePerm::gen(u.l(), j);
    AffinePerm as = a * s;
    b = b * s;
    if (as.length() < a.length()) a = as;
  }
}

std::vector<AffinePerm> bruhat_interval_below(const AffinePerm& x) {
  AffinePerm x0 = x.coxeter_part();
  long a = x.shift_index();
  std::vector<int> word = x0.reduced_word();
  if (word.size() > 16)
    throw ScaleError("Bruhat interval out of desk scale (length " +
                     std::to_string(word.size()) + ")");
  const int l = x.l();
  std::set<std::vector<long>> seen;
  std::vector<AffinePerm> out;
  // subwords of a reduced word are exactly the lower interval
  for (size_t mask = 0; mask < (size_t(1) << word.size()); ++mask) {
    AffinePerm y = AffinePerm::identity(l);
    for (size_t t = 0; t < word.size(); ++t)
      if (mask & (size_t(1) << t)) y = y * AffinePerm::gen(l, word[t]);
    if (seen.insert(y.win).second) {
      for (auto& v : y.win) v += a;  // reattach the rotation part
      out.push_back(y);
    }
  }
  return out;
}

Alcove alcove_decompose(const std::vector<int>& word, int n) {
  const int l = (int)word.size();
  QF_CHECK(l >= 1 && n >= 1, "empty word or bad n");
  std::vector<long> m(l);
  std::vector<int> r(l);
  for (int k = 0; k < l; ++k) {
    long x = word[k];
    long up = x >= 0 ? (x + n - 1) / n : -((-x) / n);  // ceil(x/n)
    m[k] = up;
    r[k] = (int)(x - n * up);  // in (-n, 0]
  }
  std::vector<int> point = r;
  std::sort(point.begin(), point.end());
  Alcove out;
  out.point = point;
  out.x.win.assign(l, 0);
  // assign word positions with residue value val to the block of equal
  // entries in the point, ordered by k - l*m_k (minimal coset representative)
  for (int t0 = 0; t0 < l;) {
    int t1 = t0;
    while (t1 < l && point[t1] == point[t0]) ++t1;
    std::vector<int> ks;
    for (int k = 0; k < l; ++k)
      if (r[k] == point[t0]) ks.push_back(k);
    QF_CHECK((int)ks.size() == t1 - t0, "block size mismatch");
    std::sort(ks.begin(), ks.end(), [&](int p, int q) {
      return (p + 1) - (long)l * m[p] < (q + 1) - (long)l * m[q];
    });
    for (int t = t0; t < t1; ++t) {
      int k = ks[t - t0];
      out.x.win[k] = (t + 1) + l * m[k];
    }
    t0 = t1;
  }
  QF_CHECK(seq_act(out.point, n, out.x) == word, "alcove factorization broken");
  return out;
}

long stabilizer_longest_length(const std::vector<int>& point) {
  long s = 0;
  for (size_t t0 = 0; t0 < point.size();) {
    size_t t1 = t0;
    while (t1 < point.size() && point[t1] == point[t0]) ++t1;
    long mlt = (long)(t1 - t0);
    s += mlt * (mlt - 1) / 2;
    t0 = t1;
  }
  return s;
}

}  // namespace qfock
