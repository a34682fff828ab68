#include "qfock/kl.hpp"

#include <algorithm>

namespace qfock {

namespace {

using Key = std::pair<std::vector<long>, std::vector<long>>;

void check_scale(const AffinePerm& w) {
  if (w.length() > kKlLengthCap) throw ScaleError("out of desk scale");
}

// l(s_j w) < l(w)
bool left_descent(const AffinePerm& w, int j) {
  return w.inverse().right_descent(j);
}

// generator indices of the parabolic subgroup fixing the point
std::vector<int> stab_gens(const std::vector<int>& point) {
  std::vector<int> g;
  for (int a = 1; a < (int)point.size(); ++a)
    if (point[a - 1] == point[a]) g.push_back(a);
  return g;
}

// longest element of the point stabilizer: reverse each equal-entry block
AffinePerm stab_longest(const std::vector<int>& point) {
  int l = (int)point.size();
  AffinePerm w = AffinePerm::identity(l);
  int a = 0;
  while (a < l) {
    int b = a;
    while (b + 1 < l && point[b + 1] == point[a]) ++b;
    for (int k = a; k <= b; ++k) w.win[k] = a + b + 2 - (k + 1);
    a = b + 1;
  }
  return w;
}

// length of the minimal representative of the coset (stabilizer of point)*y,
// subtracted from l(y): the stripped-off part
long strip_length(const std::vector<int>& sgens, const AffinePerm& y) {
  AffinePerm yy = y;
  long cnt = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int a : sgens) {
      if (!left_descent(yy, a)) continue;
      yy = AffinePerm::gen(yy.l(), a) * yy;
      ++cnt;
      moved = true;
      break;
    }
  }
  return cnt;
}

}  // namespace

Laurent KlTable::poly(const AffinePerm& x, const AffinePerm& w) {
  QF_CHECK(x.shift_index() == w.shift_index(), "kl poly: mixed rotation cosets");
  check_scale(w);
  if (x == w) return Laurent(1);
  if (!bruhat_leq(x, w)) return Laurent();
  if (w.length() - x.length() <= 2) return Laurent(1);
  Key key{x.win, w.win};
  auto it = pmemo.find(key);
  if (it != pmemo.end()) return it->second;

  int s = *w.any_right_descent();
  AffinePerm sg = AffinePerm::gen(w.l(), s);
  AffinePerm xs = x * sg;
  if (xs.length() > x.length()) {
    // P_{x,w} = P_{xs,w} when xs > x and ws < w
    Laurent p = poly(xs, w);
    pmemo.emplace(key, p);
    return p;
  }
  AffinePerm ws = w * sg;
  Laurent p = poly(xs, ws) + Laurent::v(1) * poly(x, ws);
  for (const AffinePerm& z : bruhat_interval_below(ws)) {
    if (!z.right_descent(s)) continue;
    if (!bruhat_leq(x, z)) continue;
    mpz_class m = mu(z, ws);
    if (m == 0) continue;
    long e = (w.length() - z.length()) / 2;
    p = p - poly(x, z).shift_mul(m, (int)e);
  }
  pmemo.emplace(key, p);
  return p;
}

mpz_class KlTable::mu(const AffinePerm& x, const AffinePerm& w) {
  long d = w.length() - x.length();
  if (d <= 0 || d % 2 == 0) return 0;
  return poly(x, w).coeff((int)((d - 1) / 2));
}

Laurent KlTable::rpoly(const AffinePerm& x, const AffinePerm& w) {
  QF_CHECK(x.shift_index() == w.shift_index(), "kl rpoly: mixed rotation cosets");
  check_scale(w);
  if (x == w) return Laurent(1);
  if (!bruhat_leq(x, w)) return Laurent();
  Key key{x.win, w.win};
  auto it = rmemo.find(key);
  if (it != rmemo.end()) return it->second;

  int s = *w.any_right_descent();
  AffinePerm sg = AffinePerm::gen(w.l(), s);
  AffinePerm xs = x * sg;
  AffinePerm ws = w * sg;
  Laurent r;
  if (xs.length() < x.length()) {
    r = rpoly(xs, ws);
  } else {
    Laurent qm1 = Laurent::v(1) + Laurent(-1);
    r = qm1 * rpoly(x, ws) + Laurent::v(1) * rpoly(xs, ws);
  }
  rmemo.emplace(key, r);
  return r;
}

bool kl_inversion_identity(KlTable& t, const AffinePerm& x, const AffinePerm& w) {
  if (!bruhat_leq(x, w)) return true;
  Laurent lhs = t.poly(x, w).bar();
  lhs.shift_mul(1, (int)(w.length() - x.length()));
  Laurent rhs;
  for (const AffinePerm& z : bruhat_interval_below(w))
    if (bruhat_leq(x, z)) rhs = rhs + t.rpoly(x, z) * t.poly(z, w);
  return lhs == rhs;
}

Laurent parabolic_kl(KlTable& t, const std::vector<int>& point,
                     const AffinePerm& y, const AffinePerm& x) {
  int l = y.l();
  QF_CHECK((int)point.size() == l && x.l() == l, "parabolic_kl: size mismatch");
  QF_CHECK(y.shift_index() == x.shift_index(), "parabolic_kl: mixed cosets");
  AffinePerm wi = stab_longest(point);
  AffinePerm wix = wi * x;
  Laurent q;
  std::vector<long> zt(l);
  for (int k = 0; k < l; ++k) zt[k] = k + 1;
  do {
    AffinePerm z{zt};
    if (!bruhat_leq(y * z, x)) continue;
    Laurent p = t.poly(wi * (y * z), wix);
    if (z.length() % 2) q = q - p; else q = q + p;
  } while (std::next_permutation(zt.begin(), zt.end()));
  return q;
}

namespace {

// lam + rho as an l-window word, rho = (0, -1, .., 1-l)
std::vector<int> wedge_word(const Partition& lam, int l) {
  QF_CHECK((int)lam.size() <= l, "wedge word: partition too long");
  std::vector<int> j(l);
  for (int k = 1; k <= l; ++k)
    j[k - 1] = (k <= (int)lam.size() ? lam[k - 1] : 0) + 1 - k;
  return j;
}

// word -> partition; entries below the floor 1-l report failure
std::optional<Partition> word_partition(const std::vector<int>& k) {
  int l = (int)k.size();
  if (k[l - 1] < 1 - l) return std::nullopt;
  Partition mu(l);
  for (int a = 0; a < l; ++a) mu[a] = k[a] + a;
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

bool strictly_decreasing(const std::vector<int>& k) {
  for (size_t a = 0; a + 1 < k.size(); ++a)
    if (k[a] <= k[a + 1]) return false;
  return true;
}

}  // namespace

FockVec b_minus_via_kl(KlTable& t, const Partition& lam, int n, int l) {
  QF_CHECK(n >= 2 && l >= 1, "b_minus_via_kl: bad level or length");
  Alcove al = alcove_decompose(wedge_word(lam, l), n);
  const AffinePerm& x = al.x;
  check_scale(x);
  std::vector<int> sgens = stab_gens(al.point);
  FockVec out;
  std::map<std::vector<int>, Laurent> leak;  // wedges below the floor
  for (const AffinePerm& y : bruhat_interval_below(x)) {
    std::vector<int> k = seq_act(al.point, n, y);
    if (!strictly_decreasing(k)) continue;
    long d = y.length() - x.length();
    Laurent c = t.poly(y, x).compose_power(2);
    c.shift_mul((d % 2 == 0) ? 1 : -1, (int)(d - strip_length(sgens, y)));
    if (auto mu = word_partition(k)) fock_add(out, *mu, c);
    else leak[k] = leak[k] + c;
  }
  for (const auto& [kw, c] : leak)
    QF_CHECK(c.is_zero(), "b_minus_via_kl: nonzero below the floor");
  return out;
}

FockVec b_plus_via_kl(KlTable& t, const Partition& lam, int n, int l) {
  QF_CHECK(n >= 2 && l >= 1, "b_plus_via_kl: bad level or length");
  Alcove al = alcove_decompose(wedge_word(lam, l), n);
  std::vector<long> ow(l);
  for (int k = 0; k < l; ++k) ow[k] = l - k;
  AffinePerm omega{ow};
  AffinePerm x = al.x * omega;  // minimal double coset representative
  QF_CHECK(x.length() + omega.length() == al.x.length(),
           "b_plus_via_kl: top wedge is not extremal");
  check_scale(al.x);
  std::vector<int> sgens = stab_gens(al.point);
  FockVec out;
  for (const AffinePerm& y : bruhat_interval_below(x)) {
    // keep minimal double coset representatives whose coset meets no
    // finite generator from the left stabilizer side
    bool ok = !std::any_of(sgens.begin(), sgens.end(),
                           [&](int a) { return left_descent(y, a); });
    for (int b = 1; ok && b < l; ++b) ok = !y.right_descent(b);
    if (ok) {
      AffinePerm yi = y.inverse();
      for (int a : sgens) {
        AffinePerm u = yi * (AffinePerm::gen(l, a) * y);
        for (int b = 1; ok && b < l; ++b) ok = !(u == AffinePerm::gen(l, b));
        if (!ok) break;
      }
    }
    if (!ok) continue;
    Laurent q = parabolic_kl(t, al.point, y, x);
    if (q.is_zero()) continue;
    std::vector<int> k = seq_act(al.point, n, y * omega);
    QF_CHECK(strictly_decreasing(k), "b_plus_via_kl: degenerate wedge");
    auto mu = word_partition(k);
    QF_CHECK(mu.has_value(), "b_plus_via_kl: nonzero below the floor");
    Laurent c = q.compose_power(-2);
    c.shift_mul(1, (int)(x.length() - y.length()));
    fock_add(out, *mu, c);
  }
  return out;
}

}  // namespace qfock
