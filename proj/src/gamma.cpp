#include "qfock/gamma.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace qfock {

int h_weight(const ZContent& c, int n) {
  int h = 0;
  for (const auto& [i, ci] : c) {
    for (const auto& [t, ct] : c) {
      // +c_i c_{j+1} over j > i, j = i mod n, read off at t = j+1
      if (t - 1 > i && (t - 1 - i) % n == 0) h += ci * ct;
      if (t > i && (t - i) % n == 0) h -= ci * ct;
    }
  }
  return h;
}

int k_twist(const ZContent& b, const ZContent& a, int n) {
  int k = 0;
  for (const auto& [i, bi] : b)
    for (const auto& [m, am] : a) {
      if (i > m && (i - m) % n == 0) k += 2 * bi * am;
      if (i > m + 1 && (i - m - 1) % n == 0) k -= bi * am;
      if (i >= m && ((i - m + 1) % n + n) % n == 0) k -= bi * am;
    }
  return k;
}

ZWindow z_window(const ZContent& d) {
  if (d.empty()) return {};
  ZWindow w;
  w.lo = d.begin()->first;
  w.modulus = std::max(2, d.rbegin()->first - w.lo + 2);
  return w;
}

std::vector<int> z_dims(const ZWindow& w, const ZContent& d) {
  std::vector<int> dims(w.modulus, 0);
  for (const auto& [c, m] : d) dims[w.vertex(c)] += m;
  return dims;
}

Multisegment z_class(const ZWindow& w,
                     const std::vector<std::pair<int, int>>& segs) {
  std::vector<Segment> out;
  for (const auto& [start, len] : segs) out.push_back({w.vertex(start), len});
  return Multisegment(out, w.modulus);
}

namespace {

struct SplitWork {
  int n;  // cyclic modulus
  const std::vector<std::vector<int>>* layers;
  const ZWindow* w;
  HallCtx* lin;
  HallVec* out;
  Laurent scale;
  std::vector<ZContent> lifted;
};

void split_layers(SplitWork& s, size_t k, ZContent& pool);

// draw the residue profile of layer k out of the pool, residue by residue
void draw_residue(SplitWork& s, size_t k, ZContent& pool, ZContent& acc,
                  int res) {
  if (res == s.n) {
    for (const auto& [c, m] : acc) pool[c] -= m;
    s.lifted.push_back(acc);
    split_layers(s, k + 1, pool);
    s.lifted.pop_back();
    for (const auto& [c, m] : acc) pool[c] += m;
    return;
  }
  int need = (*s.layers)[k][res];
  std::vector<std::pair<int, int>> avail;  // content, multiplicity left
  for (const auto& [c, m] : pool)
    if (((c % s.n) + s.n) % s.n == res && m > 0) avail.push_back({c, m});
  std::function<void(size_t, int)> choose = [&](size_t from, int left) {
    if (left == 0) {
      draw_residue(s, k, pool, acc, res + 1);
      return;
    }
    if (from == avail.size()) return;
    int cap = std::min(avail[from].second, left);
    for (int t = cap; t >= 0; --t) {
      if (t > 0) acc[avail[from].first] = t;
      choose(from + 1, left - t);
      acc.erase(avail[from].first);
    }
  };
  choose(0, need);
}

void split_layers(SplitWork& s, size_t k, ZContent& pool) {
  if (k == s.layers->size()) {
    int e = 0;
    for (size_t a = 0; a < s.lifted.size(); ++a) {
      e += h_weight(s.lifted[a], s.n);
      for (size_t b = a + 1; b < s.lifted.size(); ++b)
        e -= k_twist(s.lifted[b], s.lifted[a], s.n);
    }
    std::vector<std::vector<int>> win;
    for (const ZContent& c : s.lifted) win.push_back(z_dims(*s.w, c));
    Laurent c = s.scale;
    c.shift_mul(1, e - big_m(win));
    HallVec fm = flag_monomial(*s.lin, win);
    for (const auto& [cls, q] : fm) hall_add(*s.out, cls, q * c);
    return;
  }
  ZContent acc;
  draw_residue(s, k, pool, acc, 0);
}

}  // namespace

HallVec gamma_map(HallCtx& cyc, HallCtx& lin, const ZWindow& w,
                  const ZContent& d, const HallVec& f) {
  QF_CHECK(lin.n == w.modulus, "gamma_map: ambient modulus mismatch");
  std::vector<int> dbar(cyc.n, 0);
  for (const auto& [c, m] : d) dbar[((c % cyc.n) + cyc.n) % cyc.n] += m;
  HallVec out;
  for (const auto& [cls, coeff] : f) {
    QF_CHECK(cls.dim_vector() == dbar, "gamma_map: incompatible gradings");
    for (const auto& [jcls, mc] : orbit_in_monomials(cyc, cls)) {
      auto layers = kernel_layers(jcls);
      if (layers.empty()) {
        hall_add(out, zero_class(std::vector<int>(w.modulus, 0), w.modulus),
                 coeff * mc);
        continue;
      }
      SplitWork s;
      s.n = cyc.n;
      s.layers = &layers;
      s.w = &w;
      s.lin = &lin;
      s.out = &out;
      s.scale = coeff * mc;
      s.scale.shift_mul(1, big_m(layers));
      ZContent pool = d;
      split_layers(s, 0, pool);
    }
  }
  return out;
}

FockVec hall_action(HallCtx& hall, const FockCtx& fock, const HallVec& x,
                    const FockVec& y) {
  QF_CHECK(hall.n == fock.n, "hall_action: rank mismatch");
  FockVec out;
  for (const auto& [cls, coeff] : x) {
    for (const auto& [jcls, mc] : orbit_in_monomials(hall, cls)) {
      auto layers = kernel_layers(jcls);
      FockVec cur = y;
      for (int k = (int)layers.size() - 1; k >= 0 && !cur.empty(); --k)
        cur = f_content(fock, cur, layers[k]);
      Laurent w = coeff * mc;
      w.shift_mul(1, big_m(layers));
      for (const auto& [p, c] : cur) fock_add(out, p, c * w);
    }
  }
  return out;
}

namespace {

struct LiftWork {
  int n;
  const std::vector<std::vector<int>>* layers;
  FockVec* out;
  const Laurent* scale;  // carries big_m of the cyclic layers
};

// apply the boxes of one chosen layer lift, largest content first
std::optional<Partition> apply_layer(const Partition& p, const ZContent& c) {
  Partition cur = p;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    QF_CHECK(it->second == 1, "apply_layer: repeated content");
    auto nxt = grow_at_content(cur, it->first);
    if (!nxt) return std::nullopt;
    cur = *nxt;
  }
  return cur;
}

void lift_layer(LiftWork& w, int k, const Partition& p, int e);

// enumerate the content set of layer k residue by residue on the current
// shape, then apply it and move one layer to the left
void lift_residue(LiftWork& w, int k, const Partition& p, int e,
                  ZContent& set, int res, int lo, int hi) {
  if (res == w.n) {
    auto nxt = apply_layer(p, set);
    if (!nxt) return;
    int we = e + h_weight(set, w.n);
    for (const auto& [c, m] : set) we += m * diag_above(p, c, w.n);
    if (k == 0) {
      Laurent term = *w.scale;
      term.shift_mul(1, we);
      fock_add(*w.out, *nxt, term);
    } else {
      lift_layer(w, k - 1, *nxt, we);
    }
    return;
  }
  int need = (*w.layers)[k][res];
  if (need == 0) {
    lift_residue(w, k, p, e, set, res + 1, lo, hi);
    return;
  }
  std::vector<int> spots;
  for (int c = lo + ((res - lo) % w.n + w.n) % w.n; c <= hi; c += w.n)
    spots.push_back(c);
  if ((int)spots.size() < need) return;
  std::vector<int> pick(need);
  std::function<void(int, int)> choose = [&](int from, int got) {
    if (got == need) {
      for (int c : pick) set[c] = 1;
      lift_residue(w, k, p, e, set, res + 1, lo, hi);
      for (int c : pick) set.erase(c);
      return;
    }
    for (int s = from; s <= (int)spots.size() - (need - got); ++s) {
      pick[got] = spots[s];
      choose(s + 1, got + 1);
    }
  };
  choose(0, 0);
}

void lift_layer(LiftWork& w, int k, const Partition& p, int e) {
  int boxes = 0;
  for (int r = 0; r < w.n; ++r) boxes += (*w.layers)[k][r];
  if (boxes == 0) {
    if (k == 0) {
      Laurent term = *w.scale;
      term.shift_mul(1, e);
      fock_add(*w.out, p, term);
    } else {
      lift_layer(w, k - 1, p, e);
    }
    return;
  }
  // addable contents of anything between p and p plus this layer
  int lo = -((int)p.size()) - boxes;
  int hi = (p.empty() ? 0 : p[0]) + boxes;
  ZContent set;
  lift_residue(w, k, p, e, set, 0, lo, hi);
}

}  // namespace

FockVec hall_action_lifts(HallCtx& hall, const HallVec& x, const FockVec& y) {
  FockVec out;
  for (const auto& [lam, cy] : y) {
    for (const auto& [cls, coeff] : x) {
      for (const auto& [jcls, mc] : orbit_in_monomials(hall, cls)) {
        auto layers = kernel_layers(jcls);
        Laurent scale = coeff * mc * cy;
        if (layers.empty()) {
          fock_add(out, lam, scale);
          continue;
        }
        scale.shift_mul(1, big_m(layers));
        LiftWork w;
        w.n = hall.n;
        w.layers = &layers;
        w.out = &out;
        w.scale = &scale;
        lift_layer(w, (int)layers.size() - 1, lam, 0);
      }
    }
  }
  return out;
}

}  // namespace qfock
