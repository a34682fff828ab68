#include "qfock/fock.hpp"

#include <functional>

namespace qfock {

void fock_add(FockVec& x, const Partition& p, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = x.find(p);
  if (it == x.end()) {
    x.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

FockVec fock_scale(const FockVec& x, const Laurent& c) {
  FockVec out;
  if (c.is_zero()) return out;
  for (const auto& [p, a] : x) out.emplace(p, a * c);
  return out;
}

FockVec fock_sum(const FockVec& x, const FockVec& y) {
  FockVec out = x;
  for (const auto& [p, a] : y) fock_add(out, p, a);
  return out;
}

static int res_of(int x, int n) { return ((x % n) + n) % n; }

// all shift subsets with the requested residue content, with weights
static void f_content_word(const Word& w, const std::vector<int>& alpha, int n,
                           TensorVec& out, const Laurent& scale) {
  const int l = (int)w.size();
  std::vector<int> rem = alpha;
  std::vector<int> picked;
  std::function<void(int, int)> rec = [&](int t, int left) {
    if (left == 0) {
      int c = 0;
      std::vector<char> sel(l, 0);
      for (int s : picked) sel[s] = 1;
      for (int tt = 0; tt < l; ++tt) {
        if (!sel[tt]) continue;
        for (int s = 0; s < tt; ++s) {
          if (sel[s]) continue;
          if (res_of(w[s], n) == res_of(w[tt], n)) ++c;
          if (res_of(w[s], n) == res_of(w[tt] + 1, n)) --c;
        }
      }
      Word u = w;
      for (int s : picked) u[s]++;
      for (int k = 1; k < l; ++k)
        if (u[k - 1] == u[k]) return;  // repeated index dies
      add_term(out, u, scale * Laurent(1, c));
      return;
    }
    if (t == l || l - t < left) return;
    rec(t + 1, left);  // skip position t
    int r = res_of(w[t], n);
    if (rem[r] > 0) {
      rem[r]--;
      picked.push_back(t);
      rec(t + 1, left - 1);
      picked.pop_back();
      rem[r]++;
    }
  };
  int total = 0;
  for (int a : alpha) total += a;
  rec(0, total);
}

static FockVec to_partitions(const TensorVec& x) {
  FockVec out;
  for (const auto& [w, c] : x) {
    auto p = partition_of_word(w);
    QF_CHECK(p.has_value(), "wedge term left the partition range");
    fock_add(out, *p, c);
  }
  return out;
}

FockVec f_content(const FockCtx& ctx, const FockVec& x,
                  const std::vector<int>& alpha) {
  QF_CHECK((int)alpha.size() == ctx.n, "content vector has wrong size");
  int total = 0;
  for (int a : alpha) {
    QF_CHECK(a >= 0, "negative content");
    total += a;
  }
  FockVec out;
  for (const auto& [p, coeff] : x) {
    if (ctx.finite()) {
      QF_CHECK((int)p.size() <= ctx.l, "partition too long for finite wedge");
      TensorVec acc;
      f_content_word(word_of_partition(p, ctx.l), alpha, ctx.n, acc, coeff);
      out = fock_sum(out, to_partitions(acc));
    } else {
      const int n = ctx.n;
      int need = (int)p.size() + (p.empty() ? 0 : p[0]) + n * total + 1;
      int l = n * ((need + n - 1) / n);
      TensorVec acc, again;
      f_content_word(word_of_partition(p, l), alpha, n, acc, coeff);
      f_content_word(word_of_partition(p, l + n), alpha, n, again, coeff);
      FockVec a = to_partitions(acc), b = to_partitions(again);
      QF_CHECK(a == b, "window instability in the wedge action");
      out = fock_sum(out, a);
    }
  }
  return out;
}

FockVec hayashi_f(const FockCtx& ctx, const FockVec& x, int res) {
  QF_CHECK(!ctx.finite(), "residue operators act on the full space");
  FockVec out;
  for (const auto& [p, coeff] : x) {
    int top = p.empty() ? 1 : p[0] + 1;
    for (int i = -(int)p.size() - 1; i <= top; ++i) {
      if (res_of(i, ctx.n) != res_of(res, ctx.n)) continue;
      auto q = grow_at_content(p, i);
      if (!q) continue;
      fock_add(out, *q, coeff * Laurent(1, diag_above(p, i, ctx.n)));
    }
  }
  return out;
}

FockVec hayashi_e(const FockCtx& ctx, const FockVec& x, int res) {
  QF_CHECK(!ctx.finite(), "residue operators act on the full space");
  FockVec out;
  for (const auto& [p, coeff] : x) {
    int top = p.empty() ? 1 : p[0] + 1;
    for (int i = -(int)p.size() - 1; i <= top; ++i) {
      if (res_of(i, ctx.n) != res_of(res, ctx.n)) continue;
      auto q = shrink_at_content(p, i);
      if (!q) continue;
      fock_add(out, *q, coeff * Laurent(1, -diag_below(p, i, ctx.n)));
    }
  }
  return out;
}

FockVec psi_fock(const FockCtx& ctx, const FockVec& x) {
  FockVec out;
  for (const auto& [p, coeff] : x) {
    TensorVec one;
    if (ctx.finite()) {
      QF_CHECK((int)p.size() <= ctx.l, "partition too long for finite wedge");
      one.emplace(word_of_partition(p, ctx.l), coeff);
      out = fock_sum(out, to_partitions(psi_wedge(one, ctx.n)));
    } else {
      const int n = ctx.n;
      int need = ptn_weight(p) + (int)p.size() + (p.empty() ? 0 : p[0]) + 1;
      int l = n * ((need + n - 1) / n);
      one.emplace(word_of_partition(p, l), coeff);
      FockVec a = to_partitions(psi_wedge(one, n));
      TensorVec two;
      two.emplace(word_of_partition(p, l + n), coeff);
      FockVec b = to_partitions(psi_wedge(two, n));
      QF_CHECK(a == b, "window instability in the bar involution");
      out = fock_sum(out, a);
    }
  }
  return out;
}

}  // namespace qfock
