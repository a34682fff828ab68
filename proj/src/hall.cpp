#include "qfock/hall.hpp"

#include "qfock/interpolate.hpp"
#include "qfock/threads.hpp"

namespace qfock {

void hall_add(HallVec& x, const Multisegment& c, const Laurent& coeff) {
  if (coeff.is_zero()) return;
  auto it = x.find(c);
  if (it == x.end()) {
    x.emplace(c, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) x.erase(it);
  }
}

HallVec hall_scale(const HallVec& x, const Laurent& coeff) {
  HallVec out;
  if (coeff.is_zero()) return out;
  for (const auto& [c, a] : x) out.emplace(c, a * coeff);
  return out;
}

HallVec hall_sum(const HallVec& x, const HallVec& y) {
  HallVec out = x;
  for (const auto& [c, a] : y) hall_add(out, c, a);
  return out;
}

HallVec f_class(const Multisegment& c) {
  HallVec out;
  out.emplace(c, Laurent(1));
  return out;
}

Multisegment zero_class(const std::vector<int>& dim, int n) {
  std::vector<Segment> segs;
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < dim[i]; ++t) segs.push_back({i, 1});
  return Multisegment(segs, n);
}

int m_twist(const std::vector<int>& b, const std::vector<int>& a) {
  QF_CHECK(a.size() == b.size(), "dimension vectors of different quivers");
  const int n = (int)a.size();
  int m = 0;
  for (int i = 0; i < n; ++i) m += b[i] * a[i] + b[i] * a[(i + 1) % n];
  return m;
}

int big_m(const std::vector<std::vector<int>>& layers) {
  int m = 0;
  for (size_t k = 0; k < layers.size(); ++k) {
    std::vector<int> later(layers[k].size(), 0);
    for (size_t j = k + 1; j < layers.size(); ++j)
      for (size_t i = 0; i < later.size(); ++i) later[i] += layers[j][i];
    m += m_twist(later, layers[k]);
  }
  return m;
}

// sampling grid plus the evaluations already memoized for those primes
static Laurent fit_counts(HallCtx& ctx, const std::string& key, int degree,
                          const std::function<mpz_class(long)>& eval) {
  auto hit = ctx.polys.find(key);
  if (hit != ctx.polys.end()) return hit->second;
  if (ctx.disk) {
    if (auto j = ctx.disk->get(key)) {
      Laurent p = Laurent::from_json(*j);
      ctx.polys.emplace(key, p);
      return p;
    }
  }
  std::vector<long> primes = first_primes(degree + 1);
  std::vector<std::pair<long, mpz_class>> points(primes.size());
  parallel_for((int)primes.size(), ctx.threads, [&](int i) {
    points[i] = {primes[i], eval(primes[i])};
  });
  Laurent p = fit_polynomial_in_q(points, degree);
  ctx.polys.emplace(key, p);
  if (ctx.disk) ctx.disk->put(key, p.to_json());
  return p;
}

Laurent flags_poly(HallCtx& ctx, const Multisegment& amb,
                   const std::vector<std::vector<int>>& layers) {
  int degree = 0;
  for (size_t k = 0; k < layers.size(); ++k)
    for (size_t l = k + 1; l < layers.size(); ++l)
      for (size_t i = 0; i < layers[k].size(); ++i)
        degree += layers[k][i] * layers[l][i];
  std::string key = "flags|" + std::to_string(ctx.n) + "|" + amb.str() + "|" +
                    dims_key(layers);
  for (long p : first_primes(degree + 1)) ctx.flag_memos[p];
  return fit_counts(ctx, key, degree, [&](long p) {
    return count_stable_flags(amb, layers, p, ctx.flag_memos.at(p));
  });
}

Laurent subobject_poly(HallCtx& ctx, const Multisegment& amb,
                       const Multisegment& sub, const Multisegment& quot) {
  auto a = sub.dim_vector(), b = quot.dim_vector();
  int degree = 0;
  for (size_t i = 0; i < a.size(); ++i) degree += a[i] * b[i];
  std::string key = "sub|" + std::to_string(ctx.n) + "|" + amb.str() + "|" +
                    sub.str() + "|" + quot.str();
  std::string bucket_base =
      amb.str() + "|" + dims_key({a}) + "|";
  for (long p : first_primes(degree + 1)) ctx.sub_memos[bucket_base + std::to_string(p)];
  return fit_counts(ctx, key, degree, [&](long p) {
    auto& bucket = ctx.sub_memos.at(bucket_base + std::to_string(p));
    if (bucket.empty()) bucket = count_subobjects_by_type(amb, a, p);
    auto it = bucket.find({sub.str(), quot.str()});
    return it == bucket.end() ? mpz_class(0) : it->second;
  });
}

HallVec hall_product(HallCtx& ctx, const HallVec& f, const HallVec& g) {
  HallVec out;
  for (const auto& [A, ca] : f)
    for (const auto& [B, cb] : g) {
      auto a = A.dim_vector(), b = B.dim_vector();
      std::vector<int> total(a.size());
      for (size_t i = 0; i < a.size(); ++i) total[i] = a[i] + b[i];
      int twist = m_twist(b, a);
      for (const auto& C : classes_of_dim(total)) {
        Laurent count = subobject_poly(ctx, C, A, B);
        if (count.is_zero()) continue;
        int e = (int)(dim_orbit(A) + dim_orbit(B) - dim_orbit(C)) - twist;
        hall_add(out, C, (ca * cb * count.compose_power(2)).shift_mul(1, e));
      }
    }
  return out;
}

HallVec flag_monomial(HallCtx& ctx,
                      const std::vector<std::vector<int>>& layers) {
  QF_CHECK(!layers.empty(), "empty flag type");
  std::vector<int> total(layers[0].size(), 0);
  for (const auto& d : layers)
    for (size_t i = 0; i < d.size(); ++i) total[i] += d[i];
  HallVec out;
  for (const auto& O : classes_of_dim(total)) {
    Laurent phi = flags_poly(ctx, O, layers);
    if (phi.is_zero()) continue;
    hall_add(out, O,
             phi.compose_power(2).shift_mul(1, -(int)dim_orbit(O)));
  }
  return out;
}

HallVec flag_monomial_by_product(HallCtx& ctx,
                                 const std::vector<std::vector<int>>& layers) {
  QF_CHECK(!layers.empty(), "empty flag type");
  HallVec acc = f_class(zero_class(layers.back(), ctx.n));
  for (int k = (int)layers.size() - 2; k >= 0; --k)
    acc = hall_product(ctx, f_class(zero_class(layers[k], ctx.n)), acc);
  return hall_scale(acc, Laurent::v(big_m(layers)));
}

// listing order and flag monomial rows shared by the expansion routines
struct MonomialFrame {
  std::vector<Multisegment> classes;           // big orbits first
  std::vector<std::vector<Laurent>> t;         // t[i][j]: f_{O_j} in F_{J(O_i)}
  std::vector<int> m;                          // M of the Jordan layers
};

static MonomialFrame monomial_frame(HallCtx& ctx, const std::vector<int>& dim) {
  MonomialFrame fr;
  fr.classes = classes_of_dim(dim);
  const size_t count = fr.classes.size();
  std::map<Multisegment, size_t> index;
  for (size_t j = 0; j < count; ++j) index.emplace(fr.classes[j], j);
  fr.t.assign(count, std::vector<Laurent>(count));
  for (size_t i = 0; i < count; ++i) {
    auto layers = kernel_layers(fr.classes[i]);
    fr.m.push_back(big_m(layers));
    for (const auto& [c, coeff] : flag_monomial(ctx, layers)) {
      size_t j = index.at(c);
      QF_CHECK(j >= i, "flag monomial left the closure");
      fr.t[i][j] = coeff;
    }
    QF_CHECK(fr.t[i][i] == Laurent::v(-(int)dim_orbit(fr.classes[i])),
             "Jordan flag not unique on its own class");
  }
  return fr;
}

// solve x . T = rhs by forward substitution on the monomial diagonal
static std::vector<Laurent> monomial_solve(const MonomialFrame& fr,
                                           const std::vector<Laurent>& rhs) {
  const size_t count = fr.classes.size();
  std::vector<Laurent> x(count);
  for (size_t j = 0; j < count; ++j) {
    Laurent acc = rhs[j];
    for (size_t i = 0; i < j; ++i)
      if (!x[i].is_zero() && !fr.t[i][j].is_zero()) acc -= x[i] * fr.t[i][j];
    x[j] = acc.shift_mul(1, (int)dim_orbit(fr.classes[j]));
  }
  return x;
}

std::map<Multisegment, Laurent> orbit_in_monomials(HallCtx& ctx,
                                                   const Multisegment& c) {
  MonomialFrame fr = monomial_frame(ctx, c.dim_vector());
  std::vector<Laurent> rhs(fr.classes.size());
  for (size_t j = 0; j < fr.classes.size(); ++j)
    if (fr.classes[j] == c) rhs[j] = Laurent(1);
  auto x = monomial_solve(fr, rhs);
  std::map<Multisegment, Laurent> out;
  for (size_t i = 0; i < fr.classes.size(); ++i)
    if (!x[i].is_zero()) out.emplace(fr.classes[i], x[i]);
  return out;
}

HallVec hall_bar(HallCtx& ctx, const HallVec& x) {
  std::map<std::vector<int>, HallVec> by_dim;
  for (const auto& [c, coeff] : x) by_dim[c.dim_vector()][c] = coeff;
  HallVec out;
  for (const auto& [dim, part] : by_dim) {
    MonomialFrame fr = monomial_frame(ctx, dim);
    std::vector<Laurent> rhs(fr.classes.size());
    for (size_t j = 0; j < fr.classes.size(); ++j) {
      auto it = part.find(fr.classes[j]);
      if (it != part.end()) rhs[j] = it->second;
    }
    auto coords = monomial_solve(fr, rhs);
    for (size_t i = 0; i < fr.classes.size(); ++i)
      coords[i] = coords[i].bar().shift_mul(1, -2 * fr.m[i]);
    for (size_t j = 0; j < fr.classes.size(); ++j) {
      Laurent acc;
      for (size_t i = 0; i <= j; ++i)
        if (!coords[i].is_zero()) acc += coords[i] * fr.t[i][j];
      hall_add(out, fr.classes[j], acc);
    }
  }
  return out;
}

std::map<Multisegment, HallVec> hall_canonical_all(HallCtx& ctx,
                                                   const std::vector<int>& dim) {
  MonomialFrame fr = monomial_frame(ctx, dim);
  const size_t count = fr.classes.size();
  std::vector<long> odim(count);
  for (size_t j = 0; j < count; ++j) odim[j] = dim_orbit(fr.classes[j]);

  // rescaled coordinates: g_O = v^{-2 dim O} f_O
  std::vector<std::vector<Laurent>> btilde(count);
  std::map<Multisegment, HallVec> out;
  for (size_t t = count; t-- > 0;) {
    QF_CHECK(fr.m[t] == (int)odim[t], "Jordan twist differs from orbit dim");
    // seed: the bar-fixed monomial v^{-M} F_{J(O_t)} in g coordinates
    std::vector<Laurent> cur(count);
    for (size_t j = t; j < count; ++j) {
      cur[j] = fr.t[t][j];
      cur[j].shift_mul(1, 2 * (int)odim[j] - fr.m[t]);
    }
    QF_CHECK(cur[t].is_one(), "seed is not unitriangular");
    for (size_t j = t + 1; j < count; ++j) {
      const Laurent& c = cur[j];
      if (c.is_zero()) continue;
      // bar-symmetric completion of the part outside v^-1 Z[v^-1]
      Laurent beta;
      for (int e = std::max(0, c.min_exp()); e <= c.max_exp(); ++e) {
        const mpz_class& a = c.coeff(e);
        if (a == 0) continue;
        beta += Laurent(a, e);
        if (e > 0) beta += Laurent(a, -e);
      }
      if (beta.is_zero()) continue;
      for (size_t k = j; k < count; ++k)
        if (!btilde[j][k].is_zero()) cur[k] -= beta * btilde[j][k];
    }
    for (size_t j = t + 1; j < count; ++j)
      QF_CHECK(cur[j].in_v_neg(), "correction left a nonnegative power");
    btilde[t] = cur;
    HallVec b;
    for (size_t j = t; j < count; ++j) {
      if (cur[j].is_zero()) continue;
      Laurent cf = cur[j];
      cf.shift_mul(1, 2 * ((int)odim[t] - (int)odim[j]));
      if (j > t) QF_CHECK(cf.in_v_pos(), "expected positive powers below top");
      b.emplace(fr.classes[j], cf);
    }
    QF_CHECK(b.at(fr.classes[t]).is_one(), "basis element lost its top term");
    out.emplace(fr.classes[t], std::move(b));
  }
  return out;
}

HallVec hall_canonical(HallCtx& ctx, const Multisegment& c) {
  return hall_canonical_all(ctx, c.dim_vector()).at(c);
}

}  // namespace qfock
