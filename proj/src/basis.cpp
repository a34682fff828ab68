#include "qfock/basis.hpp"

#include <map>

#include "json.hpp"
#include "qfock/hallcount.hpp"

namespace qfock {

namespace {

std::vector<Partition> weight_ptns(const FockCtx& ctx, int weight) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(weight))
    if (!ctx.finite() || (int)p.size() <= ctx.l) out.push_back(p);
  return out;
}

FockVec vacuum() {
  FockVec x;
  x.emplace(Partition{}, Laurent(1));
  return x;
}

// the bar-symmetric combination matching every power of c outside the
// allowed lattice (sign +1: v Z[v], sign -1: v^-1 Z[v^-1])
Laurent symmetric_core(const Laurent& c, int sign) {
  Laurent a;
  for (const auto& [e, q] : c.terms()) {
    if (sign > 0 ? e > 0 : e < 0) continue;
    a = a + Laurent(q, e);
    if (e != 0) a = a + Laurent(q, -e);
  }
  return a;
}

FockVec column_seed(const FockCtx& ctx, const Partition& lam) {
  FockVec cur = vacuum();
  int cols = lam.empty() ? 0 : lam[0];
  for (int col = 1; col <= cols; ++col)
    cur = f_content(ctx, cur, column_residue_content(lam, col, ctx.n));
  return cur;
}

FockVec hall_seed(HallCtx& hctx, const FockCtx& ctx, const Partition& lam) {
  if (lam.empty()) return vacuum();
  Multisegment o = class_of_partition(lam, ctx.n);
  FockVec x = hall_action(hctx, ctx, hall_canonical(hctx, o), vacuum());
  // the bar-fixed line sits at v^{-2 dim O} times the display form
  return fock_scale(x, Laurent::v(-2 * (int)dim_orbit(o)));
}

bool seed_ok(const FockVec& s, const Partition& lam,
             const std::map<Partition, size_t>& pos, size_t idx) {
  auto it = s.find(lam);
  if (it == s.end() || !(it->second == Laurent(1))) return false;
  for (const auto& [mu, c] : s) {
    auto p = pos.find(mu);
    if (p == pos.end() || p->second < idx) return false;
  }
  return true;
}

std::map<Partition, size_t> positions(const std::vector<Partition>& ptns) {
  std::map<Partition, size_t> pos;
  for (size_t i = 0; i < ptns.size(); ++i) pos.emplace(ptns[i], i);
  return pos;
}

void fill_table(BasisTable& t, const std::vector<FockVec>& cols) {
  size_t m = t.ptns.size();
  t.coef.assign(m, std::vector<Laurent>(m));
  for (size_t j = 0; j < m; ++j)
    for (const auto& [mu, c] : cols[j]) {
      size_t i = 0;
      while (t.ptns[i] != mu) ++i;
      t.coef[i][j] = c;
    }
}

}  // namespace

const Laurent& BasisTable::at(const Partition& row, const Partition& col) const {
  size_t i = 0, j = 0;
  while (i < ptns.size() && ptns[i] != row) ++i;
  while (j < ptns.size() && ptns[j] != col) ++j;
  QF_CHECK(i < ptns.size() && j < ptns.size(), "table: no such partition");
  return coef[i][j];
}

BasisTable lt_basis(HallCtx& hctx, const FockCtx& ctx, int weight, int sign,
                    bool hall_seeds) {
  QF_CHECK(sign == 1 || sign == -1, "lt basis: sign is +1 or -1");
  QF_CHECK(hctx.n == ctx.n, "lt basis: contexts disagree on n");
  BasisTable t{ctx.n, weight, ctx.l, weight_ptns(ctx, weight), {}};
  auto pos = positions(t.ptns);
  size_t m = t.ptns.size();
  std::vector<FockVec> cols(m);
  for (size_t i = m; i-- > 0;) {
    const Partition& lam = t.ptns[i];
    FockVec a;
    if (!hall_seeds) a = column_seed(ctx, lam);
    if (hall_seeds || !seed_ok(a, lam, pos, i)) {
      a = hall_seed(hctx, ctx, lam);
      QF_CHECK(seed_ok(a, lam, pos, i), "lt basis: no unitriangular seed");
    }
    for (size_t j = i + 1; j < m; ++j) {
      auto it = a.find(t.ptns[j]);
      if (it == a.end()) continue;
      Laurent core = symmetric_core(it->second, sign);
      if (!core.is_zero()) a = fock_sum(a, fock_scale(cols[j], -core));
    }
    QF_CHECK(a.at(lam) == Laurent(1), "lt basis: lead fell off 1");
    for (const auto& [mu, c] : a)
      if (mu != lam)
        QF_CHECK(sign > 0 ? c.in_v_pos() : c.in_v_neg(),
                 "lt basis: residue outside the lattice");
    QF_CHECK(psi_fock(ctx, a) == a, "lt basis: not bar-fixed");
    cols[i] = std::move(a);
  }
  fill_table(t, cols);
  return t;
}

BasisTable hall_basis_B(HallCtx& hctx, const FockCtx& ctx, int weight) {
  QF_CHECK(hctx.n == ctx.n, "hall basis: contexts disagree on n");
  BasisTable t{ctx.n, weight, ctx.l, weight_ptns(ctx, weight), {}};
  auto pos = positions(t.ptns);
  size_t m = t.ptns.size();
  std::vector<FockVec> cols(m);
  for (size_t j = 0; j < m; ++j) {
    cols[j] = hall_seed(hctx, ctx, t.ptns[j]);
    QF_CHECK(seed_ok(cols[j], t.ptns[j], pos, j),
             "hall basis: column is not unitriangular");
  }
  fill_table(t, cols);
  return t;
}

IntTable decomposition_matrix(int n, int weight) {
  HallCtx hctx{n};
  FockCtx ctx{n};
  BasisTable t = lt_basis(hctx, ctx, weight, 1);
  IntTable d{n, weight, t.ptns, {}};
  size_t m = t.ptns.size();
  d.m.assign(m, std::vector<mpz_class>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) d.m[i][j] = t.coef[i][j].eval_at_one();
  return d;
}

namespace {

std::string csv_label(const Partition& p) { return "\"" + ptn_str(p) + "\""; }

std::string latex_poly(const Laurent& c) {
  if (c.is_zero()) return "0";
  std::string s;
  const auto& ts = c.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    mpz_class a = it->second < 0 ? mpz_class(-it->second) : it->second;
    if (s.empty()) {
      if (it->second < 0) s += "-";
    } else {
      s += it->second < 0 ? " - " : " + ";
    }
    int e = it->first;
    if (e == 0) s += a.get_str();
    else {
      if (a != 1) s += a.get_str();
      s += "v";
      if (e != 1) s += "^{" + std::to_string(e) + "}";
    }
  }
  return s;
}

std::string latex_label(const Partition& p) {
  std::string s = ptn_str(p);
  return "$" + s + "$";
}

template <class Cell>
std::string latex_tabular(int n, int weight, const std::vector<Partition>& ptns,
                          Cell cell) {
  std::string s = "% n " + std::to_string(n) + ", weight " +
                  std::to_string(weight) + "\n\\begin{tabular}{l";
  for (size_t j = 0; j < ptns.size(); ++j) s += "r";
  s += "}\n";
  for (const Partition& p : ptns) s += " & " + latex_label(p);
  s += " \\\\\n\\hline\n";
  for (size_t i = 0; i < ptns.size(); ++i) {
    s += latex_label(ptns[i]);
    for (size_t j = 0; j < ptns.size(); ++j) s += " & $" + cell(i, j) + "$";
    s += " \\\\\n";
  }
  s += "\\end{tabular}\n";
  return s;
}

}  // namespace

std::string table_json(const BasisTable& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["weight"] = t.weight;
  j["l"] = t.l;
  nlohmann::json ps = nlohmann::json::array();
  for (const Partition& p : t.ptns) ps.push_back(ptn_str(p));
  j["partitions"] = ps;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.coef) {
    nlohmann::json r = nlohmann::json::array();
    for (const Laurent& c : row) r.push_back(c.to_json());
    rows.push_back(r);
  }
  j["coef"] = rows;
  return j.dump(2) + "\n";
}

std::string table_csv(const BasisTable& t) {
  std::string s = "basis";
  for (const Partition& p : t.ptns) s += "," + csv_label(p);
  s += "\n";
  for (size_t i = 0; i < t.ptns.size(); ++i) {
    s += csv_label(t.ptns[i]);
    for (size_t j = 0; j < t.ptns.size(); ++j)
      s += "," + t.coef[i][j].eval_at_one().get_str();
    s += "\n";
  }
  return s;
}

std::string table_latex(const BasisTable& t) {
  return latex_tabular(t.n, t.weight, t.ptns, [&](size_t i, size_t j) {
    return latex_poly(t.coef[i][j]);
  });
}

std::string int_table_json(const IntTable& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["weight"] = t.weight;
  nlohmann::json ps = nlohmann::json::array();
  for (const Partition& p : t.ptns) ps.push_back(ptn_str(p));
  j["partitions"] = ps;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.m) {
    nlohmann::json r = nlohmann::json::array();
    for (const mpz_class& c : row) r.push_back(c.get_str());
    rows.push_back(r);
  }
  j["matrix"] = rows;
  return j.dump(2) + "\n";
}

std::string int_table_csv(const IntTable& t) {
  std::string s = "partition";
  for (const Partition& p : t.ptns) s += "," + csv_label(p);
  s += "\n";
  for (size_t i = 0; i < t.ptns.size(); ++i) {
    s += csv_label(t.ptns[i]);
    for (size_t j = 0; j < t.ptns.size(); ++j) s += "," + t.m[i][j].get_str();
    s += "\n";
  }
  return s;
}

std::string int_table_latex(const IntTable& t) {
  return latex_tabular(t.n, t.weight, t.ptns, [&](size_t i, size_t j) {
    return t.m[i][j].get_str();
  });
}

}  // namespace qfock
