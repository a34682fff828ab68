#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qfock/fock.hpp"

using namespace qfock;

static FockVec unit(const std::string& s) {
  FockVec x;
  x.emplace(ptn_parse(s), Laurent(1));
  return x;
}

static std::vector<int> eps(int n, int r, int mult = 1) {
  std::vector<int> a(n, 0);
  a[r] += mult;
  return a;
}

// quantum integer [m] = (v^m - v^-m)/(v - v^-1)
static Laurent qint(int m) {
  if (m < 0) return -qint(-m);
  Laurent s;
  for (int k = 0; k < m; ++k) s += Laurent(1, m - 1 - 2 * k);
  return s;
}

TEST_CASE("vector helpers cancel exactly") {
  FockVec x = unit("(2)");
  fock_add(x, ptn_parse("(1,1)"), Laurent::v(1));
  CHECK(x.size() == 2);
  fock_add(x, ptn_parse("(2)"), Laurent(-1));
  CHECK(x.size() == 1);
  FockVec y = fock_scale(x, Laurent::v(-1));
  CHECK(y.at(ptn_parse("(1,1)")) == Laurent(1));
  CHECK(fock_sum(x, fock_scale(x, Laurent(-1))).empty());
}

TEST_CASE("single-box wedge action, small cases") {
  FockCtx c2{2};
  FockVec vac = unit("0");
  FockVec one = f_content(c2, vac, eps(2, 0));
  CHECK(one == unit("(1)"));
  CHECK(f_content(c2, vac, eps(2, 1)).empty());

  FockVec two = f_content(c2, one, eps(2, 1));
  FockVec want = unit("(2)");
  fock_add(want, ptn_parse("(1,1)"), Laurent::v(1));
  CHECK(two == want);

  // two boxes of the same residue never fit on one diagonal pair
  CHECK(f_content(c2, vac, eps(2, 0, 2)).empty());

  FockCtx c3{3};
  CHECK(f_content(c3, vac, eps(3, 0)) == unit("(1)"));
  CHECK(f_content(c3, vac, eps(3, 2)).empty());
}

TEST_CASE("wedge action with a single box matches the residue operator") {
  for (int n : {2, 3}) {
    FockCtx ctx{n};
    for (int w = 0; w <= 4; ++w)
      for (const auto& p : partitions_of(w)) {
        FockVec x;
        x.emplace(p, Laurent(1));
        for (int r = 0; r < n; ++r)
          CHECK(f_content(ctx, x, eps(n, r)) == hayashi_f(ctx, x, r));
      }
  }
}

TEST_CASE("residue operators satisfy the rank-one commutation relation") {
  for (int n : {2, 3}) {
    FockCtx ctx{n};
    for (int w = 0; w <= 4; ++w)
      for (const auto& p : partitions_of(w)) {
        FockVec x;
        x.emplace(p, Laurent(1));
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            FockVec lhs = fock_sum(
                hayashi_e(ctx, hayashi_f(ctx, x, s), r),
                fock_scale(hayashi_f(ctx, hayashi_e(ctx, x, r), s),
                           Laurent(-1)));
            FockVec rhs;
            if (r == s)
              rhs = fock_scale(x, qint(diag_total(p, r, n)));
            CHECK(lhs == rhs);
          }
      }
  }
}

TEST_CASE("wedge action adds exactly the requested residues") {
  for (int n : {2, 3}) {
    FockCtx ctx{n};
    std::vector<std::vector<int>> contents;
    contents.push_back(eps(n, 0));
    {
      std::vector<int> a(n, 0);
      a[0] = 1;
      a[1 % n] += 1;
      contents.push_back(a);
      a[n - 1] += 1;
      contents.push_back(a);
    }
    for (int w = 0; w <= 3; ++w)
      for (const auto& p : partitions_of(w)) {
        FockVec x;
        x.emplace(p, Laurent(1));
        auto base = residue_content(p, n);
        for (const auto& a : contents) {
          int total = 0;
          for (int t : a) total += t;
          for (const auto& [q, c] : f_content(ctx, x, a)) {
            CHECK(ptn_weight(q) == w + total);
            auto rc = residue_content(q, n);
            for (int r = 0; r < n; ++r) CHECK(rc[r] - base[r] == a[r]);
            CHECK(!c.is_zero());
          }
        }
      }
  }
}

TEST_CASE("bar involution fixes the vacuum and the first interesting sum") {
  for (int n : {2, 3}) {
    FockCtx ctx{n};
    CHECK(psi_fock(ctx, unit("0")) == unit("0"));
    CHECK(psi_fock(ctx, unit("(1)")) == unit("(1)"));
  }
  FockCtx c2{2};
  FockVec u = unit("(2)");
  fock_add(u, ptn_parse("(1,1)"), Laurent::v(1));
  CHECK(psi_fock(c2, u) == u);
}

TEST_CASE("bar involution squares to the identity") {
  for (int n : {2, 3}) {
    FockCtx ctx{n};
    for (int w = 0; w <= 4; ++w)
      for (const auto& p : partitions_of(w)) {
        FockVec x;
        x.emplace(p, Laurent(1));
        CHECK(psi_fock(ctx, psi_fock(ctx, x)) == x);
      }
  }
}

TEST_CASE("bar involution is semilinear") {
  FockCtx c2{2};
  FockVec x = unit("(2,1)");
  Laurent c = Laurent(3, 2) + Laurent(-1, -1);
  CHECK(psi_fock(c2, fock_scale(x, c)) ==
        fock_scale(psi_fock(c2, x), c.bar()));
}

TEST_CASE("finite wedge agrees with the full space inside its range") {
  for (int n : {2, 3}) {
    FockCtx full{n};
    FockCtx fin{n, 5};
    for (int w = 0; w <= 4; ++w)
      for (const auto& p : partitions_of(w)) {
        if ((int)p.size() > 4) continue;
        FockVec x;
        x.emplace(p, Laurent(1));
        for (int r = 0; r < n; ++r)
          CHECK(f_content(fin, x, eps(n, r)) == f_content(full, x, eps(n, r)));
        CHECK(psi_fock(fin, x) == psi_fock(full, x));
      }
  }
}

TEST_CASE("finite wedge composition reproduces the dominant pair") {
  FockCtx fin{2, 2};
  FockVec u = f_content(fin, f_content(fin, unit("0"), eps(2, 0)), eps(2, 1));
  FockVec want = unit("(2)");
  fock_add(want, ptn_parse("(1,1)"), Laurent::v(1));
  CHECK(u == want);
}
