#include "qfock/partition.hpp"

#include <algorithm>

#include "qfock/laurent.hpp"

namespace qfock {

bool is_partition(const Partition& p) {
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
    if (k > 0 && p[k] > p[k - 1]) return false;
  }
  return true;
}

int ptn_weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

std::string ptn_str(const Partition& p) {
  std::string s = "(";
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p[k]);
  }
  return s + ")";
}

Partition ptn_parse(const std::string& s) {
  Partition p;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == ' ') continue;
    if (c == ',' || c == ')') {
      if (!cur.empty()) p.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) p.push_back(std::stoi(cur));
  while (!p.empty() && p.back() == 0) p.pop_back();
  QF_CHECK(is_partition(p), "not a partition: " + s);
  return p;
}

static void gen_partitions(int w, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
  if (w == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(w, maxpart); first >= 1; --first) {
    cur.push_back(first);
    gen_partitions(w - first, first, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int w) {
  QF_CHECK(w >= 0, "negative weight");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(w, w, cur, out);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0], 0);
  for (int part : p)
    for (int c = 0; c < part; ++c) q[c]++;
  return q;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  QF_CHECK(ptn_weight(a) == ptn_weight(b), "dominance needs equal weight");
  int sa = 0, sb = 0;
  for (size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    sa += k < a.size() ? a[k] : 0;
    sb += k < b.size() ? b[k] : 0;
    if (sa > sb) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> addable_boxes(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  int len = (int)p.size();
  for (int r = 1; r <= len + 1; ++r) {
    int row = r <= len ? p[r - 1] : 0;
    int prev = r == 1 ? INT32_MAX : p[r - 2];
    if (row < prev) out.push_back({r, row + 1});
  }
  return out;
}

std::vector<std::pair<int, int>> removable_boxes(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  int len = (int)p.size();
  for (int r = 1; r <= len; ++r) {
    int next = r < len ? p[r] : 0;
    if (p[r - 1] > next) out.push_back({r, p[r - 1]});
  }
  return out;
}

int diag_indicator(const Partition& p, int content) {
  for (auto [r, c] : addable_boxes(p))
    if (c - r == content) return 1;
  for (auto [r, c] : removable_boxes(p))
    if (c - r == content) return -1;
  return 0;
}

int diag_above(const Partition& p, int content, int n) {
  int top = p.empty() ? 1 : p[0] + 1;  // largest addable content
  int s = 0;
  for (int j = content + n; j <= top; j += n) s += diag_indicator(p, j);
  return s;
}

int diag_below(const Partition& p, int content, int n) {
  int bot = -(int)p.size() - 1;
  int s = 0;
  for (int j = content - n; j >= bot; j -= n) s += diag_indicator(p, j);
  return s;
}

int diag_total(const Partition& p, int res, int n) {
  int bot = -(int)p.size() - 1;
  int top = p.empty() ? 1 : p[0] + 1;
  int j0 = res;
  while (j0 - n >= bot) j0 -= n;
  int s = 0;
  for (int j = j0; j <= top; j += n) s += diag_indicator(p, j);
  return s;
}

std::optional<Partition> grow_at_content(const Partition& p, int content) {
  for (auto [r, c] : addable_boxes(p)) {
    if (c - r != content) continue;
    Partition q = p;
    if (r == (int)q.size() + 1)
      q.push_back(1);
    else
      q[r - 1]++;
    return q;
  }
  return std::nullopt;
}

std::optional<Partition> shrink_at_content(const Partition& p, int content) {
  for (auto [r, c] : removable_boxes(p)) {
    if (c - r != content) continue;
    Partition q = p;
    q[r - 1]--;
    if (q[r - 1] == 0) q.pop_back();
    return q;
  }
  return std::nullopt;
}

std::vector<int> residue_content(const Partition& p, int n) {
  std::vector<int> d(n, 0);
  for (int r = 1; r <= (int)p.size(); ++r)
    for (int c = 1; c <= p[r - 1]; ++c)
      d[((c - r) % n + n) % n]++;
  return d;
}

std::vector<int> column_residue_content(const Partition& p, int col, int n) {
  std::vector<int> d(n, 0);
  Partition q = conjugate(p);
  int height = col <= (int)q.size() ? q[col - 1] : 0;
  for (int r = 1; r <= height; ++r) d[((col - r) % n + n) % n]++;
  return d;
}

std::vector<int> word_of_partition(const Partition& p, int l) {
  QF_CHECK(l >= (int)p.size(), "window shorter than partition");
  std::vector<int> w(l);
  for (int k = 1; k <= l; ++k)
    w[k - 1] = (k <= (int)p.size() ? p[k - 1] : 0) - k + 1;
  return w;
}

std::optional<Partition> partition_of_word(const std::vector<int>& w) {
  const int l = (int)w.size();
  for (int k = 1; k < l; ++k)
    if (w[k - 1] <= w[k]) return std::nullopt;
  if (l > 0 && w[l - 1] < 1 - l) return std::nullopt;
  Partition p;
  for (int k = 1; k <= l; ++k) {
    int part = w[k - 1] + k - 1;
    if (part > 0) p.push_back(part);
    else break;  // strictly decreasing word: all later parts are 0 too
  }
  QF_CHECK(is_partition(p), "word does not straighten to a partition");
  return p;
}

}  // namespace qfock
