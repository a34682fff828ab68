#include "qfock/multisegment.hpp"

#include <algorithm>
#include <functional>

#include "qfock/laurent.hpp"

namespace qfock {

Multisegment::Multisegment(std::vector<Segment> segs, int n)
    : segs_(std::move(segs)), n_(n) {
  QF_CHECK(n_ >= 1, "need n >= 1");
  for (const auto& s : segs_) {
    QF_CHECK(0 <= s.start && s.start < n_, "segment start out of range");
    QF_CHECK(s.length >= 1, "segment length must be positive");
  }
  std::sort(segs_.begin(), segs_.end());
}

Multisegment Multisegment::parse(const std::string& text, int n) {
  std::vector<Segment> segs;
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty() || t == "0") return Multisegment({}, n);
  size_t pos = 0;
  while (pos < t.size()) {
    size_t end = t.find(';', pos);
    if (end == std::string::npos) end = t.size();
    std::string item = t.substr(pos, end - pos);
    int fields[3] = {0, 0, 1};
    size_t p = 0;
    for (int f = 0; f < 3 && p <= item.size(); ++f) {
      size_t q = item.find(':', p);
      if (q == std::string::npos) q = item.size();
      QF_CHECK(q > p, "bad segment syntax: " + item);
      fields[f] = std::stoi(item.substr(p, q - p));
      p = q + 1;
      if (q == item.size()) break;
    }
    for (int c = 0; c < fields[2]; ++c)
      segs.push_back({fields[0], fields[1]});
    pos = end + 1;
  }
  return Multisegment(std::move(segs), n);
}

std::string Multisegment::str() const {
  if (segs_.empty()) return "0";
  std::string s;
  size_t k = 0;
  while (k < segs_.size()) {
    size_t j = k;
    while (j < segs_.size() && segs_[j] == segs_[k]) ++j;
    if (!s.empty()) s += ";";
    s += std::to_string(segs_[k].start) + ":" + std::to_string(segs_[k].length);
    if (j - k > 1) s += ":" + std::to_string(j - k);
    k = j;
  }
  return s;
}

std::vector<int> Multisegment::dim_vector() const {
  std::vector<int> d(n_, 0);
  for (const auto& s : segs_)
    for (int t = 0; t < s.length; ++t) d[(s.start + t) % n_]++;
  return d;
}

int Multisegment::total_dim() const {
  int t = 0;
  for (const auto& s : segs_) t += s.length;
  return t;
}

int Multisegment::nilpotency_degree() const {
  int d = 0;
  for (const auto& s : segs_) d = std::max(d, s.length);
  return d;
}

std::vector<std::vector<int>> rank_profile(const Multisegment& m) {
  const int n = m.n();
  const int deg = m.total_dim();
  std::vector<std::vector<int>> r(deg + 1, std::vector<int>(n, 0));
  for (const auto& s : m.segments())
    for (int k = 1; k <= deg; ++k)
      for (int t = 0; t + k <= s.length - 1; ++t)
        r[k][(s.start + t) % n]++;
  return r;
}

int total_rank(const Multisegment& m) {
  int tot = 0;
  for (const auto& row : rank_profile(m))
    for (int x : row) tot += x;
  return tot;
}

bool closure_leq(const Multisegment& a, const Multisegment& b) {
  QF_CHECK(a.n() == b.n(), "mixed n");
  QF_CHECK(a.dim_vector() == b.dim_vector(), "mixed dimension vectors");
  auto ra = rank_profile(a), rb = rank_profile(b);
  for (size_t k = 0; k < ra.size(); ++k)
    for (size_t i = 0; i < ra[k].size(); ++i)
      if (ra[k][i] > rb[k][i]) return false;
  return true;
}

bool list_before(const Multisegment& a, const Multisegment& b) {
  int ta = total_rank(a), tb = total_rank(b);
  if (ta != tb) return ta > tb;
  return rank_profile(a) > rank_profile(b);
}

std::vector<Multisegment> classes_of_dim(const std::vector<int>& d) {
  const int n = (int)d.size();
  int total = 0;
  for (int x : d) total += x;
  // all segment types in a fixed order, then multiplicity search
  std::vector<Segment> types;
  for (int start = 0; start < n; ++start)
    for (int len = 1; len <= total; ++len) types.push_back({start, len});
  std::vector<Multisegment> out;
  std::vector<Segment> cur;
  std::function<void(size_t, std::vector<int>)> rec = [&](size_t t,
                                                          std::vector<int> rem) {
    bool done = true;
    for (int x : rem)
      if (x != 0) done = false;
    if (done) {
      out.push_back(Multisegment(cur, n));
      return;
    }
    if (t == types.size()) return;
    // max copies of types[t] that fit
    rec(t + 1, rem);
    std::vector<int> r = rem;
    int copies = 0;
    while (true) {
      bool fits = true;
      for (int s = 0; s < types[t].length; ++s) {
        int i = (types[t].start + s) % n;
        if (--r[i] < 0) fits = false;
      }
      if (!fits) break;
      ++copies;
      cur.push_back(types[t]);
      rec(t + 1, r);
    }
    for (int c = 0; c < copies; ++c) cur.pop_back();
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [](const Multisegment& a, const Multisegment& b) {
              return list_before(a, b);
            });
  return out;
}

std::vector<std::vector<int>> kernel_layers(const Multisegment& m) {
  const int n = m.n();
  const int deg = m.nilpotency_degree();
  std::vector<std::vector<int>> d;
  for (int k = 1; k <= deg; ++k) {
    std::vector<int> layer(n, 0);
    // k-th cell from the end of each long-enough segment
    for (const auto& s : m.segments())
      if (s.length >= k) layer[(s.start + s.length - k) % n]++;
    d.push_back(layer);
  }
  return d;
}

Multisegment class_of_partition(const Partition& p, int n) {
  std::vector<Segment> segs;
  for (int k = 1; k <= (int)p.size(); ++k)
    segs.push_back({(((1 - k) % n) + n) % n, p[k - 1]});
  return Multisegment(std::move(segs), n);
}

}  // namespace qfock
