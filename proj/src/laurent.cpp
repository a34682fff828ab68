#include "qfock/laurent.hpp"

#include <algorithm>
#include <map>

namespace qfock {

void Laurent::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

mpz_class Laurent::coeff(int e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.push_back({terms_[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  std::map<int, mpz_class> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.first + b.first] += a.second * b.second;
  Laurent r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  return r;
}

Laurent& Laurent::shift_mul(const mpz_class& c, int e) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.first += e;
    t.second *= c;
  }
  return *this;
}

Laurent Laurent::bar() const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->first, it->second});
  return r;
}

Laurent Laurent::compose_power(int k) const {
  QF_CHECK(k != 0, "compose_power(0)");
  Laurent r;
  r.terms_.reserve(terms_.size());
  if (k > 0) {
    for (const auto& t : terms_) r.terms_.push_back({t.first * k, t.second});
  } else {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      r.terms_.push_back({it->first * k, it->second});
  }
  return r;
}

mpz_class Laurent::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
  QF_CHECK(!d.is_zero(), "division by zero");
  if (is_zero()) return Laurent();
  // Long division from the top against d's leading term; remainder must die.
  // Any exact quotient has exponents in [min-min, max-max]; falling below the
  // floor means the division is not exact (otherwise it loops forever).
  Laurent rem = *this;
  Laurent quo;
  const Term& lead = d.terms_.back();
  const int floor_exp = min_exp() - d.min_exp();
  while (!rem.is_zero()) {
    const Term& top = rem.terms_.back();
    QF_CHECK(top.first - lead.first >= floor_exp, "inexact Laurent division");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.second.get_mpz_t(),
                lead.second.get_mpz_t());
    QF_CHECK(r == 0, "inexact Laurent division");
    Laurent piece(q, top.first - lead.first);
    quo += piece;
    rem -= piece * d;
    QF_CHECK(rem.is_zero() || rem.max_exp() < top.first,
             "division did not reduce degree");
  }
  return quo;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    bool neg = c < 0;
    mpz_class a = neg ? mpz_class(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    int e = it->first;
    if (e == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += "v";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::string Laurent::str_factor() const {
  if (terms_.size() <= 1) return str();
  return "(" + str() + ")";
}

nlohmann::json Laurent::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : terms_)
    j.push_back({t.first, t.second.get_str()});
  return j;
}

Laurent Laurent::from_json(const nlohmann::json& j) {
  Laurent r;
  for (const auto& e : j)
    r.terms_.push_back({e.at(0).get<int>(),
                        mpz_class(e.at(1).get<std::string>())});
  r.normalize();
  return r;
}

}  // namespace qfock
