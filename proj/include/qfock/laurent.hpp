#pragma once
// Exact arithmetic in Z[v, v^-1].
//
// A Laurent value is a finite sum  sum_e c_e v^e  with integer exponents and
// arbitrary-precision integer coefficients (GMP).  The representation is a
// sorted term vector with no zero coefficients, so equality is structural.
// bar() is the ring involution v -> v^-1.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qfock {

// Internal inconsistency (a broken invariant, not bad user input).
struct MathError : std::runtime_error {
  explicit MathError(const std::string& m) : std::runtime_error(m) {}
};
// Request is well-formed but outside the supported desk scale.
struct ScaleError : std::runtime_error {
  explicit ScaleError(const std::string& m) : std::runtime_error(m) {}
};

#define QF_CHECK(cond, msg)                                              \
  do {                                                                   \
    if (!(cond)) throw qfock::MathError(std::string("check failed: ") + \
                                        (msg) + " [" + __FILE__ + ":" + \
                                        std::to_string(__LINE__) + "]"); \
  } while (0)

class Laurent {
 public:
  using Term = std::pair<int, mpz_class>;  // (exponent, coefficient)

  Laurent() = default;
  Laurent(long c) { if (c != 0) terms_.push_back({0, mpz_class(c)}); }
  Laurent(const mpz_class& c) { if (c != 0) terms_.push_back({0, c}); }
  // c * v^e
  Laurent(const mpz_class& c, int e) { if (c != 0) terms_.push_back({e, c}); }

  static Laurent v(int e = 1) { return Laurent(mpz_class(1), e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  // +-v^e ?
  bool is_unit_monomial() const {
    return terms_.size() == 1 &&
           (terms_[0].second == 1 || terms_[0].second == -1);
  }
  const std::vector<Term>& terms() const { return terms_; }

  int min_exp() const { QF_CHECK(!is_zero(), "min_exp of 0"); return terms_.front().first; }
  int max_exp() const { QF_CHECK(!is_zero(), "max_exp of 0"); return terms_.back().first; }

  mpz_class coeff(int e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
  Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // Total order usable as a map key.
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  // Multiply by c * v^e in place.
  Laurent& shift_mul(const mpz_class& c, int e);

  // v -> v^-1
  Laurent bar() const;
  bool is_bar_symmetric() const { return *this == bar(); }

  // v -> v^k (k != 0); used to substitute Q = v^2 into a polynomial in Q.
  Laurent compose_power(int k) const;

  mpz_class eval_at_one() const;

  // All exponents >= 1 (vZ[v]) resp. <= -1 (v^-1 Z[v^-1]).  Zero qualifies.
  bool in_v_pos() const { return is_zero() || min_exp() >= 1; }
  bool in_v_neg() const { return is_zero() || max_exp() <= -1; }

  // Exact division; throws MathError if the quotient is not Laurent.
  Laurent divide_exact(const Laurent& d) const;

  // Decreasing-exponent display: "v^2 - 3 + v^-1".
  std::string str() const;
  // str(), parenthesized when it has more than one term.
  std::string str_factor() const;

  // JSON: sorted [exponent, coefficient-as-decimal-string] pairs.
  nlohmann::json to_json() const;
  static Laurent from_json(const nlohmann::json& j);

 private:
  std::vector<Term> terms_;
  void normalize();
};

inline Laurent operator*(const mpz_class& c, const Laurent& p) {
  Laurent r = p;
  r.shift_mul(c, 0);
  return r;
}

}  // namespace qfock
