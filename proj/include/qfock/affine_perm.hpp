#pragma once
// Periodic permutations of Z in window form.
//
// An element stores w(1..l) and extends by w(k+l) = w(k)+l.  The window
// residues mod l hit every class once.  Elements with sum(w(k)-k) = 0 form
// the Coxeter group generated by s_0..s_{l-1}; the rotation pi (window
// 2,3,..,l+1) generates the extension, has length 0, and commutes with the
// indexing: pi s_j = s_{j+1} pi.
//
// Composition (a*b)(k) = a(b(k)); sequences of residues form a right module:
// (i.w)(k) = i(w(k)) with i(k+l) = i(k)+n.

#include <optional>
#include <vector>

namespace qfock {

struct AffinePerm {
  std::vector<long> win;  // w(1), ..., w(l)

  int l() const { return (int)win.size(); }
  long operator()(long k) const;

  static AffinePerm identity(int l);
  static AffinePerm gen(int l, int j);  // s_j, 0 <= j < l
  static AffinePerm rotation(int l);    // pi

  AffinePerm operator*(const AffinePerm& o) const;
  AffinePerm inverse() const;
  bool operator==(const AffinePerm&) const = default;
  bool operator<(const AffinePerm& o) const { return win < o.win; }

  long shift_index() const;             // sum(w(k)-k)/l
  AffinePerm coxeter_part() const;      // pi^{-shift} * this
  long length() const;                  // inversion count (= Coxeter length)
  bool right_descent(int j) const;      // w(j) > w(j+1), 0 <= j < l
  std::optional<int> any_right_descent() const;
  std::vector<int> reduced_word() const;
};

// (i.w)(k) = i(w(k)), period shift n
std::vector<int> seq_act(const std::vector<int>& i, int n, const AffinePerm& w);

// Bruhat order; both sides must have the same shift index.
bool bruhat_leq(const AffinePerm& u, const AffinePerm& w);
// all y <= x (same shift index as x)
std::vector<AffinePerm> bruhat_interval_below(const AffinePerm& x);

struct Alcove {
  std::vector<int> point;  // weakly increasing entries in (-n, 0]
  AffinePerm x;            // minimal with (point.x)(k) = word(k)
};
// factor an integer word as alcove point + periodic permutation
Alcove alcove_decompose(const std::vector<int>& word, int n);
// sum over equal-entry blocks of m(m-1)/2: length of the longest element of
// the stabilizer of the point
long stabilizer_longest_length(const std::vector<int>& point);

}  // namespace qfock
