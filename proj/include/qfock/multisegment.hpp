#pragma once
// Nilpotent representation classes of the cyclic quiver with n vertices.
//
// A class is a multiset of segments; segment (start, length) occupies
// vertices start, start+1, ..., start+length-1 mod n, and x shifts along the
// segment.  The rank profile r[k][i] = rank(x^k : V_i -> V_{i+k}) determines
// the class and computes the closure order.  Classes with a common dimension
// vector are listed in a fixed total order refining closure: larger orbits
// first (descending total rank, ties by lexicographically larger profile).

#include <string>
#include <vector>

#include "qfock/partition.hpp"

namespace qfock {

struct Segment {
  int start;   // residue 0..n-1
  int length;  // >= 1
  auto operator<=>(const Segment&) const = default;
};

class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::vector<Segment> segs, int n);
  // "start:length" terms with optional ":multiplicity", ';'-separated;
  // "" or "0" is the zero class
  static Multisegment parse(const std::string& text, int n);
  std::string str() const;

  int n() const { return n_; }
  const std::vector<Segment>& segments() const { return segs_; }
  std::vector<int> dim_vector() const;
  int total_dim() const;
  int nilpotency_degree() const;  // longest segment length, 0 for zero class

  bool operator==(const Multisegment&) const = default;
  auto operator<=>(const Multisegment&) const = default;  // map key order

 private:
  std::vector<Segment> segs_;  // sorted
  int n_ = 1;
};

// r[k][i] for k = 1..total_dim (r[0] unused), i = 0..n-1
std::vector<std::vector<int>> rank_profile(const Multisegment& m);
int total_rank(const Multisegment& m);
// a lies in the closure of b (same dimension vector)
bool closure_leq(const Multisegment& a, const Multisegment& b);
// listing order described above; total on a fixed dimension vector
bool list_before(const Multisegment& a, const Multisegment& b);
std::vector<Multisegment> classes_of_dim(const std::vector<int>& d);
// layer dimensions d^k, (d^k)_i = dim(Ker x^k meet V_i) - dim(Ker x^{k-1} meet V_i)
std::vector<std::vector<int>> kernel_layers(const Multisegment& m);
// row k of p becomes a segment of length p_k starting at residue 1-k
Multisegment class_of_partition(const Partition& p, int n);

}  // namespace qfock
