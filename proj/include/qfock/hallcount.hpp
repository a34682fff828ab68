#pragma once
// Point counting for nilpotent cyclic-quiver classes over prime fields.
//
// A class is realized by its partial-permutation representative (entries 0/1,
// independent of the field).  Counts of stable flags and of stable subspaces
// with prescribed sub/quotient type are computed by direct enumeration over
// F_p; the callers interpolate them into polynomials in the field size.

#include <map>
#include <string>
#include <vector>

#include "qfock/fields.hpp"
#include "qfock/multisegment.hpp"

namespace qfock {

struct Rep {
  int n = 1;
  std::vector<int> dim;
  std::vector<FpMat> x;  // x[i] has dim[i] rows, dim[(i+1)%n] columns
};

Rep rep_of_class(const Multisegment& c);

// recover the class of an F_p representation from its rank profile
Multisegment classify_rep(const Rep& r, long p);

// orbit dimension = rank of the commutation constraints on End
long dim_orbit(const Multisegment& c);

// flags 0 = F^0 <= ... <= F^r = V with x F^k <= F^{k-1} and graded step
// dimensions layers[k-1]; memo keys include the class and the layer suffix
mpz_class count_stable_flags(const Multisegment& c,
                             const std::vector<std::vector<int>>& layers,
                             long p, std::map<std::string, mpz_class>& memo);

// x-stable graded subspaces of dimension subdim, bucketed by the classes of
// the subspace and of the quotient
std::map<std::pair<std::string, std::string>, mpz_class>
count_subobjects_by_type(const Multisegment& c, const std::vector<int>& subdim,
                         long p);

std::string dims_key(const std::vector<std::vector<int>>& layers);

}  // namespace qfock
