#pragma once
// Kazhdan-Lusztig polynomials for periodic permutations, their parabolic
// variants, and the bar-fixed wedge vectors they assemble.
//
// Polynomials live in the classical variable q (exponents of the returned
// Laurent are powers of q).  The wedge vectors translate q = v^2 or v^-2 as
// appropriate, so only the assembly routines touch the deformation variable.
//
// Everything here stays inside one rotation coset: Bruhat comparisons and
// the recursion never mix shift indices.  Lengths are capped; past the cap
// the ops refuse with "out of desk scale" rather than grind.

#include <map>
#include <utility>
#include <vector>

#include "qfock/affine_perm.hpp"
#include "qfock/fock.hpp"
#include "qfock/laurent.hpp"

namespace qfock {

inline constexpr long kKlLengthCap = 12;

// memo tables for P and R keyed by window pairs
struct KlTable {
  std::map<std::pair<std::vector<long>, std::vector<long>>, Laurent> pmemo;
  std::map<std::pair<std::vector<long>, std::vector<long>>, Laurent> rmemo;

  // P_{x,w}: 1 on the diagonal, 0 unless x <= w, degree <= (l(w)-l(x)-1)/2
  Laurent poly(const AffinePerm& x, const AffinePerm& w);
  // R_{x,w}: degree exactly l(w)-l(x) when x <= w
  Laurent rpoly(const AffinePerm& x, const AffinePerm& w);
  // coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} (0 when that is not integral)
  mpz_class mu(const AffinePerm& x, const AffinePerm& w);
};

// q^{l(w)-l(x)} P_{x,w}(1/q) == sum_{x<=z<=w} R_{x,z} P_{z,w}; P and R are
// computed by unrelated recursions, so this is a real cross-check
bool kl_inversion_identity(KlTable& t, const AffinePerm& x, const AffinePerm& w);

// Q_{w_i y, w_i x} = sum_z (-1)^{l(z)} P_{w_i y z, w_i x} over finite
// permutations z with yz <= x; w_i is the longest element stabilizing point
Laurent parabolic_kl(KlTable& t, const std::vector<int>& point,
                     const AffinePerm& y, const AffinePerm& x);

// bar-fixed wedge vectors on the finite wedge of length l, level n.
// b_minus = |lam> + (strictly lower terms with coefficients in v^-1 Z[v^-1]),
// b_plus the v Z[v] counterpart.
FockVec b_minus_via_kl(KlTable& t, const Partition& lam, int n, int l);
FockVec b_plus_via_kl(KlTable& t, const Partition& lam, int n, int l);

}  // namespace qfock
