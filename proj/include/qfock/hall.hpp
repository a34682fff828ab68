#pragma once
// Twisted Hall algebra of the cyclic quiver over Z[v, v^-1].
//
// Basis f_O indexed by classes O.  The product
//   f_A o f_B = sum_C v^{dim O_A + dim O_B - dim O_C - m(b,a)} N^C_{A,B}(v^2) f_C
// counts x-stable subspaces U of C with U of class A and quotient of class B;
// a, b are the dimension vectors and m(b,a) = sum_i b_i a_i + sum_i b_i a_{i+1}.
// The counts are interpolated from prime fields.
//
// The bar involution is v -> v^-1 fixing the products of semisimple classes;
// it is computed through the flag monomial basis
//   F_d = v^{M(d)} f_{d^1} o ... o f_{d^r},  M(d) = sum_k m(sum_{j>k} d^j, d^k),
// which satisfies bar(F_d) = v^{-2 M(d)} F_d.  The distinguished basis b_O is
// the bar-fixed family with b_O = f_O + sum_{O' < O} v Z[v] f_{O'}.

#include <map>
#include <vector>

#include "qfock/cache.hpp"
#include "qfock/hallcount.hpp"
#include "qfock/laurent.hpp"

namespace qfock {

using HallVec = std::map<Multisegment, Laurent>;

struct HallCtx {
  int n = 2;
  int threads = 1;
  const Cache* disk = nullptr;
  // fitted count polynomials in the field-size variable, by description
  std::map<std::string, Laurent> polys;
  // per-prime flag count memo shared across fits
  std::map<long, std::map<std::string, mpz_class>> flag_memos;
  std::map<std::string,
           std::map<std::pair<std::string, std::string>, mpz_class>>
      sub_memos;
};

void hall_add(HallVec& x, const Multisegment& c, const Laurent& coeff);
HallVec hall_scale(const HallVec& x, const Laurent& coeff);
HallVec hall_sum(const HallVec& x, const HallVec& y);
HallVec f_class(const Multisegment& c);
Multisegment zero_class(const std::vector<int>& dim, int n);

int m_twist(const std::vector<int>& b, const std::vector<int>& a);
int big_m(const std::vector<std::vector<int>>& layers);

// fitted counts, polynomials in the field size Q (returned with Q named v)
Laurent flags_poly(HallCtx& ctx, const Multisegment& amb,
                   const std::vector<std::vector<int>>& layers);
Laurent subobject_poly(HallCtx& ctx, const Multisegment& amb,
                       const Multisegment& sub, const Multisegment& quot);

HallVec hall_product(HallCtx& ctx, const HallVec& f, const HallVec& g);

// flag monomial on the f basis, by direct flag counting
HallVec flag_monomial(HallCtx& ctx, const std::vector<std::vector<int>>& layers);
// the same element as an iterated product (consistency route)
HallVec flag_monomial_by_product(HallCtx& ctx,
                                 const std::vector<std::vector<int>>& layers);

// expansion of f_O over the flag monomials of the Jordan layer sequences
std::map<Multisegment, Laurent> orbit_in_monomials(HallCtx& ctx,
                                                   const Multisegment& c);
HallVec hall_bar(HallCtx& ctx, const HallVec& x);

// bar-fixed basis elements for every class of one dimension vector
std::map<Multisegment, HallVec> hall_canonical_all(HallCtx& ctx,
                                                   const std::vector<int>& dim);
HallVec hall_canonical(HallCtx& ctx, const Multisegment& c);

}  // namespace qfock
