#pragma once
// Fock-space action of the cyclic Hall algebra, two independent routes.
//
// Route 1 expands an element over the flag monomials and applies the
// windowed wedge operator of each semisimple layer in turn.
//
// Route 2 lifts each semisimple layer to a set of integer contents, one
// layer at a time, rightmost layer first.  A layer lift c acting on the
// current shape s adds its boxes largest content first and carries
//   v^{h(c) + sum_{boxes b in c} diag_above(s, b, n)},
// and the whole monomial is scaled by v^{big_m} of its cyclic layers.
// Layers with a repeated content act as zero and are skipped.

#include "qfock/fock.hpp"
#include "qfock/hall.hpp"

namespace qfock {

// sparse content -> multiplicity vector over the integers
using ZContent = std::map<int, int>;

// h(c) = sum_{i<j, i=j mod n} c_i (c_{j+1} - c_j)
int h_weight(const ZContent& c, int n);

// k(b, a) = sum_{i>j, i=j mod n} b_i (2a_j - a_{j-1} - a_{j+1})
int k_twist(const ZContent& b, const ZContent& a, int n);

// Interval-quiver ambient for integer contents: a modulus wide enough that
// no segment can wrap, content c living at vertex c - lo.  Classes and
// products over this modulus restricted to the window are exactly the
// linear-quiver ones.
struct ZWindow {
  int lo = 0;
  int modulus = 2;
  int vertex(int content) const { return content - lo; }
};
ZWindow z_window(const ZContent& d);
std::vector<int> z_dims(const ZWindow& w, const ZContent& d);
Multisegment z_class(const ZWindow& w,
                     const std::vector<std::pair<int, int>>& segs);

// graded transfer component: expand over flag monomials, split the grading d
// across the layers, weight each split by v^{sum h(a_k) - sum_{k<l} k(a_l,a_k)}
HallVec gamma_map(HallCtx& cyc, HallCtx& lin, const ZWindow& w,
                  const ZContent& d, const HallVec& f);

// route 1; works on both finite and semi-infinite spaces
FockVec hall_action(HallCtx& hall, const FockCtx& fock, const HallVec& x,
                    const FockVec& y);
// route 2; semi-infinite only
FockVec hall_action_lifts(HallCtx& hall, const HallVec& x, const FockVec& y);

}  // namespace qfock
