#pragma once
// Fock spaces: combinations of partitions, realized through wedge words.
//
// Two settings share the interface: the finite wedge of a fixed length l
// (partitions with at most l rows) and the semi-infinite space (l = 0 here),
// where a partition stands for the wedge word i_k = p_k - k + 1 continued by
// the vacuum tail.  Semi-infinite answers are computed in a window of length
// divisible by n and rechecked one period later.

#include <map>
#include <vector>

#include "qfock/hecke.hpp"
#include "qfock/partition.hpp"

namespace qfock {

using FockVec = std::map<Partition, Laurent>;

struct FockCtx {
  int n;
  int l = 0;  // 0 = semi-infinite
  bool finite() const { return l > 0; }
};

void fock_add(FockVec& x, const Partition& p, const Laurent& c);
FockVec fock_scale(const FockVec& x, const Laurent& c);
FockVec fock_sum(const FockVec& x, const FockVec& y);

// action of the semisimple class with dimension vector alpha (size n):
// select positions to shift by one, residue content alpha, weight
// v^{sum over unselected s < selected t of (d(res_t = res_s) - d(res_t + 1 = res_s))}
FockVec f_content(const FockCtx& ctx, const FockVec& x,
                  const std::vector<int>& alpha);

// residue-color Chevalley operators with diagonal weights
FockVec hayashi_f(const FockCtx& ctx, const FockVec& x, int res);
FockVec hayashi_e(const FockCtx& ctx, const FockVec& x, int res);

// bar involution
FockVec psi_fock(const FockCtx& ctx, const FockVec& x);

}  // namespace qfock
