#pragma once
// Linear algebra over the prime fields F_p used for point counting.
//
// Matrices are dense row-major with entries reduced into [0, p).  Subspaces
// are represented by their reduced row echelon basis, which makes the list of
// all k-dimensional subspaces of F_p^d enumerable without repetition.

#include <optional>
#include <vector>

#include "qfock/laurent.hpp"

namespace qfock {

using FpRow = std::vector<long>;
using FpMat = std::vector<FpRow>;

long fp_inv(long a, long p);
FpMat fp_mul(const FpMat& a, const FpMat& b, long p);

// in-place echelon; returns pivot columns, drops zero rows
FpMat fp_rref(FpMat m, long p, std::vector<int>* pivots = nullptr);
int fp_rank(const FpMat& m, long p);

// coordinates of v in the row span of an rref basis, if any
std::optional<FpRow> fp_coords(const FpMat& rref, const std::vector<int>& pivots,
                               const FpRow& v, long p);

// all k-dimensional subspaces of F_p^d as rref bases
std::vector<FpMat> fp_subspaces(int d, int k, long p);

// small prime utilities for the interpolation grid
std::vector<long> first_primes(int count);

}  // namespace qfock
