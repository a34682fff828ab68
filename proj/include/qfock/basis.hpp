#pragma once
// Distinguished bases of a Fock weight space, stored as coefficient tables.
//
// A table lists the partitions of the weight (lex-descending, which refines
// dominance) and one column per basis vector: column j is the expansion of
// the vector indexed by ptns[j] in the standard basis, so coef[i][j] is the
// coefficient of |ptns[i]>.  All tables are unitriangular in this order.

#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/gamma.hpp"
#include "qfock/hall.hpp"

namespace qfock {

struct BasisTable {
  int n = 0;
  int weight = 0;
  int l = 0;  // 0 = semi-infinite
  std::vector<Partition> ptns;
  std::vector<std::vector<Laurent>> coef;  // coef[row][col]

  const Laurent& at(const Partition& row, const Partition& col) const;
};

// triangular bar-fixed construction; sign +1 puts off-diagonal entries in
// v Z[v], sign -1 in v^-1 Z[v^-1].  Seeds are column-content monomials on
// the vacuum, with the canonical-class vector as fallback; hall_seeds
// forces the fallback everywhere (the result must not depend on the seed).
BasisTable lt_basis(HallCtx& hctx, const FockCtx& ctx, int weight, int sign,
                    bool hall_seeds = false);

// canonical classes acting on the vacuum, scaled onto the bar-fixed line
BasisTable hall_basis_B(HallCtx& hctx, const FockCtx& ctx, int weight);

struct IntTable {
  int n = 0;
  int weight = 0;
  std::vector<Partition> ptns;
  std::vector<std::vector<mpz_class>> m;
};

// d[i][j] = coefficient of |ptns[i]> in the upper vector of ptns[j], at v=1
IntTable decomposition_matrix(int n, int weight);

std::string table_json(const BasisTable& t);
std::string table_csv(const BasisTable& t);  // entries at v = 1
std::string table_latex(const BasisTable& t);
std::string int_table_json(const IntTable& t);
std::string int_table_csv(const IntTable& t);
std::string int_table_latex(const IntTable& t);

}  // namespace qfock
