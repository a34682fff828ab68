#pragma once
// The periodic Hecke action on words and the wedge quotient.
//
// Words are finite integer sequences indexing x_{i_1} (x) ... (x) x_{i_l}.
// T_k acts on the adjacent pair at positions k, k+1 and is determined by
// window rules plus period-shift moves; it preserves the index sum and the
// residue multiset.  The wedge is the quotient by all images of (T_k + 1);
// strictly decreasing words descend to a basis, and straighten() rewrites any
// word combination into that basis.

#include <map>
#include <vector>

#include "qfock/laurent.hpp"
#include "qfock/linalg.hpp"

namespace qfock {

using Word = std::vector<int>;
using TensorVec = std::map<Word, Laurent>;

void add_term(TensorVec& x, const Word& w, const Laurent& c);
TensorVec scale(const TensorVec& x, const Laurent& c);
TensorVec add(const TensorVec& x, const TensorVec& y);

// expansion of T applied to the pair (a, b); cached per (n, a, b)
const std::vector<std::pair<Laurent, std::pair<int, int>>>& pair_T(int n, int a,
                                                                   int b);
// T_k, 1-based position k (acts on entries k, k+1)
TensorVec apply_T(const TensorVec& x, int k, int n);

bool is_normal(const Word& w);  // strictly decreasing
// normal form in the wedge quotient
TensorVec straighten(const TensorVec& x, int n);
TensorVec straighten_word(const Word& w, int n);

// bar-involution on the finite wedge: semilinear, reverses words, prefactor
// (-1)^{l(w0)} v^{l(w0) - l(w0_i)} from the point stabilizer of the word
TensorVec psi_wedge(const TensorVec& x, int n);

// Independent reduction to the wedge basis: collects the relations
// (T_k + 1) x_j over a box of words, splits by the conserved grading, and
// eliminates fraction-free.  Construction fails if any relation reduces to a
// dependency among normal words.
class WedgeOracle {
 public:
  WedgeOracle(int n, int l, int box_lo, int box_hi);
  TensorVec reduce(const Word& w);

  struct Block;
  using Key = std::pair<long, std::vector<int>>;  // (sum, sorted residues)

 private:
  const Block& block_for(const Key& key);
  int n_, l_, lo_, hi_;
  std::map<Key, Block> blocks_;
};

struct WedgeOracle::Block {
  std::vector<Word> cols;        // non-normal words first, then normal
  std::map<Word, size_t> index;  // word -> column
  size_t normal_from = 0;
  Echelon ech;  // fraction-free echelon of the relation rows
};

}  // namespace qfock
