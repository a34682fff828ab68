#pragma once
// Partitions, their boxes, and the wedge-word dictionary.
//
// Boxes are (row, col), 1-based, with content col - row.  Residues are
// contents mod n.  The wedge word of a partition is i_k = p_k - k + 1,
// strictly decreasing, with vacuum tail i_k = 1 - k.

#include <optional>
#include <string>
#include <vector>

namespace qfock {

using Partition = std::vector<int>;  // weakly decreasing positive parts

bool is_partition(const Partition& p);
int ptn_weight(const Partition& p);
std::string ptn_str(const Partition& p);  // "(2,1)"; "()" for empty
Partition ptn_parse(const std::string& s);
std::vector<Partition> partitions_of(int w);  // lex-descending: (3),(2,1),(1,1,1)
Partition conjugate(const Partition& p);
bool dominance_leq(const Partition& a, const Partition& b);  // a <= b

std::vector<std::pair<int, int>> addable_boxes(const Partition& p);
std::vector<std::pair<int, int>> removable_boxes(const Partition& p);
// n_i: #addable - #removable boxes on the content-i diagonal (in {-1,0,1}).
int diag_indicator(const Partition& p, int content);
// sum of n_j over j > content (resp. j < content) with j = content mod n
int diag_above(const Partition& p, int content, int n);
int diag_below(const Partition& p, int content, int n);
// sum of n_j over all integer j = res mod n
int diag_total(const Partition& p, int res, int n);
std::optional<Partition> grow_at_content(const Partition& p, int content);
std::optional<Partition> shrink_at_content(const Partition& p, int content);

std::vector<int> residue_content(const Partition& p, int n);  // box count per residue
std::vector<int> column_residue_content(const Partition& p, int col, int n);

std::vector<int> word_of_partition(const Partition& p, int l);
// strictly decreasing prefix with valid vacuum junction, else nullopt
std::optional<Partition> partition_of_word(const std::vector<int>& w);

}  // namespace qfock
