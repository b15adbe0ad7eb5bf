// Braided antisymmetrizers and shuffle sums.
//
// A word [j1..jm] of adjacent-transposition letters denotes the operator
// sigma_{j1} o sigma_{j2} o ... o sigma_{jm} (rightmost applied first, matrix
// product in the same order). The induced permutation is read off by
// applying the letters to the identity arrangement from the right; lifts are
// well defined on reduced words (property-tested), so the signed sums below
// do not depend on the word choices.
#pragma once

#include "braiding.hpp"
#include "linalg.hpp"

#include <vector>

namespace qsu2 {

using Word = std::vector<int>;

// Arrangement reached from (0,1,..,k-1); letter j swaps positions j-1, j.
std::vector<int> word_arrangement(const Word& w, int k);
int count_inversions(const std::vector<int>& arr);

// One reduced word per permutation of S_k, in staircase order.
std::vector<Word> canonical_words(int k);

// Every reduced word of the permutation with the given arrangement.
std::vector<Word> all_reduced_words(std::vector<int> arrangement);

SpMatZ word_operator(Dir d, int k, const Word& w);

// Antisymmetrizer A^(k), assembled by the coset recursion
// A^(k) = (A^(k-1) (x) 1) T_k; cached. k in [0, 5].
const SpMatZ& antisym(Dir d, int k);

// Direct signed sum over one canonical word per permutation (for
// cross-checking the recursion; practical for k <= 4).
SpMatZ antisym_literal(Dir d, int k);

// Shuffle sum B_{k,l}: signed sum over the minimal coset representatives of
// S_k x S_l in S_{k+l}, so that A^(k+l) = (A^(k) (x) A^(l)) B_{k,l}.
const SpMatZ& shuffle_sum(Dir d, int k, int l);

// Opposite-side shuffle sum (inverse coset representatives), giving the
// mirrored factorization A^(k+l) = B'_{k,l} (A^(k) (x) A^(l)).
const SpMatZ& shuffle_sum_left(Dir d, int k, int l);

// Apply a sparse integer-Laurent operator to an exact coefficient vector.
std::vector<ScalarQ> apply_op(const SpMatZ& op, const std::vector<ScalarQ>& v);

// Indices of the degree-k tensor basis grouped by U(1) charge.
std::vector<std::pair<int, std::vector<int>>> charge_blocks(int k);

// Rank and eigenspace dimension computed block-per-charge over ScalarQ.
int operator_rank(const SpMatZ& op, int k);
int eigenspace_dim(const SpMatZ& op, int k, const ScalarQ& lambda);
// Kernel basis vectors (embedded in the full tensor space).
std::vector<std::vector<ScalarQ>> operator_kernel(const SpMatZ& op, int k);

} // namespace qsu2
