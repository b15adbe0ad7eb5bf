// The 4D+ first-order calculus data: the left-invariant coframe labels, their
// U(1) charges and star involution, tensor index packing, and the braiding
// operator and its inverse on degree-2 tensors, plus lifts to higher tensor
// degrees.
#pragma once

#include "laurent_fast.hpp"

#include <vector>

namespace qsu2 {

// Coframe order: omega_-, omega_+, omega_0, omega_z.
enum Label : int { L_MINUS = 0, L_PLUS = 1, L_ZERO = 2, L_Z = 3 };
inline constexpr int NLABELS = 4;
inline const char* label_name(int a) {
    static const char* names[4] = {"-", "+", "0", "z"};
    return names[a];
}

// Right-coaction charge: delta_R(omega_a) = omega_a (x) z^{n_a}.
inline int label_charge(int a) {
    static const int n[4] = {-2, +2, 0, 0};
    return n[a];
}

// Star involution on the coframe: omega_a^* = -omega_{a'}.
inline int star_label(int a) {
    static const int s[4] = {L_PLUS, L_MINUS, L_ZERO, L_Z};
    return s[a];
}

// Which exterior algebra: Plus built from sigma, Minus from sigma^{-1}.
enum class Dir { Plus, Minus };
inline Dir flip(Dir d) { return d == Dir::Plus ? Dir::Minus : Dir::Plus; }
inline const char* dir_name(Dir d) { return d == Dir::Plus ? "+" : "-"; }

// Big-endian packing of tensor multi-indices: (a_1..a_k) -> sum a_i 4^(k-i).
int pack_index(const std::vector<int>& labels);
std::vector<int> unpack_index(int idx, int k);
int tensor_charge(int idx, int k);
inline int tensor_dim(int k) { return 1 << (2 * k); }

// 16x16 operator matrix of sigma^{+-1} acting on column vectors in the
// packed degree-2 basis.
const SpMatZ& sigma_op(Dir d);

// Lift acting on slots (pos, pos+1) of a degree-k tensor, 1 <= pos <= k-1.
SpMatZ sigma_lift(Dir d, int k, int pos);

} // namespace qsu2
