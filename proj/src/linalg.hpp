// Dense exact linear algebra over ScalarQ.
#pragma once

#include "scalar.hpp"

#include <optional>
#include <vector>

namespace qsu2 {

struct MatQ {
    int rows = 0, cols = 0;
    std::vector<ScalarQ> a; // row-major

    MatQ() = default;
    MatQ(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    ScalarQ& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const ScalarQ& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static MatQ identity(int n);
    MatQ operator*(const MatQ& o) const;
    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ scale(const ScalarQ& c) const;
    bool is_zero() const;
    std::vector<ScalarQ> apply(const std::vector<ScalarQ>& v) const;
};

// Row echelon rank; destroys its argument.
int rank_destructive(MatQ& m);
inline int rank(MatQ m) { return rank_destructive(m); }

// Basis of the right kernel {x : M x = 0}.
std::vector<std::vector<ScalarQ>> kernel_basis(MatQ m);

// Any solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<ScalarQ>> solve(MatQ A, std::vector<ScalarQ> b);

// Monic minimal polynomial of a square matrix, coefficients low to high
// (constant term first, leading coefficient 1).
std::vector<ScalarQ> minimal_polynomial(const MatQ& m);

} // namespace qsu2
