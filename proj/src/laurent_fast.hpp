// Internal fast kernel for assembling braid-word operators: dense Laurent
// polynomials in s with 64-bit integer coefficients, and sparse matrices over
// them. Every entry of the braiding lifts, antisymmetrizers, and shuffle sums
// is an integer Laurent polynomial, so this representation is exact; all
// coefficient arithmetic is overflow-checked and converted to ScalarQ at the
// module boundary.
#pragma once

#include "linalg.hpp"
#include "scalar.hpp"

#include <cstdint>
#include <vector>

namespace qsu2 {

struct LaurentZ {
    int lo = 0;                 // exponent of c[0]
    std::vector<int64_t> c;     // normalized: empty, or first and last nonzero

    static LaurentZ zero() { return {}; }
    static LaurentZ one() { return spow(0); }
    static LaurentZ spow(int e, int64_t coeff = 1);
    // Convenience: integer Laurent polynomial in q = s^2 given (q-exponent,
    // coefficient) pairs.
    static LaurentZ from_q_terms(std::initializer_list<std::pair<int, int64_t>> terms);

    bool is_zero() const { return c.empty(); }
    void normalize();

    LaurentZ operator+(const LaurentZ& o) const;
    LaurentZ operator-(const LaurentZ& o) const;
    LaurentZ operator-() const;
    LaurentZ operator*(const LaurentZ& o) const;
    bool operator==(const LaurentZ& o) const { return c == o.c && (c.empty() || lo == o.lo); }

    ScalarQ to_scalar() const;
};

// Sparse row-major matrix over LaurentZ; acts on column vectors.
struct SpMatZ {
    int rows = 0, cols = 0;
    // row[r]: sorted (col, value) pairs with nonzero values
    std::vector<std::vector<std::pair<int, LaurentZ>>> row;

    SpMatZ() = default;
    SpMatZ(int r, int c) : rows(r), cols(c), row(r) {}

    static SpMatZ identity(int n);
    void set(int r, int c, LaurentZ v); // overwrites
    const LaurentZ* get(int r, int c) const;

    SpMatZ operator*(const SpMatZ& o) const;
    SpMatZ operator+(const SpMatZ& o) const;
    SpMatZ operator-(const SpMatZ& o) const;
    SpMatZ kron(const SpMatZ& o) const;
    bool is_zero() const;
    bool operator==(const SpMatZ& o) const;
    size_t nnz() const;

    std::vector<LaurentZ> apply(const std::vector<LaurentZ>& v) const;
    MatQ to_matq() const;
};

} // namespace qsu2
