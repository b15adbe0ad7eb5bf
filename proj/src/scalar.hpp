// Exact scalars: rational functions in s (q = s^2) and registered symbols,
// with Gaussian rational coefficients.
//
// Canonical form: numerator is an expanded Laurent polynomial; denominator is
// u(s) * M with u a monic real polynomial, u(0) != 0, and M a plain symbol
// monomial. Common univariate content and common symbol powers are removed,
// so equality reduces to "difference has empty numerator". Symbols carrying a
// quadratic rewrite rule never appear in denominators (they are cleared by
// conjugate multiplication).
#pragma once

#include "mpoly.hpp"

#include <map>
#include <set>
#include <string>

namespace qsu2 {

class ScalarQ {
public:
    ScalarQ() : num_(), den_(MPoly::constant(GausRat(1))) {}
    ScalarQ(long v) : ScalarQ(GausRat(v)) {}
    explicit ScalarQ(const GausRat& c) : num_(MPoly::constant(c)), den_(MPoly::constant(GausRat(1))) {}

    static ScalarQ from_fraction(MPoly num, MPoly den);
    static ScalarQ s_var() { return from_fraction(MPoly::variable(VAR_S), MPoly::constant(GausRat(1))); }
    static ScalarQ q_var() { return from_fraction(MPoly::variable(VAR_S, 2), MPoly::constant(GausRat(1))); }
    static ScalarQ unit_i() { return ScalarQ(GausRat::unit_i()); }
    static ScalarQ symbol(int var);
    static ScalarQ symbol(const std::string& name);
    // [u] = (q^u - q^-u)/(q - q^-1) at u = two_u/2.
    static ScalarQ qnum(int two_u);
    static ScalarQ parse(const std::string& text);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return (*this - ScalarQ(1)).is_zero(); }
    bool is_rational() const;

    ScalarQ operator-() const;
    ScalarQ operator+(const ScalarQ& o) const;
    ScalarQ operator-(const ScalarQ& o) const;
    ScalarQ operator*(const ScalarQ& o) const;
    ScalarQ operator/(const ScalarQ& o) const;
    ScalarQ& operator+=(const ScalarQ& o) { *this = *this + o; return *this; }
    ScalarQ& operator-=(const ScalarQ& o) { *this = *this - o; return *this; }
    ScalarQ& operator*=(const ScalarQ& o) { *this = *this * o; return *this; }
    ScalarQ& operator/=(const ScalarQ& o) { *this = *this / o; return *this; }
    bool operator==(const ScalarQ& o) const { return (*this - o).is_zero(); }
    bool operator!=(const ScalarQ& o) const { return !(*this == o); }

    ScalarQ inverse() const;
    ScalarQ pow(int e) const;
    ScalarQ conj() const;
    ScalarQ q_invert() const; // s -> 1/s

    bool depends_on(int var) const { return num_.contains_var(var) || den_.contains_var(var); }
    std::set<int> vars() const;

    // Simultaneous substitution of symbols (or s itself) by scalars.
    ScalarQ substitute(const std::map<int, ScalarQ>& values) const;
    ScalarQ substitute(int var, const ScalarQ& value) const;

    GausRat eval_s(const GausRat& s0) const;
    // Evaluation at q = q0: exact when only even powers of s occur, otherwise
    // q0 must be a square of a rational.
    GausRat eval_q(const GausRat& q0) const;

    std::string str() const;

private:
    MPoly num_, den_;
    void normalize(int depth = 0);
};

inline ScalarQ operator*(long a, const ScalarQ& b) { return ScalarQ(a) * b; }
inline ScalarQ operator+(long a, const ScalarQ& b) { return ScalarQ(a) + b; }
inline ScalarQ operator-(long a, const ScalarQ& b) { return ScalarQ(a) - b; }

// Registers the calculus parameter symbols (contraction entries and their
// conjugates, the volume normalization m, the family parameter a) once per
// process. Returns after the first call without re-registering.
void register_standard_symbols();

struct StdSyms {
    int alpha, alphac, beta, betac, nu, nuc, eps, epsc, xi, xic, gam, gamc, m, a;
};
const StdSyms& std_syms();

} // namespace qsu2
