// Sparse multivariate polynomials over the Gaussian rationals.
//
// Variable 0 is always s (the deformation parameter, q = s^2); it alone may
// carry negative (Laurent) exponents. Further variables are named symbols
// registered in the global SymbolTable. Every symbol has a conjugation
// partner (possibly itself), and a symbol may carry a quadratic rewrite rule
//   x^2 -> w0 + w1*x
// with w0, w1 free of any rewritten symbol; such symbols model exact
// quadratic extensions of the coefficient field and are reduced eagerly, so
// no monomial ever holds them at exponent >= 2.
#pragma once

#include "gausrat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsu2 {

class MPoly;

inline constexpr int VAR_S = 0;

struct SquareRule {
    // x^2 = w0 + w1 * x, stored as reduced polynomials.
    const MPoly* w0;
    const MPoly* w1;
};

class SymbolTable {
public:
    static SymbolTable& instance();

    // Registers a symbol together with its conjugate partner; pass the same
    // name twice for a self-conjugate (real) symbol. Idempotent.
    int register_symbol(const std::string& name, const std::string& conj_name);
    int register_real_symbol(const std::string& name) { return register_symbol(name, name); }

    // Attaches x^2 -> w0 + w1*x to an already registered symbol. The rule
    // polynomials may not contain any symbol that itself has a square rule.
    void set_square_rule(int var, const MPoly& w0, const MPoly& w1);

    int lookup(const std::string& name) const; // -1 if unknown
    const std::string& name(int var) const;
    int conj_var(int var) const;
    bool has_square_rule(int var) const;
    SquareRule square_rule(int var) const;
    int count() const;

private:
    SymbolTable();
    struct Entry {
        std::string name;
        int conj;
        std::unique_ptr<MPoly> w0, w1;
    };
    std::vector<Entry> entries_;
};

// Product of variable powers. Pairs (var, exp) sorted by var, exps nonzero.
struct Monomial {
    std::vector<std::pair<int, int>> ve;

    static Monomial one() { return {}; }
    static Monomial var(int v, int e = 1);

    bool is_one() const { return ve.empty(); }
    int exp_of(int v) const;
    int total_degree_excl_s() const;
    bool has_symbol_vars() const; // any var other than s
    Monomial mul(const Monomial& o) const;
    Monomial erase_var(int v) const;
    Monomial conj_vars() const;          // map each var to its conjugate partner
    Monomial flip_s() const;             // s -> s^-1
    bool divides(const Monomial& o) const; // componentwise <=, s included
    Monomial div(const Monomial& o) const; // assumes o.divides-compatible use
};

// Descending-exponent lexicographic order over ascending variable ids.
// Multiplicative, so leading terms are compatible with products.
struct MonoCmp {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
public:
    using Map = std::map<Monomial, GausRat, MonoCmp>;

    MPoly() = default;
    static MPoly constant(const GausRat& c);
    static MPoly variable(int v, int e = 1);
    static MPoly term(const Monomial& m, const GausRat& c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    const Map& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    void add_term(const Monomial& m, const GausRat& c); // no rewrite
    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const; // applies square rules
    MPoly mul_scalar(const GausRat& c) const;
    MPoly mul_monomial(const Monomial& m, const GausRat& c) const; // applies square rules
    MPoly pow(unsigned e) const;
    bool operator==(const MPoly& o) const { return (*this - o).is_zero(); }

    MPoly conj() const;    // conjugate coefficients and symbols
    MPoly flip_s() const;  // s -> s^-1
    bool has_complex_coeff() const;
    bool contains_var(int v) const;
    bool contains_square_rule_var() const;

    // Leading data in the monomial order.
    const std::pair<const Monomial, GausRat>& lead() const;

    int s_valuation() const;       // min s-exponent over terms (0 if zero poly)
    int s_degree() const;          // max s-exponent over terms
    MPoly shift_s(int k) const;    // multiply by s^k

    // For each variable other than s: the minimum exponent over all terms,
    // and whether that exponent is shared by every term.
    std::map<int, std::pair<int, bool>> symbol_exponent_profile() const;

    // Splits into coefficient polynomials in s, grouped by the symbol-only
    // part of each monomial.
    std::map<Monomial, MPoly, MonoCmp> group_by_symbols() const;

    // Exact division: succeeds iff o divides *this with a polynomial
    // quotient (s treated as an honest variable after valuation shifting).
    std::optional<MPoly> exact_divide(const MPoly& o) const;

    // Splits *this as u + v*x for a square-rule variable x (degree <= 1 holds
    // after reduction); u, v free of x.
    void split_linear(int v, MPoly& u_out, MPoly& v_out) const;

    GausRat eval_s(const GausRat& s0) const; // requires no symbols present

    static MPoly reduce_rules(Map&& raw); // applies square rules to raw terms

private:
    Map t_;
};

// Univariate dense polynomials in s with nonnegative exponents; used for the
// gcd-based content reduction of fraction denominators.
struct UPoly {
    std::vector<GausRat> c; // c[k] coefficient of s^k, trailing zeros trimmed

    void trim();
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    static UPoly from_mpoly(const MPoly& p); // p must be symbol-free with s-valuation >= 0
    MPoly to_mpoly() const;
    UPoly conj() const;
    bool is_real() const;
    UPoly monic() const;
    static UPoly mul(const UPoly& a, const UPoly& b);
    static UPoly divmod(const UPoly& a, const UPoly& b, UPoly& rem);
    static UPoly gcd(UPoly a, UPoly b); // monic gcd
};

} // namespace qsu2
