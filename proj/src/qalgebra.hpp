// The coordinate algebra with generators a, c and their stars in normal form,
// the dual enveloping algebra acting on it from both sides through the
// canonical pairing, and the tangent operators of the calculus: enough to
// realize the differential on functions and the Laplacians downstream.
#pragma once

#include "braiding.hpp"
#include "scalar.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsu2 {

// Monomial a^k c^m c*^n with signed k: negative k encodes a*^{-k}.  This is
// a vector space basis once products are reduced with a*a = 1 - c*c and
// aa* = 1 - q^2 cc*.
struct QMono {
    int k = 0, m = 0, n = 0;
    bool operator<(const QMono& o) const {
        if (k != o.k) return k < o.k;
        if (m != o.m) return m < o.m;
        return n < o.n;
    }
    bool operator==(const QMono& o) const { return k == o.k && m == o.m && n == o.n; }
    int degree() const { return (k < 0 ? -k : k) + m + n; }
};

class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(const ScalarQ& c);

    static AlgebraElement one() { return AlgebraElement(ScalarQ(1)); }
    static AlgebraElement monomial(int k, int m, int n, const ScalarQ& coeff = ScalarQ(1));
    static AlgebraElement gen_a() { return monomial(1, 0, 0); }
    static AlgebraElement gen_astar() { return monomial(-1, 0, 0); }
    static AlgebraElement gen_c() { return monomial(0, 1, 0); }
    static AlgebraElement gen_cstar() { return monomial(0, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const AlgebraElement& o) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const ScalarQ& c) const;
    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);

    AlgebraElement star() const;
    ScalarQ counit() const;

    // The grade n with x in L_n, i.e. delta_R(x) = x (x) z^{-z_exp}; nullopt
    // for 0 or mixed-grade elements.
    std::optional<int> charge() const;

    int degree() const;
    const std::map<QMono, ScalarQ>& terms() const { return terms_; }
    std::string str() const;

  private:
    std::map<QMono, ScalarQ> terms_; // nonzero coefficients only
    void add_term(const QMono& mono, const ScalarQ& coeff);
};

// Dual generators; words multiply left to right, so {E, K} denotes EK.
enum class UqGen { K, Kinv, E, F };
using UqWord = std::vector<UqGen>;

struct UqElement {
    std::vector<std::pair<ScalarQ, UqWord>> terms;

    static UqElement scalar(const ScalarQ& c) { return {{{c, {}}}}; }
    static UqElement gen(UqGen g) { return {{{ScalarQ(1), {g}}}}; }
    static UqElement word(UqWord w, const ScalarQ& c = ScalarQ(1)) { return {{{c, std::move(w)}}}; }

    UqElement operator+(const UqElement& o) const;
    UqElement operator-(const UqElement& o) const;
    UqElement operator*(const UqElement& o) const;
    UqElement operator*(const ScalarQ& c) const;

    // Antihomomorphism with S(K) = K^{-1}, S(E) = -qE, S(F) = -q^{-1}F; the
    // inverse flag applies S^{-1} instead.
    UqElement antipode(bool inverse = false) const;
    // Conjugate-linear antihomomorphism with K* = K, E* = F, F* = E.
    UqElement star() const;
};

enum class Side { Left, Right };

// Pairing-induced actions.  Single generators act on the normal-form word by
// the twisted Leibniz rule; K and its inverse act diagonally.
AlgebraElement act(UqGen g, const AlgebraElement& x, Side side);
AlgebraElement act(const UqWord& w, const AlgebraElement& x, Side side);
AlgebraElement act(const UqElement& h, const AlgebraElement& x, Side side);

// <h, x> = counit(h acting on x from the left).
ScalarQ pairing(const UqElement& h, const AlgebraElement& x);

// Tangent operators of the calculus, indexed by the coframe label.
const UqElement& tangent_op(int label);
// The same L_0 written through EF instead of FE.
UqElement tangent_L0_alt();
// R_a = -S^{-1}(L_a).
UqElement tangent_op_r(int label);

// Quantum Casimir, and its shift of L_0.
UqElement casimir();
UqElement casimir_via_L0();

// The nine generators of the ideal that cuts out the calculus.
const std::vector<AlgebraElement>& ideal_generators();

// phi_{n,J,l} = (c^{J-n/2} a*^{J+n/2}) acted by E^l from the right; requires
// twoJ >= |n|, twoJ = n mod 2 and 0 <= l <= twoJ.
AlgebraElement build_phi(int n, int twoJ, int l);

// Coefficients of dx in the coframe basis: dx = sum_a (L_a acting on x) w_a.
std::array<AlgebraElement, 4> differential(const AlgebraElement& x);

} // namespace qsu2
