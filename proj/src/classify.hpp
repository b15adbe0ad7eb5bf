// Classification of U(1)-coinvariant contractions through their Hodge
// operators: reality, hermitianity, the hermitian families, and the
// maximally hermitian locus.
//
// Verdicts are operational. Reality checks T(w_a*) = (T(w_a))* on the
// coframe; hermitianity checks that T^2 on 1-forms is the scalar -T^2(1);
// maximal hermitianity checks that T^2 is constant on every eigenspace of
// the antisymmetrizers. The structural coefficient conditions (beta* =
// q^2 alpha with real (0,z) block; beta = q^2 alpha, xi = eps and two cubic
// relations) are exposed separately so callers can name a violated
// constraint. The L-operator variant replaces the first two checks by
//   w_a* ^ L(w_b) = Gamma(w_a, w_b) mu      and      L(w_a*) = (L(w_a))*,
// which pin reality and hermitianity jointly.
#pragma once

#include "hodge.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsu2 {

// Contractions built at a numeric deformation value stay consistent only
// once the engine's symbolic s is substituted back into final expressions;
// reduce() performs that substitution when s0 is set.
struct EvalAt {
    std::optional<ScalarQ> s0;

    ScalarQ reduce(const ScalarQ& x) const;
    bool zero(const ScalarQ& x) const { return reduce(x).is_zero(); }
    bool equal(const ScalarQ& x, const ScalarQ& y) const { return zero(x - y); }
};

struct ClassifyReport {
    bool real = false;
    bool hermitian = false;
    bool invertible = false;  // Hodge image of the volume form is nonzero
    bool max_hermitian = false;
    char family = 0;          // 'a', 'b' or 'c' when real, hermitian and invertible
    std::vector<std::string> failed;
};

// Structural coefficient conditions.
bool contraction_real(const Contraction& g, const EvalAt& at = {});
bool contraction_hermitian(const Contraction& g, const EvalAt& at = {});
// eps^3 + alpha beta ((q^2 - q^-2) nu - (q - q^-1)^2 eps)
ScalarQ hermitian_cubic_0z(const Contraction& g);
// gam^2 nu - alpha beta ((q^2 - q^-2) eps + 2 (q + q^-1)^2 nu + (q - q^-1)^2 gam)
ScalarQ hermitian_cubic_zz(const Contraction& g);

ClassifyReport classify_T(const Contraction& g, Dir dir, const EvalAt& at = {});
ClassifyReport classify_L(const Contraction& g, Dir dir, const EvalAt& at = {});

// The hermitian families; sign picks the Z_2 member.
//
// (a): nu = 0, eps = xi = sign (1 - q^2) alpha, gam = sign (1 + q^2) alpha.
Contraction family_a(const ScalarQ& alpha, int sign);
// (c): gam = 0, eps = xi = sign e with e^2 = (3/2)(q^2 - 1)^2 alpha^2 adjoined
// as a square-rule symbol, nu = -(q^2 - 1) / (2 (q^2 + 1)) eps.
Contraction family_c(const ScalarQ& alpha, int sign);
// (b): nu, gam != 0, at a numeric deformation s0 (q0 = s0^2). eps is a free
// real parameter, nu is determined by the cubic relation, gam solves its
// quadratic; a square-root symbol is adjoined when the discriminant is not a
// perfect square. Requires (q - q^-1)^2 alpha beta > eps^2 at q0. Classify
// such instances with EvalAt{s0}.
Contraction family_b(const mpq_class& alpha, const mpq_class& eps, const mpq_class& s0,
                     int sign);

// Fresh real symbol r with r^2 rewriting to `square` (reused if an identical
// one was already adjoined). `square` must be polynomial up to a rational
// denominator and free of square-rule symbols.
ScalarQ square_root_symbol(const std::string& hint, const ScalarQ& square);

// Gamma(i w_- (x) w_+ (x) w_0 (x) w_z, i w_- ^ w_+ ^ w_0 ^ w_z)
ScalarQ det_q(const Contraction& g, Dir dir);

// Sign of a real scalar at s = s0: -1, 0 or +1.
int sign_at(const ScalarQ& x, const GausRat& s0);

// The scale fixed by m^2 alpha beta eps^2 = 1 on family (a): 1/((q - q^3) alpha^2).
ScalarQ normalized_m(const ScalarQ& alpha);

} // namespace qsu2
