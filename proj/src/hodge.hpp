// Sesquilinear contractions and the Hodge operators T and L.
//
// A U(1)-coinvariant contraction is stored by its six coefficients in the
// coframe order (-, +, 0, z); the full matrix is diag(alpha, beta) on the
// charged labels plus [[nu, eps],[xi, gam]] on the (0, z) block. Contractions
// are conjugate-linear in the first slot and linear in the second.
//
// The Hodge operator is assembled degree by degree on the canonical
// eigenbasis of the antisymmetrizers,
//   T(xi) = (lambda_{xi*}/lambda_xi) (A^(4-k)(Gamma(xi, B_{k,4-k} theta)))*
// with theta = i m w_- (x) w_+ (x) w_0 (x) w_z, and extended C-linearly
// (the two conjugations cancel). The companion operator
//   L(xi) = (1/lambda_xi) (Gamma(xi, mu))*
// contracts against the antisymmetrized volume form directly, with no
// shuffle.
#pragma once

#include "forms.hpp"

namespace qsu2 {

struct Contraction {
    ScalarQ alpha, beta, nu, eps, xi, gam;

    ScalarQ entry(int a, int b) const; // Gamma_{ab}, zero off the coinvariant pattern

    // All six entries as independent symbols (alpha, beta, nu, eps, xi, gam).
    static Contraction symbolic();
};

struct HodgeConfig {
    Contraction g;
    ScalarQ m;   // real scale of the volume tensor, nonzero
    Dir dir = Dir::Plus;
};

HodgeConfig symbolic_config(Dir d); // symbolic contraction, symbolic real m

// Pairwise contraction of a k-tensor against the first k legs of an
// s-tensor; the tail passes through. Coefficients of xi are conjugated.
std::vector<ScalarQ> contract(const Contraction& g, const std::vector<ScalarQ>& xi, int k,
                              const std::vector<ScalarQ>& eta, int s);

// theta = i m w_- (x) w_+ (x) w_0 (x) w_z as a plain 4-tensor.
std::vector<ScalarQ> volume_theta(const HodgeConfig& cfg);

// mu = T(1) = i m w_- ^ w_+ ^ w_0 ^ w_z as a 4-form.
Form volume_mu(const HodgeConfig& cfg);

// Eigenvalue of the antisymmetrizer on the star of the i-th degree-k basis
// form (the basis is stable under the involution up to scale).
ScalarQ star_eigenvalue(Dir d, int k, int i);

Form hodge_T(const HodgeConfig& cfg, const Form& xi);
Form hodge_L(const HodgeConfig& cfg, const Form& xi);

// Matrix of T (which = 'T') or L (which = 'L') on degree k: column i holds
// the coordinates of the image of the i-th canonical basis form.
std::vector<std::vector<ScalarQ>> hodge_matrix(const HodgeConfig& cfg, int k, char which);

// Hodge duality on the full exterior algebra: the module coefficient is
// carried through untouched, on the left or on the right.
template <class Coef>
std::pair<Coef, Form> star_extend_L(const HodgeConfig& cfg, const Coef& x, const Form& omega) {
    return {x, hodge_T(cfg, omega)};
}
template <class Coef>
std::pair<Form, Coef> star_extend_R(const HodgeConfig& cfg, const Form& omega, const Coef& x) {
    return {hodge_T(cfg, omega), x};
}

} // namespace qsu2
