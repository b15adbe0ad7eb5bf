// Laplacians on functions built from the tangent operators, for both signs
// of the metric family: the sigma branch collapses to a multiple of the
// central operator, the other branch stays quadratic in the z weight.  Both
// are diagonal on the harmonic basis with exact closed eigenvalues.
#pragma once

#include "qalgebra.hpp"

namespace qsu2 {

// branch is the metric-family sign, +1 selecting the sigma branch.
UqElement box_l(const ScalarQ& alpha, int branch);
UqElement box_r(const ScalarQ& alpha, int branch);

// 2 q alpha L_0, the collapsed form of the sigma-branch operator.
UqElement box_collapsed(const ScalarQ& alpha);

// Delta_q = Box^L + ((q - q^-1)/(q + q^-1))^2 L_0^2 at alpha = (q^2 + 1)^{-1}
// on the sigma branch.
UqElement delta_q_op();

// z weight entering the non-sigma eigenvalue.
ScalarQ lambda_z(int n);

// Closed eigenvalue of box_l(alpha, branch) on phi_{n,J,l}; independent of l.
ScalarQ box_eigenvalue(const ScalarQ& alpha, int branch, int n, int twoJ);

ScalarQ delta_q_eigenvalue(int twoJ);

struct SpectrumRow {
    int n = 0;
    int twoJ = 0;
    GausRat value;
};

// Exact spectrum table over |n| <= n_max, |n| <= twoJ <= twoJ_max with
// matching parity, evaluated at q = q0.
std::vector<SpectrumRow> scan_spectrum(const ScalarQ& alpha, int branch, const GausRat& q0,
                                       int n_max, int twoJ_max);

} // namespace qsu2
