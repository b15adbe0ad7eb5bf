// Metric structures on the invariant 1-forms: the bilinear map obtained from
// a contraction by starring the first argument, the two-branch family of
// coinvariant candidates, and the sigma-metric axioms that carve out the
// distinguished branch.
//
// Axioms are checked on coefficient matrices over the invariant coframe.
// The bimodule homomorphism condition involves the commutation coefficients
// between functions and forms, which sit outside the invariant-coframe
// engine; left covariance is automatic for constant coefficients.  The
// remaining conditions are decided exactly.
#pragma once

#include "classify.hpp"

#include <vector>

namespace qsu2 {

// 4x4 coefficient matrix g[a][b] = g(omega_a, omega_b), bilinear in both
// slots (no conjugation).
using MetricMat = std::vector<std::vector<ScalarQ>>;

MetricMat metric_zero();

// g(omega_a, omega_b) := Gamma(omega_a^*, omega_b) = -Gamma_{a'b}.
MetricMat metric_from_contraction(const Contraction& g);

// The coinvariant two-branch family: antidiagonal (-,+) block scaled by
// (q^2 a, a), and a (0,z) block sign*(1-q^2)a off-diagonal with
// sign*(q^2+1)a in the (z,z) corner.  Nondegenerate iff a != 0.
MetricMat metric_branch(const ScalarQ& a, int sign);

struct MetricAxioms {
    bool nondegenerate = false;
    bool sigma_symmetric = false;   // g.sigma^{+-1} = g, both directions
    bool braided_symmetric = false; // (g x 1).sigma_2^{+-} = (1 x g).sigma_1^{-+}
    bool real = false;              // conj(g_{ab}) = g_{b'a'}
    bool coinvariant = false;       // n_a + n_b != 0 forces g_{ab} = 0

    bool all() const {
        return nondegenerate && sigma_symmetric && braided_symmetric && real &&
               coinvariant;
    }
};

MetricAxioms metric_axioms(const MetricMat& g, const EvalAt& at = {});

// The 16 coefficients of g applied after the braiding, packed as 4a + b;
// sigma-symmetry says this returns the coefficients of g itself.
std::vector<ScalarQ> metric_compose_sigma(const MetricMat& g, Dir d);

ScalarQ metric_det(const MetricMat& g);

// The branch sign for which metric_branch(a, sign) satisfies the symmetry
// axioms; computed once and cached, throws unless exactly one branch works.
int sigma_branch_sign();

enum class MetricClass { NotInFamily, SigmaBranch, OtherBranch };
const char* metric_class_name(MetricClass c);

// Matches g against metric_branch(a, sign) with a real and nonzero.
MetricClass classify_metric(const MetricMat& g, const EvalAt& at = {});

} // namespace qsu2
