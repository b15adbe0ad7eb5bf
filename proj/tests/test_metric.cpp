#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metric.hpp"

#include <set>
#include <string>

using namespace qsu2;

namespace {

ScalarQ P(const std::string& t) { return ScalarQ::parse(t); }

bool mat_eq(const MetricMat& x, const MetricMat& y) {
    for (int a = 0; a < NLABELS; ++a)
        for (int b = 0; b < NLABELS; ++b)
            if (!(x[a][b] == y[a][b])) return false;
    return true;
}

ScalarQ sym_a() {
    register_standard_symbols();
    return ScalarQ::symbol(std_syms().a);
}

} // namespace

TEST_CASE("the metric of a contraction stars the first slot") {
    // tag gtq: g(omega_a, omega_b) = Gamma(omega_a^*, omega_b) = -Gamma_{a'b}.
    register_standard_symbols();
    MetricMat g = metric_from_contraction(Contraction::symbolic());
    CHECK(g[L_MINUS][L_PLUS] == -P("beta"));
    CHECK(g[L_PLUS][L_MINUS] == -P("alpha"));
    CHECK(g[L_ZERO][L_ZERO] == -P("nu"));
    CHECK(g[L_ZERO][L_Z] == -P("eps"));
    CHECK(g[L_Z][L_ZERO] == -P("xi"));
    CHECK(g[L_Z][L_Z] == -P("gam"));
    int nonzero = 0;
    for (int a = 0; a < NLABELS; ++a)
        for (int b = 0; b < NLABELS; ++b) nonzero += !g[a][b].is_zero();
    CHECK(nonzero == 6);
}

TEST_CASE("hermitian contractions produce the two-branch family") {
    // tag cop: the metrics of the maximally hermitian contractions form the
    // family with parameter a = -alpha and a residual sign.
    ScalarQ a = sym_a();
    for (int sign : {+1, -1})
        CHECK(mat_eq(metric_from_contraction(family_a(a, sign)), metric_branch(-a, sign)));

    // A generic hermitian-but-not-maximal contraction leaves the family:
    // nu = 0 fails, so the (0,0) entry obstructs membership.
    MetricMat gc = metric_from_contraction(family_c(a, +1));
    CHECK_FALSE(gc[L_ZERO][L_ZERO].is_zero());
    CHECK(classify_metric(gc) == MetricClass::NotInFamily);
}

TEST_CASE("axiom scorecard separates the branches") {
    ScalarQ a = sym_a();

    MetricAxioms good = metric_axioms(metric_branch(a, +1));
    CHECK(good.nondegenerate);
    CHECK(good.sigma_symmetric);
    CHECK(good.braided_symmetric);
    CHECK(good.real);
    CHECK(good.coinvariant);
    CHECK(good.all());

    MetricAxioms bad = metric_axioms(metric_branch(a, -1));
    CHECK(bad.nondegenerate);
    CHECK_FALSE(bad.sigma_symmetric);
    CHECK_FALSE(bad.braided_symmetric);
    CHECK(bad.real);
    CHECK(bad.coinvariant);

    CHECK(sigma_branch_sign() == +1);
}

TEST_CASE("deviation support of the rejected branch") {
    // Composing the rejected branch with the braiding moves the (-,+) pair
    // and one slot of the (0,z) block; which slot depends on the direction.
    ScalarQ a = sym_a();
    MetricMat g = metric_branch(a, -sigma_branch_sign());

    auto support = [&](Dir d) {
        std::set<std::pair<int, int>> dev;
        std::vector<ScalarQ> out = metric_compose_sigma(g, d);
        for (int i = 0; i < tensor_dim(2); ++i) {
            std::vector<int> ab = unpack_index(i, 2);
            if (!(out[i] - g[ab[0]][ab[1]]).is_zero()) dev.insert({ab[0], ab[1]});
        }
        return dev;
    };
    std::set<std::pair<int, int>> want_plus = {
        {L_MINUS, L_PLUS}, {L_PLUS, L_MINUS}, {L_Z, L_ZERO}, {L_Z, L_Z}};
    std::set<std::pair<int, int>> want_minus = {
        {L_MINUS, L_PLUS}, {L_PLUS, L_MINUS}, {L_ZERO, L_Z}, {L_Z, L_Z}};
    CHECK(support(Dir::Plus) == want_plus);
    CHECK(support(Dir::Minus) == want_minus);

    // The accepted branch has empty deviation support for both directions.
    MetricMat h = metric_branch(a, sigma_branch_sign());
    MetricMat hs = h;
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        std::vector<ScalarQ> out = metric_compose_sigma(h, d);
        for (int i = 0; i < tensor_dim(2); ++i) {
            std::vector<int> ab = unpack_index(i, 2);
            CHECK(out[i] == hs[ab[0]][ab[1]]);
        }
    }
}

TEST_CASE("determinant and nondegeneracy") {
    ScalarQ a = sym_a();
    for (int sign : {+1, -1}) {
        ScalarQ det = metric_det(metric_branch(a, sign));
        CHECK(det == P("q^2*(1 - q^2)^2*a^4"));
        CHECK(det == -det_q(family_a(a, sign), Dir::Plus));
    }
    CHECK_FALSE(metric_axioms(metric_zero()).nondegenerate);
    CHECK(metric_axioms(metric_branch(P("3/2"), +1)).nondegenerate);
}

TEST_CASE("membership classification") {
    ScalarQ a = sym_a();
    CHECK(classify_metric(metric_branch(a, +1)) == MetricClass::SigmaBranch);
    CHECK(classify_metric(metric_branch(a, -1)) == MetricClass::OtherBranch);
    CHECK(classify_metric(metric_branch(P("3/2"), +1)) == MetricClass::SigmaBranch);
    CHECK(classify_metric(metric_branch(P("-2"), -1)) == MetricClass::OtherBranch);

    MetricMat id = metric_zero();
    for (int i = 0; i < NLABELS; ++i) id[i][i] = ScalarQ(1);
    CHECK(classify_metric(id) == MetricClass::NotInFamily);
    CHECK_FALSE(metric_axioms(id).coinvariant);

    CHECK(classify_metric(metric_zero()) == MetricClass::NotInFamily);

    // An imaginary parameter has the right zero pattern but is not real.
    MetricMat gi = metric_branch(ScalarQ::unit_i(), +1);
    CHECK(classify_metric(gi) == MetricClass::NotInFamily);
    CHECK_FALSE(metric_axioms(gi).real);

    // Perturbing a charge-violating entry breaks coinvariance.
    MetricMat gp = metric_branch(a, +1);
    gp[L_MINUS][L_MINUS] = ScalarQ(1);
    CHECK(classify_metric(gp) == MetricClass::NotInFamily);
    CHECK_FALSE(metric_axioms(gp).coinvariant);

    // Scaling the (z,z) corner alone leaves the two-branch pattern.
    MetricMat gz = metric_branch(a, +1);
    gz[L_Z][L_Z] = gz[L_Z][L_Z] * ScalarQ(2);
    CHECK(classify_metric(gz) == MetricClass::NotInFamily);
}

TEST_CASE("numeric instances reduce before testing") {
    ScalarQ a = sym_a();
    EvalAt at{P("1/2")};
    MetricAxioms ax = metric_axioms(metric_branch(P("5"), +1), at);
    CHECK(ax.all());
    CHECK(classify_metric(metric_branch(P("5"), +1), at) == MetricClass::SigmaBranch);
    CHECK(classify_metric(metric_branch(P("5"), -1), at) == MetricClass::OtherBranch);

    // At q = 1 the (0,z) block of the family collapses and the determinant
    // vanishes: the branch degenerates at the classical point.
    EvalAt cl{ScalarQ(1)};
    CHECK_FALSE(metric_axioms(metric_branch(P("5"), +1), cl).nondegenerate);
    CHECK(cl.zero(metric_det(metric_branch(a, +1))));
}
