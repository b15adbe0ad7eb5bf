#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalgebra.hpp"

#include <string>
#include <vector>

using namespace qsu2;

namespace {

ScalarQ P(const std::string& t) { return ScalarQ::parse(t); }

AlgebraElement A() { return AlgebraElement::gen_a(); }
AlgebraElement As() { return AlgebraElement::gen_astar(); }
AlgebraElement C() { return AlgebraElement::gen_c(); }
AlgebraElement Cs() { return AlgebraElement::gen_cstar(); }

ScalarQ s_pow(int e) {
    return ScalarQ::from_fraction(MPoly::variable(VAR_S, e), MPoly::constant(GausRat(1)));
}

std::vector<AlgebraElement> monomials_up_to(int d) {
    std::vector<AlgebraElement> out;
    for (int k = -d; k <= d; ++k)
        for (int m = 0; m + std::abs(k) <= d; ++m)
            for (int n = 0; n + m + std::abs(k) <= d; ++n)
                out.push_back(AlgebraElement::monomial(k, m, n));
    return out;
}

bool same_action(const UqElement& x, const UqElement& y, int deg, Side side) {
    for (const AlgebraElement& e : monomials_up_to(deg))
        if (!(act(x, e, side) == act(y, e, side))) return false;
    return true;
}

} // namespace

TEST_CASE("defining relations and star structure") {
    // tag derel
    ScalarQ q = ScalarQ::q_var();
    CHECK(A() * C() == C() * A() * q);
    CHECK(A() * Cs() == Cs() * A() * q);
    CHECK(C() * Cs() == Cs() * C());
    CHECK(As() * A() + Cs() * C() == AlgebraElement::one());
    CHECK(A() * As() + C() * Cs() * P("q^2") == AlgebraElement::one());

    AlgebraElement w = A() * C() * Cs() * As();
    CHECK(w.star().star() == w);
    CHECK((A() * C()).star() == C().star() * A().star());
    CHECK((A() * C()).star() == As() * Cs() * q);
    CHECK(A().star() == As());
    CHECK(C().star() == Cs());

    CHECK(A().counit() == ScalarQ(1));
    CHECK(As().counit() == ScalarQ(1));
    CHECK(C().counit().is_zero());
    CHECK((A() * As()).counit() == ScalarQ(1));
}

TEST_CASE("generator actions on both sides") {
    // The four derived action tables; everything else on generators is zero.
    CHECK(act(UqGen::K, A(), Side::Left) == A() * s_pow(-1));
    CHECK(act(UqGen::K, C(), Side::Left) == C() * s_pow(-1));
    CHECK(act(UqGen::K, As(), Side::Left) == As() * s_pow(1));
    CHECK(act(UqGen::K, Cs(), Side::Left) == Cs() * s_pow(1));
    CHECK(act(UqGen::E, A(), Side::Left) == Cs() * P("-q"));
    CHECK(act(UqGen::E, C(), Side::Left) == As());
    CHECK(act(UqGen::E, As(), Side::Left).is_zero());
    CHECK(act(UqGen::E, Cs(), Side::Left).is_zero());
    CHECK(act(UqGen::F, A(), Side::Left).is_zero());
    CHECK(act(UqGen::F, C(), Side::Left).is_zero());
    CHECK(act(UqGen::F, As(), Side::Left) == C());
    CHECK(act(UqGen::F, Cs(), Side::Left) == A() * P("-q^-1"));

    CHECK(act(UqGen::K, A(), Side::Right) == A() * s_pow(-1));
    CHECK(act(UqGen::K, C(), Side::Right) == C() * s_pow(1));
    CHECK(act(UqGen::K, As(), Side::Right) == As() * s_pow(1));
    CHECK(act(UqGen::K, Cs(), Side::Right) == Cs() * s_pow(-1));
    CHECK(act(UqGen::E, C(), Side::Right) == A());
    CHECK(act(UqGen::E, As(), Side::Right) == Cs() * P("-q"));
    CHECK(act(UqGen::E, A(), Side::Right).is_zero());
    CHECK(act(UqGen::E, Cs(), Side::Right).is_zero());
    CHECK(act(UqGen::F, A(), Side::Right) == C());
    CHECK(act(UqGen::F, Cs(), Side::Right) == As() * P("-q^-1"));
    CHECK(act(UqGen::F, C(), Side::Right).is_zero());
    CHECK(act(UqGen::F, As(), Side::Right).is_zero());

    // K is grouplike, so its action is multiplicative.
    AlgebraElement xy = A() * C() * Cs();
    CHECK(act(UqGen::K, xy, Side::Left) == xy * s_pow(-1));
    CHECK(act(UqWord{UqGen::K, UqGen::Kinv}, xy, Side::Left) == xy);
}

TEST_CASE("operator relations act consistently") {
    // tag relsu, as identities of operators on every monomial of degree
    // at most 4, on both sides.
    ScalarQ q = ScalarQ::q_var(), qi = P("q^-1");
    UqElement K = UqElement::gen(UqGen::K), Ki = UqElement::gen(UqGen::Kinv);
    UqElement E = UqElement::gen(UqGen::E), F = UqElement::gen(UqGen::F);
    UqElement comm = (K * K - Ki * Ki) * P("q - q^-1").inverse();

    for (Side side : {Side::Left, Side::Right}) {
        CHECK(same_action(K * E, E * K * q, 4, side));
        CHECK(same_action(Ki * E, E * Ki * qi, 4, side));
        CHECK(same_action(K * F, F * K * qi, 4, side));
        CHECK(same_action(Ki * F, F * Ki * q, 4, side));
        CHECK(same_action(E * F - F * E, comm, 4, side));
        CHECK(same_action(K * Ki, UqElement::scalar(ScalarQ(1)), 4, side));
    }
}

TEST_CASE("pairing reproduces the canonical values") {
    // tag ndp, through counit-after-action.
    UqElement K = UqElement::gen(UqGen::K), Ki = UqElement::gen(UqGen::Kinv);
    UqElement E = UqElement::gen(UqGen::E), F = UqElement::gen(UqGen::F);
    CHECK(pairing(K, A()) == s_pow(-1));
    CHECK(pairing(Ki, A()) == s_pow(1));
    CHECK(pairing(K, As()) == s_pow(1));
    CHECK(pairing(Ki, As()) == s_pow(-1));
    CHECK(pairing(E, C()) == ScalarQ(1));
    CHECK(pairing(F, Cs()) == P("-q^-1"));
    CHECK(pairing(E, A()).is_zero());
    CHECK(pairing(E, As()).is_zero());
    CHECK(pairing(E, Cs()).is_zero());
    CHECK(pairing(F, A()).is_zero());
    CHECK(pairing(F, C()).is_zero());
    CHECK(pairing(K, C()).is_zero());

    // <h, 1> = counit of h
    CHECK(pairing(K, AlgebraElement::one()) == ScalarQ(1));
    CHECK(pairing(E, AlgebraElement::one()).is_zero());
    CHECK(pairing(F, AlgebraElement::one()).is_zero());

    // derivation property of the pairing against products
    for (const AlgebraElement& x : {A(), C(), As() * C()})
        for (const AlgebraElement& y : {Cs(), As(), A() * A()}) {
            CHECK(pairing(E, x * y) ==
                  pairing(E, x) * pairing(K, y) + pairing(Ki, x) * pairing(E, y));
            CHECK(pairing(F, x * y) ==
                  pairing(F, x) * pairing(K, y) + pairing(Ki, x) * pairing(F, y));
            CHECK(pairing(K, x * y) == pairing(K, x) * pairing(K, y));
        }
}

TEST_CASE("harmonic basis eigenvalues") {
    // tag clnm: phi_{n,J,l} carries grade n, K-weight q^{n/2}, and exact
    // eigenvalues for the z and 0 tangent operators.
    for (int n = -2; n <= 2; ++n)
        for (int twoJ = std::abs(n); twoJ <= 4; twoJ += 2)
            for (int l = 0; l <= twoJ; ++l) {
                AlgebraElement phi = build_phi(n, twoJ, l);
                REQUIRE_FALSE(phi.is_zero());
                REQUIRE(phi.charge().has_value());
                CHECK(*phi.charge() == n);
                CHECK(act(UqGen::K, phi, Side::Left) == phi * s_pow(n));
                ScalarQ lam_z = (ScalarQ::q_var().pow(-n) - ScalarQ(1)) / P("q - q^-1");
                CHECK(act(tangent_op(L_Z), phi, Side::Left) == phi * lam_z);
                ScalarQ lam_0 = ScalarQ::qnum(twoJ) * ScalarQ::qnum(twoJ + 2);
                CHECK(act(tangent_op(L_ZERO), phi, Side::Left) == phi * lam_0);
            }

    // odd charges live on odd twoJ
    AlgebraElement phi_half = build_phi(1, 1, 0);
    CHECK(phi_half == As());
    CHECK(act(tangent_op(L_ZERO), phi_half, Side::Left) ==
          phi_half * (ScalarQ::qnum(1) * ScalarQ::qnum(3)));

    CHECK_THROWS(build_phi(1, 2, 0)); // parity mismatch
    CHECK_THROWS(build_phi(3, 1, 0)); // twoJ < |n|
    CHECK_THROWS(build_phi(0, 2, 3)); // l > twoJ

    // the right action preserves the grade and shifts l
    AlgebraElement p = build_phi(1, 3, 1);
    CHECK(act(UqGen::E, p, Side::Right) == build_phi(1, 3, 2));
    CHECK(*act(UqGen::E, p, Side::Right).charge() == 1);
}

TEST_CASE("the central operator in both closed forms") {
    // tag Lq: the FE and EF presentations of L_0 agree as operators.
    CHECK(same_action(tangent_op(L_ZERO), tangent_L0_alt(), 3, Side::Left));
    CHECK(same_action(tangent_op(L_ZERO), tangent_L0_alt(), 3, Side::Right));
}

TEST_CASE("casimir offset") {
    // tags cas, casbis: the quantum Casimir is the central tangent operator
    // shifted by a constant.
    for (int n = -2; n <= 2; ++n)
        for (int twoJ = std::abs(n); twoJ <= 4; twoJ += 2)
            for (int l = 0; l <= twoJ; ++l) {
                AlgebraElement phi = build_phi(n, twoJ, l);
                CHECK(act(casimir(), phi, Side::Left) ==
                      act(casimir_via_L0(), phi, Side::Left));
            }
    CHECK(same_action(casimir(), casimir_via_L0(), 3, Side::Left));
}

TEST_CASE("ideal generators are tangent to the calculus") {
    // The nine generators lie in the counit kernel and pair to zero with
    // every tangent operator.
    const std::vector<AlgebraElement>& gens = ideal_generators();
    REQUIRE(gens.size() == 9);
    for (const AlgebraElement& g : gens) {
        CHECK(g.counit().is_zero());
        for (int t = 0; t < NLABELS; ++t) CHECK(pairing(tangent_op(t), g).is_zero());
    }

    // Controls: the tangent operators separate points outside the ideal.
    CHECK(pairing(tangent_op(L_PLUS), C()) == ScalarQ(1));
    CHECK_FALSE(pairing(tangent_op(L_MINUS), Cs()).is_zero());
    CHECK_FALSE(pairing(tangent_op(L_Z), A() - As()).is_zero());
    CHECK_FALSE(pairing(tangent_op(L_ZERO), A() + As() * P("q^2")).is_zero());
}

TEST_CASE("coframe reconstruction") {
    // tags d4 and om4: substituting the differential into the coframe
    // presentations returns exactly the dual basis coefficients.
    ScalarQ q = ScalarQ::q_var();
    ScalarQ pre0 = ((ScalarQ(1) + q) * ScalarQ::qnum(1) * ScalarQ::qnum(3)).inverse();
    auto dA = differential(A()), dAs = differential(As());
    auto dC = differential(C()), dCs = differential(Cs());
    for (int t = 0; t < NLABELS; ++t) {
        AlgebraElement one = AlgebraElement::one(), zero;
        CHECK(Cs() * dAs[t] - As() * dCs[t] * q == (t == L_MINUS ? one : zero));
        CHECK(A() * dC[t] - C() * dA[t] * q == (t == L_PLUS ? one : zero));
        CHECK(As() * dA[t] + Cs() * dC[t] - (A() * dAs[t] + C() * dCs[t] * P("q^2")) ==
              (t == L_Z ? one : zero));
        CHECK((As() * dA[t] + Cs() * dC[t] + (A() * dAs[t] + C() * dCs[t] * P("q^2")) * q) *
                  pre0 == (t == L_ZERO ? one : zero));
    }
}

TEST_CASE("antipode, star compatibility, and bimodule commutation") {
    UqElement E = UqElement::gen(UqGen::E), F = UqElement::gen(UqGen::F);
    UqElement K = UqElement::gen(UqGen::K);

    // S^{-1} inverts S as an operator identity.
    for (const UqElement& h : {E, F, K, tangent_op(L_ZERO)})
        CHECK(same_action(h.antipode(true).antipode(false), h, 3, Side::Left));

    // star compatibility of the left action: L(h*) = ((S(L))* h)*
    for (const UqElement& L : {E, F, K})
        for (const AlgebraElement& h : {A(), C(), A() * C(), As() * Cs() * Cs()}) {
            AlgebraElement lhs = act(L, h.star(), Side::Left);
            AlgebraElement rhs = act(L.antipode().star(), h, Side::Left).star();
            CHECK(lhs == rhs);
        }

    // left and right actions commute
    for (UqGen g1 : {UqGen::K, UqGen::E, UqGen::F})
        for (UqGen g2 : {UqGen::K, UqGen::E, UqGen::F})
            for (const AlgebraElement& x : {A() * C(), As() * Cs(), build_phi(1, 3, 1)})
                CHECK(act(g1, act(g2, x, Side::Right), Side::Left) ==
                      act(g2, act(g1, x, Side::Left), Side::Right));

    // the grade is additive on products
    AlgebraElement x = A() * C(), y = Cs() * Cs();
    REQUIRE(x.charge().has_value());
    REQUIRE(y.charge().has_value());
    CHECK(*x.charge() == -2);
    CHECK(*y.charge() == 2);
    CHECK(*(x * y).charge() == 0);
    CHECK_FALSE((A() + C() * Cs()).charge().has_value());

    // R operators: R_- acts as q^{3/2} K F from the antipode formulas
    UqElement r_min = UqElement::word({UqGen::K, UqGen::F}, s_pow(3));
    CHECK(same_action(tangent_op_r(L_MINUS), r_min, 3, Side::Left));
}
