#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classify.hpp"

#include <map>
#include <utility>
#include <vector>

using namespace qsu2;

// The degree-2 and degree-3 images of the fully symbolic Hodge operator are
// frozen here against closed-form targets, each checked at the smallest
// substitution context that makes it hold:
//   C0  nothing substituted
//   R   the (0, z)-block entries are real
//   B   beta* = q^2 alpha (alpha still complex)
//   A   beta = q^2 alpha with alpha real
//   X   xi = eps
// The degree-2 tables need A (or B) and partly X on top of R; identity tags
// in the comments name the matching verification-report entries.

namespace {

ScalarQ P(const std::string& t) { return ScalarQ::parse(t); }

const StdSyms& S() { return std_syms(); }

enum : int { R = 1, B = 2, A = 4, X = 8 };
constexpr int RB = R | B, RA = R | A, RX = R | X, RBX = R | B | X, RAX = R | A | X;

ScalarQ ctx(const ScalarQ& x, int mask) {
    ScalarQ r = x;
    ScalarQ q2 = P("q^2");
    auto sub = [&](int var, const ScalarQ& v) { r = r.substitute(var, v); };
    if (mask & R) {
        sub(S().nuc, ScalarQ::symbol(S().nu));
        sub(S().epsc, ScalarQ::symbol(S().eps));
        sub(S().xic, ScalarQ::symbol(S().xi));
        sub(S().gamc, ScalarQ::symbol(S().gam));
    }
    if (mask & A) {
        sub(S().betac, q2 * ScalarQ::symbol(S().alpha));
        sub(S().beta, q2 * ScalarQ::symbol(S().alpha));
        sub(S().alphac, ScalarQ::symbol(S().alpha));
    } else if (mask & B) {
        sub(S().betac, q2 * ScalarQ::symbol(S().alpha));
        sub(S().beta, q2 * ScalarQ::symbol(S().alphac));
    }
    if (mask & X) {
        sub(S().xi, ScalarQ::symbol(S().eps));
        if (!(mask & R)) sub(S().xic, ScalarQ::symbol(S().epsc));
    }
    return r;
}

bool vec_eq(const std::vector<ScalarQ>& got, const std::vector<ScalarQ>& want, int mask) {
    if (got.size() != want.size()) return false;
    for (size_t j = 0; j < got.size(); ++j)
        if (!(ctx(got[j], mask) == ctx(want[j], mask))) return false;
    return true;
}

using Mat = std::vector<std::vector<ScalarQ>>;

const HodgeConfig& sym_cfg(Dir d) {
    static HodgeConfig plus = symbolic_config(Dir::Plus);
    static HodgeConfig minus = symbolic_config(Dir::Minus);
    return d == Dir::Plus ? plus : minus;
}

// Symbolic Hodge matrices, computed once per (operator, direction, degree).
const Mat& sym_mat(char which, Dir d, int k) {
    static std::map<std::tuple<char, int, int>, Mat> cache;
    auto key = std::make_tuple(which, d == Dir::Plus ? 0 : 1, k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, hodge_matrix(sym_cfg(d), k, which)).first;
    return it->second;
}

// [i][j] = j-th coordinate of op(op(basis_i)), for op mapping k to 4 - k.
Mat mat_square(const Mat& a, const Mat& b) {
    int n = (int)a.size(), m = (int)b.size();
    Mat out(n, std::vector<ScalarQ>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ScalarQ acc;
            for (int t = 0; t < m; ++t) acc += a[i][t] * b[t][j];
            out[i][j] = acc;
        }
    return out;
}

std::vector<ScalarQ> sparse_row(int dim, std::vector<std::pair<int, ScalarQ>> entries) {
    std::vector<ScalarQ> v(dim);
    for (auto& [j, c] : entries) v[j] = c;
    return v;
}

ScalarQ im() { return ScalarQ::unit_i() * ScalarQ::symbol(S().m); }

} // namespace

TEST_CASE("unit and volume images of the symbolic Hodge operator") {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const HodgeConfig& cfg = sym_cfg(d);
        Form mu = volume_mu(cfg);

        Form t_one = hodge_T(cfg, unit_form(d));
        CHECK(t_one.k == 4);
        CHECK(t_one.coords[0] == mu.coords[0]);

        // tag Tfa: the Hodge square of the unit
        ScalarQ t_mu = hodge_T(cfg, mu).coords[0];
        ScalarQ want = P("m^2") * P("alphac*betac") * P("nuc*gamc - epsc*xic");
        CHECK(t_mu == want);

        ScalarQ l_mu = hodge_L(cfg, mu).coords[0];
        CHECK_FALSE(l_mu == t_mu); // generic contractions separate T and L on the volume
    }
}

TEST_CASE("coframe images of the symbolic Hodge operator") {
    // tag T1, at C0: no relations among the coefficients are needed.
    const Mat& m1 = sym_mat('T', Dir::Plus, 1);
    int n3 = form_space_dim(3);
    CHECK(vec_eq(m1[0], sparse_row(n3, {{1, im() * P("alphac")}}), 0));
    CHECK(vec_eq(m1[1], sparse_row(n3, {{0, -im() * P("betac")}}), 0));
    CHECK(vec_eq(m1[2], sparse_row(n3, {{2, -im() * P("nuc")}, {3, im() * P("epsc")}}), 0));
    CHECK(vec_eq(m1[3], sparse_row(n3, {{2, -im() * P("xic")}, {3, im() * P("gamc")}}), 0));
}

TEST_CASE("three-form images for real coefficients") {
    // tag T3, at R: real (0, z) block, alpha and beta still complex.
    const Mat& m3 = sym_mat('T', Dir::Plus, 3);
    int n1 = form_space_dim(1);
    ScalarQ det2 = P("nu*gam - eps*xi");
    ScalarQ ab = P("alphac*betac");

    CHECK(vec_eq(m3[0], sparse_row(n1, {{1, -im() * P("q^-2") * P("betac") * det2}}), R));
    CHECK(vec_eq(m3[1], sparse_row(n1, {{0, im() * P("q^2") * P("alphac") * det2}}), R));
    CHECK(vec_eq(m3[2],
                 sparse_row(n1, {{2, im() * (P("gam^2*nu") +
                                             ab * P("(1 - q^2 - q^-2)*gam - 2*(q + q^-1)^2*nu - "
                                                    "(q^2 - q^-2)*xi"))},
                                 {3, im() * ab * P("xi")}}),
                 R));
    CHECK(vec_eq(m3[3],
                 sparse_row(n1, {{2, im() * (P("eps^2*xi") +
                                             ab * P("(q^2 - q^-2)*nu + (1 - q^2 - q^-2)*eps"))},
                                 {3, im() * ab * P("nu")}}),
                 R));
}

TEST_CASE("two-form images on the phi/kappa pairs") {
    const Mat& m2 = sym_mat('T', Dir::Plus, 2);
    int n2 = form_space_dim(2);
    ScalarQ mia = -im() * P("alpha");
    ScalarQ mib = -im() * P("beta");

    // tag T2f: the (phi_+, kappa_-) pair; prefactor -im alpha.
    auto phip = sparse_row(n2, {{0, mia * P("q^2*eps + ((q^2 + 1 - q^-2)/(q^2 - 1))*nu")},
                                {4, mia * P("(1/(1 - q^2))*nu")}});
    auto kapm = sparse_row(
        n2, {{0, mia * P("(q^4 + q^2)*eps + (q^4 - q^2)*gam + ((q^6 - q^2 + 1)/(q^2 - 1))*nu")},
             {4, mia * P("-eps + (1/(1 - q^2))*nu")}});
    // The phi rows hold once beta = q^2 alpha with alpha real; the kappa rows
    // additionally need xi = eps.
    CHECK(vec_eq(m2[0], phip, RA));
    CHECK(vec_eq(m2[4], kapm, RAX));
    CHECK_FALSE(vec_eq(m2[0], phip, R));
    CHECK_FALSE(vec_eq(m2[4], kapm, RA));

    // tag T2p: the (phi_-, kappa_+) pair; prefactor -im beta.
    auto phim = sparse_row(n2, {{3, mib * P("-q^-2*eps + ((q^-2 + 1 - q^2)/(q^-2 - 1))*nu")},
                                {1, mib * P("(1/(1 - q^-2))*nu")}});
    auto kapp = sparse_row(
        n2,
        {{3, mib * P("-(q^-4 + q^-2)*eps + (q^-4 - q^-2)*gam + ((q^-6 - q^-2 + 1)/(q^-2 - 1))*nu")},
         {1, mib * P("eps + (1/(1 - q^-2))*nu")}});
    CHECK(vec_eq(m2[3], phim, RA));
    CHECK(vec_eq(m2[1], kapp, RAX));
    CHECK_FALSE(vec_eq(m2[1], kapp, RA));
}

TEST_CASE("two-form images on the psi pair and the documented sign") {
    const Mat& m2 = sym_mat('T', Dir::Plus, 2);
    int n2 = form_space_dim(2);
    ScalarQ pre = -im() / P("1 + q^2");

    // tag T2s: the (psi_-, psi_+) pair holds with beta = q^2 alpha (alpha may
    // stay complex) and xi = eps.
    auto psim = sparse_row(
        n2, {{5, pre * P("((1 - q^2 - q^-2)/(1 - q^-2))*nu*gam + ((2 - q^2)/(1 - q^-2))*eps^2 + "
                         "(q^2 - 1)*(q^2 + q^-2 - 1)*alpha*beta")},
             {2, pre * P("((2*q^2 - 1)/(1 - q^-2))*nu*gam + ((-q^4 + q^2 - 1)/(1 - q^-2))*eps^2 + "
                         "(q^2 - 1)*(q^4 + 1 - q^2)*alpha*beta")}});
    CHECK(vec_eq(m2[5], psim, RBX));

    // tag T2s-psi+: as printed, the psi_- coefficient of the psi_+ image
    // carries eps^2 numerator 1 - q^-2 - q^-4; the computed operator needs
    // 1 - q^-2 + q^-4 and matches in no substitution context otherwise. The
    // corrected row is the one consistent with the family reductions below.
    auto psip_printed = sparse_row(
        n2,
        {{5, pre * P("((1 - 2*q^-2)/(1 - q^-2))*nu*gam + ((1 - q^-2 - q^-4)/(1 - q^-2))*eps^2 + "
                     "(q^-2 - 1)*(q^2 + q^-2 - 1)*alpha*beta")},
         {2, pre * P("((q^2 - 1 + q^-2)/(1 - q^-2))*nu*gam + ((q^-2 - 2)/(1 - q^-2))*eps^2 + "
                     "(1 - q^2)*(q^2 + q^-2 - 1)*alpha*beta")}});
    auto psip_fixed = psip_printed;
    psip_fixed[5] = pre * P("((1 - 2*q^-2)/(1 - q^-2))*nu*gam + ((1 - q^-2 + q^-4)/(1 - q^-2))*"
                            "eps^2 + (q^-2 - 1)*(q^2 + q^-2 - 1)*alpha*beta");

    CHECK(vec_eq(m2[2], psip_fixed, RBX));
    for (int mask : {0, (int)R, RB, RX, RBX, RA, RAX})
        CHECK_FALSE(vec_eq(m2[2], psip_printed, mask));

    // The defect is the single flipped term.
    ScalarQ delta = ctx(m2[2][5], RBX) - ctx(psip_printed[5], RBX);
    CHECK(delta == ctx(pre * P("(2*q^-4/(1 - q^-2))*eps^2"), RBX));
}

TEST_CASE("hermitianity conditions are generated by two cubics") {
    // On top of reality with beta = q^2 alpha real and xi = eps, the square
    // of the Hodge operator on 1-forms is controlled by the two cubic
    // relations; tag hT+.
    Mat sq = mat_square(sym_mat('T', Dir::Plus, 1), sym_mat('T', Dir::Plus, 3));
    ScalarQ t_mu = hodge_T(sym_cfg(Dir::Plus), volume_mu(sym_cfg(Dir::Plus))).coords[0];

    Contraction gs = Contraction::symbolic();
    ScalarQ p3 = hermitian_cubic_0z(gs);
    ScalarQ p4 = hermitian_cubic_zz(gs);
    ScalarQ m2 = P("m^2");

    CHECK(ctx(sq[2][3], RAX).is_zero());
    CHECK(ctx(-sq[3][2], RAX) == ctx(m2 * (P("gam") * p3 - P("eps") * p4), RAX));
    CHECK(ctx(-(sq[2][2] - sq[0][0]), RAX) == ctx(m2 * (P("eps") * p3 - P("nu") * p4), RAX));
    for (int i : {0, 1, 3}) CHECK(ctx(sq[i][i], RAX) == ctx(-t_mu, RAX));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && !(i == 2 && j == 3) && !(i == 3 && j == 2))
                CHECK(ctx(sq[i][j], RAX).is_zero());

    // tag hT+4: with the last condition in its printed form (both trailing
    // signs opposite) the families a and c would fail it; the corrected form
    // annihilates them. The defect is the same for both.
    ScalarQ a = ScalarQ::symbol(S().a);
    for (Contraction g : {family_a(a, +1), family_a(a, -1), family_c(a, +1), family_c(a, -1)}) {
        CHECK(hermitian_cubic_zz(g).is_zero());
        ScalarQ printed = g.gam * g.gam * g.nu -
                          g.alpha * g.beta *
                              (P("q^2 - q^-2") * g.eps - P("2*(q + q^-1)^2") * g.nu -
                               P("(q - q^-1)^2") * g.gam);
        CHECK(printed == -2 * g.alpha * g.beta * P("q^2 - q^-2") * g.eps);
        CHECK_FALSE(printed.is_zero());
    }
}

TEST_CASE("operational reality matches the coefficient conditions") {
    // tag reT: T(w*) = (T(w))* holds exactly when beta* = q^2 alpha and the
    // (0, z) block is real.  The relations are imposed on the final
    // coordinate expressions; rewriting the contraction entries themselves
    // would not keep the conjugate pairs linked.
    const HodgeConfig& cfg = sym_cfg(Dir::Plus);
    bool at_rb = true, at_r = true, at_b = true;
    for (int a = 0; a < 4; ++a) {
        Form w = coframe_form(Dir::Plus, a);
        Form lhs = hodge_T(cfg, star_form(w));
        Form rhs = star_form(hodge_T(cfg, w));
        at_rb = at_rb && vec_eq(lhs.coords, rhs.coords, RB);
        at_r = at_r && vec_eq(lhs.coords, rhs.coords, R);
        at_b = at_b && vec_eq(lhs.coords, rhs.coords, B);
    }
    CHECK(at_rb);
    CHECK_FALSE(at_r);
    CHECK_FALSE(at_b);
}

TEST_CASE("classification of the hermitian families") {
    ScalarQ a = ScalarQ::symbol(S().a);

    for (int sign : {+1, -1})
        for (Dir d : {Dir::Plus, Dir::Minus}) {
            ClassifyReport r = classify_T(family_a(a, sign), d);
            CHECK(r.real);
            CHECK(r.hermitian);
            CHECK(r.invertible);
            CHECK(r.max_hermitian);
            CHECK(r.family == 'a');
        }

    for (int sign : {+1, -1}) {
        ClassifyReport r = classify_T(family_c(a, sign), Dir::Plus);
        CHECK(r.real);
        CHECK(r.hermitian);
        CHECK(r.invertible);
        CHECK_FALSE(r.max_hermitian);
        CHECK(r.family == 'c');
    }

    // Family b representative at q = 1/4; entries are only consistent with
    // the symbolic engine after substituting s back.
    EvalAt at{P("1/2")};
    Contraction b = family_b(1, mpq_class(1, 2), mpq_class(1, 2), +1);
    ClassifyReport rb = classify_T(b, Dir::Plus, at);
    CHECK(rb.real);
    CHECK(rb.hermitian);
    CHECK(rb.invertible);
    CHECK_FALSE(rb.max_hermitian);
    CHECK(rb.family == 'b');

    CHECK_FALSE(classify_T(Contraction::symbolic(), Dir::Plus).hermitian);

    // Single-condition violations flip the verdict.
    Contraction bad = family_a(a, +1);
    bad.xi = -bad.xi;
    ClassifyReport rx = classify_T(bad, Dir::Plus);
    CHECK(rx.real);
    CHECK_FALSE(rx.hermitian);

    bad = family_a(a, +1);
    bad.nu = a;
    CHECK_FALSE(classify_T(bad, Dir::Plus).hermitian);

    bad = family_a(a, +1);
    bad.beta = P("q^4") * a;
    ClassifyReport rbeta = classify_T(bad, Dir::Plus);
    CHECK_FALSE(rbeta.real);
    CHECK_FALSE(rbeta.hermitian);

    bad = family_a(a, +1);
    bad.nu = ScalarQ::unit_i() * a;
    CHECK_FALSE(classify_T(bad, Dir::Plus).real);
}

TEST_CASE("the L operator classifies the same families") {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        ClassifyReport r = classify_L(family_a(a, sign), Dir::Plus);
        CHECK(r.hermitian);
        CHECK(r.max_hermitian);
        CHECK(r.family == 'a');
    }
    ClassifyReport rc = classify_L(family_c(a, +1), Dir::Plus);
    CHECK(rc.hermitian);
    CHECK_FALSE(rc.max_hermitian);

    EvalAt at{P("1/2")};
    ClassifyReport rb = classify_L(family_b(1, mpq_class(1, 2), mpq_class(1, 2), +1), Dir::Plus, at);
    CHECK(rb.hermitian);
    CHECK_FALSE(rb.max_hermitian);

    Contraction bad = family_a(a, +1);
    bad.xi = -bad.xi;
    CHECK_FALSE(classify_L(bad, Dir::Plus).hermitian);
    CHECK_FALSE(classify_L(Contraction::symbolic(), Dir::Plus).hermitian);
}

TEST_CASE("maximally hermitian spectra on 2-forms") {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        HodgeConfig cfg{g, ScalarQ::symbol(S().m), Dir::Plus};

        // tag T2ms
        Mat m2 = hodge_matrix(cfg, 2, 'T');
        std::vector<ScalarQ> want = {
            -im() * P("q^2") * g.alpha * g.eps, -im() * P("q^2") * g.alpha * g.eps,
            im() * P("q^2 - 1") * g.alpha * g.beta, im() * g.alpha * g.eps,
            im() * g.alpha * g.eps, -im() * P("1 - q^-2") * g.alpha * g.beta};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                CHECK(m2[i][j] == ((i == j) ? want[i] : ScalarQ(0)));

        // tag T2mms
        HodgeConfig cfm{g, ScalarQ::symbol(S().m), Dir::Minus};
        Mat k2 = hodge_matrix(cfm, 2, 'T');
        std::vector<ScalarQ> wantm = {
            -im() * g.alpha * g.eps, -im() * g.alpha * g.eps,
            -im() * P("q^-2 - 1") * g.alpha * g.beta, im() * P("q^2") * g.alpha * g.eps,
            im() * P("q^2") * g.alpha * g.eps, im() * P("1 - q^2") * g.alpha * g.beta};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                CHECK(k2[i][j] == ((i == j) ? wantm[i] : ScalarQ(0)));
    }
}

TEST_CASE("the two directions share unit, volume and coframe images") {
    // tags mT04 and mT1, fully symbolic.
    const HodgeConfig& cp = sym_cfg(Dir::Plus);
    const HodgeConfig& cm = sym_cfg(Dir::Minus);
    CHECK(volume_mu(cp).coords[0] == volume_mu(cm).coords[0]);
    CHECK(hodge_T(cm, unit_form(Dir::Minus)).coords[0] == volume_mu(cp).coords[0]);
    CHECK(hodge_T(cm, volume_mu(cm)).coords[0] == hodge_T(cp, volume_mu(cp)).coords[0]);

    const Mat& p1 = sym_mat('T', Dir::Plus, 1);
    const Mat& n1 = sym_mat('T', Dir::Minus, 1);
    for (int i = 0; i < 4; ++i) CHECK(vec_eq(p1[i], n1[i], 0));

    // tag e3mp: on 3-forms the directions agree only when the data is
    // hermitian for both operators.  Reality plus hermitianity of the plus
    // operator alone is not enough.
    const Mat& p3 = sym_mat('T', Dir::Plus, 3);
    const Mat& n3 = sym_mat('T', Dir::Minus, 3);
    bool all = true;
    for (int i = 0; i < 4 && all; ++i) all = vec_eq(p3[i], n3[i], RAX);
    CHECK_FALSE(all);

    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        HodgeConfig gp{g, ScalarQ::symbol(S().m), Dir::Plus};
        HodgeConfig gm{g, ScalarQ::symbol(S().m), Dir::Minus};
        Mat mp = hodge_matrix(gp, 3, 'T');
        Mat mm = hodge_matrix(gm, 3, 'T');
        for (int i = 0; i < 4; ++i) CHECK(vec_eq(mp[i], mm[i], 0));
    }

    // Families b and c are hermitian for the plus operator only; their two
    // directions genuinely differ on 3-forms.
    for (int sign : {+1, -1}) {
        Contraction g = family_c(a, sign);
        CHECK_FALSE(classify_T(g, Dir::Minus).hermitian);
        HodgeConfig gp{g, ScalarQ::symbol(S().m), Dir::Plus};
        HodgeConfig gm{g, ScalarQ::symbol(S().m), Dir::Minus};
        Mat mp = hodge_matrix(gp, 3, 'T');
        Mat mm = hodge_matrix(gm, 3, 'T');
        bool same = true;
        for (int i = 0; i < 4 && same; ++i) same = vec_eq(mp[i], mm[i], 0);
        CHECK_FALSE(same);
    }

    EvalAt at{P("1/2")};
    Contraction b = family_b(1, mpq_class(1, 2), mpq_class(1, 2), +1);
    HodgeConfig bp{b, ScalarQ::symbol(S().m), Dir::Plus};
    HodgeConfig bm{b, ScalarQ::symbol(S().m), Dir::Minus};
    Mat mp = hodge_matrix(bp, 3, 'T');
    Mat mm = hodge_matrix(bm, 3, 'T');
    bool bsame = true;
    for (int i = 0; i < 4 && bsame; ++i)
        for (int j = 0; j < 4 && bsame; ++j) bsame = at.equal(mp[i][j], mm[i][j]);
    CHECK_FALSE(bsame);

    // Within the reality relations the minus-direction obstruction on
    // degree 1 x degree 3 squares is a multiple of nu, so nu = 0 together
    // with the plus conditions forces family a: the directions then agree.
    const Mat& q1 = sym_mat('T', Dir::Minus, 1);
    const Mat& q3 = sym_mat('T', Dir::Minus, 3);
    Mat sq = mat_square(q1, q3);
    CHECK(ctx(sq[3][2], RAX).is_zero());
    ScalarQ nu = ScalarQ::symbol(S().nu), eps = ScalarQ::symbol(S().eps),
            gam = ScalarQ::symbol(S().gam);
    ScalarQ Q = P("q^2*alpha^2") *
                    (P("q^4 - q^-4") * nu + P("q^4 - 2*q^2 + 2 - 2*q^-2 + q^-4") * eps) -
                eps * (eps * eps - nu * gam);
    CHECK(ctx(sq[2][3], RAX) == P("m^2") * nu * Q);
}

TEST_CASE("quantum determinant") {
    // tag qde: fully symbolic value and direction independence.
    Contraction gs = Contraction::symbolic();
    ScalarQ dq = det_q(gs, Dir::Plus);
    CHECK(dq == P("alpha*beta*(nu*gam - eps*xi)"));
    CHECK(det_q(gs, Dir::Minus) == dq);

    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        ScalarQ da = det_q(family_a(a, sign), Dir::Plus);
        CHECK(da == P("-q^2*(1 - q^2)^2*a^4"));
    }

    ScalarQ at_one = det_q(family_a(ScalarQ(1), +1), Dir::Plus);
    CHECK(sign_at(at_one, GausRat(mpq_class(1, 2))) == -1);
}

TEST_CASE("duality relations for the normalized family") {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        ScalarQ m = normalized_m(a);
        HodgeConfig cp{g, m, Dir::Plus};
        HodgeConfig cm{g, m, Dir::Minus};

        // tag boh: the normalization squares to the inverse of alpha beta eps^2.
        CHECK(m * m * g.alpha * g.beta * g.eps * g.eps == ScalarQ(1));
        CHECK(hodge_T(cp, volume_mu(cp)).coords[0] == ScalarQ(-1));
        CHECK(hodge_T(cm, volume_mu(cm)).coords[0] == ScalarQ(-1));

        std::map<int, Mat> tp, tm;
        for (int k = 0; k <= 4; ++k) {
            tp[k] = hodge_matrix(cp, k, 'T');
            tm[k] = hodge_matrix(cm, k, 'T');
        }

        for (int k = 0; k <= 4; ++k) {
            int n = form_space_dim(k);
            int par = (k * (4 - k)) % 2 ? -1 : 1;
            Mat sp = mat_square(tp[k], tp[4 - k]);
            Mat sm = mat_square(tm[k], tm[4 - k]);
            Mat fw(n, std::vector<ScalarQ>(n)), bw(n, std::vector<ScalarQ>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    for (int t = 0; t < form_space_dim(4 - k); ++t) {
                        fw[i][j] += tp[k][i][t] * tm[4 - k][t][j];
                        bw[i][j] += tm[k][i][t] * tp[4 - k][t][j];
                    }
                }
            for (int i = 0; i < n; ++i) {
                ScalarQ ratio = form_basis(Dir::Plus, k)[i].lambda /
                                star_eigenvalue(Dir::Plus, k, i);
                // tags sTg and sTgm: the squares against the eigenvalue ratio
                for (int j = 0; j < n; ++j) {
                    ScalarQ want = (i == j) ? ScalarQ(-par) * ratio : ScalarQ(0);
                    CHECK(sp[i][j] == want);
                    ScalarQ ratiom = form_basis(Dir::Minus, k)[i].lambda /
                                     star_eigenvalue(Dir::Minus, k, i);
                    ScalarQ wantm = (i == j) ? ScalarQ(-par) * ratiom : ScalarQ(0);
                    CHECK(sm[i][j] == wantm);
                    // tag fq: the mixed squares collapse to the sign alone
                    ScalarQ wantf = (i == j) ? ScalarQ(-par) : ScalarQ(0);
                    CHECK(fw[i][j] == wantf);
                    CHECK(bw[i][j] == wantf);
                }
            }
        }

        // tags rTt and rTm: compatibility with the involution, all degrees.
        for (Dir d : {Dir::Plus, Dir::Minus}) {
            HodgeConfig cfg{g, m, d};
            for (int k = 0; k <= 4; ++k)
                for (int i = 0; i < form_space_dim(k); ++i) {
                    Form b = basis_form(d, k, i);
                    ScalarQ lam = form_basis(d, k)[i].lambda;
                    ScalarQ lam_star = star_eigenvalue(d, k, i);
                    Form lhs = form_scale(lam_star, star_form(hodge_T(cfg, b)));
                    Form rhs = form_scale(lam, hodge_T(cfg, star_form(b)));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("squares against the unnormalized volume") {
    // tag pq: for family a data with free scale m, the Hodge square is the
    // eigenvalue ratio times the square of the unit.
    ScalarQ a = ScalarQ::symbol(S().a);
    Contraction g = family_a(a, +1);
    HodgeConfig cfg{g, ScalarQ::symbol(S().m), Dir::Plus};
    ScalarQ t_one = hodge_T(cfg, volume_mu(cfg)).coords[0];
    std::map<int, Mat> t;
    for (int k = 0; k <= 4; ++k) t[k] = hodge_matrix(cfg, k, 'T');
    for (int k = 0; k <= 4; ++k) {
        Mat sq = mat_square(t[k], t[4 - k]);
        int par = (k * (4 - k)) % 2 ? -1 : 1;
        for (int i = 0; i < form_space_dim(k); ++i) {
            ScalarQ ratio =
                form_basis(Dir::Plus, k)[i].lambda / star_eigenvalue(Dir::Plus, k, i);
            for (int j = 0; j < form_space_dim(k); ++j)
                CHECK(sq[i][j] == ((i == j) ? ScalarQ(par) * ratio * t_one : ScalarQ(0)));
        }
    }
}

TEST_CASE("the companion operator L") {
    // tag Lq01: L agrees with T on 1-forms for fully symbolic coefficients.
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const Mat& t1 = sym_mat('T', d, 1);
        const Mat& l1 = sym_mat('L', d, 1);
        for (int i = 0; i < 4; ++i) CHECK(vec_eq(t1[i], l1[i], 0));
        CHECK(hodge_L(sym_cfg(d), unit_form(d)).coords[0] == volume_mu(sym_cfg(d)).coords[0]);
    }

    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1})
        for (Dir d : {Dir::Plus, Dir::Minus}) {
            Contraction g = family_a(a, sign);
            HodgeConfig cfg{g, ScalarQ::symbol(S().m), d};
            for (int k = 1; k <= 3; ++k) {
                Mat tk = hodge_matrix(cfg, k, 'T');
                Mat lk = hodge_matrix(cfg, k, 'L');
                for (size_t i = 0; i < tk.size(); ++i) CHECK(vec_eq(tk[i], lk[i], 0));
            }

            // tag v4: the volume pairing on the family
            Form mu = volume_mu(cfg);
            std::vector<ScalarQ> mu_t = form_tensor(mu);
            ScalarQ gmm = contract(g, mu_t, 4, mu_t, 4)[0];
            CHECK(gmm == P("-2*(q + q^-1)^2*(q^2 + 1 + q^-2)*m^2") * g.alpha * g.beta * g.eps *
                             g.eps);

            // tag n4: with the computed top antisymmetrizer eigenvalue the
            // two operators agree on the volume form as well; the recorded
            // inequality reflects the printed lambda_4. Frozen as equality.
            ScalarQ lmu = hodge_L(cfg, mu).coords[0];
            ScalarQ tmu = hodge_T(cfg, mu).coords[0];
            CHECK(lmu == tmu);
            CHECK(lmu == P("(-q^6 + 2*q^4 - q^2)*m^2*a^4"));

            // tag rcL: involution compatibility for L on the family
            for (int k = 0; k <= 4; ++k)
                for (int i = 0; i < form_space_dim(k); ++i) {
                    Form b = basis_form(d, k, i);
                    Form lhs = form_scale(star_eigenvalue(d, k, i), star_form(hodge_L(cfg, b)));
                    Form rhs = form_scale(form_basis(d, k)[i].lambda, hodge_L(cfg, star_form(b)));
                    CHECK(lhs == rhs);
                }
        }

    // Generically the volume pairing does not factor through the family shape.
    Contraction gs = Contraction::symbolic();
    HodgeConfig cfg{gs, ScalarQ::symbol(S().m), Dir::Plus};
    std::vector<ScalarQ> mu_t = form_tensor(volume_mu(cfg));
    ScalarQ gmm = contract(gs, mu_t, 4, mu_t, 4)[0];
    CHECK_FALSE(gmm == P("-2*(q + q^-1)^2*(q^2 + 1 + q^-2)*m^2") * gs.alpha * gs.beta * gs.eps *
                           gs.eps);
}
