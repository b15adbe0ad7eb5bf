#include "verify.hpp"

#include "laplacian.hpp"
#include "metric.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qsu2 {

namespace {

ScalarQ P(const std::string& t) { return ScalarQ::parse(t); }

const StdSyms& S() { return std_syms(); }

// Substitution contexts for the symbolic Hodge tables: R makes the (0, z)
// block real, B imposes beta* = q^2 alpha with alpha complex, A imposes
// beta = q^2 alpha with alpha real, X imposes xi = eps. Relations are applied
// to final coordinate expressions only; rewriting contraction entries would
// break the conjugate pairing inside the operator.
enum : int { R = 1, B = 2, A = 4, X = 8 };
constexpr int RB = R | B, RA = R | A, RBX = R | B | X, RAX = R | A | X;

ScalarQ rel(const ScalarQ& x, int mask) {
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

bool vec_rel(const std::vector<ScalarQ>& got, const std::vector<ScalarQ>& want, int mask) {
    if (got.size() != want.size()) return false;
    for (size_t j = 0; j < got.size(); ++j)
        if (!(rel(got[j], mask) == rel(want[j], mask))) return false;
    return true;
}

using Mat = std::vector<std::vector<ScalarQ>>;

const HodgeConfig& sym_cfg(Dir d) {
    static HodgeConfig plus = symbolic_config(Dir::Plus);
    static HodgeConfig minus = symbolic_config(Dir::Minus);
    return d == Dir::Plus ? plus : minus;
}

const Mat& sym_mat(char which, Dir d, int k) {
    static std::map<std::tuple<char, int, int>, Mat> cache;
    auto key = std::make_tuple(which, d == Dir::Plus ? 0 : 1, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, hodge_matrix(sym_cfg(d), k, which)).first;
    return it->second;
}

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

SpMatZ scaled_id(int n, const LaurentZ& v) {
    SpMatZ m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, v);
    return m;
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

CheckStatus as_status(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

// A frozen discrepancy passes as such only when the quoted form fails AND the
// computed correction holds; anything else is a failure.
CheckStatus as_discrepancy(bool quoted_fails, bool corrected_holds) {
    return (quoted_fails && corrected_holds) ? CheckStatus::Discrepancy : CheckStatus::Fail;
}

// ---------------------------------------------------------------- braiding

CheckStatus chk_br1(const VerifyOptions&) {
    const SpMatZ& sp = sigma_op(Dir::Plus);
    const SpMatZ& sm = sigma_op(Dir::Minus);
    SpMatZ id = SpMatZ::identity(16);
    return as_status(sp * sm == id && sm * sp == id);
}

CheckStatus chk_br2(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const SpMatZ& s = sigma_op(d);
        for (int r = 0; r < 16; ++r)
            for (auto& [c, v] : s.row[r])
                if (!v.is_zero() && tensor_charge(r, 2) != tensor_charge(c, 2)) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_br3(const VerifyOptions& opt) {
    SpMatZ i4 = SpMatZ::identity(4);
    bool ok = true;
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        SpMatZ s = sigma_op(d);
        if (opt.corrupt_sigma && d == Dir::Plus) {
            const LaurentZ* v = s.get(1, 1);
            s.set(1, 1, (v ? *v : LaurentZ::zero()) + LaurentZ::one());
        }
        SpMatZ s1 = s.kron(i4), s2 = i4.kron(s);
        ok = ok && (s1 * s2 * s1 == s2 * s1 * s2);
    }
    return as_status(ok);
}

CheckStatus chk_br4(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const SpMatZ& s = sigma_op(d);
        SpMatZ f1 = s - SpMatZ::identity(16);
        SpMatZ f2 = s + scaled_id(16, LaurentZ::spow(4));
        SpMatZ f3 = s + scaled_id(16, LaurentZ::spow(-4));
        if (!(f1 * f2 * f3).is_zero()) return CheckStatus::Fail;
        // genuinely cubic
        if ((f1 * f2).is_zero() || (f1 * f3).is_zero() || (f2 * f3).is_zero())
            return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_spb(const VerifyOptions&) {
    bool quoted_fails = true, corrected_holds = true;
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const SpMatZ& s = sigma_op(d);
        SpMatZ good = s - SpMatZ::identity(16);
        SpMatZ bad = s + SpMatZ::identity(16);
        SpMatZ f2 = s + scaled_id(16, LaurentZ::spow(4));
        SpMatZ f3 = s + scaled_id(16, LaurentZ::spow(-4));
        corrected_holds = corrected_holds && (good * f2 * f3).is_zero();
        quoted_fails = quoted_fails && !(bad * f2 * f3).is_zero();
    }
    return as_discrepancy(quoted_fails, corrected_holds);
}

CheckStatus chk_br5(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const SpMatZ& s = sigma_op(d);
        if (eigenspace_dim(s, 2, ScalarQ(1)) != 10) return CheckStatus::Fail;
        if (eigenspace_dim(s, 2, -ScalarQ::q_var().pow(2)) != 3) return CheckStatus::Fail;
        if (eigenspace_dim(s, 2, -ScalarQ::q_var().pow(-2)) != 3) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_br6(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        SpMatZ s1 = sigma_lift(d, 4, 1);
        SpMatZ s3 = sigma_lift(d, 4, 3);
        if (!(s1 * s3 == s3 * s1)) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

// ---------------------------------------------------------------- exterior

CheckStatus chk_ex1(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus})
        for (int k = 2; k <= 4; ++k)
            if (!(antisym(d, k) == antisym_literal(d, k))) return CheckStatus::Fail;
    return CheckStatus::Pass;
}

CheckStatus chk_ex2(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        if (operator_rank(antisym(d, 2), 2) != 6) return CheckStatus::Fail;
        if (operator_rank(antisym(d, 3), 3) != 4) return CheckStatus::Fail;
        if (operator_rank(antisym(d, 4), 4) != 1) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_ex3(const VerifyOptions&) {
    return as_status(antisym(Dir::Plus, 5).is_zero() && antisym(Dir::Minus, 5).is_zero());
}

CheckStatus chk_ex4(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus})
        for (auto [k, l] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}}) {
            SpMatZ prod = antisym(d, k).kron(antisym(d, l)) * shuffle_sum(d, k, l);
            if (!(prod == antisym(d, k + l))) return CheckStatus::Fail;
        }
    return CheckStatus::Pass;
}

CheckStatus chk_ex5(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus})
        for (auto [k, l] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}}) {
            SpMatZ prod = shuffle_sum_left(d, k, l) * antisym(d, k).kron(antisym(d, l));
            if (!(prod == antisym(d, k + l))) return CheckStatus::Fail;
        }
    return CheckStatus::Pass;
}

CheckStatus chk_ex6(const VerifyOptions&) {
    for (int k = 2; k <= 4; ++k) {
        const SpMatZ& ap = antisym(Dir::Plus, k);
        const SpMatZ& am = antisym(Dir::Minus, k);
        if (operator_rank(ap, k) != operator_rank(am, k)) return CheckStatus::Fail;
        for (const auto& v : operator_kernel(ap, k)) {
            for (const ScalarQ& c : apply_op(am, v))
                if (!c.is_zero()) return CheckStatus::Fail;
        }
    }
    return CheckStatus::Pass;
}

CheckStatus chk_spe2(const VerifyOptions&) {
    const SpMatZ& a2 = antisym(Dir::Plus, 2);
    std::vector<ScalarQ> lams = {P("1 + q^2"), P("1 + q^-2")};
    for (int i = 0; i < form_space_dim(2); ++i) {
        const BasisForm& b = form_basis(Dir::Plus, 2)[i];
        if (!(b.lambda == lams[i < 3 ? 0 : 1])) return CheckStatus::Fail;
        std::vector<ScalarQ> got = apply_op(a2, b.tensor);
        for (int j = 0; j < 16; ++j)
            if (!(got[j] == b.lambda * b.tensor[j])) return CheckStatus::Fail;
    }
    bool dims = eigenspace_dim(a2, 2, lams[0]) == 3 && eigenspace_dim(a2, 2, lams[1]) == 3;
    return as_status(dims);
}

CheckStatus chk_p15m(const VerifyOptions&) {
    const SpMatZ& a3 = antisym(Dir::Plus, 3);
    ScalarQ lam3 = P("2*(1 + q^2 + q^-2)");
    for (int i = 0; i < form_space_dim(3); ++i) {
        const BasisForm& b = form_basis(Dir::Plus, 3)[i];
        std::vector<ScalarQ> got = apply_op(a3, b.tensor);
        for (int j = 0; j < 64; ++j)
            if (!(got[j] == lam3 * b.tensor[j])) return CheckStatus::Fail;
        if (!(b.lambda == lam3)) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_p15(const VerifyOptions&) {
    const BasisForm& th = form_basis(Dir::Plus, 4)[0];
    std::vector<ScalarQ> got = apply_op(antisym(Dir::Plus, 4), th.tensor);
    ScalarQ computed = P("2*(q^4 + 3*q^2 + 4 + 3*q^-2 + q^-4)");
    ScalarQ quoted = P("2*(q^4 + 2*q^2 + 6 + 2*q^-2 + q^-4)");
    bool corrected = th.lambda == computed;
    bool quoted_fails = !(th.lambda == quoted);
    for (int j = 0; j < 256 && corrected; ++j) corrected = got[j] == computed * th.tensor[j];
    // the factored shape used downstream, and the matching classical limits
    corrected = corrected && computed == P("2*(q + q^-1)^2*(q^2 + 1 + q^-2)");
    corrected = corrected && computed.eval_s(GausRat(1)) == GausRat(24) &&
                quoted.eval_s(GausRat(1)) == GausRat(24);
    return as_discrepancy(quoted_fails, corrected);
}

CheckStatus chk_spe2m(const VerifyOptions&) {
    // inverse-braiding two-forms are q^{-+2} scalings with swapped eigenvalues
    for (int i = 0; i < 6; ++i) {
        const BasisForm& p = form_basis(Dir::Plus, 2)[i];
        const BasisForm& m = form_basis(Dir::Minus, 2)[i];
        ScalarQ scale = (i < 3) ? P("q^-2") : P("q^2");
        for (int j = 0; j < 16; ++j)
            if (!(m.tensor[j] == scale * p.tensor[j])) return CheckStatus::Fail;
        ScalarQ want = (i < 3) ? P("1 + q^-2") : P("1 + q^2");
        if (!(m.lambda == want)) return CheckStatus::Fail;
        std::vector<ScalarQ> got = apply_op(antisym(Dir::Minus, 2), m.tensor);
        for (int j = 0; j < 16; ++j)
            if (!(got[j] == m.lambda * m.tensor[j])) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_sp3m(const VerifyOptions&) {
    for (int k : {3, 4}) {
        int dim = 1 << (2 * k);
        for (int i = 0; i < form_space_dim(k); ++i) {
            const BasisForm& p = form_basis(Dir::Plus, k)[i];
            const BasisForm& m = form_basis(Dir::Minus, k)[i];
            for (int j = 0; j < dim; ++j)
                if (!(m.tensor[j] == p.tensor[j])) return CheckStatus::Fail;
            if (!(m.lambda == p.lambda)) return CheckStatus::Fail;
            std::vector<ScalarQ> got = apply_op(antisym(Dir::Minus, k), m.tensor);
            for (int j = 0; j < dim; ++j)
                if (!(got[j] == m.lambda * m.tensor[j])) return CheckStatus::Fail;
        }
    }
    return CheckStatus::Pass;
}

CheckStatus chk_ex7(const VerifyOptions&) {
    long fact[5] = {1, 1, 2, 6, 24};
    for (Dir d : {Dir::Plus, Dir::Minus})
        for (int k = 2; k <= 4; ++k)
            for (int i = 0; i < form_space_dim(k); ++i)
                if (!(form_basis(d, k)[i].lambda.eval_s(GausRat(1)) == GausRat(fact[k])))
                    return CheckStatus::Fail;
    return CheckStatus::Pass;
}

// ------------------------------------------------------------------- hodge

CheckStatus chk_tfa(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const HodgeConfig& cfg = sym_cfg(d);
        Form mu = volume_mu(cfg);
        Form t_one = hodge_T(cfg, unit_form(d));
        if (!(t_one.k == 4 && t_one.coords[0] == mu.coords[0])) return CheckStatus::Fail;
        ScalarQ t_mu = hodge_T(cfg, mu).coords[0];
        if (!(t_mu == P("m^2") * P("alphac*betac") * P("nuc*gamc - epsc*xic")))
            return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_t1(const VerifyOptions&) {
    const Mat& m1 = sym_mat('T', Dir::Plus, 1);
    int n3 = form_space_dim(3);
    bool ok = vec_rel(m1[0], sparse_row(n3, {{1, im() * P("alphac")}}), 0) &&
              vec_rel(m1[1], sparse_row(n3, {{0, -im() * P("betac")}}), 0) &&
              vec_rel(m1[2], sparse_row(n3, {{2, -im() * P("nuc")}, {3, im() * P("epsc")}}), 0) &&
              vec_rel(m1[3], sparse_row(n3, {{2, -im() * P("xic")}, {3, im() * P("gamc")}}), 0);
    return as_status(ok);
}

CheckStatus chk_t3(const VerifyOptions&) {
    const Mat& m3 = sym_mat('T', Dir::Plus, 3);
    int n1 = form_space_dim(1);
    ScalarQ det2 = P("nu*gam - eps*xi");
    ScalarQ ab = P("alphac*betac");
    bool ok =
        vec_rel(m3[0], sparse_row(n1, {{1, -im() * P("q^-2") * P("betac") * det2}}), R) &&
        vec_rel(m3[1], sparse_row(n1, {{0, im() * P("q^2") * P("alphac") * det2}}), R) &&
        vec_rel(m3[2],
                sparse_row(n1, {{2, im() * (P("gam^2*nu") +
                                            ab * P("(1 - q^2 - q^-2)*gam - 2*(q + q^-1)^2*nu - "
                                                   "(q^2 - q^-2)*xi"))},
                                {3, im() * ab * P("xi")}}),
                R) &&
        vec_rel(m3[3],
                sparse_row(n1, {{2, im() * (P("eps^2*xi") +
                                            ab * P("(q^2 - q^-2)*nu + (1 - q^2 - q^-2)*eps"))},
                                {3, im() * ab * P("nu")}}),
                R);
    return as_status(ok);
}

CheckStatus chk_t2f(const VerifyOptions&) {
    const Mat& m2 = sym_mat('T', Dir::Plus, 2);
    int n2 = form_space_dim(2);
    ScalarQ mia = -im() * P("alpha");
    auto phip = sparse_row(n2, {{0, mia * P("q^2*eps + ((q^2 + 1 - q^-2)/(q^2 - 1))*nu")},
                                {4, mia * P("(1/(1 - q^2))*nu")}});
    auto kapm = sparse_row(
        n2, {{0, mia * P("(q^4 + q^2)*eps + (q^4 - q^2)*gam + ((q^6 - q^2 + 1)/(q^2 - 1))*nu")},
             {4, mia * P("-eps + (1/(1 - q^2))*nu")}});
    return as_status(vec_rel(m2[0], phip, RA) && vec_rel(m2[4], kapm, RAX));
}

CheckStatus chk_t2p(const VerifyOptions&) {
    const Mat& m2 = sym_mat('T', Dir::Plus, 2);
    int n2 = form_space_dim(2);
    ScalarQ mib = -im() * P("beta");
    auto phim = sparse_row(n2, {{3, mib * P("-q^-2*eps + ((q^-2 + 1 - q^2)/(q^-2 - 1))*nu")},
                                {1, mib * P("(1/(1 - q^-2))*nu")}});
    auto kapp = sparse_row(
        n2,
        {{3, mib * P("-(q^-4 + q^-2)*eps + (q^-4 - q^-2)*gam + ((q^-6 - q^-2 + 1)/(q^-2 - 1))*nu")},
         {1, mib * P("eps + (1/(1 - q^-2))*nu")}});
    return as_status(vec_rel(m2[3], phim, RA) && vec_rel(m2[1], kapp, RAX));
}

CheckStatus chk_t2s(const VerifyOptions&) {
    const Mat& m2 = sym_mat('T', Dir::Plus, 2);
    int n2 = form_space_dim(2);
    ScalarQ pre = -im() / P("1 + q^2");
    auto psim = sparse_row(
        n2, {{5, pre * P("((1 - q^2 - q^-2)/(1 - q^-2))*nu*gam + ((2 - q^2)/(1 - q^-2))*eps^2 + "
                         "(q^2 - 1)*(q^2 + q^-2 - 1)*alpha*beta")},
             {2, pre * P("((2*q^2 - 1)/(1 - q^-2))*nu*gam + ((-q^4 + q^2 - 1)/(1 - q^-2))*eps^2 + "
                         "(q^2 - 1)*(q^4 + 1 - q^2)*alpha*beta")}});
    return as_status(vec_rel(m2[5], psim, RBX));
}

CheckStatus chk_t2s_psip(const VerifyOptions&) {
    const Mat& m2 = sym_mat('T', Dir::Plus, 2);
    int n2 = form_space_dim(2);
    ScalarQ pre = -im() / P("1 + q^2");
    auto psip_quoted = sparse_row(
        n2,
        {{5, pre * P("((1 - 2*q^-2)/(1 - q^-2))*nu*gam + ((1 - q^-2 - q^-4)/(1 - q^-2))*eps^2 + "
                     "(q^-2 - 1)*(q^2 + q^-2 - 1)*alpha*beta")},
         {2, pre * P("((q^2 - 1 + q^-2)/(1 - q^-2))*nu*gam + ((q^-2 - 2)/(1 - q^-2))*eps^2 + "
                     "(1 - q^2)*(q^2 + q^-2 - 1)*alpha*beta")}});
    auto psip_fixed = psip_quoted;
    psip_fixed[5] = pre * P("((1 - 2*q^-2)/(1 - q^-2))*nu*gam + ((1 - q^-2 + q^-4)/(1 - q^-2))*"
                            "eps^2 + (q^-2 - 1)*(q^2 + q^-2 - 1)*alpha*beta");
    bool quoted_fails = true;
    for (int mask : {0, (int)R, RB, RBX, RA, RAX})
        quoted_fails = quoted_fails && !vec_rel(m2[2], psip_quoted, mask);
    bool corrected = vec_rel(m2[2], psip_fixed, RBX);
    // the defect is a single flipped eps^2 term
    ScalarQ delta = rel(m2[2][5], RBX) - rel(psip_quoted[5], RBX);
    corrected = corrected && delta == rel(pre * P("(2*q^-4/(1 - q^-2))*eps^2"), RBX);
    return as_discrepancy(quoted_fails, corrected);
}

CheckStatus chk_ret(const VerifyOptions&) {
    const HodgeConfig& cfg = sym_cfg(Dir::Plus);
    bool at_rb = true, at_r = true, at_b = true;
    for (int a = 0; a < 4; ++a) {
        Form w = coframe_form(Dir::Plus, a);
        Form lhs = hodge_T(cfg, star_form(w));
        Form rhs = star_form(hodge_T(cfg, w));
        at_rb = at_rb && vec_rel(lhs.coords, rhs.coords, RB);
        at_r = at_r && vec_rel(lhs.coords, rhs.coords, R);
        at_b = at_b && vec_rel(lhs.coords, rhs.coords, B);
    }
    return as_status(at_rb && !at_r && !at_b);
}

CheckStatus chk_htp(const VerifyOptions&) {
    Mat sq = mat_square(sym_mat('T', Dir::Plus, 1), sym_mat('T', Dir::Plus, 3));
    ScalarQ t_mu = hodge_T(sym_cfg(Dir::Plus), volume_mu(sym_cfg(Dir::Plus))).coords[0];
    Contraction gs = Contraction::symbolic();
    ScalarQ p3 = hermitian_cubic_0z(gs);
    ScalarQ p4 = hermitian_cubic_zz(gs);
    ScalarQ m2 = P("m^2");
    bool ok = rel(sq[2][3], RAX).is_zero();
    ok = ok && rel(-sq[3][2], RAX) == rel(m2 * (P("gam") * p3 - P("eps") * p4), RAX);
    ok = ok && rel(-(sq[2][2] - sq[0][0]), RAX) == rel(m2 * (P("eps") * p3 - P("nu") * p4), RAX);
    for (int i : {0, 1, 3}) ok = ok && rel(sq[i][i], RAX) == rel(-t_mu, RAX);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && !(i == 2 && j == 3) && !(i == 3 && j == 2))
                ok = ok && rel(sq[i][j], RAX).is_zero();
    return as_status(ok);
}

CheckStatus chk_htp4(const VerifyOptions&) {
    // last hermitianity condition: quoted trailing signs refuted on the
    // families that must satisfy it; the corrected signs annihilate them.
    ScalarQ a = ScalarQ::symbol(S().a);
    bool quoted_fails = true, corrected = true;
    for (Contraction g : {family_a(a, +1), family_a(a, -1), family_c(a, +1), family_c(a, -1)}) {
        corrected = corrected && hermitian_cubic_zz(g).is_zero();
        ScalarQ quoted = g.gam * g.gam * g.nu -
                         g.alpha * g.beta *
                             (P("q^2 - q^-2") * g.eps - P("2*(q + q^-1)^2") * g.nu -
                              P("(q - q^-1)^2") * g.gam);
        quoted_fails = quoted_fails && !quoted.is_zero();
        corrected = corrected && quoted == -2 * g.alpha * g.beta * P("q^2 - q^-2") * g.eps;
    }
    return as_discrepancy(quoted_fails, corrected);
}

CheckStatus chk_as(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1})
        for (Dir d : {Dir::Plus, Dir::Minus}) {
            ClassifyReport r = classify_T(family_a(a, sign), d);
            if (!(r.real && r.hermitian && r.invertible && r.family == 'a'))
                return CheckStatus::Fail;
        }
    return CheckStatus::Pass;
}

CheckStatus chk_bs(const VerifyOptions&) {
    EvalAt at{P("1/2")};
    Contraction b = family_b(1, mpq_class(1, 2), mpq_class(1, 2), +1);
    ClassifyReport r = classify_T(b, Dir::Plus, at);
    return as_status(r.real && r.hermitian && r.invertible && !r.max_hermitian &&
                     r.family == 'b');
}

CheckStatus chk_cs(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        ClassifyReport r = classify_T(family_c(a, sign), Dir::Plus);
        if (!(r.real && r.hermitian && r.invertible && !r.max_hermitian && r.family == 'c'))
            return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_prop(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    // family a is maximally hermitian for both directions and both operators
    for (int sign : {+1, -1})
        for (Dir d : {Dir::Plus, Dir::Minus}) {
            if (!classify_T(family_a(a, sign), d).max_hermitian) return CheckStatus::Fail;
            if (d == Dir::Plus && !classify_L(family_a(a, sign), d).max_hermitian)
                return CheckStatus::Fail;
        }
    // the other families are not, under either operator
    if (classify_T(family_c(a, +1), Dir::Plus).max_hermitian) return CheckStatus::Fail;
    if (classify_L(family_c(a, +1), Dir::Plus).max_hermitian) return CheckStatus::Fail;
    EvalAt at{P("1/2")};
    Contraction b = family_b(1, mpq_class(1, 2), mpq_class(1, 2), +1);
    if (classify_T(b, Dir::Plus, at).max_hermitian) return CheckStatus::Fail;
    if (classify_L(b, Dir::Plus, at).max_hermitian) return CheckStatus::Fail;
    // and a fully symbolic contraction is not even hermitian
    return as_status(!classify_T(Contraction::symbolic(), Dir::Plus).hermitian);
}

CheckStatus chk_t2ms(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        HodgeConfig cfg{g, ScalarQ::symbol(S().m), Dir::Plus};
        Mat m2 = hodge_matrix(cfg, 2, 'T');
        std::vector<ScalarQ> want = {
            -im() * P("q^2") * g.alpha * g.eps, -im() * P("q^2") * g.alpha * g.eps,
            im() * P("q^2 - 1") * g.alpha * g.beta, im() * g.alpha * g.eps,
            im() * g.alpha * g.eps, -im() * P("1 - q^-2") * g.alpha * g.beta};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (!(m2[i][j] == ((i == j) ? want[i] : ScalarQ(0)))) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_t2mms(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        HodgeConfig cfm{g, ScalarQ::symbol(S().m), Dir::Minus};
        Mat k2 = hodge_matrix(cfm, 2, 'T');
        std::vector<ScalarQ> want = {
            -im() * g.alpha * g.eps, -im() * g.alpha * g.eps,
            -im() * P("q^-2 - 1") * g.alpha * g.beta, im() * P("q^2") * g.alpha * g.eps,
            im() * P("q^2") * g.alpha * g.eps, im() * P("1 - q^2") * g.alpha * g.beta};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (!(k2[i][j] == ((i == j) ? want[i] : ScalarQ(0)))) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_qde(const VerifyOptions&) {
    Contraction gs = Contraction::symbolic();
    ScalarQ dq = det_q(gs, Dir::Plus);
    bool ok = dq == P("alpha*beta*(nu*gam - eps*xi)") && det_q(gs, Dir::Minus) == dq;
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1})
        ok = ok && det_q(family_a(a, sign), Dir::Plus) == P("-q^2*(1 - q^2)^2*a^4");
    ok = ok && sign_at(det_q(family_a(ScalarQ(1), +1), Dir::Plus), GausRat(mpq_class(1, 2))) == -1;
    return as_status(ok);
}

CheckStatus chk_boh(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        ScalarQ m = normalized_m(a);
        if (!(m * m * g.alpha * g.beta * g.eps * g.eps == ScalarQ(1))) return CheckStatus::Fail;
        for (Dir d : {Dir::Plus, Dir::Minus}) {
            HodgeConfig cfg{g, m, d};
            if (!(hodge_T(cfg, volume_mu(cfg)).coords[0] == ScalarQ(-1))) return CheckStatus::Fail;
        }
    }
    return CheckStatus::Pass;
}

// shared by the duality checks: normalized family-a Hodge matrices
const std::map<int, Mat>& family_mats(Dir d) {
    static std::map<int, Mat> plus, minus;
    std::map<int, Mat>& t = (d == Dir::Plus) ? plus : minus;
    if (t.empty()) {
        ScalarQ a = ScalarQ::symbol(S().a);
        HodgeConfig cfg{family_a(a, +1), normalized_m(a), d};
        for (int k = 0; k <= 4; ++k) t[k] = hodge_matrix(cfg, k, 'T');
    }
    return t;
}

CheckStatus duality_square(Dir d) {
    const std::map<int, Mat>& t = family_mats(d);
    for (int k = 0; k <= 4; ++k) {
        int n = form_space_dim(k);
        int par = (k * (4 - k)) % 2 ? -1 : 1;
        Mat sq = mat_square(t.at(k), t.at(4 - k));
        for (int i = 0; i < n; ++i) {
            ScalarQ ratio = form_basis(d, k)[i].lambda / star_eigenvalue(d, k, i);
            for (int j = 0; j < n; ++j)
                if (!(sq[i][j] == ((i == j) ? ScalarQ(-par) * ratio : ScalarQ(0))))
                    return CheckStatus::Fail;
        }
    }
    return CheckStatus::Pass;
}

CheckStatus chk_stg(const VerifyOptions&) { return duality_square(Dir::Plus); }
CheckStatus chk_stgm(const VerifyOptions&) { return duality_square(Dir::Minus); }

CheckStatus chk_fq(const VerifyOptions&) {
    const std::map<int, Mat>& tp = family_mats(Dir::Plus);
    const std::map<int, Mat>& tm = family_mats(Dir::Minus);
    for (int k = 0; k <= 4; ++k) {
        int n = form_space_dim(k);
        int par = (k * (4 - k)) % 2 ? -1 : 1;
        Mat fw = mat_square(tp.at(k), tm.at(4 - k));
        Mat bw = mat_square(tm.at(k), tp.at(4 - k));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ScalarQ want = (i == j) ? ScalarQ(-par) : ScalarQ(0);
                if (!(fw[i][j] == want && bw[i][j] == want)) return CheckStatus::Fail;
            }
    }
    return CheckStatus::Pass;
}

CheckStatus chk_rtt(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    Contraction g = family_a(a, +1);
    ScalarQ m = normalized_m(a);
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        HodgeConfig cfg{g, m, d};
        for (int k = 0; k <= 4; ++k)
            for (int i = 0; i < form_space_dim(k); ++i) {
                Form b = basis_form(d, k, i);
                Form lhs = form_scale(star_eigenvalue(d, k, i), star_form(hodge_T(cfg, b)));
                Form rhs = form_scale(form_basis(d, k)[i].lambda, hodge_T(cfg, star_form(b)));
                if (!(lhs == rhs)) return CheckStatus::Fail;
            }
    }
    return CheckStatus::Pass;
}

CheckStatus chk_pq(const VerifyOptions&) {
    // with a free scale m the Hodge square is the eigenvalue ratio times the
    // square of the unit
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
            ScalarQ ratio = form_basis(Dir::Plus, k)[i].lambda / star_eigenvalue(Dir::Plus, k, i);
            for (int j = 0; j < form_space_dim(k); ++j)
                if (!(sq[i][j] == ((i == j) ? ScalarQ(par) * ratio * t_one : ScalarQ(0))))
                    return CheckStatus::Fail;
        }
    }
    return CheckStatus::Pass;
}

CheckStatus chk_mt04(const VerifyOptions&) {
    const HodgeConfig& cp = sym_cfg(Dir::Plus);
    const HodgeConfig& cm = sym_cfg(Dir::Minus);
    bool ok = volume_mu(cp).coords[0] == volume_mu(cm).coords[0];
    ok = ok && hodge_T(cm, unit_form(Dir::Minus)).coords[0] == volume_mu(cp).coords[0];
    ok = ok && hodge_T(cm, volume_mu(cm)).coords[0] == hodge_T(cp, volume_mu(cp)).coords[0];
    return as_status(ok);
}

CheckStatus chk_mt1(const VerifyOptions&) {
    const Mat& p1 = sym_mat('T', Dir::Plus, 1);
    const Mat& n1 = sym_mat('T', Dir::Minus, 1);
    for (int i = 0; i < 4; ++i)
        if (!vec_rel(p1[i], n1[i], 0)) return CheckStatus::Fail;
    return CheckStatus::Pass;
}

CheckStatus chk_e3mp(const VerifyOptions&) {
    // on 3-forms the directions agree exactly when the data is hermitian for
    // both operators, which forces family a
    const Mat& p3 = sym_mat('T', Dir::Plus, 3);
    const Mat& n3 = sym_mat('T', Dir::Minus, 3);
    bool all = true;
    for (int i = 0; i < 4 && all; ++i) all = vec_rel(p3[i], n3[i], RAX);
    if (all) return CheckStatus::Fail; // plus-hermitianity alone must not suffice

    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        HodgeConfig gp{g, ScalarQ::symbol(S().m), Dir::Plus};
        HodgeConfig gm{g, ScalarQ::symbol(S().m), Dir::Minus};
        Mat mp = hodge_matrix(gp, 3, 'T');
        Mat mm = hodge_matrix(gm, 3, 'T');
        for (int i = 0; i < 4; ++i)
            if (!vec_rel(mp[i], mm[i], 0)) return CheckStatus::Fail;
    }

    // family c fails minus-hermitianity and separates the directions
    Contraction c = family_c(a, +1);
    if (classify_T(c, Dir::Minus).hermitian) return CheckStatus::Fail;
    HodgeConfig cp{c, ScalarQ::symbol(S().m), Dir::Plus};
    HodgeConfig cm{c, ScalarQ::symbol(S().m), Dir::Minus};
    Mat mp = hodge_matrix(cp, 3, 'T');
    Mat mm = hodge_matrix(cm, 3, 'T');
    bool same = true;
    for (int i = 0; i < 4 && same; ++i) same = vec_rel(mp[i], mm[i], 0);
    if (same) return CheckStatus::Fail;

    // within reality the minus-direction obstruction is a multiple of nu
    Mat sq = mat_square(sym_mat('T', Dir::Minus, 1), sym_mat('T', Dir::Minus, 3));
    if (!rel(sq[3][2], RAX).is_zero()) return CheckStatus::Fail;
    ScalarQ nu = ScalarQ::symbol(S().nu), eps = ScalarQ::symbol(S().eps),
            gam = ScalarQ::symbol(S().gam);
    ScalarQ Q = P("q^2*alpha^2") *
                    (P("q^4 - q^-4") * nu + P("q^4 - 2*q^2 + 2 - 2*q^-2 + q^-4") * eps) -
                eps * (eps * eps - nu * gam);
    return as_status(rel(sq[2][3], RAX) == P("m^2") * nu * Q);
}

CheckStatus chk_lq01(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        const Mat& t1 = sym_mat('T', d, 1);
        const Mat& l1 = sym_mat('L', d, 1);
        for (int i = 0; i < 4; ++i)
            if (!vec_rel(t1[i], l1[i], 0)) return CheckStatus::Fail;
        if (!(hodge_L(sym_cfg(d), unit_form(d)).coords[0] == volume_mu(sym_cfg(d)).coords[0]))
            return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_rcl(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        Contraction g = family_a(a, +1);
        HodgeConfig cfg{g, ScalarQ::symbol(S().m), d};
        for (int k = 1; k <= 3; ++k) {
            Mat tk = hodge_matrix(cfg, k, 'T');
            Mat lk = hodge_matrix(cfg, k, 'L');
            for (size_t i = 0; i < tk.size(); ++i)
                if (!vec_rel(tk[i], lk[i], 0)) return CheckStatus::Fail;
        }
        for (int k = 0; k <= 4; ++k)
            for (int i = 0; i < form_space_dim(k); ++i) {
                Form b = basis_form(d, k, i);
                Form lhs = form_scale(star_eigenvalue(d, k, i), star_form(hodge_L(cfg, b)));
                Form rhs = form_scale(form_basis(d, k)[i].lambda, hodge_L(cfg, star_form(b)));
                if (!(lhs == rhs)) return CheckStatus::Fail;
            }
    }
    return CheckStatus::Pass;
}

CheckStatus chk_v4(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    ScalarQ shape = P("-2*(q + q^-1)^2*(q^2 + 1 + q^-2)*m^2");
    for (int sign : {+1, -1}) {
        Contraction g = family_a(a, sign);
        HodgeConfig cfg{g, ScalarQ::symbol(S().m), Dir::Plus};
        std::vector<ScalarQ> mu_t = form_tensor(volume_mu(cfg));
        ScalarQ gmm = contract(g, mu_t, 4, mu_t, 4)[0];
        if (!(gmm == shape * g.alpha * g.beta * g.eps * g.eps)) return CheckStatus::Fail;
    }
    // generically the pairing does not factor through the family shape
    Contraction gs = Contraction::symbolic();
    HodgeConfig cfg{gs, ScalarQ::symbol(S().m), Dir::Plus};
    std::vector<ScalarQ> mu_t = form_tensor(volume_mu(cfg));
    ScalarQ gmm = contract(gs, mu_t, 4, mu_t, 4)[0];
    return as_status(!(gmm == shape * gs.alpha * gs.beta * gs.eps * gs.eps));
}

CheckStatus chk_n4(const VerifyOptions&) {
    // the recorded volume inequality between the two operators reflects the
    // quoted top eigenvalue; with the computed one they agree on the family
    ScalarQ a = ScalarQ::symbol(S().a);
    bool corrected = true;
    for (int sign : {+1, -1})
        for (Dir d : {Dir::Plus, Dir::Minus}) {
            Contraction g = family_a(a, sign);
            HodgeConfig cfg{g, ScalarQ::symbol(S().m), d};
            Form mu = volume_mu(cfg);
            ScalarQ lmu = hodge_L(cfg, mu).coords[0];
            ScalarQ tmu = hodge_T(cfg, mu).coords[0];
            corrected = corrected && lmu == tmu && lmu == P("(-q^6 + 2*q^4 - q^2)*m^2*a^4");
        }
    // the quoted inequality does hold for generic contractions
    const HodgeConfig& cfg = sym_cfg(Dir::Plus);
    bool quoted_generic = !(hodge_L(cfg, volume_mu(cfg)).coords[0] ==
                            hodge_T(cfg, volume_mu(cfg)).coords[0]);
    return as_discrepancy(quoted_generic, corrected);
}

// ------------------------------------------------------------------ metric

CheckStatus chk_gtq(const VerifyOptions&) {
    MetricMat g = metric_from_contraction(Contraction::symbolic());
    Mat want(4, std::vector<ScalarQ>(4));
    want[L_MINUS][L_PLUS] = -P("beta");
    want[L_PLUS][L_MINUS] = -P("alpha");
    want[L_ZERO][L_ZERO] = -P("nu");
    want[L_ZERO][L_Z] = -P("eps");
    want[L_Z][L_ZERO] = -P("xi");
    want[L_Z][L_Z] = -P("gam");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (!(g[a][b] == want[a][b])) return CheckStatus::Fail;
    return CheckStatus::Pass;
}

CheckStatus chk_cop(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        MetricMat got = metric_from_contraction(family_a(a, sign));
        MetricMat want = metric_branch(-a, sign);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!(got[i][j] == want[i][j])) return CheckStatus::Fail;
        if (classify_metric(got) == MetricClass::NotInFamily) return CheckStatus::Fail;
    }
    // family c has a nonzero (0,0) entry, outside the two-branch family
    MetricMat c = metric_from_contraction(family_c(a, +1));
    return as_status(!c[L_ZERO][L_ZERO].is_zero() &&
                     classify_metric(c) == MetricClass::NotInFamily);
}

CheckStatus chk_msig(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    if (sigma_branch_sign() != +1) return CheckStatus::Fail;
    MetricAxioms ax = metric_axioms(metric_branch(a, sigma_branch_sign()));
    return as_status(ax.all());
}

CheckStatus chk_mrej(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    MetricAxioms ax = metric_axioms(metric_branch(a, -sigma_branch_sign()));
    return as_status(ax.nondegenerate && ax.real && ax.coinvariant && !ax.sigma_symmetric &&
                     !ax.braided_symmetric);
}

CheckStatus chk_mdet(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    for (int sign : {+1, -1}) {
        ScalarQ det = metric_det(metric_branch(a, sign));
        if (!(det == P("q^2*(1 - q^2)^2*a^4"))) return CheckStatus::Fail;
        if (!(det == -det_q(family_a(a, sign), Dir::Plus))) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_mcls(const VerifyOptions&) {
    ScalarQ a = ScalarQ::symbol(S().a);
    bool ok = classify_metric(metric_branch(a, sigma_branch_sign())) == MetricClass::SigmaBranch;
    ok = ok && classify_metric(metric_branch(a, -sigma_branch_sign())) == MetricClass::OtherBranch;
    MetricMat id(4, std::vector<ScalarQ>(4));
    for (int i = 0; i < 4; ++i) id[i][i] = ScalarQ(1);
    ok = ok && classify_metric(id) == MetricClass::NotInFamily;
    MetricMat bad = metric_branch(a, sigma_branch_sign());
    bad[L_MINUS][L_MINUS] = a;
    ok = ok && classify_metric(bad) == MetricClass::NotInFamily;
    EvalAt half{P("1/2")};
    ok = ok && metric_axioms(metric_branch(ScalarQ(1), sigma_branch_sign()), half).all();
    return as_status(ok);
}

// ------------------------------------------------------------------ oracle

CheckStatus chk_oassoc(const VerifyOptions&) {
    std::vector<AlgebraElement> gens = {
        AlgebraElement::gen_a(), AlgebraElement::gen_astar(), AlgebraElement::gen_c(),
        AlgebraElement::gen_cstar(),
        AlgebraElement::monomial(1, 1, 0) + AlgebraElement::monomial(0, 0, 1, P("i*q"))};
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens)
                if (!((x * y) * z == x * (y * z))) return CheckStatus::Fail;
    return CheckStatus::Pass;
}

CheckStatus chk_oantihom(const VerifyOptions&) {
    for (const AlgebraElement& x : monomials_up_to(2))
        for (const AlgebraElement& y :
             {AlgebraElement::gen_a(), AlgebraElement::gen_c(),
              AlgebraElement::monomial(-1, 0, 1, P("1 + i"))})
            if (!((x * y).star() == y.star() * x.star())) return CheckStatus::Fail;
    return CheckStatus::Pass;
}

CheckStatus chk_ocomm(const VerifyOptions&) {
    for (UqGen g : {UqGen::E, UqGen::F, UqGen::K})
        for (UqGen h : {UqGen::E, UqGen::F, UqGen::K})
            for (const AlgebraElement& x : monomials_up_to(2))
                if (!(act(g, act(h, x, Side::Right), Side::Left) ==
                      act(h, act(g, x, Side::Left), Side::Right)))
                    return CheckStatus::Fail;
    return CheckStatus::Pass;
}

CheckStatus chk_oweight(const VerifyOptions&) {
    for (const AlgebraElement& x : monomials_up_to(3)) {
        auto n = x.charge();
        if (!n) return CheckStatus::Fail;
        ScalarQ w = ScalarQ::s_var().pow(*n);
        if (!(act(UqGen::K, x, Side::Left) == x * w)) return CheckStatus::Fail;
    }
    // charge is additive on products
    AlgebraElement p = AlgebraElement::monomial(2, 1, 0) * AlgebraElement::monomial(-1, 0, 2);
    return as_status(p.charge() && *p.charge() == (-(2 + 1)) + (-(-1 - 2)));
}

CheckStatus chk_ol0(const VerifyOptions&) {
    return as_status(same_action(tangent_op(L_ZERO), tangent_L0_alt(), 3, Side::Left));
}

CheckStatus chk_olit(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus})
        if (!(antisym(d, 4) == antisym_literal(d, 4))) return CheckStatus::Fail;
    return CheckStatus::Pass;
}

CheckStatus chk_oshuf(const VerifyOptions&) {
    // the two factorizations are mutually consistent through the recursion
    for (Dir d : {Dir::Plus, Dir::Minus})
        for (auto [k, l] : {std::pair{1, 2}, {2, 1}}) {
            SpMatZ lhs = antisym(d, k).kron(antisym(d, l)) * shuffle_sum(d, k, l);
            SpMatZ rhs = shuffle_sum_left(d, k, l) * antisym(d, k).kron(antisym(d, l));
            if (!(lhs == rhs)) return CheckStatus::Fail;
        }
    return CheckStatus::Pass;
}

CheckStatus chk_ostar2(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus})
        for (int k = 0; k <= 4; ++k)
            for (int i = 0; i < form_space_dim(k); ++i) {
                Form b = basis_form(d, k, i);
                if (!(star_form(star_form(b)) == b)) return CheckStatus::Fail;
            }
    return CheckStatus::Pass;
}

CheckStatus chk_oround(const VerifyOptions&) {
    for (Dir d : {Dir::Plus, Dir::Minus})
        for (int k = 0; k <= 4; ++k)
            for (int i = 0; i < form_space_dim(k); ++i) {
                Form b = basis_form(d, k, i);
                Form back = form_from_tensor(form_tensor(b), k, d);
                if (!(back == b)) return CheckStatus::Fail;
            }
    return CheckStatus::Pass;
}

CheckStatus chk_oeval(const VerifyOptions&) {
    ScalarQ x = P("(q^2 - q^-2)/(q + q^-1)^2 + i*q^3 - 5/7");
    GausRat via_q = x.eval_q(GausRat(mpq_class(9, 4)));
    GausRat via_s = x.eval_s(GausRat(mpq_class(3, 2)));
    if (!(via_q == via_s)) return CheckStatus::Fail;
    // eval through a symbol substitution agrees with direct parsing
    ScalarQ y = ScalarQ::symbol(S().alpha) * P("q") + ScalarQ(1);
    ScalarQ ysub = y.substitute(S().alpha, P("q^-1"));
    return as_status(ysub == ScalarQ(2));
}

// --------------------------------------------------------------- laplacian

CheckStatus chk_relsu(const VerifyOptions&) {
    ScalarQ q = ScalarQ::q_var();
    AlgebraElement a = AlgebraElement::gen_a(), as = AlgebraElement::gen_astar();
    AlgebraElement c = AlgebraElement::gen_c(), cs = AlgebraElement::gen_cstar();
    bool ok = a * c == c * a * q && a * cs == cs * a * q && c * cs == cs * c;
    ok = ok && as * a + cs * c == AlgebraElement::one();
    ok = ok && a * as + c * cs * P("q^2") == AlgebraElement::one();
    ok = ok && a.star() == as && c.star() == cs;
    return as_status(ok);
}

CheckStatus chk_derel(const VerifyOptions&) {
    UqElement E = UqElement::gen(UqGen::E), F = UqElement::gen(UqGen::F);
    UqElement K = UqElement::gen(UqGen::K), Ki = UqElement::gen(UqGen::Kinv);
    ScalarQ q = ScalarQ::q_var();
    for (Side side : {Side::Left, Side::Right}) {
        if (!same_action(K * E, E * K * q, 3, side)) return CheckStatus::Fail;
        if (!same_action(K * F, F * K * q.inverse(), 3, side)) return CheckStatus::Fail;
        UqElement comm = E * F - F * E;
        UqElement want = (K * K - Ki * Ki) * (P("q - q^-1").inverse());
        if (!same_action(comm, want, 3, side)) return CheckStatus::Fail;
        if (!same_action(K * Ki, UqElement::scalar(ScalarQ(1)), 3, side)) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_ndp(const VerifyOptions&) {
    // pairing controls: each tangent operator detects a generator
    bool ok = pairing(tangent_op(L_PLUS), AlgebraElement::gen_c()) == ScalarQ(1);
    ok = ok && !pairing(tangent_op(L_MINUS), AlgebraElement::gen_cstar()).is_zero();
    ok = ok && !pairing(tangent_op(L_Z), AlgebraElement::gen_a() - AlgebraElement::one()).is_zero();
    ok = ok &&
         !pairing(tangent_op(L_ZERO), AlgebraElement::gen_a() - AlgebraElement::one()).is_zero();
    // and annihilates the unit
    for (int l = 0; l < NLABELS; ++l)
        ok = ok && pairing(tangent_op(l), AlgebraElement::one()).is_zero();
    return as_status(ok);
}

CheckStatus chk_clnm(const VerifyOptions&) {
    for (int n = -2; n <= 2; ++n)
        for (int twoJ = std::abs(n); twoJ <= 4; twoJ += 2)
            for (int l = 0; l <= twoJ; ++l) {
                AlgebraElement phi = build_phi(n, twoJ, l);
                if (phi.is_zero()) return CheckStatus::Fail;
                auto ch = phi.charge();
                if (!ch || *ch != n) return CheckStatus::Fail;
            }
    return as_status(build_phi(1, 1, 0) == AlgebraElement::gen_astar());
}

CheckStatus chk_ideal(const VerifyOptions&) {
    const std::vector<AlgebraElement>& gens = ideal_generators();
    if (gens.size() != 9) return CheckStatus::Fail;
    for (const AlgebraElement& g : gens) {
        if (!g.counit().is_zero()) return CheckStatus::Fail;
        for (int l = 0; l < NLABELS; ++l)
            if (!pairing(tangent_op(l), g).is_zero()) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_qprp(const VerifyOptions&) {
    for (int n = -2; n <= 2; ++n)
        for (int twoJ = std::abs(n); twoJ <= 4; twoJ += 2)
            for (int l = 0; l <= twoJ; ++l) {
                AlgebraElement phi = build_phi(n, twoJ, l);
                ScalarQ lz = lambda_z(n);
                if (!(act(tangent_op(L_Z), phi, Side::Left) == phi * lz)) return CheckStatus::Fail;
                ScalarQ l0 = ScalarQ::qnum(twoJ) * ScalarQ::qnum(twoJ + 2);
                if (!(act(tangent_op(L_ZERO), phi, Side::Left) == phi * l0))
                    return CheckStatus::Fail;
            }
    return CheckStatus::Pass;
}

CheckStatus chk_cas(const VerifyOptions&) {
    bool ok = same_action(casimir(), casimir_via_L0(), 3, Side::Left);
    for (int twoJ = 0; twoJ <= 4; twoJ += 2) {
        AlgebraElement phi = build_phi(0, twoJ, 0);
        ScalarQ want = ScalarQ::qnum(twoJ) * ScalarQ::qnum(twoJ + 2) +
                       ScalarQ::qnum(1) * ScalarQ::qnum(1) - P("1/4");
        ok = ok && act(casimir(), phi, Side::Left) == phi * want;
    }
    return as_status(ok);
}

CheckStatus chk_om4(const VerifyOptions&) {
    // the invariant coframe reconstructed from the differentials: each
    // candidate combination pairs to delta_ab against the tangent operators
    AlgebraElement a = AlgebraElement::gen_a(), as = AlgebraElement::gen_astar();
    AlgebraElement c = AlgebraElement::gen_c(), cs = AlgebraElement::gen_cstar();
    ScalarQ q = ScalarQ::q_var();

    auto d = [](const AlgebraElement& x) { return differential(x); };
    auto combo = [&](std::vector<std::pair<AlgebraElement, AlgebraElement>> terms) {
        std::array<AlgebraElement, 4> out;
        for (auto& [coef, x] : terms) {
            std::array<AlgebraElement, 4> dx = d(x);
            for (int i = 0; i < 4; ++i) out[i] += coef * dx[i];
        }
        return out;
    };

    std::array<std::array<AlgebraElement, 4>, 4> omega;
    omega[L_MINUS] = combo({{cs, as}, {as * (-q), cs}});
    omega[L_PLUS] = combo({{a, c}, {c * (-q), a}});
    omega[L_Z] = combo({{as, a}, {cs, c}, {-a, as}, {c * P("-q^2"), cs}});
    ScalarQ pre = (P("1 + q") * ScalarQ::qnum(1) * ScalarQ::qnum(3)).inverse();
    omega[L_ZERO] = combo({{as * pre, a}, {cs * pre, c}, {a * (q * pre), as},
                           {c * (P("q^3") * pre), cs}});

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            AlgebraElement want = (i == j) ? AlgebraElement::one() : AlgebraElement();
            if (!(omega[i][j] == want)) return CheckStatus::Fail;
        }
    return CheckStatus::Pass;
}

CheckStatus chk_sur(const VerifyOptions&) {
    ScalarQ alpha = ScalarQ::symbol(S().alpha);
    return as_status(same_action(box_l(alpha, +1), box_collapsed(alpha), 3, Side::Left));
}

CheckStatus chk_boxr(const VerifyOptions&) {
    ScalarQ alpha = ScalarQ::symbol(S().alpha);
    bool same_sigma = same_action(box_l(alpha, +1), box_r(alpha, +1), 3, Side::Left);
    bool same_other = same_action(box_l(alpha, -1), box_r(alpha, -1), 3, Side::Left);
    return as_status(same_sigma && !same_other);
}

CheckStatus chk_lq(const VerifyOptions&) {
    // closed eigenvalues on the canonical basis, both branches
    for (int branch : {+1, -1})
        for (int n = -2; n <= 2; ++n)
            for (int twoJ = std::abs(n); twoJ <= 4; twoJ += 2)
                for (int l = 0; l <= twoJ; ++l) {
                    AlgebraElement phi = build_phi(n, twoJ, l);
                    ScalarQ lam = box_eigenvalue(ScalarQ(1), branch, n, twoJ);
                    if (!(act(box_l(ScalarQ(1), branch), phi, Side::Left) == phi * lam))
                        return CheckStatus::Fail;
                }
    // the sigma branch is charge independent, the other is not
    bool ok = box_eigenvalue(ScalarQ(1), +1, 2, 2) == box_eigenvalue(ScalarQ(1), +1, 0, 2);
    ok = ok && !(box_eigenvalue(ScalarQ(1), -1, 2, 2) == box_eigenvalue(ScalarQ(1), -1, 0, 2));
    ok = ok && box_eigenvalue(ScalarQ(1), +1, 0, 2) == P("2*q") * ScalarQ::qnum(2) * ScalarQ::qnum(4);
    return as_status(ok);
}

CheckStatus chk_cola(const VerifyOptions&) {
    for (int n = -1; n <= 1; ++n)
        for (int twoJ = std::abs(n); twoJ <= 3; twoJ += 2) {
            AlgebraElement phi = build_phi(n, twoJ, 0);
            if (!(act(delta_q_op(), phi, Side::Left) == phi * delta_q_eigenvalue(twoJ)))
                return CheckStatus::Fail;
        }
    for (int twoJ = 0; twoJ <= 5; ++twoJ) {
        GausRat v = delta_q_eigenvalue(twoJ).eval_s(GausRat(1));
        mpq_class want(twoJ * (twoJ + 2), 4);
        want.canonicalize();
        if (!(v.im == 0 && v.re == want)) return CheckStatus::Fail;
    }
    return CheckStatus::Pass;
}

CheckStatus chk_spq(const VerifyOptions&) {
    GausRat q0{mpq_class(1, 2)};
    std::vector<SpectrumRow> sig = scan_spectrum(ScalarQ(1), +1, q0, 8, 8);
    if (sig.size() != 45) return CheckStatus::Fail;
    for (const SpectrumRow& r : sig) {
        if (!(r.value.im == 0) || r.value.re < 0) return CheckStatus::Fail;
        if ((r.value.re == 0) != (r.twoJ == 0)) return CheckStatus::Fail;
        if (r.n == 0 && r.twoJ == 2 && !(r.value.re == mpq_class(5, 2))) return CheckStatus::Fail;
    }
    std::vector<SpectrumRow> oth = scan_spectrum(ScalarQ(1), -1, q0, 8, 8);
    int pos = 0, neg = 0;
    for (const SpectrumRow& r : oth) {
        pos += r.value.re > 0;
        neg += r.value.re < 0;
    }
    return as_status(oth.size() == 45 && pos == 24 && neg == 20);
}

struct CheckDef {
    const char* tag;
    const char* suite;
    const char* detail;
    CheckStatus (*run)(const VerifyOptions&);
};

const CheckDef REGISTRY[] = {
    // braiding
    {"br1", "braiding", "the braiding and its inverse compose to the identity", chk_br1},
    {"br2", "braiding", "the braiding preserves the tensor charge", chk_br2},
    {"br3", "braiding", "braid relation on three factors", chk_br3},
    {"br4", "braiding", "minimal polynomial (x - 1)(x + q^2)(x + q^-2), genuinely cubic",
     chk_br4},
    {"spb", "braiding",
     "quoted spectral resolution puts -1 on the large eigenspace; computed sign is +1",
     chk_spb},
    {"br5", "braiding", "eigenspace dimensions are 10, 3 and 3", chk_br5},
    {"br6", "braiding", "distant lifted braidings commute", chk_br6},
    // exterior
    {"ex1", "exterior", "antisymmetrizer recursion equals the literal signed sum", chk_ex1},
    {"ex2", "exterior", "antisymmetrizer ranks are 6, 4, 1", chk_ex2},
    {"ex3", "exterior", "the degree five antisymmetrizer vanishes", chk_ex3},
    {"ex4", "exterior", "right shuffle factorization through degree four", chk_ex4},
    {"ex5", "exterior", "left shuffle factorization through degree four", chk_ex5},
    {"ex6", "exterior", "the antisymmetrizer kernels agree for the two braidings", chk_ex6},
    {"spe2", "exterior", "two-form eigenbasis with eigenvalues 1 + q^2 and 1 + q^-2, three each",
     chk_spe2},
    {"p15-", "exterior", "three-form eigenvalue 2(1 + q^2 + q^-2) on all four generators",
     chk_p15m},
    {"p15", "exterior",
     "top eigenvalue: quoted coefficients refuted, computed value 2(q + q^-1)^2(q^2 + 1 + q^-2)",
     chk_p15},
    {"spe2-", "exterior", "inverse-braiding two-forms are q^{-+2} scalings, eigenvalues swapped",
     chk_spe2m},
    {"sp3-", "exterior", "inverse-braiding three- and four-forms coincide with the principal ones",
     chk_sp3m},
    {"ex7", "exterior", "classical limit of the nonzero eigenvalues is k!", chk_ex7},
    // hodge
    {"Tfa", "hodge", "Hodge image of the unit is the volume form; its square is the determinant",
     chk_tfa},
    {"T1", "hodge", "degree-one coframe images, no relations needed", chk_t1},
    {"T3", "hodge", "degree-three images for a real (0, z) block", chk_t3},
    {"T2f", "hodge", "two-form images on the phi+/kappa- pair", chk_t2f},
    {"T2p", "hodge", "two-form images on the phi-/kappa+ pair", chk_t2p},
    {"T2s", "hodge", "two-form image of psi-", chk_t2s},
    {"T2s+", "hodge", "two-form image of psi+: quoted eps^2 numerator has one flipped sign",
     chk_t2s_psip},
    {"reT", "hodge", "reality holds exactly at beta* = q^2 alpha with a real (0, z) block",
     chk_ret},
    {"hT+", "hodge", "hermitianity conditions are generated by two cubic relations", chk_htp},
    {"hT+4", "hodge", "last hermitianity condition: quoted trailing signs must both flip",
     chk_htp4},
    {"as", "hodge", "family a is real, hermitian and invertible in both directions", chk_as},
    {"bs", "hodge", "family b instances are hermitian but not maximally so", chk_bs},
    {"cs", "hodge", "family c is hermitian but not maximally so", chk_cs},
    {"prop", "hodge", "family a is exactly the maximally hermitian locus, both operators",
     chk_prop},
    {"T2ms", "hodge", "family a two-form spectrum, principal direction", chk_t2ms},
    {"T2mms", "hodge", "family a two-form spectrum, inverse direction", chk_t2mms},
    {"qde", "hodge", "quantum determinant alpha beta (nu gam - eps xi), direction independent",
     chk_qde},
    {"boh", "hodge", "normalized scale sends the volume square to -1", chk_boh},
    {"sTg", "hodge", "normalized Hodge squares equal the eigenvalue ratio, principal direction",
     chk_stg},
    {"sTgm", "hodge", "normalized Hodge squares equal the eigenvalue ratio, inverse direction",
     chk_stgm},
    {"fq", "hodge", "mixed-direction squares collapse to the parity sign", chk_fq},
    {"rTt", "hodge", "involution compatibility of the normalized operator, all degrees", chk_rtt},
    {"pq", "hodge", "squares against the unnormalized volume scale with the unit square", chk_pq},
    {"mT04", "hodge", "the directions share unit and volume images", chk_mt04},
    {"mT1", "hodge", "the directions share the degree-one images", chk_mt1},
    {"e3mp", "hodge", "three-form direction agreement characterizes joint hermitianity",
     chk_e3mp},
    {"Lq01", "hodge", "companion operator agrees on degree one and the unit", chk_lq01},
    {"rcL", "hodge", "companion operator matches on the family and respects the involution",
     chk_rcl},
    {"v4", "hodge", "volume pairing on the family factors through the quoted shape", chk_v4},
    {"n4", "hodge",
     "volume images of the two operators agree on the family; the recorded inequality is generic",
     chk_n4},
    // metric
    {"gtq", "metric", "the metric of a contraction stars the first slot", chk_gtq},
    {"cop", "metric", "hermitian contractions induce the two-branch candidate family", chk_cop},
    {"msig", "metric", "exactly the plus branch satisfies every symmetry axiom", chk_msig},
    {"mrej", "metric", "the rejected branch fails sigma-symmetry and the braided axiom only",
     chk_mrej},
    {"mdet", "metric", "branch determinant q^2 (1 - q^2)^2 a^4 is minus the quantum determinant",
     chk_mdet},
    {"mcls", "metric", "membership classification separates branches and perturbations",
     chk_mcls},
    // oracle
    {"oassoc", "oracle", "normal-form product is associative", chk_oassoc},
    {"oantihom", "oracle", "the star on functions is an antihomomorphism", chk_oantihom},
    {"ocomm", "oracle", "left and right actions commute", chk_ocomm},
    {"oweight", "oracle", "the K weight matches the charge grading", chk_oweight},
    {"oL0", "oracle", "both closed forms of the zero tangent operator act identically", chk_ol0},
    {"olit", "oracle", "degree-four antisymmetrizer against the literal signed sum", chk_olit},
    {"oshuf", "oracle", "left and right shuffle factorizations are mutually consistent",
     chk_oshuf},
    {"ostar2", "oracle", "the star of forms is an involution on every basis form", chk_ostar2},
    {"oround", "oracle", "form coordinates round-trip through tensors", chk_oround},
    {"oeval", "oracle", "rational evaluation agrees with square-root substitution", chk_oeval},
    // laplacian
    {"relsu", "laplacian", "defining relations of the function algebra", chk_relsu},
    {"derel", "laplacian", "quantum-group generator relations hold in both actions", chk_derel},
    {"ndp", "laplacian", "the tangent pairing has nonzero controls and kills the unit", chk_ndp},
    {"clnm", "laplacian", "canonical basis elements carry the stated charge", chk_clnm},
    {"ideal", "laplacian", "all nine ideal generators are tangent-annihilated", chk_ideal},
    {"qprp", "laplacian", "weight and spin eigenvalues on the canonical basis", chk_qprp},
    {"casbis", "laplacian", "the casimir equals its zero-label form and acts by the spin value",
     chk_cas},
    {"om4", "laplacian", "coframe reconstruction from the differentials of the generators",
     chk_om4},
    {"sur", "laplacian", "the sigma-branch Laplacian collapses to the central operator", chk_sur},
    {"boxr", "laplacian", "left and right Laplacians agree exactly on the sigma branch", chk_boxr},
    {"Lq", "laplacian", "closed Laplacian eigenvalues on the canonical basis, both branches",
     chk_lq},
    {"coLa", "laplacian", "R-matrix Laplacian eigenvalues with the classical limit J(J+1)",
     chk_cola},
    {"spq", "laplacian", "exact spectra at q = 1/2: sigma branch nonnegative, other indefinite",
     chk_spq},
};

} // namespace

const char* check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Discrepancy: return "documented-discrepancy";
    }
    return "fail";
}

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> suites = {"braiding", "exterior", "hodge",
                                                    "metric",   "oracle",   "laplacian"};
    return suites;
}

std::vector<CheckResult> run_checks(const VerifyOptions& opt) {
    std::set<std::string> want(opt.suites.begin(), opt.suites.end());
    for (const std::string& s : want) {
        bool known = false;
        for (const std::string& k : all_suites()) known = known || k == s;
        if (!known) throw std::invalid_argument("unknown suite: " + s);
    }
    std::vector<CheckResult> out;
    for (const CheckDef& def : REGISTRY) {
        if (!want.empty() && !want.count(def.suite)) continue;
        out.push_back({def.tag, def.suite, def.detail, def.run(opt)});
    }
    return out;
}

bool all_ok(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

VerifySummary summarize(const std::vector<CheckResult>& results) {
    VerifySummary s;
    for (const CheckResult& r : results) {
        if (r.status == CheckStatus::Pass) s.passed++;
        else if (r.status == CheckStatus::Fail) s.failed++;
        else s.discrepancies++;
    }
    return s;
}

} // namespace qsu2
