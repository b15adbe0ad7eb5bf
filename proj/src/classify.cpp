#include "classify.hpp"

#include <map>
#include <stdexcept>

namespace qsu2 {

ScalarQ EvalAt::reduce(const ScalarQ& x) const {
    if (!s0) return x;
    return x.substitute(VAR_S, *s0);
}

bool contraction_real(const Contraction& g, const EvalAt& at) {
    ScalarQ q2 = ScalarQ::parse("q^2");
    return at.zero(g.beta.conj() - q2 * g.alpha) && at.zero(g.nu.conj() - g.nu) &&
           at.zero(g.eps.conj() - g.eps) && at.zero(g.xi.conj() - g.xi) &&
           at.zero(g.gam.conj() - g.gam);
}

ScalarQ hermitian_cubic_0z(const Contraction& g) {
    ScalarQ ab = g.alpha * g.beta;
    return g.eps.pow(3) +
           ab * (ScalarQ::parse("q^2 - q^-2") * g.nu - ScalarQ::parse("(q - q^-1)^2") * g.eps);
}

ScalarQ hermitian_cubic_zz(const Contraction& g) {
    ScalarQ ab = g.alpha * g.beta;
    return g.gam * g.gam * g.nu -
           ab * (ScalarQ::parse("q^2 - q^-2") * g.eps +
                 ScalarQ::parse("2*(q + q^-1)^2") * g.nu +
                 ScalarQ::parse("(q - q^-1)^2") * g.gam);
}

bool contraction_hermitian(const Contraction& g, const EvalAt& at) {
    return at.zero(g.beta - ScalarQ::parse("q^2") * g.alpha) && at.zero(g.xi - g.eps) &&
           at.zero(hermitian_cubic_0z(g)) && at.zero(hermitian_cubic_zz(g));
}

namespace {

using Mat = std::vector<std::vector<ScalarQ>>;

// [i][j] = j-th coordinate of the Hodge square of the i-th basis form.
Mat hodge_square(const HodgeConfig& cfg, int k, char which) {
    Mat a = hodge_matrix(cfg, k, which);
    Mat b = hodge_matrix(cfg, 4 - k, which);
    int n = form_space_dim(k), m = form_space_dim(4 - k);
    Mat out(n, std::vector<ScalarQ>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ScalarQ acc;
            for (int t = 0; t < m; ++t) acc += a[i][t] * b[t][j];
            out[i][j] = acc;
        }
    return out;
}

// Constant on each listed index block, zero across and inside off-diagonal.
bool block_scalar(const Mat& m, const std::vector<int>& cuts, const EvalAt& at) {
    int n = (int)m.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !at.zero(m[i][j])) return false;
    for (size_t b = 0; b + 1 < cuts.size(); ++b)
        for (int i = cuts[b] + 1; i < cuts[b + 1]; ++i)
            if (!at.equal(m[i][i], m[cuts[b]][cuts[b]])) return false;
    return true;
}

void structural_diagnostics(const Contraction& g, const EvalAt& at, ClassifyReport& r) {
    ScalarQ q2 = ScalarQ::parse("q^2");
    if (!r.real) {
        if (!at.zero(g.beta.conj() - q2 * g.alpha)) r.failed.push_back("real:beta* = q^2 alpha");
        if (!at.zero(g.nu.conj() - g.nu) || !at.zero(g.eps.conj() - g.eps) ||
            !at.zero(g.xi.conj() - g.xi) || !at.zero(g.gam.conj() - g.gam))
            r.failed.push_back("real:(nu,eps,xi,gam) real");
    }
    if (!r.hermitian) {
        if (!at.zero(g.beta - q2 * g.alpha)) r.failed.push_back("hermitian:beta = q^2 alpha");
        if (!at.zero(g.xi - g.eps)) r.failed.push_back("hermitian:xi = eps");
        if (!at.zero(hermitian_cubic_0z(g))) r.failed.push_back("hermitian:cubic-0z");
        if (!at.zero(hermitian_cubic_zz(g))) r.failed.push_back("hermitian:cubic-zz");
    }
    if (!r.invertible) r.failed.push_back("invertible");
}

void tag_family(const Contraction& g, const EvalAt& at, ClassifyReport& r) {
    if (r.real && r.hermitian && r.invertible)
        r.family = at.zero(g.nu) ? 'a' : (at.zero(g.gam) ? 'c' : 'b');
}

} // namespace

ClassifyReport classify_T(const Contraction& g, Dir dir, const EvalAt& at) {
    ClassifyReport r;
    HodgeConfig cfg{g, ScalarQ::symbol(std_syms().m), dir};

    r.real = true;
    for (int a = 0; a < 4 && r.real; ++a) {
        Form w = coframe_form(dir, a);
        Form lhs = hodge_T(cfg, star_form(w));
        Form rhs = star_form(hodge_T(cfg, w));
        for (int j = 0; j < form_space_dim(3); ++j)
            if (!at.equal(lhs.coords[j], rhs.coords[j])) { r.real = false; break; }
    }

    ScalarQ t2one = hodge_T(cfg, volume_mu(cfg)).coords[0];
    r.invertible = !at.zero(t2one);

    Mat m1 = hodge_square(cfg, 1, 'T');
    r.hermitian = true;
    for (int i = 0; i < 4 && r.hermitian; ++i)
        for (int j = 0; j < 4; ++j) {
            ScalarQ want = (i == j) ? -t2one : ScalarQ(0);
            if (!at.equal(m1[i][j], want)) { r.hermitian = false; break; }
        }

    if (r.hermitian) {
        bool ok = block_scalar(hodge_square(cfg, 2, 'T'), {0, 3, 6}, at) &&
                  block_scalar(hodge_square(cfg, 3, 'T'), {0, 4}, at);
        r.max_hermitian = ok;
        if (!ok) r.failed.push_back("max-hermitian:eigenspace degeneracy");
    }

    structural_diagnostics(g, at, r);
    tag_family(g, at, r);
    return r;
}

ClassifyReport classify_L(const Contraction& g, Dir dir, const EvalAt& at) {
    ClassifyReport r;
    HodgeConfig cfg{g, ScalarQ::symbol(std_syms().m), dir};
    Form mu = volume_mu(cfg);

    // w_a* ^ L(w_b) = Gamma_{ab} mu, then compatibility with the involution.
    bool rh = true;
    for (int a = 0; a < 4 && rh; ++a) {
        Form sa = star_form(coframe_form(dir, a));
        for (int b = 0; b < 4 && rh; ++b) {
            Form lhs = wedge(sa, hodge_L(cfg, coframe_form(dir, b)));
            Form rhs = form_scale(g.entry(a, b), mu);
            if (!at.equal(lhs.coords[0], rhs.coords[0])) rh = false;
        }
    }
    for (int a = 0; a < 4 && rh; ++a) {
        Form w = coframe_form(dir, a);
        Form lhs = hodge_L(cfg, star_form(w));
        Form rhs = star_form(hodge_L(cfg, w));
        for (int j = 0; j < form_space_dim(3); ++j)
            if (!at.equal(lhs.coords[j], rhs.coords[j])) { rh = false; break; }
    }
    r.real = r.hermitian = rh;
    if (!rh) r.failed.push_back("pairing-against-volume");

    r.invertible = !at.zero(hodge_L(cfg, mu).coords[0]);
    if (!r.invertible) r.failed.push_back("invertible");

    if (rh) {
        bool ok = block_scalar(hodge_square(cfg, 1, 'L'), {0, 4}, at) &&
                  block_scalar(hodge_square(cfg, 2, 'L'), {0, 3, 6}, at) &&
                  block_scalar(hodge_square(cfg, 3, 'L'), {0, 4}, at);
        r.max_hermitian = ok;
        if (!ok) r.failed.push_back("max-hermitian:eigenspace degeneracy");
    }

    tag_family(g, at, r);
    return r;
}

Contraction family_a(const ScalarQ& alpha, int sign) {
    ScalarQ sg(sign);
    ScalarQ e = sg * ScalarQ::parse("1 - q^2") * alpha;
    return {alpha, ScalarQ::parse("q^2") * alpha, ScalarQ(0), e, e,
            sg * ScalarQ::parse("1 + q^2") * alpha};
}

namespace {

GausRat const_value(const MPoly& p) {
    if (p.is_zero()) return GausRat(0);
    if (!p.is_constant()) throw std::invalid_argument("expected a constant polynomial");
    return p.terms().begin()->second;
}

std::optional<mpq_class> exact_sqrt(const mpq_class& v) {
    if (v < 0) return std::nullopt;
    mpz_class n = v.get_num(), d = v.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn) / mpq_class(rd);
}

} // namespace

ScalarQ square_root_symbol(const std::string& hint, const ScalarQ& square) {
    GausRat dv = const_value(square.den());
    MPoly w0 = square.num().mul_scalar(GausRat(1) / dv);

    static std::map<std::string, int> adjoined;
    std::string key = square.str();
    auto it = adjoined.find(key);
    if (it != adjoined.end()) return ScalarQ::symbol(it->second);

    SymbolTable& tab = SymbolTable::instance();
    std::string name = hint;
    for (int k = 2; tab.lookup(name) >= 0; ++k) name = hint + std::to_string(k);
    int id = tab.register_real_symbol(name);
    tab.set_square_rule(id, w0, MPoly());
    adjoined.emplace(key, id);
    return ScalarQ::symbol(id);
}

Contraction family_c(const ScalarQ& alpha, int sign) {
    ScalarQ square = ScalarQ::parse("(3/2)*(q^2 - 1)^2") * alpha * alpha;
    ScalarQ e = ScalarQ(sign) * square_root_symbol("ee", square);
    ScalarQ nu = ScalarQ::parse("-(q^2 - 1)/(2*(q^2 + 1))") * e;
    return {alpha, ScalarQ::parse("q^2") * alpha, nu, e, e, ScalarQ(0)};
}

Contraction family_b(const mpq_class& alpha, const mpq_class& eps, const mpq_class& s0,
                     int sign) {
    if (s0 == 0 || alpha == 0 || eps == 0)
        throw std::invalid_argument("family_b: alpha, eps and s0 must be nonzero");
    mpq_class q0 = s0 * s0;
    if (q0 == 1) throw std::invalid_argument("family_b: q0 = 1 is degenerate");
    mpq_class qi = 1 / q0;
    mpq_class c1 = q0 * q0 - qi * qi;
    mpq_class c2 = (q0 + qi) * (q0 + qi);
    mpq_class c3 = (q0 - qi) * (q0 - qi);
    mpq_class ab = q0 * q0 * alpha * alpha;

    if (!(c3 * ab > eps * eps))
        throw std::invalid_argument("family_b: needs (q - q^-1)^2 alpha beta > eps^2");

    mpq_class nu = (c3 * eps - eps * eps * eps / ab) / c1;
    if (nu == 0) throw std::invalid_argument("family_b: instance degenerates to family a");

    mpq_class B = -ab * c3;
    mpq_class C = -ab * (c1 * eps + 2 * c2 * nu);
    mpq_class disc = B * B - 4 * nu * C;
    if (disc < 0) throw std::invalid_argument("family_b: no real branch at these parameters");

    ScalarQ root;
    if (auto rt = exact_sqrt(disc)) root = ScalarQ(GausRat(*rt));
    else root = square_root_symbol("rt", ScalarQ(GausRat(disc)));

    ScalarQ gam = (ScalarQ(GausRat(-B)) + ScalarQ(sign) * root) / ScalarQ(GausRat(2 * nu));
    ScalarQ sa{GausRat(alpha)};
    return {sa, ScalarQ::parse("q^2") * sa, ScalarQ(GausRat(nu)), ScalarQ(GausRat(eps)),
            ScalarQ(GausRat(eps)), gam};
}

ScalarQ det_q(const Contraction& g, Dir dir) {
    std::vector<ScalarQ> slot1(tensor_dim(4));
    slot1[pack_index({L_MINUS, L_PLUS, L_ZERO, L_Z})] = ScalarQ::unit_i();
    std::vector<ScalarQ> slot2 = form_basis(dir, 4)[0].tensor;
    for (auto& c : slot2) c = ScalarQ::unit_i() * c;
    return contract(g, slot1, 4, slot2, 4)[0];
}

int sign_at(const ScalarQ& x, const GausRat& s0) {
    GausRat v = x.eval_s(s0);
    if (!(v.im == 0)) throw std::invalid_argument("sign_at: value is not real");
    return sgn(v.re);
}

ScalarQ normalized_m(const ScalarQ& alpha) {
    return ScalarQ(1) / (ScalarQ::parse("q - q^3") * alpha * alpha);
}

} // namespace qsu2
