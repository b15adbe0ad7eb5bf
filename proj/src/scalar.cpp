#include "scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace qsu2 {

// ---- construction -----------------------------------------------------------

ScalarQ ScalarQ::from_fraction(MPoly num, MPoly den) {
    ScalarQ x;
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.normalize();
    return x;
}

ScalarQ ScalarQ::symbol(int var) {
    return from_fraction(MPoly::variable(var), MPoly::constant(GausRat(1)));
}

ScalarQ ScalarQ::symbol(const std::string& name) {
    int v = SymbolTable::instance().lookup(name);
    if (v < 0) throw std::invalid_argument("unknown symbol '" + name + "'");
    return symbol(v);
}

ScalarQ ScalarQ::qnum(int two_u) {
    if (two_u == 0) return ScalarQ();
    MPoly num = MPoly::variable(VAR_S, two_u) - MPoly::variable(VAR_S, -two_u);
    MPoly den = MPoly::variable(VAR_S, 2) - MPoly::variable(VAR_S, -2);
    return from_fraction(std::move(num), std::move(den));
}

// ---- normalization ----------------------------------------------------------

namespace {

// den = u + v*x with x a square-rule symbol; multiplying num and den by
// u + v*(w1 - x) clears x from the denominator:
//   (u + v x)(u + v w1 - v x) = u^2 + u v w1 - v^2 w0.
void clear_rule_vars_from_den(MPoly& num, MPoly& den) {
    const SymbolTable& tab = SymbolTable::instance();
    for (;;) {
        int target = -1;
        for (auto& [m, c] : den.terms()) {
            for (auto& [w, e] : m.ve)
                if (w != VAR_S && tab.has_square_rule(w)) { target = w; break; }
            if (target >= 0) break;
        }
        if (target < 0) return;
        MPoly u, v;
        den.split_linear(target, u, v);
        SquareRule rule = tab.square_rule(target);
        MPoly mult = u + v * (*rule.w1) - v * MPoly::variable(target);
        if (mult.is_zero()) throw std::domain_error("division by zero");
        num = num * mult;
        den = den * mult;
    }
}

} // namespace

void ScalarQ::normalize(int depth) {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = MPoly::constant(GausRat(1));
        return;
    }

    clear_rule_vars_from_den(num_, den_);
    if (den_.is_zero())
        throw std::domain_error("division by zero (denominator is a zero divisor)");
    if (num_.is_zero()) {
        den_ = MPoly::constant(GausRat(1));
        return;
    }

    if (den_.has_complex_coeff()) {
        if (depth > 2) throw std::logic_error("denominator realification failed to converge");
        MPoly dc = den_.conj();
        // flip symbols back: we need the coefficient-conjugate only, with the
        // same variables, so conjugate variable mapping must be undone.
        // den is symbol-uniform in plain parameters, whose conjugates are
        // distinct symbols; to stay inside the same variables, multiply by
        // the coefficient-wise conjugate instead.
        MPoly cc;
        for (auto& [m, c] : den_.terms()) cc.add_term(m, c.conj());
        num_ = num_ * cc;
        den_ = den_ * cc;
        normalize(depth + 1);
        return;
    }

    // Denominator must be u(s) * M with one shared symbol monomial M.
    auto profile = den_.symbol_exponent_profile();
    Monomial M;
    for (auto& [w, pr] : profile) {
        if (!pr.second)
            throw std::domain_error("unsupported denominator: mixed symbol content");
        if (pr.first != 0) M.ve.push_back({w, pr.first});
    }

    // Cancel shared symbol powers between M and the numerator.
    if (!M.is_one()) {
        Monomial cancel;
        for (auto& [w, e] : M.ve) {
            int mn = INT32_MAX;
            for (auto& [m, c] : num_.terms()) mn = std::min(mn, m.exp_of(w));
            int g = std::min(e, mn);
            if (g > 0) cancel.ve.push_back({w, g});
        }
        if (!cancel.is_one()) {
            MPoly nn, dd;
            for (auto& [m, c] : num_.terms()) nn.add_term(m.div(cancel), c);
            for (auto& [m, c] : den_.terms()) dd.add_term(m.div(cancel), c);
            num_ = std::move(nn);
            den_ = std::move(dd);
        }
    }

    // Shift the s-valuation of the denominator to zero.
    int vd = den_.s_valuation();
    if (vd != 0) {
        num_ = num_.shift_s(-vd);
        den_ = den_.shift_s(-vd);
    }

    // Univariate content reduction: divide out gcd over Q(i)[s] of the
    // denominator's s-part and all numerator coefficient polynomials,
    // stabilized to a real factor so the denominator stays real.
    MPoly den_s_part;
    for (auto& [m, c] : den_.terms()) den_s_part.add_term(Monomial::var(VAR_S, m.exp_of(VAR_S)), c);
    UPoly G = UPoly::from_mpoly(den_s_part);
    if (G.deg() > 0) {
        for (auto& [sym, f] : num_.group_by_symbols()) {
            if (G.deg() <= 0) break;
            MPoly h = f.shift_s(-f.s_valuation());
            G = UPoly::gcd(G, UPoly::from_mpoly(h));
        }
        if (G.deg() > 0 && !G.is_real()) G = UPoly::gcd(G, G.conj());
        if (G.deg() > 0) {
            MPoly g = G.to_mpoly();
            auto qn = num_.exact_divide(g);
            auto qd = den_.exact_divide(g);
            if (!qn || !qd) throw std::logic_error("content division failed");
            num_ = std::move(*qn);
            den_ = std::move(*qd);
            int v2 = den_.s_valuation();
            if (v2 != 0) {
                num_ = num_.shift_s(-v2);
                den_ = den_.shift_s(-v2);
            }
        }
    }

    // Monic denominator.
    GausRat lc = den_.lead().second;
    if (!lc.is_one()) {
        GausRat inv = GausRat(1) / lc;
        num_ = num_.mul_scalar(inv);
        den_ = den_.mul_scalar(inv);
    }
}

// ---- arithmetic ---------------------------------------------------------------

ScalarQ ScalarQ::operator-() const {
    ScalarQ out = *this;
    out.num_ = -out.num_;
    return out;
}

ScalarQ ScalarQ::operator+(const ScalarQ& o) const {
    return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarQ ScalarQ::operator-(const ScalarQ& o) const {
    return from_fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ScalarQ ScalarQ::operator*(const ScalarQ& o) const {
    return from_fraction(num_ * o.num_, den_ * o.den_);
}

ScalarQ ScalarQ::operator/(const ScalarQ& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return from_fraction(num_ * o.den_, den_ * o.num_);
}

ScalarQ ScalarQ::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return from_fraction(den_, num_);
}

ScalarQ ScalarQ::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    ScalarQ out(1);
    ScalarQ base = *this;
    unsigned u = (unsigned)e;
    while (u) {
        if (u & 1) out *= base;
        u >>= 1;
        if (u) base *= base;
    }
    return out;
}

ScalarQ ScalarQ::conj() const {
    return from_fraction(num_.conj(), den_.conj());
}

ScalarQ ScalarQ::q_invert() const {
    return from_fraction(num_.flip_s(), den_.flip_s());
}

bool ScalarQ::is_rational() const {
    return num_.is_constant() && den_.is_constant();
}

std::set<int> ScalarQ::vars() const {
    std::set<int> out;
    for (const MPoly* p : {&num_, &den_})
        for (auto& [m, c] : p->terms())
            for (auto& [w, e] : m.ve) out.insert(w);
    return out;
}

// ---- substitution / evaluation ------------------------------------------------

namespace {

ScalarQ subst_poly(const MPoly& p, const std::map<int, ScalarQ>& values) {
    ScalarQ acc;
    for (auto& [m, c] : p.terms()) {
        ScalarQ term(c);
        Monomial keep;
        for (auto& [w, e] : m.ve) {
            auto it = values.find(w);
            if (it == values.end()) keep.ve.push_back({w, e});
            else term *= it->second.pow(e);
        }
        if (!keep.is_one())
            term *= ScalarQ::from_fraction(MPoly::term(keep, GausRat(1)), MPoly::constant(GausRat(1)));
        acc += term;
    }
    return acc;
}

} // namespace

ScalarQ ScalarQ::substitute(const std::map<int, ScalarQ>& values) const {
    ScalarQ n = subst_poly(num_, values);
    ScalarQ d = subst_poly(den_, values);
    return n / d;
}

ScalarQ ScalarQ::substitute(int var, const ScalarQ& value) const {
    return substitute(std::map<int, ScalarQ>{{var, value}});
}

GausRat ScalarQ::eval_s(const GausRat& s0) const {
    GausRat d = den_.eval_s(s0);
    if (d.is_zero()) throw std::domain_error("evaluation hits a pole");
    return num_.eval_s(s0) / d;
}

namespace {

bool rational_sqrt(const mpq_class& v, mpq_class& out) {
    if (v < 0) return false;
    mpz_class n = v.get_num(), d = v.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        out = mpq_class(rn) / mpq_class(rd);
        return true;
    }
    return false;
}

bool all_even_s(const MPoly& p) {
    for (auto& [m, c] : p.terms())
        if (m.exp_of(VAR_S) % 2 != 0) return false;
    return true;
}

GausRat eval_even_q(const MPoly& p, const GausRat& q0) {
    GausRat acc;
    for (auto& [m, c] : p.terms()) {
        if (m.has_symbol_vars()) throw std::domain_error("cannot evaluate: free symbols present");
        int k = m.exp_of(VAR_S) / 2;
        GausRat pw(1);
        GausRat base = q0;
        if (k < 0) {
            if (q0.is_zero()) throw std::domain_error("evaluation pole at q=0");
            base = GausRat(1) / q0;
        }
        for (int j = 0; j < std::abs(k); ++j) pw *= base;
        acc += c * pw;
    }
    return acc;
}

} // namespace

GausRat ScalarQ::eval_q(const GausRat& q0) const {
    if (!q0.is_real()) throw std::domain_error("q must be rational");
    if (all_even_s(num_) && all_even_s(den_)) {
        GausRat d = eval_even_q(den_, q0);
        if (d.is_zero()) throw std::domain_error("evaluation hits a pole");
        return eval_even_q(num_, q0) / d;
    }
    mpq_class root;
    if (!rational_sqrt(q0.re, root))
        throw std::domain_error("expression has odd powers of s and q is not a rational square");
    return eval_s(GausRat(root));
}

// ---- printing -----------------------------------------------------------------

namespace {

std::string coeff_str(const GausRat& c, bool lead_position, bool& neg_out, bool has_mono) {
    // Returns the magnitude text; neg_out says whether to join with "-".
    neg_out = false;
    if (c.is_real()) {
        mpq_class v = c.re;
        if (v < 0) { neg_out = true; v = -v; }
        if (v == 1 && has_mono) return "";
        return mpq_class(v).get_str();
    }
    if (c.re == 0) {
        mpq_class v = c.im;
        if (v < 0) { neg_out = true; v = -v; }
        if (v == 1) return "i";
        return mpq_class(v).get_str() + "*i";
    }
    (void)lead_position;
    std::string inner = c.str();
    return "(" + inner + ")";
}

std::string mono_str(const Monomial& m) {
    const SymbolTable& tab = SymbolTable::instance();
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += "*";
        out += part;
    };
    for (auto& [w, e] : m.ve) {
        if (w == VAR_S) {
            int k = (e >= 0 ? e : e - 1) / 2; // floor division
            bool odd = (e % 2) != 0;
            if (k == 1) append("q");
            else if (k != 0) append("q^" + std::to_string(k));
            if (odd) append("s");
        } else {
            if (e == 1) append(tab.name(w));
            else append(tab.name(w) + "^" + std::to_string(e));
        }
    }
    return out;
}

std::string poly_str(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        std::string ms = mono_str(m);
        bool neg = false;
        std::string cs = coeff_str(c, first, neg, !ms.empty());
        std::string body;
        if (cs.empty()) body = ms;
        else if (ms.empty()) body = cs;
        else body = cs + "*" + ms;
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace

std::string ScalarQ::str() const {
    if (num_.is_zero()) return "0";
    bool den_one = den_.is_constant() &&
                   (den_.is_zero() || den_.terms().begin()->second.is_one());
    std::string ns = poly_str(num_);
    if (den_one && den_.size() == 1) return ns;
    std::string ds = poly_str(den_);
    bool den_simple = den_.size() == 1 && den_.terms().begin()->first.ve.size() <= 1 &&
                      den_.terms().begin()->second.is_one() &&
                      ds.find('*') == std::string::npos;
    if (!den_simple) ds = "(" + ds + ")";
    if (num_.size() > 1) ns = "(" + ns + ")";
    return ns + "/" + ds;
}

// ---- standard symbols -----------------------------------------------------------

const StdSyms& std_syms() {
    static StdSyms syms = [] {
        SymbolTable& tab = SymbolTable::instance();
        StdSyms out;
        out.alpha = tab.register_symbol("alpha", "alphac");
        out.alphac = tab.lookup("alphac");
        out.beta = tab.register_symbol("beta", "betac");
        out.betac = tab.lookup("betac");
        out.nu = tab.register_symbol("nu", "nuc");
        out.nuc = tab.lookup("nuc");
        out.eps = tab.register_symbol("eps", "epsc");
        out.epsc = tab.lookup("epsc");
        out.xi = tab.register_symbol("xi", "xic");
        out.xic = tab.lookup("xic");
        out.gam = tab.register_symbol("gam", "gamc");
        out.gamc = tab.lookup("gamc");
        out.m = tab.register_real_symbol("m");
        out.a = tab.register_real_symbol("a");
        return out;
    }();
    return syms;
}

void register_standard_symbols() { (void)std_syms(); }

} // namespace qsu2
