#include "mpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace qsu2 {

// ---- SymbolTable ------------------------------------------------------------

SymbolTable::SymbolTable() {
    entries_.push_back({"s", VAR_S, nullptr, nullptr});
}

SymbolTable& SymbolTable::instance() {
    static SymbolTable tab;
    return tab;
}

int SymbolTable::register_symbol(const std::string& name, const std::string& conj_name) {
    if (name.empty()) throw std::invalid_argument("empty symbol name");
    int have = lookup(name);
    if (have >= 0) {
        int cj = entries_[have].conj;
        if (entries_[cj].name != conj_name)
            throw std::invalid_argument("symbol '" + name + "' already registered with a different conjugate");
        return have;
    }
    int id = (int)entries_.size();
    entries_.push_back({name, id, nullptr, nullptr});
    if (conj_name != name) {
        if (lookup(conj_name) >= 0)
            throw std::invalid_argument("conjugate name '" + conj_name + "' already taken");
        int cid = (int)entries_.size();
        entries_.push_back({conj_name, id, nullptr, nullptr});
        entries_[id].conj = cid;
    }
    return id;
}

void SymbolTable::set_square_rule(int var, const MPoly& w0, const MPoly& w1) {
    if (var <= 0 || var >= (int)entries_.size()) throw std::invalid_argument("bad symbol id");
    if (w0.contains_square_rule_var() || w1.contains_square_rule_var() ||
        w0.contains_var(var) || w1.contains_var(var))
        throw std::invalid_argument("square rule polynomials must be rule-symbol free");
    Entry& e = entries_[var];
    if (e.w0) {
        if (*e.w0 == w0 && *e.w1 == w1) return;
        throw std::invalid_argument("conflicting square rule for '" + e.name + "'");
    }
    e.w0 = std::make_unique<MPoly>(w0);
    e.w1 = std::make_unique<MPoly>(w1);
}

int SymbolTable::lookup(const std::string& name) const {
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k].name == name) return (int)k;
    return -1;
}

const std::string& SymbolTable::name(int var) const { return entries_.at(var).name; }
int SymbolTable::conj_var(int var) const { return entries_.at(var).conj; }
bool SymbolTable::has_square_rule(int var) const { return entries_.at(var).w0 != nullptr; }
SquareRule SymbolTable::square_rule(int var) const {
    const Entry& e = entries_.at(var);
    if (!e.w0) throw std::logic_error("no square rule for '" + e.name + "'");
    return {e.w0.get(), e.w1.get()};
}
int SymbolTable::count() const { return (int)entries_.size(); }

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::var(int v, int e) {
    Monomial m;
    if (e != 0) m.ve.push_back({v, e});
    return m;
}

int Monomial::exp_of(int v) const {
    for (auto& [w, e] : ve)
        if (w == v) return e;
    return 0;
}

int Monomial::total_degree_excl_s() const {
    int d = 0;
    for (auto& [w, e] : ve)
        if (w != VAR_S) d += e;
    return d;
}

bool Monomial::has_symbol_vars() const {
    for (auto& [w, e] : ve)
        if (w != VAR_S) return true;
    return false;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial out;
    out.ve.reserve(ve.size() + o.ve.size());
    size_t i = 0, j = 0;
    while (i < ve.size() || j < o.ve.size()) {
        if (j == o.ve.size() || (i < ve.size() && ve[i].first < o.ve[j].first)) {
            out.ve.push_back(ve[i++]);
        } else if (i == ve.size() || o.ve[j].first < ve[i].first) {
            out.ve.push_back(o.ve[j++]);
        } else {
            int e = ve[i].second + o.ve[j].second;
            if (e != 0) out.ve.push_back({ve[i].first, e});
            ++i; ++j;
        }
    }
    return out;
}

Monomial Monomial::erase_var(int v) const {
    Monomial out;
    for (auto& p : ve)
        if (p.first != v) out.ve.push_back(p);
    return out;
}

Monomial Monomial::conj_vars() const {
    const SymbolTable& tab = SymbolTable::instance();
    Monomial out;
    for (auto& [w, e] : ve) out.ve.push_back({tab.conj_var(w), e});
    std::sort(out.ve.begin(), out.ve.end());
    return out;
}

Monomial Monomial::flip_s() const {
    Monomial out = *this;
    for (auto& [w, e] : out.ve)
        if (w == VAR_S) e = -e;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    for (auto& [w, e] : ve)
        if (e > o.exp_of(w)) return false;
    return true;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial out = *this;
    for (auto& [w, e] : o.ve) {
        bool found = false;
        for (auto& p : out.ve)
            if (p.first == w) { p.second -= e; found = true; break; }
        if (!found) out.ve.push_back({w, -e});
    }
    std::sort(out.ve.begin(), out.ve.end());
    out.ve.erase(std::remove_if(out.ve.begin(), out.ve.end(),
                                [](auto& p) { return p.second == 0; }),
                 out.ve.end());
    return out;
}

bool MonoCmp::operator()(const Monomial& a, const Monomial& b) const {
    size_t i = 0, j = 0;
    while (i < a.ve.size() || j < b.ve.size()) {
        int va = i < a.ve.size() ? a.ve[i].first : INT32_MAX;
        int vb = j < b.ve.size() ? b.ve[j].first : INT32_MAX;
        int v = std::min(va, vb);
        int ea = va == v ? a.ve[i].second : 0;
        int eb = vb == v ? b.ve[j].second : 0;
        if (ea != eb) return ea > eb; // higher exponent sorts first
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return false;
}

// ---- MPoly ------------------------------------------------------------------

MPoly MPoly::constant(const GausRat& c) {
    MPoly p;
    if (!c.is_zero()) p.t_[Monomial::one()] = c;
    return p;
}

MPoly MPoly::variable(int v, int e) {
    MPoly p;
    if (e == 0) return constant(GausRat(1));
    Map raw;
    raw[Monomial::var(v, e)] = GausRat(1);
    return reduce_rules(std::move(raw));
}

MPoly MPoly::term(const Monomial& m, const GausRat& c) {
    MPoly p;
    if (c.is_zero()) return p;
    Map raw;
    raw[m] = c;
    return reduce_rules(std::move(raw));
}

void MPoly::add_term(const Monomial& m, const GausRat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out;
    for (auto& [m, c] : t_) out.t_[m] = -c;
    return out;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out = *this;
    for (auto& [m, c] : o.t_) out.add_term(m, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out = *this;
    for (auto& [m, c] : o.t_) out.add_term(m, -c);
    return out;
}

MPoly MPoly::reduce_rules(Map&& raw) {
    const SymbolTable& tab = SymbolTable::instance();
    MPoly out;
    std::deque<std::pair<Monomial, GausRat>> work(raw.begin(), raw.end());
    while (!work.empty()) {
        auto [m, c] = work.front();
        work.pop_front();
        if (c.is_zero()) continue;
        int rv = -1, re = 0;
        for (auto& [w, e] : m.ve)
            if (w != VAR_S && e >= 2 && tab.has_square_rule(w)) { rv = w; re = e; break; }
        if (rv < 0) {
            out.add_term(m, c);
            continue;
        }
        // x^e = x^(e-2)*w0 + x^(e-1)*w1
        SquareRule rule = tab.square_rule(rv);
        Monomial rest = m.erase_var(rv);
        Monomial lo = rest.mul(Monomial::var(rv, re - 2));
        Monomial hi = rest.mul(Monomial::var(rv, re - 1));
        for (auto& [rm, rc] : rule.w0->terms()) work.push_back({lo.mul(rm), c * rc});
        for (auto& [rm, rc] : rule.w1->terms()) work.push_back({hi.mul(rm), c * rc});
    }
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    Map raw;
    for (auto& [ma, ca] : t_)
        for (auto& [mb, cb] : o.t_) {
            Monomial m = ma.mul(mb);
            GausRat c = ca * cb;
            auto it = raw.find(m);
            if (it == raw.end()) raw[m] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) raw.erase(it);
            }
        }
    return reduce_rules(std::move(raw));
}

MPoly MPoly::mul_scalar(const GausRat& c) const {
    MPoly out;
    if (c.is_zero()) return out;
    for (auto& [m, v] : t_) out.t_[m] = v * c;
    return out;
}

MPoly MPoly::mul_monomial(const Monomial& mm, const GausRat& c) const {
    Map raw;
    if (c.is_zero()) return MPoly();
    for (auto& [m, v] : t_) raw[m.mul(mm)] = v * c;
    return reduce_rules(std::move(raw));
}

MPoly MPoly::pow(unsigned e) const {
    MPoly out = constant(GausRat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = (e >>= 1) ? base * base : base;
    }
    return out;
}

MPoly MPoly::conj() const {
    Map raw;
    for (auto& [m, c] : t_) raw[m.conj_vars()] = c.conj();
    return reduce_rules(std::move(raw)); // conjugate symbols may carry rules
}

MPoly MPoly::flip_s() const {
    MPoly out;
    for (auto& [m, c] : t_) out.t_[m.flip_s()] = c;
    return out;
}

bool MPoly::has_complex_coeff() const {
    for (auto& [m, c] : t_)
        if (!c.is_real()) return true;
    return false;
}

bool MPoly::contains_var(int v) const {
    for (auto& [m, c] : t_)
        if (m.exp_of(v) != 0) return true;
    return false;
}

bool MPoly::contains_square_rule_var() const {
    const SymbolTable& tab = SymbolTable::instance();
    for (auto& [m, c] : t_)
        for (auto& [w, e] : m.ve)
            if (w != VAR_S && tab.has_square_rule(w)) return true;
    return false;
}

const std::pair<const Monomial, GausRat>& MPoly::lead() const {
    if (t_.empty()) throw std::logic_error("lead of zero polynomial");
    return *t_.begin();
}

int MPoly::s_valuation() const {
    int v = INT32_MAX;
    for (auto& [m, c] : t_) v = std::min(v, m.exp_of(VAR_S));
    return t_.empty() ? 0 : v;
}

int MPoly::s_degree() const {
    int v = INT32_MIN;
    for (auto& [m, c] : t_) v = std::max(v, m.exp_of(VAR_S));
    return t_.empty() ? 0 : v;
}

MPoly MPoly::shift_s(int k) const {
    if (k == 0) return *this;
    MPoly out;
    Monomial sh = Monomial::var(VAR_S, k);
    for (auto& [m, c] : t_) out.t_[m.mul(sh)] = c;
    return out;
}

std::map<int, std::pair<int, bool>> MPoly::symbol_exponent_profile() const {
    std::map<int, std::pair<int, bool>> out; // var -> (min exp, uniform)
    bool first = true;
    for (auto& [m, c] : t_) {
        std::map<int, int> here;
        for (auto& [w, e] : m.ve)
            if (w != VAR_S) here[w] = e;
        if (first) {
            for (auto& [w, e] : here) out[w] = {e, true};
            first = false;
            continue;
        }
        for (auto& [w, pr] : out) {
            auto it = here.find(w);
            int e = it == here.end() ? 0 : it->second;
            if (e != pr.first) {
                pr.first = std::min(pr.first, e);
                pr.second = false;
            }
        }
        for (auto& [w, e] : here)
            if (!out.count(w)) out[w] = {std::min(e, 0), false};
    }
    return out;
}

std::map<Monomial, MPoly, MonoCmp> MPoly::group_by_symbols() const {
    std::map<Monomial, MPoly, MonoCmp> out;
    for (auto& [m, c] : t_) {
        Monomial sym, spart;
        for (auto& [w, e] : m.ve)
            (w == VAR_S ? spart : sym).ve.push_back({w, e});
        out[sym].add_term(spart, c);
    }
    return out;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return MPoly();
    // Shift s so both operands are honest polynomials; the quotient picks up
    // the difference of valuations.
    int va = s_valuation(), vb = o.s_valuation();
    MPoly r = shift_s(-va);
    MPoly d = o.shift_s(-vb);
    MPoly q;
    const auto& dl = d.lead();
    while (!r.is_zero()) {
        const auto& rl = r.lead();
        if (!dl.first.divides(rl.first)) return std::nullopt;
        Monomial qm = rl.first.div(dl.first);
        GausRat qc = rl.second / dl.second;
        q.add_term(qm, qc);
        r = r - d.mul_monomial(qm, qc);
    }
    return q.shift_s(va - vb);
}

void MPoly::split_linear(int v, MPoly& u_out, MPoly& v_out) const {
    u_out = MPoly();
    v_out = MPoly();
    for (auto& [m, c] : t_) {
        int e = m.exp_of(v);
        if (e == 0) u_out.add_term(m, c);
        else if (e == 1) v_out.add_term(m.erase_var(v), c);
        else throw std::logic_error("split_linear: exponent >= 2 survived reduction");
    }
}

GausRat MPoly::eval_s(const GausRat& s0) const {
    GausRat acc;
    for (auto& [m, c] : t_) {
        if (m.has_symbol_vars()) throw std::domain_error("cannot evaluate: free symbols present");
        int e = m.exp_of(VAR_S);
        GausRat p(1);
        GausRat base = s0;
        unsigned ae = (unsigned)std::abs(e);
        if (e < 0) {
            if (s0.is_zero()) throw std::domain_error("evaluation pole at s=0");
            base = GausRat(1) / s0;
        }
        for (unsigned k = 0; k < ae; ++k) p *= base;
        acc += c * p;
    }
    return acc;
}

// ---- UPoly ------------------------------------------------------------------

void UPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& p) {
    UPoly u;
    for (auto& [m, cc] : p.terms()) {
        if (m.has_symbol_vars()) throw std::logic_error("UPoly: symbols present");
        int e = m.exp_of(VAR_S);
        if (e < 0) throw std::logic_error("UPoly: negative exponent");
        if ((int)u.c.size() <= e) u.c.resize(e + 1);
        u.c[e] = cc;
    }
    u.trim();
    return u;
}

MPoly UPoly::to_mpoly() const {
    MPoly p;
    for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) p.add_term(Monomial::var(VAR_S, (int)k), c[k]);
    return p;
}

UPoly UPoly::conj() const {
    UPoly u = *this;
    for (auto& x : u.c) x = x.conj();
    return u;
}

bool UPoly::is_real() const {
    for (auto& x : c)
        if (!x.is_real()) return false;
    return true;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    UPoly u = *this;
    GausRat lc = u.c.back();
    for (auto& x : u.c) x = x / lc;
    return u;
}

UPoly UPoly::mul(const UPoly& a, const UPoly& b) {
    UPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, GausRat());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

UPoly UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& rem) {
    if (b.is_zero()) throw std::domain_error("UPoly division by zero");
    UPoly q;
    rem = a;
    rem.trim();
    if (rem.deg() >= b.deg()) q.c.assign(rem.deg() - b.deg() + 1, GausRat());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int sh = rem.deg() - b.deg();
        GausRat f = rem.c.back() / b.c.back();
        q.c[sh] = f;
        for (int k = 0; k <= b.deg(); ++k) rem.c[k + sh] -= f * b.c[k];
        rem.trim();
    }
    q.trim();
    return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    a.trim(); b.trim();
    while (!b.is_zero()) {
        UPoly r;
        divmod(a, b, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace qsu2
