#include "qalgebra.hpp"

#include <stdexcept>

namespace qsu2 {

namespace {

ScalarQ qpow_half(int half_exps) {
    // s^k is q^{k/2}
    return ScalarQ::from_fraction(MPoly::variable(VAR_S, half_exps), MPoly::constant(GausRat(1)));
}

} // namespace

AlgebraElement::AlgebraElement(const ScalarQ& c) {
    if (!c.is_zero()) terms_[QMono{}] = c;
}

AlgebraElement AlgebraElement::monomial(int k, int m, int n, const ScalarQ& coeff) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative c exponent");
    AlgebraElement out;
    if (!coeff.is_zero()) out.terms_[QMono{k, m, n}] = coeff;
    return out;
}

void AlgebraElement::add_term(const QMono& mono, const ScalarQ& coeff) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return (*this - o).is_zero();
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [mono, c] : o.terms_) out.add_term(mono, -c);
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out;
    for (const auto& [mono, c] : terms_) out.terms_[mono] = -c;
    return out;
}

AlgebraElement AlgebraElement::operator*(const ScalarQ& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [mono, v] : terms_) out.terms_[mono] = v * c;
    return out;
}

namespace {

// Right multiplication by a single generator in normal form.  Moving a past
// the c block costs q^{-(m+n)}, moving a* costs q^{m+n}; crossing signs uses
// a*a = 1 - c*c and aa* = 1 - q^2 cc*.
enum class Gen { A, Astar, C, Cstar };

AlgebraElement mul_gen(const AlgebraElement& x, Gen g) {
    AlgebraElement out;
    ScalarQ q2 = ScalarQ::parse("q^2");
    for (const auto& [mono, coeff] : x.terms()) {
        switch (g) {
            case Gen::C:
                out += AlgebraElement::monomial(mono.k, mono.m + 1, mono.n, coeff);
                break;
            case Gen::Cstar:
                out += AlgebraElement::monomial(mono.k, mono.m, mono.n + 1, coeff);
                break;
            case Gen::A: {
                ScalarQ c = coeff * qpow_half(-2 * (mono.m + mono.n));
                out += AlgebraElement::monomial(mono.k + 1, mono.m, mono.n, c);
                if (mono.k < 0)
                    out += AlgebraElement::monomial(mono.k + 1, mono.m + 1, mono.n + 1, -c);
                break;
            }
            case Gen::Astar: {
                ScalarQ c = coeff * qpow_half(2 * (mono.m + mono.n));
                out += AlgebraElement::monomial(mono.k - 1, mono.m, mono.n, c);
                if (mono.k > 0)
                    out += AlgebraElement::monomial(mono.k - 1, mono.m + 1, mono.n + 1, -q2 * c);
                break;
            }
        }
    }
    return out;
}

} // namespace

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement out;
    for (const auto& [mono, coeff] : o.terms_) {
        AlgebraElement acc = *this * coeff;
        for (int i = 0; i < (mono.k > 0 ? mono.k : -mono.k); ++i)
            acc = mul_gen(acc, mono.k > 0 ? Gen::A : Gen::Astar);
        for (int i = 0; i < mono.m; ++i) acc = mul_gen(acc, Gen::C);
        for (int i = 0; i < mono.n; ++i) acc = mul_gen(acc, Gen::Cstar);
        out += acc;
    }
    return out;
}

AlgebraElement AlgebraElement::star() const {
    AlgebraElement out;
    for (const auto& [mono, coeff] : terms_)
        out += monomial(-mono.k, mono.n, mono.m,
                        coeff.conj() * qpow_half(2 * mono.k * (mono.m + mono.n)));
    return out;
}

ScalarQ AlgebraElement::counit() const {
    ScalarQ acc;
    for (const auto& [mono, coeff] : terms_)
        if (mono.m == 0 && mono.n == 0) acc += coeff;
    return acc;
}

std::optional<int> AlgebraElement::charge() const {
    std::optional<int> grade;
    for (const auto& [mono, coeff] : terms_) {
        int g = -(mono.k + mono.m - mono.n);
        if (grade && *grade != g) return std::nullopt;
        grade = g;
    }
    return grade;
}

int AlgebraElement::degree() const {
    int d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.degree());
    return d;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + coeff.str() + ")";
        auto app = [&](const char* g, int e) {
            if (e == 0) return;
            out += std::string("*") + g;
            if (e > 1) out += "^" + std::to_string(e);
        };
        app("a", mono.k > 0 ? mono.k : 0);
        app("a*", mono.k < 0 ? -mono.k : 0);
        app("c", mono.m);
        app("c*", mono.n);
    }
    return out;
}

// ---- dual algebra ------------------------------------------------------------

UqElement UqElement::operator+(const UqElement& o) const {
    UqElement out = *this;
    out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
    return out;
}

UqElement UqElement::operator-(const UqElement& o) const {
    return *this + o * ScalarQ(-1);
}

UqElement UqElement::operator*(const UqElement& o) const {
    UqElement out;
    for (const auto& [c1, w1] : terms)
        for (const auto& [c2, w2] : o.terms) {
            UqWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            out.terms.emplace_back(c1 * c2, std::move(w));
        }
    return out;
}

UqElement UqElement::operator*(const ScalarQ& c) const {
    UqElement out = *this;
    for (auto& [v, w] : out.terms) v = v * c;
    return out;
}

UqElement UqElement::antipode(bool inverse) const {
    ScalarQ qe = inverse ? ScalarQ::parse("-q^-1") : ScalarQ::parse("-q");
    ScalarQ qf = inverse ? ScalarQ::parse("-q") : ScalarQ::parse("-q^-1");
    UqElement out;
    for (const auto& [c, w] : terms) {
        ScalarQ v = c;
        UqWord rw;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            switch (*it) {
                case UqGen::K: rw.push_back(UqGen::Kinv); break;
                case UqGen::Kinv: rw.push_back(UqGen::K); break;
                case UqGen::E: rw.push_back(UqGen::E); v = v * qe; break;
                case UqGen::F: rw.push_back(UqGen::F); v = v * qf; break;
            }
        }
        out.terms.emplace_back(v, std::move(rw));
    }
    return out;
}

UqElement UqElement::star() const {
    UqElement out;
    for (const auto& [c, w] : terms) {
        UqWord rw;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            switch (*it) {
                case UqGen::K: rw.push_back(UqGen::K); break;
                case UqGen::Kinv: rw.push_back(UqGen::Kinv); break;
                case UqGen::E: rw.push_back(UqGen::F); break;
                case UqGen::F: rw.push_back(UqGen::E); break;
            }
        }
        out.terms.emplace_back(c.conj(), std::move(rw));
    }
    return out;
}

// ---- actions -----------------------------------------------------------------

namespace {

// K acts diagonally: each monomial is rescaled by s to the listed power.
int k_half_weight(const QMono& mono, Side side) {
    if (side == Side::Left) return -(mono.k + mono.m - mono.n);
    return mono.m - mono.n - mono.k;
}

// Image of a single algebra generator under E or F; zero when killed.
AlgebraElement gen_image(UqGen g, Gen x, Side side) {
    ScalarQ mq = ScalarQ::parse("-q"), mqi = ScalarQ::parse("-q^-1");
    if (side == Side::Left) {
        if (g == UqGen::E) {
            if (x == Gen::A) return AlgebraElement::monomial(0, 0, 1, mq);
            if (x == Gen::C) return AlgebraElement::gen_astar();
        } else {
            if (x == Gen::Astar) return AlgebraElement::gen_c();
            if (x == Gen::Cstar) return AlgebraElement::monomial(1, 0, 0, mqi);
        }
    } else {
        if (g == UqGen::E) {
            if (x == Gen::C) return AlgebraElement::gen_a();
            if (x == Gen::Astar) return AlgebraElement::monomial(0, 0, 1, mq);
        } else {
            if (x == Gen::A) return AlgebraElement::gen_c();
            if (x == Gen::Cstar) return AlgebraElement::monomial(-1, 0, 0, mqi);
        }
    }
    return {};
}

// First generator of the normal-form word and the remaining monomial.
std::pair<Gen, QMono> split_mono(const QMono& mono) {
    if (mono.k > 0) return {Gen::A, {mono.k - 1, mono.m, mono.n}};
    if (mono.k < 0) return {Gen::Astar, {mono.k + 1, mono.m, mono.n}};
    if (mono.m > 0) return {Gen::C, {0, mono.m - 1, mono.n}};
    return {Gen::Cstar, {0, mono.m, mono.n - 1}};
}

AlgebraElement gen_element(Gen g) {
    switch (g) {
        case Gen::A: return AlgebraElement::gen_a();
        case Gen::Astar: return AlgebraElement::gen_astar();
        case Gen::C: return AlgebraElement::gen_c();
        default: return AlgebraElement::gen_cstar();
    }
}

// Twisted Leibniz recursion for E and F over the monomial word: the image of
// a product xy is (gx)(Ky) + (K^{-1}x)(gy), with the same shape on both
// sides; only the generator images and K weights differ.
AlgebraElement act_ef_mono(UqGen g, const QMono& mono, Side side) {
    if (mono.degree() == 0) return {};
    auto [first, rest] = split_mono(mono);
    if (rest.degree() == 0) return gen_image(g, first, side);

    AlgebraElement rest_el = AlgebraElement::monomial(rest.k, rest.m, rest.n);
    QMono fm{first == Gen::A ? 1 : first == Gen::Astar ? -1 : 0,
             first == Gen::C ? 1 : 0, first == Gen::Cstar ? 1 : 0};
    AlgebraElement out;
    AlgebraElement gx = gen_image(g, first, side);
    if (!gx.is_zero()) out += gx * qpow_half(k_half_weight(rest, side)) * rest_el;
    AlgebraElement gy = act_ef_mono(g, rest, side);
    if (!gy.is_zero()) out += gen_element(first) * qpow_half(-k_half_weight(fm, side)) * gy;
    return out;
}

} // namespace

AlgebraElement act(UqGen g, const AlgebraElement& x, Side side) {
    AlgebraElement out;
    if (g == UqGen::K || g == UqGen::Kinv) {
        int sgn = g == UqGen::K ? 1 : -1;
        for (const auto& [mono, coeff] : x.terms())
            out += AlgebraElement::monomial(mono.k, mono.m, mono.n,
                                            coeff * qpow_half(sgn * k_half_weight(mono, side)));
        return out;
    }
    for (const auto& [mono, coeff] : x.terms()) out += act_ef_mono(g, mono, side) * coeff;
    return out;
}

AlgebraElement act(const UqWord& w, const AlgebraElement& x, Side side) {
    AlgebraElement out = x;
    if (side == Side::Left) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(*it, out, side);
    } else {
        for (UqGen g : w) out = act(g, out, side);
    }
    return out;
}

AlgebraElement act(const UqElement& h, const AlgebraElement& x, Side side) {
    AlgebraElement out;
    for (const auto& [c, w] : h.terms) out += act(w, x, side) * c;
    return out;
}

ScalarQ pairing(const UqElement& h, const AlgebraElement& x) {
    return act(h, x, Side::Left).counit();
}

// ---- tangent operators ---------------------------------------------------------

const UqElement& tangent_op(int label) {
    static const std::array<UqElement, 4> ops = [] {
        ScalarQ d2 = ScalarQ::parse("(q - q^-1)^2");
        ScalarQ di = ScalarQ::parse("q - q^-1").inverse();
        ScalarQ q = ScalarQ::q_var(), qi = ScalarQ::parse("q^-1");
        std::array<UqElement, 4> out;
        out[L_MINUS] = UqElement::word({UqGen::F, UqGen::Kinv}, qpow_half(1));
        out[L_PLUS] = UqElement::word({UqGen::E, UqGen::Kinv}, qpow_half(-1));
        out[L_Z] = UqElement::word({UqGen::Kinv, UqGen::Kinv}, di) -
                   UqElement::scalar(di);
        out[L_ZERO] = UqElement::word({UqGen::K, UqGen::K}, q / d2) +
                      UqElement::word({UqGen::Kinv, UqGen::Kinv}, qi / d2) -
                      UqElement::scalar((q + qi) / d2) +
                      UqElement::word({UqGen::F, UqGen::E});
        return out;
    }();
    return ops.at(label);
}

UqElement tangent_L0_alt() {
    ScalarQ d2 = ScalarQ::parse("(q - q^-1)^2");
    ScalarQ q = ScalarQ::q_var(), qi = ScalarQ::parse("q^-1");
    return UqElement::word({UqGen::Kinv, UqGen::Kinv}, q / d2) +
           UqElement::word({UqGen::K, UqGen::K}, qi / d2) -
           UqElement::scalar((q + qi) / d2) + UqElement::word({UqGen::E, UqGen::F});
}

UqElement tangent_op_r(int label) {
    return tangent_op(label).antipode(true) * ScalarQ(-1);
}

UqElement casimir() {
    ScalarQ d2 = ScalarQ::parse("(q - q^-1)^2");
    ScalarQ q = ScalarQ::q_var(), qi = ScalarQ::parse("q^-1");
    return UqElement::word({UqGen::K, UqGen::K}, q / d2) +
           UqElement::word({UqGen::Kinv, UqGen::Kinv}, qi / d2) -
           UqElement::scalar(ScalarQ(2) / d2 + ScalarQ::parse("1/4")) +
           UqElement::word({UqGen::F, UqGen::E});
}

UqElement casimir_via_L0() {
    ScalarQ half = ScalarQ::qnum(1);
    return tangent_op(L_ZERO) + UqElement::scalar(half * half - ScalarQ::parse("1/4"));
}

const std::vector<AlgebraElement>& ideal_generators() {
    static const std::vector<AlgebraElement> gens = [] {
        AlgebraElement a = AlgebraElement::gen_a(), as = AlgebraElement::gen_astar();
        AlgebraElement c = AlgebraElement::gen_c(), cs = AlgebraElement::gen_cstar();
        ScalarQ q2 = ScalarQ::parse("q^2");
        AlgebraElement diff = as - a;
        AlgebraElement t = a * q2 + as - AlgebraElement(ScalarQ::parse("q^-1*(1 + q^4)"));
        std::vector<AlgebraElement> out;
        out.push_back(c * c);
        out.push_back(c * diff);
        out.push_back(as * as * q2 - (a * as - c * cs) * (ScalarQ(1) + q2) + a * a);
        out.push_back(cs * diff);
        out.push_back(cs * cs);
        out.push_back(t * c);
        out.push_back(t * diff);
        out.push_back(t * cs);
        out.push_back(t * (a * q2 + as - AlgebraElement(ScalarQ(1) + q2)));
        return out;
    }();
    return gens;
}

AlgebraElement build_phi(int n, int twoJ, int l) {
    int up = twoJ + n, dn = twoJ - n;
    if (up < 0 || dn < 0 || up % 2 || dn % 2 || l < 0 || l > twoJ)
        throw std::invalid_argument("phi parameters out of range");
    AlgebraElement x = AlgebraElement::monomial(-up / 2, dn / 2, 0);
    for (int i = 0; i < l; ++i) x = act(UqGen::E, x, Side::Right);
    return x;
}

std::array<AlgebraElement, 4> differential(const AlgebraElement& x) {
    std::array<AlgebraElement, 4> out;
    for (int a = 0; a < NLABELS; ++a) out[a] = act(tangent_op(a), x, Side::Left);
    return out;
}

} // namespace qsu2
