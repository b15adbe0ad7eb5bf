#include "hodge.hpp"

#include <stdexcept>

namespace qsu2 {

ScalarQ Contraction::entry(int a, int b) const {
    if (a == L_MINUS && b == L_MINUS) return alpha;
    if (a == L_PLUS && b == L_PLUS) return beta;
    if (a == L_ZERO && b == L_ZERO) return nu;
    if (a == L_ZERO && b == L_Z) return eps;
    if (a == L_Z && b == L_ZERO) return xi;
    if (a == L_Z && b == L_Z) return gam;
    return ScalarQ();
}

Contraction Contraction::symbolic() {
    register_standard_symbols();
    return {ScalarQ::symbol("alpha"), ScalarQ::symbol("beta"), ScalarQ::symbol("nu"),
            ScalarQ::symbol("eps"),   ScalarQ::symbol("xi"),   ScalarQ::symbol("gam")};
}

HodgeConfig symbolic_config(Dir d) {
    register_standard_symbols();
    return {Contraction::symbolic(), ScalarQ::symbol("m"), d};
}

std::vector<ScalarQ> contract(const Contraction& g, const std::vector<ScalarQ>& xi, int k,
                              const std::vector<ScalarQ>& eta, int s) {
    if (k > s) throw std::invalid_argument("contraction degree mismatch");
    if ((int)xi.size() != tensor_dim(k) || (int)eta.size() != tensor_dim(s))
        throw std::invalid_argument("contraction operand size mismatch");
    std::vector<ScalarQ> out(tensor_dim(s - k));
    for (int w = 0; w < (int)xi.size(); ++w) {
        if (xi[w].is_zero()) continue;
        ScalarQ cw = xi[w].conj();
        auto wl = unpack_index(w, k);
        for (int v = 0; v < (int)eta.size(); ++v) {
            if (eta[v].is_zero()) continue;
            auto vl = unpack_index(v, s);
            ScalarQ prod = cw * eta[v];
            bool dead = false;
            for (int i = 0; i < k; ++i) {
                ScalarQ ge = g.entry(wl[i], vl[i]);
                if (ge.is_zero()) {
                    dead = true;
                    break;
                }
                prod = prod * ge;
            }
            if (dead) continue;
            int tail = 0;
            for (int i = k; i < s; ++i) tail = tail * 4 + vl[i];
            out[tail] = out[tail] + prod;
        }
    }
    return out;
}

std::vector<ScalarQ> volume_theta(const HodgeConfig& cfg) {
    std::vector<ScalarQ> theta(tensor_dim(4));
    theta[pack_index({L_MINUS, L_PLUS, L_ZERO, L_Z})] = ScalarQ::unit_i() * cfg.m;
    return theta;
}

Form volume_mu(const HodgeConfig& cfg) {
    Form mu = basis_form(cfg.dir, 4, 0);
    mu.coords[0] = ScalarQ::unit_i() * cfg.m;
    return mu;
}

ScalarQ star_eigenvalue(Dir d, int k, int i) {
    Form sf = star_form(basis_form(d, k, i));
    const auto& basis = form_basis(d, k);
    const ScalarQ* lam = nullptr;
    for (int j = 0; j < (int)sf.coords.size(); ++j) {
        if (sf.coords[j].is_zero()) continue;
        if (lam && !(*lam == basis[j].lambda))
            throw std::logic_error("star image spreads over distinct eigenvalues");
        lam = &basis[j].lambda;
    }
    if (!lam) throw std::logic_error("star image of a basis form vanished");
    return *lam;
}

Form hodge_T(const HodgeConfig& cfg, const Form& xi) {
    if (xi.dir != cfg.dir) throw std::invalid_argument("form direction mismatch");
    int k = xi.k;
    Dir d = cfg.dir;
    auto theta = volume_theta(cfg);
    std::vector<ScalarQ> btheta =
        (k == 0 || k == 4) ? theta : apply_op(shuffle_sum(d, k, 4 - k), theta);
    const auto& basis = form_basis(d, k);
    Form out = zero_form(d, 4 - k);
    for (int i = 0; i < (int)xi.coords.size(); ++i) {
        if (xi.coords[i].is_zero()) continue;
        const BasisForm& b = basis[i];
        auto contracted = contract(cfg.g, b.tensor, k, btheta, 4);
        auto anti = (k == 4) ? contracted : apply_op(antisym(d, 4 - k), contracted);
        Form img = star_form(form_from_tensor(anti, 4 - k, d));
        ScalarQ scale = xi.coords[i] * star_eigenvalue(d, k, i) / b.lambda;
        out = form_add(out, form_scale(scale, img));
    }
    return out;
}

Form hodge_L(const HodgeConfig& cfg, const Form& xi) {
    if (xi.dir != cfg.dir) throw std::invalid_argument("form direction mismatch");
    int k = xi.k;
    Dir d = cfg.dir;
    auto mu_t = form_tensor(volume_mu(cfg));
    const auto& basis = form_basis(d, k);
    Form out = zero_form(d, 4 - k);
    for (int i = 0; i < (int)xi.coords.size(); ++i) {
        if (xi.coords[i].is_zero()) continue;
        const BasisForm& b = basis[i];
        auto contracted = contract(cfg.g, b.tensor, k, mu_t, 4);
        Form img = star_form(form_from_tensor(contracted, 4 - k, d));
        out = form_add(out, form_scale(xi.coords[i] / b.lambda, img));
    }
    return out;
}

std::vector<std::vector<ScalarQ>> hodge_matrix(const HodgeConfig& cfg, int k, char which) {
    int n = form_space_dim(k);
    int tgt = form_space_dim(4 - k);
    std::vector<std::vector<ScalarQ>> cols(n, std::vector<ScalarQ>(tgt));
    for (int i = 0; i < n; ++i) {
        Form img = which == 'L' ? hodge_L(cfg, basis_form(cfg.dir, k, i))
                                : hodge_T(cfg, basis_form(cfg.dir, k, i));
        cols[i] = img.coords;
    }
    return cols;
}

} // namespace qsu2
