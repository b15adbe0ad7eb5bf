#include "forms.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qsu2 {

int form_space_dim(int k) {
    switch (k) {
        case 0: case 4: return 1;
        case 1: case 3: return 4;
        case 2: return 6;
        default: return 0;
    }
}

namespace {

std::vector<ScalarQ> sparse_tensor(int k, std::initializer_list<std::pair<std::vector<int>, ScalarQ>> terms) {
    std::vector<ScalarQ> t(tensor_dim(k));
    for (auto& [labels, c] : terms) t[pack_index(labels)] = c;
    return t;
}

std::vector<ScalarQ> apply_antisym(Dir d, int k, const std::vector<ScalarQ>& v) {
    const SpMatZ& A = antisym(d, k);
    std::vector<ScalarQ> out(v.size());
    for (int r = 0; r < A.rows; ++r) {
        ScalarQ acc;
        for (auto& [c, x] : A.row[r])
            if (!v[c].is_zero()) acc += x.to_scalar() * v[c];
        out[r] = acc;
    }
    return out;
}

ScalarQ qpow(int e) { return ScalarQ::q_var().pow(e); }

std::vector<BasisForm> build_basis(Dir d, int k) {
    std::vector<BasisForm> out;
    ScalarQ one(1);
    auto finish = [&](BasisForm bf) {
        bf.tensor = apply_antisym(d, k, bf.pre);
        out.push_back(std::move(bf));
    };
    if (k == 0) {
        out.push_back({"1", {one}, {one}, one});
        return out;
    }
    if (k == 1) {
        for (int a = 0; a < NLABELS; ++a) {
            std::vector<ScalarQ> e(tensor_dim(1));
            e[a] = one;
            out.push_back({std::string("w") + label_name(a), e, e, one});
        }
        return out;
    }
    if (k == 2) {
        // Eigenvalue of A_+(2) on the sign-eps family is 1+q^(2eps); for the
        // minus algebra it is 1+q^(-2eps).
        auto lam = [&](int eps) { return one + qpow(d == Dir::Plus ? 2 * eps : -2 * eps); };
        ScalarQ c_p = one - qpow(2);  // 1-q^2
        ScalarQ c_m = one - qpow(-2); // 1-q^-2
        finish({"phi+", sparse_tensor(2, {{{L_MINUS, L_ZERO}, one}}), {}, lam(1)});
        finish({"kappa+", sparse_tensor(2, {{{L_PLUS, L_ZERO}, one}, {{L_PLUS, L_Z}, -c_p}}), {}, lam(1)});
        finish({"psi+", sparse_tensor(2, {{{L_ZERO, L_Z}, one}, {{L_MINUS, L_PLUS}, c_p}}), {}, lam(1)});
        finish({"phi-", sparse_tensor(2, {{{L_PLUS, L_ZERO}, one}}), {}, lam(-1)});
        finish({"kappa-", sparse_tensor(2, {{{L_MINUS, L_ZERO}, one}, {{L_MINUS, L_Z}, c_m}}), {}, lam(-1)});
        finish({"psi-", sparse_tensor(2, {{{L_ZERO, L_Z}, one}, {{L_MINUS, L_PLUS}, c_m}}), {}, lam(-1)});
        return out;
    }
    if (k == 3) {
        ScalarQ lam = ScalarQ(2) * (one + qpow(2) + qpow(-2));
        finish({"chi-", sparse_tensor(3, {{{L_PLUS, L_ZERO, L_Z}, one}}), {}, lam});
        finish({"chi+", sparse_tensor(3, {{{L_MINUS, L_ZERO, L_Z}, one}}), {}, lam});
        finish({"chi0", sparse_tensor(3, {{{L_MINUS, L_PLUS, L_Z}, one}}), {}, lam});
        finish({"chiz", sparse_tensor(3, {{{L_MINUS, L_PLUS, L_ZERO}, one}}), {}, lam});
        return out;
    }
    if (k == 4) {
        // 2(q+q^-1)^2(q^2+1+q^-2); equals the contraction constant of the
        // volume pairing, and is the computed top-degree eigenvalue.
        ScalarQ lam = ScalarQ(2) * (qpow(4) + 3 * qpow(2) + ScalarQ(4) + 3 * qpow(-2) + qpow(-4));
        finish({"theta", sparse_tensor(4, {{{L_MINUS, L_PLUS, L_ZERO, L_Z}, one}}), {}, lam});
        return out;
    }
    throw std::invalid_argument("form degree out of range");
}

struct BasisCache {
    std::vector<BasisForm> basis;
    MatQ decomposer; // dim x 4^k, coords = decomposer * tensor
};

const BasisCache& basis_cache(Dir d, int k) {
    static std::map<std::pair<int, int>, BasisCache> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d == Dir::Plus ? 0 : 1, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    BasisCache bc;
    bc.basis = build_basis(d, k);
    int dim = (int)bc.basis.size();
    int n = tensor_dim(k);
    // Left inverse of the 4^k x dim matrix of basis tensors: solve
    // Bmat^T d_i = e_i for each i.
    MatQ bt(dim, n);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < n; ++j) bt.at(i, j) = bc.basis[i].tensor[j];
    bc.decomposer = MatQ(dim, n);
    for (int i = 0; i < dim; ++i) {
        std::vector<ScalarQ> e(dim);
        e[i] = ScalarQ(1);
        auto sol = solve(bt, e);
        if (!sol) throw std::logic_error("canonical form basis is degenerate");
        for (int j = 0; j < n; ++j) bc.decomposer.at(i, j) = (*sol)[j];
    }
    return cache.emplace(key, std::move(bc)).first->second;
}

} // namespace

const std::vector<BasisForm>& form_basis(Dir d, int k) { return basis_cache(d, k).basis; }

bool Form::is_zero() const {
    for (auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

bool Form::operator==(const Form& o) const {
    if (dir != o.dir || k != o.k) return false;
    for (size_t t = 0; t < coords.size(); ++t)
        if (coords[t] != o.coords[t]) return false;
    return true;
}

Form zero_form(Dir d, int k) {
    return {d, k, std::vector<ScalarQ>(form_space_dim(k))};
}

Form unit_form(Dir d) {
    Form f = zero_form(d, 0);
    f.coords[0] = ScalarQ(1);
    return f;
}

Form coframe_form(Dir d, int a) {
    Form f = zero_form(d, 1);
    f.coords[a] = ScalarQ(1);
    return f;
}

Form basis_form(Dir d, int k, int i) {
    Form f = zero_form(d, k);
    f.coords.at(i) = ScalarQ(1);
    return f;
}

Form form_add(const Form& x, const Form& y) {
    if (x.dir != y.dir || x.k != y.k) throw std::invalid_argument("form mismatch in addition");
    Form out = x;
    for (size_t t = 0; t < out.coords.size(); ++t) out.coords[t] += y.coords[t];
    return out;
}

Form form_scale(const ScalarQ& c, const Form& x) {
    Form out = x;
    for (auto& v : out.coords) v *= c;
    return out;
}

std::vector<ScalarQ> form_tensor(const Form& f) {
    const auto& basis = form_basis(f.dir, f.k);
    std::vector<ScalarQ> t(tensor_dim(f.k));
    for (size_t i = 0; i < basis.size(); ++i) {
        if (f.coords[i].is_zero()) continue;
        for (int j = 0; j < (int)t.size(); ++j)
            if (!basis[i].tensor[j].is_zero()) t[j] += f.coords[i] * basis[i].tensor[j];
    }
    return t;
}

std::vector<ScalarQ> form_preimage(const Form& f) {
    // A^(k)(pre_i) = tensor_i, so the coordinates transfer directly.
    const auto& basis = form_basis(f.dir, f.k);
    std::vector<ScalarQ> t(tensor_dim(f.k));
    for (size_t i = 0; i < basis.size(); ++i) {
        if (f.coords[i].is_zero()) continue;
        for (int j = 0; j < (int)t.size(); ++j)
            if (!basis[i].pre[j].is_zero()) t[j] += f.coords[i] * basis[i].pre[j];
    }
    return t;
}

std::optional<Form> try_form_from_tensor(const std::vector<ScalarQ>& t, int k, Dir d) {
    const BasisCache& bc = basis_cache(d, k);
    Form f = zero_form(d, k);
    f.coords = bc.decomposer.apply(t);
    // Verify membership of the span exactly.
    std::vector<ScalarQ> back = form_tensor(f);
    for (size_t j = 0; j < t.size(); ++j)
        if (back[j] != t[j]) return std::nullopt;
    return f;
}

Form form_from_tensor(const std::vector<ScalarQ>& t, int k, Dir d) {
    auto f = try_form_from_tensor(t, k, d);
    if (!f) throw std::domain_error("tensor does not lie in the canonical form span");
    return *f;
}

Form wedge(const Form& x, const Form& y) {
    if (x.dir != y.dir) throw std::invalid_argument("wedge across different algebras");
    int k = x.k + y.k;
    if (k > 4) return {x.dir, k, {}};
    std::vector<ScalarQ> px = form_preimage(x);
    std::vector<ScalarQ> py = form_preimage(y);
    std::vector<ScalarQ> prod(tensor_dim(k));
    int ny = tensor_dim(y.k);
    for (int i = 0; i < (int)px.size(); ++i) {
        if (px[i].is_zero()) continue;
        for (int j = 0; j < ny; ++j)
            if (!py[j].is_zero()) prod[i * ny + j] = px[i] * py[j];
    }
    return form_from_tensor(apply_antisym(x.dir, k, prod), k, x.dir);
}

std::vector<ScalarQ> star_tensor_expr(const std::vector<ScalarQ>& t, int k) {
    std::vector<ScalarQ> out(t.size());
    // (-1)^k from the label stars, (-1)^(k(k-1)/2) from reversal.
    int sgn = ((k + k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
    for (int idx = 0; idx < (int)t.size(); ++idx) {
        if (t[idx].is_zero()) continue;
        std::vector<int> labels = unpack_index(idx, k);
        std::vector<int> starred(k);
        for (int p = 0; p < k; ++p) starred[p] = star_label(labels[k - 1 - p]);
        ScalarQ c = t[idx].conj();
        out[pack_index(starred)] += sgn > 0 ? c : -c;
    }
    return out;
}

Form star_form(const Form& f) {
    std::vector<ScalarQ> pre = form_preimage(f);
    std::vector<ScalarQ> starred = star_tensor_expr(pre, f.k);
    return form_from_tensor(apply_antisym(f.dir, f.k, starred), f.k, f.dir);
}

std::string form_str(const Form& f) {
    const auto& basis = form_basis(f.dir, f.k);
    std::string out;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (f.coords[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + f.coords[i].str() + ")*" + basis[i].name;
    }
    return out.empty() ? "0" : out;
}

} // namespace qsu2
