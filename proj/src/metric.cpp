#include "metric.hpp"

#include <stdexcept>

namespace qsu2 {

MetricMat metric_zero() { return MetricMat(NLABELS, std::vector<ScalarQ>(NLABELS)); }

MetricMat metric_from_contraction(const Contraction& g) {
    MetricMat out = metric_zero();
    for (int a = 0; a < NLABELS; ++a)
        for (int b = 0; b < NLABELS; ++b) out[a][b] = -g.entry(star_label(a), b);
    return out;
}

MetricMat metric_branch(const ScalarQ& a, int sign) {
    ScalarQ q2 = ScalarQ::parse("q^2");
    ScalarQ e = ScalarQ(sign) * (ScalarQ(1) - q2) * a;
    MetricMat out = metric_zero();
    out[L_MINUS][L_PLUS] = q2 * a;
    out[L_PLUS][L_MINUS] = a;
    out[L_ZERO][L_Z] = e;
    out[L_Z][L_ZERO] = e;
    out[L_Z][L_Z] = ScalarQ(sign) * (q2 + ScalarQ(1)) * a;
    return out;
}

std::vector<ScalarQ> metric_compose_sigma(const MetricMat& g, Dir d) {
    const SpMatZ& m = sigma_op(d);
    std::vector<ScalarQ> out(tensor_dim(2));
    for (int r = 0; r < m.rows; ++r) {
        std::vector<int> ab = unpack_index(r, 2);
        const ScalarQ& gr = g[ab[0]][ab[1]];
        if (gr.is_zero()) continue;
        for (const auto& [c, v] : m.row[r]) out[c] += gr * v.to_scalar();
    }
    return out;
}

namespace {

// Coefficients of (g x 1) applied after the given operator on triple
// tensors, as a 4 x 64 matrix; leg = 1 contracts the first two slots,
// leg = 2 the last two.
std::vector<std::vector<ScalarQ>> pair_after(const MetricMat& g, const SpMatZ& op, int leg) {
    std::vector<std::vector<ScalarQ>> out(NLABELS, std::vector<ScalarQ>(tensor_dim(3)));
    for (int r = 0; r < op.rows; ++r) {
        std::vector<int> abc = unpack_index(r, 3);
        int x = leg == 1 ? abc[0] : abc[1];
        int y = leg == 1 ? abc[1] : abc[2];
        int keep = leg == 1 ? abc[2] : abc[0];
        const ScalarQ& gr = g[x][y];
        if (gr.is_zero()) continue;
        for (const auto& [c, v] : op.row[r]) out[keep][c] += gr * v.to_scalar();
    }
    return out;
}

ScalarQ det_n(const MetricMat& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    ScalarQ acc;
    int sgn = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
        const ScalarQ& piv = m[rows[i]][cols[0]];
        if (!piv.is_zero()) {
            std::vector<int> sub_rows;
            for (size_t j = 0; j < rows.size(); ++j)
                if (j != i) sub_rows.push_back(rows[j]);
            acc += ScalarQ(sgn) * piv *
                   det_n(m, sub_rows, std::vector<int>(cols.begin() + 1, cols.end()));
        }
        sgn = -sgn;
    }
    return acc;
}

} // namespace

ScalarQ metric_det(const MetricMat& g) { return det_n(g, {0, 1, 2, 3}, {0, 1, 2, 3}); }

MetricAxioms metric_axioms(const MetricMat& g, const EvalAt& at) {
    MetricAxioms ax;
    ax.nondegenerate = !at.zero(metric_det(g));

    ax.sigma_symmetric = true;
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        std::vector<ScalarQ> out = metric_compose_sigma(g, d);
        for (int i = 0; i < tensor_dim(2) && ax.sigma_symmetric; ++i) {
            std::vector<int> ab = unpack_index(i, 2);
            ax.sigma_symmetric = at.equal(out[i], g[ab[0]][ab[1]]);
        }
        if (!ax.sigma_symmetric) break;
    }

    ax.braided_symmetric = true;
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        auto lhs = pair_after(g, sigma_lift(d, 3, 2), 1);
        auto rhs = pair_after(g, sigma_lift(flip(d), 3, 1), 2);
        for (int r = 0; r < NLABELS && ax.braided_symmetric; ++r)
            for (int c = 0; c < tensor_dim(3) && ax.braided_symmetric; ++c)
                ax.braided_symmetric = at.equal(lhs[r][c], rhs[r][c]);
        if (!ax.braided_symmetric) break;
    }

    ax.real = true;
    for (int a = 0; a < NLABELS && ax.real; ++a)
        for (int b = 0; b < NLABELS && ax.real; ++b)
            ax.real = at.equal(g[a][b].conj(), g[star_label(b)][star_label(a)]);

    ax.coinvariant = true;
    for (int a = 0; a < NLABELS && ax.coinvariant; ++a)
        for (int b = 0; b < NLABELS && ax.coinvariant; ++b)
            if (label_charge(a) + label_charge(b) != 0) ax.coinvariant = at.zero(g[a][b]);

    return ax;
}

int sigma_branch_sign() {
    static int cached = [] {
        register_standard_symbols();
        ScalarQ a = ScalarQ::symbol(std_syms().a);
        bool plus = metric_axioms(metric_branch(a, +1)).sigma_symmetric;
        bool minus = metric_axioms(metric_branch(a, -1)).sigma_symmetric;
        if (plus == minus) throw std::logic_error("sigma symmetry does not split the branches");
        return plus ? +1 : -1;
    }();
    return cached;
}

const char* metric_class_name(MetricClass c) {
    switch (c) {
        case MetricClass::SigmaBranch: return "sigma-branch";
        case MetricClass::OtherBranch: return "other-branch";
        default: return "not-in-family";
    }
}

MetricClass classify_metric(const MetricMat& g, const EvalAt& at) {
    static const bool pattern[4][4] = {{false, true, false, false},
                                       {true, false, false, false},
                                       {false, false, false, true},
                                       {false, false, true, true}};
    for (int a = 0; a < NLABELS; ++a)
        for (int b = 0; b < NLABELS; ++b)
            if (!pattern[a][b] && !at.zero(g[a][b])) return MetricClass::NotInFamily;

    const ScalarQ& a = g[L_PLUS][L_MINUS];
    if (at.zero(a)) return MetricClass::NotInFamily;
    if (!at.equal(a.conj(), a)) return MetricClass::NotInFamily;
    if (!at.equal(g[L_MINUS][L_PLUS], ScalarQ::parse("q^2") * a)) return MetricClass::NotInFamily;

    for (int sign : {+1, -1}) {
        MetricMat want = metric_branch(a, sign);
        if (at.equal(g[L_ZERO][L_Z], want[L_ZERO][L_Z]) &&
            at.equal(g[L_Z][L_ZERO], want[L_Z][L_ZERO]) &&
            at.equal(g[L_Z][L_Z], want[L_Z][L_Z]))
            return sign == sigma_branch_sign() ? MetricClass::SigmaBranch
                                               : MetricClass::OtherBranch;
    }
    return MetricClass::NotInFamily;
}

} // namespace qsu2
