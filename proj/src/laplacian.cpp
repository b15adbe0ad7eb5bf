#include "laplacian.hpp"

#include <stdexcept>

namespace qsu2 {

namespace {

UqElement box_from(const UqElement& plus, const UqElement& minus, const UqElement& zero,
                   const UqElement& z, const ScalarQ& alpha, int branch, bool swap_q2) {
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +-1");
    ScalarQ q2 = ScalarQ::parse("q^2");
    ScalarQ b(branch);
    UqElement mixed = swap_q2 ? plus * minus * q2 + minus * plus
                              : plus * minus + minus * plus * q2;
    return (mixed + z * z * (b * (ScalarQ(1) + q2)) +
            zero * z * (b * ScalarQ(-2) * (q2 - ScalarQ(1)))) *
           alpha;
}

} // namespace

UqElement box_l(const ScalarQ& alpha, int branch) {
    return box_from(tangent_op(L_PLUS), tangent_op(L_MINUS), tangent_op(L_ZERO),
                    tangent_op(L_Z), alpha, branch, false);
}

UqElement box_r(const ScalarQ& alpha, int branch) {
    return box_from(tangent_op_r(L_PLUS), tangent_op_r(L_MINUS), tangent_op_r(L_ZERO),
                    tangent_op_r(L_Z), alpha, branch, true);
}

UqElement box_collapsed(const ScalarQ& alpha) {
    return tangent_op(L_ZERO) * (ScalarQ::parse("2*q") * alpha);
}

UqElement delta_q_op() {
    ScalarQ alpha = ScalarQ::parse("q^2 + 1").inverse();
    UqElement l0 = tangent_op(L_ZERO);
    return box_l(alpha, +1) + l0 * l0 * ScalarQ::parse("((q - q^-1)/(q + q^-1))^2");
}

ScalarQ lambda_z(int n) {
    return (ScalarQ::q_var().pow(-n) - ScalarQ(1)) / ScalarQ::parse("q - q^-1");
}

ScalarQ box_eigenvalue(const ScalarQ& alpha, int branch, int n, int twoJ) {
    ScalarQ l0 = ScalarQ::qnum(twoJ) * ScalarQ::qnum(twoJ + 2);
    ScalarQ base = ScalarQ::parse("2*q") * alpha * l0;
    if (branch == 1) return base;
    if (branch != -1) throw std::invalid_argument("branch must be +-1");
    ScalarQ lz = lambda_z(n);
    return base - ScalarQ(2) * ScalarQ::parse("q^2 + 1") * alpha * lz * lz +
           ScalarQ(4) * ScalarQ::parse("q^2 - 1") * alpha * l0 * lz;
}

ScalarQ delta_q_eigenvalue(int twoJ) {
    ScalarQ l0 = ScalarQ::qnum(twoJ) * ScalarQ::qnum(twoJ + 2);
    return ScalarQ::parse("2*q/(q^2 + 1)") * l0 +
           ScalarQ::parse("((q - q^-1)/(q + q^-1))^2") * l0 * l0;
}

std::vector<SpectrumRow> scan_spectrum(const ScalarQ& alpha, int branch, const GausRat& q0,
                                       int n_max, int twoJ_max) {
    std::vector<SpectrumRow> out;
    for (int n = -n_max; n <= n_max; ++n)
        for (int twoJ = std::abs(n); twoJ <= twoJ_max; twoJ += 2) {
            SpectrumRow row;
            row.n = n;
            row.twoJ = twoJ;
            row.value = box_eigenvalue(alpha, branch, n, twoJ).eval_q(q0);
            out.push_back(row);
        }
    return out;
}

} // namespace qsu2
