#include "braiding.hpp"

#include <mutex>
#include <stdexcept>

namespace qsu2 {

int pack_index(const std::vector<int>& labels) {
    int idx = 0;
    for (int a : labels) idx = idx * 4 + a;
    return idx;
}

std::vector<int> unpack_index(int idx, int k) {
    std::vector<int> out(k);
    for (int i = k - 1; i >= 0; --i) {
        out[i] = idx & 3;
        idx >>= 2;
    }
    return out;
}

int tensor_charge(int idx, int k) {
    int n = 0;
    for (int i = 0; i < k; ++i) {
        n += label_charge(idx & 3);
        idx >>= 2;
    }
    return n;
}

namespace {

using LZ = LaurentZ;

// Shorthands for the matrix entries; everything is an integer Laurent
// polynomial in q = s^2.
LZ c(long v) { return LZ::from_q_terms({{0, v}}); }
LZ qp(int e, long v = 1) { return LZ::from_q_terms({{e, v}}); }
LZ one_minus_q2() { return LZ::from_q_terms({{0, 1}, {2, -1}}); }
LZ one_minus_qm2() { return LZ::from_q_terms({{0, 1}, {-2, -1}}); }
LZ one_plus_q2() { return LZ::from_q_terms({{0, 1}, {2, 1}}); }
LZ m_one_minus_qm2() { return LZ::from_q_terms({{0, -1}, {-2, -1}}); } // -1 - q^-2
LZ dsq() { return LZ::from_q_terms({{2, 1}, {0, -2}, {-2, 1}}); }      // (q - q^-1)^2
LZ q2_m_qm2() { return LZ::from_q_terms({{2, 1}, {-2, -1}}); }         // q^2 - q^-2

// The printed relations read sigma(v_i) = sum_j M[i][j] v_j on the block
// basis; as an operator matrix that is E[b_j][b_i] = M[i][j].
void install_block(SpMatZ& E, const std::vector<int>& basis,
                   const std::vector<std::vector<LZ>>& M) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            if (!M[i][j].is_zero()) E.set(basis[j], basis[i], M[i][j]);
}

SpMatZ build_sigma(Dir d) {
    SpMatZ E(16, 16);

    // Fixed tensors: omega_a (x) omega_a for a = -, 0, +.
    for (int a : {L_MINUS, L_ZERO, L_PLUS}) {
        int idx = a * 4 + a;
        E.set(idx, idx, LZ::one());
    }

    // Block basis (omega_- (x) omega_0, omega_0 (x) omega_-,
    //              omega_- (x) omega_z, omega_z (x) omega_-).
    std::vector<int> bm = {pack_index({L_MINUS, L_ZERO}), pack_index({L_ZERO, L_MINUS}),
                           pack_index({L_MINUS, L_Z}), pack_index({L_Z, L_MINUS})};
    if (d == Dir::Plus) {
        install_block(E, bm, {
            {one_minus_q2(), c(1), LZ(), LZ()},
            {qp(2), LZ(), LZ(), LZ()},
            {one_plus_q2(), LZ(), LZ(), c(1)},
            {m_one_minus_qm2(), LZ(), qp(-2), one_minus_qm2()},
        });
    } else {
        install_block(E, bm, {
            {LZ(), qp(-2), LZ(), LZ()},
            {c(1), one_minus_qm2(), LZ(), LZ()},
            {LZ(), one_plus_q2(), one_minus_q2(), qp(2)},
            {LZ(), m_one_minus_qm2(), c(1), LZ()},
        });
    }

    // Block basis (omega_z (x) omega_0, omega_0 (x) omega_z,
    //              omega_z (x) omega_z, omega_- (x) omega_+,
    //              omega_+ (x) omega_-).
    std::vector<int> bz = {pack_index({L_Z, L_ZERO}), pack_index({L_ZERO, L_Z}),
                           pack_index({L_Z, L_Z}), pack_index({L_MINUS, L_PLUS}),
                           pack_index({L_PLUS, L_MINUS})};
    if (d == Dir::Plus) {
        install_block(E, bz, {
            {-dsq(), c(1), LZ(), -dsq(), dsq()},
            {c(1), LZ(), LZ(), LZ(), LZ()},
            {q2_m_qm2(), LZ(), c(1), q2_m_qm2(), -q2_m_qm2()},
            {c(-1), LZ(), LZ(), LZ(), c(1)},
            {c(1), LZ(), LZ(), c(1), LZ()},
        });
    } else {
        install_block(E, bz, {
            {LZ(), c(1), LZ(), LZ(), LZ()},
            {c(1), -dsq(), LZ(), -dsq(), dsq()},
            {LZ(), q2_m_qm2(), c(1), q2_m_qm2(), -q2_m_qm2()},
            {LZ(), c(-1), LZ(), LZ(), c(1)},
            {LZ(), c(1), LZ(), c(1), LZ()},
        });
    }

    // Block basis (omega_+ (x) omega_0, omega_0 (x) omega_+,
    //              omega_+ (x) omega_z, omega_z (x) omega_+).
    std::vector<int> bp = {pack_index({L_PLUS, L_ZERO}), pack_index({L_ZERO, L_PLUS}),
                           pack_index({L_PLUS, L_Z}), pack_index({L_Z, L_PLUS})};
    if (d == Dir::Plus) {
        install_block(E, bp, {
            {one_minus_qm2(), c(1), LZ(), LZ()},
            {qp(-2), LZ(), LZ(), LZ()},
            {m_one_minus_qm2(), LZ(), LZ(), c(1)},
            {one_plus_q2(), LZ(), qp(2), one_minus_q2()},
        });
    } else {
        install_block(E, bp, {
            {LZ(), qp(2), LZ(), LZ()},
            {c(1), one_minus_q2(), LZ(), LZ()},
            {LZ(), m_one_minus_qm2(), one_minus_qm2(), qp(-2)},
            {LZ(), one_plus_q2(), c(1), LZ()},
        });
    }

    return E;
}

} // namespace

const SpMatZ& sigma_op(Dir d) {
    static const SpMatZ plus = build_sigma(Dir::Plus);
    static const SpMatZ minus = build_sigma(Dir::Minus);
    return d == Dir::Plus ? plus : minus;
}

SpMatZ sigma_lift(Dir d, int k, int pos) {
    if (k < 2 || pos < 1 || pos > k - 1) throw std::invalid_argument("bad braiding lift position");
    SpMatZ out = pos == 1 ? sigma_op(d) : SpMatZ::identity(tensor_dim(pos - 1)).kron(sigma_op(d));
    if (pos + 1 < k) out = out.kron(SpMatZ::identity(tensor_dim(k - pos - 1)));
    return out;
}

} // namespace qsu2
